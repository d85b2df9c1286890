"""Classical crystal structure on tensor products of rectangular tableaux.

Elements of B^R are tuples b_m (x) ... (x) b_1 of column-strict rectangular
tableaux over the alphabet 1..n, with b_1 the rightmost tensor factor.  The
raising and lowering operators for colors 1..n-1 are computed by the
signature rule; the affine color 0 lives in :mod:`rectcrys.affine`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .tableaux import Tableau, SkewShape, key, tensor_shape


@dataclass(frozen=True, init=False)
class RectSequence:
    """A sequence R = (R_1, ..., R_m) of rectangles (eta_j rows, mu_j columns).

    The row counts sum to n, and the alphabet 1..n splits into consecutive
    subalphabets A_1, ..., A_m of sizes eta_1, ..., eta_m.
    """

    rects: tuple[tuple[int, int], ...]

    def __init__(self, rects: Iterable[Sequence[int]]):
        rs = tuple((int(e), int(m)) for e, m in rects)
        if any(e < 1 or m < 1 for e, m in rs):
            raise ValueError(f"rectangles need positive dimensions: {rs}")
        object.__setattr__(self, "rects", rs)

    @property
    def m(self) -> int:
        return len(self.rects)

    @property
    def n(self) -> int:
        return sum(e for e, _ in self.rects)

    @property
    def ncells(self) -> int:
        return sum(e * m for e, m in self.rects)

    def eta(self, j: int) -> int:
        return self.rects[j - 1][0]

    def mu(self, j: int) -> int:
        return self.rects[j - 1][1]

    def subalphabet(self, j: int) -> tuple[int, int]:
        """Letters of A_j as an inclusive interval (lo, hi)."""
        lo = 1 + sum(e for e, _ in self.rects[: j - 1])
        return lo, lo + self.rects[j - 1][0] - 1

    def alphabet_of(self, letter: int) -> int:
        """Index j with letter in A_j."""
        for j in range(1, self.m + 1):
            lo, hi = self.subalphabet(j)
            if lo <= letter <= hi:
                return j
        raise ValueError(f"letter {letter} outside 1..{self.n}")

    def gamma(self) -> tuple[int, ...]:
        """Row lengths of the skew shape: R_1 through R_m juxtaposed."""
        out: list[int] = []
        for e, m in self.rects:
            out.extend([m] * e)
        return tuple(out)

    def rect_shape(self, j: int) -> tuple[int, ...]:
        e, m = self.rects[j - 1]
        return (m,) * e

    def key_tableau(self, j: int) -> Tableau:
        """Y_j: the key tableau of R_j filled from its own subalphabet A_j."""
        lo, _ = self.subalphabet(j)
        return key(self.rect_shape(j), n=self.n, offset=lo - 1)

    def skew_shape(self) -> SkewShape:
        """The shape R_m (x) ... (x) R_1."""
        shape = SkewShape(self.rect_shape(1))
        for j in range(2, self.m + 1):
            shape = tensor_shape(SkewShape(self.rect_shape(j)), shape)
        return shape

    def swapped(self, pos: int) -> "RectSequence":
        """Rectangles at positions pos, pos+1 exchanged."""
        r = list(self.rects)
        r[pos - 1], r[pos] = r[pos], r[pos - 1]
        return RectSequence(r)

    def permuted(self, w: Sequence[int]) -> "RectSequence":
        """The sequence wR, holding R_{w^{-1}(j)} at position j."""
        if sorted(w) != list(range(1, self.m + 1)):
            raise ValueError(f"not a permutation of 1..{self.m}: {w}")
        winv = [0] * self.m
        for i, wi in enumerate(w, start=1):
            winv[wi - 1] = i
        return RectSequence(self.rects[winv[j] - 1] for j in range(self.m))

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rects]

    def __repr__(self) -> str:
        return f"RectSequence({list(self.rects)})"


class CrystalElement:
    """An element b = b_m (x) ... (x) b_1 of B^R; factors[0] is b_1."""

    __slots__ = ("seq", "factors")

    def __init__(self, seq: RectSequence, factors: Sequence[Tableau], check: bool = True):
        self.seq = seq
        self.factors = tuple(factors)
        if check:
            if len(self.factors) != seq.m:
                raise ValueError(f"expected {seq.m} factors, got {len(self.factors)}")
            for j, t in enumerate(self.factors, start=1):
                if t.outer != seq.rect_shape(j) or t.inner != ():
                    raise ValueError(
                        f"factor {j} has shape {t.outer}/{t.inner}, "
                        f"expected rectangle {seq.rect_shape(j)}"
                    )
                if any(x > seq.n for row in t.rows for x in row):
                    raise ValueError(f"factor {j} uses letters beyond {seq.n}")

    def word(self) -> tuple[int, ...]:
        """Reading word: factor b_m first, b_1 last."""
        out: list[int] = []
        for t in reversed(self.factors):
            out.extend(t.word())
        return tuple(out)

    def content(self) -> tuple[int, ...]:
        counts = [0] * self.seq.n
        for t in self.factors:
            for row in t.rows:
                for x in row:
                    counts[x - 1] += 1
        return tuple(counts)

    def row(self, r: int) -> tuple[int, ...]:
        """The r-th row of b viewed as a skew tableau (a row of one factor)."""
        j = self.seq.alphabet_of(r)
        lo, _ = self.seq.subalphabet(j)
        return self.factors[j - 1].rows[r - lo]

    def replace_factor(self, pos: int, t: Tableau) -> "CrystalElement":
        factors = list(self.factors)
        factors[pos - 1] = t
        return CrystalElement(self.seq, factors, check=False)

    def as_skew_tableau(self) -> Tableau:
        """The element written on the skew shape R_m (x) ... (x) R_1."""
        shape = self.seq.skew_shape()
        rows = []
        gamma = self.seq.gamma()
        for r in range(1, len(gamma) + 1):
            rows.append(self.row(r))
        return Tableau(rows, shape.inner, n=self.seq.n, check=False)

    def to_json(self) -> dict:
        return {
            "rects": self.seq.to_json(),
            "factors": [t.to_json() for t in self.factors],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CrystalElement":
        seq = RectSequence(data["rects"])
        factors = [Tableau.from_json(f, n=seq.n) for f in data["factors"]]
        return cls(seq, factors)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CrystalElement)
            and self.seq == other.seq
            and self.factors == other.factors
        )

    def __hash__(self) -> int:
        return hash((self.seq, self.factors))

    def __repr__(self) -> str:
        return " (x) ".join(repr(t).replace("\n", "/") for t in reversed(self.factors))


# ---------------------------------------------------------------------------
# Signature rule.

@dataclass(frozen=True)
class Signature:
    """Reduced signature of an element or word at one color.

    ``reduced`` lists the surviving biletters as (position, sign) pairs with
    sign '-' or '+'; positions are tensor positions (factor indices, or for a
    word the 1-based index counted from the right end).
    """

    phi: int
    eps: int
    f_pos: int | None
    e_pos: int | None
    reduced: tuple[tuple[int, str], ...]


def _combine(blocks: Iterable[tuple[int, int, int]]) -> Signature:
    """Reduce blocks (position, phi, eps) given in emission order (left to right)."""
    minus: list[tuple[int, int]] = []
    stack: list[tuple[int, int]] = []
    for pos, p, q in blocks:
        while p and stack:
            top_pos, top_q = stack[-1]
            take = min(p, top_q)
            p -= take
            if top_q == take:
                stack.pop()
            else:
                stack[-1] = (top_pos, top_q - take)
        if p:
            minus.append((pos, p))
        if q:
            stack.append((pos, q))
    phi = sum(p for _, p in minus)
    eps = sum(q for _, q in stack)
    reduced = tuple(
        [(pos, "-") for pos, p in minus for _ in range(p)]
        + [(pos, "+") for pos, q in stack for _ in range(q)]
    )
    return Signature(
        phi=phi,
        eps=eps,
        f_pos=minus[-1][0] if minus else None,
        e_pos=stack[0][0] if stack else None,
        reduced=reduced,
    )


def word_signature(word: Sequence[int], i: int) -> Signature:
    """Signature of a word regarded as a tensor product of single boxes.

    Positions count tensor factors: the rightmost letter is position 1.
    """
    m = len(word)
    blocks = []
    for k, x in enumerate(word):
        if x == i:
            blocks.append((m - k, 1, 0))
        elif x == i + 1:
            blocks.append((m - k, 0, 1))
    return _combine(blocks)


@lru_cache(maxsize=None)
def _tableau_stats(rows: tuple, inner: tuple, i: int) -> tuple[int, int]:
    word = []
    for row in reversed(rows):
        word.extend(row)
    sig = word_signature(word, i)
    return sig.phi, sig.eps


def tableau_phi_eps(t: Tableau, i: int) -> tuple[int, int]:
    return _tableau_stats(t.rows, t.inner, i)


@lru_cache(maxsize=None)
def _tableau_apply(rows: tuple, inner: tuple, i: int, op: str) -> tuple | None:
    """Apply e_i or f_i to a tableau given by its rows; None when undefined."""
    word = []
    for row in reversed(rows):
        word.extend(row)
    sig = word_signature(word, i)
    m = len(word)
    if op == "f":
        if sig.f_pos is None:
            return None
        idx, new = m - sig.f_pos, i + 1
    else:
        if sig.e_pos is None:
            return None
        idx, new = m - sig.e_pos, i
    word[idx] = new
    out, k = [], 0
    for row in reversed(rows):
        out.append(tuple(word[k : k + len(row)]))
        k += len(row)
    return tuple(reversed(out))


def tableau_f(t: Tableau, i: int) -> Tableau | None:
    rows = _tableau_apply(t.rows, t.inner, i, "f")
    if rows is None:
        return None
    return Tableau._raw(rows, t.inner, t.n)


def tableau_e(t: Tableau, i: int) -> Tableau | None:
    rows = _tableau_apply(t.rows, t.inner, i, "e")
    if rows is None:
        return None
    return Tableau._raw(rows, t.inner, t.n)


def signature(b: "CrystalElement | Sequence[int]", i: int) -> Signature:
    """Reduced signature of a crystal element (or word) at color i in 1..n-1."""
    if isinstance(b, CrystalElement):
        blocks = []
        for j in range(b.seq.m, 0, -1):
            t = b.factors[j - 1]
            p, q = _tableau_stats(t.rows, t.inner, i)
            if p or q:
                blocks.append((j, p, q))
        return _combine(blocks)
    return word_signature(b, i)


def e(b: CrystalElement, i: int) -> CrystalElement | None:
    """Raising operator for a classical color i in 1..n-1; None when undefined."""
    sig = signature(b, i)
    if sig.e_pos is None:
        return None
    t = tableau_e(b.factors[sig.e_pos - 1], i)
    return b.replace_factor(sig.e_pos, t)


def f(b: CrystalElement, i: int) -> CrystalElement | None:
    """Lowering operator for a classical color i in 1..n-1; None when undefined."""
    sig = signature(b, i)
    if sig.f_pos is None:
        return None
    t = tableau_f(b.factors[sig.f_pos - 1], i)
    return b.replace_factor(sig.f_pos, t)


def phi(b: CrystalElement, i: int) -> int:
    return signature(b, i).phi


def eps(b: CrystalElement, i: int) -> int:
    return signature(b, i).eps


def reflection(b: CrystalElement, i: int) -> CrystalElement:
    """Crystal reflection r_i: f_i^p or e_i^(-p) with p = phi_i - eps_i."""
    sig = signature(b, i)
    p = sig.phi - sig.eps
    cur = b
    for _ in range(p):
        cur = f(cur, i)
    for _ in range(-p):
        cur = e(cur, i)
    return cur


def word_f(w: Sequence[int], i: int) -> tuple[int, ...] | None:
    sig = word_signature(w, i)
    if sig.f_pos is None:
        return None
    idx = len(w) - sig.f_pos
    return tuple(w[:idx]) + (i + 1,) + tuple(w[idx + 1 :])


def word_e(w: Sequence[int], i: int) -> tuple[int, ...] | None:
    sig = word_signature(w, i)
    if sig.e_pos is None:
        return None
    idx = len(w) - sig.e_pos
    return tuple(w[:idx]) + (i,) + tuple(w[idx + 1 :])


def word_reflection(w: Sequence[int], i: int) -> tuple[int, ...]:
    sig = word_signature(w, i)
    p = sig.phi - sig.eps
    cur = tuple(w)
    for _ in range(p):
        cur = word_f(cur, i)
    for _ in range(-p):
        cur = word_e(cur, i)
    return cur


@lru_cache(maxsize=None)
def _tableau_reflect_rows(rows: tuple, inner: tuple, i: int) -> tuple:
    p, q = _tableau_stats(rows, inner, i)
    cur = rows
    for _ in range(p - q):
        cur = _tableau_apply(cur, inner, i, "f")
    for _ in range(q - p):
        cur = _tableau_apply(cur, inner, i, "e")
    return cur


def tableau_reflection(t: Tableau, i: int) -> Tableau:
    return Tableau._raw(_tableau_reflect_rows(t.rows, t.inner, i), t.inner, t.n)


def _longest_element_word(colors: Sequence[int]) -> list[int]:
    """Lexicographically first reduced word of the longest element of the
    symmetric group generated by consecutive ``colors``."""
    out: list[int] = []
    for t in range(1, len(colors) + 1):
        out.extend(colors[s] for s in range(t - 1, -1, -1))
    return out


def young_w0(u, seq: RectSequence):
    """Action of the longest element of S_{A_1} x ... x S_{A_m}.

    Accepts a word (tuple of letters) or a Tableau and returns the same kind.
    Implemented as crystal reflections along a reduced word inside each
    subalphabet; reverses the content within every A_j.
    """
    is_word = not isinstance(u, Tableau)
    cur = tuple(u) if is_word else u
    for j in range(1, seq.m + 1):
        lo, hi = seq.subalphabet(j)
        colors = list(range(lo, hi))
        for c in _longest_element_word(colors):
            cur = word_reflection(cur, c) if is_word else tableau_reflection(cur, c)
    return cur


def pairing(i: int, content: Sequence[int]) -> int:
    """<h_i, wt> on classical weights: m_i - m_{i+1} with indices mod n."""
    n = len(content)
    if i == 0:
        return content[n - 1] - content[0]
    return content[i - 1] - content[i]


def highest_weight_element(seq: RectSequence) -> CrystalElement:
    """Y_m (x) ... (x) Y_1, the unique sl_n highest weight vector of weight
    gamma(R) when the widths weakly decrease."""
    return CrystalElement(seq, [seq.key_tableau(j) for j in range(1, seq.m + 1)])


def enumerate_crystal(seq: RectSequence):
    """All elements of B^R, factors varying rightmost-first."""
    from itertools import product
    from .tableaux import enumerate_cst

    factor_sets = [
        list(enumerate_cst(seq.rect_shape(j), seq.n)) for j in range(1, seq.m + 1)
    ]
    for combo in product(*factor_sets):
        yield CrystalElement(seq, combo, check=False)
