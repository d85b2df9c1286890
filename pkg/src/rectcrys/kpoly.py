"""Generalized Kostka polynomials and graded characters.

K_{lambda;R}(q) is the generating polynomial of the generalized charge over
the R-LR tableaux of shape lambda.  The graded character of B^R expands the
weight-and-energy generating function of the crystal into irreducible
characters; the expansion is computed twice, once by counting highest weight
elements and once from the LR tableaux, and the two routes must agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .crystal import CrystalElement, RectSequence, enumerate_crystal, signature
from .energy import tableau_energy, total_energy
from .errors import MismatchedExpansionError
from .rsk import LRTableau, is_r_lr, lrt_tableaux
from .tableaux import Tableau, column_insert, conjugate, key, partition, partitions_of


class LaurentPolynomial:
    """Integer Laurent polynomial in q, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self.coeffs = {e: c for e, c in acc.items() if c != 0}

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exp: coeff})

    @classmethod
    def zero(cls) -> "LaurentPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "LaurentPolynomial":
        return cls({0: 1})

    def __add__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        acc = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPolynomial(acc)

    def __sub__(self, other: "LaurentPolynomial") -> "LaurentPolynomial":
        acc = dict(self.coeffs)
        for e, c in other.coeffs.items():
            acc[e] = acc.get(e, 0) - c
        return LaurentPolynomial(acc)

    def __mul__(self, other) -> "LaurentPolynomial":
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self.coeffs.items()})
        acc: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(acc)

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coeffs.items())))

    def __call__(self, q) -> int:
        return sum(c * q**e for e, c in self.coeffs.items())

    def leq_coefficientwise(self, other: "LaurentPolynomial") -> bool:
        """Every coefficient at most the matching coefficient of ``other``."""
        return all(c <= other.coeffs.get(e, 0) for e, c in self.coeffs.items())

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.coeffs)

    def to_json(self) -> dict:
        return {"coeffs": {str(e): c for e, c in sorted(self.coeffs.items())}}

    @classmethod
    def from_json(cls, data: dict) -> "LaurentPolynomial":
        return cls({int(e): int(c) for e, c in data["coeffs"].items()})

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items()):
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else str(c) + "*")
                parts.append(f"{head}q^{e}" if e != 1 else f"{head}q")
        return " + ".join(parts).replace("+ -", "- ")


@dataclass(frozen=True)
class GradedCharacter:
    """Map from partitions (at most n parts) to coefficient polynomials."""

    terms: tuple[tuple[tuple[int, ...], LaurentPolynomial], ...]

    @classmethod
    def from_dict(cls, d: Mapping[tuple[int, ...], LaurentPolynomial]) -> "GradedCharacter":
        return cls(tuple(sorted((lam, p) for lam, p in d.items() if p)))

    def as_dict(self) -> dict[tuple[int, ...], LaurentPolynomial]:
        return dict(self.terms)

    def to_json(self) -> dict:
        return {
            "terms": [
                {"shape": list(lam), **poly.to_json()} for lam, poly in self.terms
            ]
        }

    def __repr__(self) -> str:
        body = ", ".join(f"{list(lam)}: {poly}" for lam, poly in self.terms)
        return f"GradedCharacter({body})"


def k_polynomial(lam: Sequence[int], seq: RectSequence) -> LaurentPolynomial:
    """K_{lambda;R}(q): charge generating polynomial over LRT(lambda; R)."""
    lam = partition(lam)
    if sum(lam) != seq.ncells:
        raise ValueError(f"|{lam}| != {seq.ncells} cells of R")
    acc: dict[int, int] = {}
    for t in lrt_tableaux(lam, seq):
        e = tableau_energy(LRTableau(t, seq))
        acc[e] = acc.get(e, 0) + 1
    return LaurentPolynomial(acc)


def kostka_sequence(mu: Sequence[int]) -> RectSequence:
    """The sequence of one-row rectangles with the positive parts of mu."""
    mu = partition(mu)
    if not mu:
        raise ValueError("empty composition")
    return RectSequence([(1, part) for part in mu])


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> LaurentPolynomial:
    """The charge generating polynomial over CST(lambda, mu), mu a partition.

    This is the cocharge-normalized Kostka-Foulkes polynomial; see
    :func:`transposed_kostka` for the renormalized classical indexing.
    """
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"|{lam}| != |{mu}|")
    seq = kostka_sequence(mu)
    if len(lam) > seq.n:
        return LaurentPolynomial.zero()
    return k_polynomial(lam, seq)


def transposed_kostka(lam: Sequence[int], mu: Sequence[int]) -> LaurentPolynomial:
    """The polynomial with classical tilde-indexing (lam transposed, mu):
    identical to kostka_foulkes(conjugate(lam), mu)."""
    return kostka_foulkes(conjugate(lam), mu)


def _is_sl_highest_weight(b: CrystalElement) -> bool:
    return all(signature(b, i).eps == 0 for i in range(1, b.seq.n))


def graded_character(seq: RectSequence) -> GradedCharacter:
    """Expansion of the weight-and-energy generating function of B^R into
    irreducible characters.

    Route one scans the crystal, grading highest weight elements by energy;
    route two sums q^charge over LR tableaux shape by shape.  Both the
    coefficient expansions and the underlying weight generating functions
    must agree, else MismatchedExpansionError is raised.
    """
    by_hw: dict[tuple[int, ...], dict[int, int]] = {}
    weight_sum: dict[tuple[tuple[int, ...], int], int] = {}
    for b in enumerate_crystal(seq):
        en = total_energy(b)
        wt = b.content()
        weight_sum[(wt, en)] = weight_sum.get((wt, en), 0) + 1
        if _is_sl_highest_weight(b):
            lam = partition(wt)
            by_hw.setdefault(lam, {})
            by_hw[lam][en] = by_hw[lam].get(en, 0) + 1
    route_a = {lam: LaurentPolynomial(d) for lam, d in by_hw.items()}
    route_b: dict[tuple[int, ...], LaurentPolynomial] = {}
    for lam in partitions_of(seq.ncells, seq.n):
        poly = k_polynomial(lam, seq)
        if poly:
            route_b[lam] = poly
    if route_a != route_b:
        raise MismatchedExpansionError(
            f"highest-weight route {route_a} != tableau route {route_b}"
        )
    # full weight-level agreement of both sides of the expansion
    expanded: dict[tuple[tuple[int, ...], int], int] = {}
    for lam, poly in route_b.items():
        for wt, mult in character_weights(lam, seq.n).items():
            for e, c in poly.coeffs.items():
                k = (wt, e)
                expanded[k] = expanded.get(k, 0) + mult * c
    if expanded != weight_sum:
        raise MismatchedExpansionError("weight generating functions differ")
    return GradedCharacter.from_dict(route_b)


@lru_cache(maxsize=None)
def character_weights(lam: tuple[int, ...], n: int) -> dict[tuple[int, ...], int]:
    """Weight multiplicities of the irreducible character of shape ``lam``:
    contents of the column-strict tableaux over 1..n."""
    from .tableaux import enumerate_cst

    out: dict[tuple[int, ...], int] = {}
    for t in enumerate_cst(lam, n):
        wt = t.content(n)
        out[wt] = out.get(wt, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Monotonicity under adding a rectangle.

@dataclass
class MonotonicityReport:
    holds: bool
    base: LaurentPolynomial
    extended: LaurentPolynomial
    injection: list[dict]
    failure: str | None = None

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "base": self.base.to_json(),
            "extended": self.extended.to_json(),
            "injection": self.injection,
            "failure": self.failure,
        }


def dominant_insertion_position(seq: RectSequence, width: int) -> int:
    """First position where a rectangle of the given width keeps the widths
    weakly decreasing; requires the widths of ``seq`` to be weakly decreasing."""
    widths = [m for _, m in seq.rects]
    if any(widths[i] < widths[i + 1] for i in range(len(widths) - 1)):
        raise ValueError(f"sequence widths not weakly decreasing: {widths}")
    for pos in range(len(widths) + 1):
        cand = widths[:pos] + [width] + widths[pos:]
        if all(cand[i] >= cand[i + 1] for i in range(len(cand) - 1)):
            return pos
    raise AssertionError("unreachable")


def add_rows(lam: Sequence[int], k: int, m: int) -> tuple[int, ...]:
    """The partition with m extra rows of length k."""
    return partition(sorted(list(partition(lam)) + [k] * m, reverse=True))


def extend_map(q: Tableau, k: int, m: int) -> Tableau:
    """The insertion tableau of (q+m) followed by the key of the added
    rectangle: the energy-preserving injection into the extended LR set."""
    shifted = q.add_one(m)
    y0 = key((k,) * m, n=q.n + m)
    return column_insert(shifted.word() + y0.word(), n=q.n + m)


def monotonicity_check(
    lam: Sequence[int], seq: RectSequence, k: int, m: int, position: int = 0
) -> MonotonicityReport:
    """Verify K_{lam;R} <= K_{lam+(k^m); R+(k^m)} coefficientwise, witnessing
    it with the explicit injection on LR tableaux.

    The injection prepends the new rectangle; ``position`` moves it elsewhere
    in the extended sequence for the polynomial comparison (the polynomial
    does not depend on the ordering).
    """
    lam = partition(lam)
    base = k_polynomial(lam, seq)
    if k == 0 or m == 0:
        return MonotonicityReport(True, base, base, [])
    prepended = RectSequence(((m, k),) + seq.rects)
    rects_at = list(seq.rects)
    rects_at.insert(position, (m, k))
    extended_seq = RectSequence(rects_at)
    lam_ext = add_rows(lam, k, m)
    extended = k_polynomial(lam_ext, extended_seq)
    injection = []
    seen: dict[Tableau, tuple[int, ...]] = {}
    failure = None
    for t in lrt_tableaux(lam, seq):
        q = LRTableau(t, seq)
        image = extend_map(t, k, m)
        entry = {
            "source": t.to_json(),
            "image": image.to_json(),
            "energy": tableau_energy(q),
        }
        injection.append(entry)
        if image.outer != lam_ext:
            failure = f"image shape {image.outer} != {lam_ext}"
            break
        if not is_r_lr(image.word(), prepended):
            failure = "image not LR for the extended sequence"
            break
        if image in seen:
            failure = f"injection collides: {seen[image]} and {t.rows}"
            break
        seen[image] = t.rows
        e_new = tableau_energy(LRTableau(image, prepended))
        if e_new != entry["energy"]:
            failure = f"energy changed: {entry['energy']} -> {e_new}"
            break
    holds = failure is None and base.leq_coefficientwise(extended)
    if failure is None and not holds:
        failure = "coefficientwise comparison fails"
    return MonotonicityReport(holds, base, extended, injection, failure)
