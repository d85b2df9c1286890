"""RSK decomposition of B^R and Littlewood-Richardson recording tableaux.

An element b maps to the pair (p, q): p is the column-insertion tableau of
the reading word of b, and q records the shape growth as the rows of b are
inserted bottom row group first.  The image consists of pairs whose recording
tableau is R-LR: its restriction to each subalphabet A_j column-inserts to
the key tableau of R_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .crystal import CrystalElement, RectSequence
from .errors import InconsistentPairError, NonLRError, ShapeMismatchError
from .tableaux import (
    Tableau,
    column_insert,
    column_insert_word,
    enumerate_cst,
    partition,
    reverse_column_insert,
    tableau_from_cells,
)


@dataclass(frozen=True)
class TableauPair:
    """Insertion tableau and recording tableau of equal shape."""

    p: Tableau
    q: Tableau

    def __post_init__(self):
        if self.p.outer != self.q.outer or self.p.inner != self.q.inner:
            raise ShapeMismatchError(
                f"pair shapes differ: {self.p.outer} vs {self.q.outer}"
            )


@dataclass(frozen=True)
class LRTableau:
    """An R-LR tableau together with its rectangle sequence."""

    tableau: Tableau
    seq: RectSequence

    def __post_init__(self):
        if not is_r_lr(self.tableau.word(), self.seq):
            raise NonLRError(f"tableau is not {self.seq.rects}-LR")


def rsk_pair(b: CrystalElement) -> TableauPair:
    """The pair (p, q) of b; q has content gamma(R) and is R-LR."""
    from .tableaux import _col_insert, _tableau_of_cols

    n = b.seq.n
    cols: list[list[int]] = []
    recording: dict[tuple[int, int], int] = {}
    for r in range(1, n + 1):
        for x in reversed(b.row(r)):
            recording[_col_insert(cols, x)] = r
    return TableauPair(
        _tableau_of_cols(cols, n), tableau_from_cells(recording, n=n)
    )


def peel_recording(p: Tableau, q: Tableau, seq: RectSequence, alphabet: int | None = None) -> list[Tableau]:
    """Factor tableaux of the element recorded by (p, q).

    Peels the cells of q labeled r (rightmost first) off p by reverse column
    insertions; the ejected letters must come out weakly increasing and
    rebuild the r-th row of the element.  ``alphabet`` bounds the letters of
    the factors (defaults to the recording alphabet size n of ``seq``).
    """
    from .tableaux import _col_uninsert, _cols_of

    by_label: dict[int, list[tuple[int, int]]] = {}
    for cell, v in q.cell_map().items():
        by_label.setdefault(v, []).append(cell)
    cols = _cols_of(p)
    rows: dict[int, tuple[int, ...]] = {}
    for r in range(seq.n, 0, -1):
        ejected = []
        try:
            for cell in sorted(by_label.get(r, ()), key=lambda rc: -rc[1]):
                ejected.append(_col_uninsert(cols, cell))
        except ValueError as exc:
            raise InconsistentPairError(str(exc)) from exc
        if any(ejected[i] > ejected[i + 1] for i in range(len(ejected) - 1)):
            raise InconsistentPairError(
                f"row {r} came out non-weakly-increasing: {ejected}"
            )
        rows[r] = tuple(ejected)
    if cols:
        raise InconsistentPairError("recording tableau does not cover p")
    bound = seq.n if alphabet is None else alphabet
    factors = []
    for j in range(1, seq.m + 1):
        lo, hi = seq.subalphabet(j)
        try:
            factors.append(
                Tableau([rows[r] for r in range(lo, hi + 1)], (), n=bound)
            )
        except ValueError as exc:
            raise InconsistentPairError(f"factor {j}: {exc}") from exc
    return factors


def rsk_inverse(pair: TableauPair, seq: RectSequence) -> CrystalElement:
    """The unique b in B^R with rsk_pair(b) == pair."""
    p, q = pair.p, pair.q
    if q.content(seq.n) != seq.gamma():
        raise NonLRError(
            f"recording content {q.content(seq.n)} differs from {seq.gamma()}"
        )
    if not is_r_lr(q.word(), seq):
        raise NonLRError(f"recording tableau is not {seq.rects}-LR")
    return CrystalElement(seq, peel_recording(p, q, seq))


def is_r_lr(u: Sequence[int], seq: RectSequence) -> bool:
    """True when every subalphabet restriction inserts to its key tableau."""
    word = tuple(u)
    if any(x < 1 or x > seq.n for x in word):
        return False
    for j in range(1, seq.m + 1):
        lo, hi = seq.subalphabet(j)
        sub = tuple(x for x in word if lo <= x <= hi)
        if column_insert(sub, n=seq.n) != seq.key_tableau(j):
            return False
    return True


def enumerate_lrt(lam: Sequence[int], seq: RectSequence) -> list[LRTableau]:
    """All R-LR tableaux of shape ``lam``, in row-word lexicographic order."""
    lam = partition(lam)
    if sum(lam) != seq.ncells:
        raise ValueError(f"|{lam}| != {seq.ncells} cells of R")
    out = [
        LRTableau(t, seq)
        for t in enumerate_cst(lam, seq.n, content=seq.gamma())
        if is_r_lr(t.word(), seq)
    ]
    out.sort(key=lambda lr: lr.tableau.word())
    return out


@lru_cache(maxsize=None)
def _lrt_cached(lam: tuple[int, ...], rects: tuple[tuple[int, int], ...]) -> tuple[Tableau, ...]:
    return tuple(lr.tableau for lr in enumerate_lrt(lam, RectSequence(rects)))


def lrt_tableaux(lam: Sequence[int], seq: RectSequence) -> tuple[Tableau, ...]:
    """Cached tuple of the R-LR tableaux of shape ``lam``."""
    return _lrt_cached(partition(lam), seq.rects)


def standard_recording(u: Sequence[int]) -> Tableau:
    """Recording tableau of a plain word: the word is a tensor product of
    single boxes, the rightmost letter inserted first."""
    cur = Tableau((), (), check=False)
    recording: dict[tuple[int, int], int] = {}
    for r, x in enumerate(reversed(tuple(u)), start=1):
        cur, cells = column_insert_word(cur, (x,))
        recording[cells[0]] = r
    return tableau_from_cells(recording, n=len(tuple(u)))


def word_from_recording(p: Tableau, q_std: Tableau) -> tuple[int, ...]:
    """Inverse of (column insertion, standard recording): recover the word."""
    if p.outer != q_std.outer or p.inner != ():
        raise ShapeMismatchError("pair shapes differ or not normal")
    positions = {v: cell for cell, v in q_std.cell_map().items()}
    n = len(positions)
    cur = p
    letters = []
    for r in range(n, 0, -1):
        try:
            cur, y = reverse_column_insert(cur, positions[r])
        except (KeyError, ValueError) as exc:
            raise InconsistentPairError(str(exc)) from exc
        letters.append(y)
    return tuple(letters)


def highest_weight_recording(b: CrystalElement) -> Tableau:
    """Recording tableau of an sl_n highest weight element by content transfer:
    its i-th row holds m copies of j exactly when row j of b holds m copies
    of i."""
    n = b.seq.n
    rows: list[list[int]] = [[] for _ in range(n)]
    for j in range(1, n + 1):
        for x in b.row(j):
            rows[x - 1].append(j)
    return Tableau([tuple(sorted(r)) for r in rows], (), n=n)
