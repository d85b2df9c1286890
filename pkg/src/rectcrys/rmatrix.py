"""Rectangle-switching bijections: tau on LR tableaux, sigma on crystals.

Exchanging two adjacent rectangles of R is multiplicity-free, so LR tableaux
of a fixed shape for the swapped sequence are unique when they exist.  The
crystal isomorphism sigma keeps the insertion tableau and applies tau to the
recording tableau; composites along reduced words give the isomorphisms
B^R -> B^{wR} for arbitrary permutations w.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .crystal import CrystalElement, RectSequence
from .errors import NonLRError
from .rsk import (
    LRTableau,
    TableauPair,
    is_r_lr,
    lrt_tableaux,
    peel_recording,
    rsk_inverse,
    rsk_pair,
    standard_recording,
    word_from_recording,
)
from .tableaux import Tableau, column_insert, key, slide_into, slide_out_of


@lru_cache(maxsize=None)
def _tau_swap_cached(
    rows: tuple, inner: tuple, rects: tuple[tuple[int, int], ...], pos: int
) -> Tableau:
    seq = RectSequence(rects)
    q = Tableau(rows, inner, n=seq.n, check=False)
    b = rsk_inverse(TableauPair(key(q.outer, n=seq.n), q), seq)
    return rsk_pair(sigma_swap(b, pos)).q


def tau_swap(q: LRTableau, pos: int) -> LRTableau:
    """The LR tableau for the sequence with R_pos, R_pos+1 exchanged that the
    switch isomorphism produces on recording tableaux.

    Computed by lifting q to the crystal element with key insertion tableau,
    switching, and reading off the new recording tableau; the result agrees
    with q outside the two subalphabets but is not characterized by that
    property alone once more than two rectangles are present.
    """
    t = _tau_swap_cached(q.tableau.rows, q.tableau.inner, q.seq.rects, pos)
    return LRTableau(t, q.seq.swapped(pos))


def _two_factor_tau(shape: tuple[int, ...], rects: tuple[tuple[int, int], tuple[int, int]]) -> Tableau:
    """The unique LR tableau of a partition shape for two rectangles."""
    cands = lrt_tableaux(shape, RectSequence(rects))
    if len(cands) != 1:
        raise NonLRError(f"LRT({shape}; {rects}) has {len(cands)} elements, not 1")
    return cands[0]


@lru_cache(maxsize=None)
def _sigma_pair(
    rect1: tuple[int, int],
    rect2: tuple[int, int],
    rows1: tuple,
    rows2: tuple,
    alphabet: int,
) -> tuple[tuple, tuple]:
    """sigma on a two-factor element given by factor rows; returns new rows
    (position 1 gets a rect2-shaped factor, position 2 a rect1-shaped one)."""
    t1 = Tableau(rows1, (), n=alphabet, check=False)
    t2 = Tableau(rows2, (), n=alphabet, check=False)
    word = t2.word() + t1.word()
    p = column_insert(word, n=alphabet)
    swapped = RectSequence((rect2, rect1))
    q_new = _two_factor_tau(p.outer, (rect2, rect1))
    new1, new2 = peel_recording(p, q_new, swapped, alphabet=alphabet)
    return new1.rows, new2.rows


def sigma_swap(b: CrystalElement, pos: int) -> CrystalElement:
    """The crystal isomorphism exchanging tensor positions pos and pos+1."""
    seq = b.seq
    rect1, rect2 = seq.rects[pos - 1], seq.rects[pos]
    rows1, rows2 = _sigma_pair(
        rect1, rect2, b.factors[pos - 1].rows, b.factors[pos].rows, seq.n
    )
    factors = list(b.factors)
    factors[pos - 1] = Tableau(rows1, (), n=seq.n, check=False)
    factors[pos] = Tableau(rows2, (), n=seq.n, check=False)
    return CrystalElement(seq.swapped(pos), factors, check=False)


def sigma_word(u: Sequence[int], seq: RectSequence) -> tuple[int, ...]:
    """The swapped-sequence LR word with the same standard recording tableau
    and the switched insertion tableau.  ``seq`` must have two rectangles."""
    if seq.m != 2:
        raise ValueError("sigma_word expects a two-rectangle sequence")
    u = tuple(u)
    if not is_r_lr(u, seq):
        raise NonLRError(f"word is not {seq.rects}-LR")
    p = column_insert(u, n=seq.n)
    p_new = _two_factor_tau(p.outer, (seq.rects[1], seq.rects[0]))
    return word_from_recording(p_new, standard_recording(u))


def lex_reduced_word(w: Sequence[int]) -> list[int]:
    """Lexicographically smallest reduced word of a permutation (one-line)."""
    w = list(w)
    m = len(w)
    if sorted(w) != list(range(1, m + 1)):
        raise ValueError(f"not a permutation of 1..{m}: {w}")
    word = []
    pos = {v: i for i, v in enumerate(w)}
    while True:
        for i in range(1, m):
            if pos[i] > pos[i + 1]:
                word.append(i)
                pos[i], pos[i + 1] = pos[i + 1], pos[i]
                break
        else:
            return word


def sigma_compose(b: CrystalElement, w: Sequence[int]) -> CrystalElement:
    """The isomorphism B^R -> B^{wR}, composed from adjacent switches along
    the lexicographically smallest reduced word of w."""
    target = b.seq.permuted(w)
    cur = b
    for i in reversed(lex_reduced_word(w)):
        cur = sigma_swap(cur, i)
    if cur.seq != target:
        raise AssertionError(f"composite landed on {cur.seq}, expected {target}")
    return cur


def cyclic_shift_permutation(i: int, j: int, m: int) -> tuple[int, ...]:
    """One-line form of the cycle r_{i+1} r_{i+2} ... r_{j-1} used by the
    energy sum: position j moves to position i+1."""
    w = list(range(1, m + 1))
    for p in range(j - 1, i, -1):
        w[p - 1], w[p] = w[p], w[p - 1]
    winv = [0] * m
    for idx, val in enumerate(w, start=1):
        winv[val - 1] = idx
    return tuple(winv)


def kostka_tau_rows(
    top: Sequence[int], bottom: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Jeu-de-taquin route for the switch of two one-row factors.

    ``top`` is the earlier tensor position (upper row of the two-row skew
    tableau), ``bottom`` the later one.  Slides reshape the tableau until the
    row lengths are exchanged and the rows are again column-disjoint; returns
    (new_top, new_bottom).
    """
    top, bottom = tuple(top), tuple(bottom)
    a, b = len(top), len(bottom)
    cells: dict[tuple[int, int], int] = {}
    for k, x in enumerate(bottom):
        cells[(2, k + 1)] = x
    for k, x in enumerate(top):
        cells[(1, b + k + 1)] = x

    def row(r: int) -> list[int]:
        return sorted(c for (rr, c) in cells if rr == r)

    # rectify: pull the top row all the way left
    while row(1)[0] > 1:
        slide_out_of(cells, (1, row(1)[0] - 1))
    # regrow the bottom row to the swapped length
    while len(row(2)) < a:
        slide_into(cells, (2, len(row(2)) + 1))
    # push the top row right until the rows are column-disjoint
    while row(1)[0] <= a:
        slide_into(cells, (1, row(1)[-1] + 1))
    return tuple(cells[(1, c)] for c in row(1)), tuple(
        cells[(2, c)] for c in row(2)
    )
