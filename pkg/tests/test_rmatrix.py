import pytest

from rectcrys.crystal import RectSequence, enumerate_crystal
from rectcrys.errors import NonLRError
from rectcrys.rmatrix import (
    cyclic_shift_permutation,
    kostka_tau_rows,
    lex_reduced_word,
    sigma_compose,
    sigma_swap,
    sigma_word,
    tau_swap,
)
from rectcrys.rsk import LRTableau, is_r_lr, lrt_tableaux, rsk_pair, standard_recording
from rectcrys.tableaux import column_insert, partitions_of
from conftest import element_from


def all_lr_words(seq, length):
    """Every LR word of the given length, by brute force over contents."""
    from itertools import product

    for w in product(range(1, seq.n + 1), repeat=length):
        if is_r_lr(w, seq):
            yield w


class TestTau:
    def test_equal_rectangles_identity(self):
        seq = RectSequence([(1, 2), (1, 2)])
        for lam in partitions_of(4, 2):
            for t in lrt_tableaux(lam, seq):
                assert tau_swap(LRTableau(t, seq), 1).tableau == t

    def test_involution(self):
        seq = RectSequence([(1, 2), (2, 1)])
        for lam in partitions_of(4, 3):
            for t in lrt_tableaux(lam, seq):
                q = LRTableau(t, seq)
                back = tau_swap(tau_swap(q, 1), 1)
                assert back.tableau == t and back.seq == seq

    def test_shape_preserved(self):
        seq = RectSequence([(1, 3), (2, 1)])
        for lam in partitions_of(5, 3):
            for t in lrt_tableaux(lam, seq):
                assert tau_swap(LRTableau(t, seq), 1).tableau.outer == t.outer


class TestSigma:
    def test_equal_rectangles_identity(self):
        seq = RectSequence([(2, 2), (2, 2)])
        for b in enumerate_crystal(seq):
            assert sigma_swap(b, 1) == b

    def test_golden(self, golden, golden_b):
        tb = sigma_swap(golden_b, 2)
        assert tb == element_from(golden, "tau2_rects", "tau2_b")

    def test_keeps_insertion_tableau(self):
        for rects in ([(1, 2), (2, 1)], [(2, 2), (1, 1)], [(1, 3), (1, 1)]):
            seq = RectSequence(rects)
            for b in enumerate_crystal(seq):
                assert rsk_pair(sigma_swap(b, 1)).p == rsk_pair(b).p

    def test_matches_tau_on_recording(self):
        seq = RectSequence([(1, 2), (1, 1), (1, 1)])
        for b in enumerate_crystal(seq):
            for pos in (1, 2):
                got = rsk_pair(sigma_swap(b, pos)).q
                want = tau_swap(LRTableau(rsk_pair(b).q, seq), pos).tableau
                assert got == want

    def test_kostka_jdt_shortcut(self):
        for rects in ([(1, 2), (1, 1), (1, 1)], [(1, 1), (1, 3)], [(1, 2), (1, 2), (1, 1)]):
            seq = RectSequence(rects)
            for b in enumerate_crystal(seq):
                for pos in range(1, seq.m):
                    sb = sigma_swap(b, pos)
                    top, bottom = kostka_tau_rows(
                        b.factors[pos - 1].rows[0], b.factors[pos].rows[0]
                    )
                    assert sb.factors[pos - 1].rows[0] == top
                    assert sb.factors[pos].rows[0] == bottom


class TestSigmaWord:
    def test_preserves_standard_recording(self):
        seq = RectSequence([(1, 2), (1, 1)])
        swapped = seq.swapped(1)
        for w in all_lr_words(seq, 3):
            v = sigma_word(w, seq)
            assert standard_recording(v) == standard_recording(w)
            assert is_r_lr(v, swapped)
            assert column_insert(v).outer == column_insert(w).outer

    def test_rejects_non_lr(self):
        seq = RectSequence([(1, 1), (1, 1)])
        with pytest.raises(NonLRError):
            sigma_word((1, 1), seq)

    def test_roundtrip(self):
        seq = RectSequence([(2, 1), (1, 2)])
        for w in all_lr_words(seq, 4):
            v = sigma_word(w, seq)
            assert sigma_word(v, seq.swapped(1)) == w


class TestCompose:
    def test_identity(self, golden_b):
        assert sigma_compose(golden_b, (1, 2, 3)) == golden_b

    def test_lex_reduced_words(self):
        assert lex_reduced_word((1, 2, 3)) == []
        assert lex_reduced_word((2, 1, 3)) == [1]
        assert lex_reduced_word((3, 2, 1)) == [1, 2, 1]
        assert lex_reduced_word((2, 3, 1)) == [1, 2]

    def test_yang_baxter(self):
        seq = RectSequence([(1, 2), (1, 1), (1, 1)])
        for b in enumerate_crystal(seq):
            lhs = sigma_swap(sigma_swap(sigma_swap(b, 1), 2), 1)
            rhs = sigma_swap(sigma_swap(sigma_swap(b, 2), 1), 2)
            assert lhs == rhs

    def test_cocycle(self):
        seq = RectSequence([(1, 2), (1, 1), (1, 1)])
        v, w = (2, 1, 3), (1, 3, 2)
        vw = tuple(v[w[i] - 1] for i in range(3))
        for b in enumerate_crystal(seq):
            step = sigma_compose(b, w)
            assert sigma_compose(step, v) == sigma_compose(b, vw)

    def test_cyclic_shift_matches_walk(self):
        seq = RectSequence([(1, 2), (1, 1), (1, 1)])
        w = cyclic_shift_permutation(1, 3, 3)
        for b in enumerate_crystal(seq):
            assert sigma_compose(b, w) == sigma_swap(b, 2)

    def test_target_sequence(self, golden_b):
        out = sigma_compose(golden_b, (3, 1, 2))
        assert out.seq == golden_b.seq.permuted((3, 1, 2))
