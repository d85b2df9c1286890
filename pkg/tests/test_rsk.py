import pytest

from rectcrys.crystal import CrystalElement, RectSequence, enumerate_crystal, signature
from rectcrys.errors import NonLRError, ShapeMismatchError
from rectcrys.rsk import (
    TableauPair,
    enumerate_lrt,
    highest_weight_recording,
    is_r_lr,
    lrt_tableaux,
    rsk_inverse,
    rsk_pair,
    standard_recording,
    word_from_recording,
)
from rectcrys.tableaux import Tableau, column_insert, enumerate_cst, key, partitions_of


class TestPair:
    def test_single_factor_key(self):
        seq = RectSequence([(2, 3)])
        y = seq.key_tableau(1)
        pair = rsk_pair(CrystalElement(seq, [y]))
        assert pair.p == y
        assert pair.q == y  # recording of a key is the key itself

    def test_golden(self, golden, golden_b):
        pair = rsk_pair(golden_b)
        assert pair.p.to_json() == golden["p"]
        assert pair.q.to_json() == golden["q"]

    def test_highest_weight_content_transfer(self):
        for rects in ([(1, 2), (1, 1)], [(2, 2), (1, 1)], [(1, 1), (1, 1), (1, 1)]):
            seq = RectSequence(rects)
            for b in enumerate_crystal(seq):
                if any(signature(b, i).eps for i in range(1, seq.n)):
                    continue
                pair = rsk_pair(b)
                assert pair.q == highest_weight_recording(b)
                assert pair.p == key(b.content(), n=seq.n)

    def test_shapes_match(self, golden_b):
        pair = rsk_pair(golden_b)
        assert pair.p.outer == pair.q.outer

    def test_pair_shape_mismatch_rejected(self):
        with pytest.raises(ShapeMismatchError):
            TableauPair(Tableau([[1, 1]]), Tableau([[1], [2]]))


class TestInverse:
    def test_roundtrip_exhaustive(self):
        for rects in ([(1, 2), (2, 1)], [(1, 1), (1, 1), (1, 1)], [(2, 2), (2, 1)]):
            seq = RectSequence(rects)
            for b in enumerate_crystal(seq):
                assert rsk_inverse(rsk_pair(b), seq) == b

    def test_stacked_keys_from_pair(self):
        # two rectangles with weakly decreasing widths: the gamma-shaped pair
        # recovers the stacked keys
        seq = RectSequence([(1, 3), (2, 2)])
        gamma = seq.gamma()
        q = lrt_tableaux(gamma, seq)[0]
        b = rsk_inverse(TableauPair(key(gamma, n=seq.n), q), seq)
        assert b.factors[0] == seq.key_tableau(1)
        assert b.factors[1] == seq.key_tableau(2)

    def test_non_lr_rejected(self):
        seq = RectSequence([(1, 1), (1, 1)])
        p = Tableau([[1, 1]], n=2)
        q = Tableau([[1, 1]], n=2)  # content (2, 0) is not gamma
        with pytest.raises(NonLRError):
            rsk_inverse(TableauPair(p, q), seq)


class TestIsRLr:
    def test_single_key(self):
        seq = RectSequence([(2, 3)])
        assert is_r_lr(seq.key_tableau(1).word(), seq)

    def test_golden_recording(self, golden, golden_seq):
        q = Tableau.from_json(golden["q"], n=7)
        assert is_r_lr(q.word(), golden_seq)

    def test_content_mismatch(self):
        assert not is_r_lr((1, 1), RectSequence([(1, 1), (1, 1)]))

    def test_out_of_alphabet(self):
        assert not is_r_lr((3,), RectSequence([(1, 1), (1, 1)]))


class TestEnumerateLrt:
    def test_two_rectangles_stacked_shape(self):
        seq = RectSequence([(1, 3), (2, 2)])
        found = enumerate_lrt(seq.gamma(), seq)
        assert len(found) == 1

    def test_two_rectangles_at_most_one(self):
        for rects in ([(1, 2), (2, 1)], [(2, 2), (1, 1)], [(1, 3), (1, 2)]):
            seq = RectSequence(rects)
            for lam in partitions_of(seq.ncells, seq.n):
                assert len(enumerate_lrt(lam, seq)) <= 1
                swapped = seq.swapped(1)
                assert len(enumerate_lrt(lam, seq)) == len(
                    enumerate_lrt(lam, swapped)
                )

    def test_kostka_standard(self):
        seq = RectSequence([(1, 1), (1, 1), (1, 1)])
        found = enumerate_lrt((2, 1), seq)
        assert [t.tableau.rows for t in found] == [((1, 3), (2,)), ((1, 2), (3,))]

    def test_wrong_size_rejected(self):
        with pytest.raises(ValueError):
            enumerate_lrt((2, 2), RectSequence([(1, 1), (1, 1), (1, 1)]))

    def test_deterministic_order(self):
        seq = RectSequence([(1, 1), (1, 1), (1, 1), (1, 1)])
        words = [t.tableau.word() for t in enumerate_lrt((2, 1, 1), seq)]
        assert words == sorted(words)


class TestStandardRecording:
    def test_roundtrip(self):
        for w in [(2, 1, 3, 1), (1, 1, 1), (3, 2, 1), (1, 2, 2, 3)]:
            q = standard_recording(w)
            assert word_from_recording(column_insert(w), q) == w

    def test_is_standard(self):
        q = standard_recording((2, 1, 2))
        assert sorted(x for row in q.rows for x in row) == [1, 2, 3]


class TestImageCount:
    def test_bijection_cardinality(self):
        for rects in ([(1, 2), (2, 1)], [(1, 1), (1, 2), (1, 1)]):
            seq = RectSequence(rects)
            total = sum(1 for _ in enumerate_crystal(seq))
            count = 0
            for lam in partitions_of(seq.ncells, seq.n):
                cst = len(list(enumerate_cst(lam, seq.n)))
                count += cst * len(lrt_tableaux(lam, seq))
            assert count == total
