import itertools

import pytest

from qcauchy.weights import (Composition, Permutation, antidominant_data,
                             arm_leg, bruhat_leq, compositions_up_to, diagram,
                             min_length_sorting_brute, order_geq,
                             restrict_weight, sl_representative)


class TestAntidominant:
    def test_two_entries(self):
        lm, v = antidominant_data((2, 0))
        assert lm == (0, 2) and v == Permutation.simple(1, 2)

    def test_constant(self):
        lm, v = antidominant_data((1, 1, 1))
        assert lm == (1, 1, 1) and v.is_identity()

    def test_repeated_entries(self):
        lm, v = antidominant_data((3, 0, 3))
        brute = min_length_sorting_brute((3, 0, 3))
        assert lm == (0, 3, 3)
        assert v.act((3, 0, 3)) == lm
        assert v.length() == brute.length()

    def test_negative_entries(self):
        lm, v = antidominant_data((-1, 2, -3))
        assert lm == (-3, -1, 2)
        assert v.act((-1, 2, -3)) == lm

    def test_minimality_exhaustive(self):
        for n in (2, 3, 4):
            for lam in compositions_up_to(n, 5):
                lm, v = antidominant_data(lam)
                brute = min_length_sorting_brute(lam)
                assert v.act(lam) == lm
                assert v.length() == brute.length(), lam


class TestOrder:
    def test_reflexive(self):
        assert order_geq((1, 2), (1, 2))

    def test_bruhat_tie(self):
        # equal antidominant parts; v(0,2) = id <= v(2,0) = s1
        assert order_geq((0, 2), (2, 0))
        assert not order_geq((2, 0), (0, 2))

    def test_root_cone(self):
        # (1,1)_- - (0,2)_- = (1,-1- ...) = alpha_1, not in -Q_+
        assert not order_geq((1, 1), (0, 2))
        assert order_geq((0, 2), (1, 1))

    def test_poset_axioms_exhaustive(self):
        for n in (2, 3):
            elems = list(compositions_up_to(n, 5))
            geq = {(a, b) for a in elems for b in elems if order_geq(a, b)}
            for a in elems:
                assert (a, a) in geq
            for (a, b) in geq:
                if a != b:
                    assert (b, a) not in geq, (a, b)
            for (a, b) in geq:
                for c in elems:
                    if (b, c) in geq:
                        assert (a, c) in geq, (a, b, c)


class TestRestriction:
    def test_round_trip(self):
        assert restrict_weight((2, 0)) == (2,)
        assert sl_representative((2,)).entries == (2, 0)

    def test_kernel_direction(self):
        assert restrict_weight((3, 3, 3)) == (0, 0)
        assert sl_representative((0, 0)).entries == (0, 0, 0)

    def test_general(self):
        assert restrict_weight((5, 2, 4)) == (3, -2)
        assert sl_representative((3, -2)).entries == (3, 0, 2)

    def test_translation_invariance(self):
        for lam in compositions_up_to(3, 4):
            for m in (1, 2):
                shifted = tuple(e + m for e in lam)
                assert restrict_weight(shifted) == restrict_weight(lam)

    def test_inverse_on_representatives(self):
        for lam in compositions_up_to(3, 5):
            if min(lam) == 0:
                assert sl_representative(restrict_weight(lam)).entries == lam


class TestDiagram:
    def test_arm_leg_examples(self):
        assert arm_leg((0, 2), (2, 1)) == (0, 1)
        assert arm_leg((0, 2), (2, 2)) == (0, 0)
        assert arm_leg((2, 0), (1, 1)) == (1, 1)

    def test_cell_outside(self):
        with pytest.raises(ValueError):
            arm_leg((0, 2), (1, 1))

    def test_cell_count(self):
        for lam in compositions_up_to(3, 5):
            assert len(diagram(lam)) == sum(lam)


class TestBruhat:
    def test_extremes(self):
        for n in (2, 3, 4):
            e = Permutation.identity(n)
            w0 = Permutation.longest(n)
            assert bruhat_leq(e, w0)
            assert bruhat_leq(w0, w0)
            assert (n == 1) or not bruhat_leq(w0, e)

    def test_subword_property_s3(self):
        # the interval below s1 s2 contains exactly {e, s1, s2, s1 s2}
        s1, s2 = Permutation.simple(1, 3), Permutation.simple(2, 3)
        w = s1 * s2
        below = [u for u in map(Permutation, itertools.permutations((1, 2, 3)))
                 if bruhat_leq(u, w)]
        assert sorted(u.images for u in below) == sorted(
            [(1, 2, 3), (2, 1, 3), (1, 3, 2), (2, 3, 1)])

    def test_length_monotone(self):
        import itertools as it
        for n in (3, 4):
            perms = [Permutation(p) for p in it.permutations(range(1, n + 1))]
            for u in perms:
                for w in perms:
                    if bruhat_leq(u, w):
                        assert u.length() <= w.length()


def test_reduced_words():
    for n in (2, 3, 4):
        import itertools as it
        for p in it.permutations(range(1, n + 1)):
            w = Permutation(p)
            word = w.reduced_word()
            assert len(word) == w.length()
            acc = Permutation.identity(n)
            for i in word:
                acc = acc * Permutation.simple(i, n)
            # the greedy peeling builds w = s_{i1} ... s_{il} left to right
            acc = Permutation.identity(n)
            for i in reversed(word):
                acc = Permutation.simple(i, n) * acc
            assert acc == w


def test_composition_validation():
    with pytest.raises(ValueError):
        Composition((1, -1))
    with pytest.raises(ValueError):
        Composition(())
    c = Composition((0, 2, 1))
    assert c.size() == 3 and c.n == 3
