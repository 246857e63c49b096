import pytest

from qcauchy.exact import (QPoly, QSeries, QTPoly, QTRational, invert_q,
                           limit_t, qseries_from_qtrational)
from qcauchy.macdonald import (MacdonaldPolynomial, atom_terms, e_atom_table,
                               e_t0_table, generic_engine, macdonald_E,
                               macdonald_E_fillings, norm_a_q, norm_a_q_alt,
                               norm_a_qt, restrict_poly_terms, rs_polynomial,
                               sl2_closed_forms, specialize_E)
from qcauchy.weights import compositions_up_to, min_zero_compositions_up_to

ONE = QTPoly.one()
Q = QTPoly.q()
T = QTPoly.t()


class TestConstruction:
    def test_zero_composition(self):
        E = macdonald_E((0, 0, 0))
        assert E.terms == {(0, 0, 0): QTRational.one()}

    def test_constant_diagonal(self):
        # E_{(m,...,m)} = (x_1...x_n)^m
        for n, m in ((2, 1), (2, 2), (3, 1)):
            E = macdonald_E((m,) * n)
            assert E.terms == {(m,) * n: QTRational.one()}

    def test_basic_two_variable(self):
        E = macdonald_E((0, 1))
        c = QTRational(ONE - T, ONE - Q * T)
        assert E.terms == {(0, 1): QTRational.one(), (1, 0): c}
        assert macdonald_E((1, 0)).terms == {(1, 0): QTRational.one()}

    def test_t0_of_01(self):
        E = specialize_E(macdonald_E((0, 1)), "t0")
        assert E.terms == {(0, 1): QPoly.one(), (1, 0): QPoly.one()}

    def test_homogeneous(self):
        for n in (2, 3):
            for lam in compositions_up_to(n, 4):
                assert macdonald_E(lam, n).total_degree_check()

    def test_stability(self):
        for n in (2, 3):
            for lam in compositions_up_to(n, 3):
                E = macdonald_E(lam, n)
                for m in (1, 2):
                    shifted = tuple(e + m for e in lam)
                    Es = macdonald_E(shifted, n)
                    expected = {tuple(e + m for e in exps): c
                                for exps, c in E.terms.items()}
                    assert Es.terms == expected, (lam, m)


class TestTwoPath:
    def test_agreement(self):
        # the acceptance range |lam| <= 5, n <= 3 runs in test_acceptance;
        # here a moderate slice
        for n in (1, 2, 3):
            for lam in compositions_up_to(n, 4 if n == 3 else 5):
                a = macdonald_E(lam, n)
                b = macdonald_E_fillings(lam, n)
                assert a.terms == b.terms, (n, lam)

    def test_fillings_specialization_example(self):
        E = specialize_E(macdonald_E_fillings((1, 0)), "t0")
        assert E.terms == {(1, 0): QPoly.one()}


class TestSpecializations:
    def test_modes_on_01(self):
        E = macdonald_E((0, 1))
        atom = specialize_E(E, "qinv_tinf")
        assert atom.terms == {(0, 1): QPoly.one(), (1, 0): QPoly.gen()}
        key = specialize_E(E, "q0_t0")
        assert key.terms == {(0, 1): 1, (1, 0): 1}
        at_inf = specialize_E(E, "qinf_tinf")
        assert at_inf.terms == {(0, 1): 1}

    def test_trivial_any_mode(self):
        E = macdonald_E((0, 0))
        for mode in ("t0", "qinv_tinf", "qt_inv", "q0_t0", "qinf_tinf"):
            S = specialize_E(E, mode)
            assert list(S.terms) == [(0, 0)]

    def test_positivity(self):
        for n in (2, 3):
            for lam in compositions_up_to(n, 4):
                E = macdonald_E(lam, n)
                for mode in ("t0", "qinv_tinf"):
                    S = specialize_E(E, mode)
                    for c in S.terms.values():
                        assert all(x >= 0 for x in c.coeffs), (lam, mode)

    def test_qinv_tinf_order_immaterial(self):
        # limit after q-inversion equals t->0 of the fully inverted form
        for lam in compositions_up_to(2, 4):
            E = macdonald_E(lam)
            for c in E.terms.values():
                via_limit = limit_t(invert_q(c), "infinity")
                via_inverted = invert_q(c, invert_t=True).subs_t0()
                assert via_limit == via_inverted

    def test_engine_tables_match_specialize(self):
        for n in (2, 3):
            lams = list(compositions_up_to(n, 4))
            t0 = e_t0_table(n, lams, 8)
            atom = e_atom_table(n, lams, 8)
            for lam in lams:
                E = macdonald_E(lam, n)
                want0 = {e: QSeries.from_qpoly(c, 8) for e, c in
                         specialize_E(E, "t0").terms.items()}
                wanta = {e: QSeries.from_qpoly(c, 8) for e, c in
                         specialize_E(E, "qinv_tinf").terms.items()}
                assert t0[lam] == {k: v for k, v in want0.items()
                                   if not v.is_zero}
                assert atom[lam] == {k: v for k, v in wanta.items()
                                     if not v.is_zero}


class TestNorms:
    def test_examples(self):
        a = norm_a_qt((0, 2))
        expected = QTRational(
            (ONE - QTPoly.term(1, 2, 1)) * (ONE - Q * T),
            (ONE - QTPoly.term(1, 2, 0)) * (ONE - Q))
        assert a == expected
        b = norm_a_qt((2, 0))
        expected = QTRational(
            (ONE - QTPoly.term(1, 2, 2)) * (ONE - Q * T),
            (ONE - QTPoly.term(1, 2, 1)) * (ONE - Q))
        assert b == expected
        assert norm_a_qt((0,) * 3) == QTRational.one()

    def test_q_series_examples(self):
        # 1/((1-q)(1-q^2)) and 1/(1-q)
        from qcauchy.exact import geometric_series
        assert norm_a_q((0, 2), 8) == \
            geometric_series(1, 8) * geometric_series(2, 8)
        assert norm_a_q((2, 0), 8) == geometric_series(1, 8)
        assert norm_a_q((0, 0), 8) == QSeries.one(8)

    def test_three_way_agreement(self):
        cap = 10
        for n in (2, 3, 4):
            for lam in compositions_up_to(n, 4):
                x = norm_a_q(lam, cap)
                y = norm_a_q_alt(lam, cap)
                z = qseries_from_qtrational(
                    limit_t(norm_a_qt(lam), "zero"), cap)
                assert x == y == z, lam


class TestRankOne:
    def test_rs_small(self):
        assert rs_polynomial(0) == {0: QPoly.one()}
        assert rs_polynomial(1) == {1: QPoly.one(), -1: QPoly.one()}
        r2 = rs_polynomial(2)
        assert r2[0] == QPoly((1, 1)) and r2[2] == QPoly.one()

    def test_closed_forms_match_computed(self):
        cap = 12
        eng = generic_engine(2)
        for w in range(-6, 7):
            lam = (w, 0) if w > 0 else (0, -w)
            cf_t0, cf_atom, cf_norm = sl2_closed_forms(w, cap)
            got_t0 = {e[0]: c for e, c in restrict_poly_terms(
                eng.terms_t0(lam), 2).items()}
            got_atom = {e[0]: c for e, c in restrict_poly_terms(
                eng.terms_atom(lam), 2).items()}
            assert got_t0 == cf_t0, w
            assert got_atom == cf_atom, w
            assert norm_a_q(lam, cap) == cf_norm, w

    def test_weight_one_values(self):
        e_t0, e_atom, a = sl2_closed_forms(-1, 6)
        assert e_t0 == {1: QPoly.one(), -1: QPoly.one()}
        assert e_atom == {1: QPoly.gen(), -1: QPoly.one()}
        from qcauchy.exact import geometric_series
        assert a == geometric_series(1, 6)
        e_t0, e_atom, a = sl2_closed_forms(1, 6)
        assert e_t0 == {1: QPoly.one()}
        assert e_atom == {1: QPoly.one()}
        assert a == QSeries.one(6)


def test_restriction_compatibility():
    # res E_lam(x; q, t) at n = 2 matches the closed forms under each
    # specialization for mixed-sign weights
    eng = generic_engine(2)
    for lam in ((3, 1), (1, 4)):
        w = lam[0] - lam[1]
        cf_t0, cf_atom, _ = sl2_closed_forms(w, 10)
        t0 = {e[0]: c for e, c in
              restrict_poly_terms(eng.terms_t0(lam), 2).items()}
        atom = {e[0]: c for e, c in
                restrict_poly_terms(eng.terms_atom(lam), 2).items()}
        assert t0 == cf_t0
        assert atom == cf_atom


def test_monic_normalization():
    for n in (2, 3):
        for lam in compositions_up_to(n, 4):
            E = macdonald_E(lam, n)
            assert E.terms[tuple(lam)] == QTRational.one()


def test_cache_roundtrip(tmp_path, monkeypatch):
    from qcauchy.macdonald import GenericMacdonaldEngine
    eng = GenericMacdonaldEngine(2, cache_dir=str(tmp_path))
    ref = eng.terms_qtrational((0, 2))
    eng.save_cache()
    eng2 = GenericMacdonaldEngine(2, cache_dir=str(tmp_path))
    assert eng2.terms_qtrational((0, 2)) == ref
    assert (0, 2) in eng2.memo
    # corrupt the cache: loading must fall back to recomputation
    path = eng._cache_path()
    import json
    data = json.load(open(path))
    key = next(iter(data["entries"]))
    first_term = next(iter(data["entries"][key]["terms"]))
    data["entries"][key]["terms"][first_term][0][2] += 1
    json.dump(data, open(path, "w"))
    eng3 = GenericMacdonaldEngine(2, cache_dir=str(tmp_path))
    assert eng3.terms_qtrational((0, 2)) == ref
