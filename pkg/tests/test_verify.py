from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ennola.core import LaurentPoly
from ennola.families import AdmissibilityError, ParityCase, SignConvention, g_m_poly
from ennola.verify import (
    CheckReport,
    SweepConfig,
    aggregate,
    audit_term_degrees,
    check_audit_degrees,
    check_conj14_eq2,
    check_conj14_eq3,
    check_conj20,
    check_corollary1,
    check_decomposition,
    check_exceptional_unit,
    check_g_closed,
    check_integrality,
    check_prop2,
    corollary1_instances,
    family_maxima,
    g_m_decomposed,
    laurent_witness,
    plan_tasks,
    sweep,
)

PLUS, MINUS = SignConvention.PLUS, SignConvention.MINUS


class TestReports:
    def test_pass_iff_no_witness(self):
        with pytest.raises(ValueError):
            CheckReport("x", {}, True, {"exponent": 0})
        with pytest.raises(ValueError):
            CheckReport("x", {}, False, None)

    def test_record_excludes_timing(self):
        rec = check_prop2(3).to_record()
        assert rec == {"check": "prop2", "params": {"d": 3}, "convention": None, "pass": True}

    def test_witness_names_lowest_differing_exponent(self):
        p = LaurentPoly({-3: 1, 0: 2, 4: 1})
        q = LaurentPoly({-3: 1, 0: 5, 2: 1})
        assert laurent_witness(p, q, d=2) == {"d": 2, "exponent": 0, "computed": "2", "expected": "5"}
        assert laurent_witness(p, p) is None


class TestPd:
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 7, 100])
    def test_prop2(self, d):
        assert check_prop2(d).passed

    @pytest.mark.parametrize("d", [1, 2, 3, 4, 7, 200])
    def test_integrality(self, d):
        assert check_integrality(d).passed

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            check_prop2(0)
        with pytest.raises(ValueError):
            check_integrality(0)


class TestReciprocalPowerSums:
    def test_symmetric_point(self):
        assert check_corollary1(Fraction(1), Fraction(1), 2).passed

    def test_hand_value(self):
        r = check_corollary1(Fraction(2), Fraction(1, 2), 1)
        assert r.passed
        assert r.params == {"x1": "2", "x2": "1/2", "d": 1}

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            check_corollary1(Fraction(0), Fraction(1), 1)

    def test_instances_are_seeded(self):
        assert corollary1_instances(20, 5) == corollary1_instances(20, 5)
        assert corollary1_instances(20, 5) != corollary1_instances(20, 6)
        for x1, x2, d in corollary1_instances(200, 1):
            assert x1 and x2 and 1 <= d <= 30
            assert abs(x1.numerator) <= 20 and x1.denominator <= 20

    @settings(max_examples=50, deadline=None)
    @given(
        st.fractions(min_value=-20, max_value=20, max_denominator=20).filter(bool),
        st.fractions(min_value=-20, max_value=20, max_denominator=20).filter(bool),
        st.integers(1, 20),
    )
    def test_property(self, x1, x2, d):
        assert check_corollary1(x1, x2, d).passed


class TestConj14:
    @pytest.mark.parametrize("a,b", [(1, 1), (1, 2), (-3, 5), (-8, -7), (4, -1)])
    def test_eq2(self, a, b):
        assert check_conj14_eq2(a, b).passed

    def test_eq2_needs_nonzero_sum(self):
        with pytest.raises(ValueError, match="a\\+b"):
            check_conj14_eq2(1, -1)

    @pytest.mark.parametrize("a,b", [(2, 1), (-2, 3), (8, -7), (4, 1)])
    def test_eq3_plus(self, a, b):
        assert check_conj14_eq3(a, b, PLUS).passed

    def test_eq3_minus_fails_with_witness(self):
        r = check_conj14_eq3(2, 1, MINUS)
        assert not r.passed
        assert r.witness == {"d": 2, "exponent": -2, "computed": "-4", "expected": "0"}

    def test_eq3_parity_precondition(self):
        with pytest.raises(ValueError):
            check_conj14_eq3(1, 2)


class TestGClosed:
    @pytest.mark.parametrize("a,b", [(1, 3), (1, 2), (2, 1), (5, 5), (13, 12)])
    def test_plus(self, a, b):
        assert check_g_closed(a, b, PLUS).passed

    def test_minus_fails(self):
        r = check_g_closed(1, 2, MINUS)
        assert not r.passed and "exponent" in r.witness
        assert not check_g_closed(2, 1, MINUS).passed

    def test_inadmissible(self):
        with pytest.raises(AdmissibilityError):
            check_g_closed(2, 2)


class TestConj20:
    @pytest.mark.parametrize(
        "a,b,m,deg,lc,B",
        [
            (3, 1, 13, -1, Fraction(8, 13), 7),
            (1, 2, 7, -1, Fraction(-12, 7), 4),
            (2, 1, 7, -1, Fraction(6, 7), 4),
            (2, 3, 19, -4, Fraction(30, 19), 10),
        ],
    )
    def test_spot_values(self, a, b, m, deg, lc, B):
        r = check_conj20(a, b)
        assert r.passed
        assert (r.m, r.deg, r.lc, r.B) == (m, deg, lc, B)
        assert r.B_le_m

    def test_record(self):
        rec = check_conj20(3, 1).to_record()
        assert rec["lc"] == "8/13" and rec["B"] == "7" and rec["N"] == 1 and rec["case"] == 1

    @pytest.mark.parametrize("a,b", [(1, 1), (3, 3), (2, 2)])
    def test_inadmissible(self, a, b):
        with pytest.raises(AdmissibilityError):
            check_conj20(a, b)

    def test_exploratory_m(self):
        r = check_conj20(3, 1, m=15)
        assert r.lc_expected is None
        assert r.m == 15
        with pytest.raises(ValueError):
            check_conj20(3, 1, m=4)

    def test_minus_gives_positive_degree(self):
        r = check_conj20(1, 2, MINUS)
        assert not r.passed
        assert r.deg == 6 and r.B is None
        assert r.witness == {"reason": "degree mismatch", "computed": -6, "expected": 1}


class TestAudit:
    def test_named_entries(self):
        entries = {(e.family, e.k, e.l, e.i, e.j): e for e in audit_term_degrees(3, 1)}
        assert entries[("A", 0, 0, 0, 1)].deg_expanded == -1
        assert entries[("B", 0, 0, 0, 1)].deg_expanded == -9
        assert entries[("C", 0, 0, 0, 1)].deg_expanded == -1
        entries = {(e.family, e.k, e.l, e.i, e.j): e for e in audit_term_degrees(1, 3)}
        assert entries[("B", 0, 0, 0, 1)].deg_expanded == -1

    def test_all_match_at_5_3(self):
        entries = audit_term_degrees(5, 3)
        assert entries and all(e.match for e in entries)
        for family, (_, where) in family_maxima(entries).items():
            assert where == [(0, 0, 0, 1)], family

    def test_check(self):
        r = check_audit_degrees(2, 1)
        assert r.passed and r.values["terms"] > 0


class TestDecomposition:
    @pytest.mark.parametrize("a,b", [(3, 1), (1, 2), (2, 1), (1, 4)])
    def test_matches_direct_composition(self, a, b):
        assert check_decomposition(a, b).passed

    @pytest.mark.parametrize("m", [3, 5, 9])
    def test_other_m(self, m):
        assert g_m_decomposed(2, 1, PLUS, m) == g_m_poly(2, 1, m)


class TestExceptionalUnit:
    @pytest.mark.parametrize("l", [3, 10])
    def test_regime(self, l):
        r = check_exceptional_unit(l)
        assert r.passed
        assert (r.values["f_at_1"], r.values["f_at_minus_1"]) == (-1, 2 * l - 3)
        assert "note" not in r.values

    def test_below_regime_flagged(self):
        r = check_exceptional_unit(2)
        assert r.passed and r.values["f_at_minus_1"] == 1
        assert r.values["note"] == "outside l >= 3 regime"


class TestSweep:
    def test_prop2_count(self):
        reports = list(sweep(SweepConfig("prop2", d_range=(1, 200))))
        assert len(reports) == 200 and aggregate(reports)

    def test_empty_range_is_vacuous(self):
        cfg = SweepConfig("conj20", a_range=(1, 1), b_range=(1, 1))
        assert plan_tasks(cfg) == []
        assert aggregate(list(sweep(cfg)))

    def test_order_is_lexicographic(self):
        cfg = SweepConfig("g-closed", a_range=(1, 5), b_range=(1, 5), conventions=(PLUS, MINUS))
        params = [args for _, args in plan_tasks(cfg)]
        assert params == sorted(params, key=lambda t: (t[0], t[1], t[2].value != "plus"))

    def test_conj14_plan(self):
        tasks = plan_tasks(SweepConfig("conj14"))
        eq2 = [t for t in tasks if t[0] == "conj14_eq2"]
        eq3 = [t for t in tasks if t[0] == "conj14_eq3"]
        assert (len(eq2), len(eq3)) == (240, 64)

    def test_parallel_matches_serial(self):
        cfg = dict(check="conj20", a_range=(1, 5), b_range=(1, 5), conventions=(PLUS, MINUS))
        serial = [r.to_record() for r in sweep(SweepConfig(**cfg, jobs=1))]
        parallel = [r.to_record() for r in sweep(SweepConfig(**cfg, jobs=3))]
        assert serial == parallel

    @pytest.mark.parametrize(
        "kwargs",
        [{"check": "nope"}, {"check": "prop2", "jobs": 0}, {"check": "prop2", "conventions": ()},
         {"check": "prop2", "d_range": (1,)}],
    )
    def test_bad_config(self, kwargs):
        with pytest.raises(ValueError):
            SweepConfig(**kwargs)

    def test_classify_case_in_reports(self):
        assert check_conj20(2, 3).case is ParityCase.CASE3
