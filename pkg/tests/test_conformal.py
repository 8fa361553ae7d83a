"""Level solving, balance checks, forced constants, exclusion tests, the
classification searches, and the global report."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lieconf.liealg import LieError, build_algebra
from lieconf.embed import dual_pair_branching, load_catalog, resolve_case
from lieconf.surd import LevelSolution, QuadraticNumber
from lieconf.conformal import (
    EXCLUDED_CANDIDATES,
    a1_exclusion_check,
    a1_exclusion_survey,
    ap_check,
    central_charge,
    global_report,
    level_flags,
    necessary_constants,
    search_sl_irreducible,
    search_so_irreducible,
    solve_levels,
    table1_scan,
)


def levels_of(case):
    return solve_levels(case.ambient, case.sub, case.slot_groups)


def rational_levels(case):
    return sorted(s.to_fraction() for s in levels_of(case) if s.is_rational)


class TestCentralCharge:
    def test_known_values(self):
        assert central_charge("A1", 1) == Fraction(1)
        assert central_charge("A2", 1) == Fraction(2)
        assert central_charge("G2", 1) == Fraction(14, 5)

    def test_critical_level_raises(self):
        with pytest.raises(LieError):
            central_charge("G2", -4)

    def test_surd_level(self):
        k = QuadraticNumber(0, 1, 2)  # sqrt(2)
        c = central_charge("A1", k)
        # c = 3 sqrt2 / (sqrt2 + 2) = 3 (sqrt2 (sqrt2 - 2)) / (2 - 4) = 3 - ...
        expected = 3 * k * (k + 2).inverse()
        assert c == expected


class TestSolveLevels:
    @pytest.mark.parametrize(
        "n, m", [(2, 2), (2, 5), (3, 3), (4, 6), (6, 6)]
    )
    def test_slsl_closed_form(self, n, m):
        case = dual_pair_branching("slsl", n, m)
        assert rational_levels(case) == sorted([Fraction(1), Fraction(-1)])

    @pytest.mark.parametrize("n, m", [(2, 2), (2, 3), (3, 5), (4, 4), (6, 6)])
    def test_spsp_closed_form(self, n, m):
        case = dual_pair_branching("spsp", n, m)
        second = Fraction(-2 * (m * n - 1), 2 * m * n - m - n)
        assert rational_levels(case) == sorted([Fraction(1), second])

    @pytest.mark.parametrize("n, m", [(3, 3), (3, 4), (4, 5), (5, 5), (6, 6)])
    def test_soso_closed_form(self, n, m):
        case = dual_pair_branching("soso", n, m)
        second = Fraction(4 - m * n, m * n + m + n)
        assert rational_levels(case) == sorted([Fraction(1), second])

    @pytest.mark.parametrize("n, m", [(2, 3), (2, 6), (3, 4), (5, 6), (6, 6)])
    def test_spso_closed_form(self, n, m):
        case = dual_pair_branching("spso", n, m)
        second = Fraction(m * n + 2, 2 * m * n + 2 * n - m)
        assert rational_levels(case) == sorted([Fraction(-1, 2), second])

    @pytest.mark.parametrize("n, m", [(2, 2), (2, 4), (3, 3), (5, 6), (6, 6)])
    def test_bb_closed_form(self, n, m):
        case = dual_pair_branching("BB", n, m)
        assert rational_levels(case) == sorted([Fraction(1), Fraction(1 - m - n)])

    @pytest.mark.parametrize("n, m", [(1, 1), (1, 3), (2, 2), (3, 4), (4, 4)])
    def test_cc_closed_form(self, n, m):
        case = dual_pair_branching("CC", n, m)
        assert rational_levels(case) == sorted(
            [Fraction(-1, 2), Fraction(-2 - n - m, 2)]
        )

    @pytest.mark.parametrize("n, m", [(3, 3), (3, 4), (4, 6), (6, 6)])
    def test_oo_closed_form(self, n, m):
        case = dual_pair_branching("OO", n, m)
        assert rational_levels(case) == sorted([Fraction(1), 2 - Fraction(n + m, 2)])

    def test_so3_so4_no_spurious_root(self):
        # so(4) enters as two sl(2) slots sharing one pole; clearing per slot
        # would manufacture a root at -2/3.
        case = dual_pair_branching("soso", 3, 4)
        assert Fraction(-2, 3) not in rational_levels(case)
        assert rational_levels(case) == sorted([Fraction(1), Fraction(-8, 19)])

    def test_bb_diagonal_keeps_repeated_critical_root(self):
        # both B_n factors hit criticality at the same level; the root must
        # survive with multiplicity folded in, not be cancelled.
        case = dual_pair_branching("BB", 3, 3)
        assert Fraction(-5) in rational_levels(case)

    def test_spsl_level(self):
        case = resolve_case("spsl:3")
        assert Fraction(-1) in rational_levels(case)

    def test_g2_b3_single_root(self):
        case = resolve_case("G2-in-B3")
        assert rational_levels(case) == [Fraction(-2)]

    def test_surd_case_roots(self):
        amb, factors, stated = EXCLUDED_CANDIDATES[-1]
        assert amb == "E7"
        sols = _solve_excluded(amb, factors)
        for s in stated:
            assert s in sols

    def test_zero_root_removed(self):
        case = dual_pair_branching("slsl", 2, 2)
        assert Fraction(0) not in rational_levels(case)


def _solve_excluded(ambient, factors):
    from lieconf.embed import SubalgebraSpec
    from lieconf.liealg import AlgebraType

    sub = SubalgebraSpec(
        tuple((AlgebraType.parse(t), Fraction(j)) for t, j in factors), label=""
    )
    return solve_levels(ambient, sub)


class TestLevelFlags:
    def test_slsl_diagonal_critical(self):
        case = dual_pair_branching("slsl", 3, 3)
        flags = level_flags(case.ambient, case.sub, Fraction(-1))
        assert flags.critical and set(flags.critical_factors) == {0, 1}

    def test_slsl_off_diagonal_not_critical(self):
        case = dual_pair_branching("slsl", 2, 3)
        flags = level_flags(case.ambient, case.sub, Fraction(-1))
        assert not flags.critical

    def test_ambient_criticality(self):
        case = resolve_case("G2-in-B3")
        flags = level_flags(case.ambient, case.sub, Fraction(-5))
        assert flags.ambient_critical

    def test_spso_critical_when_m_is_2n_plus_2(self):
        case = dual_pair_branching("spso", 2, 6)
        flags = level_flags(case.ambient, case.sub, Fraction(-1, 2))
        assert flags.critical


class TestAPCheck:
    balanced_cases = [
        ("slsl:2,3", Fraction(-1)),
        ("slsl:4,4", Fraction(1)),
        ("spso:2,3", Fraction(-1, 2)),
        ("CC:2,3", Fraction(-1, 2)),
        ("OO:4,5", 2 - Fraction(9, 2)),
        ("spsl:3", Fraction(-1)),
        ("G2-in-B3", Fraction(-2)),
        ("B3-in-D4", Fraction(-2)),
    ]

    @pytest.mark.parametrize("label, k", balanced_cases, ids=lambda v: str(v))
    def test_balanced_families(self, label, k):
        case = resolve_case(label)
        report = ap_check(case, k)
        assert report.all_balanced
        for _idx, value, balanced in report.per_component:
            assert balanced and value == 1

    def test_methods_agree_on_catalog(self):
        for case in load_catalog():
            a = ap_check(case, case.level, method="factor")
            b = ap_check(case, case.level, method="restricted")
            assert a.per_component == b.per_component
            assert a.all_balanced and b.all_balanced

    @given(
        st.sampled_from(["slsl:2,3", "spso:2,4", "CC:1,2", "G2-in-B3", "spsl:2"]),
        st.fractions(min_value=-8, max_value=8),
    )
    @settings(max_examples=60, deadline=None)
    def test_methods_agree_everywhere(self, label, k):
        case = resolve_case(label)
        a = ap_check(case, k, method="factor")
        b = ap_check(case, k, method="restricted")
        assert a.per_component == b.per_component
        assert a.all_balanced == b.all_balanced

    @pytest.mark.parametrize(
        "family, n, m",
        [("spsp", 2, 3), ("spsp", 3, 5), ("soso", 3, 4), ("soso", 4, 5), ("spso", 2, 4), ("spso", 3, 5)],
    )
    def test_second_candidates_unbalanced_off_diagonal(self, family, n, m):
        assert n != m
        case = dual_pair_branching(family, n, m)
        second = [
            s for s in rational_levels(case) if s not in (Fraction(1), Fraction(-1, 2))
        ]
        assert len(second) == 1
        report = ap_check(case, second[0])
        assert not report.all_balanced

    @pytest.mark.parametrize("n, m", [(2, 3), (3, 5), (2, 5)])
    def test_bb_second_level_balances_off_diagonal(self, n, m):
        # unlike the tensor families, both odd-orthogonal levels are genuine:
        # 1 - n - m stays balanced whenever n != m.
        case = dual_pair_branching("BB", n, m)
        k = Fraction(1 - n - m)
        assert k in rational_levels(case)
        assert ap_check(case, k).all_balanced

    def test_critical_factor_reports_none_rows(self):
        case = dual_pair_branching("slsl", 3, 3)
        report = ap_check(case, Fraction(-1))
        assert not report.all_balanced
        assert report.critical_factors
        for _idx, value, balanced in report.per_component:
            assert value is None and not balanced

    def test_unknown_method_rejected(self):
        case = resolve_case("G2-in-B3")
        with pytest.raises(LieError):
            ap_check(case, Fraction(-2), method="hybrid")


class TestNecessaryConstants:
    @pytest.mark.parametrize(
        "kind, dim_k, dim_v, sign, expected",
        [
            ("orthogonal", 14, 7, "+", (-2, 4, 4)),
            ("orthogonal", 21, 8, "+", (-2, 5, 6)),
            ("linear", 21, 6, "-", (-1, 4, 6)),
            ("symplectic", 10, 4, "+", (1, 3, 8)),
        ],
    )
    def test_known_tuples(self, kind, dim_k, dim_v, sign, expected):
        k, g1, gamma = necessary_constants(kind, dim_k, dim_v, sign)
        assert (k, g1, gamma) == expected

    @given(
        st.sampled_from(["orthogonal", "symplectic", "linear"]),
        st.integers(min_value=1, max_value=60),
        st.integers(min_value=5, max_value=40),
        st.sampled_from(["+", "-"]),
    )
    @settings(max_examples=60)
    def test_balance_identity_holds(self, kind, dim_k, dim_v, sign):
        if kind == "symplectic" and dim_v % 2:
            dim_v += 1
        k, g1, gamma = necessary_constants(kind, dim_k, dim_v, sign)
        assert gamma == 2 * (k + g1)

    def test_symplectic_odd_dimension_rejected(self):
        with pytest.raises(LieError):
            necessary_constants("symplectic", 10, 5)

    def test_unknown_kind_rejected(self):
        with pytest.raises(LieError):
            necessary_constants("unitary", 3, 4)


class TestA1Exclusion:
    def test_positive_example_printed_variant(self):
        res = a1_exclusion_check(1, 5)
        # 4*5+5 = 25, l = 4: 4^2/2 + 4 = 12 = 2(5+1)
        assert res.printed == 4 and not res.empty

    def test_casimir_critical_at_minus_two(self):
        res = a1_exclusion_check(1, -2)
        assert res.casimir_critical and res.casimir is None

    def test_printed_critical_at_minus_one(self):
        res = a1_exclusion_check(1, -1)
        assert res.printed_critical and res.printed is None

    def test_irrational_product_is_empty(self):
        k = QuadraticNumber(0, 1, 5)
        res = a1_exclusion_check(3, k)
        assert res.empty and res.printed is None and res.casimir is None

    def test_nonpositive_index_rejected(self):
        with pytest.raises(LieError):
            a1_exclusion_check(0, 1)

    def test_survey_is_entirely_empty(self):
        rows = a1_exclusion_survey()
        assert len(rows) == 11
        for row in rows:
            assert row.result.empty, (row.description, row.a1_index, str(row.level))

    def test_survey_covers_all_stored_candidates(self):
        rows = a1_exclusion_survey()
        descriptions = {row.description for row in rows}
        assert len(EXCLUDED_CANDIDATES) == 8
        assert len(descriptions) == 8

    def test_variant_levels_also_empty(self):
        # the level values that differ from the re-derived ones by a digit
        # must be just as empty, whichever variant is consulted
        assert a1_exclusion_check(1240, Fraction(64, 75)).empty
        assert a1_exclusion_check(389, Fraction(16, 39)).empty


class TestSearches:
    def test_so_survivors_exact(self):
        found = {(str(f.algebra), f.weight, f.dim_v, f.copies) for f in search_so_irreducible()}
        assert found == {("B3", (0, 0, 1), 8, 1), ("G2", (1, 0), 7, 1)}

    def test_sl_survivors_exact(self):
        found = [(str(f.algebra), f.weight, f.dim_v, f.copies) for f in search_sl_irreducible(6)]
        assert found == [
            (f"C{n}", tuple(int(i == 0) for i in range(n)), 2 * n, 1) for n in range(2, 7)
        ]

    def test_sl_search_respects_rank_bound(self):
        assert len(search_sl_irreducible(3)) == 2


class TestTable1Scan:
    @pytest.mark.parametrize(
        "typ, expected",
        [
            ("B2", [(1, 0)]),
            ("B3", [(1, 0, 0)]),
            ("B4", [(1, 0, 0, 0)]),
            ("C3", [(0, 1, 0)]),
            ("C4", [(0, 1, 0, 0)]),
            ("F4", [(0, 0, 0, 1)]),
            ("G2", [(1, 0)]),
            ("A2", []),
            ("A3", []),
            ("D4", []),
            ("E6", []),
        ],
    )
    def test_exact_hit_sets(self, typ, expected):
        assert table1_scan(typ, 2) == expected

    def test_bound_three_adds_nothing(self):
        for typ in ("B2", "C3", "F4", "G2", "A2", "D4"):
            assert table1_scan(typ, 3) == table1_scan(typ, 2)

    def test_bad_bound_rejected(self):
        with pytest.raises(LieError):
            table1_scan("B2", 0)


class TestGlobalReport:
    def test_full_report(self):
        rows = global_report()
        assert len(rows) == 114
        assert all(row["status"] == "ok" for row in rows)
        labels = [row["label"] for row in rows]
        assert labels == sorted(labels)
        critical = [row for row in rows if row["ap"]["critical"]]
        assert len(critical) == 14

    def test_deterministic(self):
        import json

        a = json.dumps(global_report(), sort_keys=True)
        b = json.dumps(global_report(), sort_keys=True)
        assert a == b

    def test_row_shape(self):
        row = global_report()[0]
        assert set(row) == {"label", "ambient", "levels", "ap", "status"}
        assert set(row["ap"]) == {"level", "balanced", "critical"}
