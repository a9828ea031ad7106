from fractions import Fraction

import pytest

from promotab.dynamics import orbit
from promotab.errors import BudgetExceededError, PreconditionError
from promotab.growth import orbit_values
from promotab.homomesy import (
    CellStatistic,
    cell_sum,
    fraction_str,
    inc_system,
    orbit_average,
    report_to_json,
    ssyt_system,
    symmetric_subsets,
    syt_poset_system,
    verify_homomesy,
)
from promotab.ktableaux import increasing_from_grid
from promotab.posets import build_cominuscule, linear_extensions
from promotab.shapes import Tableau, enumerate_ssyt


def stat(*boxes):
    return CellStatistic(support=frozenset(boxes), name=f"cells:{sorted(boxes)}")


class TestCellSum:
    def test_empty_support(self):
        assert cell_sum(Tableau([[1, 2], [3, 4]], 4), frozenset()) == 0

    def test_counterexample_tableau_black_boxes(self):
        t = increasing_from_grid(Tableau([[1, 2, 3, 5], [2, 4, 5, 7], [3, 6, 8, 9]], 9))
        assert cell_sum(t, frozenset({(2, 2), (2, 3)})) == 9

    def test_full_support_of_standard_tableau_is_constant(self):
        full = frozenset((r, c) for r in (1, 2) for c in (1, 2))
        for t in enumerate_ssyt((2, 2), 4):
            if sorted(v for _, v in t.items()) == [1, 2, 3, 4]:
                assert cell_sum(t, full) == 10

    def test_poset_object_by_element_and_by_box(self):
        p = build_cominuscule("rectangle", 2, 2)
        ext = next(linear_extensions(p))
        by_elem = cell_sum(ext, frozenset({1, 4}))
        by_box = cell_sum(ext, frozenset({(1, 1), (2, 2)}))
        assert by_elem == by_box

    def test_out_of_range_support(self):
        with pytest.raises(PreconditionError):
            cell_sum(Tableau([[1]], 2), frozenset({(2, 2)}))


class TestOrbitAverage:
    def test_single_box_full_cycle(self):
        orb = orbit(Tableau([[1]], 3))
        assert orbit_average(orb.elements, stat((1, 1))) == 2

    def test_exactness(self):
        orb = orbit(Tableau([[1, 2, 3], [3, 4, 4]], 5))
        avg = orbit_average(orb.elements, stat((1, 1)))
        assert avg == Fraction(6, 5)


class TestVerify:
    def test_rectangular_symmetric_supports_are_homomesic(self):
        system = ssyt_system((2, 2), 4)
        for statistic in symmetric_subsets((2, 2)):
            report = verify_homomesy(system, statistic, budget=100)
            assert report.homomesic
            assert report.common_average == Fraction(5 * len(statistic.support), 2)

    def test_total_size_partitioned(self):
        report = verify_homomesy(ssyt_system((2, 2), 4), stat(), budget=100)
        assert sum(o.size for o in report.orbits) == 20

    def test_violation_witness(self):
        p = build_cominuscule("rectangle", 3, 4)
        statistic = CellStatistic(
            support=frozenset({p.element_at((2, 2)), p.element_at((2, 3))}),
            name="cells:[(2,2),(2,3)]",
        )
        report = verify_homomesy(inc_system(p, 3), statistic, budget=100_000)
        assert report.verdict == "violated"
        assert report.witness is not None
        averages = {fraction_str(o.average) for o in report.orbits}
        assert "91/9" in averages and "10/1" in averages

    def test_informational_non_symmetric_support(self):
        report = verify_homomesy(ssyt_system((2, 2), 3), stat((1, 1)), budget=100)
        assert report.verdict in ("homomesic", "violated")

    def test_budget_is_loud(self):
        with pytest.raises(BudgetExceededError):
            verify_homomesy(ssyt_system((2, 2), 4), stat(), budget=10)

    def test_threads_do_not_change_the_report(self):
        system = ssyt_system((3, 2), 4)
        statistic = stat((1, 1), (2, 2))
        sequential = verify_homomesy(system, statistic, budget=1000, threads=1)
        parallel = verify_homomesy(system, statistic, budget=1000, threads=4)
        assert sequential == parallel

    def test_poset_system(self):
        p = build_cominuscule("shifted_staircase", 3)
        statistic = CellStatistic(support=frozenset({p.element_at((1, 3)), p.element_at((2, 2))}), name="diag")
        report = verify_homomesy(syt_poset_system(p), statistic, budget=100)
        assert report.homomesic and report.common_average == 7


class TestSymmetricSubsets:
    def test_two_by_two_has_four(self):
        assert len(list(symmetric_subsets((2, 2)))) == 4

    def test_three_by_three_has_thirty_two(self):
        assert len(list(symmetric_subsets((3, 3)))) == 32

    def test_one_by_one_has_two(self):
        subsets = list(symmetric_subsets((1, 1)))
        assert len(subsets) == 2
        assert frozenset() in {s.support for s in subsets}

    def test_poset_variant(self):
        p = build_cominuscule("propeller", 3)
        assert len(list(symmetric_subsets(p))) == 4

    def test_supports_are_fixed_by_rotation(self):
        for s in symmetric_subsets((2, 3)):
            rotated = {(3 - r, 4 - c) for r, c in s.support}
            assert rotated == set(s.support)


class TestComplementIdentity:
    def test_box_multisets_complement_under_rotation(self):
        m, n, k = 2, 2, 4
        for t in enumerate_ssyt((n,) * m, k):
            for r, c in t.boxes():
                star = (m + 1 - r, n + 1 - c)
                vals = orbit_values(t, (r, c))
                comp = tuple(sorted(k + 1 - v for v in orbit_values(t, star)))
                assert vals == comp


class TestJson:
    def test_fraction_strings_include_denominator(self):
        assert fraction_str(Fraction(10)) == "10/1"
        assert fraction_str(Fraction(91, 9)) == "91/9"

    def test_json_is_deterministic(self):
        report = verify_homomesy(ssyt_system((2, 2), 3), stat((1, 1), (2, 2)), budget=100)
        assert report_to_json(report) == report_to_json(report)
        assert '"verdict"' in report_to_json(report)
