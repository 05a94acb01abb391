"""Tests for sweeps, violation intervals and the local extremum search."""

import math
import unittest
import sys
import os

import numpy as np

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from src.correlation.engine import Backend
from src.correlation.errors import ClosedFormUnavailableError
from src.inequalities.bell import InequalityKind
from src.kinematics.vectors import Direction
from src.scan.extrema import (MAX, MIN, Extremum, bracket_extrema, find_local_extrema,
                              golden_section_search)
from src.scan.quantities import QuantityConfig, correlation_quantity, inequality_quantity
from src.scan.sweep import (ScanError, SweepResult, evaluate, grid, operator_gap, sweep_x,
                            violation_intervals)

S3 = math.sqrt(3.0) / 2.0
Z = Direction(0.0, 0.0, 1.0)
UP_RIGHT = Direction(S3, 0.0, 0.5)
DOWN_RIGHT = Direction(S3, 0.0, -0.5)


def fig1(operator):
    config = QuantityConfig.create("half", operator, family="eq13")
    return correlation_quantity(config, Z, DOWN_RIGHT)


# ---------------------------------------------------------------------------
# Sweeps
# ---------------------------------------------------------------------------

class TestSweep(unittest.TestCase):

    def test_grid_includes_endpoints(self):
        """The grid is evenly spaced and includes both ends."""
        xs = grid(0.0, 1.0, 5)
        np.testing.assert_allclose(xs, [0.0, 0.25, 0.5, 0.75, 1.0])

    def test_invalid_ranges(self):
        """Empty, negative and non-finite ranges are rejected."""
        for x_min, x_max in ((1.0, 1.0), (2.0, 1.0), (-0.5, 1.0), (0.0, math.inf),
                             (math.nan, 1.0)):
            with self.subTest(x_min=x_min, x_max=x_max):
                with self.assertRaises(ScanError):
                    grid(x_min, x_max, 10)

    def test_too_few_steps(self):
        """A grid needs at least two points."""
        with self.assertRaises(ScanError):
            grid(0.0, 1.0, 1)

    def test_sweep_values(self):
        """A sweep pairs each x with its value and keeps the label."""
        result = sweep_x(lambda x: x * x, 0.0, 2.0, 3, label="square", configuration={"k": 1})
        self.assertEqual(len(result), 3)
        self.assertEqual(result.points(), [(0.0, 0.0), (1.0, 1.0), (2.0, 4.0)])
        self.assertEqual(result.label, "square")
        self.assertEqual(result.configuration, {"k": 1})

    def test_non_finite_value(self):
        """A NaN or infinite value raises ScanError carrying x."""
        with self.assertRaises(ScanError) as ctx:
            sweep_x(lambda x: 1.0 / (x - 1.0) if x != 1.0 else math.nan, 0.0, 2.0, 3)
        self.assertEqual(ctx.exception.x, 1.0)
        with self.assertRaises(ScanError):
            evaluate(lambda x: math.inf, 0.5)

    def test_fig1_sweep_matches_reduced_form(self):
        """The figure 1 NW sweep follows 1/2 + 3/4 (sqrt(4x+1) - 1)/(x+1)."""
        result = sweep_x(fig1("nw"), 0.0, 10.0, 11)
        for x, value in result.points():
            expected = 0.5 + 0.75 * (math.sqrt(4 * x + 1) - 1) / (x + 1)
            self.assertAlmostEqual(value, expected, places=12)


class TestViolationIntervals(unittest.TestCase):

    def test_fig2_single_interval(self):
        """Figure 2 violates CHSH on one interval around the peak."""
        config = QuantityConfig.create("half", "nw", family="eq13")
        f = inequality_quantity(InequalityKind.CHSH, config, (Z, Z, UP_RIGHT, UP_RIGHT))
        result = sweep_x(f, 0.0, 10.0, 1001)
        intervals = violation_intervals(result, 2.0)
        self.assertEqual(len(intervals), 1)
        lo, hi = intervals[0]
        self.assertGreater(lo, 0.0)
        self.assertLess(lo, 0.8495)
        self.assertGreater(hi, 0.8495)
        self.assertGreaterEqual(hi, 5.9)
        self.assertLess(hi, 6.0)

    def test_runs_split_and_close_at_end(self):
        """Separate runs give separate intervals; a run can end at the last x."""
        sweep = SweepResult("t", [0.0, 1.0, 2.0, 3.0, 4.0], [3.0, 1.0, 3.0, 3.0, 2.0])
        self.assertEqual(violation_intervals(sweep, 2.0), [(0.0, 0.0), (2.0, 3.0)])
        sweep = SweepResult("t", [0.0, 1.0], [1.0, 5.0])
        self.assertEqual(violation_intervals(sweep, 2.0), [(1.0, 1.0)])

    def test_bound_itself_is_not_a_violation(self):
        """Values equal to the bound are not violations."""
        sweep = SweepResult("t", [0.0, 1.0], [2.0, 2.0])
        self.assertEqual(violation_intervals(sweep, 2.0), [])


class TestOperatorGap(unittest.TestCase):

    def test_largest_gap(self):
        """The gap is taken where |NW - Czachor| is largest."""
        nw = SweepResult("nw", [0.0, 1.0, 2.0], [0.5, 0.9, 1.0])
        cz = SweepResult("cz", [0.0, 1.0, 2.0], [0.5, 1.0, 0.7])
        gap = operator_gap(nw, cz)
        self.assertEqual(gap.x, 2.0)
        self.assertAlmostEqual(gap.gap, 0.3)
        self.assertEqual((gap.value_nw, gap.value_cz), (1.0, 0.7))

    def test_grids_must_match(self):
        """Mismatched or empty sweeps are rejected."""
        with self.assertRaises(ScanError):
            operator_gap(SweepResult("a", [0.0, 1.0], [0.0, 0.0]),
                         SweepResult("b", [0.0, 2.0], [0.0, 0.0]))
        with self.assertRaises(ScanError):
            operator_gap(SweepResult("a", [], []), SweepResult("b", [], []))


# ---------------------------------------------------------------------------
# Local extrema
# ---------------------------------------------------------------------------

class TestGoldenSection(unittest.TestCase):

    def test_brackets_minimum(self):
        """Golden section shrinks onto the minimum."""
        c, d = golden_section_search(lambda x: (x - 0.3) ** 2, 0.0, 1.0, 1e-9)
        self.assertLessEqual(d - c, 1e-9)
        self.assertLessEqual(c, 0.3 + 1e-9)
        self.assertGreaterEqual(d, 0.3 - 1e-9)

    def test_evaluates_strictly_inside(self):
        """Only interior points are evaluated, whatever the order of the ends."""
        seen = []

        def f(x):
            seen.append(x)
            return -math.sin(x)

        golden_section_search(f, 2.0, 0.5, 1e-8)
        self.assertTrue(seen)
        self.assertTrue(all(0.5 < x < 2.0 for x in seen))

    def test_narrow_interval_returned_as_is(self):
        """An interval already below tolerance is returned unchanged."""
        self.assertEqual(golden_section_search(lambda x: x, 1.0, 1.0 + 1e-12, 1e-8),
                         (1.0, 1.0 + 1e-12))


class TestBracketExtrema(unittest.TestCase):

    def test_plateau_gives_one_bracket(self):
        """A flat top gives a single bracket."""
        xs = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
        ys = np.array([0.0, 1.0, 1.0, 0.0, 0.0])
        self.assertEqual(bracket_extrema(xs, ys), [(0.0, 3.0, MAX)])

    def test_minimum(self):
        """A dip is bracketed as a minimum."""
        xs = np.array([0.0, 1.0, 2.0])
        self.assertEqual(bracket_extrema(xs, np.array([1.0, 0.0, 1.0])), [(0.0, 2.0, MIN)])

    def test_monotone(self):
        """A monotone curve has no brackets."""
        xs = np.linspace(0.0, 1.0, 10)
        self.assertEqual(bracket_extrema(xs, xs ** 2), [])


class TestFindLocalExtrema(unittest.TestCase):

    def test_fig1_nw_maximum(self):
        """The figure 1 NW curve peaks at x = 2 with value 1."""
        extrema = find_local_extrema(fig1("nw"), 0.0, 10.0)
        self.assertEqual(len(extrema), 1)
        self.assertEqual(extrema[0].kind, MAX)
        self.assertAlmostEqual(extrema[0].x_star, 2.0, places=5)
        self.assertAlmostEqual(extrema[0].value, 1.0, places=10)

    def test_fig1_cz_maximum(self):
        """The figure 1 Czachor curve peaks at x = 1 with value 1."""
        extrema = find_local_extrema(fig1("cz"), 0.0, 10.0)
        self.assertEqual(len(extrema), 1)
        self.assertAlmostEqual(extrema[0].x_star, 1.0, places=5)
        self.assertAlmostEqual(extrema[0].value, 1.0, places=10)

    def test_monotone_quantity_has_none(self):
        """A monotone quantity has no local extrema."""
        self.assertEqual(find_local_extrema(lambda x: x, 0.0, 5.0), [])

    def test_cosine(self):
        """cos on [0.5, 10] alternates min, max, min at multiples of pi."""
        extrema = find_local_extrema(math.cos, 0.5, 10.0)
        self.assertEqual([e.kind for e in extrema], [MIN, MAX, MIN])
        for extremum, expected in zip(extrema, (math.pi, 2 * math.pi, 3 * math.pi)):
            self.assertAlmostEqual(extremum.x_star, expected, places=6)

    def test_neighbours_do_not_exceed_maximum(self):
        """Nearby points never exceed a reported maximum."""
        f = fig1("cz")
        for extremum in find_local_extrema(f, 0.0, 10.0):
            for offset in (1e-4, 1e-3):
                self.assertLessEqual(f(extremum.x_star - offset), extremum.value)
                self.assertLessEqual(f(extremum.x_star + offset), extremum.value)

    def test_boundary_extremum_not_reported(self):
        """An extremum at the range end is not reported."""
        self.assertEqual(find_local_extrema(lambda x: (x - 5.0) ** 2, 0.0, 5.0), [])

    def test_bad_parameters(self):
        """Too few coarse steps and a zero tolerance are rejected."""
        with self.assertRaises(ScanError):
            find_local_extrema(math.cos, 0.0, 1.0, coarse_steps=4)
        with self.assertRaises(ScanError):
            find_local_extrema(math.cos, 0.0, 1.0, x_tol=0.0)

    def test_extremum_serialises(self):
        """An extremum serialises to x_star, value and kind."""
        data = Extremum(2.0, 1.0, MAX).to_dict()
        self.assertEqual(data, {"x_star": 2.0, "value": 1.0, "kind": "max"})


# ---------------------------------------------------------------------------
# Quantity configurations
# ---------------------------------------------------------------------------

class TestQuantityConfig(unittest.TestCase):

    def test_closed_form_missing_raises_without_fallback(self):
        """Spin-1 NW on eq13 momenta raises without fallback."""
        config = QuantityConfig.create("one", "nw", family="eq13")
        with self.assertRaises(ClosedFormUnavailableError):
            config.correlation_at(1.0)

    def test_fallback_uses_oracle(self):
        """With fallback the oracle stands in for a missing closed form."""
        config = QuantityConfig.create("one", "nw", family="eq13", fallback=True)
        self.assertIs(config.effective_backend(), Backend.ORACLE)
        self.assertIs(config.correlation_at(1.0).backend, Backend.ORACLE)
        self.assertEqual(config.describe()["backend"], "oracle")

    def test_fallback_keeps_closed_form_when_available(self):
        """Fallback leaves available closed forms in use."""
        config = QuantityConfig.create("one", "nw", family="cm", fallback=True)
        self.assertIs(config.effective_backend(), Backend.CLOSED)
        self.assertIs(config.correlation_at(1.0).backend, Backend.CLOSED)

    def test_with_operator(self):
        """Swapping in the same operator changes nothing."""
        config = QuantityConfig.create("half", "nw")
        self.assertEqual(config.with_operator(config.operator).describe(), config.describe())
        self.assertEqual(config.describe()["momenta"], "cm")


if __name__ == '__main__':
    unittest.main()
