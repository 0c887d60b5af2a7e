from unittest import mock

from django.test import SimpleTestCase

from graphs.core import ObjectivePoint, validate_graph
from graphs.tests.fixtures import example_graph
from instances.generators import InstanceSpec, generate
from solver.branch_and_bound import SubproblemResult, SubproblemStatus
from solver.exceptions import TimeLimitExceeded
from solver.frontier import solve_frontier
from solver.supported import is_supported_extreme, lower_convex_hull, supported_frontier


def points(*pairs):
    return [ObjectivePoint(*pair) for pair in pairs]


class SupportedFrontierTests(SimpleTestCase):

    def test_unsupported_point_is_skipped(self):
        frontier = supported_frontier(example_graph())
        self.assertEqual(frontier.as_tuples(), [(26, 21), (31, 15)])

    def test_windmill_one_blade(self):
        frontier = supported_frontier(generate(InstanceSpec(family='windmill', blades=1)))
        self.assertEqual(frontier.as_tuples(), [(7, 7), (8, 5)])

    def test_ideal_point_feasible(self):
        graph = validate_graph([(1, 2, 3, 4), (2, 3, 5, 6)], n=3)
        self.assertEqual(supported_frontier(graph).as_tuples(), [(11, 10)])

    def test_subset_of_full_frontier_on_its_hull(self):
        specs = [
            InstanceSpec(family='windmill', blades=4),
            InstanceSpec(family='complete', n=7, seed=5, cost_mode='gctp'),
            InstanceSpec(family='incomplete', n=9, density='0.5', seed=8),
            InstanceSpec(family='location', n=8, density='0.5', seed=2, distribution='normal'),
        ]
        for spec in specs:
            with self.subTest(spec=spec):
                graph = generate(spec)
                full, _ = solve_frontier(graph)
                supported = supported_frontier(graph)
                self.assertTrue(set(supported.as_tuples()) <= set(full.as_tuples()))
                self.assertEqual(supported.objective_points(), lower_convex_hull(full))
                self.assertTrue(is_supported_extreme(supported.objective_points()))

    def test_time_out_carries_partial_front(self):
        expired = SubproblemResult(
            status=SubproblemStatus.TIME_LIMIT, tree=None, point=None, objective=None,
            nodes=1, cut_filtered_edges=0, elapsed_ms=1.0,
        )
        with mock.patch('solver.supported.solve_subproblem', return_value=expired):
            with self.assertRaises(TimeLimitExceeded) as ctx:
                supported_frontier(example_graph())
        self.assertEqual(ctx.exception.partial.as_tuples(), [(26, 21), (31, 15)])


class HullTests(SimpleTestCase):

    def test_orientation(self):
        self.assertTrue(is_supported_extreme(points((0, 10), (2, 2), (10, 0))))
        self.assertFalse(is_supported_extreme(points((26, 21), (29, 19), (31, 15))))
        self.assertFalse(is_supported_extreme(points((0, 10), (5, 5), (10, 0))))
        self.assertTrue(is_supported_extreme(points((1, 1))))

    def test_lower_hull_of_example(self):
        full, _ = solve_frontier(example_graph())
        self.assertEqual([p.as_tuple() for p in lower_convex_hull(full)], [(26, 21), (31, 15)])
