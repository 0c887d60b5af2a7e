import os
import unittest
from unittest import mock

from django.test import SimpleTestCase

from graphs.core import dijkstra_sssp, kruskal_mst, validate_graph
from graphs.tests.fixtures import example_graph, example_trees
from instances.exceptions import InfeasibleDensity
from instances.generators import InstanceSpec, generate
from oracle.enumeration import exact_frontier
from solver.branch_and_bound import SubproblemResult, SubproblemStatus
from solver.exceptions import InconsistentLexminError
from solver.frontier import deadline_after, lexmin_tau_gamma, solve_frontier

FULL_ACCEPTANCE = os.environ.get('CABLETRENCH_FULL_ACCEPTANCE') == '1'

LOCATION_VARIANTS = [
    {'distribution': 'uniform', 'edge_rule': 'random'},
    {'distribution': 'uniform', 'edge_rule': 'min_euclidean'},
    {'distribution': 'uniform', 'edge_rule': 'min_manhattan'},
    {'distribution': 'normal', 'edge_rule': 'random'},
    {'distribution': 'normal', 'edge_rule': 'min_euclidean'},
    {'distribution': 'normal', 'edge_rule': 'min_manhattan'},
]


def class_grid(sizes, seeds, densities):
    """Every instance class in both cost modes; infeasible densities are skipped"""
    for n in sizes:
        for cost_mode in ('ctp', 'gctp'):
            for seed in seeds:
                candidates = [InstanceSpec(family='incomplete', n=n, density=d, cost_mode=cost_mode, seed=seed)
                              for d in densities]
                candidates.append(InstanceSpec(family='complete', n=n, cost_mode=cost_mode, seed=seed))
                candidates.append(InstanceSpec(family='grid', n=n, cost_mode=cost_mode, seed=seed))
                candidates += [InstanceSpec(family='location', n=n, density='0.5', cost_mode=cost_mode,
                                            seed=seed, **variant) for variant in LOCATION_VARIANTS]
                for spec in candidates:
                    try:
                        yield spec, generate(spec)
                    except InfeasibleDensity:
                        continue


def mean_frontier_size(density, cost_mode, n=12, seeds=range(1, 21)):
    sizes = []
    for seed in seeds:
        spec = InstanceSpec(family='incomplete', n=n, density=density, cost_mode=cost_mode, seed=seed)
        frontier, _ = solve_frontier(generate(spec))
        sizes.append(len(frontier))
    return sum(sizes) / len(sizes)


class SolveFrontierTests(SimpleTestCase):

    def test_example_frontier(self):
        graph = example_graph()
        frontier, report = solve_frontier(graph)
        self.assertEqual(frontier.as_tuples(), [(26, 21), (29, 19), (31, 15)])
        trees = example_trees(graph)
        self.assertEqual([entry.tree for entry in frontier], [trees['T1'], trees['T2'], trees['T3']])
        self.assertEqual(report.points_found, 3)
        self.assertEqual(report.subproblems_solved, 3)
        self.assertEqual(len(report.subproblem_millis), 3)
        self.assertFalse(report.timed_out)

    def test_cut_soundness_on_example(self):
        with_cut, _ = solve_frontier(example_graph(), cut_enabled=True)
        without_cut, report = solve_frontier(example_graph(), cut_enabled=False)
        self.assertEqual(with_cut.as_tuples(), without_cut.as_tuples())
        self.assertEqual(report.cut_filtered_edges, 0)

    def test_tree_input(self):
        graph = validate_graph([(1, 2, 3, 4), (2, 3, 5, 6), (2, 4, 1, 1)], n=4)
        frontier, report = solve_frontier(graph)
        self.assertEqual(frontier.as_tuples(), [(15, 11)])
        self.assertEqual(report.subproblems_solved, 0)

    def test_windmill_has_two_to_the_k_points(self):
        for blades in range(1, 6):
            with self.subTest(blades=blades):
                graph = generate(InstanceSpec(family='windmill', blades=blades))
                frontier, _ = solve_frontier(graph)
                self.assertEqual(len(frontier), 2 ** blades)
                if blades <= 3:
                    self.assertEqual(frontier.as_tuples(), exact_frontier(graph).as_tuples())

    def test_iterates_are_strictly_monotone(self):
        graph = generate(InstanceSpec(family='complete', n=7, seed=11, cost_mode='gctp'))
        frontier, _ = solve_frontier(graph)
        points = frontier.objective_points()
        for previous, current in zip(points, points[1:]):
            self.assertLess(previous.c_gamma, current.c_gamma)
            self.assertGreater(previous.c_tau, current.c_tau)

    def test_lexicographic_endpoints(self):
        for _, graph in class_grid([6], [1, 2], ['0.5', '0.75']):
            frontier, _ = solve_frontier(graph)
            points = frontier.objective_points()
            self.assertEqual(points[0].c_gamma, sum(dijkstra_sssp(graph).distance.values()))
            self.assertEqual(points[-1].c_tau, kruskal_mst(graph).trench_cost)

    def test_matches_oracle_on_reduced_grid(self):
        for spec, graph in class_grid([6, 7], [1, 2], ['0.5', '0.75']):
            with self.subTest(spec=spec):
                frontier, _ = solve_frontier(graph)
                self.assertEqual(frontier.as_tuples(), exact_frontier(graph).as_tuples())

    def test_cut_soundness_and_filtering(self):
        filtered = 0
        for spec, graph in class_grid([8], [1, 2, 3], ['0.75', '1']):
            with self.subTest(spec=spec):
                with_cut, report = solve_frontier(graph, cut_enabled=True)
                without_cut, _ = solve_frontier(graph, cut_enabled=False)
                self.assertEqual(with_cut.as_tuples(), without_cut.as_tuples())
                filtered += report.cut_filtered_edges
        self.assertGreater(filtered, 0)

    def test_deterministic(self):
        graph = generate(InstanceSpec(family='incomplete', n=9, density='0.5', seed=4))
        first, _ = solve_frontier(graph)
        second, _ = solve_frontier(graph)
        self.assertEqual(first.as_tuples(), second.as_tuples())
        self.assertEqual([e.tree for e in first], [e.tree for e in second])

    def test_time_out_keeps_proven_points(self):
        expired = SubproblemResult(
            status=SubproblemStatus.TIME_LIMIT, tree=None, point=None, objective=None,
            nodes=5, cut_filtered_edges=0, elapsed_ms=1.0,
        )
        with mock.patch('solver.frontier.solve_subproblem', return_value=expired):
            frontier, report = solve_frontier(example_graph())
        self.assertTrue(report.timed_out)
        self.assertEqual(frontier.as_tuples(), [(26, 21)])
        self.assertEqual(report.bnb_nodes, 5)

    def test_invalid_time_limit(self):
        with self.assertRaises(ValueError):
            deadline_after(0)
        self.assertIsNone(deadline_after(None))

    @unittest.skipUnless(FULL_ACCEPTANCE, "set CABLETRENCH_FULL_ACCEPTANCE=1 for the full sweep")
    def test_matches_oracle_on_full_grid(self):
        densities = ['0.125', '0.25', '0.5', '0.75']
        for spec, graph in class_grid([6, 7, 8], range(1, 21), densities):
            with self.subTest(spec=spec):
                frontier, _ = solve_frontier(graph)
                self.assertEqual(frontier.as_tuples(), exact_frontier(graph).as_tuples())

    @unittest.skipUnless(FULL_ACCEPTANCE, "set CABLETRENCH_FULL_ACCEPTANCE=1 for the full sweep")
    def test_gctp_frontier_grows_with_density(self):
        means = [mean_frontier_size(d, 'gctp') for d in ('0.25', '0.5', '0.75', '1')]
        self.assertEqual(means, sorted(means))
        self.assertGreater(means[-1], means[0])

    # Measured means for d = 0.25, 0.5, 0.75, 1 are 4.65, 6.5, 5.4, 5.4;
    # sparse CTP instances have few spanning trees and small frontiers.
    @unittest.expectedFailure
    @unittest.skipUnless(FULL_ACCEPTANCE, "set CABLETRENCH_FULL_ACCEPTANCE=1 for the full sweep")
    def test_ctp_frontier_shrinks_with_density(self):
        means = [mean_frontier_size(d, 'ctp') for d in ('0.25', '0.5', '0.75', '1')]
        self.assertEqual(means, sorted(means, reverse=True))

    def test_zero_trench_cost_ends_the_loop(self):
        graph = validate_graph([(1, 2, 5, 0), (2, 3, 1, 0), (1, 3, 1, 5)], n=3)
        frontier, report = solve_frontier(graph)
        self.assertEqual(frontier.as_tuples(), [(3, 5), (11, 0)])
        self.assertEqual(frontier.as_tuples(), exact_frontier(graph).as_tuples())
        self.assertEqual(report.subproblems_solved, 1)

    @unittest.skipUnless(FULL_ACCEPTANCE, "set CABLETRENCH_FULL_ACCEPTANCE=1 for the full sweep")
    def test_cut_soundness_on_fifty_instances(self):
        specs = [InstanceSpec(family='incomplete', n=n, density='0.5', seed=seed)
                 for n in range(9, 13) for seed in range(1, 6)]
        specs += [InstanceSpec(family='complete', n=n, seed=seed) for n in range(9, 13) for seed in range(1, 4)]
        specs += [InstanceSpec(family='grid', n=n, cost_mode='gctp', seed=seed)
                  for n in range(9, 13) for seed in range(1, 4)]
        specs += [InstanceSpec(family='location', n=n, density='0.5', seed=seed,
                               distribution='uniform', edge_rule='min_euclidean')
                  for n in (10, 12) for seed in range(1, 4)]
        self.assertEqual(len(specs), 50)
        for spec in specs:
            with self.subTest(spec=spec):
                graph = generate(spec)
                with_cut, _ = solve_frontier(graph, cut_enabled=True)
                without_cut, _ = solve_frontier(graph, cut_enabled=False)
                self.assertEqual(with_cut.as_tuples(), without_cut.as_tuples())

    @unittest.skipUnless(FULL_ACCEPTANCE, "set CABLETRENCH_FULL_ACCEPTANCE=1 for the full sweep")
    def test_incomplete_twenty_vertices_within_a_minute(self):
        for seed in range(1, 4):
            with self.subTest(seed=seed):
                graph = generate(InstanceSpec(family='incomplete', n=20, density='0.5', seed=seed))
                frontier, report = solve_frontier(graph, time_limit=60)
                self.assertFalse(report.timed_out)
                self.assertGreater(len(frontier), 0)


class LexminTauGammaTests(SimpleTestCase):

    def test_example(self):
        graph = example_graph()
        tree, point = lexmin_tau_gamma(graph)
        self.assertEqual(point.as_tuple(), (31, 15))
        self.assertEqual(tree, example_trees(graph)['T3'])

    def test_windmill_one_blade(self):
        _, point = lexmin_tau_gamma(generate(InstanceSpec(family='windmill', blades=1)))
        self.assertEqual(point.as_tuple(), (8, 5))

    def test_matches_last_frontier_point(self):
        graph = generate(InstanceSpec(family='grid', n=9, seed=3, cost_mode='gctp'))
        frontier, _ = solve_frontier(graph)
        _, point = lexmin_tau_gamma(graph)
        self.assertEqual(point, frontier.objective_points()[-1])

    def test_consistency_guard(self):
        graph = example_graph()
        inconsistent = SubproblemResult(
            status=SubproblemStatus.OPTIMAL, tree=example_trees(graph)['T1'],
            point=mock.Mock(c_tau=21), objective=26, nodes=1, cut_filtered_edges=0, elapsed_ms=0.1,
        )
        with mock.patch('solver.frontier.solve_subproblem', return_value=inconsistent):
            with self.assertRaises(InconsistentLexminError):
                lexmin_tau_gamma(graph)
