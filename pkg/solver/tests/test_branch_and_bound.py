import time

from django.test import SimpleTestCase

from graphs.core import kruskal_mst, lexmin_gamma_tau, validate_graph
from graphs.tests.fixtures import example_graph, example_trees
from instances.generators import InstanceSpec, generate
from oracle.enumeration import enumerate_spanning_trees, exact_subproblem
from solver.branch_and_bound import (
    SubproblemSpec, SubproblemStatus, epsilon_cut_filter, epsilon_cut_threshold, solve_subproblem,
)
from solver.scaling import ScalingInfo, compute_scaling


class ScalingTests(SimpleTestCase):

    def test_example_scaling(self):
        scaling = compute_scaling(example_graph())
        self.assertEqual(scaling.d_lex, 6)
        self.assertEqual(scaling.scale, 7)
        self.assertEqual(scaling.weights, (7, 1))

    def test_windmill_two_blades(self):
        # lexmin(c_gamma, c_tau) is (77, 77) and the MST costs 55
        scaling = compute_scaling(generate(InstanceSpec(family='windmill', blades=2)))
        self.assertEqual(scaling.d_lex, 22)
        self.assertEqual(scaling.scale, 23)

    def test_tree_input_has_zero_spread(self):
        graph = validate_graph([(1, 2, 3, 4), (2, 3, 5, 6)], n=3)
        self.assertEqual(compute_scaling(graph), ScalingInfo(d_lex=0, scale=1))

    def test_invalid_scaling(self):
        with self.assertRaises(ValueError):
            ScalingInfo(d_lex=3, scale=3)
        with self.assertRaises(ValueError):
            ScalingInfo(d_lex=-1, scale=0)


class EpsilonCutTests(SimpleTestCase):

    def setUp(self):
        self.graph = example_graph()

    def test_all_edges_admissible_at_20(self):
        self.assertEqual(epsilon_cut_threshold(self.graph, 20), 11)
        self.assertEqual(epsilon_cut_filter(self.graph, 20), frozenset(range(4)))

    def test_heaviest_edge_filtered_at_18(self):
        self.assertEqual(epsilon_cut_threshold(self.graph, 18), 9)
        admissible = epsilon_cut_filter(self.graph, 18)
        self.assertEqual(len(admissible), 3)
        self.assertNotIn(self.graph.edge_index(1, 4), admissible)

    def test_budget_below_any_tree(self):
        self.assertEqual(epsilon_cut_filter(self.graph, 12), frozenset())

    def test_filtered_edges_never_appear_in_feasible_trees(self):
        graph = generate(InstanceSpec(family='complete', n=6, seed=4))
        trees = list(enumerate_spanning_trees(graph))
        mst_cost = kruskal_mst(graph).trench_cost
        for epsilon in range(mst_cost, mst_cost + 40, 7):
            admissible = epsilon_cut_filter(graph, epsilon)
            for tree in trees:
                if sum(graph.edges[i].trench_cost for i in tree.edge_set) <= epsilon:
                    self.assertTrue(tree.edge_set <= admissible)


class SubproblemSpecTests(SimpleTestCase):

    def test_negative_epsilon(self):
        with self.assertRaises(ValueError):
            SubproblemSpec(epsilon=-1, scaling=ScalingInfo(0, 1))

    def test_needs_weights(self):
        with self.assertRaises(ValueError):
            SubproblemSpec(epsilon=3)

    def test_zero_weights(self):
        with self.assertRaises(ValueError):
            SubproblemSpec(epsilon=3, weights=(0, 0))

    def test_explicit_weights_win(self):
        spec = SubproblemSpec(epsilon=None, scaling=ScalingInfo(6, 7), weights=(2, 3))
        self.assertEqual(spec.objective_weights, (2, 3))


class SolveSubproblemTests(SimpleTestCase):

    def setUp(self):
        self.graph = example_graph()
        self.trees = example_trees(self.graph)
        self.scaling = ScalingInfo(d_lex=6, scale=7)

    def solve(self, epsilon, cut=True):
        return solve_subproblem(self.graph, SubproblemSpec(epsilon=epsilon, scaling=self.scaling, cut_enabled=cut))

    def test_epsilon_20_gives_t2(self):
        result = self.solve(20)
        self.assertEqual(result.status, SubproblemStatus.OPTIMAL)
        self.assertEqual(result.point.as_tuple(), (29, 19))
        self.assertEqual(result.objective, 222)
        self.assertEqual(result.tree, self.trees['T2'])
        self.assertEqual(result.cut_filtered_edges, 0)

    def test_epsilon_18_gives_t3(self):
        result = self.solve(18)
        self.assertEqual(result.point.as_tuple(), (31, 15))
        self.assertEqual(result.objective, 232)
        self.assertEqual(result.tree, self.trees['T3'])
        self.assertEqual(result.cut_filtered_edges, 1)

    def test_epsilon_14_is_infeasible(self):
        for cut in (True, False):
            with self.subTest(cut=cut):
                result = self.solve(14, cut=cut)
                self.assertEqual(result.status, SubproblemStatus.INFEASIBLE)
                self.assertFalse(result.feasible)
                self.assertIsNone(result.point)

    def test_cut_does_not_change_the_optimum(self):
        for epsilon in (15, 16, 18, 19, 20, 21, 30):
            with self.subTest(epsilon=epsilon):
                self.assertEqual(self.solve(epsilon).objective, self.solve(epsilon, cut=False).objective)

    def test_weighted_sum_without_budget(self):
        result = solve_subproblem(self.graph, SubproblemSpec(epsilon=None, weights=(6, 5), cut_enabled=False))
        self.assertEqual(result.objective, 261)

    def test_expired_deadline_returns_incumbent(self):
        spec = SubproblemSpec(epsilon=20, scaling=self.scaling)
        result = solve_subproblem(self.graph, spec, deadline=time.monotonic() - 1.0)
        self.assertEqual(result.status, SubproblemStatus.TIME_LIMIT)
        self.assertTrue(result.feasible)
        self.assertLessEqual(result.point.c_tau, 20)

    def test_matches_enumeration(self):
        specs = [
            InstanceSpec(family='incomplete', n=7, density='0.5', seed=2),
            InstanceSpec(family='complete', n=6, seed=3, cost_mode='gctp'),
            InstanceSpec(family='grid', n=8, seed=5, cost_mode='gctp'),
            InstanceSpec(family='location', n=7, density='0.75', seed=1, edge_rule='min_manhattan'),
            InstanceSpec(family='windmill', blades=3),
        ]
        for spec in specs:
            graph = generate(spec)
            scaling = compute_scaling(graph)
            low = kruskal_mst(graph).trench_cost - 1
            high = lexmin_gamma_tau(graph)[1].c_tau
            for epsilon in sorted({low, low + 1, (low + high) // 2, high}):
                with self.subTest(spec=spec, epsilon=epsilon):
                    result = solve_subproblem(graph, SubproblemSpec(epsilon=epsilon, scaling=scaling))
                    expected = exact_subproblem(graph, epsilon, scaling.weights)
                    if expected is None:
                        self.assertEqual(result.status, SubproblemStatus.INFEASIBLE)
                    else:
                        self.assertEqual(result.status, SubproblemStatus.OPTIMAL)
                        self.assertEqual(result.objective, expected.objective)
