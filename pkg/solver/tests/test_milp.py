import re

from django.test import SimpleTestCase

from graphs.core import validate_graph
from graphs.tests.fixtures import example_graph
from instances.generators import InstanceSpec, generate
from solver.milp import LINE_WIDTH, export_milp

ROW = re.compile(r'^ (\w+):')


def section(text, start, stop):
    lines = text.split('\n')
    return lines[lines.index(start) + 1:lines.index(stop)]


def row_names(text):
    return [match.group(1) for line in section(text, 'Subject To', 'Bounds') if (match := ROW.match(line))]


class ExportMilpTests(SimpleTestCase):

    def test_example_rows(self):
        text = export_milp(example_graph())
        names = row_names(text)
        self.assertEqual(len(names), 9)
        self.assertEqual(names[0], 'root_flow')
        self.assertEqual(names[1:4], ['flow_2', 'flow_3', 'flow_4'])
        self.assertEqual(names[4], 'tree_size')
        self.assertEqual(sum(name.startswith('couple_') for name in names), 4)

    def test_example_rows_read_as_expected(self):
        lines = export_milp(example_graph()).split('\n')
        self.assertIn(" root_flow: x_1_2 + x_1_4 = 3", lines)
        self.assertIn(" flow_2: x_1_2 + x_3_2 - x_2_1 - x_2_3 = 1", lines)
        self.assertIn(" tree_size: y_1_2 + y_1_4 + y_2_3 + y_3_4 = 3", lines)
        self.assertIn(" couple_1_4: 3 y_1_4 - x_1_4 - x_4_1 >= 0", lines)

    def test_default_objective_uses_hybrid_scaling(self):
        lines = export_milp(example_graph()).split('\n')
        objective = lines[lines.index('Minimize') + 1]
        self.assertTrue(objective.startswith(" obj: 35 x_1_2 + 35 x_2_1 + 70 x_1_4"))

    def test_bounds_and_binaries(self):
        text = export_milp(example_graph())
        self.assertEqual(section(text, 'Bounds', 'Binaries'), [" x_2_1 = 0", " x_4_1 = 0"])
        self.assertEqual(section(text, 'Binaries', 'End'), [" y_1_2 y_1_4 y_2_3 y_3_4"])
        self.assertTrue(text.endswith("End\n"))

    def test_epsilon_and_cut_rows(self):
        text = export_milp(example_graph(), epsilon=20, cut=True)
        names = row_names(text)
        self.assertEqual(len(names), 14)
        lines = text.split('\n')
        self.assertIn(" eps_budget: 5 y_1_2 + 10 y_1_4 + 6 y_2_3 + 4 y_3_4 <= 20", lines)
        self.assertIn(" cut_1_4: 10 y_1_4 <= 11", lines)

    def test_epsilon_without_cut(self):
        self.assertEqual(len(row_names(export_milp(example_graph(), epsilon=20))), 10)

    def test_cut_needs_epsilon(self):
        with self.assertRaises(ValueError):
            export_milp(example_graph(), cut=True)

    def test_explicit_weights(self):
        lines = export_milp(example_graph(), weights=(1, 0)).split('\n')
        objective = lines[lines.index('Minimize') + 1]
        self.assertTrue(objective.startswith(" obj: 5 x_1_2 + 5 x_2_1"))
        self.assertIn("0 y_1_2", '\n'.join(lines))

    def test_single_edge(self):
        text = export_milp(validate_graph([(1, 2, 7, 7)], n=2))
        lines = text.split('\n')
        self.assertIn(" couple_1_2: 1 y_1_2 - x_1_2 - x_2_1 >= 0", lines)
        self.assertIn(" obj: 7 x_1_2 + 7 x_2_1 + 7 y_1_2", lines)
        self.assertEqual(row_names(text), ['root_flow', 'flow_2', 'tree_size', 'couple_1_2'])

    def test_long_rows_are_wrapped(self):
        graph = generate(InstanceSpec(family='complete', n=10, seed=7, cost_mode='gctp'))
        text = export_milp(graph, epsilon=400, cut=True)
        self.assertTrue(all(len(line) <= LINE_WIDTH for line in text.split('\n')))
        self.assertEqual(len(row_names(text)), 1 + 9 + 1 + 45 + 1 + 45)

    def test_byte_deterministic(self):
        graph = generate(InstanceSpec(family='grid', n=9, seed=2))
        self.assertEqual(export_milp(graph, epsilon=300, cut=True), export_milp(graph, epsilon=300, cut=True))
