#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import random

import ddt

from advice_lab.adversary import crossing
from advice_lab.adversary import gadgets
from advice_lab.agent import simulator
from advice_lab import exception
from advice_lab.explorers import tree
from advice_lab.graph import generators
from advice_lab.graph import portgraph
from advice_lab.tests import base


@ddt.ddt
class RunPortSequenceTestCase(base.TestCase):

    @ddt.data(0, 2, 4)
    def test_ring_walk(self, start):
        outcome = simulator.run_port_sequence(
            generators.gen_oriented_ring(5), start, (0, 0, 0, 0))
        self.assertTrue(outcome.completed)
        self.assertEqual(4, outcome.steps_used)
        self.assertIsNone(outcome.aborted_at)

    def test_infeasible_port(self):
        graph = portgraph.validate_graph([(0, 0, 1, 0)], 2)
        outcome = simulator.run_port_sequence(graph, 0, (1,))
        self.assertEqual(0, outcome.aborted_at)
        self.assertEqual(0, outcome.steps_used)
        self.assertFalse(outcome.completed)

    def test_empty_sequence(self):
        outcome = simulator.run_port_sequence(
            generators.gen_complete_bipartite(2), 0, ())
        self.assertEqual(1, outcome.visited_count)
        self.assertFalse(outcome.completed)

    def test_budget(self):
        outcome = simulator.run_port_sequence(
            generators.gen_oriented_ring(5), 0, (0,) * 10, budget=3)
        self.assertTrue(outcome.budget_exhausted)
        self.assertEqual(3, outcome.steps_used)
        self.assertEqual(4, outcome.visited_count)

    def test_trace_and_path(self):
        outcome = simulator.run_port_sequence(
            generators.gen_oriented_ring(4), 1, (0, 1, 1), keep_trace=True,
            keep_path=True)
        self.assertEqual(3, len(outcome.trace))
        self.assertEqual(simulator.TraceStep(0, 1, 2), outcome.trace[0])
        self.assertEqual((1, 2, 1, 0), outcome.path)

    def test_bad_start(self):
        self.assertRaises(exception.NodeOutOfRange,
                          simulator.run_port_sequence,
                          generators.gen_oriented_ring(3), 3, ())

    def test_negative_port(self):
        self.assertRaises(exception.InvalidParameterValue,
                          simulator.as_port_sequence, (0, -1))

    def test_relabeling_invariance(self):
        graph = generators.gen_random_connected(9, 0.4, 11)
        mapping = list(graph.nodes())
        random.Random(5).shuffle(mapping)
        relabeled = graph.relabel(mapping)
        rng = random.Random(3)
        ports = [rng.randrange(3) for _i in range(40)]
        for start in graph.nodes():
            self.assertEqual(
                simulator.run_port_sequence(graph, start, ports,
                                            keep_trace=True),
                simulator.run_port_sequence(relabeled, mapping[start], ports,
                                            keep_trace=True))

    def test_cycle_starts_see_same_trace(self):
        ghat = gadgets.build_Ghat(crossing.standard_h(4))
        ports = (2, 0, 1, 2, 2, 1, 0)
        traces = set()
        for y in ghat.cycle_nodes:
            outcome = simulator.run_port_sequence(ghat.graph, y, ports,
                                                  keep_trace=True)
            if outcome.aborted_at is None:
                traces.add(outcome.trace)
        self.assertLessEqual(len(traces), 1)


class RunStrategyTestCase(base.TestCase):

    def test_immediate_stop(self):
        def stop(advice, observation):
            yield simulator.STOP

        graph = portgraph.validate_graph([], 1)
        outcome = simulator.run_strategy(graph, 0, stop, budget=1)
        self.assertEqual(1, outcome.visited_count)
        self.assertTrue(outcome.completed)

    def test_sequence_strategy_matches_sequence(self):
        graph = generators.gen_random_connected(8, 0.5, 2)
        ports = (0, 1, 0, 2, 1, 0, 0, 1)
        for start in graph.nodes():
            self.assertEqual(
                simulator.run_port_sequence(graph, start, ports,
                                            keep_trace=True),
                simulator.run_strategy(
                    graph, start, simulator.sequence_strategy(ports),
                    keep_trace=True))

    def test_port_out_of_range(self):
        def bad(advice, observation):
            yield observation.degree

        exc = self.assertRaises(exception.StrategyPortOutOfRange,
                                simulator.run_strategy,
                                generators.gen_oriented_ring(3), 0, bad)
        self.assertEqual(0, exc.kwargs['step'])

    def test_abort(self):
        def give_up(advice, observation):
            yield 0
            yield simulator.ABORT

        outcome = simulator.run_strategy(generators.gen_oriented_ring(3), 0,
                                         give_up)
        self.assertEqual(1, outcome.aborted_at)
        self.assertEqual(1, outcome.steps_used)

    def test_running_off_the_end(self):
        def one_step(advice, observation):
            yield 0

        outcome = simulator.run_strategy(generators.gen_oriented_ring(3), 0,
                                         one_step)
        self.assertEqual(1, outcome.steps_used)
        self.assertIsNone(outcome.aborted_at)

    def test_budget(self):
        def forever(advice, observation):
            while True:
                yield 0

        outcome = simulator.run_strategy(generators.gen_oriented_ring(4), 0,
                                         forever, budget=6)
        self.assertTrue(outcome.budget_exhausted)
        self.assertEqual(6, outcome.steps_used)
        self.assertTrue(outcome.completed)

    def test_strategy_sees_only_degrees_and_ports(self):
        seen = []

        def record(advice, observation):
            seen.append(observation)
            observation = yield 0
            seen.append(observation)
            yield simulator.STOP

        simulator.run_strategy(generators.gen_complete_bipartite(3), 0,
                               record)
        self.assertEqual([simulator.Observation(3),
                          simulator.Observation(3, 0)], seen)

    def test_instance_tree_explorer(self):
        graph = generators.gen_random_connected(16, 0.3, 4)
        explorer = tree.InstanceTreeExplorer()
        outcome = simulator.run_strategy(graph, 5, explorer,
                                         explorer.advise(graph, 5))
        self.assertTrue(outcome.completed)
        self.assertEqual(30, outcome.steps_used)
