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

import ddt

from advice_lab.agent import simulator
from advice_lab.codecs import hamiltonian
from advice_lab import exception
from advice_lab.graph import generators
from advice_lab.graph import portgraph
from advice_lab.tests import base


@ddt.ddt
class HamiltonianAdviceTestCase(base.TestCase):

    @ddt.data(0, 1, 2, 3)
    def test_ring(self, start):
        advice = hamiltonian.encode_hamiltonian_advice(
            generators.gen_oriented_ring(4), range(4), start)
        self.assertEqual((0, 0, 0), advice.ports)

    def test_bipartite_replay(self):
        graph = generators.gen_complete_bipartite(2)
        advice = hamiltonian.encode_hamiltonian_advice(
            graph, generators.bipartite_hamiltonian_order(2), 0)
        self.assertEqual((0, 1, 0), advice.ports)
        outcome = simulator.run_port_sequence(graph, 0, advice.ports)
        self.assertTrue(outcome.completed)
        self.assertEqual(3, outcome.steps_used)

    def test_two_nodes(self):
        graph = portgraph.validate_graph([(0, 0, 1, 0)], 2)
        advice = hamiltonian.encode_hamiltonian_advice(graph, (0, 1), 1)
        self.assertEqual((0,), advice.ports)

    def test_wire_roundtrip(self):
        graph = generators.gen_complete_bipartite(4)
        advice = hamiltonian.encode_hamiltonian_advice(
            graph, generators.bipartite_hamiltonian_order(4), 5)
        wire = advice.to_bits()
        self.assertEqual(32 + 7 * 3, len(wire))
        self.assertEqual(advice, hamiltonian.decode_hamiltonian_advice(wire))

    @ddt.data((0, 2, 1, 3), (0, 1, 2), (0, 1, 2, 3, 0))
    def test_not_a_cycle(self, cycle):
        self.assertRaises(exception.NotHamiltonianCycle,
                          hamiltonian.encode_hamiltonian_advice,
                          generators.gen_oriented_ring(4), cycle, 0)

    def test_unknown_start(self):
        self.assertRaises(exception.NodeOutOfRange,
                          hamiltonian.encode_hamiltonian_advice,
                          generators.gen_oriented_ring(4), range(4), 7)

    def test_truncated(self):
        wire = hamiltonian.encode_hamiltonian_advice(
            generators.gen_oriented_ring(5), range(5), 0).to_bits()
        self.assertRaises(exception.TruncatedPorts,
                          hamiltonian.decode_hamiltonian_advice, wire[:-2])
