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
import networkx as nx

from advice_lab import exception
from advice_lab.graph import portgraph
from advice_lab.tests import base

PATH3 = [(0, 0, 1, 0), (1, 1, 2, 0)]


@ddt.ddt
class ValidateGraphTestCase(base.TestCase):

    def test_single_edge(self):
        graph = portgraph.validate_graph([(0, 0, 1, 0)], 2)
        self.assertEqual(2, graph.node_count)
        self.assertEqual((1, 0), graph.neighbor(0, 0))
        self.assertEqual((0, 0), graph.neighbor(1, 0))

    def test_single_node(self):
        graph = portgraph.validate_graph([], 1)
        self.assertEqual(0, graph.degree(0))
        self.assertEqual([], graph.edges())

    def test_path_degrees(self):
        graph = portgraph.validate_graph(PATH3, 3)
        self.assertEqual([1, 2, 1], [graph.degree(u) for u in graph.nodes()])
        self.assertEqual(2, graph.edge_count)

    def test_port_duplicate(self):
        exc = self.assertRaises(exception.PortDuplicate,
                                portgraph.validate_graph,
                                [(0, 0, 1, 0), (0, 0, 2, 0)], 3)
        self.assertEqual(0, exc.kwargs['node'])
        self.assertEqual(0, exc.kwargs['port'])

    def test_port_gap(self):
        exc = self.assertRaises(exception.PortGap, portgraph.validate_graph,
                                [(0, 1, 1, 0)], 2)
        self.assertEqual(0, exc.kwargs['node'])

    def test_self_loop(self):
        self.assertRaises(exception.SelfLoop, portgraph.validate_graph,
                          [(0, 0, 0, 1)], 1)

    def test_parallel_edge(self):
        self.assertRaises(exception.ParallelEdge, portgraph.validate_graph,
                          [(0, 0, 1, 0), (1, 1, 0, 1)], 2)

    def test_disconnected(self):
        exc = self.assertRaises(exception.Disconnected,
                                portgraph.validate_graph,
                                [(0, 0, 1, 0)], 3)
        self.assertEqual(2, exc.kwargs['node'])

    @ddt.data((0, 5), (-1, 0))
    @ddt.unpack
    def test_node_out_of_range(self, u, v):
        self.assertRaises(exception.NodeOutOfRange, portgraph.validate_graph,
                          [(u, 0, v, 0)], 2)

    def test_empty_graph_rejected(self):
        self.assertRaises(exception.InvalidParameterValue,
                          portgraph.validate_graph, [], 0)


class ValidateAdjacencyTestCase(base.TestCase):

    def test_roundtrip_with_edges(self):
        graph = portgraph.validate_graph(PATH3, 3)
        self.assertEqual(graph, portgraph.validate_adjacency(graph.adjacency))

    def test_asymmetric(self):
        adjacency = [[(1, 0)], [(0, 1)]]
        exc = self.assertRaises(exception.AsymmetricEdge,
                                portgraph.validate_adjacency, adjacency)
        self.assertEqual(0, exc.kwargs['node'])

    def test_self_loop(self):
        self.assertRaises(exception.SelfLoop, portgraph.validate_adjacency,
                          [[(0, 0)]])

    def test_parallel(self):
        self.assertRaises(exception.ParallelEdge,
                          portgraph.validate_adjacency,
                          [[(1, 0), (1, 1)], [(0, 0), (0, 1)]])

    def test_disconnected(self):
        self.assertRaises(exception.Disconnected,
                          portgraph.validate_adjacency,
                          [[(1, 0)], [(0, 0)], []])


class PortGraphTestCase(base.TestCase):

    def setUp(self):
        super(PortGraphTestCase, self).setUp()
        self.graph = portgraph.validate_graph(PATH3, 3)

    def test_neighbor_port_out_of_range(self):
        exc = self.assertRaises(exception.PortOutOfRange,
                                self.graph.neighbor, 0, 1)
        self.assertEqual(1, exc.kwargs['degree'])

    def test_neighbor_unknown_node(self):
        self.assertRaises(exception.NodeOutOfRange, self.graph.neighbor, 3, 0)

    def test_edges_canonical(self):
        self.assertEqual([portgraph.EdgeRecord(0, 0, 1, 0),
                          portgraph.EdgeRecord(1, 1, 2, 0)],
                         self.graph.edges())

    def test_edge_record_canonical(self):
        self.assertEqual(portgraph.EdgeRecord(1, 1, 2, 0),
                         portgraph.EdgeRecord(2, 0, 1, 1).canonical())

    def test_port_to(self):
        self.assertEqual(1, self.graph.port_to(1, 2))
        self.assertTrue(self.graph.has_edge(2, 1))
        self.assertFalse(self.graph.has_edge(0, 2))
        self.assertRaises(exception.InvalidParameterValue,
                          self.graph.port_to, 0, 2)

    def test_relabel_keeps_ports(self):
        relabeled = self.graph.relabel([2, 0, 1])
        self.assertEqual((0, 0), relabeled.neighbor(2, 0))
        self.assertEqual((2, 0), relabeled.neighbor(0, 0))
        self.assertEqual((0, 1), relabeled.neighbor(1, 0))

    def test_relabel_needs_permutation(self):
        self.assertRaises(exception.InvalidParameterValue,
                          self.graph.relabel, [0, 0, 1])

    def test_to_networkx(self):
        nx_graph = self.graph.to_networkx()
        self.assertTrue(nx.is_tree(nx_graph))
        self.assertEqual(3, nx_graph.number_of_nodes())

    def test_equality_and_hash(self):
        other = portgraph.validate_graph(list(reversed(PATH3)), 3)
        self.assertEqual(self.graph, other)
        self.assertEqual(hash(self.graph), hash(other))
