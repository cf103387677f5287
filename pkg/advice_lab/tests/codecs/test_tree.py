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

from advice_lab.codecs import bits
from advice_lab.codecs import tree
from advice_lab import exception
from advice_lab.graph import generators
from advice_lab.graph import portgraph
from advice_lab.tests import base


def _edge():
    return portgraph.validate_graph([(0, 0, 1, 0)], 2)


def _path():
    return portgraph.validate_graph([(0, 0, 1, 0), (1, 1, 2, 0)], 3)


@ddt.ddt
class EncodeSpanningTreeTestCase(base.TestCase):

    def test_single_edge(self):
        graph = _edge()
        advice = tree.encode_spanning_tree(graph, graph.edges(), 0)
        self.assertEqual('01', advice.shape)
        self.assertEqual(((0, 0), (0, 0)), advice.ports)
        self.assertEqual(32 + 2 + 4, len(advice.to_bits()))

    def test_path_from_end(self):
        graph = _path()
        advice = tree.encode_spanning_tree(graph, graph.edges(), 0)
        self.assertEqual('0011', advice.shape)
        self.assertEqual(((0, 0), (1, 0), (0, 1), (0, 0)), advice.ports)

    def test_path_from_middle(self):
        graph = _path()
        advice = tree.encode_spanning_tree(graph, graph.edges(), 1)
        self.assertEqual('0101', advice.shape)

    def test_single_node(self):
        graph = portgraph.validate_graph([], 1)
        advice = tree.encode_spanning_tree(graph, [], 0)
        self.assertEqual(0, len(advice.shape))
        self.assertEqual(advice, tree.decode_spanning_tree(advice.to_bits()))

    @ddt.data((9, 0.4, 1), (12, 0.3, 8), (20, 0.2, 2))
    @ddt.unpack
    def test_roundtrip_random(self, n, density, seed):
        graph = generators.gen_random_connected(n, density, seed)
        edges = tree.dfs_spanning_tree(graph, 3)
        advice = tree.encode_spanning_tree(graph, edges, 3)
        decoded = tree.decode_spanning_tree(advice.to_bits())
        self.assertEqual(advice, decoded)
        port_tree = tree.build_port_tree(decoded)
        self.assertEqual(n, port_tree.node_count)
        self.assertEqual(2 * (n - 1), len(port_tree.euler_tour(0)))

    def test_advice_length(self):
        graph = generators.gen_random_connected(16, 0.3, 5)
        advice = tree.encode_spanning_tree(
            graph, tree.dfs_spanning_tree(graph, 0), 0)
        self.assertEqual(32 + 30 + 4 * 15 * 4, len(advice.to_bits()))

    def test_not_a_tree(self):
        ring = generators.gen_oriented_ring(4)
        self.assertRaises(exception.NotASpanningTree,
                          tree.encode_spanning_tree, ring, ring.edges(), 0)
        self.assertRaises(exception.NotASpanningTree,
                          tree.encode_spanning_tree, ring, ring.edges()[:2],
                          0)

    def test_not_an_edge(self):
        graph = _path()
        self.assertRaises(exception.NotASpanningTree,
                          tree.check_spanning_tree, graph,
                          [(0, 0, 1, 0), (0, 1, 2, 0)])


class DfsSpanningTreeTestCase(base.TestCase):

    def test_spans(self):
        graph = generators.gen_random_connected(15, 0.5, 9)
        edges = tree.dfs_spanning_tree(graph, 4)
        self.assertEqual(edges, tree.check_spanning_tree(graph, edges))

    def test_follows_smallest_port(self):
        edges = tree.dfs_spanning_tree(generators.gen_oriented_ring(5), 0)
        self.assertNotIn(portgraph.EdgeRecord(0, 1, 4, 0), edges)


class DecodeSpanningTreeTestCase(base.TestCase):

    def _bits(self, node_count, shape, ports):
        return tree.SpanningTreeAdvice(node_count, bits.BitString(shape),
                                       ports).to_bits()

    def test_shape_goes_negative(self):
        exc = self.assertRaises(
            exception.MalformedShape, tree.decode_spanning_tree,
            self._bits(3, '1100', ((0, 0),) * 4))
        self.assertEqual(32, exc.kwargs['position'])

    def test_shape_not_closed(self):
        self.assertRaises(exception.MalformedShape,
                          tree.decode_spanning_tree,
                          self._bits(3, '0001', ((0, 0),) * 4))

    def test_truncated(self):
        graph = _path()
        advice = tree.encode_spanning_tree(graph, graph.edges(), 0).to_bits()
        self.assertRaises(exception.TruncatedPorts,
                          tree.decode_spanning_tree, advice[:-1])

    def test_trailing_bits(self):
        graph = _path()
        advice = tree.encode_spanning_tree(graph, graph.edges(), 0).to_bits()
        self.assertRaises(exception.InvalidAdvice,
                          tree.decode_spanning_tree, advice + '0')

    def test_port_reused(self):
        self.assertRaises(exception.InvalidAdvice,
                          tree.decode_spanning_tree,
                          self._bits(3, '0101', ((0, 0),) * 4))

    def test_up_move_leaves_edge(self):
        self.assertRaises(exception.InvalidAdvice,
                          tree.decode_spanning_tree,
                          self._bits(2, '01', ((0, 0), (1, 0))))

    def test_empty(self):
        self.assertRaises(exception.InvalidAdvice,
                          tree.decode_spanning_tree, bits.BitString('0' * 32))


class PortTreeTestCase(base.TestCase):

    def test_euler_tour_from_leaf(self):
        graph = _path()
        port_tree = tree.PortTree.from_edges(graph.nodes(), graph.edges())
        self.assertEqual((tree.TourStep(0, 1), tree.TourStep(0, 0),
                          tree.TourStep(0, 0), tree.TourStep(1, 0)),
                         port_tree.euler_tour(2))

    def test_walk_moves_shape(self):
        graph = _path()
        port_tree = tree.PortTree.from_edges(graph.nodes(), graph.edges())
        self.assertEqual([tree.DOWN, tree.DOWN, tree.UP, tree.UP],
                         [move for move, _s in port_tree.walk_moves(0)])
