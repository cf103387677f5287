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

"""Spanning tree advice.

Wire layout::

    node count t        HEADER_BITS bits
    shape               2(t-1) bits, 0 = move down, 1 = move up
    ports               4(t-1) fields of port_width(t) bits, one
                        (out, in) pair per tour step

The shape and ports describe the depth-first tour of the tree from its
root, children taken in increasing port order.
"""

import dataclasses
from typing import Dict, Iterable, Iterator, List, NamedTuple  # noqa: H301
from typing import Tuple

import networkx as nx
from oslo_log import log as logging

from advice_lab.codecs import bits as advice_bits
from advice_lab.codecs import HEADER_BITS
from advice_lab import exception
from advice_lab.graph import portgraph
from advice_lab.i18n import _
from advice_lab import utils

LOG = logging.getLogger(__name__)

DOWN = 0
UP = 1


class TourStep(NamedTuple):
    out_port: int
    in_port: int


@dataclasses.dataclass(frozen=True)
class SpanningTreeAdvice:
    node_count: int
    shape: advice_bits.BitString
    ports: Tuple[Tuple[int, int], ...]
    root_is_start: bool = True

    def to_bits(self) -> advice_bits.BitString:
        width = utils.port_width(self.node_count)
        fields = [advice_bits.BitString.from_int(self.node_count,
                                                 HEADER_BITS),
                  self.shape]
        fields.extend(advice_bits.BitString.from_int(port, width)
                      for pair in self.ports for port in pair)
        return advice_bits.BitString.concat(fields)


class PortTree(object):
    """A tree whose edges carry ports at both ends.

    Nodes are arbitrary integers; each lists its links as
    ``(port, neighbor, neighbor_port)`` in increasing port order.
    """

    def __init__(self, links: Dict[int, List[Tuple[int, int, int]]]):
        self._links = {node: sorted(row) for node, row in links.items()}

    @classmethod
    def from_edges(cls, nodes: Iterable[int],
                   edges: Iterable[portgraph.EdgeRecord]) -> 'PortTree':
        links: Dict[int, List[Tuple[int, int, int]]] = {n: [] for n in nodes}
        for u, pu, v, pv in edges:
            links[u].append((pu, v, pv))
            links[v].append((pv, u, pu))
        return cls(links)

    @property
    def node_count(self) -> int:
        return len(self._links)

    def nodes(self) -> List[int]:
        return sorted(self._links)

    def degree(self, node: int) -> int:
        return len(self._links[node])

    def links(self, node: int) -> List[Tuple[int, int, int]]:
        return list(self._links[node])

    def euler_tour(self, start: int) -> Tuple[TourStep, ...]:
        """Closed depth-first tour from start, 2(t-1) steps long."""
        return tuple(step for _move, step in self.walk_moves(start))

    def walk_moves(self, start: int) -> Iterator[Tuple[int, TourStep]]:
        """Yield (DOWN or UP, step) along the depth-first tour."""
        stack = [(start, None, iter(self._links[start]), None)]
        while stack:
            node, parent, links, up = stack[-1]
            for port, child, back in links:
                if child != parent:
                    yield DOWN, TourStep(port, back)
                    stack.append((child, node, iter(self._links[child]),
                                  TourStep(back, port)))
                    break
            else:
                stack.pop()
                if up is not None:
                    yield UP, up


def check_spanning_tree(graph: portgraph.PortGraph,
                        edges: Iterable[portgraph.EdgeRecord]
                        ) -> Tuple[portgraph.EdgeRecord, ...]:
    """Canonical sorted edge tuple, or NotASpanningTree."""
    records = sorted(set(portgraph.EdgeRecord(*e).canonical()
                         for e in edges))
    for record in records:
        if not (0 <= record.u < graph.node_count and
                0 <= record.v < graph.node_count and
                0 <= record.pu < graph.degree(record.u) and
                graph.neighbor(record.u, record.pu) ==
                (record.v, record.pv)):
            raise exception.NotASpanningTree(
                reason=_('%s is not an edge of the graph') % (record,))
    tree = nx.Graph()
    tree.add_nodes_from(graph.nodes())
    tree.add_edges_from(r.endpoints() for r in records)
    if not nx.is_tree(tree):
        raise exception.NotASpanningTree(
            reason=_('%(edges)d edges do not form a tree on %(n)d nodes') %
            {'edges': len(records), 'n': graph.node_count})
    return tuple(records)


def dfs_spanning_tree(graph: portgraph.PortGraph,
                      root: int) -> Tuple[portgraph.EdgeRecord, ...]:
    """Depth-first spanning tree, neighbors taken by increasing port."""
    graph.degree(root)
    seen = {root}
    edges = []
    stack = [(root, iter(enumerate(graph.adjacency[root])))]
    while stack:
        node, ports = stack[-1]
        for port, (other, back) in ports:
            if other not in seen:
                seen.add(other)
                edges.append(portgraph.EdgeRecord(node, port, other,
                                                  back).canonical())
                stack.append((other, iter(enumerate(graph.adjacency[other]))))
                break
        else:
            stack.pop()
    return tuple(sorted(edges))


def encode_spanning_tree(graph: portgraph.PortGraph,
                         tree_edges: Iterable[portgraph.EdgeRecord],
                         root: int,
                         root_is_start: bool = True) -> SpanningTreeAdvice:
    records = check_spanning_tree(graph, tree_edges)
    tree = PortTree.from_edges(graph.nodes(), records)
    moves = list(tree.walk_moves(root))
    return SpanningTreeAdvice(
        graph.node_count,
        advice_bits.BitString(move for move, _s in moves),
        tuple((s.out_port, s.in_port) for _m, s in moves),
        root_is_start)


def decode_spanning_tree(advice: advice_bits.BitString,
                         root_is_start: bool = True) -> SpanningTreeAdvice:
    reader = advice_bits.BitReader(advice)
    node_count = reader.read_int(HEADER_BITS)
    if node_count < 1:
        raise exception.InvalidAdvice(reason=_('tree has no nodes'))
    depth = 0
    shape = []
    for index in range(2 * (node_count - 1)):
        move = reader.read_bit()
        depth += 1 if move == DOWN else -1
        if depth < 0:
            raise exception.MalformedShape(position=HEADER_BITS + index)
        shape.append(move)
    if depth:
        raise exception.MalformedShape(position=reader.position)
    width = utils.port_width(node_count)
    ports = tuple((reader.read_int(width), reader.read_int(width))
                  for _s in shape)
    reader.ensure_consumed()
    decoded = SpanningTreeAdvice(node_count, advice_bits.BitString(shape),
                                 ports, root_is_start)
    build_port_tree(decoded)
    return decoded


def build_port_tree(advice: SpanningTreeAdvice) -> PortTree:
    """Abstract tree of the advice; nodes numbered in discovery order."""
    links: Dict[int, List[Tuple[int, int, int]]] = {0: []}
    path = [0]
    for move, (out_port, in_port) in zip(advice.shape, advice.ports):
        here = path[-1]
        if move == DOWN:
            child = len(links)
            if any(port == out_port for port, _n, _b in links[here]):
                raise exception.InvalidAdvice(
                    reason=_('port %(port)d reused at tree node %(node)d') %
                    {'port': out_port, 'node': here})
            links[child] = [(in_port, here, out_port)]
            links[here].append((out_port, child, in_port))
            path.append(child)
        else:
            path.pop()
            parent = path[-1]
            if (out_port, parent, in_port) not in links[here]:
                raise exception.InvalidAdvice(
                    reason=_('upward move does not retrace its edge'))
    return PortTree(links)
