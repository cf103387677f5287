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

"""The PortGraph type and its validation."""

from typing import Dict, Iterable, List, NamedTuple, Optional  # noqa: H301
from typing import Sequence, Tuple  # noqa: H301

import networkx as nx
from oslo_log import log as logging

from advice_lab import exception
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)


class EdgeRecord(NamedTuple):
    """One undirected edge: port pu at node u joined to port pv at v."""
    u: int
    pu: int
    v: int
    pv: int

    def canonical(self) -> 'EdgeRecord':
        if self.u <= self.v:
            return self
        return EdgeRecord(self.v, self.pv, self.u, self.pu)

    def endpoints(self) -> Tuple[int, int]:
        return (min(self.u, self.v), max(self.u, self.v))


class PortGraph(object):
    """Immutable simple connected graph with per-node port numbering.

    ``adjacency[u][p]`` is ``(v, q)``: port p at u leads to v, entering it
    through port q.  Instances are created by :func:`validate_graph` or
    :func:`validate_adjacency`; the constructor itself does not check.
    """

    def __init__(self, adjacency: Sequence[Sequence[Tuple[int, int]]]):
        self._adjacency = tuple(tuple((int(v), int(q)) for v, q in row)
                                for row in adjacency)
        self._port_index: Optional[Dict[Tuple[int, int], int]] = None

    @property
    def node_count(self) -> int:
        return len(self._adjacency)

    @property
    def adjacency(self) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        return self._adjacency

    def nodes(self) -> range:
        return range(len(self._adjacency))

    def degree(self, u: int) -> int:
        self._check_node(u)
        return len(self._adjacency[u])

    def max_degree(self) -> int:
        return max((len(row) for row in self._adjacency), default=0)

    def neighbor(self, u: int, p: int) -> Tuple[int, int]:
        """Other endpoint and entry port of port p at node u."""
        self._check_node(u)
        row = self._adjacency[u]
        if not 0 <= p < len(row):
            raise exception.PortOutOfRange(node=u, port=p, degree=len(row))
        return row[p]

    def port_to(self, u: int, v: int) -> int:
        """Port at u of the edge (u, v)."""
        if self._port_index is None:
            self._port_index = {(a, b): p
                                for a, row in enumerate(self._adjacency)
                                for p, (b, _q) in enumerate(row)}
        try:
            return self._port_index[(u, v)]
        except KeyError:
            raise exception.InvalidParameterValue(
                err=_('No edge between nodes %(u)s and %(v)s.') %
                {'u': u, 'v': v})

    def has_edge(self, u: int, v: int) -> bool:
        try:
            self.port_to(u, v)
        except exception.InvalidParameterValue:
            return False
        return True

    def edges(self) -> List[EdgeRecord]:
        """Every edge once, oriented u < v, sorted lexicographically."""
        return sorted(EdgeRecord(u, p, v, q)
                      for u, row in enumerate(self._adjacency)
                      for p, (v, q) in enumerate(row) if u < v)

    @property
    def edge_count(self) -> int:
        return sum(len(row) for row in self._adjacency) // 2

    def relabel(self, mapping: Sequence[int]) -> 'PortGraph':
        """Same graph with node u renamed mapping[u]; ports are kept."""
        if sorted(mapping) != list(self.nodes()):
            raise exception.InvalidParameterValue(
                err=_('Relabeling must be a permutation of the nodes.'))
        adjacency: List[Optional[tuple]] = [None] * self.node_count
        for u, row in enumerate(self._adjacency):
            adjacency[mapping[u]] = tuple((mapping[v], q) for v, q in row)
        return PortGraph(adjacency)  # type: ignore

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.nodes())
        graph.add_edges_from(e.endpoints() for e in self.edges())
        return graph

    def _check_node(self, u: int) -> None:
        if not 0 <= u < len(self._adjacency):
            raise exception.NodeOutOfRange(node=u,
                                           node_count=len(self._adjacency))

    def __eq__(self, other):
        if not isinstance(other, PortGraph):
            return NotImplemented
        return self._adjacency == other._adjacency

    def __hash__(self):
        return hash(self._adjacency)

    def __repr__(self):
        return '<PortGraph n=%d m=%d>' % (self.node_count, self.edge_count)


def _check_connected(adjacency) -> None:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(adjacency)))
    graph.add_edges_from((u, v) for u, row in enumerate(adjacency)
                         for v, _q in row if u < v)
    reached = nx.node_connected_component(graph, 0)
    if len(reached) != len(adjacency):
        missing = min(set(graph.nodes) - reached)
        raise exception.Disconnected(node=missing)


def validate_graph(edges: Iterable[Sequence[int]],
                   node_count: int) -> PortGraph:
    """Build a PortGraph from an edge list, checking every invariant.

    :param edges: records ``(u, pu, v, pv)``
    :param node_count: number of nodes n; ids are 0..n-1
    :raises InvalidGraph: naming the offending node or edge
    """
    if node_count < 1:
        raise exception.InvalidParameterValue(
            err=_('A graph needs at least one node (received %s).') %
            node_count)

    slots: List[Dict[int, Tuple[int, int]]] = [{} for _n in range(node_count)]
    pairs = set()
    for raw in edges:
        u, pu, v, pv = (int(x) for x in raw)
        for node in (u, v):
            if not 0 <= node < node_count:
                raise exception.NodeOutOfRange(node=node,
                                               node_count=node_count)
        if u == v:
            raise exception.SelfLoop(node=u, port=pu)
        for node, port in ((u, pu), (v, pv)):
            if port < 0:
                raise exception.PortGap(node=node, ports=[port],
                                        last=len(slots[node]))
            if port in slots[node]:
                raise exception.PortDuplicate(node=node, port=port)
        pair = (min(u, v), max(u, v))
        if pair in pairs:
            raise exception.ParallelEdge(u=pair[0], v=pair[1])
        pairs.add(pair)
        slots[u][pu] = (v, pv)
        slots[v][pv] = (u, pu)

    adjacency = []
    for node, ports in enumerate(slots):
        if sorted(ports) != list(range(len(ports))):
            raise exception.PortGap(node=node, ports=sorted(ports),
                                    last=len(ports) - 1)
        adjacency.append([ports[p] for p in range(len(ports))])

    _check_connected(adjacency)
    graph = PortGraph(adjacency)
    LOG.debug('Validated %r', graph)
    return graph


def validate_adjacency(
        adjacency: Sequence[Sequence[Tuple[int, int]]]) -> PortGraph:
    """Build a PortGraph from per-node port arrays, checking invariants."""
    node_count = len(adjacency)
    if node_count < 1:
        raise exception.InvalidParameterValue(
            err=_('A graph needs at least one node.'))
    for u, row in enumerate(adjacency):
        seen = set()
        for p, (v, q) in enumerate(row):
            if not 0 <= v < node_count:
                raise exception.NodeOutOfRange(node=v, node_count=node_count)
            if v == u:
                raise exception.SelfLoop(node=u, port=p)
            if v in seen:
                raise exception.ParallelEdge(u=min(u, v), v=max(u, v))
            seen.add(v)
            back = adjacency[v]
            if not 0 <= q < len(back) or tuple(back[q]) != (u, p):
                raise exception.AsymmetricEdge(node=u, port=p, neighbor=v,
                                               reverse=q)
    _check_connected(adjacency)
    return PortGraph(adjacency)
