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

"""Tripling a graph so that a degree 3 spanning tree becomes a cycle.

Node v of G becomes the triangle v(1) v(2) v(3) with ids 3v, 3v+1 and
3v+2.  With d = deg_G(v), port 3d of v(k) leads to v(k+1) and port
3d+1 to v(k-1).  Each edge joining port p of u to port q of v becomes
the nine edges u(i) v(j), numbered p + (j-1)d(u) at u(i) and
q + (i-1)d(v) at v(j).
"""

from typing import Dict, Iterable, List, Sequence, Tuple  # noqa: H301

from oslo_log import log as logging

from advice_lab.agent import simulator
from advice_lab.codecs import tree as tree_codec
from advice_lab import exception
from advice_lab.graph import portgraph

LOG = logging.getLogger(__name__)

# Triangle copies a node's tree visits are split into, by tree degree.
_SEGMENTS = {
    1: ((0, 1, 2),),
    2: ((0,), (1, 2)),
    3: ((0,), (1,), (2,)),
}


def tripled_node(v: int, k: int) -> int:
    """Id of v(k + 1) for k in 0..2."""
    return 3 * v + k


def build_Gtilde(graph) -> portgraph.PortGraph:
    """Tripled graph of a PortGraph or of a gadget graph."""
    graph = getattr(graph, 'graph', graph)
    rows: List[List[Tuple[int, int]]] = []
    for v in graph.nodes():
        d = graph.degree(v)
        for k in range(3):
            row: List = [None] * (3 * d + 2)
            row[3 * d] = (tripled_node(v, (k + 1) % 3), 3 * d + 1)
            row[3 * d + 1] = (tripled_node(v, (k - 1) % 3), 3 * d)
            rows.append(row)
    for u, pu, v, pv in graph.edges():
        du, dv = graph.degree(u), graph.degree(v)
        for i in range(3):
            for j in range(3):
                rows[tripled_node(u, i)][pu + j * du] = (
                    tripled_node(v, j), pv + i * dv)
                rows[tripled_node(v, j)][pv + i * dv] = (
                    tripled_node(u, i), pu + j * du)
    tripled = portgraph.validate_adjacency(rows)
    LOG.debug('Tripled %(graph)r into %(tripled)r',
              {'graph': graph, 'tripled': tripled})
    return tripled


def _closed_walk(tree: Dict[int, List[Tuple[int, int, int]]],
                 root: int) -> List[int]:
    walk = [root]
    stack = [(root, None, iter(tree[root]))]
    while stack:
        node, parent, links = stack[-1]
        for _port, child, _back in links:
            if child != parent:
                walk.append(child)
                stack.append((child, node, iter(tree[child])))
                break
        else:
            stack.pop()
            if stack:
                walk.append(stack[-1][0])
    return walk


def hamiltonian_cycle_from_tree(graph,
                                tree_edges: Iterable[portgraph.EdgeRecord]
                                ) -> List[int]:
    """Hamiltonian cycle of the tripled graph from a spanning tree.

    The closed depth-first walk around the tree meets each node once per
    tree edge; those visits take the triangle copies in turn.

    :raises DegreeExceedsThree: for a tree node of degree above 3
    """
    graph = getattr(graph, 'graph', graph)
    records = tree_codec.check_spanning_tree(graph, tree_edges)
    tree = tree_codec.PortTree.from_edges(graph.nodes(), records)
    for v in graph.nodes():
        if tree.degree(v) > 3:
            raise exception.DegreeExceedsThree(node=v, degree=tree.degree(v))
    if graph.node_count == 1:
        return [tripled_node(0, k) for k in range(3)]

    links = {v: tree.links(v) for v in graph.nodes()}
    walk = _closed_walk(links, 0)[:-1]
    seen: Dict[int, int] = {}
    cycle = []
    for v in walk:
        segment = _SEGMENTS[tree.degree(v)][seen.get(v, 0)]
        seen[v] = seen.get(v, 0) + 1
        cycle.extend(tripled_node(v, k) for k in segment)
    return cycle


def project_tripled_ports(start_degree: int,
                          trace: Sequence[simulator.TraceStep]
                          ) -> Tuple[int, ...]:
    """Ports of G matching a walk in the tripled graph.

    Triangle moves are dropped and an edge port r at a node of G degree
    d becomes r mod d.  The degree seen in the tripled graph is 3d + 2.
    """
    ports = []
    degree = start_degree
    for step in trace:
        d = (degree - 2) // 3
        if step.out_port < 3 * d:
            ports.append(step.out_port % d)
        degree = step.degree
    return tuple(ports)
