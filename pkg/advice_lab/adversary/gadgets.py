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

"""Main cycle graphs with one crossed double cover per cycle node."""

import math
from typing import Mapping, Optional, Sequence, Tuple  # noqa: H301

from oslo_log import log as logging

from advice_lab.adversary import crossing
from advice_lab.adversary import GATEWAY_PORT
from advice_lab.adversary import roles
from advice_lab.codecs import tree as tree_codec
from advice_lab import exception
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)


def ghat_node_count(m: int) -> int:
    return m * (2 * m + 1)


def ghatz_node_count(m: int, p: int) -> int:
    return p * (2 * m + 1)


def ghatz_family_size(m: int, p: int) -> int:
    """Number of index sets Z of size p drawn from m nodes."""
    return math.comb(m, p)


def cycle_gateway_port(p: int) -> int:
    """Port toward the gadget at a main cycle node of a p-node cycle."""
    return min(p - 1, GATEWAY_PORT)


def default_xmap(h: portgraph.PortGraph,
                 tree: Optional[Sequence[portgraph.EdgeRecord]] = None
                 ) -> dict:
    tree = tuple(tree) if tree is not None else \
        crossing.hamiltonian_path_tree(h)
    length = len(crossing.canonical_nontree_edges(h, tree))
    return {v: crossing.CrossingVector.ones(length) for v in h.nodes()}


def _cycle_rows(p: int):
    if p == 1:
        return [[]]
    if p == 2:
        return [[(1, 0)], [(0, 0)]]
    return [[((i + 1) % p, 1), ((i - 1) % p, 0)] for i in range(p)]


def build_GhatZ(h: portgraph.PortGraph, z: Sequence[int],
                xmap: Mapping[int, crossing.CrossingVector],
                tree: Optional[Sequence[portgraph.EdgeRecord]] = None
                ) -> roles.GadgetGraph:
    """Cycle y_1..y_p with gadget H_{x(v_{z_i})} hanging off y_i.

    Main cycle ports: 0 toward y_{i+1} and 1 toward y_{i-1} (a lone
    edge uses port 0, a single node has none), then the gateway port
    toward v'_1 of the gadget.  The gateway reaches back through port
    deg_H(v_1).
    """
    m = h.node_count
    z = tuple(z)
    if not z or len(set(z)) != len(z) or list(z) != sorted(z) or \
            not all(0 <= v < m for v in z):
        raise exception.InvalidParameterValue(
            err=_('Z must be a nonempty increasing list of nodes of H '
                  '(received %s).') % (z,))
    missing = [v for v in z if v not in xmap]
    if missing:
        raise exception.InvalidParameterValue(
            err=_('No crossing vector for nodes %s.') % missing)
    tree = tuple(tree) if tree is not None else \
        crossing.hamiltonian_path_tree(h)

    p = len(z)
    gateway_port = cycle_gateway_port(p)
    exit_port = h.degree(0)
    rows = _cycle_rows(p)
    gateways = []
    for i, v in enumerate(z):
        base = p + 2 * m * i
        gadget = crossing.double_cover_rows(h, tree, xmap[v], base)
        rows[i].append((base, exit_port))
        gadget[0].append((i, gateway_port))
        rows.extend(gadget)
        gateways.append(base)
    graph = portgraph.validate_adjacency(rows)
    LOG.debug('Built main cycle graph %(graph)r over Z=%(z)s',
              {'graph': graph, 'z': z})
    return roles.GadgetGraph(graph=graph, m=m, gadget_count=p,
                             cycle_nodes=tuple(range(p)),
                             gateways=tuple(gateways), hosted=z,
                             vectors=tuple(xmap[v] for v in z),
                             gateway_port=gateway_port, exit_port=exit_port,
                             h=h, tree=tree)


def build_Ghat(h: portgraph.PortGraph,
               xmap: Optional[Mapping[int, crossing.CrossingVector]] = None,
               tree: Optional[Sequence[portgraph.EdgeRecord]] = None
               ) -> roles.GadgetGraph:
    """Main cycle of m nodes, gadget i carrying x(v_i)."""
    if xmap is None:
        xmap = default_xmap(h, tree)
    return build_GhatZ(h, range(h.node_count), xmap, tree)


def gadget_spanning_tree(gadget_graph: roles.GadgetGraph
                         ) -> Tuple[portgraph.EdgeRecord, ...]:
    """Spanning tree of maximum degree 3.

    The main cycle minus its closing edge, the gateway edges, T inside
    both copies of every gadget and, per gadget, the crossed copy of its
    first crossed edge.
    """
    graph = gadget_graph.graph
    h_tree = gadget_graph.tree
    p = len(gadget_graph.cycle_nodes)
    edges = []
    for i in range(p - 1):
        edges.append(portgraph.EdgeRecord(i, graph.port_to(i, i + 1), i + 1,
                                          graph.port_to(i + 1, i)))
    for i, gateway in enumerate(gadget_graph.gateways):
        if p:
            edges.append(portgraph.EdgeRecord(
                i, gadget_graph.gateway_port, gateway,
                gadget_graph.exit_port))
        for copy in (0, 1):
            for a, pa, b, pb in h_tree:
                edges.append(portgraph.EdgeRecord(
                    gadget_graph.copy_node(i, copy, a), pa,
                    gadget_graph.copy_node(i, copy, b), pb))
        vector = gadget_graph.vectors[i]
        first = vector.first_crossed()
        a, pa, b, pb = crossing.canonical_nontree_edges(
            gadget_graph.h, h_tree)[first]
        edges.append(portgraph.EdgeRecord(gadget_graph.copy_node(i, 0, a), pa,
                                          gadget_graph.copy_node(i, 1, b), pb))
    return tree_codec.check_spanning_tree(graph, edges)
