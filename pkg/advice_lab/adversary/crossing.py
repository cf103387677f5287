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

"""Crossed double covers H_x and the vector that hides a copy.

S lists the edges of H outside T sorted by endpoints.  For a nonzero
vector x over S, H_x holds two copies of H.  Tree edges stay inside
each copy; an edge e_k of S stays inside each copy when x_k = 0 and is
crossed between the copies when x_k = 1.  Every node keeps the ports of
its original.

An agent walking W in H_x is in the copy given by the parity of the
crossed edges it used, a linear function of x.  When v_j is visited at
most |S| times, some x puts all those visits in one copy and leaves the
other copy of v_j unvisited.
"""

import dataclasses
from typing import Dict, List, Optional, Sequence, Tuple  # noqa: H301

from oslo_log import log as logging

from advice_lab.adversary import gf2
from advice_lab.adversary import roles
from advice_lab import exception
from advice_lab.graph import generators
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class CrossingVector:
    """Nonzero bit vector indexed by the edges of S."""
    bits: Tuple[int, ...]

    def __post_init__(self):
        if not any(self.bits):
            raise exception.ZeroVector(length=len(self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise exception.InvalidParameterValue(
                err=_('Crossing vector entries must be 0 or 1.'))

    @classmethod
    def from_int(cls, value: int, length: int) -> 'CrossingVector':
        return cls(tuple((value >> k) & 1 for k in range(length)))

    @classmethod
    def ones(cls, length: int) -> 'CrossingVector':
        return cls((1,) * length)

    def as_int(self) -> int:
        return sum(bit << k for k, bit in enumerate(self.bits))

    def first_crossed(self) -> int:
        return self.bits.index(1)

    def __len__(self):
        return len(self.bits)


@dataclasses.dataclass(frozen=True)
class HiddenCopy:
    """A vector and the copy of the target it leaves unvisited."""
    x: CrossingVector
    copy: int


def standard_h(m: int) -> portgraph.PortGraph:
    """H = K_{m/2,m/2} for even m >= 4."""
    if m < 4 or m % 2:
        raise exception.InvalidParameterValue(
            err=_('H needs an even m >= 4 (received %s).') % m)
    return generators.gen_complete_bipartite(m // 2)


def hamiltonian_path_tree(h: portgraph.PortGraph
                          ) -> Tuple[portgraph.EdgeRecord, ...]:
    """Edges v_i v_{i+1} of the path through nodes 0..m-1 in id order."""
    return tuple(portgraph.EdgeRecord(i, h.port_to(i, i + 1), i + 1,
                                      h.port_to(i + 1, i))
                 for i in range(h.node_count - 1))


def canonical_nontree_edges(h: portgraph.PortGraph,
                            tree: Sequence[portgraph.EdgeRecord]
                            ) -> List[portgraph.EdgeRecord]:
    """S: edges of H outside tree, sorted by (min, max) endpoints."""
    tree_pairs = set(e.endpoints() for e in tree)
    return [e for e in h.edges() if e.endpoints() not in tree_pairs]


def nontree_edge_count(m: int) -> int:
    """|S| for K_{m/2,m/2} and its hamiltonian path: m^2/4 - m + 1."""
    return m * m // 4 - m + 1


def crossed_pairs(h: portgraph.PortGraph,
                  tree: Sequence[portgraph.EdgeRecord],
                  x: CrossingVector) -> Dict[Tuple[int, int], int]:
    """Endpoint pair -> index in S, for the edges x crosses."""
    edges = canonical_nontree_edges(h, tree)
    if len(x) != len(edges):
        raise exception.InvalidParameterValue(
            err=_('Crossing vector has %(got)d entries, S has %(want)d.') %
            {'got': len(x), 'want': len(edges)})
    return {e.endpoints(): k for k, e in enumerate(edges) if x.bits[k]}


def double_cover_rows(h: portgraph.PortGraph,
                      tree: Sequence[portgraph.EdgeRecord],
                      x: CrossingVector,
                      base: int) -> List[List[Tuple[int, int]]]:
    """Port rows of the 2m nodes of H_x, ids starting at base."""
    m = h.node_count
    crossed = crossed_pairs(h, tree, x)
    rows = []
    for copy in (0, 1):
        for a in h.nodes():
            row = []
            for b, q in h.adjacency[a]:
                pair = (min(a, b), max(a, b))
                other = 1 - copy if pair in crossed else copy
                row.append((base + other * m + b, q))
            rows.append(row)
    return rows


def build_Hx(h: portgraph.PortGraph, x: CrossingVector,
             tree: Optional[Sequence[portgraph.EdgeRecord]] = None
             ) -> roles.GadgetGraph:
    """H_x alone: v'_j is node j and v''_j is node m + j."""
    tree = tuple(tree) if tree is not None else hamiltonian_path_tree(h)
    graph = portgraph.validate_adjacency(double_cover_rows(h, tree, x, 0))
    return roles.GadgetGraph(graph=graph, m=h.node_count, gadget_count=1,
                             cycle_nodes=(), gateways=(0,), hosted=(None,),
                             vectors=(x,), gateway_port=None,
                             exit_port=None, h=h, tree=tree)


def visit_forms(h: portgraph.PortGraph,
                tree: Sequence[portgraph.EdgeRecord],
                walk: Sequence[int], target: int) -> List[int]:
    """Parity forms of the visits of walk (from node 0) to target.

    Form bit k is set when edge e_k of S was used an odd number of times
    before the visit.  The start counts as a visit with form 0.
    """
    index = {e.endpoints(): k
             for k, e in enumerate(canonical_nontree_edges(h, tree))}
    node, form = 0, 0
    forms = [form] if target == 0 else []
    for step, port in enumerate(walk):
        degree = len(h.adjacency[node])
        if not 0 <= port < degree:
            raise exception.InfeasibleWalk(port=port, step=step,
                                           degree=degree)
        other, _q = h.adjacency[node][port]
        k = index.get((min(node, other), max(node, other)))
        if k is not None:
            form ^= 1 << k
        node = other
        if node == target:
            forms.append(form)
    return forms


def solve_crossing_vector(walk: Sequence[int], target: int,
                          h: portgraph.PortGraph,
                          tree: Optional[Sequence[portgraph.EdgeRecord]]
                          = None) -> Optional[HiddenCopy]:
    """Nonzero x leaving one copy of target unvisited by walk in H_x.

    The walk starts at v'_1.  Returns None when no such vector exists,
    which needs more than |S| visits to target.
    """
    tree = tuple(tree) if tree is not None else hamiltonian_path_tree(h)
    length = len(canonical_nontree_edges(h, tree))
    forms = visit_forms(h, tree, walk, target)
    if not forms:
        return HiddenCopy(CrossingVector.from_int(1, length), 0)

    # Every visit in the double-primed copy leaves v'_target alone.
    solution = gf2.solve(forms, [1] * len(forms), length)
    if solution:
        return HiddenCopy(CrossingVector.from_int(solution, length), 0)

    # Otherwise keep every visit in the primed copy.
    kernel = gf2.kernel_basis(forms, length)
    if kernel:
        return HiddenCopy(CrossingVector.from_int(kernel[0], length), 1)
    LOG.debug('No crossing vector hides node %(node)d from %(visits)d '
              'visits', {'node': target, 'visits': len(forms)})
    return None
