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

"""Pendant families G_x and G'_x over a regular graph G.

G has m nodes and degree k.  For every node v_i a new node v'_i is
hung off port x_i of v_i; the edge that used that port moves to the new
port k.  The pendant reaches back through its port 0.
"""

import random
from typing import List, Sequence  # noqa: H301

from oslo_log import log as logging

from advice_lab import exception
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)

PENDANT_PORT = 0
PAIR_PORT = 1


def gx_family_size(n: int) -> int:
    """(n/4)^(n/2) choices of x for a G_x with n nodes."""
    return (n // 4) ** (n // 2)


def pendant_node(m: int, i: int) -> int:
    return m + i


def random_pendant_ports(graph: portgraph.PortGraph,
                         seed: int) -> List[int]:
    rng = random.Random(seed)
    return [rng.randrange(graph.degree(v)) for v in graph.nodes()]


def _regular_degree(graph: portgraph.PortGraph) -> int:
    degrees = set(len(row) for row in graph.adjacency)
    if len(degrees) != 1:
        raise exception.InvalidParameterValue(
            err=_('G must be regular (degrees %s).') % sorted(degrees))
    return degrees.pop()


def _pendant_rows(graph, x):
    m = graph.node_count
    k = _regular_degree(graph)
    x = tuple(x)
    if len(x) != m or not all(0 <= port < k for port in x):
        raise exception.InvalidParameterValue(
            err=_('x must hold %(m)d ports below %(k)d (received '
                  '%(x)s).') % {'m': m, 'k': k, 'x': x})

    def moved(node, port):
        return k if port == x[node] else port

    rows = [[None] * (k + 1) for _v in range(m)]
    for u, row in enumerate(graph.adjacency):
        for p, (v, q) in enumerate(row):
            rows[u][moved(u, p)] = (v, moved(v, q))
        rows[u][x[u]] = (pendant_node(m, u), PENDANT_PORT)
    rows.extend([(i, x[i])] for i in range(m))
    return rows


def build_Gx(graph: portgraph.PortGraph,
             x: Sequence[int]) -> portgraph.PortGraph:
    return portgraph.validate_adjacency(_pendant_rows(graph, x))


def build_Gx_prime(graph: portgraph.PortGraph,
                   x: Sequence[int]) -> portgraph.PortGraph:
    """G_x plus the edges v'_{2i-1} v'_{2i}, port 1 at both ends."""
    m = graph.node_count
    if m % 2:
        raise exception.InvalidParameterValue(
            err=_('G needs an even number of nodes (received %s).') % m)
    rows = _pendant_rows(graph, x)
    for i in range(0, m, 2):
        left, right = pendant_node(m, i), pendant_node(m, i + 1)
        rows[left].append((right, PAIR_PORT))
        rows[right].append((left, PAIR_PORT))
    return portgraph.validate_adjacency(rows)


def gx_prime_cycle(m: int) -> List[int]:
    """v_1 v'_1 v'_2 v_2 v_3 v'_3 v'_4 v_4 ... through G'_x.

    Needs consecutive nodes v_{2i}, v_{2i+1} of G adjacent, as in the
    hamiltonian order of K_{k,k}.
    """
    cycle = []
    for i in range(0, m, 2):
        cycle.extend([i, pendant_node(m, i), pendant_node(m, i + 1), i + 1])
    return cycle
