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

"""Graph families used by the explorers and the adversary constructions."""

import math
import random
from typing import List

import networkx as nx
from oslo_log import log as logging

from advice_lab import exception
from advice_lab.graph import CLOCKWISE
from advice_lab.graph import COUNTER_CLOCKWISE
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)


def bipartite_left(i: int) -> int:
    return 2 * i


def bipartite_right(i: int) -> int:
    return 2 * i + 1


def bipartite_hamiltonian_order(k: int) -> List[int]:
    """a_0, b_0, a_1, b_1, ..., b_{k-1}: a hamiltonian cycle of K_{k,k}."""
    return list(range(2 * k))


def gen_complete_bipartite(k: int) -> portgraph.PortGraph:
    """K_{k,k} with a_i = 2i, b_i = 2i+1.

    The edge a_i - b_l carries port (l - i) mod k at both ends, so port 0
    joins a_i to b_i and port k-1 joins b_i to a_{i+1}.
    """
    if k < 2:
        raise exception.InvalidParameterValue(
            err=_('K_{k,k} needs k >= 2 (received %s).') % k)
    edges = []
    for i in range(k):
        for l in range(k):
            port = (l - i) % k
            edges.append((bipartite_left(i), port, bipartite_right(l), port))
    return portgraph.validate_graph(edges, 2 * k)


def gen_oriented_ring(n: int) -> portgraph.PortGraph:
    """Ring of n >= 3 nodes; port 0 leads to i+1, port 1 to i-1."""
    if n < 3:
        raise exception.InvalidParameterValue(
            err=_('An oriented ring needs n >= 3 (received %s).') % n)
    edges = [(i, CLOCKWISE, (i + 1) % n, COUNTER_CLOCKWISE) for i in range(n)]
    return portgraph.validate_graph(edges, n)


def gen_random_connected(n: int, edge_density: float,
                         seed: int) -> portgraph.PortGraph:
    """Seeded random connected graph with shuffled port numbering.

    The edge count is ceil(edge_density * n(n-1)/2) and must lie between
    n-1 and n(n-1)/2.
    """
    if n < 1:
        raise exception.InvalidParameterValue(
            err=_('A graph needs at least one node (received %s).') % n)
    pairs = n * (n - 1) // 2
    edge_total = math.ceil(edge_density * pairs)
    if not n - 1 <= edge_total <= pairs:
        raise exception.InfeasibleDensity(density=edge_density,
                                          edges=edge_total, node_count=n,
                                          low=n - 1, high=pairs)

    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    chosen = set()
    for index in range(1, n):
        u, v = order[index], order[rng.randrange(index)]
        chosen.add((min(u, v), max(u, v)))
    remaining = sorted(set((u, v) for u in range(n)
                           for v in range(u + 1, n)) - chosen)
    chosen.update(rng.sample(remaining, edge_total - len(chosen)))

    neighbors: List[List[int]] = [[] for _n in range(n)]
    for u, v in sorted(chosen):
        neighbors[u].append(v)
        neighbors[v].append(u)
    for row in neighbors:
        rng.shuffle(row)
    ports = [{v: p for p, v in enumerate(row)} for row in neighbors]
    adjacency = [[(v, ports[v][u]) for v in row]
                 for u, row in enumerate(neighbors)]
    graph = portgraph.validate_adjacency(adjacency)
    LOG.debug('Generated random graph %(graph)r from seed %(seed)s',
              {'graph': graph, 'seed': seed})
    return graph


def from_networkx(graph: nx.Graph) -> portgraph.PortGraph:
    """Port-number a networkx graph by increasing neighbor label."""
    labels = {node: index for index, node in enumerate(sorted(graph.nodes))}
    neighbors = [sorted(labels[w] for w in graph.neighbors(node))
                 for node in sorted(graph.nodes)]
    ports = [{v: p for p, v in enumerate(row)} for row in neighbors]
    return portgraph.validate_adjacency(
        [[(v, ports[v][u]) for v in row] for u, row in enumerate(neighbors)])
