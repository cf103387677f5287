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

"""Exploration with hamiltonian cycle advice: n-1 moves."""

import itertools
from typing import List, Optional, Sequence  # noqa: H301

from oslo_log import log as logging

from advice_lab.agent import simulator
from advice_lab.codecs import hamiltonian as ham_codec
from advice_lab import exception
from advice_lab.explorers import base
from advice_lab.explorers import INSTANCE
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)

DEFAULT_SEARCH_LIMIT = 1000000


def find_hamiltonian_cycle(graph: portgraph.PortGraph,
                           limit: int = DEFAULT_SEARCH_LIMIT
                           ) -> Optional[List[int]]:
    """Backtracking search for a hamiltonian cycle through node 0.

    Returns None when none exists.  Gives up with InvalidParameterValue
    after limit extensions.
    """
    n = graph.node_count
    if n < 3:
        return list(range(n)) if n == 1 or graph.has_edge(0, 1) else None
    path = [0]
    on_path = bytearray(n)
    on_path[0] = 1
    stack = [iter(sorted(v for v, _q in graph.adjacency[0]))]
    counter = itertools.count()
    while stack:
        if next(counter) > limit:
            raise exception.InvalidParameterValue(
                err=_('Hamiltonian cycle search gave up after %d '
                      'extensions.') % limit)
        for v in stack[-1]:
            if not on_path[v]:
                path.append(v)
                on_path[v] = 1
                if len(path) == n:
                    if graph.has_edge(v, 0):
                        return path
                    path.pop()
                    on_path[v] = 0
                    continue
                stack.append(iter(sorted(w for w, _q in graph.adjacency[v])))
                break
        else:
            stack.pop()
            on_path[path.pop()] = 0
    return None


class HamiltonianExplorer(base.ExplorerBase):
    """Follows the advised ports; cycle is used by the oracle only."""

    exact_time = True

    def __init__(self, oracle=INSTANCE, cycle: Sequence[int] = None,
                 *args, **kwargs):
        super(HamiltonianExplorer, self).__init__(oracle, *args, **kwargs)
        self._cycle = cycle

    def walk(self, advice, observation):
        decoded = ham_codec.decode_hamiltonian_advice(advice)
        for port in decoded.ports:
            if port >= observation.degree:
                LOG.warning('Advised port %(port)d missing at a node of '
                            'degree %(degree)d',
                            {'port': port, 'degree': observation.degree})
                yield simulator.ABORT
                return
            observation = yield port
        yield simulator.STOP

    def advise(self, graph, start):
        cycle = self._cycle
        if cycle is None:
            cycle = find_hamiltonian_cycle(graph)
            if cycle is None:
                raise exception.NotHamiltonianCycle(
                    reason=_('the graph has no hamiltonian cycle'))
        return ham_codec.encode_hamiltonian_advice(graph, cycle,
                                                   start).to_bits()

    def time_bound(self, node_count, advice):
        return node_count - 1


def hamiltonian_explore(advice, observation):
    """Strategy following hamiltonian advice for n-1 moves."""
    return HamiltonianExplorer().walk(advice, observation)
