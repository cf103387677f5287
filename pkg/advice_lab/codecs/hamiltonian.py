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

"""Hamiltonian cycle advice.

Wire layout: the node count n in HEADER_BITS bits followed by n-1 ports
of port_width(n) bits, the ports taken along the cycle from the start.
"""

import dataclasses
from typing import Sequence, Tuple  # noqa: H301

from advice_lab.codecs import bits as advice_bits
from advice_lab.codecs import HEADER_BITS
from advice_lab import exception
from advice_lab.graph import portgraph
from advice_lab.i18n import _
from advice_lab import utils


@dataclasses.dataclass(frozen=True)
class HamiltonianAdvice:
    node_count: int
    ports: Tuple[int, ...]

    def to_bits(self) -> advice_bits.BitString:
        width = utils.port_width(self.node_count)
        return advice_bits.BitString.concat(
            [advice_bits.BitString.from_int(self.node_count, HEADER_BITS)] +
            [advice_bits.BitString.from_int(p, width) for p in self.ports])


def check_hamiltonian_cycle(graph: portgraph.PortGraph,
                            cycle: Sequence[int]) -> Tuple[int, ...]:
    """Return cycle as a tuple or raise NotHamiltonianCycle.

    Graphs with fewer than three nodes accept their only node ordering
    that follows an edge.
    """
    cycle = tuple(cycle)
    if sorted(cycle) != list(graph.nodes()):
        raise exception.NotHamiltonianCycle(
            reason=_('it must list each of the %d nodes once') %
            graph.node_count)
    closing = len(cycle) >= 3
    for index in range(len(cycle) - (0 if closing else 1)):
        u, v = cycle[index], cycle[(index + 1) % len(cycle)]
        if not graph.has_edge(u, v):
            raise exception.NotHamiltonianCycle(
                reason=_('nodes %(u)s and %(v)s are not adjacent') %
                {'u': u, 'v': v})
    return cycle


def encode_hamiltonian_advice(graph: portgraph.PortGraph,
                              cycle: Sequence[int],
                              start: int) -> HamiltonianAdvice:
    """Ports leading along cycle from start, without the closing edge."""
    graph.degree(start)
    cycle = check_hamiltonian_cycle(graph, cycle)
    offset = cycle.index(start)
    order = cycle[offset:] + cycle[:offset]
    return HamiltonianAdvice(
        graph.node_count,
        tuple(graph.port_to(u, v) for u, v in zip(order, order[1:])))


def decode_hamiltonian_advice(
        advice: advice_bits.BitString) -> HamiltonianAdvice:
    reader = advice_bits.BitReader(advice)
    node_count = reader.read_int(HEADER_BITS)
    if node_count < 1:
        raise exception.InvalidAdvice(reason=_('cycle has no nodes'))
    width = utils.port_width(node_count)
    ports = tuple(reader.read_int(width) for _i in range(node_count - 1))
    reader.ensure_consumed()
    return HamiltonianAdvice(node_count, ports)
