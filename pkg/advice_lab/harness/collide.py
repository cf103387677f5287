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

"""Advice collisions: many instances, few advice strings.

With k bits of advice at most 2^k different strings exist, so among
2^k + 1 instances two share their advice and the explorer cannot tell
them apart.  On oriented rings this makes a walk sized for the smaller
ring stop before it has covered the larger one.
"""

import dataclasses
from typing import Any, Callable, Optional, Sequence, Tuple  # noqa: H301

from oslo_log import log as logging

from advice_lab.agent import simulator
from advice_lab.codecs import bits as advice_bits
from advice_lab import exception
from advice_lab.explorers import base
from advice_lab.explorers import INSTANCE
from advice_lab.graph import generators
from advice_lab.i18n import _
from advice_lab import utils

LOG = logging.getLogger(__name__)


def find_advice_collision(oracle: Callable[[Any], Any],
                          instances: Sequence[Any]
                          ) -> Optional[Tuple[int, int]]:
    """First pair (i, j), smallest j, of instances with equal advice."""
    if len(instances) < 2:
        raise exception.InvalidParameterValue(
            err=_('A collision needs at least two instances.'))
    first_seen = {}
    for j, instance in enumerate(instances):
        advice = advice_bits.BitString(oracle(instance))
        if advice in first_seen:
            LOG.debug('Instances %(i)d and %(j)d share advice %(advice)s',
                      {'i': first_seen[advice], 'j': j, 'advice': advice})
            return first_seen[advice], j
        first_seen[advice] = j
    return None


class RingSizeOracle(object):
    """k-bit advice for oriented rings: min(ceil(log2 n) - 2, 2^k - 1)."""

    def __init__(self, bits: int = 2):
        if bits < 0:
            raise exception.InvalidParameterValue(
                err=_('Advice width must be >= 0 (received %s).') % bits)
        self.bits = bits

    def __call__(self, graph) -> advice_bits.BitString:
        value = max(utils.ceil_log2(graph.node_count) - 2, 0)
        return advice_bits.BitString.from_int(
            min(value, (1 << self.bits) - 1), self.bits)


class RingWalkExplorer(base.ExplorerBase):
    """Walks port 0 for 2^(a+2) - 1 steps on advice a, then stops.

    That covers every oriented ring of at most 2^(a+2) nodes.
    """

    def __init__(self, oracle=INSTANCE, bits=2, *args, **kwargs):
        super(RingWalkExplorer, self).__init__(oracle, *args, **kwargs)
        self.size_oracle = RingSizeOracle(bits)

    def walk(self, advice, observation):
        for _step in range(self.time_bound(None, advice)):
            observation = yield 0
        yield simulator.STOP

    def advise(self, graph, start=None):
        return self.size_oracle(graph)

    def time_bound(self, node_count, advice):
        return (1 << (advice.to_int() + 2)) - 1


@dataclasses.dataclass(frozen=True)
class PigeonholeResult:
    pair: Tuple[int, int]
    advice: advice_bits.BitString
    smaller: simulator.ExplorationOutcome
    larger: simulator.ExplorationOutcome

    @property
    def defeated(self) -> bool:
        """Correct on the smaller ring, incomplete on the larger."""
        return self.smaller.completed and not self.larger.completed


def pigeonhole_demo(bits: int,
                    sizes: Sequence[int]) -> Optional[PigeonholeResult]:
    """Replay the shared advice of the first colliding pair of rings."""
    if len(set(sizes)) != len(sizes):
        raise exception.InvalidParameterValue(
            err=_('Ring sizes must be distinct (received %s).') %
            list(sizes))
    rings = [generators.gen_oriented_ring(n) for n in sizes]
    explorer = RingWalkExplorer(bits=bits)
    pair = find_advice_collision(explorer.advise, rings)
    if pair is None:
        return None
    small, large = sorted(pair, key=lambda index: sizes[index])
    advice = explorer.advise(rings[small])
    outcomes = [simulator.run_strategy(rings[index], 0, explorer, advice)
                for index in (small, large)]
    result = PigeonholeResult((small, large), advice, *outcomes)
    LOG.info('Rings of %(small)d and %(large)d nodes share advice '
             '%(advice)s; larger ring covered: %(covered)s',
             {'small': sizes[small], 'large': sizes[large],
              'advice': advice, 'covered': result.larger.completed})
    return result
