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

"""Drive a mobile agent over a port graph.

A strategy is a callable ``strategy(advice, observation)`` returning a
generator.  The generator yields a port number to move, ``STOP`` to end
the traversal or ``ABORT`` to give up, and receives an
:class:`Observation` of the new node after every move.  Strategies only
ever see degrees and entry ports.
"""

import dataclasses
import enum
from typing import Callable, Generator, Iterable, List  # noqa: H301
from typing import NamedTuple, Optional, Tuple, Union  # noqa: H301

from oslo_log import log as logging

from advice_lab.codecs import bits as advice_bits
from advice_lab import exception
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)


class Directive(enum.Enum):
    STOP = 'stop'
    ABORT = 'abort'


STOP = Directive.STOP
ABORT = Directive.ABORT


@dataclasses.dataclass(frozen=True)
class Observation:
    degree: int
    entry_port: Optional[int] = None


class TraceStep(NamedTuple):
    out_port: int
    entry_port: int
    degree: int


@dataclasses.dataclass(frozen=True)
class ExplorationOutcome:
    steps_used: int
    visited_count: int
    node_count: int
    completed: bool
    aborted_at: Optional[int] = None
    budget_exhausted: bool = False
    trace: Optional[Tuple[TraceStep, ...]] = None
    path: Optional[Tuple[int, ...]] = dataclasses.field(default=None,
                                                       compare=False)


Move = Union[int, Directive]
Strategy = Callable[[advice_bits.BitString, Observation],
                    Generator[Move, Observation, None]]


def as_port_sequence(ports: Iterable[int]) -> Tuple[int, ...]:
    sequence = tuple(int(p) for p in ports)
    for index, port in enumerate(sequence):
        if port < 0:
            raise exception.InvalidParameterValue(
                err=_('Port %(port)s at position %(index)s is negative.') %
                {'port': port, 'index': index})
    return sequence


class _Walk(object):
    """Position, visited set and bookkeeping of one traversal."""

    def __init__(self, graph: portgraph.PortGraph, start: int,
                 keep_trace: bool, keep_path: bool):
        graph.degree(start)
        self.graph = graph
        self.node = start
        self.steps = 0
        self.visited = bytearray(graph.node_count)
        self.visited[start] = 1
        self.visited_count = 1
        self.trace: Optional[List[TraceStep]] = [] if keep_trace else None
        self.path: Optional[List[int]] = [start] if keep_path else None

    @property
    def degree(self) -> int:
        return len(self.graph.adjacency[self.node])

    def observation(self, entry_port: Optional[int] = None) -> Observation:
        return Observation(self.degree, entry_port)

    def move(self, port: int) -> Observation:
        self.node, entry = self.graph.adjacency[self.node][port]
        self.steps += 1
        if not self.visited[self.node]:
            self.visited[self.node] = 1
            self.visited_count += 1
        observation = self.observation(entry)
        if self.trace is not None:
            self.trace.append(TraceStep(port, entry, observation.degree))
        if self.path is not None:
            self.path.append(self.node)
        return observation

    def outcome(self, aborted_at: Optional[int] = None,
                budget_exhausted: bool = False) -> ExplorationOutcome:
        n = self.graph.node_count
        return ExplorationOutcome(
            steps_used=self.steps,
            visited_count=self.visited_count,
            node_count=n,
            completed=self.visited_count == n,
            aborted_at=aborted_at,
            budget_exhausted=budget_exhausted,
            trace=tuple(self.trace) if self.trace is not None else None,
            path=tuple(self.path) if self.path is not None else None)


def run_port_sequence(graph: portgraph.PortGraph, start: int,
                      ports: Iterable[int], budget: Optional[int] = None,
                      keep_trace: bool = False,
                      keep_path: bool = False) -> ExplorationOutcome:
    """Apply ports one by one from start.

    Stops at the first port the current node does not have (recorded in
    ``aborted_at``), when the budget is spent, or at the end of ports.
    """
    walk = _Walk(graph, start, keep_trace, keep_path)
    for index, port in enumerate(ports):
        if budget is not None and walk.steps >= budget:
            return walk.outcome(budget_exhausted=True)
        if not 0 <= port < walk.degree:
            return walk.outcome(aborted_at=index)
        walk.move(port)
    return walk.outcome()


def run_strategy(graph: portgraph.PortGraph, start: int, strategy: Strategy,
                 advice: Optional[advice_bits.BitString] = None,
                 budget: Optional[int] = None, keep_trace: bool = False,
                 keep_path: bool = False) -> ExplorationOutcome:
    """Let strategy drive the agent from start.

    :raises StrategyPortOutOfRange: when the strategy names a port the
        current node does not have
    """
    if advice is None:
        advice = advice_bits.BitString()
    walk = _Walk(graph, start, keep_trace, keep_path)
    agent = strategy(advice, walk.observation())
    try:
        directive = next(agent)
        while True:
            if directive is STOP or directive is None:
                return walk.outcome()
            if directive is ABORT:
                return walk.outcome(aborted_at=walk.steps)
            if budget is not None and walk.steps >= budget:
                LOG.debug('Budget of %d steps spent', budget)
                return walk.outcome(budget_exhausted=True)
            if (isinstance(directive, bool) or
                    not isinstance(directive, int) or
                    not 0 <= directive < walk.degree):
                raise exception.StrategyPortOutOfRange(
                    port=directive, step=walk.steps, degree=walk.degree)
            directive = agent.send(walk.move(directive))
    except StopIteration:
        return walk.outcome()
    finally:
        agent.close()


def sequence_strategy(ports: Iterable[int]) -> Strategy:
    """Strategy replaying a fixed port sequence, aborting when infeasible."""
    sequence = as_port_sequence(ports)

    def replay(advice, observation):
        for port in sequence:
            if port >= observation.degree:
                yield ABORT
                return
            observation = yield port
        yield STOP

    return replay
