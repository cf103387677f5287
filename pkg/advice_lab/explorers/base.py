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

import abc
from typing import Optional

from advice_lab.agent import simulator
from advice_lab.codecs import bits as advice_bits
from advice_lab.graph import portgraph


class ExplorerBase(object, metaclass=abc.ABCMeta):
    """Advice-driven exploration algorithm paired with its oracle.

    Calling an explorer starts its strategy, so an instance can be passed
    straight to :func:`advice_lab.agent.simulator.run_strategy`.
    """

    # Whether time_bound is reached exactly rather than only respected.
    exact_time = False

    def __init__(self, oracle=None, *args, **kwargs):
        self.oracle = oracle

    def __call__(self, advice, observation):
        return self.walk(advice, observation)

    def __repr__(self):
        return '<%s oracle=%s>' % (self.__class__.__name__, self.oracle)

    @abc.abstractmethod
    def walk(self, advice: advice_bits.BitString,
             observation: simulator.Observation):
        """Generator driving the agent; see the simulator protocol."""
        pass

    @abc.abstractmethod
    def advise(self, graph: portgraph.PortGraph,
               start: Optional[int]) -> advice_bits.BitString:
        """Advice for graph.

        Map oracles ignore start and may be called with None.
        """
        pass

    @abc.abstractmethod
    def time_bound(self, node_count: int,
                   advice: advice_bits.BitString) -> Optional[int]:
        """Step bound guaranteed for a graph of node_count nodes."""
        pass
