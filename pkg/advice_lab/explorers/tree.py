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

"""Exploration with spanning tree advice.

With the instance oracle the tree is rooted at the start, so following
its depth-first tour visits every node in exactly 2(n-1) moves.

With the map oracle the root is unknown.  The explorer tries every tree
node u as a hypothesis for its position and runs the closed tour from u
followed by its reverse.  A hypothesis fails as soon as a port is
missing or an entry port disagrees with the tree; the moves made so far
are then undone.  The right hypothesis completes its tour, and since
every attempt ends back at the start the total cost stays below
8n(n-1).
"""

from typing import Callable, NamedTuple, Optional  # noqa: H301

from oslo_log import log as logging

from advice_lab.agent import simulator
from advice_lab.codecs import tree as tree_codec
from advice_lab.explorers import base
from advice_lab.explorers import INSTANCE
from advice_lab.explorers import MAP

LOG = logging.getLogger(__name__)


class TourReport(NamedTuple):
    hypothesis: int
    aborted: bool
    moves: int


class InstanceTreeExplorer(base.ExplorerBase):
    exact_time = True

    def __init__(self, oracle=INSTANCE, *args, **kwargs):
        super(InstanceTreeExplorer, self).__init__(oracle, *args, **kwargs)

    def walk(self, advice, observation):
        decoded = tree_codec.decode_spanning_tree(advice)
        tree = tree_codec.build_port_tree(decoded)
        for step in tree.euler_tour(0):
            yield step.out_port
        yield simulator.STOP

    def advise(self, graph, start):
        edges = tree_codec.dfs_spanning_tree(graph, start)
        return tree_codec.encode_spanning_tree(graph, edges, start).to_bits()

    def time_bound(self, node_count, advice):
        return 2 * (node_count - 1)


class MapTreeExplorer(base.ExplorerBase):
    """Spanning tree explorer for advice that does not know the start.

    :param listener: optional callable receiving a :class:`TourReport`
        after each hypothesis has been tried and undone
    """

    def __init__(self, oracle=MAP,
                 listener: Optional[Callable[[TourReport], None]] = None,
                 *args, **kwargs):
        super(MapTreeExplorer, self).__init__(oracle, *args, **kwargs)
        self._listener = listener

    def walk(self, advice, observation):
        decoded = tree_codec.decode_spanning_tree(advice, root_is_start=False)
        tree = tree_codec.build_port_tree(decoded)
        moves = 0
        for hypothesis in tree.nodes():
            tour = tree.euler_tour(hypothesis)
            tour = tour + tuple(tree_codec.TourStep(s.in_port, s.out_port)
                                for s in reversed(tour))
            performed = []
            aborted = False
            for step in tour:
                if step.out_port >= observation.degree:
                    aborted = True
                    break
                observation = yield step.out_port
                moves += 1
                performed.append(observation.entry_port)
                if observation.entry_port != step.in_port:
                    aborted = True
                    break
            if aborted:
                for entry_port in reversed(performed):
                    observation = yield entry_port
                    moves += 1
            LOG.debug('Hypothesis %(node)d %(result)s after %(moves)d moves',
                      {'node': hypothesis,
                       'result': 'failed' if aborted else 'held',
                       'moves': moves})
            if self._listener is not None:
                self._listener(TourReport(hypothesis, aborted, moves))
        yield simulator.STOP

    def advise(self, graph, start=None):
        edges = tree_codec.dfs_spanning_tree(graph, 0)
        return tree_codec.encode_spanning_tree(graph, edges, 0,
                                               root_is_start=False).to_bits()

    def time_bound(self, node_count, advice):
        return 8 * node_count * (node_count - 1)


def instance_tree_explore(advice, observation):
    """Strategy for tree advice rooted at the start: 2(n-1) moves."""
    return InstanceTreeExplorer().walk(advice, observation)


def map_tree_explore(advice, observation):
    return MapTreeExplorer().walk(advice, observation)
