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

"""Block structure of port sequences on the main cycle graph.

On a main cycle node the ports below the gateway port move along the
cycle and the gateway port enters the gadget.  Inside a gadget every
port below the exit port moves within H_x, and the exit port leads from
v'_1 back to the cycle.  A sequence therefore splits into cycle blocks
C_0, C_1, ... and gadget blocks D_0, D_1, ..., alternating.  It is
non-repetitive when no gadget is entered twice.
"""

import collections
import dataclasses
from typing import Dict, List, Optional, Sequence, Tuple  # noqa: H301

from oslo_log import log as logging

from advice_lab.adversary import crossing
from advice_lab.adversary import GATEWAY_PORT
from advice_lab.adversary import gadgets
from advice_lab.adversary import roles
from advice_lab.agent import simulator
from advice_lab import exception
from advice_lab.graph import portgraph
from advice_lab.i18n import _
from advice_lab import utils

LOG = logging.getLogger(__name__)

Block = Tuple[int, ...]


@dataclasses.dataclass(frozen=True)
class BlockDecomposition:
    cycle_blocks: Tuple[Block, ...]
    gadget_blocks: Tuple[Block, ...]
    gateway_port: int
    exit_port: int
    # The sequence stops inside its last gadget, with no cycle block after.
    ends_inside: bool = False

    def reconcatenate(self) -> Block:
        sequence: List[int] = []
        for i, cycle_block in enumerate(self.cycle_blocks):
            sequence.extend(cycle_block)
            if i < len(self.gadget_blocks):
                sequence.append(self.gateway_port)
                sequence.extend(self.gadget_blocks[i])
                if i < len(self.gadget_blocks) - 1 or not self.ends_inside:
                    sequence.append(self.exit_port)
        return tuple(sequence)

    def gadget_block_positions(self) -> List[int]:
        """Index in the sequence of the first port of each gadget block."""
        positions = []
        offset = 0
        for cycle_block, gadget_block in zip(self.cycle_blocks,
                                             self.gadget_blocks):
            offset += len(cycle_block) + 1
            positions.append(offset)
            offset += len(gadget_block) + 1
        return positions


def decompose_blocks(sequence: Sequence[int], m: int,
                     gateway_port: int = GATEWAY_PORT,
                     exit_port: Optional[int] = None) -> BlockDecomposition:
    """Split sequence into cycle and gadget blocks.

    :raises MalformedSequence: for a port that exists neither on the
        cycle nor inside a gadget
    """
    exit_port = m // 2 if exit_port is None else exit_port
    cycle_blocks: List[Block] = []
    gadget_blocks: List[Block] = []
    current: List[int] = []
    inside = False
    for position, port in enumerate(sequence):
        if not inside:
            if port < gateway_port:
                current.append(port)
            elif port == gateway_port:
                cycle_blocks.append(tuple(current))
                current, inside = [], True
            else:
                raise exception.MalformedSequence(
                    position=position,
                    reason=_('port %d on the main cycle') % port)
        else:
            if port < exit_port:
                current.append(port)
            elif port == exit_port:
                gadget_blocks.append(tuple(current))
                current, inside = [], False
            else:
                raise exception.MalformedSequence(
                    position=position,
                    reason=_('port %d inside a gadget') % port)
    if inside:
        gadget_blocks.append(tuple(current))
    else:
        cycle_blocks.append(tuple(current))
    return BlockDecomposition(tuple(cycle_blocks), tuple(gadget_blocks),
                              gateway_port, exit_port, ends_inside=inside)


def locate_gadgets(gadget_graph: roles.GadgetGraph, start_index: int,
                   decomposition: BlockDecomposition) -> Tuple[int, ...]:
    """Gadget entered by each gadget block when starting at y_start."""
    graph = gadget_graph.graph
    node = gadget_graph.cycle_nodes[start_index]
    located = []
    for cycle_block, _gadget_block in zip(decomposition.cycle_blocks,
                                          decomposition.gadget_blocks):
        for port in cycle_block:
            node, _q = graph.neighbor(node, port)
        located.append(gadget_graph.cycle_nodes.index(node))
    return tuple(located)


def make_non_repetitive(decomposition: BlockDecomposition,
                        gadget_of_block: Sequence[int]
                        ) -> BlockDecomposition:
    """Equivalent sequence entering each gadget once.

    All blocks of a gadget are joined and run at its first entry, or at
    the end when the sequence stops inside that gadget.  Cycle moves are
    kept in order, so the visited set is unchanged and the sequence does
    not grow.
    """
    blocks = decomposition.gadget_blocks
    if len(gadget_of_block) != len(blocks):
        raise exception.InvalidParameterValue(
            err=_('Need one gadget per gadget block.'))
    merged: Dict[int, List[int]] = collections.defaultdict(list)
    anchors: Dict[int, int] = {}
    for index, gadget in enumerate(gadget_of_block):
        merged[gadget].extend(blocks[index])
        anchors.setdefault(gadget, index)
    if decomposition.ends_inside and blocks:
        anchors[gadget_of_block[-1]] = len(blocks) - 1

    cycle_blocks: List[Block] = []
    gadget_blocks: List[Block] = []
    previous = 0
    for gadget, index in sorted(anchors.items(), key=lambda item: item[1]):
        cycle_blocks.append(_joined(decomposition.cycle_blocks[
            previous:index + 1]))
        gadget_blocks.append(tuple(merged[gadget]))
        previous = index + 1
    if not decomposition.ends_inside:
        cycle_blocks.append(_joined(decomposition.cycle_blocks[previous:]))
    return BlockDecomposition(tuple(cycle_blocks), tuple(gadget_blocks),
                              decomposition.gateway_port,
                              decomposition.exit_port,
                              decomposition.ends_inside)


def _joined(blocks: Sequence[Block]) -> Block:
    return tuple(port for block in blocks for port in block)


def nonrepetitive_length_bound(m: int) -> int:
    """(s+1)m^2 with s = |S|: below it some start leaves a node unseen."""
    return (crossing.nontree_edge_count(m) + 1) * m * m


@dataclasses.dataclass(frozen=True)
class Witness:
    """A start and an instance of the main cycle graph defeating U."""
    start: int
    node: int
    gadget: int
    copy: int
    h_node: int
    block: Optional[int]
    xmap: Dict[int, crossing.CrossingVector] = dataclasses.field(
        compare=False)


def _visit_counts(h: portgraph.PortGraph, block: Block) -> List[int]:
    counts = [0] * h.node_count
    node = 0
    counts[node] += 1
    for port in block:
        node, _q = h.adjacency[node][port]
        counts[node] += 1
    return counts


def _misses(ghat: roles.GadgetGraph, start: int, sequence: Sequence[int],
            node: int) -> bool:
    outcome = simulator.run_port_sequence(ghat.graph, start, sequence,
                                          keep_path=True)
    return node not in outcome.path


@utils.trace
def lower_bound_witness(sequence: Sequence[int], m: int,
                        h: Optional[portgraph.PortGraph] = None,
                        tree: Optional[Sequence[portgraph.EdgeRecord]] = None
                        ) -> Optional[Witness]:
    """Find a start and crossing vectors under which sequence fails.

    sequence must be non-repetitive.  Blocks are tried in order, and in
    each block the first node of H visited at most |S| times.  Returns
    None only when every gadget block is too long for that.

    :raises MalformedSequence: when sequence is not non-repetitive
    :raises LowerBoundViolated: when None would be returned for a
        sequence shorter than nonrepetitive_length_bound(m)
    """
    h = h if h is not None else crossing.standard_h(m)
    tree = tuple(tree) if tree is not None else \
        crossing.hamiltonian_path_tree(h)
    s = len(crossing.canonical_nontree_edges(h, tree))
    decomposition = decompose_blocks(sequence, m, exit_port=h.degree(0))
    base_xmap = gadgets.default_xmap(h, tree)
    reference = gadgets.build_Ghat(h, base_xmap, tree)
    located = locate_gadgets(reference, 0, decomposition)
    if len(set(located)) != len(located):
        repeated = [i for i, g in enumerate(located) if g in located[:i]][0]
        raise exception.MalformedSequence(
            position=decomposition.gadget_block_positions()[repeated],
            reason=_('gadget %d is entered twice') % located[repeated])

    for index, block in enumerate(decomposition.gadget_blocks):
        counts = _visit_counts(h, block)
        target = next((j for j, c in enumerate(counts) if c <= s), None)
        if target is None:
            continue
        hidden = crossing.solve_crossing_vector(block, target, h, tree)
        if hidden is None:
            continue
        start = (target - located[index]) % m
        xmap = dict(base_xmap)
        xmap[target] = hidden.x
        ghat = gadgets.build_Ghat(h, xmap, tree)
        node = ghat.copy_node(target, hidden.copy, target)
        if _misses(ghat, start, sequence, node):
            LOG.debug('Start %(start)d misses node %(node)d through block '
                      '%(block)d', {'start': start, 'node': node,
                                    'block': index})
            return Witness(start, node, target, hidden.copy, target, index,
                           xmap)

    unentered = sorted(set(range(m)) - set(located))
    if unentered:
        gadget = unentered[0]
        node = reference.gateways[gadget]
        if _misses(reference, 0, sequence, node):
            return Witness(0, node, gadget, 0, 0, None, base_xmap)

    bound = nonrepetitive_length_bound(m)
    if len(sequence) < bound:
        raise exception.LowerBoundViolated(length=len(sequence), bound=bound)
    return None
