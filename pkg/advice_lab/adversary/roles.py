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

"""Gadget graphs and the role sidecar written next to their graph file.

Gadget i holds two copies of H.  Copy 0 (the primed copy) and copy 1
(the double-primed copy) of H node j get ids
``base(i) + copy * m + j`` where base(i) = p + 2m * i and p is the number
of main cycle nodes, which come first.
"""

import dataclasses
from typing import Dict, List, Optional, Tuple  # noqa: H301

from oslo_log import log as logging

from advice_lab import exception
from advice_lab.graph import graphio
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)

ROLES_SUFFIX = '.roles'


@dataclasses.dataclass(frozen=True)
class GadgetGraph:
    graph: portgraph.PortGraph
    m: int
    gadget_count: int
    cycle_nodes: Tuple[int, ...]
    gateways: Tuple[int, ...]
    # H node whose crossing vector gadget i carries, None for a lone H_x.
    hosted: Tuple[Optional[int], ...]
    vectors: Tuple[object, ...]
    gateway_port: Optional[int]
    exit_port: Optional[int]
    h: portgraph.PortGraph
    tree: Tuple[portgraph.EdgeRecord, ...]

    def gadget_base(self, gadget: int) -> int:
        return len(self.cycle_nodes) + 2 * self.m * gadget

    def copy_node(self, gadget: int, copy: int, h_node: int) -> int:
        if not 0 <= gadget < self.gadget_count:
            raise exception.InvalidParameterValue(
                err=_('No gadget %s.') % gadget)
        return self.gadget_base(gadget) + copy * self.m + h_node

    def role(self, node: int) -> Tuple[int, ...]:
        """``(index,)`` for a cycle node, else ``(gadget, copy, h_node)``."""
        p = len(self.cycle_nodes)
        if node < p:
            return (node,)
        gadget, rest = divmod(node - p, 2 * self.m)
        copy, h_node = divmod(rest, self.m)
        return (gadget, copy, h_node)

    def gadget_nodes(self, gadget: int) -> range:
        base = self.gadget_base(gadget)
        return range(base, base + 2 * self.m)


def format_roles(gadget_graph: GadgetGraph) -> str:
    lines = ['# gadget roles, m=%d' % gadget_graph.m]
    lines.extend('y %d' % node for node in gadget_graph.cycle_nodes)
    lines.extend('gw %d %d' % (node, gadget)
                 for gadget, node in enumerate(gadget_graph.gateways))
    for gadget in range(gadget_graph.gadget_count):
        for node in gadget_graph.gadget_nodes(gadget):
            lines.append('copy %d %d' % (node, gadget_graph.role(node)[1]))
    return '\n'.join(lines) + '\n'


def parse_roles(text: str) -> Dict[str, object]:
    """Parse a role sidecar.

    :returns: dict with ``cycle`` (main cycle nodes in order),
        ``gateways`` (gateway node per gadget) and ``copies`` mapping a
        gadget node to its copy, 0 for the primed copy
    """
    cycle: List[int] = []
    gateways: Dict[int, int] = {}
    copies: Dict[int, int] = {}
    for number, fields in graphio.meaningful_lines(text):
        keyword = fields[0]
        try:
            if keyword == 'y' and len(fields) == 2:
                cycle.append(int(fields[1]))
            elif keyword == 'gw' and len(fields) == 3:
                gateways[int(fields[2])] = int(fields[1])
            elif keyword == 'copy' and len(fields) == 3 and \
                    fields[2] in ('0', '1'):
                copies[int(fields[1])] = int(fields[2])
            else:
                raise exception.GraphParseError(
                    line=number, reason=_('malformed "%s" record') % keyword)
        except ValueError:
            raise exception.GraphParseError(
                line=number, reason=_('malformed "%s" record') % keyword)
    return {'cycle': cycle,
            'gateways': [gateways[g] for g in sorted(gateways)],
            'copies': copies}


def write_gadget_graph(gadget_graph: GadgetGraph, path: str) -> str:
    """Write the graph to path and its roles next to it.

    :returns: the path of the role file
    """
    graphio.save_graph(gadget_graph.graph, path)
    roles_path = path + ROLES_SUFFIX
    with open(roles_path, 'w', encoding='utf-8') as f:
        f.write(format_roles(gadget_graph))
    LOG.debug('Wrote gadget roles to %s', roles_path)
    return roles_path


def read_gadget_roles(path: str) -> Dict[str, object]:
    with open(path + ROLES_SUFFIX, encoding='utf-8') as f:
        return parse_roles(f.read())
