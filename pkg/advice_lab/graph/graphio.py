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

"""Line-oriented text form of port graphs.

::

    pg 1
    n <node_count>
    e <u> <pu> <v> <pv>

Edges are written once with u < v, sorted.  Lines starting with ``#``
and blank lines are ignored on input.
"""

from typing import Iterator, List, Tuple  # noqa: H301

from oslo_log import log as logging

from advice_lab import exception
from advice_lab.graph import GRAPH_FORMAT_VERSION
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)


def meaningful_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Yield (line number, fields) skipping blanks and comments."""
    for number, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if stripped and not stripped.startswith('#'):
            yield number, stripped.split()


def _ints(number: int, fields: List[str]) -> List[int]:
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise exception.GraphParseError(
            line=number, reason=_('expected integers, got %s') %
            ' '.join(fields))


def serialize(graph: portgraph.PortGraph) -> str:
    lines = ['pg %d' % GRAPH_FORMAT_VERSION, 'n %d' % graph.node_count]
    lines.extend('e %d %d %d %d' % edge for edge in graph.edges())
    return '\n'.join(lines) + '\n'


def deserialize(text: str) -> portgraph.PortGraph:
    """Parse and validate a graph.

    :raises GraphParseError: on syntax problems, with the line number
    :raises InvalidGraph: when the parsed graph breaks an invariant
    """
    lines = meaningful_lines(text)
    header = next(lines, None)
    if header is None or header[1][0] != 'pg':
        raise exception.GraphParseError(
            line=header[0] if header else 1,
            reason=_('missing "pg" header'))
    number, fields = header
    if _ints(number, fields[1:]) != [GRAPH_FORMAT_VERSION]:
        raise exception.GraphParseError(
            line=number, reason=_('unsupported version %s') %
            ' '.join(fields[1:]))

    node_count = None
    edges = []
    for number, fields in lines:
        keyword, values = fields[0], _ints(number, fields[1:])
        if keyword == 'n':
            if node_count is not None or len(values) != 1:
                raise exception.GraphParseError(
                    line=number, reason=_('bad node count record'))
            node_count = values[0]
        elif keyword == 'e':
            if node_count is None:
                raise exception.GraphParseError(
                    line=number, reason=_('edge before node count'))
            if len(values) != 4:
                raise exception.GraphParseError(
                    line=number, reason=_('edge needs four fields'))
            edges.append(values)
        else:
            raise exception.GraphParseError(
                line=number, reason=_('unknown record "%s"') % keyword)
    if node_count is None:
        raise exception.GraphParseError(line=number,
                                        reason=_('missing node count'))
    return portgraph.validate_graph(edges, node_count)


def save_graph(graph: portgraph.PortGraph, path: str) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        f.write(serialize(graph))
    LOG.debug('Wrote %(graph)r to %(path)s', {'graph': graph, 'path': path})


def load_graph(path: str) -> portgraph.PortGraph:
    with open(path, encoding='utf-8') as f:
        return deserialize(f.read())
