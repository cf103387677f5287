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

"""Universal exploration sequences.

An exploration sequence is a list of offsets.  An agent that entered its
current node through port e (0 at the start) and reads offset o leaves
through port (e + o) mod degree.  A sequence is universal for a bound N
when it visits every node of every connected port-numbered graph with at
most N nodes from every start.

Certificates are found by enumeration: every connected graph of the
networkx atlas with at most N nodes under every port numbering.  A
bounded iterative deepening search looks for a shortest sequence and
hands over to a greedy construction when it runs out of search nodes.
Either way the result is replayed on every labelled instance before it
is returned.

Offsets are drawn from 0..L-1 where L is the lcm of the degrees below the
bound, which covers every distinct behaviour.  Bound 4 (1502 numberings)
certifies in minutes.  Bound 5 enumerates millions of numberings and is
not practical even with the greedy fallback.
"""

import dataclasses
import functools
import itertools
import math
import os
from typing import Dict, Iterator, List, Optional, Sequence  # noqa: H301
from typing import Tuple  # noqa: H301

import networkx as nx
from oslo_concurrency import lockutils
from oslo_log import log as logging
from oslo_utils import fileutils
from oslo_utils import timeutils

from advice_lab.agent import simulator
from advice_lab import conf
from advice_lab import exception
from advice_lab.graph import portgraph
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)

SEARCH = 'search'
GREEDY = 'greedy'

# Largest graphs in the networkx atlas.
ATLAS_MAX_NODES = 7

Adjacency = Tuple[Tuple[Tuple[int, int], ...], ...]


@dataclasses.dataclass(frozen=True)
class UxsCertificate:
    bound: int
    sequence: Tuple[int, ...]
    verified_graph_count: int
    method: str

    def __len__(self):
        return len(self.sequence)


class _SearchExhausted(Exception):
    pass


def offset_strategy(offsets: Sequence[int]) -> simulator.Strategy:
    """Strategy following an exploration sequence."""
    def follow(advice, observation):
        entry = 0
        for offset in offsets:
            if not observation.degree:
                break
            observation = yield (entry + offset) % observation.degree
            entry = observation.entry_port
        yield simulator.STOP
    return follow


def covers(adjacency: Adjacency, start: int,
           offsets: Sequence[int]) -> bool:
    """Whether offsets visit every node of adjacency from start."""
    full = (1 << len(adjacency)) - 1
    node, entry, mask = start, 0, 1 << start
    for offset in offsets:
        if mask == full:
            break
        row = adjacency[node]
        if not row:
            break
        node, entry = row[(entry + offset) % len(row)]
        mask |= 1 << node
    return mask == full


@functools.lru_cache(maxsize=None)
def _connected_atlas(node_count: int) -> Tuple[nx.Graph, ...]:
    return tuple(g for g in nx.graph_atlas_g()
                 if g.number_of_nodes() == node_count and nx.is_connected(g))


def enumerate_port_numberings(max_nodes: int) -> Iterator[Adjacency]:
    """Every connected graph with 1..max_nodes nodes, every numbering."""
    if max_nodes > ATLAS_MAX_NODES:
        raise exception.FeasibilityCapExceeded(bound=max_nodes,
                                               cap=ATLAS_MAX_NODES)
    for node_count in range(1, max_nodes + 1):
        for graph in _connected_atlas(node_count):
            neighbors = [sorted(graph.neighbors(u))
                         for u in range(node_count)]
            for orders in itertools.product(
                    *(itertools.permutations(row) for row in neighbors)):
                ports = [{v: p for p, v in enumerate(order)}
                         for order in orders]
                yield tuple(tuple((v, ports[v][u]) for v in order)
                            for u, order in enumerate(orders))


def enumerate_port_graphs(max_nodes: int) -> Iterator[portgraph.PortGraph]:
    for adjacency in enumerate_port_numberings(max_nodes):
        yield portgraph.PortGraph(adjacency)


def _rooted_code(adjacency: Adjacency, start: int) -> Adjacency:
    """Relabel by discovery order from start, neighbors in port order.

    Two rooted instances with equal codes behave the same under every
    exploration sequence.
    """
    order = [start]
    ids = {start: 0}
    for node in order:
        for v, _q in adjacency[node]:
            if v not in ids:
                ids[v] = len(order)
                order.append(v)
    return tuple(tuple((ids[v], q) for v, q in adjacency[node])
                 for node in order)


def distinct_instances(max_nodes: int) -> List[Adjacency]:
    """Rooted port graphs up to relabeling, each rooted at node 0."""
    seen: Dict[Adjacency, None] = {}
    for adjacency in enumerate_port_numberings(max_nodes):
        for start in range(len(adjacency)):
            seen.setdefault(_rooted_code(adjacency, start))
    return list(seen)


def _advance(instances, states, offsets):
    """Apply offsets to (index, node, entry, mask) states.

    Covered instances are dropped from the result.
    """
    for offset in offsets:
        moved = []
        for index, node, entry, mask in states:
            adjacency, full = instances[index]
            row = adjacency[node]
            node, entry = row[(entry + offset) % len(row)]
            mask |= 1 << node
            if mask != full:
                moved.append((index, node, entry, mask))
        states = moved
    return states


def _missing(instances, state):
    return bin(instances[state[0]][1] & ~state[3]).count('1')


class _IterativeDeepening(object):
    def __init__(self, instances, alphabet, node_limit):
        self.instances = instances
        self.alphabet = alphabet
        self.node_limit = node_limit
        self.expanded = 0

    def run(self, states):
        if not states:
            return ()
        for length in itertools.count(1):
            if any(_missing(self.instances, s) > length for s in states):
                continue
            found = self._extend(states, length)
            if found is not None:
                LOG.debug('Search found length %(length)d after %(nodes)d '
                          'nodes', {'length': length,
                                    'nodes': self.expanded})
                return tuple(found)

    def _extend(self, states, remaining):
        for offset in self.alphabet:
            self.expanded += 1
            if self.expanded > self.node_limit:
                raise _SearchExhausted()
            moved = _advance(self.instances, states, (offset,))
            if not moved:
                return [offset]
            if remaining == 1 or any(_missing(self.instances, s) >=
                                     remaining for s in moved):
                continue
            tail = self._extend(moved, remaining - 1)
            if tail is not None:
                return [offset] + tail
        return None


def _shortest_cover(adjacency, full, state, alphabet):
    """Shortest offsets covering one instance from state, by BFS."""
    _index, node, entry, mask = state
    origin = (node, entry, mask)
    parents = {origin: None}
    frontier = [origin]
    while frontier:
        following = []
        for current in frontier:
            for offset in alphabet:
                node, entry, mask = current
                row = adjacency[node]
                node, entry = row[(entry + offset) % len(row)]
                successor = (node, entry, mask | 1 << node)
                if successor in parents:
                    continue
                parents[successor] = (current, offset)
                if successor[2] == full:
                    offsets = []
                    while parents[successor] is not None:
                        successor, offset = parents[successor]
                        offsets.append(offset)
                    return offsets[::-1]
                following.append(successor)
        frontier = following
    raise exception.AdviceLabException(
        _('Instance cannot be covered; the enumeration is broken.'))


def greedy_sequence(instances, states, alphabet, prefix=()):
    """Extend prefix until the first uncovered instance is covered, repeat."""
    sequence = list(prefix)
    while states:
        index = states[0][0]
        adjacency, full = instances[index]
        extension = _shortest_cover(adjacency, full, states[0], alphabet)
        sequence.extend(extension)
        states = _advance(instances, states, extension)
    return tuple(sequence)


def offset_alphabet(bound: int) -> Tuple[int, ...]:
    """Offsets 0..L-1 with L the lcm of the degrees 1..bound-1.

    An offset only acts through its residue modulo the degree, so larger
    offsets repeat one of these.
    """
    degrees = range(1, max(bound - 1, 1) + 1)
    period = functools.reduce(lambda a, d: a * d // math.gcd(a, d),
                              degrees, 1)
    return tuple(range(period))


def search_sequence(bound: int, node_limit: int) -> Tuple[Tuple[int, ...],
                                                          str]:
    """Find an exploration sequence for graphs with at most bound nodes.

    :returns: (sequence, SEARCH or GREEDY)
    """
    codes = distinct_instances(bound)
    instances = [(code, (1 << len(code)) - 1) for code in codes]
    states = [(index, 0, 0, 1) for index, (code, full) in enumerate(instances)
              if full != 1]
    alphabet = offset_alphabet(bound)
    LOG.info('Searching exploration sequence for bound %(bound)d over '
             '%(count)d rooted instances',
             {'bound': bound, 'count': len(instances)})
    try:
        search = _IterativeDeepening(instances, alphabet, node_limit)
        return search.run(states), SEARCH
    except _SearchExhausted:
        LOG.info('Search node limit %d reached, extending greedily',
                 node_limit)
        return greedy_sequence(instances, states, alphabet), GREEDY


def verify_sequence(bound: int, offsets: Sequence[int]) -> int:
    """Replay offsets on every labelled instance.

    :returns: the number of port-numbered graphs checked
    :raises AdviceLabException: naming the first instance not covered
    """
    count = 0
    for adjacency in enumerate_port_numberings(bound):
        count += 1
        for start in range(len(adjacency)):
            if not covers(adjacency, start, offsets):
                raise exception.AdviceLabException(
                    _('Sequence misses a node of %(adj)s from start '
                      '%(start)d.') % {'adj': adjacency, 'start': start})
    return count


def _cache_file(cache_dir: str, bound: int) -> str:
    return os.path.join(os.path.expanduser(cache_dir), 'uxs-%d.txt' % bound)


def format_certificate(certificate: UxsCertificate) -> str:
    fields = [certificate.bound, len(certificate.sequence)]
    fields.extend(certificate.sequence)
    fields.append(certificate.verified_graph_count)
    return '# method %s\nuxs %s\n' % (certificate.method,
                                      ' '.join(str(f) for f in fields))


def parse_certificate(text: str) -> UxsCertificate:
    method = SEARCH
    for line in text.splitlines():
        fields = line.split()
        if fields[:2] == ['#', 'method'] and len(fields) == 3:
            method = fields[2]
        elif fields and fields[0] == 'uxs':
            values = [int(f) for f in fields[1:]]
            if len(values) < 3 or len(values) != values[1] + 3:
                break
            return UxsCertificate(bound=values[0],
                                  sequence=tuple(values[2:-1]),
                                  verified_graph_count=values[-1],
                                  method=method)
    raise exception.InvalidParameterValue(
        err=_('Malformed exploration sequence cache file.'))


def _load_cached(path: str, bound: int) -> Optional[UxsCertificate]:
    if not os.path.exists(path):
        return None
    try:
        with open(path, encoding='utf-8') as f:
            certificate = parse_certificate(f.read())
    except (ValueError, exception.InvalidParameterValue):
        LOG.warning('Ignoring unreadable sequence cache %s', path)
        return None
    if certificate.bound != bound:
        LOG.warning('Ignoring sequence cache %(path)s made for bound '
                    '%(other)d', {'path': path, 'other': certificate.bound})
        return None
    return certificate


def _store(path: str, certificate: UxsCertificate) -> None:
    directory = os.path.dirname(path)
    fileutils.ensure_tree(directory)
    staged = fileutils.write_to_tempfile(
        format_certificate(certificate).encode('utf-8'), path=directory,
        prefix='.uxs-')
    os.replace(staged, path)


def certified_uxs(bound: int, cap: Optional[int] = None,
                  cache_dir: Optional[str] = None,
                  lock_path: Optional[str] = None,
                  node_limit: Optional[int] = None,
                  use_cache: bool = True) -> UxsCertificate:
    """Exploration sequence verified for all graphs with <= bound nodes.

    Defaults come from the ``[uxs]`` configuration group.

    :raises FeasibilityCapExceeded: when bound is above the cap
    """
    cfg = conf.CONF.uxs
    cap = cfg.feasibility_cap if cap is None else cap
    if bound < 1:
        raise exception.InvalidParameterValue(
            err=_('Size bound must be positive (received %s).') % bound)
    if bound > min(cap, ATLAS_MAX_NODES):
        raise exception.FeasibilityCapExceeded(
            bound=bound, cap=min(cap, ATLAS_MAX_NODES))
    node_limit = cfg.search_node_limit if node_limit is None else node_limit

    if not use_cache:
        return _certify(bound, node_limit)

    cache_dir = cache_dir or cfg.cache_dir
    lock_path = os.path.expanduser(lock_path or cfg.lock_path or cache_dir)
    path = _cache_file(cache_dir, bound)
    fileutils.ensure_tree(lock_path)
    with lockutils.lock('uxs-%d' % bound, 'advice-lab-', external=True,
                        lock_path=lock_path):
        certificate = _load_cached(path, bound)
        if certificate is None:
            certificate = _certify(bound, node_limit)
            _store(path, certificate)
        else:
            LOG.debug('Loaded sequence for bound %(bound)d from %(path)s',
                      {'bound': bound, 'path': path})
    return certificate


def _certify(bound: int, node_limit: int) -> UxsCertificate:
    watch = timeutils.StopWatch()
    watch.start()
    sequence, method = search_sequence(bound, node_limit)
    count = verify_sequence(bound, sequence)
    LOG.info('Certified sequence of length %(length)d for bound %(bound)d '
             'on %(count)d graphs in %(time).1fs',
             {'length': len(sequence), 'bound': bound, 'count': count,
              'time': watch.elapsed()})
    return UxsCertificate(bound, sequence, count, method)
