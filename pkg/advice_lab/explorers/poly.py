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

"""Exploration knowing only a size bound decoded from short advice."""

from oslo_log import log as logging

from advice_lab.agent import simulator
from advice_lab import codecs
from advice_lab.codecs import size as size_codec
from advice_lab import conf
from advice_lab import exception
from advice_lab.explorers import base
from advice_lab.explorers import INSTANCE
from advice_lab.explorers import uxs
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)


class PolyExplorer(base.ExplorerBase):
    """Decode N, obtain a sequence certified for N and follow it.

    The advice depends on the node count only, so the instance and the
    map oracle give the same bits.

    :param params: constant c of the double-logarithmic encoding
    :param size_encoding: ``loglog`` or ``explicit``
    :param cap: largest N certified; defaults to ``[uxs]/feasibility_cap``
    """

    def __init__(self, oracle=INSTANCE, params=None,
                 size_encoding=codecs.LOGLOG, cap=None, cache_dir=None,
                 lock_path=None, node_limit=None, use_cache=True,
                 *args, **kwargs):
        super(PolyExplorer, self).__init__(oracle, *args, **kwargs)
        if size_encoding not in codecs.SIZE_ENCODINGS:
            raise exception.ExperimentConfigError(
                reason=_('unknown size encoding %s') % size_encoding)
        self.params = params or size_codec.SizeAdviceParams()
        self.size_encoding = size_encoding
        self.cap = conf.CONF.uxs.feasibility_cap if cap is None else cap
        self.cache_dir = cache_dir
        self.lock_path = lock_path
        self.node_limit = node_limit
        self.use_cache = use_cache

    def decode_bound(self, advice):
        if self.size_encoding == codecs.EXPLICIT:
            return size_codec.decode_explicit_bound(advice)
        log_bound = size_codec.decoded_bound_log2(advice, self.params)
        if log_bound > self.cap.bit_length():
            raise exception.FeasibilityCapExceeded(
                bound='2^%d' % log_bound, cap=self.cap)
        return size_codec.decode_size_bound(advice, self.params)

    def certificate(self, advice):
        return uxs.certified_uxs(self.decode_bound(advice), cap=self.cap,
                                 cache_dir=self.cache_dir,
                                 lock_path=self.lock_path,
                                 node_limit=self.node_limit,
                                 use_cache=self.use_cache)

    def walk(self, advice, observation):
        certificate = self.certificate(advice)
        LOG.debug('Following a sequence of %(length)d offsets certified '
                  'for %(bound)d nodes',
                  {'length': len(certificate), 'bound': certificate.bound})
        follow = uxs.offset_strategy(certificate.sequence)(advice,
                                                           observation)
        yield from follow

    def advise(self, graph, start=None):
        if self.size_encoding == codecs.EXPLICIT:
            return size_codec.encode_explicit_bound(graph.node_count)
        return size_codec.encode_size_advice(max(graph.node_count, 2),
                                            self.params)

    def time_bound(self, node_count, advice):
        return len(self.certificate(advice))


def poly_explore(graph, start, advice, params=None,
                 size_encoding=codecs.LOGLOG, cap=None, budget=None):
    """Run the size-bound explorer once.

    :returns: ExplorationOutcome
    :raises FeasibilityCapExceeded: when the decoded bound is above cap
    """
    explorer = PolyExplorer(params=params, size_encoding=size_encoding,
                            cap=cap)
    return simulator.run_strategy(graph, start, explorer, advice,
                                  budget=budget)
