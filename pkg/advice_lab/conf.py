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

"""Configuration options for the advice lab."""

import os

from oslo_config import cfg


uxs_group = cfg.OptGroup('uxs', title='Universal exploration sequences')

uxs_opts = [
    cfg.IntOpt('feasibility_cap',
               default=5,
               min=1,
               help='Largest size bound for which a universal exploration '
                    'sequence is certified by exhaustive enumeration. '
                    'Bound 5 enumerates millions of port numberings and '
                    'does not finish in practice; 4 is the largest bound '
                    'certified within minutes.'),
    cfg.StrOpt('cache_dir',
               default=os.path.join('~', '.cache', 'advice-lab', 'uxs'),
               help='Directory holding certified sequences.'),
    cfg.StrOpt('lock_path',
               help='Directory for the external certificate cache lock. '
                    'Defaults to cache_dir.'),
    cfg.IntOpt('search_node_limit',
               default=1000000,
               min=0,
               help='Search nodes the shortest-sequence search may expand '
                    'before the greedy extension construction finishes '
                    'the certificate.'),
]

harness_group = cfg.OptGroup('harness', title='Experiment harness')

harness_opts = [
    cfg.StrOpt('report_format',
               default='csv',
               choices=['csv', 'json'],
               help='Format of experiment reports.'),
    cfg.IntOpt('default_budget',
               min=0,
               help='Traversal budget applied when an experiment does not '
                    'set one.'),
]

CONF = cfg.CONF


def register_opts(conf):
    conf.register_group(uxs_group)
    conf.register_opts(uxs_opts, group=uxs_group)
    conf.register_group(harness_group)
    conf.register_opts(harness_opts, group=harness_group)


register_opts(CONF)
