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

from oslo_log import log as logging
from oslo_utils import importutils

from advice_lab import exception
from advice_lab.i18n import _

LOG = logging.getLogger(__name__)

TREE = 'tree'
HAMILTONIAN = 'ham'
POLY = 'poly'

INSTANCE = 'instance'
MAP = 'map'

ALGORITHMS = (TREE, HAMILTONIAN, POLY)
ORACLES = (INSTANCE, MAP)

EXPLORER_MAPPING = {
    (TREE, INSTANCE): 'advice_lab.explorers.tree.InstanceTreeExplorer',
    (TREE, MAP): 'advice_lab.explorers.tree.MapTreeExplorer',
    (HAMILTONIAN, INSTANCE):
        'advice_lab.explorers.hamiltonian.HamiltonianExplorer',
    (POLY, INSTANCE): 'advice_lab.explorers.poly.PolyExplorer',
    (POLY, MAP): 'advice_lab.explorers.poly.PolyExplorer',
}


def get_explorer(algorithm, oracle, *args, **kwargs):
    """Build the explorer for an algorithm and oracle kind.

    :param algorithm: one of ALGORITHMS
    :param oracle: INSTANCE or MAP
    :returns ExplorerBase: the explorer
    :raises ExperimentConfigError: for unknown or unsupported pairs
    """
    path = EXPLORER_MAPPING.get((algorithm, oracle))
    if path is None:
        raise exception.ExperimentConfigError(
            reason=_('no %(algo)s explorer for the %(oracle)s oracle') %
            {'algo': algorithm, 'oracle': oracle})
    try:
        explorer = importutils.import_object(path, *args, oracle=oracle,
                                             **kwargs)
    except Exception as e:
        LOG.error("Error instantiating %(path)s: %(exception)s",
                  {'path': path, 'exception': e})
        raise
    LOG.debug("Using explorer %(explorer)s for %(algo)s/%(oracle)s",
              {'explorer': explorer, 'algo': algorithm, 'oracle': oracle})
    return explorer
