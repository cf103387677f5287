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

from unittest import mock

import ddt

from advice_lab import exception
from advice_lab import explorers
from advice_lab.explorers import hamiltonian
from advice_lab.explorers import poly
from advice_lab.explorers import tree
from advice_lab.tests import base


@ddt.ddt
class ExplorerFactoryTestCase(base.TestCase):

    @ddt.data({'algorithm': explorers.TREE,
               'oracle': explorers.INSTANCE,
               'expected_cls': tree.InstanceTreeExplorer},
              {'algorithm': explorers.TREE,
               'oracle': explorers.MAP,
               'expected_cls': tree.MapTreeExplorer},
              {'algorithm': explorers.HAMILTONIAN,
               'oracle': explorers.INSTANCE,
               'expected_cls': hamiltonian.HamiltonianExplorer},
              {'algorithm': explorers.POLY,
               'oracle': explorers.INSTANCE,
               'expected_cls': poly.PolyExplorer},
              {'algorithm': explorers.POLY,
               'oracle': explorers.MAP,
               'expected_cls': poly.PolyExplorer})
    @ddt.unpack
    def test_factory(self, algorithm, oracle, expected_cls):
        explorer = explorers.get_explorer(algorithm, oracle)
        self.assertIsInstance(explorer, expected_cls)
        self.assertEqual(oracle, explorer.oracle)

    @ddt.data((explorers.HAMILTONIAN, explorers.MAP), ('dfs', 'instance'),
              (explorers.TREE, 'oracle'))
    @ddt.unpack
    def test_unsupported(self, algorithm, oracle):
        self.assertRaises(exception.ExperimentConfigError,
                          explorers.get_explorer, algorithm, oracle)

    def test_keyword_arguments(self):
        listener = mock.Mock()
        explorer = explorers.get_explorer(explorers.TREE, explorers.MAP,
                                          listener=listener)
        self.assertIs(listener, explorer._listener)

    def test_constructor_error_logged(self):
        mock_log = self.mock_object(explorers, 'LOG')
        self.assertRaises(exception.ExperimentConfigError,
                          explorers.get_explorer, explorers.POLY,
                          explorers.INSTANCE, size_encoding='unary')
        mock_log.error.assert_called_once()
