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

import os

import ddt

from advice_lab import exception
from advice_lab.graph import generators
from advice_lab.graph import graphio
from advice_lab.tests import base

RING3 = """\
pg 1
n 3
e 0 0 1 1
e 0 1 2 0
e 1 0 2 1
"""


@ddt.ddt
class GraphIOTestCase(base.TestCase):

    def test_serialize_ring(self):
        self.assertEqual(RING3,
                         graphio.serialize(generators.gen_oriented_ring(3)))

    def test_inline_comment_rejected(self):
        self.assertRaises(exception.GraphParseError, graphio.deserialize,
                          RING3.replace('n 3', 'n 3  # nodes'))

    def test_deserialize_with_comments(self):
        text = '# oriented ring\n\n' + RING3
        self.assertEqual(generators.gen_oriented_ring(3),
                         graphio.deserialize(text))

    def test_save_and_load(self):
        graph = generators.gen_random_connected(7, 0.5, 3)
        path = os.path.join(self.cache_dir, 'g.pg')
        graphio.save_graph(graph, path)
        self.assertEqual(graph, graphio.load_graph(path))

    def test_load_utf8_comment(self):
        path = os.path.join(self.cache_dir, 'ring.pg')
        text = '# anneau orient\u00e9 \u2192 3\n' + RING3
        with open(path, 'wb') as f:
            f.write(text.encode('utf-8'))
        self.assertEqual(generators.gen_oriented_ring(3),
                         graphio.load_graph(path))

    @ddt.data(
        ('n 3\n', 1),
        ('pg 2\nn 3\n', 1),
        ('pg 1\ne 0 0 1 0\n', 2),
        ('pg 1\nn 2\ne 0 0 1\n', 3),
        ('pg 1\nn 2\ne 0 x 1 0\n', 3),
        ('pg 1\nn 2\nv 0\n', 3),
        ('pg 1\nn 2\nn 2\n', 3),
        ('pg 1\n', 1),
    )
    @ddt.unpack
    def test_parse_errors(self, text, line):
        exc = self.assertRaises(exception.GraphParseError,
                                graphio.deserialize, text)
        self.assertEqual(line, exc.kwargs['line'])

    def test_invalid_graph_surfaces(self):
        self.assertRaises(exception.PortDuplicate, graphio.deserialize,
                          'pg 1\nn 3\ne 0 0 1 0\ne 0 0 2 0\n')
