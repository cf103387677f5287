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

import ddt

from advice_lab.agent import simulator
from advice_lab.codecs import size
from advice_lab import exception
from advice_lab.graph import generators
from advice_lab.harness import collide
from advice_lab.tests import base


@ddt.ddt
class FindAdviceCollisionTestCase(base.TestCase):

    def test_constant_oracle(self):
        rings = [generators.gen_oriented_ring(n) for n in (3, 4)]
        self.assertEqual((0, 1),
                         collide.find_advice_collision(lambda g: '1', rings))

    def test_loglog_size_advice(self):
        params = size.SizeAdviceParams(0)
        sizes = [2 ** (2 ** 4), 2 ** (2 ** 4) + 1]
        self.assertEqual((0, 1), collide.find_advice_collision(
            lambda n: size.encode_size_advice(n, params), sizes))

    def test_distinct(self):
        self.assertIsNone(collide.find_advice_collision(
            lambda n: format(n, 'b'), [1, 2, 3]))

    @ddt.data(1, 2, 3)
    def test_pigeonhole(self, bits):
        rings = [generators.gen_oriented_ring(n)
                 for n in range(3, 3 + 2 ** bits + 1)]
        oracle = collide.RingSizeOracle(bits)
        self.assertIsNotNone(collide.find_advice_collision(oracle, rings))

    def test_too_few(self):
        self.assertRaises(exception.InvalidParameterValue,
                          collide.find_advice_collision, str, [1])


@ddt.ddt
class RingWalkTestCase(base.TestCase):

    @ddt.data(3, 4, 7, 8, 16, 32)
    def test_correct_on_small_rings(self, n):
        explorer = collide.RingWalkExplorer(bits=2)
        ring = generators.gen_oriented_ring(n)
        advice = explorer.advise(ring)
        outcome = simulator.run_strategy(ring, 0, explorer, advice)
        self.assertTrue(outcome.completed)
        self.assertEqual(explorer.time_bound(n, advice), outcome.steps_used)

    def test_negative_width(self):
        self.assertRaises(exception.InvalidParameterValue,
                          collide.RingSizeOracle, -1)


class PigeonholeDemoTestCase(base.TestCase):

    def test_defeated(self):
        result = collide.pigeonhole_demo(2, [4, 8, 16, 32, 64])
        self.assertEqual((3, 4), result.pair)
        self.assertEqual('11', result.advice)
        self.assertTrue(result.defeated)
        self.assertEqual(31, result.larger.steps_used)
        self.assertEqual(32, result.larger.visited_count)

    def test_no_collision(self):
        self.assertIsNone(collide.pigeonhole_demo(2, [4, 8, 16]))

    def test_sizes_must_differ(self):
        self.assertRaises(exception.InvalidParameterValue,
                          collide.pigeonhole_demo, 2, [8, 8])
