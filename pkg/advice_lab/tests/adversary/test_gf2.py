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

import random

import ddt

from advice_lab.adversary import gf2
from advice_lab.tests import base


@ddt.ddt
class GF2TestCase(base.TestCase):

    def test_rank(self):
        self.assertEqual(2, gf2.rank([0b011, 0b110, 0b101], 3))
        self.assertEqual(0, gf2.rank([0, 0], 4))
        self.assertEqual(3, gf2.rank([0b001, 0b010, 0b100], 3))

    def test_solve(self):
        solution = gf2.solve([0b011, 0b110], [1, 0], 3)
        self.assertEqual(1, gf2.dot(0b011, solution))
        self.assertEqual(0, gf2.dot(0b110, solution))

    def test_inconsistent(self):
        self.assertIsNone(gf2.solve([0b11, 0b11], [0, 1], 2))
        self.assertIsNone(gf2.solve([0], [1], 3))

    def test_kernel(self):
        self.assertEqual([0b111], gf2.kernel_basis([0b011, 0b110], 3))
        self.assertEqual([0b01, 0b10], gf2.kernel_basis([], 2))

    @ddt.data(1, 2, 3, 4)
    def test_random_systems(self, seed):
        rng = random.Random(seed)
        n_cols = rng.randrange(1, 9)
        rows = [rng.getrandbits(n_cols) for _r in range(rng.randrange(1, 9))]
        kernel = gf2.kernel_basis(rows, n_cols)
        self.assertEqual(n_cols - gf2.rank(rows, n_cols), len(kernel))
        for vector in kernel:
            self.assertEqual([0] * len(rows),
                             [gf2.dot(row, vector) for row in rows])
        planted = rng.getrandbits(n_cols)
        rhs = [gf2.dot(row, planted) for row in rows]
        solution = gf2.solve(rows, rhs, n_cols)
        self.assertEqual(rhs, [gf2.dot(row, solution) for row in rows])
