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

"""Linear algebra over GF(2) on integer bitsets.

A row is an int whose bit k is the coefficient of variable k.
"""

from typing import List, Optional, Sequence, Tuple  # noqa: H301


def _reduce(rows: Sequence[int], rhs: Sequence[int],
            n_cols: int) -> Tuple[List[Tuple[int, int]], List[int]]:
    """Reduced row echelon form of the augmented system."""
    work = [(row, bit & 1) for row, bit in zip(rows, rhs)]
    pivots: List[int] = []
    row_idx = 0
    for col in range(n_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r][0] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        prow, pbit = work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r][0] >> col) & 1):
                work[r] = (work[r][0] ^ prow, work[r][1] ^ pbit)
        pivots.append(col)
        row_idx += 1
        if row_idx == len(work):
            break
    return work, pivots


def rank(rows: Sequence[int], n_cols: int) -> int:
    return len(_reduce(rows, [0] * len(rows), n_cols)[1])


def solve(rows: Sequence[int], rhs: Sequence[int],
          n_cols: int) -> Optional[int]:
    """One solution of rows . x = rhs with free variables at 0, or None."""
    work, pivots = _reduce(rows, rhs, n_cols)
    if any(bit for _row, bit in work[len(pivots):]):
        return None
    solution = 0
    for (_row, bit), col in zip(work, pivots):
        if bit:
            solution |= 1 << col
    return solution


def kernel_basis(rows: Sequence[int], n_cols: int) -> List[int]:
    """Basis of {x : rows . x = 0}, one vector per free variable."""
    work, pivots = _reduce(rows, [0] * len(rows), n_cols)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vector = 1 << free
        for (row, _bit), col in zip(work, pivots):
            if (row >> free) & 1:
                vector |= 1 << col
        basis.append(vector)
    return basis


def dot(row: int, vector: int) -> int:
    return bin(row & vector).count('1') & 1
