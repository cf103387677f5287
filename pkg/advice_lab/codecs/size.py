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

"""Size advice: a few bits from which an upper bound on n is decoded.

The double-logarithmic encoding keeps the binary form of
floor(log2(floor(log2(n)))) minus its c+1 lowest bits.  Decoding puts
c+1 one bits back, giving n1, and announces N = 2^(2^(n1+1)).  N is at
least n and log2(N) stays within a factor 2^(2^(c+1)) of log2(n).

The explicit encoding writes an exact bound in binary.
"""

import dataclasses

from advice_lab.codecs import bits as advice_bits
from advice_lab import exception
from advice_lab.i18n import _
from advice_lab import utils


@dataclasses.dataclass(frozen=True)
class SizeAdviceParams:
    c: int = 0

    def __post_init__(self):
        if self.c < 0:
            raise exception.InvalidParameterValue(
                err=_('Size advice constant c must be >= 0 (received %s).')
                % self.c)


def size_bound_exponent(c: int) -> int:
    """Factor K(c) with log2(N) <= K(c) * log2(n)."""
    return 2 ** (2 ** (c + 1))


def encode_size_advice(n: int,
                       params: SizeAdviceParams) -> advice_bits.BitString:
    """Double-logarithmic advice for a graph with n >= 2 nodes."""
    if n < 2:
        raise exception.InvalidParameterValue(
            err=_('Size advice needs at least 2 nodes (received %s).')
            % n)
    log_n = utils.floor_log2(n)
    if log_n < 2:
        return advice_bits.BitString()
    text = format(utils.floor_log2(log_n), 'b')
    return advice_bits.BitString(text[:max(len(text) - params.c - 1, 0)])


def decode_size_bound(advice: advice_bits.BitString,
                      params: SizeAdviceParams) -> int:
    """Upper bound N on the node count announced by the advice.

    Every bitstring decodes.  Leading zeros do not change the value.
    """
    n1 = int(str(advice) + '1' * (params.c + 1), 2)
    return 2 ** (2 ** (n1 + 1))


def decoded_bound_log2(advice: advice_bits.BitString,
                       params: SizeAdviceParams) -> int:
    """log2 of decode_size_bound, without building the big integer."""
    n1 = int(str(advice) + '1' * (params.c + 1), 2)
    return 2 ** (n1 + 1)


def encode_explicit_bound(n: int) -> advice_bits.BitString:
    if n < 1:
        raise exception.InvalidParameterValue(
            err=_('Node count must be positive (received %s).') % n)
    return advice_bits.BitString(format(n, 'b'))


def decode_explicit_bound(advice: advice_bits.BitString) -> int:
    if not len(advice) or advice[0] != 1:
        raise exception.InvalidAdvice(
            reason=_('explicit bound must be a binary number without '
                     'leading zeros'))
    return advice.to_int()
