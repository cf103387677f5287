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

"""Bit strings and a sequential reader over them."""

from typing import Iterable, Union  # noqa: H301

from advice_lab import exception
from advice_lab.i18n import _


class BitString(object):
    """Immutable finite string over {0, 1}."""

    __slots__ = ('_bits',)

    def __init__(self, bits: Union[str, Iterable[int], 'BitString'] = ''):
        if isinstance(bits, BitString):
            text = bits._bits
        elif isinstance(bits, str):
            text = bits
        else:
            text = ''.join('1' if b else '0' for b in bits)
        if text.strip('01'):
            raise exception.InvalidAdvice(
                reason=_('bit string contains characters other than 0/1'))
        self._bits = text

    @classmethod
    def from_int(cls, value: int, width: int) -> 'BitString':
        if value < 0 or value.bit_length() > width:
            raise exception.InvalidParameterValue(
                err=_('%(value)s does not fit in %(width)s bits') %
                {'value': value, 'width': width})
        if width == 0:
            return cls()
        return cls(format(value, '0%db' % width))

    def __len__(self) -> int:
        return len(self._bits)

    def __iter__(self):
        return (int(b) for b in self._bits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return BitString(self._bits[index])
        return int(self._bits[index])

    def __add__(self, other) -> 'BitString':
        return BitString(self._bits + BitString(other)._bits)

    def __eq__(self, other):
        if isinstance(other, BitString):
            return self._bits == other._bits
        if isinstance(other, str):
            return self._bits == other
        return NotImplemented

    def __hash__(self):
        return hash(self._bits)

    def __str__(self):
        return self._bits

    def __repr__(self):
        return 'BitString(%r)' % self._bits

    def to_int(self) -> int:
        return int(self._bits, 2) if self._bits else 0

    @classmethod
    def concat(cls, parts: Iterable['BitString']) -> 'BitString':
        return cls(''.join(str(p) for p in parts))


class BitReader(object):
    def __init__(self, bits: BitString):
        self._bits = BitString(bits)
        self.position = 0

    @property
    def remaining(self) -> int:
        return len(self._bits) - self.position

    def read_bit(self) -> int:
        return self.read_int(1)

    def read_int(self, width: int) -> int:
        if width > self.remaining:
            raise exception.TruncatedPorts(length=len(self._bits),
                                           needed=self.position + width)
        value = self._bits[self.position:self.position + width].to_int()
        self.position += width
        return value

    def ensure_consumed(self) -> None:
        if self.remaining:
            raise exception.InvalidAdvice(
                reason=_('%d trailing bits after the last field') %
                self.remaining)


def write_advice(bits: BitString, path: str) -> None:
    """Store advice as one line of 0/1 characters."""
    with open(path, 'w', encoding='utf-8') as f:
        f.write(str(bits) + '\n')


def read_advice(path: str) -> BitString:
    with open(path, encoding='utf-8') as f:
        return BitString(f.read().strip())
