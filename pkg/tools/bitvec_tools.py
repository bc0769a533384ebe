"""
Bit-vector tools for the RSBF toolkit
Fixed-width vectors over F2 packed into a single integer word.

Bit order: component x1 is the most significant bit of the encoding, so
tuple-lexicographic order equals numeric order on encodings.

Usage:
    from tools.bitvec_tools import BitVector, rotate, dot

    v = BitVector.from_string("0001")
    rotate(v, 1)          # BitVector("0010")
    dot(v, v)             # 1
"""

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

import numpy as np

from config.settings import MAX_BURNSIDE_N
from tools.errors import DimensionError, InvalidFunctionError

logger = logging.getLogger(__name__)

IntOrArray = Union[int, np.ndarray]


def validate_dimension(n: int) -> int:
    """Return n if 1 <= n <= 32, else raise DimensionError"""
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise DimensionError(f"dimension must be an integer, got {n!r}")
    if not 1 <= n <= MAX_BURNSIDE_N:
        raise DimensionError(f"dimension n={n} outside 1..{MAX_BURNSIDE_N}")
    return int(n)


def word_mask(n: int) -> int:
    return (1 << n) - 1


# --- raw word primitives -----------------------------------------------------

def rotate_word(value: IntOrArray, k: int, n: int) -> IntOrArray:
    """
    Cyclic left shift of an n-bit encoding by k places.

    rotate_word(x, 1, n) is rho_n: (x1, ..., xn) -> (x2, ..., xn, x1).
    Works on Python ints and on numpy integer arrays.
    """
    k %= n
    if k == 0:
        return value
    return ((value << k) | (value >> (n - k))) & word_mask(n)


def parity(values: IntOrArray) -> IntOrArray:
    """
    Parity of the number of set bits.

    Scalars use int.bit_count(); numpy arrays (values below 2**32) are
    xor-folded in place of a popcount.
    """
    if isinstance(values, np.ndarray):
        x = values.astype(np.int64, copy=True)
        x ^= x >> 16
        x ^= x >> 8
        x ^= x >> 4
        x ^= x >> 2
        x ^= x >> 1
        return x & 1
    return int(values).bit_count() & 1


def dot_word(a: IntOrArray, b: IntOrArray) -> IntOrArray:
    """Scalar product over F2 of two encodings"""
    return parity(a & b)


def weight_word(value: int) -> int:
    return int(value).bit_count()


# --- BitVector ---------------------------------------------------------------

@dataclass(frozen=True, order=True)
class BitVector:
    """
    An element of F2^n.

    Attributes:
        n: dimension (1 <= n <= 32)
        value: integer encoding in [0, 2**n - 1], x1 in the top bit
    """

    n: int
    value: int

    def __post_init__(self):
        validate_dimension(self.n)
        if not 0 <= self.value <= word_mask(self.n):
            raise DimensionError(
                f"encoding {self.value} does not fit in {self.n} bits"
            )

    @classmethod
    def from_bits(cls, bits: Sequence[int]) -> "BitVector":
        """Build from components (x1, ..., xn)"""
        n = validate_dimension(len(bits))
        value = 0
        for bit in bits:
            if bit not in (0, 1):
                raise InvalidFunctionError(f"component {bit!r} is not a bit")
            value = (value << 1) | bit
        return cls(n, value)

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        """Parse an n-character '0'/'1' string, leftmost character is x1"""
        if not text or set(text) - {"0", "1"}:
            raise InvalidFunctionError(f"not a bitstring: {text!r}")
        return cls(validate_dimension(len(text)), int(text, 2))

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> (self.n - 1 - i)) & 1 for i in range(self.n))

    def to_string(self) -> str:
        return format(self.value, f"0{self.n}b")

    def __str__(self) -> str:
        return self.to_string()

    def __int__(self) -> int:
        return self.value


def _require_same_dimension(x: BitVector, y: BitVector) -> None:
    if x.n != y.n:
        raise DimensionError(f"dimension mismatch: {x.n} vs {y.n}")


def rotate(v: BitVector, k: int) -> BitVector:
    """
    Apply rho_n k times: component i of the result is component (i + k - 1 mod n) + 1.

    Args:
        v: Vector to shift
        k: Non-negative shift count, reduced mod n

    Raises:
        DimensionError: k is negative
    """
    if k < 0:
        raise DimensionError(f"negative shift count {k}")
    return BitVector(v.n, rotate_word(v.value, k, v.n))


def dot(x: BitVector, y: BitVector) -> int:
    """Scalar product x . y = sum x_i y_i mod 2"""
    _require_same_dimension(x, y)
    return dot_word(x.value, y.value)


def weight(x: BitVector) -> int:
    """Hamming weight"""
    return weight_word(x.value)


def xor(x: BitVector, y: BitVector) -> BitVector:
    _require_same_dimension(x, y)
    return BitVector(x.n, x.value ^ y.value)


def distance(x: BitVector, y: BitVector) -> int:
    """Hamming distance, equal to weight(x xor y)"""
    return weight(xor(x, y))


def all_vectors(n: int) -> Iterable[BitVector]:
    """Every element of F2^n in ascending encoding order"""
    validate_dimension(n)
    return (BitVector(n, value) for value in range(1 << n))
