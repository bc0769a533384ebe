"""
Walsh tools for the RSBF toolkit
Walsh transforms of Boolean functions, the orbit-level spectrum through nA,
and the bentness test.

Two representations of a rotation symmetric function are used:
  - RsbfFunction: one bit per orbit, in orbit-index order
  - truth table: numpy uint8 array of 2^n bits indexed by encoding
expand() and contract() bridge them; contract() refuses tables that are not
rotation invariant.

Usage:
    from tools.walsh_tools import RsbfFunction, spectrum_via_matrix, is_bent

    f = RsbfFunction.from_string("000110", n=4)
    spectrum_via_matrix(f, matrix).values    # (4, 4, 4, -4, -4, 4)
    is_bent(f, matrix)                       # True
"""

import logging
from dataclasses import dataclass
from typing import Any, Optional, Sequence, Union

import numpy as np

from config.settings import MAX_SPECTRUM_BRUTE_N, MAX_WALSH_BRUTE_N
from tools.bitvec_tools import BitVector, parity, rotate_word, validate_dimension
from tools.errors import DimensionError, InvalidFunctionError, check_budget
from tools.matrix_tools import RsbfMatrix
from tools.orbit_tools import OrbitTable, count_orbits_burnside

logger = logging.getLogger(__name__)

TruthTable = Union[np.ndarray, Sequence[int]]


@dataclass(frozen=True)
class RsbfFunction:
    """
    A rotation symmetric Boolean function given by its value on each orbit.

    Attributes:
        n: dimension
        orbit_values: g_n bits, index i is f(L_i) (and f on all of orbit i)
    """

    n: int
    orbit_values: tuple[int, ...]

    def __post_init__(self):
        validate_dimension(self.n)
        if any(b not in (0, 1) for b in self.orbit_values):
            raise InvalidFunctionError("orbit values must be 0 or 1")
        g = count_orbits_burnside(self.n)
        if len(self.orbit_values) != g:
            raise InvalidFunctionError(
                f"expected {g} orbit values for n={self.n}, got {len(self.orbit_values)}"
            )

    @classmethod
    def from_string(cls, text: str, n: int) -> "RsbfFunction":
        """Parse g_n characters '0'/'1' in orbit-index order"""
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise InvalidFunctionError(f"not a bitstring: {text!r}")
        return cls(n, tuple(int(c) for c in text))

    @classmethod
    def constant(cls, n: int, value: int = 0) -> "RsbfFunction":
        return cls(n, (value,) * count_orbits_burnside(n))

    def to_string(self) -> str:
        return "".join(str(b) for b in self.orbit_values)

    def complement(self) -> "RsbfFunction":
        return RsbfFunction(self.n, tuple(1 - b for b in self.orbit_values))

    def signs(self) -> np.ndarray:
        """(-1)^f(L_i) per orbit"""
        return 1 - 2 * np.asarray(self.orbit_values, dtype=np.int64)

    def __str__(self) -> str:
        return self.to_string()


@dataclass(frozen=True)
class WalshSpectrum:
    """Walsh values at the orbit representatives, index j is W_f(L_j)"""

    n: int
    values: tuple[int, ...]

    def satisfies_parseval(self, table: OrbitTable) -> bool:
        """sum_j |G_j| * W_f(L_j)^2 == 2^(2n)"""
        total = sum(int(size) * v * v for size, v in zip(table.sizes, self.values))
        return total == 1 << (2 * self.n)

    def negated(self) -> "WalshSpectrum":
        return WalshSpectrum(self.n, tuple(-v for v in self.values))

    def to_rows(self, table: OrbitTable) -> list[tuple[str, int]]:
        return list(zip(table.representative_strings(), self.values))

    def to_dict(self, table: OrbitTable) -> dict[str, Any]:
        return {
            "n": self.n,
            "spectrum": [
                {"representative": rep, "walsh": value}
                for rep, value in self.to_rows(table)
            ],
        }


def _require_matching(f: RsbfFunction, n: int) -> None:
    if f.n != n:
        raise DimensionError(f"function has n={f.n}, matrix/table has n={n}")


def spectrum_via_matrix(f: RsbfFunction, m: RsbfMatrix) -> WalshSpectrum:
    """
    W_f(L_j) = sum_i (-1)^f(L_i) * A[i, j] for every orbit j.

    Raises:
        DimensionError: f and m have different n
    """
    _require_matching(f, m.n)
    values = f.signs() @ m.entries
    return WalshSpectrum(f.n, tuple(int(v) for v in values))


def is_bent(f: RsbfFunction, m: RsbfMatrix) -> bool:
    """
    True iff every orbit-level Walsh value is +-2^(n/2).

    Always False for odd n: spectrum values are integers and 2^(n/2) is not.
    """
    _require_matching(f, m.n)
    if f.n % 2:
        return False
    target = 1 << (f.n // 2)
    return all(abs(v) == target for v in spectrum_via_matrix(f, m).values)


def function_from_spectrum(spectrum: WalshSpectrum, m: RsbfMatrix) -> RsbfFunction:
    """
    Invert the orbit-level transform with A^-1 = A / 2^n.

    With W = s A (s the orbit signs) the signs are s = W A / 2^n.

    Raises:
        InvalidFunctionError: spectrum is not that of a Boolean RSBF
    """
    if spectrum.n != m.n:
        raise DimensionError(f"spectrum has n={spectrum.n}, matrix has n={m.n}")
    if len(spectrum.values) != m.g:
        raise InvalidFunctionError(f"expected {m.g} spectrum values, got {len(spectrum.values)}")
    scaled = np.asarray(spectrum.values, dtype=np.int64) @ m.entries
    signs, remainder = np.divmod(scaled, 1 << m.n)
    if np.any(remainder) or not np.all(np.abs(signs) == 1):
        raise InvalidFunctionError("values are not the Walsh spectrum of a Boolean RSBF")
    return RsbfFunction(m.n, tuple(int(b) for b in (1 - signs) // 2))


# --- truth tables ------------------------------------------------------------

def _table_dimension(truth_table: np.ndarray) -> int:
    size = truth_table.size
    if size < 2 or size & (size - 1):
        raise InvalidFunctionError(f"truth table length {size} is not a power of two >= 2")
    return validate_dimension(size.bit_length() - 1)


def as_truth_table(truth_table: TruthTable) -> np.ndarray:
    """Validate 0/1 values and power-of-two length; return a uint8 array"""
    arr = np.asarray(truth_table)
    if arr.ndim != 1 or not np.all((arr == 0) | (arr == 1)):
        raise InvalidFunctionError("truth table must be a flat sequence of 0/1 values")
    arr = arr.astype(np.uint8)
    _table_dimension(arr)
    return arr


def truth_table_from_string(text: str) -> np.ndarray:
    """Parse 2^n characters '0'/'1'; character x is f at encoding x"""
    text = text.strip()
    if not text or set(text) - {"0", "1"}:
        raise InvalidFunctionError("truth table string must contain only '0'/'1'")
    return as_truth_table(np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0"))


def is_rotation_invariant(truth_table: TruthTable) -> bool:
    """f(rho(x)) == f(x) for every x"""
    arr = as_truth_table(truth_table)
    n = _table_dimension(arr)
    x = np.arange(arr.size, dtype=np.int64)
    return bool(np.array_equal(arr[rotate_word(x, 1, n)], arr))


def expand(f: RsbfFunction, table: OrbitTable) -> np.ndarray:
    """Full truth table of f: truth_table[x] = orbit_values[orbit of x]"""
    _require_matching(f, table.n)
    return np.asarray(f.orbit_values, dtype=np.uint8)[table.orbit_of]


def contract(truth_table: TruthTable, table: OrbitTable) -> RsbfFunction:
    """
    Read a rotation invariant truth table back as orbit values.

    Raises:
        InvalidFunctionError: wrong length or not rotation invariant
    """
    arr = as_truth_table(truth_table)
    if arr.size != 1 << table.n:
        raise InvalidFunctionError(
            f"truth table has {arr.size} entries, expected {1 << table.n}"
        )
    values = arr[table.representatives]
    mismatched = np.flatnonzero(values[table.orbit_of] != arr)
    if mismatched.size:
        x = BitVector(table.n, int(mismatched[0]))
        raise InvalidFunctionError(
            f"truth table is not rotation invariant ({mismatched.size} entries disagree, first at {x})"
        )
    return RsbfFunction(table.n, tuple(int(b) for b in values))


def walsh_brute(truth_table: TruthTable, w: BitVector, max_n: Optional[int] = None) -> int:
    """
    W_f(w) = sum_x (-1)^(f(x) + x . w), straight from the definition.

    Args:
        truth_table: 2^n bits
        w: Point of evaluation (w.n fixes n)
        max_n: Budget (default: MAX_WALSH_BRUTE_N)
    """
    check_budget("brute-force Walsh", w.n, MAX_WALSH_BRUTE_N if max_n is None else max_n)
    arr = as_truth_table(truth_table)
    if arr.size != 1 << w.n:
        raise DimensionError(f"truth table has {arr.size} entries, w has n={w.n}")
    x = np.arange(arr.size, dtype=np.int64)
    exponents = arr ^ parity(x & w.value)
    return int(np.sum(1 - 2 * exponents.astype(np.int64)))


def walsh_spectrum_brute(
    truth_table: TruthTable,
    max_n: Optional[int] = None,
    block_size: int = 256,
) -> np.ndarray:
    """
    All 2^n Walsh values by the definition, evaluated in blocks of w.

    Dense +-1 character rows; no butterfly.
    """
    arr = as_truth_table(truth_table)
    n = _table_dimension(arr)
    check_budget("brute-force Walsh spectrum", n, MAX_SPECTRUM_BRUTE_N if max_n is None else max_n)
    x = np.arange(arr.size, dtype=np.int64)
    signs = 1 - 2 * arr.astype(np.int64)
    spectrum = np.empty(arr.size, dtype=np.int64)
    for start in range(0, arr.size, block_size):
        w = x[start:start + block_size]
        characters = 1 - 2 * parity(w[:, None] & x[None, :])
        spectrum[start:start + w.size] = characters @ signs
    return spectrum
