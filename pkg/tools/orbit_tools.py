"""
Orbit tools for the RSBF toolkit
Orbits of the cyclic group C_n acting on F2^n by rotation (binary necklaces).

Orbits are indexed by their lexicographically first element, ascending. That
order fixes the row/column order of the RSBF matrix and every downstream
output.

Usage:
    from tools.orbit_tools import enumerate_orbits, count_orbits_burnside

    table = enumerate_orbits(4)
    table.g                       # 6
    count_orbits_burnside(32)     # no enumeration needed
"""

import logging
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Optional

import numpy as np
from sympy import divisors as sympy_divisors, totient

from config.settings import MAX_ENUMERATION_N
from tools.bitvec_tools import BitVector, rotate_word, validate_dimension
from tools.errors import DimensionError, InternalConsistencyError, check_budget

logger = logging.getLogger(__name__)


def euler_phi(k: int) -> int:
    """Number of integers in [1, k] coprime to k"""
    if k < 1:
        raise ValueError(f"euler_phi requires k >= 1, got {k}")
    return int(totient(k))


def divisors(n: int) -> list[int]:
    """Positive divisors of n, ascending"""
    return [int(d) for d in sympy_divisors(n)]


def count_orbits_burnside(n: int) -> int:
    """
    Number of orbits g_n = (1/n) * sum_{k | n} phi(k) * 2^(n/k).

    Exact integer arithmetic; works for every n up to 32 without enumeration.
    """
    n = validate_dimension(n)
    total = sum(euler_phi(k) * 2 ** (n // k) for k in divisors(n))
    g, remainder = divmod(total, n)
    if remainder:
        raise InternalConsistencyError(
            f"Burnside sum {total} not divisible by n={n}"
        )
    return g


def canonical_representative(v: BitVector) -> BitVector:
    """Lexicographically first rotation of v (numeric minimum of the encodings)"""
    best = v.value
    rotated = v.value
    for _ in range(v.n - 1):
        rotated = rotate_word(rotated, 1, v.n)
        best = min(best, rotated)
    return BitVector(v.n, best)


def orbit_multiplicity_profile(v: BitVector) -> Counter:
    """
    Multiset {rho^k(v) : 1 <= k <= n} as a Counter of encodings.

    By orbit-stabilizer every element of the orbit occurs exactly n / |orbit| times.
    """
    return Counter(rotate_word(v.value, k, v.n) for k in range(1, v.n + 1))


@dataclass(frozen=True)
class Orbit:
    """One equivalence class under cyclic shifting"""

    representative: BitVector
    size: int
    elements: tuple[BitVector, ...]


@dataclass(frozen=True, eq=False)
class OrbitTable:
    """
    All orbits of F2^n, sorted by representative encoding.

    Attributes:
        n: dimension
        representatives: int64 array of the g representative encodings, ascending
        sizes: int64 array of orbit sizes
        orbit_of: orbit index of every encoding 0..2^n - 1
        members: all encodings grouped by orbit (ascending within an orbit)
        offsets: members[offsets[i]:offsets[i + 1]] is orbit i
    """

    n: int
    representatives: np.ndarray
    sizes: np.ndarray
    orbit_of: np.ndarray
    members: np.ndarray
    offsets: np.ndarray

    @property
    def g(self) -> int:
        return int(self.representatives.size)

    def representative(self, i: int) -> BitVector:
        return BitVector(self.n, int(self.representatives[i]))

    def elements(self, i: int) -> np.ndarray:
        return self.members[self.offsets[i]:self.offsets[i + 1]]

    def orbit(self, i: int) -> Orbit:
        return Orbit(
            representative=self.representative(i),
            size=int(self.sizes[i]),
            elements=tuple(BitVector(self.n, int(x)) for x in self.elements(i)),
        )

    @cached_property
    def orbits(self) -> list[Orbit]:
        return [self.orbit(i) for i in range(self.g)]

    def index_of(self, v: BitVector) -> int:
        """Index of the orbit containing v"""
        if v.n != self.n:
            raise DimensionError(f"dimension mismatch: {v.n} vs {self.n}")
        return int(self.orbit_of[v.value])

    def representative_strings(self) -> list[str]:
        return [format(int(r), f"0{self.n}b") for r in self.representatives]

    def to_dict(self, include_elements: bool = False) -> dict[str, Any]:
        orbits = []
        for i, rep in enumerate(self.representative_strings()):
            entry: dict[str, Any] = {"representative": rep, "size": int(self.sizes[i])}
            if include_elements:
                entry["elements"] = [format(int(x), f"0{self.n}b") for x in self.elements(i)]
            orbits.append(entry)
        return {"n": self.n, "g": self.g, "orbits": orbits}


def enumerate_orbits(n: int, max_n: Optional[int] = None) -> OrbitTable:
    """
    Enumerate every orbit of C_n on F2^n.

    One pass over all 2^n encodings: an encoding whose minimum rotation is
    itself starts a new orbit.

    Args:
        n: Dimension
        max_n: Enumeration budget (default: MAX_ENUMERATION_N)

    Returns:
        OrbitTable sorted by representative

    Raises:
        DimensionError: n outside 1..32
        BudgetExceededError: 2^n encodings exceed the budget
    """
    n = validate_dimension(n)
    check_budget("orbit enumeration", n, MAX_ENUMERATION_N if max_n is None else max_n)

    encodings = np.arange(1 << n, dtype=np.int64)
    canonical = encodings.copy()
    rotated = encodings
    for _ in range(n - 1):
        rotated = rotate_word(rotated, 1, n)
        np.minimum(canonical, rotated, out=canonical)

    representatives = np.flatnonzero(canonical == encodings).astype(np.int64)
    orbit_of = np.searchsorted(representatives, canonical).astype(np.int64)
    sizes = np.bincount(orbit_of, minlength=representatives.size).astype(np.int64)
    members = np.argsort(orbit_of, kind="stable").astype(np.int64)
    offsets = np.concatenate(([0], np.cumsum(sizes))).astype(np.int64)

    expected = count_orbits_burnside(n)
    if representatives.size != expected:
        raise InternalConsistencyError(
            f"enumerated {representatives.size} orbits for n={n}, Burnside gives {expected}"
        )

    logger.info(f"Enumerated {expected} orbits for n={n}")
    return OrbitTable(
        n=n,
        representatives=representatives,
        sizes=sizes,
        orbit_of=orbit_of,
        members=members,
        offsets=offsets,
    )
