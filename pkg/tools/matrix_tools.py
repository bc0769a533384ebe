"""
Matrix tools for the RSBF toolkit
Builds the g_n x g_n matrix A with A[i, j] = sum_{x in G_{n,i}} (-1)^(x . L_j)
(L_j the representative of orbit j), checks A^2 = 2^n I, and derives the
trace and the eigenvalue multiplicities of +-2^(n/2) without any floating
point: A^2 = 2^n I makes A diagonalizable, so pos + neg = g_n and
pos - neg = Tr(A) / 2^(n/2) fix both counts.

Usage:
    from tools.orbit_tools import enumerate_orbits
    from tools.matrix_tools import build, verify_square_identity, eigen_multiplicities

    matrix = build(enumerate_orbits(4))
    verify_square_identity(matrix).holds    # True
    eigen_multiplicities(6)                 # EigenReport(positive=8, negative=6, ...)
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Any, Optional

import numpy as np

from config.settings import (
    DEFAULT_PROBE_TRIALS,
    DEFAULT_SEED,
    MAX_CLOSED_FORM_N,
    MAX_MATRIX_N,
    MAX_SQUARE_CHECK_N,
)
from tools.bitvec_tools import parity, rotate_word, validate_dimension
from tools.errors import (
    ArithmeticOverflowError,
    DimensionError,
    InternalConsistencyError,
    TheoremScopeError,
    check_budget,
)
from tools.orbit_tools import OrbitTable, count_orbits_burnside, divisors, euler_phi

logger = logging.getLogger(__name__)

INT64_MAX = np.iinfo(np.int64).max


@dataclass(frozen=True, eq=False)
class RsbfMatrix:
    """
    The matrix nA together with the orbit table that fixes its row/column order.

    Attributes:
        n: dimension
        g: order of the matrix (g_n)
        entries: g x g int64 array
        table: OrbitTable the matrix was built from
    """

    n: int
    g: int
    entries: np.ndarray
    table: OrbitTable

    def entry(self, i: int, j: int) -> int:
        return int(self.entries[i, j])

    @property
    def representatives(self) -> list[str]:
        return self.table.representative_strings()

    def rows(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "g": self.g,
            "representatives": self.representatives,
            "matrix": self.rows(),
        }


@dataclass(frozen=True)
class CyclicShift:
    """
    sigma = rho^k acting on F2^n.

    Attributes:
        n: dimension
        k: shift amount in [0, n - 1]
        order: n / gcd(n, k); the identity (k = 0) has order 1
        m: gcd(n, k), i.e. n / order
    """

    n: int
    k: int
    order: int
    m: int

    @classmethod
    def of(cls, n: int, k: int) -> "CyclicShift":
        n = validate_dimension(n)
        if k < 0:
            raise DimensionError(f"negative shift count {k}")
        k %= n
        m = gcd(n, k)
        return cls(n=n, k=k, order=n // m, m=m)


@dataclass(frozen=True)
class EigenReport:
    """Multiplicities of +2^(n/2) and -2^(n/2) plus the trace"""

    n: int
    g: int
    trace: int
    positive_multiplicity: int
    negative_multiplicity: int

    def to_dict(self) -> dict[str, int]:
        return {
            "n": self.n,
            "g": self.g,
            "trace": self.trace,
            "positive": self.positive_multiplicity,
            "negative": self.negative_multiplicity,
        }


@dataclass(frozen=True)
class SquareIdentityFailure:
    i: int
    j: int
    got: int
    expected: int


@dataclass(frozen=True)
class SquareIdentityVerdict:
    """Result of checking A^2 = 2^n I; failure holds the first bad entry in row-major order"""

    n: int
    g: int
    holds: bool
    diagonal: int
    failure: Optional[SquareIdentityFailure] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "holds": self.holds,
            "diagonal": self.diagonal,
            "failure": None if self.failure is None else {
                "i": self.failure.i,
                "j": self.failure.j,
                "got": self.failure.got,
                "expected": self.failure.expected,
            },
        }


@dataclass(frozen=True)
class ProbeVerdict:
    """Result of checking A(Ax) = 2^n x on seeded random integer vectors"""

    n: int
    g: int
    trials: int
    seed: int
    holds: bool
    failed_trial: Optional[int] = None

    def to_dict(self) -> dict[str, Any]:
        return {
            "holds": self.holds,
            "trials": self.trials,
            "seed": self.seed,
            "failed_trial": self.failed_trial,
        }


def _blocks(count: int, threads: int) -> list[np.ndarray]:
    parts = max(1, min(threads, count))
    return [block for block in np.array_split(np.arange(count), parts) if block.size]


def _run_blocks(worker, blocks: list[np.ndarray], threads: int) -> list[np.ndarray]:
    if threads <= 1 or len(blocks) == 1:
        return [worker(block) for block in blocks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, blocks))


def build(table: OrbitTable, threads: int = 1, max_n: Optional[int] = None) -> RsbfMatrix:
    """
    Build nA from an orbit table.

    Column j is accumulated from the dot-product parity of every encoding with
    the representative L_j, summed per orbit.

    Args:
        table: Orbit table (fixes row/column order)
        threads: Worker threads over column blocks; output is identical for any value
        max_n: Build budget (default: MAX_MATRIX_N)

    Returns:
        RsbfMatrix
    """
    n, g = table.n, table.g
    check_budget("matrix build", n, MAX_MATRIX_N if max_n is None else max_n)
    starts = table.offsets[:-1]

    def column_block(columns: np.ndarray) -> np.ndarray:
        block = np.empty((g, columns.size), dtype=np.int64)
        for c, j in enumerate(columns):
            signs = 1 - 2 * parity(table.members & table.representatives[j])
            block[:, c] = np.add.reduceat(signs, starts)
        return block

    blocks = _run_blocks(column_block, _blocks(g, threads), threads)
    entries = np.hstack(blocks)
    logger.info(f"Built {g}x{g} RSBF matrix for n={n}")
    return RsbfMatrix(n=n, g=g, entries=entries, table=table)


def _guard_product(m: RsbfMatrix, scale: int = 1) -> None:
    """Raise if a row-by-column accumulation of m could leave int64"""
    largest = int(np.abs(m.entries).max()) if m.entries.size else 0
    bound = m.g * largest * largest * scale
    if bound > INT64_MAX:
        raise ArithmeticOverflowError(
            f"product bound {bound} for n={m.n} exceeds 64-bit accumulator"
        )


def verify_square_identity(
    m: RsbfMatrix,
    threads: int = 1,
    max_n: Optional[int] = None,
) -> SquareIdentityVerdict:
    """
    Check m @ m == 2^n I exactly.

    Args:
        m: Matrix to check
        threads: Worker threads over output row blocks
        max_n: Square-check budget (default: MAX_SQUARE_CHECK_N)

    Returns:
        SquareIdentityVerdict with the first failing (i, j, got, expected), if any

    Raises:
        ArithmeticOverflowError: entries too large for a 64-bit accumulator
    """
    check_budget("square identity", m.n, MAX_SQUARE_CHECK_N if max_n is None else max_n)
    _guard_product(m)
    diagonal = 1 << m.n
    entries = m.entries

    def row_block(rows: np.ndarray) -> np.ndarray:
        product = entries[rows] @ entries
        product[np.arange(rows.size), rows] -= diagonal
        return product

    blocks = _blocks(m.g, threads)
    residuals = _run_blocks(row_block, blocks, threads)
    for rows, residual in zip(blocks, residuals):
        bad = np.argwhere(residual != 0)
        if bad.size:
            r, j = (int(v) for v in bad[0])
            i = int(rows[r])
            expected = diagonal if i == j else 0
            failure = SquareIdentityFailure(
                i=i, j=j, got=int(residual[r, j]) + expected, expected=expected
            )
            logger.warning(f"Square identity fails for n={m.n} at {failure}")
            return SquareIdentityVerdict(m.n, m.g, False, diagonal, failure)
    return SquareIdentityVerdict(m.n, m.g, True, diagonal)


def probe_square_identity(
    m: RsbfMatrix,
    trials: int = DEFAULT_PROBE_TRIALS,
    seed: int = DEFAULT_SEED,
) -> ProbeVerdict:
    """
    Check A(Ax) = 2^n x for seeded random integer vectors x in [-8, 8]^g.

    O(g^2) per trial, so it reaches matrices whose full product is too costly.
    """
    _guard_product(m, scale=8 * m.g)
    rng = np.random.default_rng(seed)
    scale = 1 << m.n
    for trial in range(trials):
        x = rng.integers(-8, 9, size=m.g, dtype=np.int64)
        if not np.array_equal(m.entries @ (m.entries @ x), scale * x):
            logger.warning(f"Square identity probe failed for n={m.n} on trial {trial}")
            return ProbeVerdict(m.n, m.g, trials, seed, False, trial)
    return ProbeVerdict(m.n, m.g, trials, seed, True)


def trace_direct(m: RsbfMatrix) -> int:
    """Sum of the diagonal"""
    return int(np.trace(m.entries))


def trace_via_orbit_stabilizer(table: OrbitTable) -> int:
    """
    Tr(A) = sum_i (sum_{sigma in C_n} (-1)^(L_i . sigma L_i)) * |G_i| / n.

    Only the representatives are touched; every orbit element is some
    rotation of its representative.
    """
    n = table.n
    reps = table.representatives
    inner = np.zeros(reps.size, dtype=np.int64)
    for k in range(1, n + 1):
        inner += 1 - 2 * parity(reps & rotate_word(reps, k, n))
    total = int(np.sum(inner * table.sizes))
    trace, remainder = divmod(total, n)
    if remainder:
        raise InternalConsistencyError(
            f"orbit-stabilizer trace sum {total} not divisible by n={n}"
        )
    return trace


def sigma_sum_closed_form(s: CyclicShift) -> int:
    """
    S_sigma = sum_x (-1)^(x . sigma x): 2^(n/2 + n/ord) for even order, 0 for odd order.
    """
    if s.order % 2:
        return 0
    return 2 ** (s.n // 2 + s.n // s.order)


def trace_via_sigma_sums(n: int) -> int:
    """Tr(A) = (1/n) * sum over the n shifts of S_sigma"""
    n = validate_dimension(n)
    total = sum(sigma_sum_closed_form(CyclicShift.of(n, k)) for k in range(n))
    trace, remainder = divmod(total, n)
    if remainder:
        raise InternalConsistencyError(
            f"sum of S_sigma {total} not divisible by n={n}"
        )
    return trace


def trace_closed_form(n: int) -> int:
    """
    Tr(A) = (1/n) * 2^(n/2) * sum_{d | n, n/d even} phi(n/d) * 2^d for even n, 0 for odd n.
    """
    n = validate_dimension(n)
    if n % 2:
        return 0
    total = sum(euler_phi(n // d) * 2 ** d for d in divisors(n) if (n // d) % 2 == 0)
    trace, remainder = divmod(2 ** (n // 2) * total, n)
    if remainder:
        raise InternalConsistencyError(f"divisor-sum trace not divisible by n={n}")
    return trace


def _multiplicities(n: int, g: int, difference: int) -> tuple[int, int]:
    """Split g into (pos, neg) with pos - neg = difference"""
    if (g + difference) % 2 or abs(difference) > g:
        raise InternalConsistencyError(
            f"no integer multiplicities with g={g}, pos-neg={difference} (n={n})"
        )
    return (g + difference) // 2, (g - difference) // 2


def eigen_multiplicities(n: int, max_n: Optional[int] = None) -> EigenReport:
    """
    Multiplicities of the eigenvalues +-2^(n/2) of nA from closed forms.

    Odd n: both g_n / 2. Even n: g_n / 2 +- (1 / 2n) * sum_{k | n, k even} phi(k) 2^(n/k).
    The trace from the shift sums is checked against (pos - neg) * 2^(n/2).

    Raises:
        TheoremScopeError: n <= 2
        BudgetExceededError: n above MAX_CLOSED_FORM_N (or max_n)
    """
    n = validate_dimension(n)
    if n <= 2:
        raise TheoremScopeError(f"eigenvalue multiplicities are stated for n > 2, got n={n}")
    check_budget("eigen report", n, MAX_CLOSED_FORM_N if max_n is None else max_n)

    g = count_orbits_burnside(n)
    trace = trace_via_sigma_sums(n)
    if n % 2:
        if g % 2 or trace != 0:
            raise InternalConsistencyError(f"odd n={n} gives g={g}, trace={trace}")
        return EigenReport(n, g, trace, g // 2, g // 2)

    excess = sum(euler_phi(k) * 2 ** (n // k) for k in divisors(n) if k % 2 == 0)
    difference, remainder = divmod(excess, n)
    if remainder:
        raise InternalConsistencyError(f"eigen excess {excess} not divisible by n={n}")
    positive, negative = _multiplicities(n, g, difference)
    if trace != difference * 2 ** (n // 2):
        raise InternalConsistencyError(
            f"trace {trace} disagrees with multiplicities ({positive}, {negative}) for n={n}"
        )
    return EigenReport(n, g, trace, positive, negative)


def eigen_report_from_matrix(m: RsbfMatrix) -> EigenReport:
    """
    Multiplicities recovered from a built matrix: pos + neg = g and
    pos - neg = trace_direct / 2^(n/2).

    For odd n the trace must vanish since 2^(n/2) is irrational.
    """
    trace = trace_direct(m)
    if m.n % 2:
        if trace != 0:
            raise InternalConsistencyError(f"odd n={m.n} matrix has trace {trace}")
        difference = 0
    else:
        difference, remainder = divmod(trace, 2 ** (m.n // 2))
        if remainder:
            raise InternalConsistencyError(
                f"trace {trace} not divisible by 2^{m.n // 2}"
            )
    positive, negative = _multiplicities(m.n, m.g, difference)
    return EigenReport(m.n, m.g, trace, positive, negative)
