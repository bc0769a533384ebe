"""
Reference oracle tools for the RSBF toolkit
Deliberately naive brute-force versions of every closed form. They share
nothing with the main modules except the bit-vector word primitives, run
sequentially and cache nothing.
"""

import logging
from typing import Optional

from config.settings import MAX_ORACLE_N, MAX_ORACLE_ORBIT_N
from tools.bitvec_tools import dot_word, rotate_word, validate_dimension
from tools.errors import DimensionError, InternalConsistencyError, check_budget

logger = logging.getLogger(__name__)


def sigma_sum_brute(n: int, k: int, max_n: Optional[int] = None) -> int:
    """Literal sum over all x in F2^n of (-1)^(x . rho^k x)"""
    n = validate_dimension(n)
    if k < 0:
        raise DimensionError(f"negative shift count {k}")
    check_budget("oracle shift sum", n, MAX_ORACLE_N if max_n is None else max_n)
    total = 0
    for x in range(1 << n):
        total += -1 if dot_word(x, rotate_word(x, k, n)) else 1
    return total


def trace_brute(n: int, max_n: Optional[int] = None) -> int:
    """(1/n) * sum_{k=0}^{n-1} sigma_sum_brute(n, k)"""
    n = validate_dimension(n)
    total = sum(sigma_sum_brute(n, k, max_n=max_n) for k in range(n))
    trace, remainder = divmod(total, n)
    if remainder:
        raise InternalConsistencyError(f"oracle shift sums {total} not divisible by n={n}")
    logger.debug(f"Oracle trace for n={n}: {trace}")
    return trace


def orbit_count_brute(n: int, max_n: Optional[int] = None) -> int:
    """
    Number of distinct orbits, found by walking all 2^n vectors and marking
    every rotation of each unseen one.
    """
    n = validate_dimension(n)
    check_budget("oracle orbit count", n, MAX_ORACLE_ORBIT_N if max_n is None else max_n)
    seen = bytearray(1 << n)
    count = 0
    for x in range(1 << n):
        if seen[x]:
            continue
        count += 1
        y = x
        for _ in range(n):
            seen[y] = 1
            y = rotate_word(y, 1, n)
    return count
