import pytest

from tools.errors import BudgetExceededError, DimensionError
from tools.oracle_tools import orbit_count_brute, sigma_sum_brute, trace_brute


def test_sigma_sums_n4():
    assert [sigma_sum_brute(4, k) for k in range(4)] == [0, 8, 16, 8]


@pytest.mark.parametrize("n", [1, 2, 3, 8])
def test_identity_shift_sums_to_zero(n):
    # x . x is the weight parity, balanced over F2^n
    assert sigma_sum_brute(n, 0) == 0


def test_shift_reduced_mod_n():
    assert sigma_sum_brute(6, 7) == sigma_sum_brute(6, 1)


def test_trace_brute():
    assert trace_brute(4) == 8
    assert trace_brute(6) == 16
    assert trace_brute(7) == 0


def test_orbit_count_brute():
    assert [orbit_count_brute(n) for n in range(1, 9)] == [2, 3, 4, 6, 8, 14, 20, 36]


def test_negative_shift():
    with pytest.raises(DimensionError):
        sigma_sum_brute(4, -1)


def test_budgets():
    with pytest.raises(BudgetExceededError):
        sigma_sum_brute(12, 1, max_n=10)
    with pytest.raises(BudgetExceededError):
        orbit_count_brute(12, max_n=10)
