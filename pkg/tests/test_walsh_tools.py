import itertools

import numpy as np
import pytest

from tools.bitvec_tools import BitVector, all_vectors, rotate
from tools.errors import DimensionError, InvalidFunctionError
from tools.matrix_tools import build
from tools.orbit_tools import enumerate_orbits
from tools.walsh_tools import (
    RsbfFunction,
    WalshSpectrum,
    contract,
    expand,
    function_from_spectrum,
    is_bent,
    is_rotation_invariant,
    spectrum_via_matrix,
    truth_table_from_string,
    walsh_brute,
    walsh_spectrum_brute,
)

N4_BENT = RsbfFunction.from_string("000110", 4)
N4_BENT_TRUTH_TABLE = "0000010100110110"


@pytest.fixture(scope="module")
def matrices():
    return {n: build(enumerate_orbits(n)) for n in range(1, 11)}


def all_functions(n: int, g: int):
    for bits in itertools.product((0, 1), repeat=g):
        yield RsbfFunction(n, bits)


def test_n4_bent_spectrum(matrices):
    spectrum = spectrum_via_matrix(N4_BENT, matrices[4])
    assert spectrum.values == (4, 4, 4, -4, -4, 4)
    assert is_bent(N4_BENT, matrices[4])


def test_n4_spectrum_matches_oracle_at_representatives(matrices):
    table = matrices[4].table
    truth_table = expand(N4_BENT, table)
    oracle = [walsh_brute(truth_table, table.representative(j)) for j in range(table.g)]
    assert oracle == [4, 4, 4, -4, -4, 4]


def test_constant_functions(matrices):
    m = matrices[4]
    zero = RsbfFunction.constant(4, 0)
    assert spectrum_via_matrix(zero, m).values == (16, 0, 0, 0, 0, 0)
    assert spectrum_via_matrix(zero.complement(), m).values == (-16, 0, 0, 0, 0, 0)
    assert not is_bent(zero, m)
    assert not is_bent(zero.complement(), m)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_matrix_spectrum_matches_oracle_exhaustively(n, matrices):
    m = matrices[n]
    table = m.table
    for f in all_functions(n, table.g):
        truth_table = expand(f, table)
        expected = [walsh_brute(truth_table, table.representative(j)) for j in range(table.g)]
        assert list(spectrum_via_matrix(f, m).values) == expected


@pytest.mark.parametrize("n", [6, 8, 10])
def test_matrix_spectrum_matches_oracle_on_samples(n, matrices):
    m = matrices[n]
    table = m.table
    rng = np.random.default_rng(1000 + n)
    for _ in range(200):
        f = RsbfFunction(n, tuple(int(b) for b in rng.integers(0, 2, size=table.g)))
        full = walsh_spectrum_brute(expand(f, table), max_n=10)
        assert list(spectrum_via_matrix(f, m).values) == full[table.representatives].tolist()


@pytest.mark.parametrize("n", range(1, 7))
def test_walsh_constant_on_orbits(n, matrices):
    table = matrices[n].table
    functions = all_functions(n, table.g) if table.g <= 8 else (
        RsbfFunction(n, tuple(int(b) for b in row))
        for row in np.random.default_rng(n).integers(0, 2, size=(64, table.g))
    )
    for f in functions:
        full = walsh_spectrum_brute(expand(f, table))
        assert np.array_equal(full, full[table.representatives][table.orbit_of])


def test_walsh_constant_on_orbits_exhaustive_n6(matrices):
    table = matrices[6].table
    values = np.array(list(itertools.product((0, 1), repeat=table.g)), dtype=np.int64)
    signs = (1 - 2 * values)[:, table.orbit_of]
    x = np.arange(64, dtype=np.int64)
    characters = np.array([[1 - 2 * (bin(int(a & b)).count("1") % 2) for b in x] for a in x])
    spectra = signs @ characters
    assert np.array_equal(spectra, spectra[:, table.representatives][:, table.orbit_of])


@pytest.mark.parametrize("n", [4, 7, 10])
def test_parseval(n, matrices):
    m = matrices[n]
    rng = np.random.default_rng(n)
    for _ in range(20):
        f = RsbfFunction(n, tuple(int(b) for b in rng.integers(0, 2, size=m.g)))
        assert spectrum_via_matrix(f, m).satisfies_parseval(m.table)


@pytest.mark.parametrize("n", [5, 6])
def test_complement_negates_spectrum(n, matrices):
    m = matrices[n]
    rng = np.random.default_rng(n)
    for _ in range(20):
        f = RsbfFunction(n, tuple(int(b) for b in rng.integers(0, 2, size=m.g)))
        assert spectrum_via_matrix(f.complement(), m) == spectrum_via_matrix(f, m).negated()
        assert is_bent(f.complement(), m) == is_bent(f, m)


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9])
def test_odd_n_never_bent(n, matrices):
    m = matrices[n]
    rng = np.random.default_rng(n)
    for _ in range(20):
        f = RsbfFunction(n, tuple(int(b) for b in rng.integers(0, 2, size=m.g)))
        assert not is_bent(f, m)


@pytest.mark.parametrize("n", [2, 4, 7])
def test_spectrum_inverts(n, matrices):
    m = matrices[n]
    for f in itertools.islice(all_functions(n, m.g), 40):
        assert function_from_spectrum(spectrum_via_matrix(f, m), m) == f


def test_function_from_spectrum_rejects_non_spectra(matrices):
    m = matrices[4]
    with pytest.raises(InvalidFunctionError):
        function_from_spectrum(WalshSpectrum(4, (1, 0, 0, 0, 0, 0)), m)
    with pytest.raises(InvalidFunctionError):
        function_from_spectrum(WalshSpectrum(4, (16, 0, 0)), m)


def test_expand_and_contract(matrices):
    table = matrices[4].table
    truth_table = expand(N4_BENT, table)
    assert "".join(str(b) for b in truth_table) == N4_BENT_TRUTH_TABLE
    assert is_rotation_invariant(truth_table)
    assert contract(truth_table_from_string(N4_BENT_TRUTH_TABLE), table) == N4_BENT


def test_contract_rejects_non_invariant_table(matrices):
    table = matrices[3].table
    with pytest.raises(InvalidFunctionError):
        contract(truth_table_from_string("01000000"), table)


def test_expanded_table_is_rotation_invariant(matrices):
    table = matrices[5].table
    f = RsbfFunction(5, (0, 1, 1, 0, 1, 0, 0, 1))
    truth_table = expand(f, table)
    for v in all_vectors(5):
        assert truth_table[rotate(v, 1).value] == truth_table[v.value]


@pytest.mark.parametrize("bits,n", [("0101", 4), ("00011a", 4), ("", 4), ("012", 2)])
def test_function_parsing_errors(bits, n):
    with pytest.raises(InvalidFunctionError):
        RsbfFunction.from_string(bits, n)


@pytest.mark.parametrize("text", ["010", "0120", ""])
def test_truth_table_parsing_errors(text):
    with pytest.raises(InvalidFunctionError):
        truth_table_from_string(text)


def test_dimension_mismatch(matrices):
    with pytest.raises(DimensionError):
        spectrum_via_matrix(N4_BENT, matrices[5])
    with pytest.raises(DimensionError):
        walsh_brute([0, 1, 1, 0], BitVector.from_string("011"))


def test_walsh_brute_of_zero_function():
    zero = [0] * 16
    assert walsh_brute(zero, BitVector.from_string("0000")) == 16
    for w in list(all_vectors(4))[1:]:
        assert walsh_brute(zero, w) == 0


def test_expand_single_orbit(matrices):
    table = matrices[4].table
    truth_table = expand(RsbfFunction(4, (0, 1, 0, 0, 0, 0)), table)
    assert np.flatnonzero(truth_table).tolist() == [1, 2, 4, 8]
    assert not expand(RsbfFunction.constant(4), table).any()
