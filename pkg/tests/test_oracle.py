import numpy as np
import pytest

from rnc_hilbert.cubic_hf import contains_curve, ideal_dim, symbolic_power_dim
from rnc_hilbert.oracle import (
    ALT_PRIME,
    DEFAULT_PRIME,
    ConfigurationError,
    build_matrix,
    build_matrix_conic,
    build_matrix_cubic,
    default_prime,
    generic_position_probe,
    oracle_dim_conic,
    oracle_dim_cubic,
    oracle_dim_intersection_with_curve,
    oracle_dim_power,
    rank,
    rank_exact,
    rank_mod_p,
    stable_oracle_dim_cubic,
    validate_prime,
)
from rnc_hilbert.schemes import InvalidInputError, binomial, scheme_degree

REMARK = [3, 3, 2, 2, 2, 2, 1]


def test_single_point_row():
    m = build_matrix_cubic([1], 1, [7])
    assert m.entries.tolist() == [[1, 7, 49, 343]]
    assert m.cols - rank(m) == 3


def test_three_points_in_degree_one():
    m = build_matrix_cubic([1, 1, 1], 1, [2, 3, 5])
    assert (m.rows, m.cols) == (3, 4)
    assert rank(m) == 3


def test_double_point_shape():
    m = build_matrix_cubic([2], 2, [4])
    assert (m.rows, m.cols) == (4, 10)
    assert m.cols - rank(m) == 6


def test_derivative_rows_by_hand():
    # degree 2 forms in x0..x3, first partials at (1:1:1:1); column order
    # x0^2, x0x1, x0x2, x0x3, x1^2, ...
    m = build_matrix([(1, 1, 1, 1)], [2], 2, prime=None)
    row_d0 = m.entries[0].tolist()
    assert row_d0[:4] == [2, 1, 1, 1] and set(row_d0[4:]) == {0}


@pytest.mark.parametrize("mults, t", [([3, 2, 2, 1], 5), ([4, 4, 1], 7), ([2, 2, 2, 2, 2], 4)])
def test_matrix_shape_matches_degree(mults, t):
    lambdas = list(range(1, len(mults) + 1))
    m = build_matrix_cubic(mults, t, lambdas)
    assert m.rows == scheme_degree(mults, 3)
    assert m.cols == binomial(t + 3, 3)
    m2 = build_matrix_conic(mults, t, lambdas)
    assert m2.rows == scheme_degree(mults, 2)
    assert m2.cols == binomial(t + 2, 2)


def test_high_multiplicity_rows_are_capped():
    # vanishing to order 5 in degree 2 forces F = 0
    m = build_matrix_cubic([5], 2, [3])
    assert rank(m) == m.cols == 10


def test_rank_basics():
    assert rank_mod_p(np.zeros((3, 5), dtype=np.int64), DEFAULT_PRIME) == 0
    assert rank_mod_p(np.eye(3, dtype=np.int64), DEFAULT_PRIME) == 3
    assert rank_exact(np.eye(3, dtype=object)) == 3
    assert rank_exact([[0, 0], [0, 0]]) == 0
    a = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
    assert rank_mod_p(np.array(a), 7) == rank_exact(a) == 2


def test_rank_mod_p_agrees_with_exact_on_random_matrices():
    rng = np.random.default_rng(11)
    for _ in range(30):
        r, c, k = rng.integers(1, 9, size=3)
        a = rng.integers(-5, 6, size=(r, k)) @ rng.integers(-5, 6, size=(k, c))
        assert rank_mod_p(a % DEFAULT_PRIME, DEFAULT_PRIME) == rank_exact(a.tolist())


def test_repeated_parameter_rejected():
    with pytest.raises(InvalidInputError):
        build_matrix_cubic([1, 1], 1, [3, 3])
    with pytest.raises(InvalidInputError):
        build_matrix_cubic([1, 1], 1, [3, 3 + DEFAULT_PRIME])


def test_prime_validation(monkeypatch):
    with pytest.raises(ConfigurationError):
        validate_prime(15)
    with pytest.raises(ConfigurationError):
        build_matrix_cubic([1], 7, [1], prime=7)
    with pytest.raises(ConfigurationError):
        validate_prime(4_294_967_311)  # prime, but too large for int64 products
    monkeypatch.setenv("RNC_HILBERT_PRIME", str(ALT_PRIME))
    assert default_prime() == ALT_PRIME
    monkeypatch.setenv("RNC_HILBERT_PRIME", "12")
    with pytest.raises(ConfigurationError):
        default_prime()


@pytest.mark.parametrize("seed", range(3))
def test_oracle_dim_cubic_examples(seed):
    assert oracle_dim_cubic(REMARK, 4, seed) == 1
    assert oracle_dim_cubic([], 2, seed) == 10
    assert oracle_dim_cubic([2] * 5, 4, seed) == 15


def test_exact_mode_agrees():
    assert oracle_dim_cubic(REMARK, 4, seed=1, prime=None) == 1
    assert oracle_dim_conic([2, 2, 1, 1], 3, seed=1, prime=None) == 2
    assert oracle_dim_power(2, 4, prime=None) == 6


def test_oracle_dim_conic_examples():
    assert oracle_dim_conic([1] * 5, 2) == 1
    assert oracle_dim_conic([2], 1) == 0
    assert oracle_dim_conic([2, 2, 1, 1], 3) == 2


@pytest.mark.parametrize("n, t, dim", [(1, 3, 10), (2, 3, 0), (2, 4, 6), (0, 1, 4)])
def test_oracle_dim_power_examples(n, t, dim):
    assert oracle_dim_power(n, t) == dim


def test_oracle_power_matches_closed_form():
    for n in range(4):
        for t in range(11):
            assert oracle_dim_power(n, t) == symbolic_power_dim(n, t)


def test_intersection_with_curve_examples():
    assert oracle_dim_intersection_with_curve(REMARK, 4) == 1
    assert oracle_dim_intersection_with_curve([1, 1, 1], 1) == 0
    assert oracle_dim_intersection_with_curve([], 2) == 3


def test_intersection_with_empty_scheme_is_ideal_of_curve():
    for t in range(8):
        assert oracle_dim_intersection_with_curve([], t, seed=t) == symbolic_power_dim(1, t)


@pytest.mark.parametrize("mults, t", [([3] * 7, 6), ([2, 2, 2, 1, 1, 1, 1], 3), ([1] * 7, 2), ([4, 3, 1], 6)])
def test_containment_criterion(mults, t):
    assert ideal_dim(mults, t) > 0
    same = oracle_dim_intersection_with_curve(mults, t) == oracle_dim_cubic(mults, t)
    assert contains_curve(mults, t) == same


def test_position_independence_across_seeds_and_primes():
    values = stable_oracle_dim_cubic(REMARK, 5, seeds=range(5), primes=(DEFAULT_PRIME, ALT_PRIME))
    assert set(values.values()) == {ideal_dim(REMARK, 5)}


def test_probe():
    res = generic_position_probe([1], 1, trials=1, seed=0)
    assert res.rnc_dim == 3 and res.generic_dims == [3]
    res = generic_position_probe(REMARK, 4, trials=5, seed=2)
    assert res.rnc_dim == 1 and len(res.generic_dims) == 5
    assert all(g <= 1 for g in res.generic_dims)
    res = generic_position_probe([2] * 5, 4, trials=3, seed=4)
    assert res.rnc_dim == 15 and res.consistent
    with pytest.raises(InvalidInputError):
        generic_position_probe([1], 1, trials=0)


def test_probe_is_reproducible():
    a = generic_position_probe([2, 2, 1, 1, 1], 3, trials=3, seed=9)
    b = generic_position_probe([2, 2, 1, 1, 1], 3, trials=3, seed=9)
    assert a.generic_dims == b.generic_dims
