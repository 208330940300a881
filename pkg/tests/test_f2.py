import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from hfsplice import f2


def matrices(max_rows=5, max_cols=5):
    return st.tuples(st.integers(1, max_rows), st.integers(1, max_cols), st.integers(0, 2**32 - 1)).map(
        lambda t: np.random.default_rng(t[2]).integers(0, 2, size=(t[0], t[1])).astype(np.uint8)
    )


def span_size(M):
    """Brute force: number of distinct vectors M x over all x."""
    n = M.shape[1]
    seen = {tuple(f2.matmul(M, np.array(x, dtype=np.uint8).reshape(n, 1)).ravel()) for x in itertools.product((0, 1), repeat=n)}
    return len(seen)


@given(matrices())
def test_rank_matches_span_count(M):
    assert 2 ** f2.rank(M) == span_size(M)


@given(matrices(5, 5), st.integers(0, 2**32 - 1))
def test_solve_and_column_space(M, seed):
    rng = np.random.default_rng(seed)
    x = rng.integers(0, 2, size=M.shape[1]).astype(np.uint8)
    b = f2.matmul(M, x.reshape(-1, 1)).ravel()
    sol = f2.solve(M, b)
    assert sol is not None and np.array_equal(f2.matmul(M, sol.reshape(-1, 1)).ravel(), b)
    assert f2.in_column_space(M, b)
    c = rng.integers(0, 2, size=M.shape[0]).astype(np.uint8)
    in_span = span_size(np.hstack([M, c.reshape(-1, 1)])) == span_size(M)
    assert f2.in_column_space(M, c) == in_span


@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_inverse(n, seed):
    M = np.random.default_rng(seed).integers(0, 2, size=(n, n)).astype(np.uint8)
    if f2.rank(M) < n:
        with pytest.raises(np.linalg.LinAlgError):
            f2.inverse(M)
    else:
        assert np.array_equal(f2.matmul(M, f2.inverse(M)), f2.eye(n))


@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_reduce_columns_pairs_give_homology(n, seed):
    rng = np.random.default_rng(seed)
    # a random strictly upper triangular differential with D^2 = 0: conjugate a matching
    P = np.triu(rng.integers(0, 2, size=(n, n)).astype(np.uint8), 1) ^ f2.eye(n)
    D0 = f2.zeros(n)
    free = list(range(n))
    rng.shuffle(free)
    for k in range(0, len(free) - 1, 2):
        s, t = max(free[k], free[k + 1]), min(free[k], free[k + 1])
        if rng.random() < 0.7:
            D0[t, s] = 1
    D = f2.matmul(f2.matmul(P, D0), f2.inverse(P))
    red = f2.reduce_columns(D)
    assert np.array_equal(red.R, f2.matmul(D, red.V))
    assert len(red.essential()) == n - 2 * f2.rank(D)
    for s, t in red.pairs.items():
        assert np.nonzero(red.R[:, s])[0][-1] == t
