"""Exact rank, kernels, row-space membership, and the modular cross-check."""

import random
from fractions import Fraction

import pytest

from detpres.linalg import RationalMatrix, SparseSpan, in_row_space, kernel_basis, matrix_rank


def random_matrix(rng, m, n, rank_hint=None):
    """A random matrix, optionally of prescribed rank via a product of factors."""
    if rank_hint is None:
        return RationalMatrix(
            [[Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for _ in range(n)] for _ in range(m)]
        )
    left = [[rng.randint(-3, 3) for _ in range(rank_hint)] for _ in range(m)]
    right = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rank_hint)]
    rows = [
        [sum(left[i][k] * right[k][j] for k in range(rank_hint)) for j in range(n)]
        for i in range(m)
    ]
    return RationalMatrix(rows)


def test_identity_rank():
    assert matrix_rank(RationalMatrix.identity(3)) == 3


def test_zero_matrix_rank():
    assert matrix_rank(RationalMatrix.zeros(4, 5)) == 0


def test_identity_kernel_empty():
    assert kernel_basis(RationalMatrix.identity(4)) == []


def test_one_row_kernel():
    basis = kernel_basis(RationalMatrix([[1, 1]]))
    assert len(basis) == 1
    v = basis[0]
    assert v[0] * 1 + v[1] * 1 == 0
    assert any(v)


def test_kernel_vectors_annihilated_and_counted():
    rng = random.Random(5)
    for _ in range(40):
        m, n = rng.randint(1, 7), rng.randint(1, 7)
        a = random_matrix(rng, m, n)
        basis = a.kernel_basis()
        assert len(basis) == n - a.rank()
        for v in basis:
            for i in range(m):
                assert sum(a.entry(i, j) * v[j] for j in range(n)) == 0


def test_rank_equals_transpose_rank():
    rng = random.Random(9)
    for _ in range(40):
        a = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        assert a.rank() == a.transpose().rank()


def test_prescribed_rank():
    rng = random.Random(31)
    for r in (1, 2, 3):
        a = random_matrix(rng, 6, 6, rank_hint=r)
        assert a.rank() <= r


def test_in_row_space_identity():
    a = RationalMatrix.identity(3)
    assert in_row_space(a, [5, Fraction(-2, 3), 0])


def test_in_row_space_negative():
    a = RationalMatrix([[1, 0]])
    assert not in_row_space(a, [0, 1])
    assert in_row_space(a, [7, 0])


def test_in_row_space_length_check():
    with pytest.raises(ValueError):
        in_row_space(RationalMatrix([[1, 0]]), [1, 0, 0])


def test_in_row_space_random_combinations():
    rng = random.Random(41)
    for _ in range(30):
        a = random_matrix(rng, 4, 6)
        combo = [Fraction(0)] * 6
        for i in range(4):
            c = rng.randint(-3, 3)
            for j in range(6):
                combo[j] += c * a.entry(i, j)
        assert a.in_row_space(combo)


def test_modular_rank_agreement():
    """Rational rank equals rank modulo a random 31-bit prime (retry once)."""
    rng = random.Random(101)
    primes = [p for p in range(2**30, 2**30 + 20000) if _is_prime(p)]
    for _ in range(100):
        a = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        exact = a.rank()
        p = rng.choice(primes)
        try:
            modular = a.rank_mod(p)
        except ValueError:
            p = rng.choice(primes)
            modular = a.rank_mod(p)
        assert modular <= exact
        if modular != exact:
            q = rng.choice(primes)
            assert a.rank_mod(q) == exact, "two unlucky primes in a row flags a bug"


def _is_prime(n):
    if n % 2 == 0:
        return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def test_sparse_span_matches_dense_rank():
    rng = random.Random(55)
    for _ in range(25):
        m, n = rng.randint(1, 8), rng.randint(1, 8)
        a = random_matrix(rng, m, n)
        span = SparseSpan()
        for i in range(m):
            vec = {j: a.entry(i, j) for j in range(n) if a.entry(i, j)}
            span.add(vec)
        assert span.dim == a.rank()


def test_sparse_span_contains():
    span = SparseSpan()
    span.add({0: Fraction(1), 1: Fraction(-1)})
    assert span.contains({0: Fraction(2), 1: Fraction(-2)})
    assert not span.contains({0: Fraction(1)})
    assert span.dim == 1
