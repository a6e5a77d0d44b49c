import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from morozov.gfp import (FieldMatrix, Fp, FpPoly, Subspace, factor, inv_mod,
                         is_prime, kernel, rref)


def naive_row_reduce(rows, cols, p):
    """Independent elimination oracle: forward elimination + back substitution,
    written without touching the library code paths."""
    rows = [list(r) for r in rows]
    rank = 0
    for c in range(cols):
        piv = None
        for i in range(rank, len(rows)):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rows, rank


def test_rref_identity():
    m = FieldMatrix.identity(3, 5)
    r, rank = rref(m)
    assert r == m and rank == 3


def test_rref_rank_one():
    m = FieldMatrix.from_rows([[1, 2], [2, 4]], 5)
    r, rank = rref(m)
    oracle_rows, oracle_rank = naive_row_reduce([[1, 2], [2, 4]], 2, 5)
    assert r.to_rows() == oracle_rows == [[1, 2], [0, 0]]
    assert rank == oracle_rank == 1


def test_rref_zero():
    m = FieldMatrix.zero(2, 2, 7)
    r, rank = rref(m)
    assert r == m and rank == 0


def test_rref_idempotent():
    rng = random.Random(1)
    for p in (2, 3, 5):
        for _ in range(25):
            rows = [[rng.randrange(p) for _ in range(4)] for _ in range(3)]
            m = FieldMatrix.from_rows(rows, p)
            r1, _ = rref(m)
            r2, _ = rref(r1)
            assert r1 == r2


def test_kernel_examples():
    k = kernel(FieldMatrix.from_rows([[1, 1], [0, 0]], 3))
    assert k.basis == ((1, 2),)
    inv = FieldMatrix.from_rows([[1, 1], [0, 1]], 5)
    assert kernel(inv).dim == 0
    assert kernel(FieldMatrix.zero(3, 3, 5)).dim == 3


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 5), st.integers(1, 5),
       st.randoms(use_true_random=False))
def test_rank_nullity(p, rows, cols, rnd):
    entries = [rnd.randrange(p) for _ in range(rows * cols)]
    m = FieldMatrix(rows, cols, p, entries)
    _, rank = rref(m)
    assert rank + kernel(m).dim == cols


def test_subspace_sum_intersection_examples():
    p = 5
    e1 = [1, 0, 0]
    e2 = [0, 1, 0]
    e3 = [0, 0, 1]
    a = Subspace.from_vectors([e1], 3, p)
    b = Subspace.from_vectors([e2], 3, p)
    assert a.sum(b) == Subspace.from_vectors([e1, e2], 3, p)
    big = Subspace.from_vectors([e1, e2], 3, p)
    other = Subspace.from_vectors([e2, e3], 3, p)
    assert big.intersect(other) == Subspace.from_vectors([e2], 3, p)


def test_subspace_equality_reordering():
    p = 7
    a = Subspace.from_vectors([[1, 2, 3], [0, 1, 4]], 3, p)
    b = Subspace.from_vectors([[0, 1, 4], [1, 2, 3], [1, 3, 0]], 3, p)
    assert a == b


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([3, 5]), st.randoms(use_true_random=False))
def test_dim_formula(p, rnd):
    n = 5
    a = Subspace.from_vectors(
        [[rnd.randrange(p) for _ in range(n)] for _ in range(rnd.randrange(4))], n, p)
    b = Subspace.from_vectors(
        [[rnd.randrange(p) for _ in range(n)] for _ in range(rnd.randrange(4))], n, p)
    assert a.sum(b).dim + a.intersect(b).dim == a.dim + b.dim


def test_subspace_membership():
    p = 3
    s = Subspace.from_vectors([[1, 1, 0], [0, 0, 1]], 3, p)
    assert s.contains_vector([1, 1, 1])
    assert not s.contains_vector([1, 0, 0])
    assert s.coordinates_of([2, 2, 1]) == [2, 1]


def test_fp_arithmetic():
    a = Fp(3, 5)
    b = Fp(4, 5)
    assert (a + b).value == 2
    assert (a * b).value == 2
    assert (a / b).value == (3 * inv_mod(4, 5)) % 5
    with pytest.raises(ValueError):
        Fp(1, 4)


def test_factor_x2_plus_1():
    f5 = factor(FpPoly([1, 0, 1], 5))
    assert [g.coeffs for g, m in f5] == [(2, 1), (3, 1)]
    f3 = factor(FpPoly([1, 0, 1], 3))
    assert len(f3) == 1 and f3[0][0].degree == 2 and f3[0][1] == 1


def test_factor_frobenius_split():
    p = 5
    f = FpPoly([0, -1] + [0] * (p - 2) + [1], p)   # x^p - x
    fs = factor(f)
    assert len(fs) == p and all(g.degree == 1 and m == 1 for g, m in fs)


def _random_poly(rnd, p, deg):
    coeffs = [rnd.randrange(p) for _ in range(deg)] + [rnd.randrange(1, p)]
    return FpPoly(coeffs, p)


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(1, 6),
       st.randoms(use_true_random=False))
def test_factor_roundtrip(p, deg, rnd):
    f = _random_poly(rnd, p, deg)
    fs = factor(f)
    prod = FpPoly([f.coeffs[-1]], p)
    for g, m in fs:
        for _ in range(m):
            prod = prod * g
    assert prod == f
    for g, _ in fs:
        # irreducible: no roots when degree > 1, and one Berlekamp round
        # (via factor itself on the squarefree part) finds nothing
        if g.degree > 1:
            assert all(g.evaluate(x) != 0 for x in range(p))
        assert factor(g) == [(g.monic(), 1)]


def test_factor_multiplicities():
    p = 3
    f = FpPoly([1, 3, 3, 1], p) * FpPoly([0, 0, 1], p)   # (x+1)^3 x^2
    fs = factor(f)
    assert fs == [(FpPoly([0, 1], p), 2), (FpPoly([1, 1], p), 3)]


def test_factor_zero_rejected():
    with pytest.raises(ValueError):
        factor(FpPoly([], 5))


def test_matrix_power_and_nilpotency():
    m = FieldMatrix.from_rows([[0, 1], [0, 0]], 5)
    assert m.pow(2).is_zero()
    assert m.is_nilpotent() and m.nilpotency_order() == 2
    t = FieldMatrix.from_rows([[1, 0], [0, 4]], 5)
    assert not t.is_nilpotent()


def test_prime_guard():
    assert is_prime(13) and not is_prime(1) and not is_prime(9)
    with pytest.raises(ValueError):
        FieldMatrix.zero(2, 2, 15)
