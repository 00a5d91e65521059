import random

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

from cometric.exact import (
    RationalMatrix,
    common_eigenspace_projectors,
    mat_inv,
    mat_mul,
    nullspace,
    rank,
    rat,
)


def test_rat_coercions():
    assert rat(3) == 3
    assert rat("2/6") == mpq(1, 3)
    assert rat(1, 3) == mpq(1, 3)


def test_rank_identity():
    assert rank(RationalMatrix.identity(3)) == 3


def test_rank_zero():
    assert rank(RationalMatrix.zeros(2, 2)) == 0


def test_rank_proportional_rows():
    assert rank(RationalMatrix([[1, 2], [2, 4]])) == 1


def test_nullspace_identity_empty():
    assert nullspace(RationalMatrix.identity(2)) == []


def test_nullspace_zero_full():
    assert len(nullspace(RationalMatrix.zeros(1, 2))) == 2


def test_nullspace_one_vector():
    vecs = nullspace(RationalMatrix([[1, 1]]))
    assert len(vecs) == 1
    v = [x[0] for x in vecs[0].data]
    assert v[0] * 1 + v[1] * 1 == 0 and v[0] != 0


def test_rank_with_fractions():
    m = RationalMatrix([[mpq(1, 2), mpq(1, 3)], [mpq(3, 2), mpq(2, 1)]])
    assert rank(m) == 2


def _check_projector_family(projs, n):
    ident = RationalMatrix.identity(n)
    total = RationalMatrix.zeros(n, n)
    for e in projs:
        assert e.is_symmetric()
        assert e * e == e
        assert rank(e) == e.trace()
        total = total + e
    assert total == ident
    for i, a in enumerate(projs):
        for j, b in enumerate(projs):
            if i != j:
                assert a * b == RationalMatrix.zeros(n, n)


def test_projectors_k2():
    projs = common_eigenspace_projectors([[[0, 1], [1, 0]]], 2)
    assert sorted(rank(e) for e in projs) == [1, 1]
    _check_projector_family(projs, 2)
    half = mpq(1, 2)
    assert RationalMatrix([[half, half], [half, half]]) in projs


def test_projectors_c4():
    a1 = [[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]]
    a2 = [[0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, 1, 0, 0]]
    projs = common_eigenspace_projectors([a1, a2], 4)
    assert sorted(rank(e) for e in projs) == [1, 1, 2]
    _check_projector_family(projs, 4)


def petersen_adjacency():
    from itertools import combinations

    pts = [frozenset(s) for s in combinations(range(5), 2)]
    return [
        [1 if (i != j and not (pts[i] & pts[j])) else 0 for j in range(10)]
        for i in range(10)
    ]


def test_projectors_petersen_known_spectrum():
    a = petersen_adjacency()
    projs = common_eigenspace_projectors([a], 10)
    assert sorted(rank(e) for e in projs) == [1, 4, 5]
    _check_projector_family(projs, 10)
    # eigenvalues 3, 1, -2 confirmed by kernel ranks of A - lambda I
    am = RationalMatrix([[mpq(v) for v in row] for row in a])
    for lam, mult in [(3, 1), (1, 5), (-2, 4)]:
        shifted = am - RationalMatrix.identity(10) * mpq(lam)
        assert len(nullspace(shifted)) == mult


def test_mat_inv_round_trip():
    m = [[mpq(2), mpq(1)], [mpq(7), mpq(4)]]
    inv = mat_inv(m)
    assert mat_mul(m, inv) == [[1, 0], [0, 1]]


def test_mat_inv_singular():
    with pytest.raises(ZeroDivisionError):
        mat_inv([[mpq(1), mpq(2)], [mpq(2), mpq(4)]])


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_rank_nullity_random(seed):
    rng = random.Random(seed)
    rows = rng.randint(1, 6)
    cols = rng.randint(1, 6)
    m = RationalMatrix(
        [
            [mpq(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(cols)]
            for _ in range(rows)
        ]
    )
    r = rank(m)
    vecs = nullspace(m)
    assert r + len(vecs) == cols
    zero = RationalMatrix.zeros(rows, 1)
    for v in vecs:
        assert m * v == zero


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000))
def test_rank_invariant_under_row_scaling(seed):
    rng = random.Random(seed)
    rows = rng.randint(1, 5)
    cols = rng.randint(1, 5)
    data = [[mpq(rng.randint(-4, 4)) for _ in range(cols)] for _ in range(rows)]
    scaled = [
        [x * mpq(rng.randint(1, 5), rng.randint(1, 5)) for x in row] for row in data
    ]
    assert rank(RationalMatrix(data)) == rank(RationalMatrix(scaled))
