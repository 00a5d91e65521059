import pytest
from gmpy2 import mpq

from cometric.errors import NotTridiagonal
from cometric.generators import SchemeSpec, generate
from cometric.qpoly import abc_sequences, find_qpoly_orderings
from cometric.scheme import KreinTensor, krein_parameters, validate_scheme


def analyzed(fam, **params):
    sc = validate_scheme(generate(SchemeSpec(fam, params)))
    kt = krein_parameters(sc)
    return sc, kt, find_qpoly_orderings(kt, sc)


def test_c5_ordering():
    sc, kt, ords = analyzed("cycle", n=5)
    assert ords
    assert any(
        o.m == 2 and o.c_star == (0, 1, 1) and o.a_star[:2] == (mpq(0), mpq(0))
        for o in ords
    )


def test_petersen_m5_ordering_exists():
    sc, kt, ords = analyzed("petersen")
    assert any(o.m == 5 for o in ords)


def test_complete_graph_single_ordering():
    sc, kt, ords = analyzed("complete", n=6)
    assert len(ords) == 1
    o = ords[0]
    assert o.perm == (0, 1)
    assert o.m == 5
    assert o.c_star == (0, 1)
    assert o.b_star == (5, 0)


def test_ordering_invariants(corpus):
    for label, sc, kt, ords in corpus:
        for o in ords:
            d = sc.d
            assert o.perm[0] == 0 and sorted(o.perm) == list(range(d + 1))
            assert o.a_star[0] == 0 and o.c_star[0] == 0 and o.b_star[d] == 0
            assert o.c_star[1] == 1
            assert o.b_star[0] == o.m
            for i in range(d + 1):
                assert o.a_star[i] + o.b_star[i] + o.c_star[i] == o.m
            assert all(x > 0 for x in o.b_star[:d])
            assert all(x > 0 for x in o.c_star[1:])


def test_relabeled_tridiagonal(corpus):
    for label, sc, kt, ords in corpus:
        for o in ords:
            d = sc.d
            s = o.perm[1]
            for j in range(d + 1):
                for k in range(d + 1):
                    if abs(j - k) > 1:
                        assert kt[s, o.perm[j], o.perm[k]] == 0


def test_abc_reads_diagonals():
    sc, kt, ords = analyzed("hamming", d=3, q=2)
    o = ords[0]
    a, b, c, m = abc_sequences(kt, o.perm)
    assert (a, b, c, m) == (o.a_star, o.b_star, o.c_star, o.m)
    assert a == (0, 0, 0, 0)
    assert c == (0, 1, 2, 3)


def test_abc_rejects_non_tridiagonal():
    sc, kt, ords = analyzed("hamming", d=3, q=2)
    good = ords[0].perm
    bad = (good[0], good[1], good[3], good[2])
    with pytest.raises(NotTridiagonal):
        abc_sequences(kt, bad)


def test_identity_ordering_found_after_relabeling():
    sc, kt, ords = analyzed("icosahedron")
    o = ords[0]
    d = sc.d
    perm = o.perm
    relabeled = KreinTensor(
        d,
        [
            [
                [kt[perm[i], perm[j], perm[k]] for k in range(d + 1)]
                for j in range(d + 1)
            ]
            for i in range(d + 1)
        ],
    )

    class _Shim:
        m = [sc.m[perm[j]] for j in range(d + 1)]

    found = find_qpoly_orderings(relabeled, _Shim())
    assert any(f.perm == tuple(range(d + 1)) for f in found)


def test_not_qpolynomial_example():
    # direct product K3 x K3: a 3-class scheme with no Q-polynomial ordering
    n = 9
    rel = tuple(
        tuple(
            0
            if x == y
            else 1
            if x // 3 == y // 3
            else 2
            if x % 3 == y % 3
            else 3
            for y in range(n)
        )
        for x in range(n)
    )
    from cometric.scheme import RelationPartition

    sc = validate_scheme(RelationPartition(n, 3, rel))
    kt = krein_parameters(sc)
    assert find_qpoly_orderings(kt, sc) == []
