import pytest
from gmpy2 import mpq

from cometric.catalan import sphere_moments
from cometric.designs import (
    embed,
    krein_moment_identity,
    moment,
    strength_by_krein,
    strength_by_moments,
)
from cometric.errors import RepeatedRows
from cometric.generators import SchemeSpec, generate
from cometric.qpoly import find_qpoly_orderings
from cometric.scheme import krein_parameters, validate_scheme


def analyzed(fam, **params):
    sc = validate_scheme(generate(SchemeSpec(fam, params)))
    kt = krein_parameters(sc)
    return sc, kt, find_qpoly_orderings(kt, sc)


def test_embed_cube():
    sc, kt, ords = analyzed("hamming", d=3, q=2)
    e = embed(sc, ords[0])
    assert e.m == 3
    assert dict(e.cosines) == {
        mpq(1): 1,
        mpq(1, 3): 3,
        mpq(-1, 3): 3,
        mpq(-1): 1,
    }


def test_embed_petersen():
    sc, kt, ords = analyzed("petersen")
    o = next(o for o in ords if o.m == 5)
    e = embed(sc, o)
    assert dict(e.cosines) == {mpq(1): 1, mpq(1, 3): 3, mpq(-1, 3): 6}


def test_embed_simplex():
    sc, kt, ords = analyzed("complete", n=7)
    e = embed(sc, ords[0])
    assert e.m == 6
    assert dict(e.cosines) == {mpq(1): 1, mpq(-1, 6): 6}


def test_embed_repeated_rows_rejected():
    sc, kt, ords = analyzed("hamming", d=3, q=2)

    class _FakeOrdering:
        perm = (0, 0)  # E_0 = J/n has all cosines equal to 1

    with pytest.raises(RepeatedRows):
        embed(sc, _FakeOrdering())


def test_moments_petersen():
    sc, kt, ords = analyzed("petersen")
    e = embed(sc, next(o for o in ords if o.m == 5))
    assert moment(e, 2) == mpq(1, 5)
    assert moment(e, 3) == mpq(4, 45)


def test_moment_simplex():
    sc, kt, ords = analyzed("complete", n=4)
    e = embed(sc, ords[0])
    assert moment(e, 2) == mpq(1, 3)


def test_cube_odd_moments_vanish():
    sc, kt, ords = analyzed("hamming", d=3, q=2)
    e = embed(sc, ords[0])
    assert all(moment(e, i) == 0 for i in (1, 3, 5))


def test_strength_reports():
    sc, kt, ords = analyzed("petersen")
    e = embed(sc, next(o for o in ords if o.m == 5))
    rep = strength_by_moments(e, 4)
    assert rep.t == 2
    assert rep.route == "moment-criterion"
    degrees = [r[0] for r in rep.residuals]
    assert degrees == [1, 2, 3, 4]
    assert rep.residuals[2][3] is False  # moment 3 fails


def test_cube_strength_three():
    sc, kt, ords = analyzed("hamming", d=3, q=2)
    e = embed(sc, ords[0])
    rep = strength_by_moments(e, 6)
    assert rep.t == 3
    assert moment(e, 4) == mpq(7, 27)
    assert sphere_moments(e.m, 4) == mpq(1, 5)


def test_krein_strength_icosahedron():
    sc, kt, ords = analyzed("icosahedron")
    rep = strength_by_krein(ords[0], 6)
    assert rep.t == 5
    assert rep.route == "krein-criterion"


def test_every_embedding_is_at_least_2_design(corpus):
    for label, sc, kt, ords in corpus:
        for o in ords:
            assert strength_by_krein(o, 2 * sc.d).t >= 2
            assert strength_by_moments(embed(sc, o), 2 * sc.d).t >= 2


def test_route_agreement(corpus):
    for label, sc, kt, ords in corpus:
        for o in ords:
            e = embed(sc, o)
            tm = 2 * sc.d
            assert strength_by_moments(e, tm).t == strength_by_krein(o, tm).t, label


def test_moment_bridge(corpus):
    from cometric.catalan import WeightTriple, catalan_matrix

    for label, sc, kt, ords in corpus:
        for o in ords:
            e = embed(sc, o)
            w = WeightTriple.from_abc(list(o.a_star), list(o.c_star), o.m)
            cm = catalan_matrix(w)
            for i in range(1, 2 * sc.d + 1):
                assert moment(e, i) * e.m**i == cm.get(i, 0), (label, i)


def test_krein_moment_identity_examples():
    sc, kt, ords = analyzed("petersen")
    o = next(o for o in ords if o.m == 5)
    for i in range(1, 2 * sc.d + 1):
        assert krein_moment_identity(sc, o, i, kt)


def test_sidelnikov_inequalities(corpus):
    for label, sc, kt, ords in corpus:
        for o in ords:
            e = embed(sc, o)
            for i in range(2, 2 * sc.d + 1, 2):
                assert moment(e, i) >= sphere_moments(e.m, i), (label, i)
