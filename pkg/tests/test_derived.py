import pytest
from gmpy2 import mpq

from cometric.derived import (
    derived_design,
    derived_moment,
    derived_moment_expansion,
    derived_predicates,
    derived_strength_by_moments,
    dual_intersection_identity,
    is_ppolynomial,
    pq_strength_bound_check,
)
from cometric.errors import (
    AntipodalClass,
    DegenerateSphere,
    HypothesisUnmet,
    SelfClass,
)
from cometric.generators import SchemeSpec, generate
from cometric.qpoly import find_qpoly_orderings
from cometric.scheme import RelationPartition, krein_parameters, validate_scheme


def analyzed(fam, **params):
    sc = validate_scheme(generate(SchemeSpec(fam, params)))
    kt = krein_parameters(sc)
    return sc, kt, find_qpoly_orderings(kt, sc)


def test_dual_identity_h0_reduces_to_valency():
    # h = 0: sum_j p_{i,j}^i = k_i since q_0 = 1 and m_0 = 1
    sc, _, _ = analyzed("petersen")
    for i in range(sc.d + 1):
        assert sum(sc.p[i][j][i] for j in range(sc.d + 1)) == sc.k[i]


def test_dual_identity_corpus(corpus):
    for label, sc, _, _ in corpus:
        assert dual_intersection_identity(sc), label


def test_derived_design_construction():
    sc, kt, ords = analyzed("hamming", d=6, q=2)
    o = ords[0]
    dd = derived_design(sc, o, 1)
    assert dd.size == sc.k[1] == 6
    assert sum(mult for _, mult in dd.angles) == 6
    # hypercube: R_1(z) x R_1(z) only meets classes 0 and 2
    assert len(dd.angles) == 2


def test_derived_design_errors():
    sc, kt, ords = analyzed("hamming", d=3, q=2)
    o = ords[0]
    with pytest.raises(SelfClass):
        derived_design(sc, o, 0)
    with pytest.raises(AntipodalClass):
        derived_design(sc, o, 3)  # theta_3* = -theta_0* on the cube
    with pytest.raises(IndexError):
        derived_design(sc, o, 4)


def test_derived_moment_two_routes(corpus):
    for label, sc, kt, ords in corpus:
        for o in ords[:1]:
            for i in range(1, sc.d + 1):
                try:
                    dd = derived_design(sc, o, i)
                except (AntipodalClass, SelfClass):
                    continue
                for h in range(1, sc.d + 1):
                    assert derived_moment(dd, h) == derived_moment_expansion(
                        dd, o, h
                    ), (label, i, h)


def test_derived_expansion_needs_small_degree():
    sc, kt, ords = analyzed("petersen")
    dd = derived_design(sc, ords[0], 1)
    with pytest.raises(IndexError):
        derived_moment_expansion(dd, ords[0], sc.d + 1)


def test_predicate_part1_trivial_zero():
    sc, kt, ords = analyzed("hamming", d=6, q=2)
    o = ords[0]
    for i in range(1, sc.d):
        dd = derived_design(sc, o, i)
        assert derived_predicates(o, dd.thetai, 2)  # a_1* = 0


def test_predicates_match_strength_h62():
    sc, kt, ords = analyzed("hamming", d=6, q=2)
    o = ords[0]
    for i in range(1, sc.d):
        dd = derived_design(sc, o, i)
        t = derived_strength_by_moments(dd, 2 * sc.d).t
        assert derived_predicates(o, dd.thetai, 2) == (t >= 2), i


def test_predicate_hypothesis_gates():
    sc, kt, ords = analyzed("petersen")  # d = 2 < 5
    with pytest.raises(HypothesisUnmet):
        derived_predicates(ords[0], mpq(1), 2)
    sc, kt, ords = analyzed("hamming", d=6, q=2)  # 3-design, not a 4-design
    with pytest.raises(HypothesisUnmet):
        derived_predicates(ords[0], mpq(1), 3)
    with pytest.raises(ValueError):
        derived_predicates(ords[0], mpq(1), 6)


def test_derived_strength_degenerate_sphere():
    sc, kt, ords = analyzed("cycle", n=6)  # theta_0* = 2
    dd = derived_design(sc, ords[0], 1)
    with pytest.raises(DegenerateSphere):
        derived_strength_by_moments(dd, 4)


def test_icosahedron_derived_strength():
    sc, kt, ords = analyzed("icosahedron")
    dd = derived_design(sc, ords[0], 1)
    assert derived_strength_by_moments(dd, 2 * sc.d).t == 4


def test_is_ppolynomial_drg_families():
    for fam, params in [
        ("cycle", {"n": 7}),
        ("hamming", {"d": 3, "q": 2}),
        ("petersen", {}),
        ("complete", {"n": 5}),
    ]:
        sc, _, _ = analyzed(fam, **params)
        flag, perm = is_ppolynomial(sc)
        assert flag and perm[0] == 0


def test_is_ppolynomial_rejects_product_scheme():
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
    sc = validate_scheme(RelationPartition(n, 3, rel))
    flag, perm = is_ppolynomial(sc)
    assert not flag and perm is None


def test_bound_check_pass_and_gate(corpus):
    for label, sc, kt, ords in corpus:
        if not ords:
            continue
        rep = pq_strength_bound_check(sc, ords[0])
        assert rep.ok, label
        if label.startswith("cycle"):
            assert not rep.in_hypothesis
            assert rep.theta0 == 2
            assert rep.strength == sc.n - 1
        elif rep.is_pq and rep.theta0 >= 3:
            assert rep.in_hypothesis
            assert rep.strength <= 8
        else:
            assert not rep.in_hypothesis
