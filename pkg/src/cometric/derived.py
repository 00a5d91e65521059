"""Derived designs of the first-eigenspace embedding.

Projecting the i-th relation neighborhood of a point to its orthogonal
complement gives a point set on a sphere one dimension down; its angle
multiset is determined by the dual eigenvalues and p_{i,j}^i.  This
module computes those moments by two routes (direct angle sums and the
binomial/Catalan expansion), evaluates the closed-form s-design
predicates, and checks the strength bound for P- and Q-polynomial
schemes.
"""

from dataclasses import dataclass
from math import comb

from gmpy2 import mpq

from .catalan import WeightTriple, catalan_matrix, orthogonal_polys, sphere_moments, sphere_weight_check
from .designs import StrengthReport, _all_distinct, embed, strength_by_moments
from .errors import AntipodalClass, DegenerateSphere, HypothesisUnmet, SelfClass
from .exact import as_rational, rat


@dataclass(frozen=True)
class DerivedDesign:
    """Angle multiset of the projected i-th neighborhood.

    ``angles[r]`` is ((theta0 theta_j - thetai^2)/(theta0^2 - thetai^2),
    p_{i,j}^i) over the classes j with p_{i,j}^i != 0.
    """

    i: int
    theta0: mpq
    thetai: object
    angles: tuple
    size: int

    def __post_init__(self):
        assert sum(mult for _, mult in self.angles) == self.size


def dual_intersection_identity(sc):
    """Check (Q^t B_i)(h, i) = k_i q_h(i)^2 / m_h for all h, i.

    The contraction is over the middle relation class: the (h, i) entry
    is sum_j q_h(j) p_{i,j}^i, which the identity itself pins down as the
    intended row convention for B_i.
    """
    d = sc.d
    for i in range(d + 1):
        for h in range(d + 1):
            lhs = 0
            for j in range(d + 1):
                if sc.p[i][j][i]:
                    lhs = lhs + sc.Q[j][h] * sc.p[i][j][i]
            qhi = sc.Q[i][h]
            if lhs != sc.k[i] * qhi * qhi / sc.m[h]:
                return False
    return True


def derived_design(sc, ordering, i):
    """Build the derived design of relation class i under an ordering."""
    if i == 0:
        raise SelfClass("class 0 projects a point onto itself")
    if not 1 <= i <= sc.d:
        raise IndexError(f"class index {i} out of range")
    s = ordering.perm[1]
    theta0 = rat(sc.m[s])
    thetai = _tidy(sc.Q[i][s])
    if thetai == -theta0:
        raise AntipodalClass(f"theta_{i}* = -theta_0*: projection collapses")
    if thetai == theta0:
        raise AntipodalClass(f"theta_{i}* = theta_0*: class {i} is not proper")
    denom = theta0 * theta0 - thetai * thetai
    angles = []
    for j in range(sc.d + 1):
        mult = sc.p[i][j][i]
        if mult:
            thetaj = sc.Q[j][s]
            angles.append((_tidy((theta0 * thetaj - thetai * thetai) / denom), mult))
    assert _all_distinct([v for v, _ in angles])
    return DerivedDesign(i, theta0, thetai, tuple(angles), sc.k[i])


def _tidy(v):
    r = as_rational(v)
    return r if r is not None else v


def derived_moment(dd, h):
    """The h-th moment (1/k_i) sum_j angle_j^h p_{i,j}^i, directly."""
    s = mpq(0)
    for v, mult in dd.angles:
        s = s + v**h * mult
    return _tidy(s / dd.size)


def derived_moment_expansion(dd, ordering, h):
    """The h-th moment through the binomial/Catalan expansion.

    Independent of the angle multiset: uses only the weight triple's
    table f_{n,l}, the polynomials v_l*, and theta_i*.  Valid for h <= d.
    """
    w = WeightTriple.from_abc(
        list(ordering.a_star), list(ordering.c_star), ordering.m
    )
    if h > w.d:
        raise IndexError(f"expansion route needs h <= d, got {h}")
    cm = catalan_matrix(w)
    polys = orthogonal_polys(w)
    theta0, thetai = dd.theta0, dd.thetai
    total = mpq(0)
    for n in range(h + 1):
        inner = mpq(0)
        for l in range(n + 1):
            f_nl = cm.get(n, l)
            if f_nl:
                vi = polys[l](thetai)
                inner = inner + f_nl * vi * vi / polys[l](theta0)
        total = total + comb(h, n) * (-thetai * thetai) ** (h - n) * theta0**n * inner
    return _tidy(total / (theta0 * theta0 - thetai * thetai) ** h)


_PREDICATES = {
    2: lambda a, t0, ti: a[1] * (ti + 1) == 0,
    3: lambda a, t0, ti: a[2] * ((t0 + 2) * ti**2 + 2 * t0 * ti - t0**2) == 0,
    4: lambda a, t0, ti: a[3]
    * (
        (t0 + 4) * (t0 - 2) * ti**3
        - 3 * t0 * (t0 + 2) * ti**2
        + 3 * t0**2 * (t0 + 2) * ti
        + 3 * t0**3
    )
    == 0,
    5: lambda a, t0, ti: a[4]
    * (
        (t0 + 4) * (t0 + 6) * ti**4
        + 4 * t0 * (t0 + 4) * ti**3
        - 6 * t0**2 * (t0 + 4) * ti**2
        - 12 * t0**3 * ti
        + 3 * t0**4
    )
    == 0,
}

# ambient strength each predicate presumes: s-design derived from 2(s-1)
_AMBIENT_STRENGTH = {3: 4, 4: 6, 5: 8}


def derived_predicates(ordering, thetai, s):
    """Closed-form test: is the derived design an s-design, s in 2..5?"""
    if s not in _PREDICATES:
        raise ValueError("s must be in 2..5")
    d = len(ordering.perm) - 1
    if d < 5:
        raise HypothesisUnmet(f"d = {d} < 5")
    need = _AMBIENT_STRENGTH.get(s)
    if need is not None:
        w = WeightTriple.from_abc(
            list(ordering.a_star), list(ordering.c_star), ordering.m
        )
        if not sphere_weight_check(w, need):
            raise HypothesisUnmet(f"ambient embedding is not a {need}-design")
    return _PREDICATES[s](ordering.a_star, rat(ordering.m), thetai)


def derived_strength_by_moments(dd, t_max):
    """Largest t <= t_max with derived moments equal to sphere moments.

    The derived design lives one dimension down, so the comparison sphere
    has parameter theta0* - 1.
    """
    if dd.theta0 < 3:
        raise DegenerateSphere(f"theta_0* = {dd.theta0} < 3")
    mdim = dd.theta0 - 1
    residuals = []
    t = 0
    alive = True
    for h in range(1, t_max + 1):
        val = derived_moment(dd, h)
        target = sphere_moments(mdim, h)
        ok = val == target
        residuals.append((h, val, target, ok))
        if alive and ok:
            t = h
        elif not ok:
            alive = False
    return StrengthReport(t, tuple(residuals), "derived-moment")


def is_ppolynomial(sc):
    """(flag, relation ordering) for P-polynomial structure.

    Mirrors the Q-polynomial search on the intersection numbers: grow a
    relabeling greedily from each candidate first relation and accept it
    when p_{i,j}^k = 0 for k > i+j and > 0 for k = i+j throughout.
    """
    d = sc.d
    for s in range(1, d + 1):
        perm = [0, s]
        used = {0, s}
        ok = True
        while len(perm) <= d and ok:
            last = perm[-1]
            cands = [
                j for j in range(d + 1) if j not in used and sc.p[s][last][j] > 0
            ]
            if len(cands) != 1:
                ok = False
            else:
                perm.append(cands[0])
                used.add(cands[0])
        if not ok:
            continue
        good = all(
            (sc.p[perm[i]][perm[j]][perm[k]] == 0) == (k > i + j)
            if k >= i + j
            else True
            for i in range(d + 1)
            for j in range(d + 1)
            for k in range(d + 1)
        )
        if good:
            return True, tuple(perm)
    return False, None


@dataclass(frozen=True)
class BoundCheckReport:
    """Outcome of the strength <= 8 check for P&Q-polynomial schemes."""

    is_pq: bool
    theta0: mpq
    in_hypothesis: bool
    strength: int
    ok: bool
    detail: str


def pq_strength_bound_check(sc, ordering):
    """Strength <= 8 for P- and Q-polynomial schemes with theta_0* >= 3.

    Schemes outside the hypothesis (not P-polynomial, or theta_0* = 2 as
    for the cycles) are reported as such with their true strength; a
    genuine in-hypothesis strength above 8 is flagged, not raised.
    """
    p_flag, _ = is_ppolynomial(sc)
    theta0 = rat(ordering.m)
    e = embed(sc, ordering)
    strength = strength_by_moments(e, 2 * sc.d).t
    if not p_flag:
        return BoundCheckReport(
            False, theta0, False, strength, True, "not P-polynomial"
        )
    if theta0 < 3:
        return BoundCheckReport(
            True,
            theta0,
            False,
            strength,
            True,
            "out of hypothesis: theta_0* < 3 (derived sphere degenerates)",
        )
    ok = strength <= 8
    detail = "strength bound holds" if ok else "strength bound violated"
    return BoundCheckReport(True, theta0, True, strength, ok, detail)
