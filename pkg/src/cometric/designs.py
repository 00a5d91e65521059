"""Spherical design strength of the first-eigenspace embedding.

Two independent routes: direct Gram-moment sums against the sphere
moments, and the Krein-parameter criterion on the ordering's weight
triple.  Their agreement on every scheme is the paper-level theorem this
package exercises as an executable property.
"""

from dataclasses import dataclass

from gmpy2 import mpq

from .catalan import WeightTriple, catalan_matrix, sphere_moments, sphere_weight_check
from .errors import NonRationalValue, RepeatedRows
from .exact import as_rational, rat


def _all_distinct(vals):
    # pairwise, not set-based: exact scalars of mixed type hash differently
    return all(
        vals[i] != vals[j]
        for i in range(len(vals))
        for j in range(i + 1, len(vals))
    )


@dataclass(frozen=True)
class Embedding:
    """Unit-sphere image of the scheme in the first eigenspace.

    ``cosines[j]`` is (q_1(j)/m, k_j): the inner product between images of
    points in relation j, with its multiplicity.  Cosine values are exact
    scalars; irrational values occur (cycles, icosahedron) even though
    every moment is rational.
    """

    m: mpq
    cosines: tuple
    n: int

    def __post_init__(self):
        assert self.cosines[0][0] == 1 and self.cosines[0][1] == 1
        assert sum(k for _, k in self.cosines) == self.n
        assert _all_distinct([v for v, _ in self.cosines])


@dataclass(frozen=True)
class StrengthReport:
    """Design strength with the per-degree evidence that produced it."""

    t: int
    residuals: tuple  # (degree, value, target, passed)
    route: str


def embed(sc, ordering):
    """Cosine sequence of the E_1 embedding under a Q-polynomial ordering."""
    s = ordering.perm[1]
    m = rat(sc.m[s])
    cosines = []
    for j in range(sc.d + 1):
        q1j = sc.Q[j][s]
        r = as_rational(q1j)
        cosines.append(((r if r is not None else q1j) / m, sc.k[j]))
    if not _all_distinct([v for v, _ in cosines]):
        raise RepeatedRows("repeated cosine: embedding is not injective")
    return Embedding(m, tuple(cosines), sc.n)


def moment(e, i):
    """The i-th Gram moment (1/n) sum_j cosine_j^i k_j.

    Always rational even when individual cosines are algebraic, by the
    reduction to the Catalan number f_{i,0}.
    """
    s = mpq(0)
    for v, k in e.cosines:
        s = s + v**i * k
    val = as_rational(s / e.n)
    if val is None:
        raise NonRationalValue(f"moment {i} did not reduce to a rational")
    return val


def strength_by_moments(e, t_max):
    """Largest t <= t_max with moment(i) = sphere moment for all i <= t."""
    residuals = []
    t = 0
    alive = True
    for i in range(1, t_max + 1):
        val = moment(e, i)
        target = sphere_moments(e.m, i)
        ok = val == target
        residuals.append((i, val, target, ok))
        if alive and ok:
            t = i
        elif not ok:
            alive = False
    return StrengthReport(t, tuple(residuals), "moment-criterion")


def _triple(ordering):
    return WeightTriple.from_abc(
        list(ordering.a_star), list(ordering.c_star), ordering.m
    )


def strength_by_krein(ordering, t_max):
    """Largest t <= t_max passing the Krein sphere-weight conditions."""
    w = _triple(ordering)
    residuals = []
    t = 0
    alive = True
    for i in range(1, t_max + 1):
        ok = sphere_weight_check(w, i)
        residuals.append((i, ok, True, ok))
        if alive and ok:
            t = i
        elif not ok:
            alive = False
    return StrengthReport(t, tuple(residuals), "krein-criterion")


def _krein_path_sum(kt, perm, i):
    """f_{i,0} as the explicit nested sum over Krein index tuples.

    Sums q_{1,l_0}^{l_1} q_{1,l_1}^{l_2} ... q_{1,l_{i-1}}^{l_i} over all
    tuples with l_0 = l_i = 0, in relabeled indices.
    """
    d = kt.d
    s = perm[1]
    # weights[l][l2] = q_{1, perm[l]}^{perm[l2]}
    acc = {0: mpq(1)}
    for _ in range(i):
        nxt = {}
        for l, wgt in acc.items():
            for l2 in range(d + 1):
                q = kt[s, perm[l], perm[l2]]
                if q:
                    nxt[l2] = nxt.get(l2, mpq(0)) + wgt * q
        acc = nxt
    return acc.get(0, mpq(0))


def krein_moment_identity(sc, ordering, i, kt=None):
    """Check moment(i) = f_{i,0}/m^i; for i <= 6 also re-derive f_{i,0}
    by the explicit nested Krein sum."""
    e = embed(sc, ordering)
    w = _triple(ordering)
    cm = catalan_matrix(w)
    f_i0 = cm.get(i, 0)
    ok = moment(e, i) * e.m**i == f_i0
    if ok and i <= 6 and kt is not None:
        ok = _krein_path_sum(kt, ordering.perm, i) == f_i0
    return ok
