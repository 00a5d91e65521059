"""Symmetric association scheme validation and structure constants.

``validate_scheme`` checks the axioms, computes intersection numbers with
exact integer matrix products, and diagonalizes the Bose-Mesner algebra.
Schemes with integer adjacency spectra go through the rational projector
refinement in ``exact``; the few corpus schemes with irrational spectra
(cycles, icosahedron) fall back to an exact algebraic-number route on the
(d+1)-dimensional intersection algebra.
"""

from dataclasses import dataclass, field

import numpy as np
import sympy
from gmpy2 import mpq

from . import exact
from .errors import (
    ClassCountMismatch,
    NegativeKrein,
    NonIntegerSpectrum,
    NonRationalValue,
    NotAScheme,
)
from .exact import RationalMatrix, as_rational, mat_inv, rat
from .numberfield import FieldElement, NumberField, scalar_sort_key


@dataclass(frozen=True)
class RelationPartition:
    """Partition of X x X into relations, given as a label grid."""

    n: int
    d: int
    rel: tuple

    def __post_init__(self):
        if len(self.rel) != self.n or any(len(r) != self.n for r in self.rel):
            raise ValueError("rel must be an n x n grid")


@dataclass
class SchemeCore:
    """A validated scheme with all its structure constants.

    ``P[j][i]`` is the eigenvalue p_i(j) of A_i on E_j; ``Q[l][j]`` is the
    dual eigenvalue q_j(l), so E_j = (1/n) sum_l Q[l][j] A_l.  Entries are
    exact rationals, or algebraic field elements for irrational spectra.
    """

    n: int
    d: int
    rel: tuple
    p: tuple
    k: list
    m: list
    E: list
    P: list
    Q: list
    field: object = None

    def __repr__(self):
        return f"SchemeCore(n={self.n}, d={self.d}, k={self.k}, m={self.m})"


@dataclass
class KreinTensor:
    """Rational Krein parameters q_{i,j}^k for 0 <= i,j,k <= d."""

    d: int
    q: list = field(repr=False)

    def __getitem__(self, ijk):
        i, j, k = ijk
        return self.q[i][j][k]


# ---------------------------------------------------------------------------
# validation


def _intersection_tensor(rel_arr, n, d):
    adj = [(rel_arr == i).astype(np.int64) for i in range(d + 1)]
    reps = []
    for kk in range(d + 1):
        xs, ys = np.nonzero(rel_arr == kk)
        reps.append((int(xs[0]), int(ys[0])))
    p = [[[0] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(i, d + 1):
            prod = adj[i] @ adj[j]
            coeffs = [int(prod[reps[kk]]) for kk in range(d + 1)]
            lookup = np.array(coeffs, dtype=np.int64)
            if not np.array_equal(prod, lookup[rel_arr]):
                raise NotAScheme("closure", f"A_{i}A_{j} not in the adjacency span")
            for kk in range(d + 1):
                p[i][j][kk] = coeffs[kk]
                p[j][i][kk] = coeffs[kk]
    return p, adj


def validate_scheme(rp):
    """Check the scheme axioms and build the full SchemeCore."""
    n, d = rp.n, rp.d
    rel_arr = np.array(rp.rel, dtype=np.int64)
    if rel_arr.shape != (n, n):
        raise NotAScheme("shape", "relation grid is not n x n")
    if rel_arr.min() < 0 or rel_arr.max() > d:
        raise NotAScheme("labels", "labels outside 0..d")
    for lab in range(d + 1):
        if not (rel_arr == lab).any():
            raise NotAScheme("labels", f"class {lab} empty")
    diag_ok = (np.diag(rel_arr) == 0).all()
    zero_off = ((rel_arr == 0) == np.eye(n, dtype=bool)).all()
    if not (diag_ok and zero_off):
        raise NotAScheme("identity", "R_0 is not the identity relation")
    if not np.array_equal(rel_arr, rel_arr.T):
        raise NotAScheme("symmetry", "some relation is not symmetric")

    p, adj = _intersection_tensor(rel_arr, n, d)
    k_vals = [p[i][i][0] for i in range(d + 1)]
    row_sums = [int(a.sum(axis=1)[0]) for a in adj]
    if k_vals != row_sums or any((a.sum(axis=1) != k_vals[i]).any() for i, a in enumerate(adj)):
        raise NotAScheme("regularity", "relation valencies are not constant")
    if sum(k_vals) != n:
        raise NotAScheme("partition", "valencies do not sum to n")
    # standard intersection number symmetry
    for i in range(d + 1):
        for j in range(d + 1):
            for kk in range(d + 1):
                if k_vals[kk] * p[i][j][kk] != k_vals[i] * p[kk][j][i]:
                    raise NotAScheme("intersection", "k_k p_{ij}^k != k_i p_{kj}^i")

    try:
        core = _rational_eigendata(rp, p, k_vals, adj)
    except NonIntegerSpectrum:
        core = _algebraic_eigendata(rp, p, k_vals)
    _check_dual_consistency(core)
    _check_eigen_relation(core)
    return core


def _check_eigen_relation(sc):
    """A_i E_j = p_i(j) E_j, expressed in the adjacency basis.

    Substituting E_j = (1/n) sum_l q_j(l) A_l turns the relation into
    sum_l q_j(l) p_{i,l}^k = p_i(j) q_j(k) for every i, j, k, which is a
    cheap (d+1)^4 scalar check.
    """
    d = sc.d
    for i in range(d + 1):
        for j in range(d + 1):
            for kk in range(d + 1):
                lhs = 0
                for l in range(d + 1):
                    if sc.p[i][l][kk]:
                        lhs = lhs + sc.Q[l][j] * sc.p[i][l][kk]
                if lhs != sc.P[j][i] * sc.Q[kk][j]:
                    raise ClassCountMismatch(
                        f"A_{i} E_{j} != p_{i}({j}) E_{j}"
                    )


def _rational_eigendata(rp, p, k_vals, adj):
    n, d = rp.n, rp.d
    mats = [a.tolist() for a in adj[1:]]
    spaces = exact.simultaneous_eigenspaces(mats, n)
    if len(spaces) != d + 1:
        raise ClassCountMismatch(
            f"{len(spaces)} common eigenspaces for a {d}-class scheme"
        )
    tagged = [(basis, (1,) + evs) for basis, evs in spaces]
    kv = tuple(k_vals)
    first = [t for t in tagged if t[1] == kv]
    if len(first) != 1 or len(first[0][0]) != 1:
        raise ClassCountMismatch("valency eigenspace is not one-dimensional")
    rest = sorted(
        (t for t in tagged if t[1] != kv), key=lambda t: (len(t[0]), t[1])
    )
    ordered = first + rest
    P = [[mpq(v) for v in evs] for _, evs in ordered]
    m_vals = [len(basis) for basis, _ in ordered]
    E = [exact.projector_from_basis(basis, n) for basis, _ in ordered]
    Q = _second_eigenmatrix(P, n)
    _check_multiplicities(Q, m_vals, n)
    return SchemeCore(n, d, rp.rel, _freeze(p), k_vals, m_vals, E, P, Q)


_WEIGHT_CHOICES = [
    lambda d: [1] + [0] * (d - 1),
    lambda d: list(range(1, d + 1)),
    lambda d: [2**i for i in range(d)],
    lambda d: [3**i for i in range(d)],
    lambda d: [i * i + 1 for i in range(d)],
]


def _algebraic_eigendata(rp, p, k_vals):
    """Exact eigenstructure via the regular representation on B_i^T.

    The common eigenvectors of the transposed intersection matrices,
    normalized to first coordinate 1, are exactly the rows of P; a generic
    integer combination separates them, and all arithmetic happens in the
    splitting field of its characteristic polynomial.
    """
    n, d = rp.n, rp.d
    bts = []
    for i in range(1, d + 1):
        bts.append([[p[i][jj][kk] for kk in range(d + 1)] for jj in range(d + 1)])
    x = sympy.Symbol("x")
    poly = None
    mat = None
    for choice in _WEIGHT_CHOICES:
        ws = choice(d)
        cand = [
            [sum(w * bt[r][c] for w, bt in zip(ws, bts)) for c in range(d + 1)]
            for r in range(d + 1)
        ]
        cp = sympy.Matrix(cand).charpoly(x)
        f = sympy.Poly(cp.as_expr(), x)
        if sympy.gcd(f, f.diff(x)).is_Number or sympy.Poly(sympy.gcd(f, f.diff(x)), x).degree() == 0:
            poly, mat = f, cand
            break
    if poly is None:
        raise NonIntegerSpectrum("no squarefree generic combination found")
    roots = poly.all_roots()
    irr = [r for r in roots if not r.is_rational]
    if not irr:
        raise NonIntegerSpectrum("rational spectrum reached algebraic fallback")
    if any(not r.is_real for r in roots):
        raise NotAScheme("spectrum", "complex eigenvalue of a symmetric scheme")
    nf = NumberField(irr)
    rows = []
    for r in roots:
        lam = rat(r.p, r.q) if r.is_rational else nf.from_sympy(r)
        m_rows = [
            [mat[a][b] - (lam if a == b else 0) for b in range(d + 1)]
            for a in range(d + 1)
        ]
        ker = exact.generic_nullspace(m_rows, d + 1)
        if len(ker) != 1:
            raise NonIntegerSpectrum("generic combination failed to separate")
        v = ker[0]
        v0 = v[0]
        if v0 == 0:
            raise NonIntegerSpectrum("eigenvector with vanishing unit entry")
        rows.append([_simplify_scalar(val / v0) for val in v])
    kv = [mpq(v) for v in k_vals]
    first = [r for r in rows if _row_is_rational(r) == kv]
    if len(first) != 1:
        raise ClassCountMismatch("valency row not found in eigen data")
    rest = [r for r in rows if r is not first[0]]
    m_of = {}
    for r in rest + first:
        s = sum((r[i] * r[i]) / k_vals[i] for i in range(d + 1))
        m_val = as_rational(n / s)
        if m_val is None or m_val.denominator != 1 or m_val <= 0:
            raise NonRationalValue("non-integral multiplicity")
        m_of[id(r)] = int(m_val)
    rest.sort(key=lambda r: (m_of[id(r)], tuple(scalar_sort_key(v) for v in r)))
    ordered = first + rest
    P = ordered
    m_vals = [m_of[id(r)] for r in ordered]
    Q = _second_eigenmatrix(P, n)
    _check_multiplicities(Q, m_vals, n)
    E = [
        RationalMatrix(
            [[Q[rp.rel[xx][yy]][j] / n for yy in range(n)] for xx in range(n)]
        )
        for j in range(d + 1)
    ]
    return SchemeCore(n, d, rp.rel, _freeze(p), k_vals, m_vals, E, P, Q, field=nf)


def _simplify_scalar(v):
    if isinstance(v, FieldElement):
        r = v.as_rational()
        return v if r is None else r
    return rat(v) if isinstance(v, int) else v


def _row_is_rational(row):
    out = []
    for v in row:
        r = as_rational(v)
        if r is None:
            return None
        out.append(r)
    return out


def _freeze(p):
    return tuple(tuple(tuple(r) for r in pi) for pi in p)


def _second_eigenmatrix(P, n):
    inv = mat_inv(P)
    return [[_simplify_scalar(v * n) for v in row] for row in inv]


def _check_multiplicities(Q, m_vals, n):
    if sum(m_vals) != n:
        raise ClassCountMismatch("multiplicities do not sum to n")
    for j, m_j in enumerate(m_vals):
        if Q[0][j] != m_j:
            raise ClassCountMismatch("q_j(0) != rank(E_j)")


def _check_dual_consistency(sc):
    report = dual_eigen_consistency(sc)
    if not all(report.values()):
        bad = [j for j, ok in report.items() if not ok]
        raise ClassCountMismatch(f"idempotent/eigenmatrix mismatch for E_{bad}")


# ---------------------------------------------------------------------------
# derived structure


def intersection_numbers(sc, i):
    """The i-th intersection matrix B_i with (B_i)_{k,j} = p_{i,j}^k."""
    if not 0 <= i <= sc.d:
        raise IndexError(f"class index {i} out of range")
    return [[sc.p[i][j][kk] for j in range(sc.d + 1)] for kk in range(sc.d + 1)]


def krein_parameters(sc):
    """Krein tensor via the trace pairing in adjacency coordinates.

    q_{i,j}^k = (n/m_k) tr((E_i o E_j) E_k); with E_j = (1/n) sum_l q_j(l) A_l
    and tr(A_l E_k) = k_l q_k(l) this collapses to a (d+1)-term sum.  The
    expansion is then re-verified against the entrywise product.
    """
    n, d = sc.n, sc.d
    Q, kv, mv = sc.Q, sc.k, sc.m
    q = [[[None] * (d + 1) for _ in range(d + 1)] for _ in range(d + 1)]
    for i in range(d + 1):
        for j in range(i, d + 1):
            for kk in range(d + 1):
                s = 0
                for l in range(d + 1):
                    s = s + Q[l][i] * Q[l][j] * Q[l][kk] * kv[l]
                val = as_rational(s / (n * mv[kk]))
                if val is None:
                    raise NonRationalValue(f"q_{{{i},{j}}}^{kk} is irrational")
                if val < 0:
                    raise NegativeKrein(f"q_{{{i},{j}}}^{kk} = {val} < 0")
                q[i][j][kk] = val
                q[j][i][kk] = val
    # reconstruction: q_i(l) q_j(l) = sum_k q_{ij}^k q_k(l), entry for entry
    for i in range(d + 1):
        for j in range(i, d + 1):
            for l in range(d + 1):
                lhs = Q[l][i] * Q[l][j]
                rhs = 0
                for kk in range(d + 1):
                    if q[i][j][kk]:
                        rhs = rhs + q[i][j][kk] * Q[l][kk]
                if lhs != rhs:
                    raise NegativeKrein("Krein expansion failed to reconstruct")
    return KreinTensor(d, q)


def dual_eigen_consistency(sc):
    """Entrywise check E_j = (1/n) sum_i q_j(i) A_i; pass/fail per j."""
    n = sc.n
    report = {}
    for j in range(sc.d + 1):
        ej = sc.E[j]
        ok = all(
            ej.data[x][y] == sc.Q[sc.rel[x][y]][j] / n
            for x in range(n)
            for y in range(n)
        )
        report[j] = ok
    return report
