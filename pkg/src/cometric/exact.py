"""Arbitrary-precision rational scalars and exact dense linear algebra.

Scalars are gmpy2 ``mpq`` values (``fractions.Fraction`` compatible, much
faster).  The hot integer elimination loop lives in ``cometric._kernel``
with a compiled and a pure-Python backend.
"""

from math import gcd, lcm

from gmpy2 import mpq

from ._kernel import row_echelon
from .errors import NonIntegerSpectrum

Rational = mpq

ZERO = mpq(0)
ONE = mpq(1)


def rat(x, y=None):
    """Coerce ``x`` (int, str 'p/q', Fraction, mpq) to an exact rational."""
    if y is not None:
        return mpq(x, y)
    if isinstance(x, str):
        return mpq(x)
    return mpq(x)


def as_rational(x):
    """Return ``x`` as an mpq, or None if it is irrational.

    Accepts plain rationals and number-field elements (anything exposing
    ``as_rational``).
    """
    if isinstance(x, (int, mpq)):
        return mpq(x)
    conv = getattr(x, "as_rational", None)
    if conv is not None:
        return conv()
    return None


class RationalMatrix:
    """Dense matrix of exact scalars, row-major.

    Despite the name the entry type is any exact scalar (rational or
    number-field element); all corpus computations on the fast path use
    rationals only.
    """

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        self.data = [list(r) for r in data]
        self.rows = len(self.data)
        self.cols = len(self.data[0]) if self.data else 0
        if any(len(r) != self.cols for r in self.data):
            raise ValueError("ragged rows")

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        return cls([[ZERO] * c for _ in range(r)])

    def __getitem__(self, ij):
        return self.data[ij[0]][ij[1]]

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb))
        )

    def __hash__(self):
        return hash((self.rows, self.cols))

    def __add__(self, other):
        return RationalMatrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        return RationalMatrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __mul__(self, other):
        if isinstance(other, RationalMatrix):
            return RationalMatrix(mat_mul(self.data, other.data))
        return RationalMatrix([[a * other for a in r] for r in self.data])

    __rmul__ = __mul__

    def hadamard(self, other):
        return RationalMatrix(
            [[a * b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def transpose(self):
        return RationalMatrix([list(c) for c in zip(*self.data)])

    def trace(self):
        t = self.data[0][0]
        for i in range(1, min(self.rows, self.cols)):
            t = t + self.data[i][i]
        return t

    def is_symmetric(self):
        return all(
            self.data[i][j] == self.data[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def int_rows(self):
        """Rows scaled to integers (common denominator per row, gcd-stripped)."""
        out = []
        for r in self.data:
            qs = [mpq(x) for x in r]
            den = 1
            for x in qs:
                den = lcm(den, int(x.denominator))
            ints = [int(x * den) for x in qs]
            g = 0
            for a in ints:
                g = gcd(g, a)
                if g == 1:
                    break
            if g > 1:
                ints = [a // g for a in ints]
            out.append(ints)
        return out

    def __repr__(self):
        return f"RationalMatrix({self.data!r})"


# ---------------------------------------------------------------------------
# rank / nullspace via the integer echelon kernel


def rank(M):
    """Rank of ``M`` over the rationals by fraction-free elimination."""
    r, _ = row_echelon(M.int_rows())
    return r


def _int_nullspace(rows, ncols):
    """Kernel basis of an integer matrix; vectors are gcd-stripped ints."""
    work = [list(r) for r in rows]
    r, pivots = row_echelon(work)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for i in range(r - 1, -1, -1):
            c = pivots[i]
            s = ZERO
            row = work[i]
            for j in range(c + 1, ncols):
                if row[j] and x[j]:
                    s += row[j] * x[j]
            x[c] = -s / row[c]
        den = 1
        for v in x:
            den = lcm(den, int(mpq(v).denominator))
        ints = [int(v * den) for v in x]
        g = 0
        for a in ints:
            g = gcd(g, a)
            if g == 1:
                break
        if g > 1:
            ints = [a // g for a in ints]
        basis.append(ints)
    return basis


def nullspace(M):
    """Basis of the right kernel of ``M`` as column vectors."""
    vecs = _int_nullspace(M.int_rows(), M.cols)
    return [RationalMatrix([[mpq(v)] for v in vec]) for vec in vecs]


# ---------------------------------------------------------------------------
# generic small-matrix helpers (entries: any exact field scalar)


def mat_mul(a, b):
    bt = list(zip(*b))
    out = []
    for ra in a:
        row = []
        for cb in bt:
            s = ra[0] * cb[0]
            for x, y in zip(ra[1:], cb[1:]):
                s = s + x * y
            row.append(s)
        out.append(row)
    return out


def mat_inv(a):
    """Inverse of a small exact matrix by Gauss-Jordan elimination."""
    n = len(a)
    work = [list(r) for r in a]
    # int 0/1 coerce into any exact scalar type via its arithmetic
    inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for c in range(n):
        p = next((i for i in range(c, n) if work[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        work[c], work[p] = work[p], work[c]
        inv[c], inv[p] = inv[p], inv[c]
        piv = work[c][c]
        work[c] = [x / piv for x in work[c]]
        inv[c] = [x / piv for x in inv[c]]
        for i in range(n):
            if i != c and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
                inv[i] = [x - f * y for x, y in zip(inv[i], inv[c])]
    return inv


def generic_nullspace(a, ncols):
    """Kernel basis of a small exact matrix over any field scalar type."""
    # ints must become mpq up front or int/int would go through float
    work = [[mpq(x) if isinstance(x, int) else x for x in r] for r in a]
    nrows = len(work)
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if work[i][c] != 0), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        piv = work[r][c]
        work[r] = [x / piv for x in work[r]]
        for i in range(nrows):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, c in enumerate(pivots):
            x[c] = -work[i][f]
        basis.append(x)
    return basis


# ---------------------------------------------------------------------------
# simultaneous eigenspace refinement over the integers


def _gershgorin(a):
    return max(sum(abs(v) for v in row) for row in a)


def _mat_vec_int(a, v):
    return [sum(x * y for x, y in zip(row, v) if x) for row in a]


def _strip(vec):
    g = 0
    for a in vec:
        g = gcd(g, a)
        if g == 1:
            return vec
    if g > 1:
        return [a // g for a in vec]
    return vec


def simultaneous_eigenspaces(mats, n):
    """Refine Z^n into common eigenspaces of symmetric commuting int matrices.

    Returns ``[(basis, eigvals)]`` where ``basis`` is a list of integer
    vectors and ``eigvals`` the tuple of eigenvalues, one per input matrix.
    Raises NonIntegerSpectrum when an integer eigenvalue search cannot
    account for a full subspace.
    """
    spaces = [([[1 if i == j else 0 for i in range(n)] for j in range(n)], ())]
    for a in mats:
        bound = _gershgorin(a)
        refined = []
        for basis, evs in spaces:
            r = len(basis)
            images = [_mat_vec_int(a, v) for v in basis]
            remaining = r
            for lam in range(-bound, bound + 1):
                if remaining == 0:
                    break
                # columns of M are A v_j - lam v_j; kernel coeffs give the
                # lam-eigenspace inside span(basis)
                m_rows = [
                    [images[j][i] - lam * basis[j][i] for j in range(r)]
                    for i in range(n)
                ]
                ker = _int_nullspace(m_rows, r)
                if not ker:
                    continue
                newbasis = []
                for coeffs in ker:
                    vec = [
                        sum(coeffs[j] * basis[j][i] for j in range(r))
                        for i in range(n)
                    ]
                    newbasis.append(_strip(vec))
                refined.append((newbasis, evs + (lam,)))
                remaining -= len(ker)
            if remaining:
                raise NonIntegerSpectrum(
                    f"{remaining} dimension(s) with no integer eigenvalue in "
                    f"[-{bound}, {bound}]"
                )
        spaces = refined
    return spaces


def projector_from_basis(basis, n):
    """Orthogonal projector onto span(basis): V (V^T V)^-1 V^T, exact."""
    r = len(basis)
    v = [[mpq(basis[j][i]) for j in range(r)] for i in range(n)]  # n x r
    vt = [list(row) for row in zip(*v)]  # r x n
    gram = mat_mul(vt, v)
    ginv = mat_inv(gram)
    return RationalMatrix(mat_mul(v, mat_mul(ginv, vt)))


def common_eigenspace_projectors(mats, n):
    """Minimal common eigenspace projectors of commuting symmetric matrices.

    ``mats`` may be RationalMatrix instances with integer entries or plain
    integer list-of-list matrices.
    """
    int_mats = []
    for m in mats:
        if isinstance(m, RationalMatrix):
            int_mats.append([[int(x) for x in row] for row in m.data])
        else:
            int_mats.append([[int(x) for x in row] for row in m])
    spaces = simultaneous_eigenspaces(int_mats, n)
    return [projector_from_basis(basis, n) for basis, _ in spaces]
