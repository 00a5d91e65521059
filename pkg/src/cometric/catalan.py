"""Catalan matrices from weight triples and the calculus built on them.

Covers the three-term-recurrence table, the brute-force weighted-path
oracle, moment recovery, the sphere-weight characterization, the
orthogonal polynomials v*, and the Gegenbauer expansion machinery.
"""

from dataclasses import dataclass, field

from gmpy2 import mpq

from .errors import DivisionByZero, InconsistentMoments
from .exact import rat

R0 = mpq(0)
R1 = mpq(1)


def double_factorial(n):
    """n!! with (-1)!! = 0!! = 1."""
    if n <= 0:
        return 1
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def _rising_even(m, terms):
    """m (m+2) (m+4) ... with ``terms`` factors; exact for rational m."""
    out = R1
    for j in range(terms):
        out *= m + 2 * j
    return out


@dataclass(frozen=True)
class WeightTriple:
    """Sequences (a*, b*, c*) of length d+1 with row sum m.

    Invariants: a_0 = c_0 = b_d = 0, c_1 = 1, all entries nonnegative,
    and b_0 ... b_{d-1}, c_1 ... c_d all nonzero.
    """

    d: int
    alpha: tuple
    beta: tuple
    gamma: tuple
    m: object

    def __post_init__(self):
        d = self.d
        a, b, c = self.alpha, self.beta, self.gamma
        if not (len(a) == len(b) == len(c) == d + 1):
            raise ValueError("sequences must have length d+1")
        if a[0] != 0 or c[0] != 0 or b[d] != 0:
            raise ValueError("a_0 = c_0 = b_d = 0 required")
        if d >= 1 and c[1] != 1:
            raise ValueError("c_1 = 1 required")
        for i in range(d + 1):
            if a[i] < 0 or b[i] < 0 or c[i] < 0:
                raise ValueError("weights must be nonnegative")
            if a[i] + b[i] + c[i] != self.m:
                raise ValueError(f"a_{i}+b_{i}+c_{i} != m")
        for i in range(d):
            if b[i] == 0 or c[i + 1] == 0:
                raise ValueError("product b_i c_{i+1} must be nonzero")

    @classmethod
    def from_abc(cls, a, c, m):
        """Build from a and c sequences; b is filled in via b_i = m - a_i - c_i."""
        m = rat(m)
        a = tuple(rat(x) for x in a)
        c = tuple(rat(x) for x in c)
        b = tuple(m - x - y for x, y in zip(a, c))
        return cls(len(a) - 1, a, b, c, m)

    @classmethod
    def sphere(cls, m, d):
        """The weight triple of a sphere: a = 0, c_j = mj/(m+2j-2).

        The terminal index is forced by b_d = 0, so c_d = m; the sphere
        formula therefore holds for j <= d-1 only (d >= 2 required).
        """
        m = rat(m)
        if d < 2:
            raise ValueError("sphere triple needs d >= 2")
        c = [R0] + [m * j / (m + 2 * j - 2) for j in range(1, d)] + [m]
        a = [R0] * (d + 1)
        return cls.from_abc(a, c, m)


@dataclass
class CatalanMatrix:
    """Table f_{n,k} on the trapezoid 0 <= k <= n, n + k <= 2d."""

    d: int
    f: dict = field(default_factory=dict)

    def get(self, n, k):
        return self.f.get((n, k), R0)

    def cells(self):
        return sorted(self.f)


def _cells(d):
    for n in range(2 * d + 1):
        for k in range(min(n, 2 * d - n) + 1):
            yield n, k


def catalan_matrix(w):
    """Fill the trapezoid via f_{n,k} = c_k f_{n-1,k-1} + a_k f_{n-1,k} + b_k f_{n-1,k+1}."""
    d = w.d
    f = {(0, 0): R1}
    for n in range(1, 2 * d + 1):
        for k in range(min(n, 2 * d - n) + 1):
            v = R0
            if k >= 1:
                v += w.gamma[k] * f.get((n - 1, k - 1), R0)
            if w.alpha[k]:
                v += w.alpha[k] * f.get((n - 1, k), R0)
            if w.beta[k]:
                v += w.beta[k] * f.get((n - 1, k + 1), R0)
            f[(n, k)] = v
    return CatalanMatrix(d, f)


def path_weight_enumeration(w, n, k):
    """Sum of path weights from (0,0) to (n,k) by explicit enumeration.

    Steps go from (x,y) to (x+1,y') with |y'-y| <= 1; an edge into height
    y' weighs c_{y'} (up), a_{y'} (level) or b_{y'} (down).  This is the
    independent oracle for ``catalan_matrix``.
    """
    d = w.d
    total = R0

    def walk(x, y, prod):
        nonlocal total
        if x == n:
            if y == k:
                total += prod
            return
        rem = n - x - 1
        for dy in (1, 0, -1):
            y2 = y + dy
            if y2 < 0 or y2 > x + 1 or x + 1 + y2 > 2 * d:
                continue
            if abs(y2 - k) > rem:
                continue
            wt = (w.gamma, w.alpha, w.beta)[1 - dy][y2]
            if wt:
                walk(x + 1, y2, prod * wt)

    walk(0, 0, R1)
    return total


def path_weight_table(w):
    """All-cell path enumeration in one walk; every prefix is itself a path."""
    d = w.d
    acc = {cell: R0 for cell in _cells(d)}
    acc[(0, 0)] = R1

    def walk(x, y, prod):
        for dy in (1, 0, -1):
            y2 = y + dy
            if y2 < 0 or y2 > x + 1 or x + 1 + y2 > 2 * d:
                continue
            wt = (w.gamma, w.alpha, w.beta)[1 - dy][y2]
            if wt:
                p = prod * wt
                acc[(x + 1, y2)] += p
                walk(x + 1, y2, p)

    walk(0, 0, R1)
    return acc


def catalan_numbers(w):
    """The associated Catalan numbers B_n = f_{n,0} for 0 <= n <= 2d."""
    cm = catalan_matrix(w)
    return [cm.get(n, 0) for n in range(2 * w.d + 1)]


def weights_from_matrix(cm):
    """Recover c_n (n <= d) and a_n (n <= d-1) from the table diagonals.

    Returns (a, c) as lists indexed from 0; a[0] = c[0] = 0.
    """
    d = cm.d
    c = [R0]
    for n in range(1, d + 1):
        prev = cm.get(n - 1, n - 1)
        if prev == 0:
            raise DivisionByZero(f"f_{{{n-1},{n-1}}} = 0")
        c.append(cm.get(n, n) / prev)
    a = [R0]
    for n in range(1, d):
        fnn = cm.get(n, n)
        prev = cm.get(n - 1, n - 1)
        if fnn == 0 or prev == 0:
            raise DivisionByZero(f"vanishing diagonal at n = {n}")
        a.append(cm.get(n + 1, n) / fnn - cm.get(n, n - 1) / prev)
    return a, c


def _partial_f(t, a, c, m):
    """f_{n,k} for n <= t, k <= min(n, t - n) from partial weight lists."""
    f = {(0, 0): R1}
    for n in range(1, t + 1):
        for k in range(min(n, t - n) + 1):
            v = R0
            if k >= 1:
                v += c[k] * f.get((n - 1, k - 1), R0)
            if a[k]:
                v += a[k] * f.get((n - 1, k), R0)
            b_k = m - a[k] - c[k]
            if b_k:
                v += b_k * f.get((n - 1, k + 1), R0)
            f[(n, k)] = v
    return f


def recover_weights(moments, m):
    """Recover (a*, c*) from the Catalan numbers B_1..B_t and m.

    At step t the single new unknown (c_mu at even t = 2mu, a_mu at odd
    t = 2mu+1) occurs at most once on any path to (t, 0), so B_t is an
    affine function of it; two exact evaluations of f_{t,0} solve for it.
    Returns (a, c) with a indexed 0..floor((t-1)/2) and c indexed
    0..ceil((t-1)/2), a[0] = c[0] = 0.
    """
    m = rat(m)
    bs = [rat(x) for x in moments]
    t = len(bs)
    a = [R0]
    c = [R0]
    if t >= 1 and bs[0] != 0:
        raise InconsistentMoments(1, "B_1 must be 0 (a_0 = 0)")
    for s in range(2, t + 1):
        mu = s // 2
        even = s % 2 == 0

        def f_s0(val):
            if even:
                aa, cc = list(a), c + [val]
            else:
                aa, cc = a + [val], list(c)
            # heights reached are <= mu; pad so index lookups stay in range
            aa += [R0] * (mu + 2 - len(aa))
            cc += [R0] * (mu + 2 - len(cc))
            return _partial_f(s, aa, cc, m)[(s, 0)]

        lo = f_s0(R0)
        hi = f_s0(R1)
        coeff = hi - lo
        if coeff == 0:
            raise InconsistentMoments(s, "degenerate step (zero coefficient)")
        val = (bs[s - 1] - lo) / coeff
        if val < 0:
            raise InconsistentMoments(s, "negative weight recovered")
        if even:
            if mu == 1 and val != 1:
                raise InconsistentMoments(s, "B_2 inconsistent with m (c_1 != 1)")
            c.append(val)
        else:
            a.append(val)
            if m - val - c[mu] < 0:
                raise InconsistentMoments(s, "negative b recovered")
    return a, c


# ---------------------------------------------------------------------------
# sphere closed forms


def sphere_moments(m, i):
    """Moments of the uniform measure on S^{m-1}: (i-1)!!(m-2)!!/(m+i-2)!!.

    Evaluated as (i-1)!! / (m (m+2) ... (m+i-2)) so rational m is exact.
    Odd i gives 0.
    """
    if i % 2 == 1:
        return R0
    return mpq(double_factorial(i - 1)) / _rising_even(rat(m), i // 2)


def sphere_catalan_closed_form(m, n, k):
    """Closed form m^n n! (m-2)!! / ((n-k)!! (m+n+k-2)!!); 0 off parity."""
    if (n - k) % 2 == 1:
        return R0
    m = rat(m)
    num = m**n * _factorial(n)
    den = double_factorial(n - k) * _rising_even(m, (n + k) // 2)
    return num / den


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def sphere_weight_check(w, t):
    """True iff the triple matches the sphere weights up to degree t.

    Conditions: a_i = 0 for i <= floor((t-1)/2) and c_j = mj/(m+2j-2)
    for 1 <= j <= ceil((t-1)/2).
    """
    for i in range(min((t - 1) // 2, w.d) + 1):
        if w.alpha[i] != 0:
            return False
    if (t - 1) // 2 > w.d:
        return False
    hi = (t - 1 + 1) // 2  # ceil((t-1)/2)
    if hi > w.d:
        return False
    for j in range(1, hi + 1):
        if w.gamma[j] != w.m * j / (w.m + 2 * j - 2):
            return False
    return True


# ---------------------------------------------------------------------------
# polynomials


class Polynomial:
    """Dense univariate polynomial with exact coefficients, ascending order."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = [rat(x) if isinstance(x, (int, str)) else x for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = c

    @classmethod
    def x(cls):
        return cls([R0, R1])

    @classmethod
    def monomial(cls, n, coeff=R1):
        return cls([R0] * n + [coeff])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Polynomial(out)

    def __sub__(self, other):
        return self + other.scale(-R1)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial([])
        out = [R0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def scale(self, s):
        return Polynomial([c * s for c in self.coeffs])

    def scale_argument(self, s):
        """p(s*x): multiply coefficient of x^k by s^k."""
        return Polynomial([c * s**k for k, c in enumerate(self.coeffs)])

    def __call__(self, x):
        out = None
        for c in reversed(self.coeffs):
            out = c if out is None else out * x + c
        if out is None:
            return R0
        return out

    def coeff(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else R0

    def __repr__(self):
        return f"Polynomial({self.coeffs!r})"


def orthogonal_polys(w):
    """The polynomials v_0*, ..., v_d* of the three-term recurrence."""
    d = w.d
    polys = [Polynomial([R1])]
    if d >= 1:
        polys.append(Polynomial.x())
    x = Polynomial.x()
    for k in range(1, d):
        nxt = x * polys[k] - polys[k].scale(w.alpha[k]) - polys[k - 1].scale(w.beta[k - 1])
        polys.append(nxt.scale(R1 / w.gamma[k + 1]))
    return polys


def expansion_coeffs_check(w, n):
    """Check x^n = sum_k f_{n,k} v_k*(x) coefficientwise (n <= d)."""
    if n > w.d:
        raise ValueError("expansion identity only holds for n <= d")
    cm = catalan_matrix(w)
    polys = orthogonal_polys(w)
    acc = Polynomial([])
    for k in range(n + 1):
        acc = acc + polys[k].scale(cm.get(n, k))
    return acc == Polynomial.monomial(n)


def gegenbauer(m, k):
    """Gegenbauer polynomial Q_k on S^{m-1} by the paper recurrence."""
    m = rat(m)
    if m <= 2 and k >= 2:
        raise ValueError("recurrence degenerates for m <= 2")
    polys = [Polynomial([R1]), Polynomial([R0, m])]
    x = Polynomial.x()
    for j in range(1, k):
        nxt = (x * polys[j] - polys[j - 1].scale((m + j - 3) / (m + 2 * j - 4))).scale(
            (m + 2 * j) / (j + 1)
        )
        polys.append(nxt)
    return polys[k]


def monomial_in_gegenbauer(m, n):
    """Coefficients g_{n,k} and h_{n,k} of x^n in the Gegenbauer basis.

    Verifies x^n = sum_k h_{n,k} Q_k(x/m) coefficientwise before
    returning (g, h) as lists of length n+1.
    """
    m = rat(m)
    g = []
    for k in range(n + 1):
        if (n - k) % 2 == 1:
            g.append(R0)
        else:
            g.append(
                mpq(_factorial(n))
                / (double_factorial(n - k) * _rising_even(m, (n + k) // 2))
            )
    h = [m**n * x for x in g]
    acc = Polynomial([])
    inv_m = R1 / m
    for k in range(n + 1):
        if h[k]:
            acc = acc + gegenbauer(m, k).scale_argument(inv_m).scale(h[k])
    if acc != Polynomial.monomial(n):
        raise AssertionError("Gegenbauer expansion identity failed")
    return g, h


def random_weight_triple(rng, d):
    """A random valid weight triple with small rational entries.

    ``rng`` is a ``random.Random``; determinism comes from its seed.
    """
    if d < 2:
        raise ValueError("d >= 2 required")
    a = [R0]
    for _ in range(1, d + 1):
        a.append(mpq(rng.randint(0, 4), rng.randint(1, 4)))
    c = [R0, R1]
    for _ in range(2, d):
        c.append(mpq(rng.randint(1, 6), rng.randint(1, 3)))
    # m must exceed a_i + c_i for i < d so every b_i stays positive
    floor_m = max(a[i] + c[i] for i in range(d))
    floor_m = max(floor_m, a[d])
    m = floor_m + mpq(rng.randint(1, 5), rng.randint(1, 2))
    c.append(m - a[d])
    return WeightTriple.from_abc(a, c, m)
