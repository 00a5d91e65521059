"""Pure-Python integer row echelon kernel.

Same algorithm as the Cython version in ``_echelon_c.pyx``; kept in sync
by the shared kernel test suite.
"""

from math import gcd

BACKEND = "python"


def row_echelon(rows):
    """Fraction-free row echelon form of an integer matrix, in place.

    Each elimination step uses the cross-multiplication
    ``row_i <- (piv/g) * row_i - (v/g) * row_r`` followed by a gcd strip,
    so entries stay integral and small.  Returns ``(rank, pivot_cols)``.
    """
    nrows = len(rows)
    if nrows == 0:
        return 0, []
    ncols = len(rows[0])
    r = 0
    pivots = []
    for c in range(ncols):
        # smallest nonzero |entry| as pivot keeps coefficients small
        best = -1
        for i in range(r, nrows):
            v = rows[i][c]
            if v:
                if best < 0 or abs(v) < abs(rows[best][c]):
                    best = i
        if best < 0:
            continue
        if best != r:
            rows[best], rows[r] = rows[r], rows[best]
        piv_row = rows[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            v = rows[i][c]
            if v:
                g = gcd(piv, v)
                mp = piv // g
                mv = v // g
                row = rows[i]
                new = [mp * a - mv * b for a, b in zip(row, piv_row)]
                g2 = 0
                for a in new:
                    if a:
                        g2 = gcd(g2, a)
                        if g2 == 1:
                            break
                if g2 > 1:
                    new = [a // g2 for a in new]
                rows[i] = new
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots
