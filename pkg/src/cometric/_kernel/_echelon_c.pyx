# cython: language_level=3, boundscheck=False
"""Compiled integer row echelon kernel.

Entries are arbitrary-precision Python ints; Cython removes the
interpreter overhead of the inner loops.  Mirrors ``_echelon_py``.
"""

from math import gcd

BACKEND = "cython"


def row_echelon(list rows):
    cdef Py_ssize_t nrows = len(rows)
    if nrows == 0:
        return 0, []
    cdef Py_ssize_t ncols = len(rows[0])
    cdef Py_ssize_t r = 0, c, i, j, best
    cdef list pivots = [], piv_row, row, new
    cdef object piv, v, g, mp, mv, g2, a
    for c in range(ncols):
        best = -1
        for i in range(r, nrows):
            v = (<list>rows[i])[c]
            if v != 0:
                if best < 0 or abs(v) < abs((<list>rows[best])[c]):
                    best = i
        if best < 0:
            continue
        if best != r:
            rows[best], rows[r] = rows[r], rows[best]
        piv_row = <list>rows[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = <list>rows[i]
            v = row[c]
            if v != 0:
                g = gcd(piv, v)
                mp = piv // g
                mv = v // g
                new = [0] * ncols
                for j in range(ncols):
                    new[j] = mp * row[j] - mv * piv_row[j]
                g2 = 0
                for j in range(ncols):
                    a = new[j]
                    if a != 0:
                        g2 = gcd(g2, a)
                        if g2 == 1:
                            break
                if g2 > 1:
                    for j in range(ncols):
                        new[j] = new[j] // g2
                rows[i] = new
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots
