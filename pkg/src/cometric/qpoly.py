"""Q-polynomial ordering detection from the Krein tensor."""

from dataclasses import dataclass

from gmpy2 import mpq

from .errors import NotTridiagonal


@dataclass(frozen=True)
class QPolyOrdering:
    """A Q-polynomial relabeling of the idempotents with its parameters.

    ``perm[i]`` is the scheme index of the i-th idempotent in the ordering;
    a_i* = q_{1,i}^i, b_i* = q_{1,i+1}^i, c_i* = q_{1,i-1}^i in relabeled
    indices, and m = b_0* is the multiplicity of E_{perm[1]}.
    """

    perm: tuple
    a_star: tuple
    b_star: tuple
    c_star: tuple
    m: mpq

    def __post_init__(self):
        d = len(self.perm) - 1
        a, b, c, m = self.a_star, self.b_star, self.c_star, self.m
        assert self.perm[0] == 0
        assert a[0] == 0 and c[0] == 0 and b[d] == 0
        assert c[1] == 1
        assert all(a[i] + b[i] + c[i] == m for i in range(d + 1))
        assert all(b[i] > 0 for i in range(d))
        assert all(c[i] > 0 for i in range(1, d + 1))


def abc_sequences(kt, perm):
    """Read (a*, b*, c*, m) off the relabeled first Krein matrix.

    The matrix M[j][k] = q_{perm[1], perm[j]}^{perm[k]} must be exactly
    tridiagonal; m comes from the row law a* + b* + c* = m at i = 0.
    """
    d = kt.d
    s = perm[1]
    M = [[kt[s, perm[j], perm[k]] for k in range(d + 1)] for j in range(d + 1)]
    for j in range(d + 1):
        for k in range(d + 1):
            if abs(j - k) > 1 and M[j][k] != 0:
                raise NotTridiagonal(
                    f"q_{{1,{j}}}^{k} = {M[j][k]} != 0 in relabeled indices"
                )
    a = tuple(M[i][i] for i in range(d + 1))
    b = tuple(M[i + 1][i] for i in range(d)) + (mpq(0),)
    c = (mpq(0),) + tuple(M[i - 1][i] for i in range(1, d + 1))
    m = a[0] + b[0] + c[0]
    return a, b, c, m


def _full_condition(kt, perm):
    """q_{i,j}^k = 0 when k > i+j and > 0 when k = i+j, relabeled."""
    d = kt.d
    for i in range(d + 1):
        for j in range(d + 1):
            for k in range(d + 1):
                q = kt[perm[i], perm[j], perm[k]]
                if k > i + j and q != 0:
                    return False
                if k == i + j and not q > 0:
                    return False
    return True


def find_qpoly_orderings(kt, sc):
    """All Q-polynomial orderings, one candidate growth per first idempotent.

    From each E_s the next idempotent is forced: the unique unused j with
    q_{s, last}^j > 0.  A grown permutation is accepted only if the full
    zero/positivity condition holds, which makes the greedy step sound.
    """
    d = kt.d
    out = []
    for s in range(1, d + 1):
        perm = [0, s]
        used = {0, s}
        ok = True
        while len(perm) <= d and ok:
            last = perm[-1]
            cands = [
                j
                for j in range(d + 1)
                if j not in used and kt[s, last, j] > 0
            ]
            if len(cands) != 1:
                ok = False
            else:
                perm.append(cands[0])
                used.add(cands[0])
        if not ok or not _full_condition(kt, perm):
            continue
        try:
            a, b, c, m = abc_sequences(kt, tuple(perm))
        except NotTridiagonal:
            continue
        if m != sc.m[s]:
            continue
        out.append(QPolyOrdering(tuple(perm), a, b, c, m))
    return out
