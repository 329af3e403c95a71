"""Small exact linear algebra over Z and Q on lists of lists."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def primitive(v) -> tuple[int, ...]:
    """Scale a rational vector to coprime integers with the same direction."""
    if all(type(x) is int for x in v):
        g = math.gcd(*v)
        if g <= 1:
            return tuple(v)
        return tuple(x // g for x in v)
    v = [Fraction(x) for x in v]
    den = reduce(math.lcm, (x.denominator for x in v), 1)
    ints = [int(x * den) for x in v]
    g = reduce(math.gcd, ints, 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rref(rows):
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows) -> int:
    rows = [r for r in rows if any(r)]
    if not rows:
        return 0
    return _int_rank(rows)


def _int_rank(rows) -> int:
    m = [list(r) for r in rows]
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        a = m[r][c]
        for i in range(r + 1, len(m)):
            b = m[i][c]
            if b:
                g = math.gcd(a, b)
                ai, bi = a // g, b // g
                m[i] = [ai * x - bi * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def nullspace(rows, ncols: int) -> list[tuple[int, ...]]:
    """Primitive integer basis of the rational kernel ``{y : rows * y = 0}``."""
    if not rows:
        return [tuple(1 if i == j else 0 for i in range(ncols)) for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(m, pivots):
            v[pc] = -row[f]
        out.append(primitive(v))
    return out


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``x*a + y*b = g = gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def integer_kernel(rows, ncols: int) -> list[tuple[int, ...]]:
    """Basis of the lattice ``{x in Z^ncols : rows * x = 0}``.

    Column operations reduce ``rows`` to echelon form while a unimodular
    transform is tracked; its columns that end up over zero columns span the
    integer kernel.
    """
    A = [list(r) for r in rows]
    U = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]

    def colop(i, j, a, b, c, d):
        # (col_i, col_j) <- (a col_i + b col_j, c col_i + d col_j)
        for M in (A, U):
            for row in M:
                x, y = row[i], row[j]
                row[i] = a * x + b * y
                row[j] = c * x + d * y

    piv = 0
    for r in range(len(A)):
        if piv == ncols:
            break
        for j in range(piv + 1, ncols):
            b = A[r][j]
            if b == 0:
                continue
            a = A[r][piv]
            g, x, y = ext_gcd(a, b)
            colop(piv, j, x, y, -b // g, a // g)
        if A[r][piv] != 0:
            piv += 1
    return [tuple(U[i][j] for i in range(ncols)) for j in range(piv, ncols)]


def solve(columns, target) -> list[Fraction]:
    """Solve ``sum z_j * columns[j] = target`` for a consistent, full-column-rank system."""
    k = len(columns)
    d = len(target)
    rows = [[columns[j][i] for j in range(k)] + [target[i]] for i in range(d)]
    m, pivots = rref(rows)
    if k in pivots:
        raise ValueError("inconsistent system")
    z = [Fraction(0)] * k
    for row, pc in zip(m, pivots):
        z[pc] = row[k]
    return z


def det_and_adjugate(M) -> tuple[int, list[list[int]]]:
    """``(d, R)`` with ``M^{-1} = R / d`` for a nonsingular integer matrix.

    Fraction-free Gauss-Jordan elimination on ``[M | I]``; every division is
    exact and ``|d| = |det M|``.
    """
    k = len(M)
    A = [list(M[i]) + [int(i == j) for j in range(k)] for i in range(k)]
    prev = 1
    for c in range(k):
        p = next((i for i in range(c, k) if A[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        if p != c:
            A[c], A[p] = A[p], A[c]
        rc = A[c]
        piv = rc[c]
        for i in range(k):
            if i == c:
                continue
            ri = A[i]
            f = ri[c]
            A[i] = [(piv * x - f * y) // prev for x, y in zip(ri, rc)]
        prev = piv
    d = A[0][0]
    # every row now reads d * e_i on the left
    return d, [row[k:] for row in A]


def hnf_diagonal(columns) -> list[int]:
    """Diagonal of a lower-triangular basis of the lattice spanned by ``columns``.

    ``columns`` must be ``k`` linearly independent integer vectors in ``Z^k``.
    The box ``prod [0, h_i)`` is then a set of coset representatives of
    ``Z^k`` modulo that lattice.
    """
    k = len(columns)
    A = [[columns[j][i] for j in range(k)] for i in range(k)]
    for r in range(k):
        for j in range(r + 1, k):
            b = A[r][j]
            if b == 0:
                continue
            a = A[r][r]
            g, x, y = ext_gcd(a, b)
            c, d = -b // g, a // g
            for row in A:
                u, v = row[r], row[j]
                row[r] = x * u + y * v
                row[j] = c * u + d * v
        if A[r][r] < 0:
            for row in A:
                row[r] = -row[r]
    return [A[i][i] for i in range(k)]


def bareiss_det(M) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    A = [list(r) for r in M]
    k = len(A)
    sign = 1
    prev = 1
    for c in range(k - 1):
        if A[c][c] == 0:
            p = next((i for i in range(c + 1, k) if A[i][c] != 0), None)
            if p is None:
                return 0
            A[c], A[p] = A[p], A[c]
            sign = -sign
        piv = A[c][c]
        rc = A[c]
        for i in range(c + 1, k):
            ri = A[i]
            f = ri[c]
            for j in range(c + 1, k):
                ri[j] = (ri[j] * piv - f * rc[j]) // prev
        prev = piv
    return sign * A[k - 1][k - 1] if k else 1
