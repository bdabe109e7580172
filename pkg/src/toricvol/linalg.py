"""Exact linear algebra over the rationals and the integers.

Matrices are plain lists (or tuples) of rows.  Entries are ``int`` or
``fractions.Fraction``; nothing in here ever touches a float.
"""
from fractions import Fraction
from math import gcd


def _frac_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def row_echelon(rows):
    """Reduced row echelon form.  Returns ``(rref, pivot_columns)``."""
    m = _frac_rows(rows)
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
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows):
    return len(row_echelon(rows)[1])


def affine_rank(points):
    """Dimension of the affine hull of ``points`` (-1 for the empty set)."""
    points = list(points)
    if not points:
        return -1
    p0 = points[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def nullspace(rows, ncols=None):
    """Basis of the right kernel ``{x : rows @ x = 0}`` as a list of vectors."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rref, pivots = row_echelon(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rref[i][f]
        basis.append(v)
    return basis


def solve(rows, rhs):
    """Solve ``rows @ x = rhs``.

    Returns a particular solution or ``None`` if the system is inconsistent.
    Free variables are set to zero.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    ncols = len(rows[0])
    rref, pivots = row_echelon(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        x[pc] = rref[i][ncols]
    return x


def det(rows):
    """Determinant by fraction-free Bareiss elimination (exact)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    den = 1
    for row in rows:
        for x in row:
            if isinstance(x, Fraction):
                den = den * x.denominator // gcd(den, x.denominator)
    m = [[int(x * den) for x in row] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return Fraction(sign * m[n - 1][n - 1], den ** n)


def inverse(rows):
    n = len(rows)
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(rows)]
    rref, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in rref]


def matvec(m, v):
    return [sum(a * b for a, b in zip(row, v)) for row in m]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def lcm(a, b):
    return a * b // gcd(a, b)


def primitive(v):
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return tuple(x // g for x in ints)


def xgcd(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b == g == gcd(a, b) >= 0``."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def hermite_normal_form(rows):
    """Row-style Hermite normal form ``H = U @ A`` with ``U`` unimodular.

    Pivots are positive, entries above a pivot are reduced into
    ``[0, pivot)`` and zero rows are dropped.  ``H`` depends only on the
    row lattice of ``A``, which is what makes it usable as an invariant of
    ``A`` under left multiplication by GL(n, Z).
    """
    a = [[int(x) for x in row] for row in rows]
    if not a:
        return ()
    nrows, ncols = len(a), len(a[0])
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        # gcd-combine every row below r into row r on column c
        for i in range(r + 1, nrows):
            if a[i][c] == 0:
                continue
            g, s, t = xgcd(a[r][c], a[i][c])
            p, q = a[r][c] // g, a[i][c] // g
            ra, ri = a[r], a[i]
            a[r] = [s * x + t * y for x, y in zip(ra, ri)]
            a[i] = [-q * x + p * y for x, y in zip(ra, ri)]
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        piv = a[r][c]
        for i in range(r):
            f = a[i][c] // piv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in a[:r])


def complete_to_unimodular(m):
    """Integer matrix with determinant +-1 whose last row is the primitive vector ``m``."""
    m = [int(x) for x in m]
    n = len(m)
    g = 0
    for x in m:
        g = gcd(g, x)
    if g != 1:
        raise ValueError("vector is not primitive")
    # column operations U with m @ U = e_k; then U^{-1} has m as row k
    u = [[int(i == j) for j in range(n)] for i in range(n)]
    row = list(m)
    for j in range(1, n):
        if row[j] == 0:
            continue
        g, s, t = xgcd(row[0], row[j])
        p, q = row[0] // g, row[j] // g
        for i in range(n):
            c0, cj = u[i][0], u[i][j]
            u[i][0] = s * c0 + t * cj
            u[i][j] = -q * c0 + p * cj
        row[0], row[j] = g, 0
    if row[0] == -1:
        for i in range(n):
            u[i][0] = -u[i][0]
    inv = [[int(x) for x in r] for r in inverse(u)]
    # inv has m as its first row; move it last
    return inv[1:] + inv[:1]
