"""Exact integer linear algebra: primitive vectors, Hermite forms, kernels, determinants.

Vectors are tuples of Python ints, matrices are tuples of row tuples.  Everything
is arbitrary precision; nothing here ever touches floating point.
"""

from math import gcd


def content(v):
    """gcd of the entries (0 for the zero vector)."""
    g = 0
    for x in v:
        g = gcd(g, x)
        if g == 1:
            return 1
    return g


def primitive(v):
    """Divide out the content, keeping orientation. Zero vector stays zero."""
    g = content(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def sign_primitive(v):
    """Primitive representative with first nonzero entry positive.

    Only for sign-free data (hyperplane normals, lattice basis vectors).
    """
    w = primitive(v)
    for x in w:
        if x > 0:
            return w
        if x < 0:
            return tuple(-y for y in w)
    return w


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def mat_vec(mat, v):
    return tuple(dot(row, v) for row in mat)


def vec_sub_scaled(a, q, b):
    return tuple(x - q * y for x, y in zip(a, b))


def hnf(rows):
    """Row Hermite normal form of the lattice spanned by ``rows``.

    Returns the canonical basis (nonzero rows, pivots positive, entries above
    pivots reduced).  Two row sets span the same lattice iff their hnf agrees.
    """
    rows = [list(r) for r in rows]
    m = len(rows)
    n = len(rows[0]) if m else 0
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, m):
            while rows[i][c]:
                q = rows[r][c] // rows[i][c]
                rows[r] = [a - q * b for a, b in zip(rows[r], rows[i])]
                rows[r], rows[i] = rows[i], rows[r]
        if rows[r][c] < 0:
            rows[r] = [-a for a in rows[r]]
        for i in range(r):
            q = rows[i][c] // rows[r][c]
            if q:
                rows[i] = [a - q * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(row) for row in rows[:r])


def rank(rows):
    return len(hnf(rows))


def kernel_basis(mat, n=None):
    """Saturated lattice basis of the right kernel {v : mat . v = 0}.

    ``mat`` is a sequence of rows of length n; pass ``n`` explicitly when the
    matrix has no rows.  Result rows are in Hermite normal form.
    """
    mat = tuple(tuple(r) for r in mat)
    if n is None:
        if not mat:
            raise ValueError("kernel_basis of an empty matrix needs n")
        n = len(mat[0])
    k = len(mat)
    # rows of [I | mat^T]; eliminate the right block, kernel = left parts of
    # rows whose right block vanished (U unimodular => basis is saturated)
    aug = [[1 if i == j else 0 for j in range(n)] + [mat[t][i] for t in range(k)]
           for i in range(n)]
    r = 0
    for c in range(n, n + k):
        piv = None
        for i in range(r, n):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(r + 1, n):
            while aug[i][c]:
                q = aug[r][c] // aug[i][c]
                aug[r] = [a - q * b for a, b in zip(aug[r], aug[i])]
                aug[r], aug[i] = aug[i], aug[r]
        r += 1
    ker = [tuple(row[:n]) for row in aug[r:]]
    return hnf(ker)


def gale_dual(mat):
    """Integer matrix whose rows form a saturated basis of ker(mat).

    Requires full row rank; the row lattice of the result is canonical (HNF).
    """
    mat = tuple(tuple(r) for r in mat)
    if mat and rank(mat) != len(mat):
        raise ValueError("gale_dual requires a matrix of full row rank")
    if not mat:
        raise ValueError("gale_dual of an empty matrix is undefined")
    return kernel_basis(mat)


def det(mat):
    """Exact determinant via fraction-free (Bareiss) elimination."""
    a = [list(r) for r in mat]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("det requires a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k]), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def adjugate(mat):
    """Adjugate matrix: mat . adj(mat) = det(mat) . I."""
    n = len(mat)
    if n == 1:
        return ((1,),)
    cof = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [[mat[r][c] for c in range(n) if c != j]
                     for r in range(n) if r != i]
            cof[i][j] = (-1) ** (i + j) * det(minor)
    # adjugate = transpose of the cofactor matrix
    return tuple(tuple(cof[j][i] for j in range(n)) for i in range(n))
