"""Integer lattice algorithms: Hermite and Smith normal forms with
transformation matrices, saturation, orthogonal complements, polar
bases, and completion of a primitive vector to a unimodular basis.

All arithmetic is fraction-free over Python integers; matrices are
lists of row lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) = x*a + y*b, g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        g, x, y = -g, -x, -y
    return g, x, y


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        oi = out[i]
        for k in range(inner):
            c = ai[k]
            if c:
                bk = b[k]
                for j in range(cols):
                    if bk[j]:
                        oi[j] += c * bk[j]
    return out


def mat_vec(a, v):
    return [sum(c * x for c, x in zip(row, v)) for row in a]


def transpose(a):
    if not a:
        return []
    return [[row[i] for row in a] for i in range(len(a[0]))]


def vec_mat(v, a):
    n = len(a[0]) if a else 0
    out = [0] * n
    for c, row in zip(v, a):
        if c:
            for j in range(n):
                if row[j]:
                    out[j] += c * row[j]
    return out


def determinant(m) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
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
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def mat_inverse_unimodular(u):
    """Exact integer inverse of a matrix with determinant +-1."""
    n = len(u)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(u)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    out = []
    for row in aug:
        vals = row[n:]
        if any(v.denominator != 1 for v in vals):
            raise ValueError("matrix is not unimodular")
        out.append([int(v) for v in vals])
    return out


def hermite_normal_form(rows) -> tuple[list[list[int]], list[list[int]]]:
    """Row HNF of an integer matrix.

    Returns (H, T) where H consists of the nonzero rows (upper echelon,
    positive pivots, entries above each pivot reduced into [0, pivot))
    and T is unimodular with T * rows = H padded by zero rows.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(r) for r in rows]
    t = identity_matrix(m)
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if a[i][col]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        t[r], t[piv] = t[piv], t[r]
        for i in range(r + 1, m):
            while a[i][col]:
                p, q = a[r][col], a[i][col]
                if q % p == 0:
                    f = q // p
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                    t[i] = [x - f * y for x, y in zip(t[i], t[r])]
                else:
                    g, x, y = xgcd(p, q)
                    pp, qq = p // g, q // g
                    new_r = [x * u + y * v for u, v in zip(a[r], a[i])]
                    new_i = [-qq * u + pp * v for u, v in zip(a[r], a[i])]
                    a[r], a[i] = new_r, new_i
                    new_tr = [x * u + y * v for u, v in zip(t[r], t[i])]
                    new_ti = [-qq * u + pp * v for u, v in zip(t[r], t[i])]
                    t[r], t[i] = new_tr, new_ti
        if a[r][col] < 0:
            a[r] = [-x for x in a[r]]
            t[r] = [-x for x in t[r]]
        p = a[r][col]
        for i in range(r):
            f = a[i][col] // p
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
                t[i] = [x - f * y for x, y in zip(t[i], t[r])]
        r += 1
    return [row for row in a[:r]], t


def _smith_diagonalize(mat):
    """General Smith diagonalization W * mat * V = D for any integer
    matrix; returns (W, diag, V) with the divisibility chain on the
    positive diagonal entries."""
    k = len(mat)
    n = len(mat[0]) if k else 0
    a = [list(r) for r in mat]
    w = identity_matrix(k)
    v = identity_matrix(n)

    def col_op(j1, j2, c11, c12, c21, c22):
        # columns j1, j2 <- (c11*j1 + c21*j2, c12*j1 + c22*j2)
        for row in a:
            x, y = row[j1], row[j2]
            row[j1] = c11 * x + c21 * y
            row[j2] = c12 * x + c22 * y
        for row in v:
            x, y = row[j1], row[j2]
            row[j1] = c11 * x + c21 * y
            row[j2] = c12 * x + c22 * y

    t = 0
    while t < k and t < n:
        piv = None
        best = None
        for i in range(t, k):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    piv = (i, j)
        if piv is None:
            break
        pi, pj = piv
        a[t], a[pi] = a[pi], a[t]
        w[t], w[pi] = w[pi], w[t]
        if pj != t:
            col_op(t, pj, 0, 1, 1, 0)
        while True:
            # clear column t
            for i in range(t + 1, k):
                while a[i][t]:
                    p, q = a[t][t], a[i][t]
                    if q % p == 0:
                        f = q // p
                        a[i] = [x - f * y for x, y in zip(a[i], a[t])]
                        w[i] = [x - f * y for x, y in zip(w[i], w[t])]
                    else:
                        g, x, y = xgcd(p, q)
                        pp, qq = p // g, q // g
                        new_t = [x * u + y * vv for u, vv in zip(a[t], a[i])]
                        new_i = [-qq * u + pp * vv for u, vv in zip(a[t], a[i])]
                        a[t], a[i] = new_t, new_i
                        new_wt = [x * u + y * vv for u, vv in zip(w[t], w[i])]
                        new_wi = [-qq * u + pp * vv for u, vv in zip(w[t], w[i])]
                        w[t], w[i] = new_wt, new_wi
            # clear row t
            row_dirty = False
            for j in range(t + 1, n):
                while a[t][j]:
                    p, q = a[t][t], a[t][j]
                    if q % p == 0:
                        f = q // p
                        col_op(t, j, 1, -f, 0, 1)
                    else:
                        g, x, y = xgcd(p, q)
                        pp, qq = p // g, q // g
                        col_op(t, j, x, -qq, y, pp)
                        row_dirty = True
            if row_dirty and any(a[i][t] for i in range(t + 1, k)):
                continue
            # force divisibility of the remaining block by the pivot
            p = a[t][t]
            bad = None
            for i in range(t + 1, k):
                for j in range(t + 1, n):
                    if a[i][j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad])]
            w[t] = [x + y for x, y in zip(w[t], w[bad])]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            w[t] = [-x for x in w[t]]
        t += 1
    diag = [a[i][i] for i in range(min(k, n))]
    return w, diag, v


def smith_normal_form(mat):
    """Smith normal form of a nonsingular square integer matrix.

    Returns (W, D, V) with W * mat * V = D, W and V unimodular, and
    D = diag(d_1, ..., d_n) with positive d_i and d_1 | d_2 | ... | d_n.
    """
    n = len(mat)
    if any(len(r) != n for r in mat):
        raise ValueError("matrix must be square")
    if determinant(mat) == 0:
        raise ValueError("matrix is singular")
    w, diag, v = _smith_diagonalize(mat)
    d = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
    return w, d, v


class IntegerLattice:
    """A sublattice of Z^n, stored by its canonical HNF basis rows."""

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient: int, rows=()):
        hnf, _ = hermite_normal_form([list(r) for r in rows]) if rows else ([], None)
        for r in hnf:
            if len(r) != ambient:
                raise ValueError("row length does not match ambient dimension")
        self.ambient = ambient
        self.rows = tuple(tuple(r) for r in hnf)

    @classmethod
    def full(cls, n: int) -> "IntegerLattice":
        return cls(n, identity_matrix(n))

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        return self.coefficients(v) is not None

    def coefficients(self, v):
        """Integer coordinates of v over the HNF basis, or None."""
        v = list(v)
        coeffs = []
        for row in self.rows:
            col = next(j for j, x in enumerate(row) if x)
            if v[col] % row[col] != 0:
                return None
            f = v[col] // row[col]
            coeffs.append(f)
            if f:
                v = [x - f * y for x, y in zip(v, row)]
        return coeffs if not any(v) else None

    def contains_lattice(self, other: "IntegerLattice") -> bool:
        return all(self.contains(r) for r in other.rows)

    def saturation(self) -> "IntegerLattice":
        return self.orthogonal_complement().orthogonal_complement()

    def is_primitive(self) -> bool:
        return self == self.saturation()

    def orthogonal_complement(self) -> "IntegerLattice":
        """Basis of span_R(self)^perp intersected with Z^n; always a
        primitive lattice."""
        n = self.ambient
        if not self.rows:
            return IntegerLattice.full(n)
        # left kernel of the transpose: rows x with x . r = 0 for all r
        bt = [[row[i] for row in self.rows] for i in range(n)]
        h, t = hermite_normal_form(bt)
        kernel = t[len(h):]
        return IntegerLattice(n, kernel)

    def gram_determinant(self) -> int:
        """det(B * B^T) for the HNF basis B; the squared lattice
        determinant."""
        g = [[sum(x * y for x, y in zip(r1, r2)) for r2 in self.rows]
             for r1 in self.rows]
        return determinant(g)

    def __eq__(self, other):
        if isinstance(other, IntegerLattice):
            return self.ambient == other.ambient and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"IntegerLattice({self.ambient}, {list(map(list, self.rows))})"


def saturation(rows, ambient: int | None = None) -> IntegerLattice:
    """Smallest primitive lattice containing the row span."""
    if ambient is None:
        ambient = len(rows[0])
    return IntegerLattice(ambient, rows).saturation()


def orthogonal_complement(rows, ambient: int | None = None) -> IntegerLattice:
    if ambient is None:
        ambient = len(rows[0])
    return IntegerLattice(ambient, rows).orthogonal_complement()


def is_primitive_vector(a) -> bool:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g == 1


def extend_to_basis(a) -> list[list[int]]:
    """A unimodular matrix whose first row is the primitive vector a;
    the remaining rows are size-reduced against the earlier ones."""
    a = list(a)
    n = len(a)
    if not is_primitive_vector(a):
        raise ValueError("vector is not primitive")
    # column-reduce a to e_1, mirroring the operations on an identity
    # matrix to obtain V with a*V = e_1; then U = V^{-1} has first row a
    vec = a[:]
    v = identity_matrix(n)

    def col_op(j1, j2, c11, c12, c21, c22):
        x, y = vec[j1], vec[j2]
        vec[j1] = c11 * x + c21 * y
        vec[j2] = c12 * x + c22 * y
        for row in v:
            x, y = row[j1], row[j2]
            row[j1] = c11 * x + c21 * y
            row[j2] = c12 * x + c22 * y

    for j in range(1, n):
        if vec[j] == 0:
            continue
        p, q = vec[0], vec[j]
        g, x, y = xgcd(p, q)
        col_op(0, j, x, -(q // g), y, p // g)
    if vec[0] < 0:
        for row in v:
            row[0] = -row[0]
        vec[0] = -vec[0]
    u = mat_inverse_unimodular(v)
    # size-reduce the completion rows (first row is left untouched)
    for i in range(1, n):
        for _ in range(2):
            for j in range(i):
                rj = u[j]
                denom = sum(x * x for x in rj)
                num = sum(x * y for x, y in zip(u[i], rj))
                mu = round(Fraction(num, denom))
                if mu:
                    u[i] = [x - mu * y for x, y in zip(u[i], rj)]
    return u


def polar_basis(rows) -> list[list[Fraction]]:
    """Rows a*_j with <a_i, a*_j> = delta_ij: the inverse transpose of
    the (square, nonsingular) basis matrix."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("basis matrix must be square")
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            raise ValueError("basis matrix is singular")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv_rows = [row[n:] for row in aug]
    # polar basis rows are the columns of the inverse
    return [[inv_rows[i][j] for i in range(n)] for j in range(n)]
