"""Exact dense linear algebra: RREF, nullspaces, span arithmetic.

Matrices are lists of rows of field scalars.  Over prime fields the
elimination runs on numpy int64 arrays (all products of two residues fit a
machine word for the primes we admit); over the rationals it runs on
Fractions with shortest-entry pivoting to limit coefficient growth.
"""

import numpy as np

from .errors import DimensionMismatch
from .fields import PrimeField


def _np_ok(field, inner=1):
    # products a*b with a,b < p and sums of `inner` of them must fit int64
    return isinstance(field, PrimeField) and (field.p - 1) ** 2 * max(inner, 1) < (1 << 62)


def np_rref(A, p):
    """RREF of an int64 numpy array mod p.  Returns (R, pivot_cols)."""
    A = np.array(A, dtype=np.int64) % p
    m, n = A.shape
    pivots = []
    r = 0
    for col in range(n):
        if r >= m:
            break
        nz = np.nonzero(A[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, col]), p - 2, p)) % p
        rows = np.nonzero(A[:, col])[0]
        rows = rows[rows != r]
        if rows.size:
            A[rows] = (A[rows] - np.outer(A[rows, col], A[r])) % p
        pivots.append(col)
        r += 1
    return A[:r], pivots


def np_nullspace(A, p):
    """Right-kernel basis of an int64 numpy matrix mod p, as numpy rows.

    Same canonical form as nullspace(): one vector per free column.
    """
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    R, pivots = np_rref(A, p)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for row, fc in enumerate(free):
        basis[row, fc] = 1
        if pivots:
            basis[row, pivots] = (-R[: len(pivots), fc]) % p
    return basis


def _frac_size(x):
    return x.numerator.bit_length() + x.denominator.bit_length()


def _rref_generic(rows, field):
    rows = [list(r) for r in rows]
    rows = [r for r in rows if any(not field.is_zero(x) for x in r)]
    if not rows:
        return [], []
    n = len(rows[0])
    pivots = []
    r = 0
    for col in range(n):
        if r >= len(rows):
            break
        cands = [i for i in range(r, len(rows)) if not field.is_zero(rows[i][col])]
        if not cands:
            continue
        if field.characteristic == 0:
            piv = min(cands, key=lambda i: _frac_size(rows[i][col]))
        else:
            piv = cands[0]
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][col])
        rows[r] = [field.mul(inv, x) for x in rows[r]]
        lead = rows[r]
        for i in range(len(rows)):
            if i == r:
                continue
            c = rows[i][col]
            if field.is_zero(c):
                continue
            rows[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(rows[i], lead)]
        pivots.append(col)
        r += 1
    rows = [row for row in rows if any(not field.is_zero(x) for x in row)]
    return rows, pivots


def rref(rows, field):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    rows = list(rows)
    if not rows:
        return [], []
    if _np_ok(field):
        R, pivots = np_rref([[int(x) for x in r] for r in rows], field.p)
        return [[int(x) for x in r] for r in R], pivots
    return _rref_generic(rows, field)


def rank(rows, field):
    return len(rref(rows, field)[0])


def nullspace(rows, ncols, field):
    """Canonical basis of the right kernel {x : Mx = 0}.

    Derived from the RREF: one vector per free column, set to 1 there and
    solved on the pivot columns, in free-column order.
    """
    R, pivots = rref(rows, field)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        vec = [field.zero] * ncols
        vec[free] = field.one
        for i, pcol in enumerate(pivots):
            vec[pcol] = field.neg(R[i][free])
        basis.append(vec)
    return basis


def transpose(rows, ncols, field):
    if not rows:
        return [[] for _ in range(ncols)] if ncols else []
    return [[row[j] for row in rows] for j in range(ncols)]


def left_nullspace(rows, ncols, field):
    """Basis of {y : yM = 0}; the cokernel of M as row vectors."""
    nrows = len(rows)
    if nrows == 0:
        return []
    cols = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    return nullspace(cols, nrows, field)


def row_basis(rows, field):
    """Canonical (RREF) basis of the row span."""
    return rref(rows, field)[0]


def reduce_against(vec, basis, pivots, field):
    """Reduce vec modulo an RREF basis; zero iff vec is in the span."""
    vec = list(vec)
    for row, pcol in zip(basis, pivots):
        c = vec[pcol]
        if field.is_zero(c):
            continue
        vec = [field.sub(x, field.mul(c, y)) for x, y in zip(vec, row)]
    return vec


def in_span(vec, basis, pivots, field):
    red = reduce_against(vec, basis, pivots, field)
    return all(field.is_zero(x) for x in red)


def coords_in_basis(vec, basis, pivots, field):
    """Coordinates of vec in an RREF basis, or None if not in the span."""
    coords = [vec[p] for p in pivots]
    red = reduce_against(vec, basis, pivots, field)
    if any(not field.is_zero(x) for x in red):
        return None
    return coords


def spans_equal(rows1, rows2, field):
    b1, p1 = rref(rows1, field)
    b2, p2 = rref(rows2, field)
    return b1 == b2 and p1 == p2


def identity_matrix(n, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def mat_mul(A, B, field):
    if A and B and len(A[0]) != len(B):
        raise DimensionMismatch("matrix product shape mismatch")
    n = len(B[0]) if B else 0
    return [
        [field.sum(field.mul(a, B[k][j]) for k, a in enumerate(row)) for j in range(n)]
        for row in A
    ]


def mat_vec(A, v, field):
    return [field.sum(field.mul(a, x) for a, x in zip(row, v)) for row in A]


def mat_inv(A, field):
    """Inverse of a square matrix, or None if singular."""
    n = len(A)
    aug = [list(A[i]) + identity_matrix(n, field)[i] for i in range(n)]
    R, pivots = rref(aug, field)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R]


def mat_transpose(A):
    if not A:
        return []
    return [list(col) for col in zip(*A)]


def kernel_restrict(basis, constraint_cols, field):
    """Restrict a solution-space basis by new constraints.

    basis: list of flat vectors spanning the current space.
    constraint_cols: for each basis vector, the image under the constraint
    map (stacked as columns of M).  Returns the sub-basis spanning the
    kernel of the constraint map restricted to the span.
    """
    if not basis:
        return []
    m = len(constraint_cols[0])
    rows = [[constraint_cols[j][i] for j in range(len(basis))] for i in range(m)]
    K = nullspace(rows, len(basis), field)
    out = []
    for coeffs in K:
        vec = [field.zero] * len(basis[0])
        for c, b in zip(coeffs, basis):
            if field.is_zero(c):
                continue
            vec = [field.add(x, field.mul(c, y)) for x, y in zip(vec, b)]
        out.append(vec)
    return out
