"""Integer lattices in Hermite normal form and partial characters of
binomial ideals.
"""

from math import gcd

from .errors import InconsistentCharacter, NotBinomial
from .polys import GREVLEX


def hnf(rows):
    """Row-style Hermite normal form over the integers.

    Returns (H, U) with U unimodular, U @ rows = [H; 0], H the nonzero
    rows with positive pivots increasing left to right.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = len(A[0]) if A else 0
    U = [[1 if i == j else 0 for j in range(m)] for i in range(m)]

    def combine(i, j, q):
        A[i] = [a - q * b for a, b in zip(A[i], A[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    r = 0
    for col in range(n):
        while True:
            nz = [i for i in range(r, m) if A[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(A[i][col]))
            A[r], A[piv] = A[piv], A[r]
            U[r], U[piv] = U[piv], U[r]
            others = [i for i in range(r + 1, m) if A[i][col] != 0]
            if not others:
                break
            for i in others:
                combine(i, r, A[i][col] // A[r][col])
        if r < m and A[r][col] != 0:
            if A[r][col] < 0:
                A[r] = [-a for a in A[r]]
                U[r] = [-a for a in U[r]]
            for i in range(r):
                if A[i][col] != 0:
                    combine(i, r, A[i][col] // A[r][col])
            r += 1
        if r == m:
            break
    return A[:r], U


def lattice_contains(H, vec):
    """Membership of an integer vector in the lattice spanned by HNF rows."""
    v = list(map(int, vec))
    n = len(v)
    for row in H:
        col = next(i for i, x in enumerate(row) if x != 0)
        if v[col] != 0:
            if v[col] % row[col] != 0:
                return False
            q = v[col] // row[col]
            v = [a - q * b for a, b in zip(v, row)]
    return all(x == 0 for x in v)


def lattices_equal(H1, H2):
    return [list(r) for r in H1] == [list(r) for r in H2]


class PartialCharacter:
    """A homomorphism from a sublattice of Z^{v+1} to the unit group,
    given by values on an HNF basis."""

    def __init__(self, basis, values, field):
        self.basis = [list(map(int, b)) for b in basis]
        self.values = list(values)
        self.field = field

    @property
    def rank(self):
        return len(self.basis)

    def is_trivial(self):
        return all(v == self.field.one for v in self.values)

    def axis_projection(self, a):
        """Generator k >= 0 of the projection of the lattice to axis a."""
        g = 0
        for row in self.basis:
            g = gcd(g, row[a])
        return g


def binomial_character(gens, order=GREVLEX):
    """The partial character of a binomial ideal's generators.

    Each generator alpha*X^e - beta*X^f contributes lattice vector e - f
    with value beta/alpha (leading term taken as alpha*X^e).
    """
    vectors = []
    ratios = []
    field = None
    for g in gens:
        field = g.field
        if len(g.terms) != 2:
            raise NotBinomial(f"{g} is not a binomial")
        (e, alpha) = g.lead(order)
        (f_exp, beta_neg) = next((m, c) for m, c in g.terms.items() if m != e)
        beta = field.neg(beta_neg)
        vectors.append([a - b for a, b in zip(e, f_exp)])
        ratios.append(field.div(beta, alpha))
    if not vectors:
        return PartialCharacter([], [], field)
    H, U = hnf(vectors)
    rank = len(H)
    # consistency: integer relations among the vectors must map to 1
    for i in range(rank, len(vectors)):
        rel = U[i]
        val = field.one
        for c, r in zip(rel, ratios):
            val = field.mul(val, field.pow(r, c))
        if val != field.one:
            raise InconsistentCharacter(
                "character values conflict on a lattice relation"
            )
    values = []
    for i in range(rank):
        val = field.one
        for c, r in zip(U[i], ratios):
            val = field.mul(val, field.pow(r, c))
        values.append(val)
    # the value map must also be single-valued on the lattice itself:
    # vectors re-expressed over H must reproduce their ratios
    for vec, ratio in zip(vectors, ratios):
        coeffs = _coords_in_hnf(H, vec)
        val = field.one
        for c, v in zip(coeffs, values):
            val = field.mul(val, field.pow(v, c))
        if val != ratio:
            raise InconsistentCharacter("character not well defined on the lattice")
    return PartialCharacter(H, values, field)


def _coords_in_hnf(H, vec):
    v = list(map(int, vec))
    coeffs = []
    for row in H:
        col = next(i for i, x in enumerate(row) if x != 0)
        q = v[col] // row[col]
        coeffs.append(q)
        v = [a - q * b for a, b in zip(v, row)]
    return coeffs
