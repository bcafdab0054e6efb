"""Homotopism categories: variance-typed morphism verification and
composition, shuffle functors, and the composability verdict for ideals.

A homotopism s → t carries one rectangular matrix per non-constant axis.
On covariant axes the matrix maps the s-side space into the t-side space;
on contravariant axes the direction reverses.  The defining identity
equates the two transported coefficient arrays exactly.
"""

from itertools import product

from .characters import binomial_character, hnf, lattice_contains, lattices_equal
from .errors import (
    CertificationFailed,
    InconsistentCharacter,
    NotComposable,
    ShapeMismatch,
    VarianceMismatch,
)
from .groebner import Ideal, saturate
from .linalg import mat_mul
from .polys import GREVLEX
from .tensors import contract_axis


class TensorCategory:
    """A valence and a variance signature over the axes {0..v}."""

    def __init__(self, valence, variance=None):
        if variance is None:
            variance = (1,) * (valence + 1)
        variance = tuple(int(s) for s in variance)
        if len(variance) != valence + 1 or any(s not in (-1, 0, 1) for s in variance):
            raise VarianceMismatch("variance must map each axis to -1, 0, or +1")
        self.valence = valence
        self.variance = variance

    def __eq__(self, other):
        return (
            isinstance(other, TensorCategory)
            and self.valence == other.valence
            and self.variance == other.variance
        )

    def __repr__(self):
        return f"TensorCategory(valence={self.valence}, variance={self.variance})"


def shuffle_category(cat, pi):
    """Relabel the axes along π, flipping variance through axis 0."""
    n = cat.valence + 1
    if sorted(pi) != list(range(n)):
        raise ShapeMismatch("not a permutation of the axes")
    sigma = cat.variance
    new = []
    for a in range(n):
        s = sigma[pi[a]]
        if (a == 0) != (pi[a] == 0):
            s = -s
        new.append(s)
    return TensorCategory(cat.valence, tuple(new))


def _check_map_shapes(s, t, maps, cat):
    sd, td = s.frame.dims, t.frame.dims
    n = len(sd)
    if len(td) != n or cat.valence + 1 != n:
        raise ShapeMismatch("valence mismatch between tensors and category")
    if len(maps) != n:
        raise ShapeMismatch("one map per axis required")
    for a, sig in enumerate(cat.variance):
        m = maps[a]
        if sig == 0:
            if sd[a] != td[a]:
                raise ShapeMismatch(f"constant axis {a} needs equal dimensions")
            continue
        if m is None:
            raise ShapeMismatch(f"missing map on non-constant axis {a}")
        rows, cols = len(m), len(m[0]) if m else 0
        want = (td[a], sd[a]) if sig == 1 else (sd[a], td[a])
        if (rows, cols) != want:
            raise ShapeMismatch(
                f"axis {a} map must be {want[0]}x{want[1]}, got {rows}x{cols}"
            )


def verify_homotopism(s, t, maps, cat):
    """Exact check of the defining identity on the coefficient arrays."""
    if s.frame.field != t.frame.field:
        raise ShapeMismatch("tensors live over different fields")
    _check_map_shapes(s, t, maps, cat)
    lhs, rhs = s, t
    for a, sig in enumerate(cat.variance):
        if sig == 0:
            continue
        m = maps[a]
        if a == 0:
            if sig == 1:
                lhs = contract_axis(lhs, 0, m, left=True)
            else:
                rhs = contract_axis(rhs, 0, m, left=True)
        else:
            if sig == 1:
                rhs = contract_axis(rhs, a, m, left=False)
            else:
                lhs = contract_axis(lhs, a, m, left=False)
    return lhs.frame == rhs.frame and lhs.coeffs == rhs.coeffs


class Homotopism:
    """A certified morphism s → t in a tensor category."""

    def __init__(self, src, dst, maps, cat):
        if not verify_homotopism(src, dst, maps, cat):
            raise CertificationFailed("maps do not satisfy the homotopism identity")
        self.src = src
        self.dst = dst
        self.maps = [None if m is None else [list(r) for r in m] for m in maps]
        self.cat = cat

    @classmethod
    def identity(cls, t, cat):
        from .linalg import identity_matrix

        maps = [
            None if s == 0 else identity_matrix(d, t.frame.field)
            for s, d in zip(cat.variance, t.frame.dims)
        ]
        return cls(t, t, maps, cat)

    def __repr__(self):
        return f"Homotopism({self.src!r} -> {self.dst!r})"


def compose_homotopisms(f, g):
    """f ∘ g for g: r → s and f: s → t; covariant axes multiply in order,
    contravariant in reverse.  The result is re-certified."""
    if f.cat != g.cat:
        raise NotComposable("morphisms live in different categories")
    if g.dst.frame != f.src.frame or g.dst.coeffs != f.src.coeffs:
        raise NotComposable("codomain of g is not the domain of f")
    field = f.src.frame.field
    maps = []
    for a, sig in enumerate(f.cat.variance):
        if sig == 0:
            maps.append(None)
        elif sig == 1:
            maps.append(mat_mul(f.maps[a], g.maps[a], field))
        else:
            maps.append(mat_mul(g.maps[a], f.maps[a], field))
    return Homotopism(g.src, f.dst, maps, f.cat)


class ComposabilityVerdict:
    def __init__(self, outcome, reason=None, A=None, B=None, witnesses=None):
        self.outcome = outcome
        self.reason = reason
        self.A = sorted(A) if A is not None else None
        self.B = sorted(B) if B is not None else None
        self.witnesses = witnesses

    def __repr__(self):
        if self.outcome == "composable":
            return f"ComposabilityVerdict(composable, A={self.A}, B={self.B})"
        if self.outcome == "not_composable":
            return f"ComposabilityVerdict(not_composable: {self.reason})"
        return "ComposabilityVerdict(unknown)"


def _hypercube_members(H, n):
    out = []
    for m in product((-1, 0, 1), repeat=n):
        if any(m) and lattice_contains(H, list(m)):
            out.append(m)
    return out


def composability_verdict(P, order=GREVLEX):
    """Decide (A,B)-composability of the ideal generated by P.

    Necessary conditions: the variable-saturation must be binomial with
    trivial character and lattice axis projections 0 or all of Z.  The
    sufficient branch searches sign vectors for a lattice generating set
    inside the hypercube with disjoint positive/negative supports; when
    neither side fires the verdict is unknown.
    """
    if not P:
        return ComposabilityVerdict("composable", A=[], B=[], witnesses=[])
    nvars = P[0].nvars
    ideal = Ideal(P, order)
    if ideal.is_zero_ideal():
        return ComposabilityVerdict("composable", A=[], B=[], witnesses=[])
    sat = saturate(ideal)
    if sat.is_unit():
        return ComposabilityVerdict(
            "not_composable", reason="saturation contains a monomial"
        )
    for g in sat.gb:
        if len(g.terms) != 2:
            return ComposabilityVerdict(
                "not_composable", reason="saturation is not generated by binomials"
            )
    try:
        char = binomial_character(sat.gb, order)
    except InconsistentCharacter:
        return ComposabilityVerdict(
            "not_composable", reason="binomial character is inconsistent"
        )
    if not char.is_trivial():
        return ComposabilityVerdict(
            "not_composable", reason="binomial character is nontrivial"
        )
    H = char.basis
    for a in range(nvars):
        k = char.axis_projection(a)
        if k >= 2:
            return ComposabilityVerdict(
                "not_composable", reason=f"axis {a} projection is {k}Z"
            )
    members = _hypercube_members(H, nvars)
    for tau in product((1, -1), repeat=nvars):
        W = [m for m in members if all(t * x in (0, 1) for t, x in zip(tau, m))]
        if not W:
            continue
        HW, _ = hnf([list(m) for m in W])
        if lattices_equal(HW, H):
            witnesses = []
            A, B = set(), set()
            for m in W:
                e = tuple(1 if x == 1 else 0 for x in m)
                f = tuple(1 if x == -1 else 0 for x in m)
                witnesses.append((e, f))
                A.update(a for a, x in enumerate(e) if x)
                B.update(a for a, x in enumerate(f) if x)
            return ComposabilityVerdict(
                "composable", A=sorted(A), B=sorted(B), witnesses=witnesses
            )
    return ComposabilityVerdict("unknown")
