"""Annihilator ideals Id(t, ω) and Id(S, Δ) via the cokernel pipeline:
rows of monomial actions over the exponent box, left nullspace, Buchberger.
"""

import warnings

from .errors import FrameMismatch
from .groebner import Ideal, box_exponents, intersect
from .linalg import left_nullspace, reduce_against, rref
from .operators import apply_monomial
from .polys import GREVLEX, MultiPoly


def _box_rows(t, omega, bounds):
    """apply_monomial over the exponent box, reusing partial applications.

    Exponents are enumerated so that each tensor is one contraction away
    from an already-computed predecessor.
    """
    exps = box_exponents(bounds)
    cache = {(0,) * len(bounds): t}
    rows = []
    for e in exps:
        if e not in cache:
            a = max(i for i, k in enumerate(e) if k > 0)
            prev = list(e)
            prev[a] -= 1
            base = cache[tuple(prev)]
            unit = [0] * len(bounds)
            unit[a] = 1
            cache[e] = apply_monomial(omega, unit, base)
        rows.append(cache[e].coeffs)
    return exps, rows


def ann_operator(t, omega, bounds=None, order=GREVLEX):
    """The annihilator ideal of (t, ω), complete by Cayley-Hamilton within
    the per-axis exponent box {0..d_a}."""
    if t.frame != omega.frame:
        raise FrameMismatch("tensor and operator frames differ")
    dims = t.frame.dims
    nvars = len(dims)
    field = t.frame.field
    if bounds is None:
        bounds = list(dims)
    else:
        bounds = list(bounds)
        for a, (b, d) in enumerate(zip(bounds, dims)):
            if b > d:
                warnings.warn(
                    f"axis {a} bound {b} capped to {d}: larger is redundant"
                )
                bounds[a] = d
    for a, s in enumerate(omega.variance):
        if s == 0:
            bounds[a] = 0
    exps, rows = _box_rows(t, omega, bounds)
    coker = left_nullspace(rows, t.frame.size, field)
    gens = [
        MultiPoly(field, nvars, {e: c for e, c in zip(exps, vec)}) for vec in coker
    ]
    return Ideal.zero(field, nvars, order) if not gens else Ideal(gens, order)


def ann_set(tensors, operators, bounds=None, order=GREVLEX):
    """Id(S, Δ) as the intersection of the pairwise annihilators."""
    result = None
    for t in tensors:
        for omega in operators:
            ideal = ann_operator(t, omega, bounds, order)
            result = ideal if result is None else intersect(result, ideal)
            if result.is_zero_ideal():
                return result
    if result is None:
        raise FrameMismatch("empty tensor or operator set")
    return result


def joint_annihilator(tensors, operators, bounds=None, order=GREVLEX):
    """The ideal generated by the degree-bounded traits common to every
    (t, ω) pair: one cokernel over the exponent box with the action rows
    of all pairs stacked.

    Unlike ``ann_set`` this never picks up incidental high-degree members
    of the pairwise intersection (such as products of per-operator minimal
    polynomials), so for a sampled operator family it converges onto the
    ideal of traits shared by the whole family.
    """
    if not tensors or not operators:
        raise FrameMismatch("empty tensor or operator set")
    frame = tensors[0].frame
    field = frame.field
    nvars = len(frame.dims)
    if bounds is None:
        bounds = list(frame.dims)
    else:
        bounds = [min(b, d) for b, d in zip(bounds, frame.dims)]
    exps = None
    stacked = None
    for t in tensors:
        for omega in operators:
            if t.frame != omega.frame:
                raise FrameMismatch("tensor and operator frames differ")
            es, rows = _box_rows(t, omega, bounds)
            if exps is None:
                exps = es
                stacked = [list(r) for r in rows]
            else:
                for acc, r in zip(stacked, rows):
                    acc.extend(r)
    coker = left_nullspace(stacked, len(stacked[0]), field)
    gens = [
        MultiPoly(field, nvars, {e: c for e, c in zip(exps, vec)}) for vec in coker
    ]
    return Ideal.zero(field, nvars, order) if not gens else Ideal(gens, order)


def min_poly_axis(t, omega, a, order=GREVLEX):
    """Monic generator of Id(t,ω) ∩ K[x_a]: the least-degree relation among
    the successive axis-a power actions."""
    if t.frame != omega.frame:
        raise FrameMismatch("tensor and operator frames differ")
    field = t.frame.field
    nvars = len(t.frame.dims)
    d = t.frame.dims[a]
    unit = [0] * nvars
    unit[a] = 1
    powers = [t]
    for _ in range(d):
        powers.append(apply_monomial(omega, unit, powers[-1]))
    rows = []
    pivots = []
    basis = []
    for k, pk in enumerate(powers):
        red = reduce_against(pk.coeffs, basis, pivots, field)
        if all(field.is_zero(x) for x in red):
            # solve x_a^k = sum c_i x_a^i over the recorded powers
            coeffs = _solve_combo(rows, pk.coeffs, field)
            terms = {}
            e = [0] * nvars
            e[a] = k
            terms[tuple(e)] = field.one
            for i, c in enumerate(coeffs):
                if field.is_zero(c):
                    continue
                e = [0] * nvars
                e[a] = i
                terms[tuple(e)] = field.neg(c)
            return MultiPoly(field, nvars, terms)
        rows.append(pk.coeffs)
        newb, newp = rref(rows, field)
        basis, pivots = newb, newp
    raise AssertionError("Cayley-Hamilton guarantees a relation within the box")


def _solve_combo(rows, target, field):
    """Coefficients expressing target as a combination of the given rows."""
    if not rows:
        return []
    n = len(target)
    aug = [list(r) + [field.zero] * len(rows) for r in rows]
    for i in range(len(rows)):
        aug[i][n + i] = field.one
    R, pivots = rref(aug, field)
    vec = list(target) + [field.zero] * len(rows)
    red = reduce_against(vec, R, pivots, field)
    return [field.neg(red[n + i]) for i in range(len(rows))]
