"""Operator spaces Op(S,P), named algebras, tensor closures Ten(P,Δ),
densors, symbolic defining equations, generic points, torus transforms.

Both legs are exact nullspace computations: Op(S,P) for linear homogeneous
P is a stacked Sylvester-type system in the operator entries; Ten(P,Δ) is
the joint kernel of the maps s ↦ p(δ)·s, linear in s for any P.
"""

import numpy as np

from .errors import (
    ClosureCheckFailed,
    DimensionMismatch,
    FrameMismatch,
    NonLinearIdeal,
    UnsupportedParams,
    VarianceMismatch,
    ZeroTorusEntry,
)
from .fields import PrimeField
from .linalg import (
    _np_ok,
    identity_matrix,
    in_span,
    kernel_restrict,
    mat_mul,
    np_nullspace,
    np_rref,
    nullspace,
    reduce_against,
    rref,
    spans_equal,
)
from .operators import (
    TransverseOperator,
    active_axes,
    all_covariant,
    apply_polynomial,
    op_flat,
    op_from_flat,
)
from .polys import (
    MultiPoly,
    axis_difference_poly,
    centroid_polys,
    derivation_poly,
)
from .tensors import Frame, Tensor, TensorSpace


class OperatorSpace:
    """Finite basis of the solution space Op(S,P) for linear homogeneous P."""

    def __init__(self, frame, variance, basis, provenance=None):
        self.frame = frame
        self.variance = tuple(variance)
        self.basis = list(basis)
        self.provenance = provenance
        rows, pivots = rref([op_flat(b) for b in self.basis], frame.field)
        self._rows = rows
        self._pivots = pivots

    @property
    def dimension(self):
        return len(self._rows)

    def contains(self, omega):
        return in_span(op_flat(omega), self._rows, self._pivots, self.frame.field)

    def __repr__(self):
        return (
            f"OperatorSpace(dims={self.frame.dims}, "
            f"variance={self.variance}, dimension={self.dimension})"
        )


class ProductLaw:
    """Per-axis bullet product ω •_a τ = λ_a ω_a τ_a + ρ_a τ_a ω_a."""

    def __init__(self, pairs, variance=None):
        self.pairs = [tuple(pr) for pr in pairs]
        if variance is not None:
            for a, s in enumerate(variance):
                lam, rho = self.pairs[a]
                if s != 0 and lam == rho == 0:
                    raise UnsupportedParams(f"law is (0,0) on active axis {a}")

    @classmethod
    def lie(cls, field, naxes):
        one = field.one
        return cls([(one, field.neg(one))] * naxes)

    @classmethod
    def associative(cls, field, variance):
        """(1,0) on covariant axes, (0,1) on contravariant: the algebra
        product as seen through the stored plain-action matrices."""
        one, zero = field.one, field.zero
        pairs = []
        for s in variance:
            pairs.append((zero, one) if s == -1 else (one, zero))
        return cls(pairs, variance)


def bullet_product(omega, tau, law):
    """The law-product of two operators, axiswise on active axes."""
    if omega.frame != tau.frame or omega.variance != tau.variance:
        raise FrameMismatch("operators live in different spaces")
    f = omega.frame.field
    mats = []
    for a, s in enumerate(omega.variance):
        if s == 0:
            mats.append(None)
            continue
        lam, rho = law.pairs[a]
        d = omega.frame.dims[a]
        acc = [[f.zero] * d for _ in range(d)]
        if not f.is_zero(lam):
            ot = mat_mul(omega.mats[a], tau.mats[a], f)
            acc = [[f.add(x, f.mul(lam, y)) for x, y in zip(r1, r2)] for r1, r2 in zip(acc, ot)]
        if not f.is_zero(rho):
            to = mat_mul(tau.mats[a], omega.mats[a], f)
            acc = [[f.add(x, f.mul(rho, y)) for x, y in zip(r1, r2)] for r1, r2 in zip(acc, to)]
        mats.append(acc)
    return TransverseOperator(omega.frame, mats, omega.variance)


def _check_poly_axes(p, variance):
    for e in p.terms:
        for a, k in enumerate(e):
            if k and variance[a] == 0:
                raise VarianceMismatch(f"polynomial touches constant axis {a}")


def _op_unknown_layout(frame, variance):
    axes = active_axes(variance)
    offsets = {}
    pos = 0
    for a in axes:
        offsets[a] = pos
        pos += frame.dims[a] ** 2
    return axes, offsets, pos


def _sylvester_rows_np(t, lams, axes, offsets, nunk):
    """Constraint block for one (tensor, linear poly) pair, mod p."""
    frame = t.frame
    p = frame.field.p
    dims = frame.dims
    T = np.array([int(c) for c in t.coeffs], dtype=np.int64).reshape(dims)
    N = frame.size
    M = np.zeros((N, nunk), dtype=np.int64)
    for a in axes:
        lam = int(lams[a])
        if lam == 0:
            continue
        d = dims[a]
        base = offsets[a]
        for i in range(d):
            if a == 0:
                # unknown (k, m) with m = i: contributes lam * t[i, rest]
                # to output coordinate (k, rest)
                slab = lam * T[i].reshape(-1)
                for k in range(d):
                    out = np.zeros(dims, dtype=np.int64)
                    out[k] = slab.reshape(dims[1:])
                    M[:, base + k * d + i] += out.reshape(-1)
            else:
                slab = lam * np.take(T, i, axis=a)
                for j in range(d):
                    out = np.zeros(dims, dtype=np.int64)
                    idx = [slice(None)] * len(dims)
                    idx[a] = j
                    out[tuple(idx)] = slab
                    M[:, base + i * d + j] += out.reshape(-1)
    return M % p


def _sylvester_rows_generic(t, lams, axes, offsets, nunk):
    frame = t.frame
    f = frame.field
    dims = frame.dims
    rows = [[f.zero] * nunk for _ in range(frame.size)]
    for idx in frame.indices():
        c = t[idx]
        if f.is_zero(c):
            continue
        for a in axes:
            lam = lams[a]
            if f.is_zero(lam):
                continue
            d = dims[a]
            base = offsets[a]
            val = f.mul(lam, c)
            if a == 0:
                m = idx[0]
                for k in range(d):
                    out = (k,) + idx[1:]
                    col = base + k * d + m
                    r = rows[frame.flat(out)]
                    r[col] = f.add(r[col], val)
            else:
                i = idx[a]
                for j in range(d):
                    out = idx[:a] + (j,) + idx[a + 1 :]
                    col = base + i * d + j
                    r = rows[frame.flat(out)]
                    r[col] = f.add(r[col], val)
    return rows


def op_space_linear(S, P, variance=None):
    """Basis of {ω : apply_polynomial(ω, p, t) = 0 for all t ∈ S, p ∈ P},
    solved as one exact stacked linear system over the operator entries."""
    if not S:
        raise FrameMismatch("empty tensor set")
    frame = S[0].frame
    for t in S:
        if t.frame != frame:
            raise FrameMismatch("tensors live in different frames")
    if variance is None:
        variance = all_covariant(frame.valence)
    variance = tuple(variance)
    field = frame.field
    axes, offsets, nunk = _op_unknown_layout(frame, variance)
    lam_rows = []
    for p in P:
        if not p.is_linear_homogeneous():
            raise NonLinearIdeal("op_space_linear needs linear homogeneous P")
        _check_poly_axes(p, variance)
        lam_rows.append(p.linear_coeffs())
    if not P or all(t.is_zero() for t in S):
        vecs = identity_matrix(nunk, field)
    elif _np_ok(field, max(frame.dims)):
        blocks = [
            _sylvester_rows_np(t, lams, axes, offsets, nunk)
            for t in S
            for lams in lam_rows
        ]
        big = np.vstack(blocks) if blocks else np.zeros((0, nunk), dtype=np.int64)
        vecs = [[int(x) for x in row] for row in np_nullspace(big, field.p)]
    else:
        rows = []
        for t in S:
            for lams in lam_rows:
                rows.extend(_sylvester_rows_generic(t, lams, axes, offsets, nunk))
        vecs = nullspace(rows, nunk, field)
    basis = [op_from_flat(frame, variance, v) for v in vecs]
    return OperatorSpace(frame, variance, basis, provenance=(list(S), list(P)))


def named_algebra(S, kind, axes=None, verify=True):
    """Derivations, centroid, nucleus(a,b), or adjoints of a tensor set.

    Derivations are checked for Lie closure, centroid and nuclei for
    associative closure and unitality, raising ClosureCheckFailed on
    violation (these are theorems; a failure means corrupted input).
    """
    if not S:
        raise FrameMismatch("empty tensor set")
    frame = S[0].frame
    v = frame.valence
    if v < 1:
        raise DimensionMismatch("named algebras need valence >= 1")
    field = frame.field
    n = v + 1
    if kind == "derivations":
        P = [derivation_poly(v, field)]
        variance = all_covariant(v)
        space = op_space_linear(S, P, variance)
        law = ProductLaw.lie(field, n)
    elif kind == "centroid":
        P = centroid_polys(v, field)
        variance = all_covariant(v)
        space = op_space_linear(S, P, variance)
        law = ProductLaw.associative(field, variance)
    elif kind == "nucleus":
        a, b = axes
        if not (0 <= a < b <= v):
            raise DimensionMismatch("nucleus axes must satisfy 0 <= a < b <= v")
        P = [axis_difference_poly(a, b, n, field)]
        variance = tuple(-1 if c == a else (1 if c == b else 0) for c in range(n))
        space = op_space_linear(S, P, variance)
        law = ProductLaw.associative(field, variance)
    elif kind == "adjoint":
        if v < 2:
            raise DimensionMismatch("adjoints need valence >= 2")
        P = [axis_difference_poly(1, 2, n, field)]
        variance = tuple(-1 if c == 1 else (1 if c == 2 else 0) for c in range(n))
        space = op_space_linear(S, P, variance)
        law = None
    else:
        raise UnsupportedParams(f"unknown algebra kind: {kind}")
    if verify and law is not None:
        ok, pair = check_product_closure(space, law)
        if not ok:
            raise ClosureCheckFailed(f"{kind} basis is not closed under its product")
        if kind in ("centroid", "nucleus"):
            if not space.contains(TransverseOperator.identity(frame, variance)):
                raise ClosureCheckFailed(f"{kind} does not contain the identity")
    return space


def check_product_closure(space, law):
    """True iff every pairwise law-product of basis members stays in the
    span; otherwise (False, offending pair)."""
    for omega in space.basis:
        for tau in space.basis:
            prod = bullet_product(omega, tau, law)
            if not space.contains(prod):
                return False, (omega, tau)
    return True, None


def _np_mats(omega, a, k):
    return np.array(
        [[int(x) for x in row] for row in omega.power(a, k)], dtype=np.int64
    )


def _matmul_mod(A, B, p):
    """Exact A @ B mod p. Integer matmul in numpy bypasses BLAS; when every
    inner product fits a float64 mantissa we reduce, multiply as floats, and
    round back, which is an order of magnitude faster on large matrices."""
    if A.shape[1] * (p - 1) ** 2 < 2**53:
        prod = (A % p).astype(np.float64) @ (B % p).astype(np.float64)
        return np.rint(prod % p).astype(np.int64) % p
    return (A @ B) % p


def _np_apply_poly(delta, poly, B, frame):
    """poly(delta) applied to a stack of flat tensors (rows of B), mod p."""
    p = frame.field.p
    dims = frame.dims
    k = B.shape[0]
    out = np.zeros_like(B)
    for e, c in poly.terms.items():
        cur = B.reshape((k,) + dims)
        for a, ka in enumerate(e):
            if ka == 0:
                continue
            mat = _np_mats(delta, a, ka)
            if a == 0:
                cur = np.tensordot(cur, mat, axes=([1], [1])) % p
                cur = np.moveaxis(cur, -1, 1)
            else:
                cur = np.tensordot(cur, mat, axes=([a + 1], [0])) % p
                cur = np.moveaxis(cur, -1, a + 1)
        out = (out + int(c) * cur.reshape(k, -1)) % p
    return out


def _min_poly_matrix(mat, field):
    """Minimal polynomial coefficients c_0..c_m (monic) of a square matrix."""
    d = len(mat)
    cur = identity_matrix(d, field)
    vecs = []
    pivots = []
    basis = []
    while True:
        flatv = [x for row in cur for x in row]
        red = reduce_against(flatv, basis, pivots, field)
        if all(field.is_zero(x) for x in red):
            aug = [list(r) + [field.zero] * len(vecs) for r in vecs]
            for i in range(len(vecs)):
                aug[i][d * d + i] = field.one
            R, piv = rref(aug, field)
            tail = reduce_against(
                flatv + [field.zero] * len(vecs), R, piv, field
            )
            coeffs = [field.neg(tail[d * d + i]) for i in range(len(vecs))]
            return [field.neg(c) for c in coeffs] + [field.one]
        vecs.append(flatv)
        newb, newp = rref(vecs, field)
        basis, pivots = newb, newp
        cur = mat_mul(cur, mat, field)


def _linear_kernel_sylvester(delta, poly, frame):
    """Kernel of a linear trait constraint on a large frame over F_p.

    Folding all axes but the last into one index turns the constraint into
    a Sylvester equation M·X = X·C; columns of every solution lie in
    ker m_C(M) for the minimal polynomial m_C, which collapses the system
    to a small one before any full-size elimination.
    """
    field = frame.field
    p = field.p
    dims = frame.dims
    v = len(dims) - 1
    lams = poly.linear_coeffs()
    dc = dims[v]
    R = frame.size // dc
    # M = sum over row axes of lam_a * kron factor (axis 0 plain, else transpose)
    M = np.zeros((R, R), dtype=np.int64)
    for a in range(v):
        lam = int(lams[a])
        if lam == 0:
            continue
        fac = np.eye(1, dtype=np.int64)
        for b in range(v):
            if b == a:
                m = _np_mats(delta, a, 1)
                fac = np.kron(fac, m if a == 0 else m.T)
            else:
                fac = np.kron(fac, np.eye(dims[b], dtype=np.int64))
        M = (M + lam * fac) % p
    C = (-int(lams[v]) * _np_mats(delta, v, 1)) % p
    # minimal polynomial of C, then W = ker m_C(M)
    mc = _min_poly_matrix([[int(x) for x in row] for row in C], field)
    mc = [int(c) % p for c in mc]
    X = (mc[-1] * np.eye(R, dtype=np.int64)) % p
    for c in reversed(mc[:-1]):
        X = (_matmul_mod(X, M, p) + c * np.eye(R, dtype=np.int64)) % p
    W = np_nullspace(X, p)  # rows span the invariant subspace
    kdim = W.shape[0]
    if kdim == 0:
        return np.zeros((0, frame.size), dtype=np.int64)
    Wc = W.T % p  # R x k, full column rank
    MW = _matmul_mod(M, Wc, p)
    aug = np.hstack([Wc, MW])
    Rr, _ = np_rref(aug, p)
    Mp = Rr[:kdim, kdim:]  # k x k restriction of M to the subspace
    # small system M'Y = YC over vec(Y), Y is k x dc, row-major
    small = (
        np.kron(Mp, np.eye(dc, dtype=np.int64))
        - np.kron(np.eye(kdim, dtype=np.int64), C.T)
    ) % p
    Y = np_nullspace(small, p)
    sols = []
    for y in Y:
        Ym = y.reshape(kdim, dc)
        S = (Wc @ Ym) % p  # R x dc
        sols.append(S.reshape(-1))
    if not sols:
        return np.zeros((0, frame.size), dtype=np.int64)
    return np.array(sols, dtype=np.int64)


_FASTPATH_SIZE = 4096
_DENSE_KRON_LIMIT = 6000


def _first_kernel_np(delta, poly, frame):
    p = frame.field.p
    if (
        frame.size >= _FASTPATH_SIZE
        and frame.valence >= 1
        and poly.is_linear_homogeneous()
        and not frame.field.is_zero(poly.linear_coeffs()[-1])
    ):
        return _linear_kernel_sylvester(delta, poly, frame)
    if frame.size > _DENSE_KRON_LIMIT:
        # fall back to chunked application to the standard basis
        B = np.eye(frame.size, dtype=np.int64)
        C = _np_apply_poly(delta, poly, B, frame)
        return np_nullspace(C.T, p)
    # p(delta) as an explicit matrix on flat coordinates via Kronecker blocks
    N = frame.size
    C = np.zeros((N, N), dtype=np.int64)
    for e, c in poly.terms.items():
        fac = np.eye(1, dtype=np.int64)
        for a, ka in enumerate(e):
            m = _np_mats(delta, a, ka)
            fac = np.kron(fac, m if a == 0 else m.T) % p
        C = (C + int(c) * fac) % p
    return np_nullspace(C, p)


def _generic_combination(Delta, frame):
    """A deterministic pseudo-random span member of Δ over F_p.

    For a linear homogeneous trait q, ker q(Σ cᵢδᵢ) contains ∩ᵢ ker q(δᵢ),
    so the combination is a sound seed for the intersection loop and —
    unlike an individual basis operator, which may act by scalars and
    annihilate nothing — generically has a small kernel.
    """
    variance = Delta[0].variance
    if any(d.variance != variance for d in Delta[1:]):
        return None
    p = frame.field.p
    coeffs = [pow(3, i + 1, p) for i in range(len(Delta))]
    mats = []
    for a, d in enumerate(frame.dims):
        acc = np.zeros((d, d), dtype=np.int64)
        for c, delta in zip(coeffs, Delta):
            acc = (acc + c * _np_mats(delta, a, 1)) % p
        mats.append([[int(x) for x in row] for row in acc])
    return TransverseOperator(frame, mats, variance)


def ten_closure(P, Delta, frame):
    """Basis of Ten(P,Δ) = {s : apply_polynomial(δ, p, s) = 0 ∀δ,p}."""
    field = frame.field
    for delta in Delta:
        if delta.frame != frame:
            raise FrameMismatch("operator frame differs from the closure frame")
    constraints = [(d, p) for d in Delta for p in P if not p.is_zero()]
    # linear constraints first: they admit the Sylvester shortcut
    constraints.sort(key=lambda dp: 0 if dp[1].is_linear_homogeneous() else 1)
    use_np = _np_ok(field, max(frame.dims) if frame.dims else 1)
    if not constraints:
        basis = identity_matrix(frame.size, field)
        return TensorSpace(frame, [Tensor(frame, b) for b in basis])
    if use_np:
        first_d, first_p = constraints[0]
        rest = constraints[1:]
        if (
            len(constraints) > 1
            and frame.size >= _FASTPATH_SIZE
            and first_p.is_linear_homogeneous()
        ):
            combo = _generic_combination([d for d, _ in constraints], frame)
            if combo is not None:
                # seed with the combination's (small) kernel, then still
                # intersect against every original constraint
                first_d, rest = combo, constraints
        B = _first_kernel_np(first_d, first_p, frame)
        p = field.p
        for delta, poly in rest:
            if B.shape[0] == 0:
                break
            applied = _np_apply_poly(delta, poly, B, frame)
            coeffs = np_nullspace(applied.T, p)
            B = _matmul_mod(coeffs, B, p)
        tensors = [Tensor(frame, [int(x) for x in row]) for row in B]
        return TensorSpace(frame, tensors)
    basis = identity_matrix(frame.size, field)
    for delta, poly in constraints:
        if not basis:
            break
        cols = [
            apply_polynomial(delta, poly, Tensor(frame, b)).coeffs for b in basis
        ]
        basis = kernel_restrict(basis, cols, field)
    return TensorSpace(frame, [Tensor(frame, b) for b in basis])


def densor(S, der=None):
    """⟨⟨S⟩⟩ = Ten(d, Der(S)), the derivation closure of a tensor set."""
    if not S:
        raise FrameMismatch("empty tensor set")
    frame = S[0].frame
    if der is None:
        der = named_algebra(S, "derivations", verify=False)
    d = derivation_poly(frame.valence, frame.field)
    return ten_closure([d], der.basis, frame)


class SymbolicSystem:
    """Defining equations of Op(S,P) in the operator entry variables."""

    def __init__(self, frame, variance, labels, equations):
        self.frame = frame
        self.variance = tuple(variance)
        self.labels = list(labels)
        self.equations = list(equations)

    def verify_point(self, omega):
        if omega.frame != self.frame:
            raise FrameMismatch("operator frame differs")
        point = op_flat(omega)
        f = self.frame.field
        return all(f.is_zero(eq.evaluate(point)) for eq in self.equations)

    def __repr__(self):
        return f"SymbolicSystem(vars={len(self.labels)}, equations={len(self.equations)})"


_EQUATION_BUDGET = 200_000


def op_space_equations(S, P, variance=None):
    """Polynomial equations in Σ d_a² entry variables cutting out Op(S,P);
    works for P of any degree, with a budget guard on the symbolic size."""
    from .errors import BudgetExceeded

    if not S:
        raise FrameMismatch("empty tensor set")
    frame = S[0].frame
    field = frame.field
    if variance is None:
        variance = all_covariant(frame.valence)
    variance = tuple(variance)
    axes, offsets, nunk = _op_unknown_layout(frame, variance)
    labels = []
    for a in axes:
        d = frame.dims[a]
        labels.extend(f"w{a}_{i}_{j}" for i in range(d) for j in range(d))
    maxdeg = max((p.total_degree() for p in P), default=0)
    if frame.size * max(len(S) * len(P), 1) * max(maxdeg, 1) > _EQUATION_BUDGET:
        raise BudgetExceeded("symbolic system too large")
    equations = []
    for t in S:
        for p in P:
            _check_poly_axes(p, variance)
            acc = [MultiPoly.zero(field, nunk) for _ in range(frame.size)]
            for e, c in p.terms.items():
                cur = [
                    MultiPoly.constant(field, nunk, x) for x in t.coeffs
                ]
                for a, ka in enumerate(e):
                    for _ in range(ka):
                        cur = _symbolic_contract(cur, frame, a, offsets[a], nunk, field)
                for i in range(frame.size):
                    acc[i] = acc[i].add(cur[i].scale(c))
            equations.extend(q for q in acc if not q.is_zero())
    return SymbolicSystem(frame, variance, labels, equations)


def _symbolic_contract(cur, frame, a, offset, nunk, field):
    """One symbolic contraction of a polynomial-entried tensor with the
    variable matrix of axis a."""
    dims = frame.dims
    d = dims[a]
    pre = 1
    for b in range(a):
        pre *= dims[b]
    post = 1
    for b in range(a + 1, len(dims)):
        post *= dims[b]

    def var(i, j):
        e = [0] * nunk
        e[offset + i * d + j] = 1
        return tuple(e)

    out = [MultiPoly.zero(field, nunk)] * (pre * d * post)
    for pi in range(pre):
        for j in range(d):
            for po in range(post):
                acc = MultiPoly.zero(field, nunk)
                for i in range(d):
                    src = cur[pi * d * post + i * post + po]
                    if src.is_zero():
                        continue
                    # axis 0 is output convention: weight w[j][i]; inputs w[i][j]
                    v = var(j, i) if a == 0 else var(i, j)
                    acc = acc.add(src.mul_term(v, field.one))
                out[pi * d * post + j * post + po] = acc
    return out


def generic_points(space, count=None, seed=0):
    """Seeded random span members of an operator space; each re-verifies
    against the provenance constraints by construction of the span."""
    import random

    frame = space.frame
    field = frame.field
    if count is None:
        count = 2 + frame.valence
    rng = random.Random(seed)
    nunk = _op_unknown_layout(frame, space.variance)[2]
    points = []
    for _ in range(count):
        vec = [field.zero] * nunk
        for b in space.basis:
            c = field.random(rng)
            fb = op_flat(b)
            vec = [field.add(x, field.mul(c, y)) for x, y in zip(vec, fb)]
        points.append(op_from_flat(frame, space.variance, vec))
    return points


def torus_transform(P, tau):
    """p^τ(x) = p(τ⁻¹x): scale each term by ∏ τ_a^{-e_a}."""
    out = []
    for p in P:
        field = p.field
        for x in tau:
            if field.is_zero(x):
                raise ZeroTorusEntry("torus entries must be invertible")
        terms = {}
        for e, c in p.terms.items():
            scale = field.one
            for a, k in enumerate(e):
                if k:
                    scale = field.mul(scale, field.pow(field.inv(tau[a]), k))
            terms[e] = field.mul(c, scale)
        out.append(MultiPoly(field, p.nvars, terms))
    return out


def torus_scale_space(space, tau):
    """τ·Δ: scale the axis-a matrix of every basis member by τ_a."""
    frame = space.frame
    field = frame.field
    scaled = []
    for b in space.basis:
        mats = []
        for a, s in enumerate(b.variance):
            if s == 0:
                mats.append(None)
            else:
                mats.append([[field.mul(tau[a], x) for x in row] for row in b.mats[a]])
        scaled.append(TransverseOperator(frame, mats, b.variance))
    return OperatorSpace(frame, space.variance, scaled, provenance=space.provenance)


def torus_relation_holds(S, P, tau, variance=None):
    """Op(S, P^τ) = τ·Op(S, P) as spans."""
    base = op_space_linear(S, P, variance)
    transformed = op_space_linear(S, torus_transform(P, tau), variance)
    scaled = torus_scale_space(base, tau)
    field = base.frame.field
    return spans_equal(
        [op_flat(b) for b in transformed.basis],
        [op_flat(b) for b in scaled.basis],
        field,
    )


def conjugate_operator(omega, delta):
    """Axiswise conjugate ω⁻¹δω of a transverse operator by an invertible
    transverse operator sharing its frame.

    The output axis acts from the left, so its component conjugates as
    ω₀δ₀ω₀⁻¹; input axes act from the right and conjugate as ω_a⁻¹δ_aω_a.
    """
    from .errors import SingularMatrix
    from .linalg import mat_inv

    frame = omega.frame
    field = frame.field
    mats = []
    for a, s in enumerate(delta.variance):
        if s == 0:
            mats.append(None)
            continue
        inv = mat_inv(omega.mats[a], field)
        if inv is None:
            raise SingularMatrix(f"axis {a} component is not invertible")
        left, right = (omega.mats[a], inv) if a == 0 else (inv, omega.mats[a])
        mats.append(mat_mul(mat_mul(left, delta.mats[a], field), right, field))
    return TransverseOperator(frame, mats, delta.variance)


def conjugation_relation_holds(S, P, omega, variance=None):
    """Op(ωS, P) = ω⁻¹·Op(S, P)·ω as spans, for linear homogeneous P and
    axiswise-invertible ω.  ωS transforms every axis of each tensor once."""
    from .operators import apply_monomial

    frame = S[0].frame
    field = frame.field
    ones = tuple(1 for _ in frame.dims)
    base = op_space_linear(S, P, variance)
    moved = [apply_monomial(omega, ones, t) for t in S]
    transformed = op_space_linear(moved, P, variance)
    conj = [conjugate_operator(omega, b) for b in base.basis]
    return spans_equal(
        [op_flat(b) for b in transformed.basis],
        [op_flat(b) for b in conj],
        field,
    )
