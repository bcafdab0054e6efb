"""Simplicial complexes on the axis set {0..v} and the Stanley-Reisner
bridge to squarefree monomial ideals.
"""

from itertools import chain, combinations

from .errors import NotDownwardClosed, NotMonomial
from .groebner import Ideal, is_monomial_ideal, monomial_generators, _minimalize_monomials
from .polys import GREVLEX, MultiPoly


def _subsets(ground):
    return chain.from_iterable(combinations(ground, k) for k in range(len(ground) + 1))


class SimplicialComplex:
    def __init__(self, ground_size, faces, check=True):
        self.ground_size = int(ground_size)
        self.faces = frozenset(frozenset(f) for f in faces)
        if check and self.faces:
            for f in self.faces:
                for x in f:
                    if not (0 <= x < self.ground_size):
                        raise NotDownwardClosed("face outside the ground set")
                if not f:
                    continue
                for g in combinations(f, len(f) - 1):
                    if frozenset(g) not in self.faces:
                        raise NotDownwardClosed(f"missing subset of {set(f)}")

    @classmethod
    def from_facets(cls, ground_size, facets):
        faces = set()
        for f in facets:
            for sub in _subsets(tuple(f)):
                faces.add(frozenset(sub))
        if facets:
            faces.add(frozenset())
        return cls(ground_size, faces, check=False)

    def is_face(self, subset):
        return frozenset(subset) in self.faces

    def facets(self):
        out = []
        for f in self.faces:
            if not any(f < g for g in self.faces):
                out.append(tuple(sorted(f)))
        return sorted(out, key=lambda f: (len(f), f))

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.ground_size == other.ground_size
            and self.faces == other.faces
        )

    def __repr__(self):
        return f"SimplicialComplex({self.ground_size}, facets={self.facets()})"


def stanley_reisner(cx, field, order=GREVLEX):
    """The squarefree monomial ideal generated by the minimal non-faces."""
    n = cx.ground_size
    gens = []
    for subset in _subsets(range(n)):
        s = frozenset(subset)
        if not s or s in cx.faces:
            continue
        # minimal non-face: every proper facet-subset is a face (the empty
        # set counts as a face even for the empty complex)
        if all(
            not sub or frozenset(sub) in cx.faces
            for sub in combinations(subset, len(subset) - 1)
        ):
            e = tuple(1 if a in s else 0 for a in range(n))
            gens.append(MultiPoly.monomial(field, n, e))
    if not gens:
        return Ideal.zero(field, n, order)
    gens.sort(key=lambda g: order.key(next(iter(g.terms))))
    return Ideal.from_gb(field, n, gens, order)


def complex_of(I):
    """The simplicial complex whose Stanley-Reisner ideal has the same
    radical as the given monomial ideal: faces are the squarefree monomials
    outside the ideal's radical."""
    if not is_monomial_ideal(I):
        raise NotMonomial("complex_of needs a monomial ideal")
    n = I.nvars
    supports = [frozenset(a for a in range(n) if e[a]) for e in monomial_generators(I)]
    faces = set()
    for subset in _subsets(range(n)):
        s = frozenset(subset)
        if not any(sup <= s for sup in supports):
            faces.add(s)
    return SimplicialComplex(n, faces, check=False)
