"""Homogeneous ideals: Groebner bases, membership, quotient, intersection,
saturation, and extraction of the top-dimensional part.

Quotients and intersections run as value-tracked syzygy passes on seeded
modules instead of elimination: the seeds are Groebner bases whose internal
pairs provably emit nothing, so only cross pairs are reduced.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional, Sequence

from .engine import ModuleGB, Vec, minimal_generating_subset, vec_degree
from .poly import Polynomial, PolyRing
from .ring import Rng

__all__ = [
    "ConstructionError",
    "Ideal",
    "groebner_basis",
    "normal_form",
    "ideal_quotient",
    "ideal_intersection",
    "ideal_product",
    "ideal_sum",
    "saturation",
    "affine_dimension",
    "top_dimensional_part",
]


class ConstructionError(RuntimeError):
    """A randomized construction failed to reach the expected state."""


def poly_to_vec(f: Polynomial, comp: int = 0) -> Vec:
    return {(comp, m.exps): c for m, c in f.terms}


def vec_to_poly(ring: PolyRing, vec: Vec) -> Polynomial:
    return ring.from_dict({exps: c for (_, exps), c in vec.items()})


class Ideal:
    """Homogeneous ideal given by generators; zero generators are dropped."""

    __slots__ = ("ring", "gens", "_gb", "_gb_engine", "_dim")

    def __init__(self, ring: PolyRing, gens: Iterable[Polynomial]):
        kept = []
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous()[0]:
                raise ValueError(f"inhomogeneous generator: {g}")
            kept.append(g)
        self.ring = ring
        self.gens = tuple(kept)
        self._gb: Optional[tuple[Polynomial, ...]] = None
        self._gb_engine: Optional[ModuleGB] = None
        self._dim: Optional[int] = None

    def is_zero(self) -> bool:
        return not self.gens

    def groebner(self) -> tuple[Polynomial, ...]:
        """The reduced Groebner basis, monic, ascending by leading monomial."""
        if self._gb is None:
            self._gb = tuple(
                vec_to_poly(self.ring, v) for v in self._engine().reduced_basis()
            )
        return self._gb

    def _engine(self) -> ModuleGB:
        """A completed rank-one basis engine for membership queries."""
        if self._gb_engine is None:
            gb = ModuleGB(self.ring.p, (0,), use_product=True, use_chain=True)
            for g in self.gens:
                gb.add(poly_to_vec(g))
            gb.complete()
            self._gb_engine = gb
        return self._gb_engine

    def normal_form(self, f: Polynomial) -> Polynomial:
        if f.is_zero() or self.is_zero():
            return f
        return vec_to_poly(self.ring, self._engine().normal_form(poly_to_vec(f)))

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "Ideal") -> bool:
        if other.ring != self.ring:
            return False
        return self.groebner() == other.groebner()

    def leading_exponents(self) -> tuple[tuple[int, ...], ...]:
        return tuple(g.leading_monomial().exps for g in self.groebner())

    def affine_dimension(self) -> int:
        if self._dim is None:
            self._dim = affine_dimension(self)
        return self._dim

    def codimension(self) -> int:
        return self.ring.nvars - self.affine_dimension()

    def minimal_generators(self) -> tuple[Polynomial, ...]:
        """A minimal generating subset, ascending by degree, monic."""
        vecs = [poly_to_vec(g) for g in self.gens]
        keep = minimal_generating_subset(vecs, self.ring.p, (0,))
        return tuple(self.gens[i].monic() for i in keep)

    def __repr__(self) -> str:
        return f"Ideal({len(self.gens)} gens over {self.ring!r})"


def groebner_basis(I: Ideal) -> tuple[Polynomial, ...]:
    return I.groebner()


def normal_form(f: Polynomial, G: Ideal | Sequence[Polynomial]) -> Polynomial:
    """Remainder of f under full division by G (an Ideal uses its basis;
    a plain list is divided by as given, no completion)."""
    if isinstance(G, Ideal):
        return G.normal_form(f)
    ring = f.ring
    gb = ModuleGB(ring.p, (0,))
    for g in G:
        if not g.is_zero():
            gb.add(poly_to_vec(g), block=0)
    return vec_to_poly(ring, gb.normal_form(poly_to_vec(f)))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.ring, tuple(f * g for f in I.gens for g in J.gens))


def _seeded_quotient(
    I: Ideal, targets: Sequence[Polynomial], log: Optional[Callable[[str], None]] = None
) -> Ideal:
    """(I : (targets)) via one tracked pass: the module generated by
    I x R^m together with the single column (targets), tracking the scalar
    cofactor of that column.  Zero reductions emit elements of the quotient.

    Rank one additionally runs the product criterion; the Koszul syzygies it
    skips have cofactors inside I, which I's own generators (always part of
    the quotient) cover."""
    ring = I.ring
    p = ring.p
    m = len(targets)
    maxdeg = max(g.degree() for g in targets)
    twists = tuple(maxdeg - g.degree() for g in targets)
    gb = ModuleGB(p, twists, track=True, use_chain=True, use_product=(m == 1))
    for f in I.groebner():
        fv = poly_to_vec(f)
        for comp in range(m):
            gb.add({(comp, exps): c for (_, exps), c in fv.items()}, {}, block=comp)
    target_vec = {}
    for comp, g in enumerate(targets):
        for mm, c in g.terms:
            target_vec[(comp, mm.exps)] = c
    one = {(0, (0,) * ring.nvars): 1}
    gb.add(target_vec, one)
    gb.complete()
    if log:
        log(f"quotient pass emitted {len(gb.emitted)} candidates")
    vals = [poly_to_vec(f) for f in I.gens] if m == 1 else []
    vals.extend(v for v in gb.emitted if v)
    keep = minimal_generating_subset(vals, p, (0,))
    return Ideal(ring, [vec_to_poly(ring, vals[i]) for i in keep])


def ideal_quotient(I: Ideal, J: Ideal | Polynomial, *, log=None) -> Ideal:
    """The ideal (I : J) = {h : h*J inside I}."""
    if isinstance(J, Polynomial):
        targets: tuple[Polynomial, ...] = (J,) if not J.is_zero() else ()
    else:
        if J.ring != I.ring:
            raise ValueError("mixed rings")
        targets = J.gens
    if not targets:
        return Ideal(I.ring, [I.ring.one])
    if I.is_zero():
        return Ideal(I.ring, [])
    return _seeded_quotient(I, targets, log)


def ideal_intersection(I: Ideal, J: Ideal, *, log=None) -> Ideal:
    """Elements lying in both ideals, via a tracked pass seeded with both
    bases; the tracked value of each zero reduction is its I-part.  Chain
    criterion only: the product criterion would silently drop cross Koszul
    syzygies, whose values are honest intersection elements."""
    if I.ring != J.ring:
        raise ValueError("mixed rings")
    ring = I.ring
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    gb = ModuleGB(ring.p, (0,), track=True, use_chain=True)
    for f in I.groebner():
        v = poly_to_vec(f)
        gb.add(dict(v), dict(v), block=0)
    for g in J.groebner():
        gb.add(poly_to_vec(g), {}, block=1)
    gb.complete()
    if log:
        log(f"intersection pass emitted {len(gb.emitted)} candidates")
    vals = [v for v in gb.emitted if v]
    keep = minimal_generating_subset(vals, ring.p, (0,))
    return Ideal(ring, [vec_to_poly(ring, vals[i]) for i in keep])


def saturation(I: Ideal, *, log=None) -> Ideal:
    """Saturation with respect to the irrelevant maximal ideal.

    An element lands in the saturation exactly when every variable kills it
    into I at some power, so the result is the intersection over variables of
    the single-variable saturations.  Chaining the variable quotients instead
    would saturate by their product, which also strips components supported
    on coordinate hyperplanes.
    """
    if I.is_zero():
        return I
    ring = I.ring
    result = None
    for v in ring.variables():
        current = I
        steps = 0
        while True:
            bigger = ideal_quotient(current, v)
            if all(current.contains(q) for q in bigger.gens):
                break
            current = bigger
            steps += 1
            if steps > 60:
                raise RuntimeError("saturation failed to stabilize")
        if log and steps:
            log(f"saturation by {v} stabilized after {steps} quotients")
        result = current if result is None else ideal_intersection(result, current)
    if log:
        log(f"saturation: {len(result.gens)} generators")
    return result


def affine_dimension(I: Ideal) -> int:
    """Krull dimension of R/I (the affine cone; projective dim is one less).

    Computed as the largest variable subset meeting no leading-term support,
    scanned over all subsets; -1 for the unit ideal.
    """
    nvars = I.ring.nvars
    if I.is_zero():
        return nvars
    supports = set()
    for exps in I.leading_exponents():
        mask = 0
        for i, e in enumerate(exps):
            if e:
                mask |= 1 << i
        supports.add(mask)
    sup = tuple(supports)
    best = -1
    for s in range(1 << nvars):
        pop = bin(s).count("1")
        if pop <= best:
            continue
        # s is independent when no leading support is contained in it
        if all(m & ~s for m in sup):
            best = pop
    return best


def top_dimensional_part(I: Ideal, r: int, rng: Rng, *, log=None) -> Ideal:
    """The intersection of the codimension-r primary components.

    Picks r random forms inside I, checks they cut codimension r, and
    returns the double quotient (J : (J : I)).  Retries the draw up to five
    times per degree, then raises the form degree, twice at most.
    """
    ring = I.ring
    if I.is_zero():
        raise ValueError("top part of the zero ideal")
    nvars = ring.nvars
    if I.affine_dimension() != nvars - r:
        raise ConstructionError(
            f"expected codimension {r}, found {nvars - I.affine_dimension()}"
        )
    dmax = max(g.degree() for g in I.gens)
    for bump in range(3):
        degree = dmax + bump
        for attempt in range(5):
            combos = []
            for _ in range(r):
                f = ring.zero
                for g in I.gens:
                    f = f + ring.sparse_form(degree - g.degree(), rng) * g
                combos.append(f)
            if any(f.is_zero() for f in combos):
                continue
            J = Ideal(ring, combos)
            if J.affine_dimension() != nvars - r:
                continue
            if log:
                log(f"top part: cut with {r} forms of degree {degree} (attempt {attempt + 1})")
            link = ideal_quotient(J, I)
            return ideal_quotient(J, link)
        if log:
            log(f"top part: all draws at degree {degree} degenerate, raising degree")
    raise ConstructionError(
        f"no regular sequence of length {r} found in the ideal after escalation"
    )
