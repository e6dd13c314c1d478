"""Heap-driven Buchberger engine on dict-backed module vectors.

A vector in a free module R^m is a dict {(component, exponent tuple): coeff}
with coefficients canonical in [1, p).  The same representation doubles as
the tracking space for cofactor / syzygy bookkeeping, so one reducer serves
Groebner bases, normal forms, syzygy generation, and the value-tracked
intersection and quotient constructions.

All inputs are assumed homogeneous (asserted at the public boundaries, not
per operation), which makes pair selection by degree the normal strategy and
makes degree-truncated runs sound.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush
from typing import Callable, Optional, Sequence

from .ring import TermOverPosition, negkey_exps

__all__ = [
    "Vec",
    "vec_degree",
    "vec_scale",
    "ModuleGB",
    "minimal_generating_subset",
    "tracked_syzygies",
]

Vec = dict  # {(comp, exps): coeff}

_TOP = TermOverPosition()


def vec_degree(vec: Vec, twists: Sequence[int]) -> int:
    """Degree of a nonzero homogeneous vector (twists = component degrees)."""
    comp, exps = next(iter(vec))
    return sum(exps) + twists[comp]


def vec_scale(vec: Vec, c: int, p: int) -> Vec:
    c %= p
    if c == 1:
        return dict(vec)
    return {k: v * c % p for k, v in vec.items()}


class _Elt:
    __slots__ = ("vec", "track", "comp", "exps")

    def __init__(self, vec: Vec, track: Optional[Vec], comp: int, exps: tuple):
        self.vec = vec
        self.track = track
        self.comp = comp
        self.exps = exps


class ModuleGB:
    """Incremental module Groebner basis with optional combination tracking.

    twists: ambient component degrees, used only to order the pair queue by
    true S-vector degree (inputs homogeneous).

    track=True keeps, for every basis element, a vector in a caller-chosen
    value space such that elt = (linear combination recorded in track) of the
    originally added columns' values.  Every S-pair that reduces to zero
    emits its tracked value.  With values = unit vectors this yields module
    syzygies; with values = the input polynomials themselves it yields
    intersection elements; with a single tracked seed it yields quotient
    cofactors.

    block >= 0 marks a family of added columns already known to be a
    Groebner basis among themselves whose internal pair reductions emit only
    zero values; pairs inside one block are skipped.

    The product criterion is only sound for rank-one modules.  Both criteria
    may run in tracked mode: a chain-dropped pair's syzygy is a monomial
    combination of the two sub-pairs' syzygies, so the emitted set still
    generates; a product-dropped pair loses its Koszul syzygy, whose value
    the caller must compensate (for quotient and intersection passes it lies
    in an ideal the caller already knows).
    """

    def __init__(
        self,
        p: int,
        twists: Sequence[int],
        *,
        order=None,
        track: bool = False,
        use_product: bool = False,
        use_chain: bool = False,
    ):
        if use_product and len(tuple(twists)) > 1:
            raise ValueError("product criterion is unsound above rank one")
        self.p = p
        self.twists = tuple(twists)
        self.order = order if order is not None else _TOP
        self.track = track
        self.elts: list[_Elt] = []
        self.by_comp: dict[int, list[_Elt]] = {}
        self.pairs: list[tuple[int, int, int]] = []
        self.block: list[int] = []
        self.emitted: list[Vec] = []
        self.use_product = use_product
        self.use_chain = use_chain

    # ---- construction -------------------------------------------------

    def add(self, vec: Vec, value: Optional[Vec] = None, block: int = -1) -> None:
        """Add a nonzero column (monic-scaled internally) and queue its pairs."""
        if not vec:
            raise ValueError("cannot add the zero vector")
        negkey = self.order.negkey
        comp, exps = min(vec, key=lambda k: negkey(k[0], k[1]))
        lc = vec[(comp, exps)]
        if lc != 1:
            inv = pow(lc, -1, self.p)
            vec = vec_scale(vec, inv, self.p)
            if value:
                value = vec_scale(value, inv, self.p)
        if self.track and value is None:
            value = {}
        self._append(_Elt(vec, value, comp, exps), block)

    def _append(self, elt: _Elt, block: int) -> None:
        m = len(self.elts)
        self.elts.append(elt)
        self.block.append(block)
        for i, other in enumerate(self.elts[:m]):
            if other.comp != elt.comp:
                continue
            if block >= 0 and self.block[i] == block:
                continue
            lcm = tuple(max(a, b) for a, b in zip(other.exps, elt.exps))
            d = sum(lcm) + self.twists[elt.comp]
            heappush(self.pairs, (d, i, m))
        self.by_comp.setdefault(elt.comp, []).append(elt)

    # ---- reduction ----------------------------------------------------

    def _find_reducer(self, comp: int, exps: tuple, skip: Optional[_Elt] = None):
        for g in self.by_comp.get(comp, ()):
            if g is skip:
                continue
            ge = g.exps
            for a, b in zip(ge, exps):
                if a > b:
                    break
            else:
                return g
        return None

    def _reduce(self, vec: Vec, value: Optional[Vec], skip: Optional[_Elt] = None):
        """Full normal form of vec (destructive); value carried along."""
        p = self.p
        negkey = self.order.negkey
        heap = [(negkey(c, e), c, e) for (c, e) in vec]
        heapify(heap)
        out: Vec = {}
        while heap:
            _, c, e = heappop(heap)
            coeff = vec.pop((c, e), 0)
            if not coeff:
                continue
            red = self._find_reducer(c, e, skip)
            if red is None:
                out[(c, e)] = coeff
                continue
            shift = tuple(a - b for a, b in zip(e, red.exps))
            self._axpy_heap(vec, heap, coeff, shift, red.vec, (c, e))
            # the vector just lost coeff * x^shift * red.vec, so the tracked
            # combination must lose the same multiple of red's combination
            if value is not None and red.track:
                _axpy(value, p - coeff, shift, red.track, p)
        return out, value

    def _axpy_heap(self, vec: Vec, heap: list, factor: int, shift: tuple, src: Vec, skip_key) -> None:
        """vec -= factor * x^shift * src, pushing newly created keys."""
        p = self.p
        negkey = self.order.negkey
        trivial = not any(shift)
        for (rc, re), rcc in src.items():
            key = (rc, re) if trivial else (rc, tuple(a + b for a, b in zip(re, shift)))
            if key == skip_key:
                continue
            old = vec.get(key)
            if old is None:
                nv = (-factor * rcc) % p
                if nv:
                    vec[key] = nv
                    heappush(heap, (negkey(key[0], key[1]), key[0], key[1]))
            else:
                nv = (old - factor * rcc) % p
                if nv:
                    vec[key] = nv
                else:
                    del vec[key]

    def normal_form(self, vec: Vec) -> Vec:
        """Normal form of a vector against the current basis (non-destructive)."""
        out, _ = self._reduce(dict(vec), None)
        return out

    # ---- pair processing ----------------------------------------------

    def _step(self) -> None:
        d, i, j = heappop(self.pairs)
        gi = self.elts[i]
        gj = self.elts[j]
        lcm = tuple(max(a, b) for a, b in zip(gi.exps, gj.exps))
        if self.use_product and all(min(a, b) == 0 for a, b in zip(gi.exps, gj.exps)):
            return
        if self.use_chain:
            for gk in self.by_comp.get(gi.comp, ()):
                if gk is gi or gk is gj:
                    continue
                ke = gk.exps
                if all(a <= b for a, b in zip(ke, lcm)):
                    lik = tuple(max(a, b) for a, b in zip(gi.exps, ke))
                    ljk = tuple(max(a, b) for a, b in zip(gj.exps, ke))
                    # both sub-pairs lie in strictly smaller degree, hence
                    # were already processed: safe to drop this pair
                    if lik != lcm and ljk != lcm:
                        return
        p = self.p
        si = tuple(a - b for a, b in zip(lcm, gi.exps))
        sj = tuple(a - b for a, b in zip(lcm, gj.exps))
        svec: Vec = {}
        _axpy(svec, p - 1, si, gi.vec, p)
        _axpy(svec, 1, sj, gj.vec, p)
        svalue: Optional[Vec] = None
        if self.track:
            svalue = {}
            _axpy(svalue, p - 1, si, gi.track, p)
            _axpy(svalue, 1, sj, gj.track, p)
        rem, remval = self._reduce(svec, svalue)
        if not rem:
            if self.track and remval:
                self.emitted.append(remval)
            return
        negkey = self.order.negkey
        comp, exps = min(rem, key=lambda k: negkey(k[0], k[1]))
        lc = rem[(comp, exps)]
        if lc != 1:
            inv = pow(lc, -1, p)
            rem = vec_scale(rem, inv, p)
            if remval is not None:
                remval = vec_scale(remval, inv, p)
        self._append(_Elt(rem, remval, comp, exps), -1)

    def complete_to(self, degree: int) -> None:
        """Process every queued pair of S-degree <= degree."""
        while self.pairs and self.pairs[0][0] <= degree:
            self._step()

    def complete(self) -> None:
        while self.pairs:
            self._step()

    # ---- extraction ----------------------------------------------------

    def basis(self) -> list[Vec]:
        return [g.vec for g in self.elts]

    def reduced_basis(self) -> list[Vec]:
        """Unique reduced basis: minimal lead terms, tails fully reduced,
        monic, sorted ascending in the module order."""
        if self.pairs:
            raise ValueError("complete() the basis first")
        negkey = self.order.negkey
        order_idx = sorted(
            range(len(self.elts)), key=lambda i: negkey(self.elts[i].comp, self.elts[i].exps)
        )
        order_idx.reverse()  # ascending monomial order
        kept: list[_Elt] = []
        for i in order_idx:
            g = self.elts[i]
            dominated = False
            for h in kept:
                if h.comp == g.comp and all(a <= b for a, b in zip(h.exps, g.exps)):
                    dominated = True
                    break
            if not dominated:
                kept.append(g)
        # tail reduction against the final minimal set
        saved_by_comp = self.by_comp
        self.by_comp = {}
        for g in kept:
            self.by_comp.setdefault(g.comp, []).append(g)
        out = []
        for g in kept:
            red, _ = self._reduce(dict(g.vec), None, skip=g)
            out.append(red)
        self.by_comp = saved_by_comp
        return out


def _axpy(vec: Vec, factor: int, shift: tuple, src: Optional[Vec], p: int) -> None:
    """vec += factor * x^shift * src   (in place, zero entries dropped)."""
    if not src:
        return
    factor %= p
    if factor == 0:
        return
    trivial = not any(shift)
    for (rc, re), rcc in src.items():
        key = (rc, re) if trivial else (rc, tuple(a + b for a, b in zip(re, shift)))
        nv = (vec.get(key, 0) + factor * rcc) % p
        if nv:
            vec[key] = nv
        else:
            vec.pop(key, None)


def minimal_generating_subset(
    vecs: Sequence[Vec], p: int, twists: Sequence[int]
) -> list[int]:
    """Indices of a minimal homogeneous generating subset of <vecs>.

    Processes candidates in ascending degree, keeping one exactly when it is
    not a combination of those already kept (membership tested against an
    incrementally completed basis, sound degreewise for homogeneous input).
    The count of kept generators is the minimal number of generators.
    """
    items = sorted(
        (i for i, v in enumerate(vecs) if v),
        key=lambda i: (vec_degree(vecs[i], twists), i),
    )
    inc = ModuleGB(p, twists, use_chain=True)
    kept: list[int] = []
    for i in items:
        d = vec_degree(vecs[i], twists)
        inc.complete_to(d)
        if inc.normal_form(vecs[i]):
            kept.append(i)
            inc.add(dict(vecs[i]))
    return kept


def tracked_syzygies(
    columns: Sequence[Vec],
    p: int,
    ambient_twists: Sequence[int],
    nvars: int,
    *,
    order=None,
    log: Optional[Callable[[str], None]] = None,
) -> list[Vec]:
    """Generators of the syzygy module of the given columns.

    Runs a tracked Buchberger pass where every zero reduction emits the
    combination that produced it; together with unit syzygies for zero
    columns these generate all relations.  The result is pruned to a minimal
    generating set, sorted ascending by degree.
    """
    zero_exps = (0,) * nvars
    col_degrees = []
    gb = ModuleGB(p, ambient_twists, order=order, track=True, use_chain=True)
    syz: list[Vec] = []
    for idx, col in enumerate(columns):
        if not col:
            col_degrees.append(0)
            syz.append({(idx, zero_exps): 1})
            continue
        col_degrees.append(vec_degree(col, ambient_twists))
        gb.add(dict(col), {(idx, zero_exps): 1})
    gb.complete()
    syz.extend(gb.emitted)
    if log:
        log(f"syzygy pass: {len(gb.elts)} basis elements, {len(syz)} raw relations")
    keep = minimal_generating_subset(syz, p, col_degrees)
    out = [syz[i] for i in keep]
    if log:
        log(f"pruned to {len(out)} minimal relations")
    return out
