"""Gorenstein liaison: sections through a fixed subscheme and residuals.

The linking pipeline picks a section of a kernel module that vanishes on a
given subscheme V (by intersecting the kernel with I_V times the ambient
free module), extracts the top-dimensional part X of its vanishing locus,
certifies X arithmetically Gorenstein, and computes the residual (I_X : I_V).
The generalized pipeline does the same over a codimension-3 arithmetically
Gorenstein base: link it to V by a random complete intersection, resolve,
and section the kernel of V's minimal generator row.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Callable, Optional, Sequence

from .chern import ExpectedShape, GenBRSpec, expected_resolution_aci
from .engine import ModuleGB, minimal_generating_subset, vec_degree
from .hilbert import HilbertReport, hilbert_report
from .ideals import (
    ConstructionError,
    Ideal,
    ideal_quotient,
    poly_to_vec,
    saturation,
    top_dimensional_part,
)
from .poly import PolyRing
from .resolution import (
    BettiTable,
    GorensteinCertificate,
    GradedMatrix,
    Resolution,
    free_resolution,
    gorenstein_certificate,
    syzygy_matrix,
)
from .construct import SectionResult, combine_columns
from .ring import Rng

__all__ = [
    "module_intersection",
    "common_section",
    "LinkRecord",
    "gorenstein_link",
    "GenBRRun",
    "generalized_br_run",
]


def module_intersection(B: GradedMatrix, C: GradedMatrix, *, log=None) -> GradedMatrix:
    """Generators of (column span of B) meet (column span of C), as columns.

    Both bases are completed separately, then a tracked pass over their
    union records the B-part of every relation between them; the emitted
    values are exactly the intersection, pruned to minimal generators.
    """
    if B.ring != C.ring or B.row_twists != C.row_twists:
        raise ValueError("modules live in different ambient frames")
    ring = B.ring
    p = ring.p
    twists = B.row_twists

    def completed(M: GradedMatrix) -> list:
        gb = ModuleGB(p, twists, use_chain=True)
        for col in M.columns():
            if col:
                gb.add(col)
        gb.complete()
        return gb.basis()

    basis_b = completed(B)
    basis_c = completed(C)
    if not basis_b or not basis_c:
        return GradedMatrix.from_columns(ring, twists, [], [])
    joint = ModuleGB(p, twists, track=True, use_chain=True)
    for v in basis_b:
        joint.add(dict(v), dict(v), block=0)
    for v in basis_c:
        joint.add(dict(v), {}, block=1)
    joint.complete()
    vals = [v for v in joint.emitted if v]
    if log:
        log(f"module intersection emitted {len(vals)} candidates")
    keep = minimal_generating_subset(vals, p, twists)
    cols = [vals[i] for i in keep]
    degs = [vec_degree(v, twists) for v in cols]
    order = sorted(range(len(cols)), key=lambda i: (degs[i], i))
    return GradedMatrix.from_columns(
        ring, twists, [cols[i] for i in order], [degs[i] for i in order]
    )


def common_section(
    phi: GradedMatrix, IV: Ideal, d: int, rng: Rng, *, log=None
) -> SectionResult:
    """A random section of the kernel of phi whose entries vanish on V.

    Intersects the kernel with I_V times the ambient free module and
    combines columns in degree d above the smallest available; if every
    draw at a degree vanishes, the degree is raised, twice at most.
    """
    ring = phi.ring
    B = syzygy_matrix(phi, log=log)
    if B.cols == 0:
        raise ConstructionError("the matrix has no kernel to section")
    cvecs = []
    cdegs = []
    for g in IV.gens:
        gv = poly_to_vec(g)
        for comp, tw in enumerate(phi.col_twists):
            cvecs.append({(comp, exps): c for (_, exps), c in gv.items()})
            cdegs.append(g.degree() + tw)
    C = GradedMatrix.from_columns(ring, phi.col_twists, cvecs, cdegs)
    D = module_intersection(B, C, log=log)
    if D.cols == 0:
        raise ConstructionError("kernel meets the subscheme module only in zero")
    if log:
        log(f"common sections exist from degree {min(D.col_twists)}")
    last: Optional[ConstructionError] = None
    for bump in range(3):
        try:
            sec = combine_columns(D, min(D.col_twists) + d + bump, rng, log=log)
        except ConstructionError as exc:
            last = exc
            continue
        for e in sec.vector.entries:
            if not IV.contains(e):
                raise AssertionError("section entry escaped the subscheme ideal")
        r = phi.cols - phi.rows
        return replace(sec, regular=sec.ideal.affine_dimension() == ring.nvars - r)
    raise ConstructionError(f"no nonzero common section found: {last}")


@dataclass(frozen=True)
class LinkRecord:
    """Artifacts of one Gorenstein link through a fixed subscheme."""

    section: SectionResult
    section_saturated: Ideal
    section_report: HilbertReport
    gorenstein: Ideal
    gorenstein_report: HilbertReport
    betti: BettiTable
    certificate: GorensteinCertificate
    residual: Ideal
    residual_report: HilbertReport


def gorenstein_link(
    phi: GradedMatrix,
    IV: Ideal,
    d: int,
    rng: Rng,
    *,
    log: Optional[Callable[[str], None]] = None,
) -> LinkRecord:
    """Link V: section the kernel of phi through V, certify the section's
    top-dimensional part arithmetically Gorenstein, and return the residual."""
    codim = IV.codimension()
    sec = common_section(phi, IV, d, rng, log=log)
    sat = saturation(sec.ideal, log=log)
    X = top_dimensional_part(sat, codim, rng, log=log)
    if not IV.contains_ideal(X):
        raise AssertionError("the linking scheme does not contain V")
    res = free_resolution(X, log=log)
    cert = gorenstein_certificate(X, resolution=res)
    residual = ideal_quotient(X, IV, log=log)
    if log:
        log(f"residual has {len(residual.gens)} generators")
    return LinkRecord(
        section=sec,
        section_saturated=sat,
        section_report=hilbert_report(sat),
        gorenstein=X,
        gorenstein_report=hilbert_report(X),
        betti=res.betti(),
        certificate=cert,
        residual=residual,
        residual_report=hilbert_report(residual),
    )


@dataclass(frozen=True)
class GenBRRun:
    """Artifacts of the generalized construction over a codimension-3
    arithmetically Gorenstein base."""

    base_certificate: GorensteinCertificate
    base_betti: BettiTable
    ci: Ideal
    linked: Ideal
    linked_betti: BettiTable
    generator_row: GradedMatrix
    section: SectionResult
    section_top: Ideal
    report: HilbertReport
    betti: BettiTable
    spec: GenBRSpec
    shape: ExpectedShape
    ghost_cancellations: Optional[dict]

    @property
    def aci_type(self) -> tuple[int, ...]:
        d = self.spec.d
        return tuple(
            sorted([d - dk for dk in self.spec.ci_degrees] + [self.spec.b - d])
        )

    @property
    def shape_matches(self) -> bool:
        return self.ghost_cancellations is not None


def generalized_br_run(
    IG: Ideal,
    ci_degrees: Sequence[int],
    d: int,
    rng: Rng,
    *,
    log: Optional[Callable[[str], None]] = None,
) -> GenBRRun:
    """Generalized kernel-section run over a codimension-3 arithmetically
    Gorenstein ideal: link by a random complete intersection of the given
    degrees, section the kernel of the linked ideal's generator row at
    module twist d, and compare against the predicted
    almost-complete-intersection resolution shape (matching up to
    cancelling adjacent ghost pairs)."""
    ring = IG.ring
    if len(ci_degrees) != 3:
        raise ValueError("exactly three complete intersection degrees required")
    if ring.n != 3 and log:
        log(f"ambient dimension {ring.n}: shape predictions only verified for n = 3")
    res_g = free_resolution(IG, log=log)
    cert_g = gorenstein_certificate(IG, resolution=res_g)
    if not cert_g.arithmetically_gorenstein or cert_g.codimension != 3:
        raise ConstructionError("base ideal is not codimension-3 arithmetically Gorenstein")
    e1 = res_g.twists[0]
    e2 = res_g.twists[1]
    last_degree = res_g.twists[2][0]
    ell = ring.n + 1 - last_degree
    ci = _random_complete_intersection(IG, ci_degrees, rng, log=log)
    linked = ideal_quotient(ci, IG, log=log)
    res_v = free_resolution(linked, log=log)
    if log:
        log(f"linked ideal has {len(linked.gens)} minimal generators")
    phi = GradedMatrix(
        ring,
        [list(linked.gens)],
        (0,),
        tuple(g.degree() for g in linked.gens),
    )
    B = syzygy_matrix(phi, log=log)
    spec = GenBRSpec(
        e1=tuple(e1),
        e2=tuple(e2),
        ci_degrees=tuple(ci_degrees),
        ell=ell,
        d=d,
        n=ring.n,
    )
    sec: Optional[SectionResult] = None
    for _ in range(5):
        cand = combine_columns(B, d, rng, log=log)
        if affine_dim_of(cand.ideal) == ring.nvars - 3:
            sec = replace(cand, regular=True)
            break
        if log:
            log("section not regular, redrawing")
    if sec is None:
        raise ConstructionError("no regular section of the kernel in the target degree")
    top = top_dimensional_part(sec.ideal, 3, rng, log=log)
    sec = replace(sec, top=top)
    res_x = free_resolution(top, log=log)
    betti = res_x.betti()
    gen_degrees = tuple(sorted(res_x.twists[0]))
    expected_type = tuple(sorted([d - dk for dk in ci_degrees] + [spec.b - d]))
    if gen_degrees != expected_type:
        raise AssertionError(
            f"not an almost complete intersection of type {expected_type}:"
            f" generators sit in degrees {gen_degrees}"
        )
    shape = expected_resolution_aci(spec)
    ghosts = shape.ghost_difference(betti.as_dict())
    if log:
        if ghosts is None:
            log("computed resolution does NOT fit the predicted shape")
        elif ghosts:
            log(f"predicted shape matches after cancelling {sum(ghosts.values())} ghost pair(s)")
        else:
            log("predicted shape matches exactly")
    return GenBRRun(
        base_certificate=cert_g,
        base_betti=res_g.betti(),
        ci=ci,
        linked=linked,
        linked_betti=res_v.betti(),
        generator_row=phi,
        section=sec,
        section_top=top,
        report=hilbert_report(top),
        betti=betti,
        spec=spec,
        shape=shape,
        ghost_cancellations=ghosts,
    )


def affine_dim_of(I: Ideal) -> int:
    return I.affine_dimension()


def _random_complete_intersection(
    IG: Ideal, degrees: Sequence[int], rng: Rng, *, log=None
) -> Ideal:
    ring = IG.ring
    for attempt in range(20):
        forms = []
        for dk in degrees:
            f = ring.zero
            for g in IG.gens:
                rel = dk - g.degree()
                if rel >= 0:
                    f = f + ring.sparse_form(rel, rng) * g
            forms.append(f)
        if any(f.is_zero() for f in forms):
            continue
        ci = Ideal(ring, forms)
        if ci.codimension() == len(degrees):
            if log:
                log(f"complete intersection of type {tuple(degrees)} on attempt {attempt + 1}")
            return ci
    raise ConstructionError(
        f"no complete intersection of type {tuple(degrees)} found in 20 draws"
    )
