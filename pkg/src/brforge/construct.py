"""Randomized constructions: graded matrices, determinantal ideals,
pfaffians, kernel sections, and the full Gorenstein pipeline.

The pipeline draws a random graded matrix, checks the expected codimension
of its maximal minors, computes the kernel (first syzygies), combines the
kernel columns into a random section of prescribed degree, verifies the
section is regular (its vanishing locus has the expected dimension), and
extracts the top-dimensional part, which is the arithmetically Gorenstein
subscheme the twist data predicts.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from itertools import combinations
from typing import Callable, Optional, Sequence

from .chern import ChernReport, ExpectedShape, TwistSpec, chern_coefficients, expected_resolution
from .hilbert import HilbertReport, hilbert_report
from .ideals import ConstructionError, Ideal, affine_dimension, top_dimensional_part
from .poly import FreeModuleElement, Polynomial, PolyRing
from .resolution import (
    BettiTable,
    GorensteinCertificate,
    GradedMatrix,
    Resolution,
    free_resolution,
    gorenstein_certificate,
    regularity,
    syzygy_matrix,
)
from .ring import Rng

__all__ = [
    "ConstructionSpec",
    "SectionResult",
    "KernelSectionRun",
    "ConstructionReport",
    "random_graded_matrix",
    "construction_matrix",
    "minors_ideal",
    "pfaffian",
    "pfaffian_ideal",
    "check_expected_codim",
    "is_good_position",
    "combine_columns",
    "section",
    "kernel_section_run",
    "gorenstein_from_kernel_section",
    "verify_construction",
]


@dataclass(frozen=True)
class ConstructionSpec:
    """Parameters of a kernel-section construction: a t x (t+r) matrix with
    entries of degree entry_degree over P^n, sectioned in relative degree
    section_degree (the module twist of the section is
    section_degree + t*entry_degree)."""

    t: int
    r: int
    entry_degree: int
    section_degree: int
    n: int
    characteristic: int = 32003
    seed: int = 0

    def __post_init__(self):
        if self.t < 1 or self.r < 1 or self.entry_degree < 1 or self.section_degree < 0:
            raise ValueError(
                "t, r, entry_degree must be positive and section_degree nonnegative"
            )
        if self.r > self.n:
            raise ValueError("codimension exceeds ambient dimension")

    @property
    def section_twist(self) -> int:
        return self.section_degree + self.t * self.entry_degree

    def twist_data(self) -> TwistSpec:
        D = self.section_twist
        return TwistSpec(
            a=(D - self.entry_degree,) * (self.t + self.r), b=(D,) * self.t, n=self.n
        )


def random_graded_matrix(
    ring: PolyRing,
    row_twists: Sequence[int],
    col_twists: Sequence[int],
    rng: Rng,
) -> GradedMatrix:
    """Matrix with dense random homogeneous entries of the forced degrees,
    drawn row by row; impossible (negative-degree) positions stay zero."""
    grid = []
    for rt in row_twists:
        row = []
        for ct in col_twists:
            d = ct - rt
            if d < 0:
                row.append(ring.zero)
                continue
            f = ring.random_form(d, rng)
            while f.is_zero():
                f = ring.random_form(d, rng)
            row.append(f)
        grid.append(row)
    return GradedMatrix(ring, grid, row_twists, col_twists)


def construction_matrix(ring: PolyRing, spec: ConstructionSpec, rng: Rng) -> GradedMatrix:
    return random_graded_matrix(
        ring, (0,) * spec.t, (spec.entry_degree,) * (spec.t + spec.r), rng
    )


def minors_ideal(M: GradedMatrix, size: int, *, log=None) -> Ideal:
    """Ideal of all size x size minors (Laplace expansion, memoized)."""
    if size < 1 or size > min(M.rows, M.cols):
        raise ValueError(f"no {size}x{size} minors in a {M.rows}x{M.cols} matrix")
    ring = M.ring
    memo: dict[tuple[tuple[int, ...], tuple[int, ...]], Polynomial] = {}

    def det(rows: tuple[int, ...], cols: tuple[int, ...]) -> Polynomial:
        if len(rows) == 1:
            return M.entries[rows[0]][cols[0]]
        got = memo.get((rows, cols))
        if got is not None:
            return got
        acc = ring.zero
        r0 = rows[0]
        rest = rows[1:]
        for pos, c in enumerate(cols):
            e = M.entries[r0][c]
            if e.is_zero():
                continue
            sub = det(rest, cols[:pos] + cols[pos + 1 :])
            if sub.is_zero():
                continue
            term = e * sub
            acc = acc - term if pos % 2 else acc + term
        memo[(rows, cols)] = acc
        return acc

    gens = [
        det(rs, cs)
        for rs in combinations(range(M.rows), size)
        for cs in combinations(range(M.cols), size)
    ]
    if log:
        log(f"{len(gens)} minors of size {size}")
    return Ideal(ring, gens)


def _check_skew(M: GradedMatrix) -> None:
    if M.rows != M.cols:
        raise ValueError("skew matrix must be square")
    for i in range(M.rows):
        if not M.entries[i][i].is_zero():
            raise ValueError("skew matrix needs a zero diagonal")
        for j in range(i + 1, M.cols):
            if M.entries[i][j] + M.entries[j][i] != M.ring.zero:
                raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not opposite")


def pfaffian(M: GradedMatrix, indices: Optional[Sequence[int]] = None) -> Polynomial:
    """Pfaffian of the skew submatrix on the given (even-count) indices."""
    _check_skew(M)
    idx = tuple(range(M.rows)) if indices is None else tuple(indices)
    if len(idx) % 2:
        raise ValueError("pfaffian needs an even number of indices")
    ring = M.ring
    memo: dict[tuple[int, ...], Polynomial] = {}

    def pf(s: tuple[int, ...]) -> Polynomial:
        if not s:
            return ring.one
        got = memo.get(s)
        if got is not None:
            return got
        acc = ring.zero
        first = s[0]
        rest = s[1:]
        for pos, j in enumerate(rest):
            e = M.entries[first][j]
            if e.is_zero():
                continue
            sub = pf(rest[:pos] + rest[pos + 1 :])
            term = e * sub
            # expansion along the first row: alternating signs over positions
            acc = acc + term if pos % 2 == 0 else acc - term
        memo[s] = acc
        return acc

    return pf(idx)


def pfaffian_ideal(M: GradedMatrix, *, log=None) -> Ideal:
    """Ideal of maximal (size - 1) pfaffians of an odd skew matrix."""
    _check_skew(M)
    if M.rows % 2 == 0:
        raise ValueError("maximal pfaffians need odd size")
    all_idx = range(M.rows)
    gens = []
    for drop in all_idx:
        idx = tuple(i for i in all_idx if i != drop)
        gens.append(pfaffian(M, idx))
    if log:
        log(f"{len(gens)} maximal pfaffians")
    return Ideal(M.ring, gens)


def check_expected_codim(M: GradedMatrix, t: int, r: int, *, log=None) -> bool:
    """True when the t x t minors cut codimension exactly r + 1 (the expected
    codimension of the degeneracy locus of a t x (t+r) matrix)."""
    I = minors_ideal(M, t)
    if I.is_zero():
        return False
    codim = M.ring.nvars - affine_dimension(I)
    if log:
        log(f"maximal minors cut codimension {codim} (expected {r + 1})")
    return codim == r + 1


def is_good_position(M: GradedMatrix, t: int, r: int, rng: Rng, *, trials: int = 2, log=None) -> bool:
    """Check the stronger genericity: after a random row change, deleting a
    row leaves (t-1)-minors of codimension r + 2.  Vacuous for t = 1."""
    if not check_expected_codim(M, t, r, log=log):
        return False
    if t == 1:
        return True
    ring = M.ring
    p = ring.p
    for _ in range(trials):
        U = None
        for _ in range(5):
            cand = [[rng.below(p) for _ in range(t)] for _ in range(t)]
            if _invertible(cand, p):
                U = cand
                break
        if U is None:
            return False
        transformed = []
        for i in range(t):
            row = []
            for j in range(M.cols):
                acc = ring.zero
                for k in range(t):
                    if U[i][k]:
                        acc = acc + M.entries[k][j].scale(U[i][k])
                row.append(acc)
            transformed.append(row)
        sub = GradedMatrix(ring, transformed[:-1], M.row_twists[:-1], M.col_twists)
        I = minors_ideal(sub, t - 1)
        if I.is_zero():
            return False
        codim = ring.nvars - affine_dimension(I)
        if log:
            log(f"deleted-row minors cut codimension {codim} (expected {r + 2})")
        if codim != r + 2:
            return False
    return True


def _invertible(mat: list[list[int]], p: int) -> bool:
    m = [row[:] for row in mat]
    size = len(m)
    for c in range(size):
        piv = next((i for i in range(c, size) if m[i][c] % p), None)
        if piv is None:
            return False
        m[c], m[piv] = m[piv], m[c]
        inv = pow(m[c][c], -1, p)
        for i in range(c + 1, size):
            f = m[i][c] * inv % p
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[c])]
    return True


@dataclass(frozen=True)
class SectionResult:
    """A random section: the combined module element, its module twist, the
    drawn coefficient forms, the ideal of its entries (the transpose of the
    vector), and, once checked or computed, the regularity flag and the
    top-dimensional part of its vanishing locus."""

    vector: FreeModuleElement
    degree: int
    coefficients: tuple[Polynomial, ...]
    ideal: Ideal
    regular: Optional[bool] = None
    top: Optional[Ideal] = None


def combine_columns(M: GradedMatrix, degree: int, rng: Rng, *, log=None) -> SectionResult:
    """Random combination of the columns of M with sparse coefficient forms
    at the given uniform module twist; columns too large to contribute get
    zero coefficients.  An all-zero draw is retried up to five times."""
    if M.cols == 0:
        raise ConstructionError("no columns to combine")
    ring = M.ring
    for attempt in range(5):
        coeffs = []
        for ct in M.col_twists:
            rel = degree - ct
            coeffs.append(ring.sparse_form(rel, rng) if rel >= 0 else ring.zero)
        vec = M.apply_to(coeffs)
        if not vec.is_zero():
            if log:
                log(f"section of degree {degree} on attempt {attempt + 1}")
            return SectionResult(
                vector=vec,
                degree=degree,
                coefficients=tuple(coeffs),
                ideal=Ideal(ring, vec.entries),
            )
    raise ConstructionError(f"sections of degree {degree} all vanished after 5 draws")


def section(M: GradedMatrix, d: int, rng: Rng, *, log=None) -> SectionResult:
    """Random section of the kernel of M, at degree d above the smallest
    kernel twist.

    Computes the first syzygies B of M, combines their columns with sparse
    random coefficient forms into a homogeneous element, and returns it with
    the ideal of its entries.  The regular flag records whether the
    vanishing locus has the dimension expected of a regular section, namely
    affine dimension nvars - (cols - rows); an empty locus therefore reads
    as not regular.
    """
    B = syzygy_matrix(M, log=log)
    if B.cols == 0:
        raise ConstructionError("the matrix has no kernel to section")
    result = combine_columns(B, d + min(B.col_twists), rng, log=log)
    r = M.cols - M.rows
    dim = affine_dimension(result.ideal)
    if log:
        log(f"vanishing locus has affine dimension {dim} (regular means {M.ring.nvars - r})")
    return replace(result, regular=dim == M.ring.nvars - r)


@dataclass(frozen=True)
class KernelSectionRun:
    """Everything produced along one construction run."""

    spec: ConstructionSpec
    matrix: GradedMatrix
    kernel: GradedMatrix
    section: SectionResult
    section_degree: int
    escalations: int
    gorenstein: Ideal


def kernel_section_run(
    ring: PolyRing,
    spec: ConstructionSpec,
    rng: Rng,
    *,
    matrix: Optional[GradedMatrix] = None,
    log: Optional[Callable[[str], None]] = None,
) -> KernelSectionRun:
    if ring.n != spec.n:
        raise ValueError("ring and construction dimensions differ")
    if matrix is None:
        M = construction_matrix(ring, spec, rng)
        if log:
            log(
                f"drew {spec.t}x{spec.t + spec.r} matrix"
                f" with entries of degree {spec.entry_degree}"
            )
    else:
        M = matrix
        if M.ring != ring or M.rows != spec.t or M.cols != spec.t + spec.r:
            raise ValueError("supplied matrix does not fit the construction data")
        degrees = {ct - rt for rt in M.row_twists for ct in M.col_twists}
        if degrees != {spec.entry_degree}:
            raise ValueError("supplied matrix entries have the wrong degree")
        if log:
            log(f"using the supplied {M.rows}x{M.cols} matrix")
    if not check_expected_codim(M, spec.t, spec.r, log=log):
        raise ConstructionError(
            "maximal minors miss the expected codimension; rerun with a new seed"
        )
    B = syzygy_matrix(M, log=log)
    if log:
        log(f"kernel has {B.cols} generators of degrees {sorted(set(B.col_twists))}")
    nvars = ring.nvars
    D = spec.section_twist
    last_error: Optional[str] = None
    for escalation in range(3):
        # several draws at the same degree before conceding it is too small:
        # escalating changes every predicted invariant, a redraw does not
        for _ in range(4):
            sec = combine_columns(B, D + escalation, rng, log=log)
            dim = affine_dimension(sec.ideal)
            if dim == nvars - spec.r:
                if log and escalation:
                    log(f"section degree escalated {escalation} time(s)")
                top = top_dimensional_part(sec.ideal, spec.r, rng, log=log)
                sec = replace(sec, regular=True, top=top)
                return KernelSectionRun(
                    spec=spec,
                    matrix=M,
                    kernel=B,
                    section=sec,
                    section_degree=sec.degree,
                    escalations=escalation,
                    gorenstein=top,
                )
            last_error = (
                f"vanishing locus has affine dimension {dim},"
                f" expected {nvars - spec.r}"
            )
            if log:
                log(f"section of degree {D + escalation} not regular: {last_error}")
    raise ConstructionError(f"no regular section found: {last_error}")


def gorenstein_from_kernel_section(ring: PolyRing, spec: ConstructionSpec, rng: Rng, *, log=None) -> Ideal:
    return kernel_section_run(ring, spec, rng, log=log).gorenstein


@dataclass(frozen=True)
class ConstructionReport:
    """Predicted against computed invariants of a constructed ideal."""

    chern: ChernReport
    shape: ExpectedShape
    hilbert: HilbertReport
    betti: BettiTable
    regularity: int
    certificate: GorensteinCertificate
    degree_matches: bool
    betti_matches: bool
    betti_embeds: bool

    @property
    def ok(self) -> bool:
        return (
            self.degree_matches
            and self.betti_embeds
            and self.certificate.arithmetically_gorenstein
        )

    def as_dict(self) -> dict:
        return {
            "predicted_degree": self.chern.expected_degree,
            "degree": self.hilbert.degree,
            "degree_matches": self.degree_matches,
            "h_vector": list(self.hilbert.second_series),
            "betti": self.betti.lines(),
            "predicted_betti": self.shape.lines(),
            "betti_matches": self.betti_matches,
            "betti_embeds": self.betti_embeds,
            "regularity": self.regularity,
            "gorenstein": self.certificate.arithmetically_gorenstein,
            "ok": self.ok,
        }


def verify_construction(
    I: Ideal,
    spec: ConstructionSpec,
    *,
    resolution: Optional[Resolution] = None,
    log=None,
) -> ConstructionReport:
    """Compare the constructed ideal's invariants against the predictions
    carried by the twist data alone."""
    twists = spec.twist_data()
    chern = chern_coefficients(twists)
    shape = expected_resolution(twists)
    rep = hilbert_report(I)
    res = resolution if resolution is not None else free_resolution(I, log=log)
    if not res.is_minimal():
        res = res.minimize(log=log)
    betti = res.betti()
    cert = gorenstein_certificate(I, resolution=res)
    return ConstructionReport(
        chern=chern,
        shape=shape,
        hilbert=rep,
        betti=betti,
        regularity=regularity(res),
        certificate=cert,
        degree_matches=(rep.degree == chern.expected_degree),
        betti_matches=(betti.as_dict() == shape.as_betti_dict()),
        betti_embeds=(shape.ghost_difference(betti.as_dict()) is not None),
    )
