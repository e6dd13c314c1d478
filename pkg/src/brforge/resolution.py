"""Graded matrices, syzygies, free resolutions, and Betti data.

Resolutions are built stepwise: the columns of each stage are pruned to a
minimal generating set of the syzygy module before becoming the next matrix,
so a resolution of a minimally generated ideal comes out minimal already.
minimize() handles the general case by cancelling unit entries, carrying the
induced operations into both neighbouring matrices and the generator row.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .engine import Vec, minimal_generating_subset, tracked_syzygies, vec_degree
from .hilbert import hilbert_report
from .ideals import Ideal, poly_to_vec, vec_to_poly
from .poly import FreeModuleElement, Polynomial, PolyRing

__all__ = [
    "GradedMatrix",
    "Resolution",
    "BettiTable",
    "syzygy_matrix",
    "free_resolution",
    "regularity",
    "GorensteinCertificate",
    "gorenstein_certificate",
]


class GradedMatrix:
    """Matrix over a PolyRing between graded free modules.

    row_twists/col_twists are generator degrees: the module of columns is
    (+) R(-col_twists[j]) mapping into (+) R(-row_twists[i]), and every entry
    (i, j) is zero or homogeneous of degree col_twists[j] - row_twists[i].
    """

    __slots__ = ("ring", "entries", "row_twists", "col_twists")

    def __init__(
        self,
        ring: PolyRing,
        entries: Sequence[Sequence[Polynomial]],
        row_twists: Sequence[int],
        col_twists: Sequence[int],
    ):
        self.ring = ring
        self.entries = tuple(tuple(row) for row in entries)
        self.row_twists = tuple(row_twists)
        self.col_twists = tuple(col_twists)
        if len(self.entries) != len(self.row_twists):
            raise ValueError("row count does not match row twists")
        for i, row in enumerate(self.entries):
            if len(row) != len(self.col_twists):
                raise ValueError("column count does not match column twists")
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                hom, d = e.is_homogeneous()
                want = self.col_twists[j] - self.row_twists[i]
                if not hom or d != want:
                    raise ValueError(
                        f"entry ({i},{j}) must be homogeneous of degree {want}, got {e}"
                    )

    @property
    def rows(self) -> int:
        return len(self.row_twists)

    @property
    def cols(self) -> int:
        return len(self.col_twists)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def column_vec(self, j: int) -> Vec:
        out: Vec = {}
        for i in range(self.rows):
            e = self.entries[i][j]
            for m, c in e.terms:
                out[(i, m.exps)] = c
        return out

    def columns(self) -> list[Vec]:
        return [self.column_vec(j) for j in range(self.cols)]

    @classmethod
    def from_columns(
        cls,
        ring: PolyRing,
        row_twists: Sequence[int],
        columns: Sequence[Vec],
        col_twists: Sequence[int],
    ) -> "GradedMatrix":
        rows = len(row_twists)
        grid = [[ring.zero] * len(columns) for _ in range(rows)]
        for j, col in enumerate(columns):
            per_row: dict[int, dict] = {}
            for (comp, exps), c in col.items():
                per_row.setdefault(comp, {})[exps] = c
            for comp, d in per_row.items():
                grid[comp][j] = ring.from_dict(d)
        return cls(ring, grid, row_twists, col_twists)

    def compose(self, other: "GradedMatrix") -> "GradedMatrix":
        """self * other (apply other first)."""
        if other.row_twists != self.col_twists:
            raise ValueError("twist mismatch in composition")
        ring = self.ring
        grid = []
        for i in range(self.rows):
            row = []
            for k in range(other.cols):
                acc = ring.zero
                for j in range(self.cols):
                    a = self.entries[i][j]
                    b = other.entries[j][k]
                    if not a.is_zero() and not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            grid.append(row)
        return GradedMatrix(ring, grid, self.row_twists, other.col_twists)

    def apply_to(self, coefficients: Sequence[Polynomial]) -> FreeModuleElement:
        """Image of the column vector of coefficient forms."""
        if len(coefficients) != self.cols:
            raise ValueError("coefficient count mismatch")
        ring = self.ring
        out = []
        for i in range(self.rows):
            acc = ring.zero
            for j, f in enumerate(coefficients):
                if not f.is_zero() and not self.entries[i][j].is_zero():
                    acc = acc + self.entries[i][j] * f
            out.append(acc)
        return FreeModuleElement(ring, out, self.row_twists)

    def __repr__(self) -> str:
        return f"GradedMatrix({self.rows}x{self.cols} over {self.ring!r})"


@dataclass(frozen=True, eq=True)
class BettiTable:
    """Graded Betti numbers as {(homological step, generator degree): rank};
    step 0 holds the ideal's generators."""

    data: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, d: dict[tuple[int, int], int]) -> "BettiTable":
        items = tuple(sorted((k, v) for k, v in d.items() if v))
        return cls(items)

    @classmethod
    def from_twists(cls, twist_lists: Sequence[Sequence[int]]) -> "BettiTable":
        acc: dict[tuple[int, int], int] = {}
        for step, twists in enumerate(twist_lists):
            for d in twists:
                acc[(step, d)] = acc.get((step, d), 0) + 1
        return cls.from_dict(acc)

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.data)

    def steps(self) -> int:
        return 1 + max((k[0] for k, _ in self.data), default=-1)

    def lines(self) -> list[str]:
        return [f"{step} {deg} {rank}" for (step, deg), rank in self.data]

    def __str__(self) -> str:
        return "\n".join(self.lines())


class Resolution:
    """Chain of graded matrices resolving an ideal.

    generators: images of the F_0 basis (kept in sync through minimize).
    twists[k]: generator degrees of F_k.  matrices[k]: the map F_{k+1} -> F_k.
    """

    __slots__ = ("ring", "generators", "twists", "matrices")

    def __init__(
        self,
        ring: PolyRing,
        generators: Sequence[Polynomial],
        twists: Sequence[Sequence[int]],
        matrices: Sequence[GradedMatrix],
    ):
        self.ring = ring
        self.generators = tuple(generators)
        self.twists = [tuple(t) for t in twists]
        self.matrices = list(matrices)
        if len(self.matrices) != len(self.twists) - 1:
            raise ValueError("matrix count must be one less than module count")

    @property
    def length(self) -> int:
        return len(self.twists) - 1

    def betti(self) -> BettiTable:
        return BettiTable.from_twists(self.twists)

    def is_minimal(self) -> bool:
        for M in self.matrices:
            for i in range(M.rows):
                for j in range(M.cols):
                    if not M.entries[i][j].is_zero() and M.col_twists[j] == M.row_twists[i]:
                        return False
        return True

    def step_description(self, k: int) -> str:
        counts: dict[int, int] = {}
        for d in self.twists[k]:
            counts[d] = counts.get(d, 0) + 1
        parts = []
        for d in sorted(counts):
            r = counts[d]
            parts.append(f"R(-{d})" if r == 1 else f"{r}R(-{d})")
        return " + ".join(parts) if parts else "0"

    def describe(self) -> str:
        chain = " <- ".join(self.step_description(k) for k in range(len(self.twists)))
        return f"R <- {chain} <- 0"

    def minimize(self, *, log: Optional[Callable[[str], None]] = None) -> "Resolution":
        """Cancel unit entries until none remain, propagating the induced
        column/row operations to the neighbouring matrices and generators."""
        ring = self.ring
        gens = list(self.generators)
        twists = [list(t) for t in self.twists]
        mats = [[list(row) for row in M.entries] for M in self.matrices]
        cancelled = 0

        def find_unit():
            for k, M in enumerate(mats):
                for i in range(len(twists[k])):
                    for j in range(len(twists[k + 1])):
                        if twists[k + 1][j] == twists[k][i] and not M[i][j].is_zero():
                            return k, i, j
            return None

        while True:
            pos = find_unit()
            if pos is None:
                break
            k, i, j = pos
            cancelled += 1
            M = mats[k]
            inv = ring.field.inv(M[i][j].leading_coefficient())
            # clear row i using column ops; mirror as row ops on the next matrix
            for l in range(len(twists[k + 1])):
                if l == j or M[i][l].is_zero():
                    continue
                q = M[i][l].scale(inv)
                for m in range(len(twists[k])):
                    M[m][l] = M[m][l] - q * M[m][j]
                if k + 1 < len(mats):
                    nxt = mats[k + 1]
                    for c2 in range(len(twists[k + 2])):
                        nxt[j][c2] = nxt[j][c2] + q * nxt[l][c2]
            # clear column j using row ops; mirror on the previous matrix/generators
            for m in range(len(twists[k])):
                if m == i or M[m][j].is_zero():
                    continue
                q = M[m][j].scale(inv)
                for l in range(len(twists[k + 1])):
                    M[m][l] = M[m][l] - q * M[i][l]
                if k > 0:
                    prev = mats[k - 1]
                    for r in range(len(twists[k - 1])):
                        prev[r][i] = prev[r][i] + q * prev[r][m]
                else:
                    gens[i] = gens[i] + q * gens[m]
            # drop the cancelled pair of summands
            del twists[k][i]
            del twists[k + 1][j]
            del M[i]
            for row in M:
                del row[j]
            if k > 0:
                for row in mats[k - 1]:
                    del row[i]
            else:
                del gens[i]
            if k + 1 < len(mats):
                del mats[k + 1][j]
        while twists and not twists[-1]:
            twists.pop()
            mats.pop()
        if any(not t for t in twists):
            raise AssertionError("interior stage collapsed during minimization")
        if log and cancelled:
            log(f"minimization cancelled {cancelled} unit pairs")
        out_mats = [
            GradedMatrix(ring, mats[k], twists[k], twists[k + 1]) for k in range(len(mats))
        ]
        res = Resolution(ring, gens, twists, out_mats)
        if not res.is_minimal():
            raise AssertionError("unit entries survived minimization")
        return res


def syzygy_matrix(M: GradedMatrix, *, log=None) -> GradedMatrix:
    """Minimal generators of the column syzygies, as a graded matrix."""
    ring = M.ring
    syz = tracked_syzygies(M.columns(), ring.p, M.row_twists, ring.nvars, log=log)
    degs = [vec_degree(s, M.col_twists) for s in syz]
    return GradedMatrix.from_columns(ring, M.col_twists, syz, degs)


def free_resolution(
    I: Ideal, *, minimize: bool = True, log: Optional[Callable[[str], None]] = None
) -> Resolution:
    """Stepwise free resolution of the ideal's generators.

    Each syzygy stage is pruned to a minimal generating set; with minimally
    generated input the result is already minimal, and minimize=True runs
    unit cancellation to cover the general case.
    """
    ring = I.ring
    gens = list(I.gens)
    if not gens:
        raise ValueError("resolution of the zero ideal")
    cols = [poly_to_vec(g) for g in gens]
    ambient = (0,)
    cur_twists = [g.degree() for g in gens]
    twists: list[list[int]] = [list(cur_twists)]
    matrices: list[GradedMatrix] = []
    while True:
        syz = tracked_syzygies(cols, ring.p, ambient, ring.nvars, log=log)
        if not syz:
            break
        degs = [vec_degree(s, cur_twists) for s in syz]
        order = sorted(range(len(syz)), key=lambda i: (degs[i], i))
        syz = [syz[i] for i in order]
        degs = [degs[i] for i in order]
        M = GradedMatrix.from_columns(ring, tuple(cur_twists), syz, degs)
        matrices.append(M)
        twists.append(list(degs))
        if log:
            log(f"stage {len(matrices)}: {len(degs)} syzygies, degrees {sorted(set(degs))}")
        ambient = tuple(cur_twists)
        cur_twists = degs
        cols = syz
        if len(matrices) > ring.nvars + 1:
            raise AssertionError("resolution exceeded the global bound")
    res = Resolution(ring, gens, twists, matrices)
    if minimize:
        res = res.minimize(log=log)
    return res


def regularity(res: Resolution) -> int:
    """Castelnuovo-Mumford regularity read off a minimal resolution."""
    if not res.is_minimal():
        raise ValueError("regularity needs a minimal resolution")
    return max(max(t) - k for k, t in enumerate(res.twists) if t)


@dataclass(frozen=True)
class GorensteinCertificate:
    codimension: int
    resolution_length: int
    cohen_macaulay: bool
    last_rank: int
    h_vector: tuple[int, ...]
    h_symmetric: bool

    @property
    def arithmetically_gorenstein(self) -> bool:
        return self.cohen_macaulay and self.last_rank == 1 and self.h_symmetric

    def as_dict(self) -> dict:
        return {
            "codimension": self.codimension,
            "resolution_length": self.resolution_length,
            "cohen_macaulay": self.cohen_macaulay,
            "last_rank": self.last_rank,
            "h_vector": list(self.h_vector),
            "h_symmetric": self.h_symmetric,
            "arithmetically_gorenstein": self.arithmetically_gorenstein,
        }


def gorenstein_certificate(
    I: Ideal, *, resolution: Optional[Resolution] = None, log=None
) -> GorensteinCertificate:
    """Certificate for the arithmetically Gorenstein property of a saturated
    homogeneous ideal: Cohen-Macaulay (resolution length = codim - 1, since
    the ideal rather than the quotient is resolved), last module of rank one,
    and a symmetric h-vector."""
    report = hilbert_report(I)
    codim = report.codimension
    res = resolution if resolution is not None else free_resolution(I, log=log)
    if not res.is_minimal():
        res = res.minimize(log=log)
    length = res.length
    last_rank = len(res.twists[-1])
    h = report.second_series
    return GorensteinCertificate(
        codimension=codim,
        resolution_length=length,
        cohen_macaulay=(length == codim - 1),
        last_rank=last_rank,
        h_vector=h,
        h_symmetric=(h == h[::-1]),
    )
