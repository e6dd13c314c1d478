"""Command line front end.

Every subcommand prints an optional protocol of '//'-prefixed progress
lines (--protocol), then any session-style text blocks, and always ends
with a single-line JSON summary on stdout.  Randomized subcommands require
--seed and reproduce byte-identical output for identical flags and seed.
Intermediate objects can be persisted with --out DIR in the plain-text
formats of the io module.

Exit codes: 0 on success, 2 on mathematical failure (codimension or
regularity checks that a new seed may fix), 1 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Callable, Optional

from .chern import (
    GenBRSpec,
    TwistSpec,
    chern_coefficients,
    expected_resolution,
    expected_resolution_aci,
)
from .construct import (
    ConstructionSpec,
    kernel_section_run,
    minors_ideal,
    pfaffian_ideal,
    section,
)
from .hilbert import HilbertReport, hilbert_report
from .ideals import ConstructionError, Ideal, saturation, top_dimensional_part
from .io import read_ideal, read_matrix, write_ideal, write_matrix
from .liaison import generalized_br_run, gorenstein_link
from .poly import PolyRing
from .resolution import free_resolution, gorenstein_certificate, regularity
from .ring import Rng

__all__ = ["main"]

DEFAULT_CHAR = 32003


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; usage problems must be 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _default_char() -> int:
    raw = os.environ.get("FORGE_CHAR", "")
    if not raw:
        return DEFAULT_CHAR
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"FORGE_CHAR must be an integer, got {raw!r}") from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {text!r}") from exc


def _logger(args) -> Optional[Callable[[str], None]]:
    if getattr(args, "protocol", False):
        return lambda msg: print(f"// {msg}")
    return None


def _out_dir(args) -> Optional[Path]:
    out = getattr(args, "out", None)
    if out is None:
        return None
    path = Path(out)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _emit(summary: dict, out: Optional[Path]) -> None:
    if out is not None:
        (out / "summary.json").write_text(
            json.dumps(summary, sort_keys=True, indent=2) + "\n"
        )
    print(json.dumps(summary, sort_keys=True))


def _degree_counts(degrees) -> list[list[int]]:
    counts: dict[int, int] = {}
    for d in degrees:
        counts[d] = counts.get(d, 0) + 1
    return [[d, counts[d]] for d in sorted(counts)]


def _print_hilbert_blocks(rep: HilbertReport) -> None:
    for k, c in enumerate(rep.first_series):
        if c:
            print(f"// {c:9d} t^{k}")
    print("//")
    for k, c in enumerate(rep.second_series):
        print(f"// {c:9d} t^{k}")
    print("//")
    print(f"// codimension = {rep.codimension}")
    print(f"// dimension   = {rep.affine_dimension}")
    print(f"// degree      = {rep.degree}")


def _gens_strings(I: Ideal) -> list[str]:
    return [I.ring.format(g) for g in I.gens]


# ---------------------------------------------------------------- br


def _cmd_br(args) -> int:
    log = _logger(args)
    out = _out_dir(args)
    matrix = None
    if args.matrix is not None:
        matrix = read_matrix(args.matrix)
        ring = matrix.ring
        degrees = {ct - rt for rt in matrix.row_twists for ct in matrix.col_twists}
        if len(degrees) != 1:
            raise ValueError("matrix entries must have a single uniform degree")
        entry_degree = degrees.pop()
        t, r, n, char = matrix.rows, matrix.cols - matrix.rows, ring.n, ring.p
        for flag, val, derived in (
            ("--t", args.t, t),
            ("--r", args.r, r),
            ("--entry-deg", args.entry_deg, entry_degree),
            ("--n", args.n, n),
            ("--char", args.char, char),
        ):
            if val is not None and val != derived:
                raise ValueError(f"{flag} {val} contradicts the supplied matrix ({derived})")
    else:
        missing = [
            flag
            for flag, val in (("--t", args.t), ("--r", args.r), ("--entry-deg", args.entry_deg), ("--n", args.n))
            if val is None
        ]
        if missing:
            raise ValueError(f"missing {', '.join(missing)} (or supply --matrix)")
        t, r, entry_degree, n = args.t, args.r, args.entry_deg, args.n
        char = args.char if args.char is not None else _default_char()
        ring = PolyRing(char, n)
    spec = ConstructionSpec(
        t=t,
        r=r,
        entry_degree=entry_degree,
        section_degree=args.sec_deg,
        n=n,
        characteristic=char,
        seed=args.seed,
    )
    print(f"// seed = {args.seed}")
    rng = Rng(args.seed)
    run = kernel_section_run(ring, spec, rng, matrix=matrix, log=log)
    rep = hilbert_report(run.gorenstein)
    chern = chern_coefficients(spec.twist_data())
    _print_hilbert_blocks(rep)
    summary = {
        "command": "br",
        "seed": args.seed,
        "characteristic": char,
        "n": n,
        "t": t,
        "r": r,
        "entry_degree": entry_degree,
        "section_degree": args.sec_deg,
        "section_twist": run.section_degree,
        "escalations": run.escalations,
        "predicted_degree": chern.expected_degree,
        "degree": rep.degree,
        "degree_matches": rep.degree == chern.expected_degree,
        "h_vector": list(rep.second_series),
        "codimension": rep.codimension,
        "dimension": rep.affine_dimension,
        "generator_degrees": _degree_counts(g.degree() for g in run.gorenstein.gens),
        "generators": _gens_strings(run.gorenstein),
    }
    if args.verify:
        from .construct import verify_construction

        report = verify_construction(run.gorenstein, spec, log=log)
        summary["verification"] = report.as_dict()
    if out is not None:
        write_matrix(out / "matrix.mat", run.matrix)
        write_matrix(out / "kernel.mat", run.kernel)
        write_ideal(out / "section.id", run.section.ideal)
        write_ideal(out / "top.id", run.gorenstein)
    _emit(summary, out)
    return 0


# ---------------------------------------------------------------- section


def _cmd_section(args) -> int:
    log = _logger(args)
    out = _out_dir(args)
    M = read_matrix(args.matrix)
    print(f"// seed = {args.seed}")
    rng = Rng(args.seed)
    sec = section(M, args.deg, rng, log=log)
    summary = {
        "command": "section",
        "seed": args.seed,
        "characteristic": M.ring.p,
        "n": M.ring.n,
        "degree": sec.degree,
        "regular": sec.regular,
        "entry_degrees": _degree_counts(e.degree() for e in sec.vector.entries if not e.is_zero()),
        "generators": _gens_strings(sec.ideal),
    }
    if out is not None:
        write_ideal(out / "section.id", sec.ideal)
    _emit(summary, out)
    return 0 if sec.regular else 2


# ---------------------------------------------------------------- top


def _cmd_top(args) -> int:
    log = _logger(args)
    out = _out_dir(args)
    I = read_ideal(args.ideal)
    print(f"// seed = {args.seed}")
    rng = Rng(args.seed)
    codim = args.codim if args.codim is not None else I.codimension()
    if log:
        log(f"isolating the top-dimensional part in codimension {codim}")
    top = top_dimensional_part(I, codim, rng, log=log)
    rep = hilbert_report(top)
    _print_hilbert_blocks(rep)
    summary = {
        "command": "top",
        "seed": args.seed,
        "codimension": codim,
        "degree": rep.degree,
        "h_vector": list(rep.second_series),
        "generator_degrees": _degree_counts(g.degree() for g in top.gens),
        "generators": _gens_strings(top),
    }
    if out is not None:
        write_ideal(out / "top.id", top)
    _emit(summary, out)
    return 0


# ---------------------------------------------------------------- hilb


def _cmd_hilb(args) -> int:
    out = _out_dir(args)
    I = read_ideal(args.ideal)
    rep = hilbert_report(I)
    _print_hilbert_blocks(rep)
    summary = dict(rep.as_dict(), command="hilb")
    _emit(summary, out)
    return 0


# ---------------------------------------------------------------- res


def _cmd_res(args) -> int:
    log = _logger(args)
    out = _out_dir(args)
    I = read_ideal(args.ideal)
    res = free_resolution(I, minimize=args.minimal, log=log)
    print(f"// {res.describe()}")
    for line in res.betti().lines():
        print(f"// {line}")
    summary = {
        "command": "res",
        "minimal": res.is_minimal(),
        "length": res.length,
        "betti": res.betti().lines(),
        "description": res.describe(),
    }
    if res.is_minimal():
        summary["regularity"] = regularity(res)
        cert = gorenstein_certificate(I, resolution=res)
        summary["gorenstein"] = cert.as_dict()
    _emit(summary, out)
    return 0


# ---------------------------------------------------------------- minors / pfaffians


def _cmd_minors(args) -> int:
    log = _logger(args)
    out = _out_dir(args)
    M = read_matrix(args.matrix)
    I = minors_ideal(M, args.size, log=log)
    summary = {
        "command": "minors",
        "size": args.size,
        "count": len(I.gens),
        "generator_degrees": _degree_counts(g.degree() for g in I.gens),
        "generators": _gens_strings(I),
    }
    if out is not None:
        write_ideal(out / "minors.id", I)
    _emit(summary, out)
    return 0


def _cmd_pfaffians(args) -> int:
    log = _logger(args)
    out = _out_dir(args)
    M = read_matrix(args.matrix)
    I = pfaffian_ideal(M, log=log)
    summary = {
        "command": "pfaffians",
        "count": len(I.gens),
        "generator_degrees": _degree_counts(g.degree() for g in I.gens),
        "generators": _gens_strings(I),
    }
    if out is not None:
        write_ideal(out / "pfaffians.id", I)
    _emit(summary, out)
    return 0


# ---------------------------------------------------------------- predict


def _parse_predict_config(text: str) -> dict:
    stripped = text.strip()
    if stripped.startswith("{"):
        data = json.loads(stripped)
    else:
        data = {}
        for raw in stripped.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, eq, val = line.partition("=")
            if not eq:
                raise ValueError(f"expected key = value, got {line!r}")
            data[key.strip()] = val.strip()
    # normalize: comma strings and scalars both become int lists / ints
    norm: dict = {}
    for key, val in data.items():
        if isinstance(val, str):
            parts = _int_list(val)
            norm[key] = parts if "," in val or key in ("a", "b", "p", "e1", "e2", "ci") else parts[0]
        elif isinstance(val, list):
            norm[key] = [int(x) for x in val]
        else:
            norm[key] = int(val)
    return norm


def _cmd_predict(args) -> int:
    out = _out_dir(args)
    cfg = _parse_predict_config(Path(args.spec).read_text())
    if "a" in cfg and "b" in cfg:
        spec = TwistSpec(
            a=tuple(cfg["a"]),
            b=tuple(cfg["b"]),
            n=int(cfg["n"]),
            p=tuple(cfg.get("p", [0])),
        )
        chern = chern_coefficients(spec)
        shape = expected_resolution(spec)
        print(f"// c = {' '.join(str(c) for c in chern.coefficients)}")
        print(f"// c1 = {chern.c1}")
        print(f"// expected degree = c_{chern.r} = {chern.expected_degree}")
        print("// expected resolution (step degree rank):")
        for line in shape.lines():
            print(f"// {line}")
        summary = {
            "command": "predict",
            "kind": "kernel",
            "a": list(spec.a),
            "b": list(spec.b),
            "p": list(spec.p),
            "n": spec.n,
            "r": spec.r,
            "coefficients": list(chern.coefficients),
            "c1": chern.c1,
            "expected_degree": chern.expected_degree,
            "shape": shape.lines(),
        }
    elif "e1" in cfg and "e2" in cfg:
        spec = GenBRSpec(
            e1=tuple(cfg["e1"]),
            e2=tuple(cfg["e2"]),
            ci_degrees=tuple(cfg["ci"]),
            ell=int(cfg["l"]),
            d=int(cfg["d"]),
            n=int(cfg.get("n", 3)),
        )
        shape = expected_resolution_aci(spec)
        print(f"// b = {spec.b}")
        print("// expected resolution (step degree rank):")
        for line in shape.lines():
            print(f"// {line}")
        summary = {
            "command": "predict",
            "kind": "aci",
            "e1": list(spec.e1),
            "e2": list(spec.e2),
            "ci": list(spec.ci_degrees),
            "l": spec.ell,
            "d": spec.d,
            "n": spec.n,
            "alpha": spec.alpha,
            "b": spec.b,
            "shape": shape.lines(),
        }
    else:
        raise ValueError("config needs either a/b/n twists or e1/e2/ci/l/d data")
    _emit(summary, out)
    return 0


# ---------------------------------------------------------------- link


def _cmd_link(args) -> int:
    log = _logger(args)
    out = _out_dir(args)
    phi = read_matrix(args.phi)
    IV = read_ideal(args.ideal, ring=phi.ring)
    print(f"// seed = {args.seed}")
    rng = Rng(args.seed)
    rec = gorenstein_link(phi, IV, args.deg, rng, log=log)
    print(f"// h(section) = {list(rec.section_report.second_series)}")
    print(f"// h(X) = {list(rec.gorenstein_report.second_series)}")
    print(f"// residual generators: {len(rec.residual.gens)}")
    summary = {
        "command": "link",
        "seed": args.seed,
        "characteristic": phi.ring.p,
        "n": phi.ring.n,
        "degree_offset": args.deg,
        "section_twist": rec.section.degree,
        "section_regular": rec.section.regular,
        "section_h": list(rec.section_report.second_series),
        "section_degree": rec.section_report.degree,
        "section_dimension": rec.section_report.affine_dimension,
        "gorenstein_h": list(rec.gorenstein_report.second_series),
        "gorenstein_degree": rec.gorenstein_report.degree,
        "gorenstein_betti": rec.betti.lines(),
        "certificate": rec.certificate.as_dict(),
        "residual_generators": _gens_strings(rec.residual),
        "residual_h": list(rec.residual_report.second_series),
    }
    if out is not None:
        write_ideal(out / "section.id", rec.section_saturated)
        write_ideal(out / "gorenstein.id", rec.gorenstein)
        write_ideal(out / "residual.id", rec.residual)
    _emit(summary, out)
    return 0


# ---------------------------------------------------------------- genbr


def _cmd_genbr(args) -> int:
    log = _logger(args)
    out = _out_dir(args)
    IG = read_ideal(args.gorenstein)
    if len(args.ci) != 3:
        raise ValueError("--ci needs exactly three degrees")
    print(f"// seed = {args.seed}")
    rng = Rng(args.seed)
    run = generalized_br_run(IG, tuple(args.ci), args.d, rng, log=log)
    if args.l is not None and run.spec.ell != args.l:
        print(
            f"forge genbr: the base resolution gives l = {run.spec.ell},"
            f" not {args.l}",
            file=sys.stderr,
        )
        return 2
    rep = run.report
    _print_hilbert_blocks(rep)
    summary = {
        "command": "genbr",
        "seed": args.seed,
        "characteristic": IG.ring.p,
        "n": IG.ring.n,
        "ci": list(run.spec.ci_degrees),
        "l": run.spec.ell,
        "d": run.spec.d,
        "alpha": run.spec.alpha,
        "b": run.spec.b,
        "aci_type": list(run.aci_type),
        "degree": rep.degree,
        "h_vector": list(rep.second_series),
        "betti": run.betti.lines(),
        "expected_shape": run.shape.lines(),
        "shape_matches": run.shape_matches,
        "ghost_pairs": sorted(
            [step, degree, count]
            for (step, degree), count in (run.ghost_cancellations or {}).items()
        ),
        "generators": _gens_strings(run.section_top),
    }
    if out is not None:
        write_ideal(out / "ci.id", run.ci)
        write_ideal(out / "linked.id", run.linked)
        write_ideal(out / "section.id", run.section.ideal)
        write_ideal(out / "top.id", run.section_top)
    _emit(summary, out)
    return 0 if run.shape_matches else 2


# ---------------------------------------------------------------- parser


def _build_parser() -> _Parser:
    parser = _Parser(prog="forge", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, seeded=True, outputs=True):
        if seeded:
            p.add_argument("--seed", type=int, required=True, help="random seed (required)")
        if outputs:
            p.add_argument("--protocol", action="store_true", help="print '//' progress lines")
            p.add_argument("--out", help="directory for intermediate objects")

    p = sub.add_parser("br", help="random kernel section and its top-dimensional part")
    p.add_argument("--t", type=int, help="matrix rows")
    p.add_argument("--r", type=int, help="kernel rank (matrix has t+r columns)")
    p.add_argument("--entry-deg", type=int, help="uniform entry degree")
    p.add_argument("--sec-deg", type=int, required=True, help="section degree above t*entry_deg")
    p.add_argument("--n", type=int, help="ambient projective dimension")
    p.add_argument("--char", type=int, help="field characteristic (default FORGE_CHAR or 32003)")
    p.add_argument("--matrix", help="use this matrix file instead of a random draw")
    p.add_argument("--verify", action="store_true", help="resolve and compare against predictions")
    common(p)
    p.set_defaults(fn=_cmd_br)

    p = sub.add_parser("section", help="random section of the kernel of a matrix")
    p.add_argument("--matrix", required=True, help="matrix file")
    p.add_argument("--deg", type=int, required=True, help="degree above the smallest kernel twist")
    common(p)
    p.set_defaults(fn=_cmd_section)

    p = sub.add_parser("top", help="top-dimensional part of a vanishing locus")
    p.add_argument("--ideal", required=True, help="ideal file")
    p.add_argument("--codim", type=int, help="codimension of the part to keep (default: the ideal's)")
    common(p)
    p.set_defaults(fn=_cmd_top)

    p = sub.add_parser("hilb", help="Hilbert series, h-vector, degree")
    p.add_argument("--ideal", required=True, help="ideal file")
    common(p, seeded=False)
    p.set_defaults(fn=_cmd_hilb)

    p = sub.add_parser("res", help="free resolution and Betti table")
    p.add_argument("--ideal", required=True, help="ideal file")
    p.add_argument("--minimal", action="store_true", help="cancel unit entries")
    common(p, seeded=False)
    p.set_defaults(fn=_cmd_res)

    p = sub.add_parser("minors", help="ideal of k x k minors")
    p.add_argument("--matrix", required=True, help="matrix file")
    p.add_argument("--size", type=int, required=True, help="minor size k")
    common(p, seeded=False)
    p.set_defaults(fn=_cmd_minors)

    p = sub.add_parser("pfaffians", help="maximal pfaffians of an odd skew matrix")
    p.add_argument("--matrix", required=True, help="matrix file")
    common(p, seeded=False)
    p.set_defaults(fn=_cmd_pfaffians)

    p = sub.add_parser("predict", help="expected degree and resolution shape from twist data")
    p.add_argument("--spec", required=True, help="config file (key = value lines or JSON)")
    common(p, seeded=False)
    p.set_defaults(fn=_cmd_predict)

    p = sub.add_parser("link", help="Gorenstein link through a fixed subscheme")
    p.add_argument("--phi", required=True, help="matrix file")
    p.add_argument("--ideal", required=True, help="ideal file of the subscheme to link")
    p.add_argument("--deg", type=int, required=True, help="coefficient degree above the smallest twist")
    common(p)
    p.set_defaults(fn=_cmd_link)

    p = sub.add_parser("genbr", help="kernel section over a codimension-3 Gorenstein base")
    p.add_argument("--gorenstein", required=True, help="ideal file of the Gorenstein base")
    p.add_argument("--ci", type=_int_list, required=True, help="complete intersection degrees d1,d2,d3")
    p.add_argument("--l", type=int, help="expected twist parameter of the base (checked)")
    p.add_argument("--d", type=int, required=True, help="module twist of the section")
    common(p)
    p.set_defaults(fn=_cmd_genbr)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ConstructionError as exc:
        print(f"forge {args.command}: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"forge {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
