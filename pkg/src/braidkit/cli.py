"""``braidkit`` command line: ``gen``, ``verify`` and ``baxterize``.

Exit status: 0 when every check passes, 1 when some check fails, 2 for a
configuration error (bad flags, unknown suite, suite/flavor mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import baxterize as bx
from .report import Report
from .scalars import format_qrat
from .suites import BUILTINS, SUITES, ConfigError, RunConfig, run_suite, symmetry_from_config
from .symmetries import SymmetryError, load_symmetry_json, make_symmetry

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


def _add_symmetry_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--symmetry", default="standard",
                   help="built-in name (flip, superflip, standard, jordan) or path to a symmetry file")
    p.add_argument("--n", type=int, default=2, help="dimension N for flip and standard")
    p.add_argument("--q", default="sym", help="'sym' for symbolic q, or a rational value such as 3/2")
    p.add_argument("--a", default="1", help="jordan parameter a (superflip: even dimension)")
    p.add_argument("--b", default="0", help="jordan parameter b (superflip: odd dimension)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidkit", description="Exact checks for braidings and braided Yangians")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a built-in symmetry to a file")
    g.add_argument("builtin", choices=BUILTINS)
    g.add_argument("params", nargs="*", help="key=value parameters, e.g. N=3 or a=1 b=0")
    g.add_argument("--out", default="symmetry.json")

    v = sub.add_parser("verify", help="run a verification suite")
    _add_symmetry_flags(v)
    v.add_argument("--suite", default="core", help="one of: " + ", ".join(SUITES))
    v.add_argument("--truncation", type=int, default=2, help="Laurent truncation K")
    v.add_argument("--fock-degree", type=int, default=4, help="Fock space truncation D")
    v.add_argument("--samples", type=int, default=None,
                   help="spectral samples per variable (default: the certified minimum)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--report", default=None, help="write the JSON report here")

    b = sub.add_parser("baxterize", help="print the current R-matrix and its certificates")
    _add_symmetry_flags(b)
    b.add_argument("--flavor", default="auto", choices=["auto", bx.RATIONAL, bx.TRIG],
                   help="expected flavor; 'auto' takes the one forced by the symmetry")
    b.add_argument("--samples", type=int, default=7, help="points per variable of the braid-relation grid")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--report", default=None, help="write the JSON report here")
    return parser


def _gen_params(builtin: str, items: list[str]) -> dict:
    out = {}
    for it in items:
        if "=" not in it:
            raise ConfigError(f"expected key=value, got {it!r}")
        k, v = it.split("=", 1)
        out[k.strip()] = v.strip()
    allowed = {"flip": {"N"}, "superflip": {"m", "n"}, "standard": {"N", "q"}, "jordan": {"a", "b"}}[builtin]
    extra = set(out) - allowed
    if extra:
        raise ConfigError(f"unknown parameter(s) {sorted(extra)} for {builtin}; allowed {sorted(allowed)}")
    missing = allowed - set(out) - {"q"}
    if missing:
        raise ConfigError(f"missing parameter(s) {sorted(missing)} for {builtin}")
    return out


def cmd_gen(args) -> int:
    sym = make_symmetry(args.builtin, **_gen_params(args.builtin, args.params))
    text = sym.dumps()
    if load_symmetry_json(json.loads(text)).dumps() != text:
        raise SymmetryError("symmetry file does not round-trip")
    Path(args.out).write_text(text + "\n")
    print(f"wrote {sym.name} to {args.out}")
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise ConfigError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    cfg = RunConfig(symmetry=args.symmetry, n=args.n, q=args.q, a=args.a, b=args.b, suite=args.suite,
                    truncation=args.truncation, fock_degree=args.fock_degree, samples=args.samples,
                    seed=args.seed, report=args.report)
    rep: Report = run_suite(cfg)
    print(f"suite {cfg.suite} on {rep.config['symmetry_name']}")
    for line in rep.summary_lines():
        print(line)
    if cfg.report:
        Path(cfg.report).write_text(rep.dumps() + "\n")
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_baxterize(args) -> int:
    cfg = RunConfig(symmetry=args.symmetry, n=args.n, q=args.q, a=args.a, b=args.b, suite="baxterize",
                    samples=args.samples, seed=args.seed)
    sym = symmetry_from_config(cfg)
    cr = bx.baxterize(sym)
    if args.flavor not in ("auto", cr.flavor):
        raise ConfigError(f"{sym.name} is {sym.kind}: its flavor is {cr.flavor}, not {args.flavor}")
    print(f"{sym.name}: {sym.kind}, flavor {cr.flavor}, {cr.description}")
    cert = bx.certify_param_ybe(cr, n=args.samples, seed=args.seed)
    print(f"braid relation on {cert.points_checked} points: {'pass' if cert.passed else 'FAIL'}")
    un, _ = bx.unitarity_and_normalize(cr, seed=args.seed)
    print(f"R(u,v)R(v,u) = phi I: {'pass' if un.phi_ok else 'FAIL'}; normalized unitarity: "
          f"{'pass' if un.normalized_ok else 'FAIL'}")
    print("phi(2, 1/3) =", format_qrat(cr.phi(Fraction(2), Fraction(1, 3))))
    if args.report:
        rep = Report(config={**cfg.canonical(), "symmetry_name": sym.name, "flavor": cr.flavor, "g": cr.description})
        rep.run("baxterize.param_ybe", "spectral braid relation for R(u,v) = R + g(u,v) I",
                lambda: {"passed": cert.passed, "points": cert.points_checked, "grid": cert.grid_sizes,
                         "counterexample": cert.first_failure})
        rep.run("baxterize.unitarity", "R(u,v)R(v,u) = phi(u,v) I and the normalized R-matrix is unitary",
                un.as_dict)
        Path(args.report).write_text(rep.dumps() + "\n")
    return EXIT_OK if cert.passed and un.passed else EXIT_FAIL


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "verify":
            return cmd_verify(args)
        return cmd_baxterize(args)
    except (ConfigError, SymmetryError, FileNotFoundError, ValueError) as e:
        print(f"braidkit: configuration error: {e}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
