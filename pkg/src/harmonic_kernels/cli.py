"""Command-line front end: kernel printing, projection, verification suites.

Exit codes: 0 all pass, 2 usage/parse error, 3 verification failure (or a
skipped entry without --allow-skip).  Reports are JSON lines on stdout;
diagnostics go to stderr.  With a fixed --seed the report stream is
byte-identical across runs; wall-clock timings are only recorded under
--timings (which intentionally breaks byte-level determinism).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import EngineError, ParseError
from .grammar import format_polynomial, parse_polynomial
from .harmonics import kernel, proj_harmonic_complex, proj_harmonic_real, proj_symplectic
from .params import KernelParams, complex_params, real_params, symplectic_params
from .pizzetti import Caps
from .poly import degree_profile
from .variables import VariableSystem
from .verify import SUITES, GridConfig, RunConfig, run_suites

ENV_MAX_TERMS = "HK_MAX_TERMS"


def _params_from_args(args) -> KernelParams:
    if args.case == "real":
        if args.m is None or args.k is None:
            raise EngineError("real case needs --m and --k")
        return real_params(args.m, args.k)
    if args.n is None or args.p is None or args.q is None:
        raise EngineError(f"{args.case} case needs --n, --p and --q")
    if args.case == "complex":
        return complex_params(args.n, args.p, args.q)
    return symplectic_params(args.n, args.p, args.q)


def _cmd_kernel(args) -> int:
    params = _params_from_args(args)
    poly = kernel(params, args.which)
    text = format_polynomial(poly)
    if args.format == "json":
        print(json.dumps({"which": args.which, "params": params.as_json(),
                          "polynomial": text}, sort_keys=True))
    else:
        print(text)
    return 0


def _cmd_project(args) -> int:
    if args.flavor == "harmonic":
        if args.m is None:
            raise EngineError("--flavor harmonic needs --m")
        system = VariableSystem([("x", args.m, "real")])
        group = "x"
    else:
        if args.n is None:
            raise EngineError(f"--flavor {args.flavor} needs --n")
        length = args.n if args.flavor == "harmonic-complex" else 2 * args.n
        system = VariableSystem([("z", length, "complex")])
        group = "z"
    if args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input, "r", encoding="utf-8") as fh:
            text = fh.read()
    poly = parse_polynomial(text, system)
    if args.flavor == "harmonic":
        out = proj_harmonic_real(poly, group, args.ell)
    elif args.flavor == "harmonic-complex":
        out = proj_harmonic_complex(poly, group, args.ell)
    else:
        prof = degree_profile(poly, group)
        if not isinstance(prof, tuple):
            raise EngineError(f"symplectic projection needs bihomogeneous input, got {prof}")
        orientation = "Edag" if prof[0] <= prof[1] else "E"
        out = proj_symplectic(poly, group, orientation)
    print(format_polynomial(out))
    return 0


def _cmd_verify(args) -> int:
    grid_kwargs = {}
    if args.m is not None:
        grid_kwargs["real_m"] = tuple(args.m)
    if args.kmax is not None:
        grid_kwargs["real_kmax"] = args.kmax
        grid_kwargs["lemma_kmax"] = min(args.kmax, 5)
    if args.k is not None:
        grid_kwargs["k_exact"] = args.k
    if args.n is not None:
        grid_kwargs["complex_n"] = tuple(args.n)
        grid_kwargs["symp_n"] = tuple(args.n)
    if args.degmax is not None:
        grid_kwargs["complex_degmax"] = args.degmax
        grid_kwargs["symp2_degmax"] = min(args.degmax, 2)
        grid_kwargs["lemma_degmax"] = min(args.degmax, 3)
    if args.p is not None:
        grid_kwargs["p_exact"] = args.p
    if args.q is not None:
        grid_kwargs["q_exact"] = args.q
    if args.seeds is not None:
        grid_kwargs["repro_seeds"] = args.seeds
        grid_kwargs["op_seeds"] = 4 * args.seeds
    grid = GridConfig(**grid_kwargs)

    max_terms = args.max_terms
    if max_terms is None:
        env = os.environ.get(ENV_MAX_TERMS)
        if env is not None:
            max_terms = int(env)
    caps = Caps(max_terms=max_terms) if max_terms is not None else Caps()

    cfg = RunConfig(seed=args.seed, caps=caps, timings=args.timings, grid=grid)
    reports = run_suites((args.suite,), cfg, jobs=args.jobs, case=args.case)

    n_fail = n_skip = 0
    for r in reports:
        print(r.to_json_line())
        if r.status == "fail":
            n_fail += 1
        elif r.status == "skipped":
            n_skip += 1
    total = len(reports)
    print(f"verified {total} report(s): {total - n_fail - n_skip} pass, "
          f"{n_fail} fail, {n_skip} skipped", file=sys.stderr)
    if n_fail:
        return 3
    if n_skip and not args.allow_skip:
        return 3
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hk",
        description="Exact verification engine for spherical, complex and "
                    "symplectic harmonic kernels.")
    sub = ap.add_subparsers(dest="command", required=True)

    k = sub.add_parser("kernel", help="print a reproducing kernel")
    k.add_argument("--case", required=True, choices=("real", "complex", "symplectic"))
    k.add_argument("--m", type=int)
    k.add_argument("--k", type=int)
    k.add_argument("--n", type=int)
    k.add_argument("--p", type=int)
    k.add_argument("--q", type=int)
    k.add_argument("--which", required=True, choices=("Z", "K", "ZS", "KS"))
    k.add_argument("--format", default="text", choices=("text", "json"))
    k.set_defaults(func=_cmd_kernel)

    pj = sub.add_parser("project", help="project a polynomial read from a file or stdin")
    pj.add_argument("input", nargs="?", default="-",
                    help="path to the polynomial text, or '-' for stdin")
    pj.add_argument("--flavor", required=True,
                    choices=("harmonic", "harmonic-complex", "symplectic"))
    pj.add_argument("--m", type=int, help="real dimension (flavor harmonic)")
    pj.add_argument("--n", type=int,
                    help="complex dimension (harmonic-complex) or quaternionic "
                         "dimension (symplectic)")
    pj.add_argument("--ell", type=int, default=0,
                    help="harmonic component offset (default 0)")
    pj.set_defaults(func=_cmd_project)

    v = sub.add_parser("verify", help="run verification suites, JSON-lines reports on stdout")
    v.add_argument("suite", choices=("all",) + SUITES)
    v.add_argument("--case", choices=("real", "complex", "symplectic"),
                   help="restrict to one harmonic family")
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--max-terms", type=int, default=None,
                   help=f"resource cap (default from ${ENV_MAX_TERMS} or built-in)")
    v.add_argument("--allow-skip", action="store_true",
                   help="exit 0 even when entries were skipped by a cap")
    v.add_argument("--timings", action="store_true",
                   help="record wall-clock elapsed_ms (breaks byte determinism)")
    v.add_argument("--m", type=int, nargs="+", help="real dimensions grid")
    v.add_argument("--kmax", type=int, help="max real degree")
    v.add_argument("--k", type=int, help="exact real degree filter")
    v.add_argument("--n", type=int, nargs="+", help="complex/symplectic n grid")
    v.add_argument("--degmax", type=int, help="max complex bidegree")
    v.add_argument("--p", type=int, help="exact p filter")
    v.add_argument("--q", type=int, help="exact q filter")
    v.add_argument("--seeds", type=int, help="random inputs per parameter point")
    v.set_defaults(func=_cmd_verify)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
