"""Command-line front end.

Subcommands: zeta, coeffs, enumerate, identify, verify, specht.
Exit codes: 0 success, 1 verification or identification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import craig, specht, verify, zeta
from .arith import is_prime
from .bounds import Bounds, ScaleError
from .exactmat import (
    LatticeBasis,
    LatticeError,
    MatrixError,
    is_scalar_multiple,
    matrix_from_json,
    matrix_to_json,
)


class ZetaInputError(ValueError):
    pass


def _bounds_from_args(args) -> Bounds:
    return Bounds(
        polytabloid_max_n=args.bound_oracle_n,
        index_enumeration_max=args.bound_index,
        spinning_max_order=args.bound_spin,
    )


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_zeta(args) -> int:
    z = zeta.global_zeta(args.n, args.d)
    if args.format == "json":
        _emit_json(z.to_json_dict())
    elif args.format == "latex":
        print(z.to_latex())
    else:
        print(z.to_text())
    return 0


def cmd_coeffs(args) -> int:
    if args.limit < 1:
        raise ZetaInputError("limit must be at least 1")
    z = zeta.global_zeta(args.n, args.d)
    table = [[m, zeta.dirichlet_coeff(z, m)] for m in range(1, args.limit + 1)]
    if args.format == "text":
        for m, a in table:
            print(f"{m}\t{a}")
    else:
        _emit_json(table)
    return 0


def cmd_enumerate(args) -> int:
    bounds = _bounds_from_args(args)
    if not is_prime(args.prime):
        raise ZetaInputError("--prime must be a prime number")
    if args.prime**args.max_exp > bounds.index_enumeration_max and args.oracle:
        raise ScaleError("enumeration-scale-exceeded: oracle range above configured bound")
    gens = specht.craig_generators(args.n)
    base = craig.craig_lattice(args.n, args.d).basis
    if not craig.is_g_stable(base, gens):
        print("requested lattice is not stable", file=sys.stderr)
        return 2
    found = craig.enumerate_p_sublattices(base, gens, args.prime, args.max_exp, bounds)
    counts = {str(e): len(found.get(e, [])) for e in range(args.max_exp + 1)}
    if args.oracle:
        for e in range(args.max_exp + 1):
            direct = craig.enumerate_index_sublattices(base, gens, args.prime**e, bounds)
            if direct != found.get(e, []):
                print(
                    f"mismatch between walk and census at exponent {e}",
                    file=sys.stderr,
                )
                return 1
    payload: dict = {"p": args.prime, "counts": counts}
    if args.with_lattices:
        payload["lattices"] = {
            str(e): craig.lattices_to_json(found.get(e, [])) for e in range(args.max_exp + 1)
        }
    if args.format == "text":
        print(" ".join(str(counts[str(e)]) for e in range(args.max_exp + 1)))
    else:
        _emit_json(payload)
    return 0


def cmd_identify(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        basis = matrix_from_json(json.load(fh))
    lat = LatticeBasis(basis)
    if lat.dim != args.n:
        raise ZetaInputError("basis dimension does not match --n")
    gens = specht.craig_generators(args.n)
    if not craig.is_g_stable(lat, gens):
        print("lattice is not stable under the action", file=sys.stderr)
        return 1
    for d in craig.divisors(args.n + 1):
        if is_scalar_multiple(craig.craig_lattice(args.n, d).basis, lat) is not None:
            if args.format == "json":
                _emit_json({"n": args.n, "d": d})
            else:
                print(d)
            return 0
    print("no stable representative matches", file=sys.stderr)
    return 1


def cmd_verify(args) -> int:
    bounds = _bounds_from_args(args)
    report = verify.run_verification(args.n_max, bounds, args.seed)
    if args.format == "text":
        for check in report["checks"]:
            mark = "pass" if check["passed"] else "FAIL"
            line = f"[{mark}] {check['name']}"
            if not check["passed"] and check["detail"]:
                line += f": {check['detail']}"
            print(line)
        arb = report["specht_factor_arbitration"]
        print(
            "Specht local factor: implemented the "
            f"{arb['implemented']} form; enumeration supports the {arb['oracle_supports']} form"
        )
        print("overall:", "pass" if report["passed"] else "FAIL")
    else:
        _emit_json(report)
    return 0 if report["passed"] else 1


def cmd_specht(args) -> int:
    bounds = _bounds_from_args(args)
    closed = specht.specht_generators_closed(args.n)
    if args.n <= bounds.polytabloid_max_n:
        oracle = specht.specht_generators_oracle(args.n, bounds)
        if oracle.mats != closed.mats:
            print("closed Specht action disagrees with the oracle", file=sys.stderr)
            return 1
    p = specht.intertwiner(closed, specht.craig_generators(args.n))
    d = specht.identify_specht_lattice(args.n, bounds)
    payload = {
        "n": args.n,
        "generators": specht.generators_to_json(closed)["generators"],
        "intertwiner": matrix_to_json(p),
        "d": d,
    }
    if args.format == "text":
        print(f"d = {d}")
        for k, m in enumerate(closed.mats, start=1):
            print(f"s_{k}: {[list(r) for r in m.entries]}")
        print(f"intertwiner: {[list(r) for r in p.entries]}")
    else:
        _emit_json(payload)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hookzeta",
        description="Sublattice counting and zeta functions for hook-module lattices "
        "of symmetric groups.",
    )
    parser.add_argument("--bound-oracle-n", type=int, default=Bounds.polytabloid_max_n)
    parser.add_argument("--bound-index", type=int, default=Bounds.index_enumeration_max)
    parser.add_argument("--bound-spin", type=int, default=Bounds.spinning_max_order)
    sub = parser.add_subparsers(dest="command", required=True)

    p_zeta = sub.add_parser("zeta", help="factored zeta function of L(d)")
    p_zeta.add_argument("--n", type=int, required=True)
    p_zeta.add_argument("--d", type=int, required=True)
    p_zeta.add_argument("--format", choices=("text", "json", "latex"), default="text")
    p_zeta.set_defaults(func=cmd_zeta)

    p_coeffs = sub.add_parser("coeffs", help="sublattice counts a(m) for m up to a limit")
    p_coeffs.add_argument("--n", type=int, required=True)
    p_coeffs.add_argument("--d", type=int, required=True)
    p_coeffs.add_argument("--limit", type=int, required=True)
    p_coeffs.add_argument("--format", choices=("text", "json"), default="json")
    p_coeffs.set_defaults(func=cmd_coeffs)

    p_enum = sub.add_parser("enumerate", help="count stable sublattices of p-power index")
    p_enum.add_argument("--n", type=int, required=True)
    p_enum.add_argument("--d", type=int, default=1)
    p_enum.add_argument("--prime", type=int, required=True)
    p_enum.add_argument("--max-exp", type=int, required=True)
    p_enum.add_argument("--oracle", action="store_true", help="cross-check against the census")
    p_enum.add_argument("--with-lattices", action="store_true")
    p_enum.add_argument("--format", choices=("text", "json"), default="json")
    p_enum.set_defaults(func=cmd_enumerate)

    p_ident = sub.add_parser("identify", help="match a stable lattice to its representative")
    p_ident.add_argument("--file", required=True)
    p_ident.add_argument("--n", type=int, required=True)
    p_ident.add_argument("--format", choices=("text", "json"), default="text")
    p_ident.set_defaults(func=cmd_identify)

    p_verify = sub.add_parser("verify", help="run the full cross-check battery")
    p_verify.add_argument("--n-max", type=int, default=5)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=cmd_verify)

    p_specht = sub.add_parser("specht", help="Specht action matrices and identification")
    p_specht.add_argument("--n", type=int, required=True)
    p_specht.add_argument("--format", choices=("text", "json"), default="json")
    p_specht.set_defaults(func=cmd_specht)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 2) < 2 or getattr(args, "n_max", 2) < 2:
        print("module dimension must be at least 2", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (zeta.ZetaError, ZetaInputError, ScaleError, MatrixError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
