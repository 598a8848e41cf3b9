"""Command-line entry points.

Subcommands:

* ``exact``: sample a case's exact solution to a profile CSV
* ``solve``: run a finite-volume scheme and write the final profile CSV
* ``convergence``: L1-error table over a list of grid sizes
* ``verify``: hold every built-in case's exact solution against the
  jump relations and fan invariants; exit status reflects the outcome
* ``list-cases``: show the available case names
"""

from __future__ import annotations

import argparse
import sys

from .cases import builtin_cases, get_case
from .fv import SolverKind, SpeedMode
from .harness import RunConfig, run_convergence, run_exact, run_fv, verify_all


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ssw1d",
        description="Exact and finite-volume Riemann solutions for the "
                    "shear shallow water system.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="sample an exact solution to CSV")
    p.add_argument("--case", required=True)
    p.add_argument("--time", type=float, default=None,
                   help="sample time (default: the case's final time)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--out", required=True)
    p.add_argument("--g", type=float, default=None,
                   help="override gravity")

    p = sub.add_parser("solve", help="run a scheme and write the profile")
    p.add_argument("--case", required=True)
    p.add_argument("--cells", type=int, default=200)
    p.add_argument("--order", type=int, choices=(1, 2), default=2)
    p.add_argument("--solver", choices=[s.value for s in SolverKind],
                   default=SolverKind.HLLC5.value)
    p.add_argument("--cfl", type=float, default=0.45)
    p.add_argument("--speeds", choices=[m.value for m in SpeedMode],
                   default=SpeedMode.APPROXIMATE.value)
    p.add_argument("--out", required=True)

    p = sub.add_parser("convergence", help="L1 errors over grid sizes")
    p.add_argument("--case", required=True)
    p.add_argument("--cells", type=int, nargs="+", required=True)
    p.add_argument("--order", type=int, choices=(1, 2), default=2)
    p.add_argument("--solver", choices=[s.value for s in SolverKind],
                   default=SolverKind.HLLC5.value)
    p.add_argument("--cfl", type=float, default=0.45)
    p.add_argument("--speeds", choices=[m.value for m in SpeedMode],
                   default=SpeedMode.APPROXIMATE.value)
    p.add_argument("--out", required=True)

    sub.add_parser("verify", help="check the built-in exact solutions")
    sub.add_parser("list-cases", help="print the case registry")
    return parser


def _config(args: argparse.Namespace, cells: int,
            out: str | None = None) -> RunConfig:
    return RunConfig(cells=cells,
                     order=args.order,
                     solver=SolverKind(args.solver),
                     cfl=args.cfl,
                     speed_mode=SpeedMode(args.speeds),
                     out=out)


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)

    if args.command == "list-cases":
        for case in builtin_cases():
            print(f"{case.name}: h {case.left.h:g}/{case.right.h:g}, "
                  f"t_final {case.t_final:g}")
        return 0

    if args.command == "verify":
        status = 0
        for name, failures in verify_all():
            if failures:
                status = 1
                print(f"{name}: FAIL")
                for line in failures:
                    print(f"  {line}")
            else:
                print(f"{name}: ok")
        return status

    case = get_case(args.case)
    if args.command == "exact":
        if args.g is not None:
            case = case.with_gravity(args.g)
        run_exact(case, args.samples, args.time, args.out)
        print(args.out)
        return 0

    if args.command == "solve":
        run_fv(case, _config(args, args.cells, out=args.out))
        print(args.out)
        return 0

    # convergence: the per-size configs are derived from a base config
    run_convergence(case, _config(args, cells=min(args.cells)),
                    args.cells, args.out)
    print(args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
