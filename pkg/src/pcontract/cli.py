"""Command line interface.

Exit codes: 0 confirmed, 1 usage error, 2 incomplete (a bound was not reached
or a resource ceiling was hit), 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
import time
from pathlib import Path

from . import __version__
from .charring import weights_with_dim_at_most
from .chevalley import ParabolicContraction
from .hwmod import chevalley_for
from .irrep import DEFAULT_DIM_CEILING, ResourceError
from .report import (
    describe_report,
    dumps,
    hwmod_report,
    lower_bound_report,
    orbits_report,
    render_text,
    verify_report,
)
from .rootsys import (
    ConfigurationError,
    ConsistencyError,
    DomainError,
    SimpleType,
    build_root_system,
    linear_deg,
    parse_subset,
    parse_weight,
)
from .syinv import DEFAULT_MAX_DEGREE

EXIT_OK, EXIT_USAGE, EXIT_INCOMPLETE, EXIT_INCONSISTENT = 0, 1, 2, 3

log = logging.getLogger("pcontract")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser, needs_type: bool = True):
    p.add_argument("--type", required=needs_type, help="simple type, e.g. A2, B3, G2")
    p.add_argument("--pi-prime", default="", help="Levi simple roots, 1-based, comma separated (empty for the Borel)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--output", type=Path, help="write the report here instead of stdout")
    p.add_argument("--figures", type=Path, metavar="DIR", help="also render figures into DIR")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled checks (results are exact)")
    p.add_argument("-v", "--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pcontract", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("describe", help="root data, parabolic split and contraction checks")
    _common(p)

    p = sub.add_parser("orbits", help="orbit data and the semigroup freeness check")
    _common(p)
    p.add_argument("--trunc", type=int, help="deg cutoff for the semigroup check (default 2 deg rho)")

    p = sub.add_parser("lower-bound", help="truncated lower-bound character")
    _common(p)
    p.add_argument("--trunc", type=int, required=True)

    p = sub.add_parser("verify", help="search for semi-invariants matching the lower bound")
    _common(p)
    p.add_argument("--trunc", type=int, required=True)
    p.add_argument("--max-degree", type=int, default=DEFAULT_MAX_DEGREE)
    p.add_argument("--no-full-character", dest="full_character", action="store_false",
                   help="skip the full character comparison")

    p = sub.add_parser("hwmod", help="PBW filtration and matrix-coefficient invariants of V(lambda)")
    _common(p)
    p.add_argument("--lambda", dest="lam", required=True, help="dominant weight in fundamental coordinates")
    p.add_argument("--dim-ceiling", type=int, default=DEFAULT_DIM_CEILING)

    p = sub.add_parser("selftest", help="quick consistency battery on small types")
    _common(p, needs_type=False)
    p.add_argument("--dim-ceiling", type=int, default=60)
    return parser


def _contraction(args) -> ParabolicContraction:
    st = SimpleType.parse(args.type)
    rs = build_root_system(st)
    pp = parse_subset(args.pi_prime, rs.rank)
    return ParabolicContraction(chevalley_for(rs), pp)


def _emit(args, report: dict):
    text = dumps(report) if args.format == "json" else render_text(report)
    if args.output:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    if args.figures:
        from .figures import write_figures

        for path in write_figures(report, args.figures):
            log.info("wrote %s", path)


def _check_trunc(args):
    if getattr(args, "trunc", None) is not None and args.trunc < 0:
        raise ConfigurationError("--trunc must be nonnegative")
    if getattr(args, "max_degree", None) is not None and args.max_degree < 0:
        raise ConfigurationError("--max-degree must be nonnegative")


def cmd_describe(args) -> int:
    rep = describe_report(_contraction(args))
    _emit(args, rep)
    return EXIT_INCONSISTENT if any(rep["checks"][k] for k in rep["checks"] if k != "m_m_brackets_in_p") else EXIT_OK


def cmd_orbits(args) -> int:
    rep = orbits_report(_contraction(args), args.trunc)
    _emit(args, rep)
    return EXIT_OK if rep["semigroup_check"]["free"] else EXIT_INCONSISTENT


def cmd_lower_bound(args) -> int:
    _emit(args, lower_bound_report(_contraction(args), args.trunc))
    return EXIT_OK


def cmd_verify(args) -> int:
    P = _contraction(args)
    t0 = time.perf_counter()
    rep = verify_report(P, args.trunc, args.max_degree, args.full_character,
                        progress=lambda k: log.info("degree %d", k))
    log.info("verify finished in %.2fs", time.perf_counter() - t0)
    _emit(args, rep)
    cc = rep.get("character_comparison")
    if cc is not None and rep["status"] == "confirmed" and not cc["lower_bound_leq_found"]:
        return EXIT_INCONSISTENT
    return EXIT_OK if rep["status"] == "confirmed" else EXIT_INCOMPLETE


def cmd_hwmod(args) -> int:
    P = _contraction(args)
    lam = parse_weight(args.lam, P.rs.rank)
    rep = hwmod_report(P, lam, args.dim_ceiling)
    _emit(args, rep)
    return EXIT_OK if rep["consistent"] else EXIT_INCONSISTENT


SELFTEST_CASES = [("A1", ""), ("A2", ""), ("A2", "1"), ("B2", "1"), ("B2", "2")]


def cmd_selftest(args) -> int:
    rng = random.Random(args.seed)
    cases = [(args.type, args.pi_prime)] if args.type else SELFTEST_CASES
    results = []
    for t, pp in cases:
        ns = argparse.Namespace(type=t, pi_prime=pp)
        P = _contraction(ns)
        rs = P.rs
        d = describe_report(P)
        results.append((f"{t}/{{{pp}}} contraction checks",
                        all(v == 0 for k, v in d["checks"].items() if k != "m_m_brackets_in_p")))
        o = orbits_report(P)
        results.append((f"{t}/{{{pp}}} semigroup free", o["semigroup_check"]["free"]))
        trunc = 2 * linear_deg(rs, rs.rho)
        v = verify_report(P, trunc, DEFAULT_MAX_DEGREE)
        results.append((f"{t}/{{{pp}}} lower bound confirmed to deg {trunc}", v["status"] == "confirmed"))
        pool = weights_with_dim_at_most(rs, args.dim_ceiling)
        for lam in rng.sample(pool, min(3, len(pool))):
            h = hwmod_report(P, lam, args.dim_ceiling)
            results.append((f"{t}/{{{pp}}} hwmod lambda={lam}", h["consistent"]))
    report = {
        "schema_version": 1,
        "kind": "selftest",
        "seed": args.seed,
        "results": [{"check": name, "passed": bool(ok)} for name, ok in results],
        "passed": all(ok for _, ok in results),
    }
    if args.format == "json":
        text = dumps(report)
    else:
        text = "".join(f"{'PASS' if ok else 'FAIL'}\t{name}\n" for name, ok in results)
    if args.output:
        args.output.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report["passed"] else EXIT_INCONSISTENT


COMMANDS = {
    "describe": cmd_describe,
    "orbits": cmd_orbits,
    "lower-bound": cmd_lower_bound,
    "verify": cmd_verify,
    "hwmod": cmd_hwmod,
    "selftest": cmd_selftest,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        _check_trunc(args)
        return COMMANDS[args.command](args)
    except (ConfigurationError, DomainError) as exc:
        print(f"pcontract: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as exc:
        print(f"pcontract: incomplete: {exc}", file=sys.stderr)
        return EXIT_INCOMPLETE
    except (ConsistencyError, AssertionError) as exc:
        print(f"pcontract: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
