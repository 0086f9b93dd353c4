"""Command-line front end.

Subcommands: weights, classify, evasive, dual, construct, spectrum, verify.
Results go to stdout (or --out), diagnostics to stderr.  Exit codes: 0
success, 1 domain error (bad input or violated precondition), 2 resource or
budget error, 3 internal-consistency failure (two sides of a proven
equivalence evaluated differently, including verify-suite counterexamples).

Output is deterministic: fixed key order, no timestamps in result bodies, so
identical invocations produce byte-identical documents.  The environment
variable RANKGEO_BUDGET overrides the default enumeration budget.
"""

from __future__ import annotations

import argparse
import os
import sys

from .classify import classify_report
from .codes import (dual, generalized_weights_geometric, is_nondegenerate,
                    min_rank_distance, ZeroCode)
from .constructions import (SearchBudget, direct_sum, gabidulin,
                            near_mrd_system, pseudoregulus_system,
                            search_scattered)
from .documents import (code_from_json, code_to_json, dumps_canonical,
                        field_from_json, load_document, system_from_json,
                        system_to_json, witness_to_json)
from .errors import BudgetError, ConsistencyError, DomainError
from .linalg import DEFAULT_BUDGET
from .qsystems import (hyperplane_spectrum, is_evasive, phi, psi,
                       rank_metric_dual)
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_BUDGET = 2
EXIT_CONSISTENCY = 3


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; here that code belongs to budget
    exhaustion, so unparseable arguments are domain errors instead."""

    def error(self, message):
        self.print_usage(sys.stderr)
        raise DomainError(message)


def _default_budget() -> int:
    env = os.environ.get("RANKGEO_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise DomainError(
                f"RANKGEO_BUDGET must be an integer, got {env!r}") from None
    return DEFAULT_BUDGET


def _emit(args, obj) -> None:
    text = dumps_canonical(obj)
    if getattr(args, "format", "json") == "table":
        text = _as_table(obj)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _as_table(obj, indent: str = "") -> str:
    """Human-readable rendering derived from the same JSON structure."""
    lines = []

    def walk(prefix, value):
        if isinstance(value, dict):
            for key, sub in value.items():
                walk(f"{prefix}{key}.", sub) if isinstance(sub, dict) \
                    else lines.append((prefix + str(key), _scalar(sub)))
        else:
            lines.append((prefix.rstrip("."), _scalar(value)))

    def _scalar(v):
        if isinstance(v, list):
            return "[" + ", ".join(str(x) for x in v) + "]"
        return str(v)

    walk("", obj)
    width = max((len(k) for k, _ in lines), default=0)
    return "".join(f"{k.ljust(width)}  {v}\n" for k, v in lines)


def _load_code(args):
    return code_from_json(load_document(args.code))


def _load_system(args):
    return system_from_json(load_document(args.system))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_weights(args) -> int:
    C = _load_code(args)
    d = min_rank_distance(C, budget=args.budget)
    doc = {"n": C.n, "k": C.k, "m": C.tower.m, "q": C.tower.q, "d": d}
    if is_nondegenerate(C)[0]:
        profile = generalized_weights_geometric(C, budget=args.budget)
        doc["profile"] = list(profile)
        Cd = dual(C)
        if not isinstance(Cd, ZeroCode) and is_nondegenerate(Cd)[0]:
            doc["dual_profile"] = list(
                generalized_weights_geometric(Cd, budget=args.budget))
        else:
            doc["dual_profile"] = None
    else:
        doc["profile"] = None
        doc["dual_profile"] = None
        doc["note"] = "degenerate code: generalized weights unavailable"
    _emit(args, doc)
    return EXIT_OK


def _cmd_classify(args) -> int:
    C = _load_code(args)
    _emit(args, classify_report(C, budget=args.budget).to_json_dict())
    return EXIT_OK


def _cmd_evasive(args) -> int:
    U = _load_system(args)
    flag, wit = is_evasive(U, args.h, args.r, witness=args.witness,
                           budget=args.budget)
    doc = {"n": U.n, "k": U.k, "h": args.h, "r": args.r, "evasive": flag}
    if wit is not None:
        doc["witness"] = witness_to_json(U.tower, wit)
    _emit(args, doc)
    return EXIT_OK


def _cmd_spectrum(args) -> int:
    U = _load_system(args)
    spec = hyperplane_spectrum(U, budget=args.budget)
    doc = {"n": U.n, "k": U.k, "spectrum": list(spec),
           "max": max(spec), "d_of_psi": U.n - max(spec)}
    _emit(args, doc)
    return EXIT_OK


def _cmd_dual(args) -> int:
    if args.code:
        C = _load_code(args)
        Cd = dual(C)
        if isinstance(Cd, ZeroCode):
            _emit(args, {"zero_code": True, "n": Cd.n})
        else:
            _emit(args, code_to_json(Cd))
    else:
        U = _load_system(args)
        _emit(args, system_to_json(rank_metric_dual(U, budget=args.budget)))
    return EXIT_OK


def _cmd_construct(args) -> int:
    tower = field_from_json(load_document(args.field))
    name = args.construction
    if name == "gabidulin":
        C = gabidulin(tower, args.n, args.k)
        _emit(args, code_to_json(C))
    elif name == "pseudoregulus":
        U = pseudoregulus_system(tower, args.k, budget=args.budget)
        _emit(args, system_to_json(U))
    elif name == "near-mrd":
        U = near_mrd_system(tower, args.k, budget=args.budget)
        _emit(args, system_to_json(U))
    elif name == "direct-sum":
        codes = [code_from_json(load_document(p)) for p in args.summands]
        _emit(args, code_to_json(direct_sum(codes)))
    elif name == "search":
        budget = SearchBudget(max_candidates=args.budget,
                              max_seconds=args.max_seconds,
                              mode=args.mode, seed=args.seed)
        U = search_scattered(tower, args.k, args.h, args.n, budget)
        if U is None:
            _emit(args, {"found": False})
        else:
            doc = system_to_json(U)
            doc["found"] = True
            _emit(args, doc)
    else:  # pragma: no cover - argparse restricts choices
        raise DomainError(f"unknown construction {name!r}")
    return EXIT_OK


_SUITE_PARAM_KEYS = ("q", "m", "k", "n_min", "n_max", "seed", "count",
                     "codes", "pairs")


def _cmd_verify(args) -> int:
    params = {}
    for key in _SUITE_PARAM_KEYS:
        val = getattr(args, key.replace("-", "_"), None)
        if val is not None:
            params[key] = val
    report = run_suite(args.suite, params=params, budget=args.budget)
    _emit(args, report)
    if not report["complete"]:
        return EXIT_BUDGET
    if not report["passed"]:
        print(f"suite {args.suite}: {report['failure_count']} failing "
              f"checks", file=sys.stderr)
        return EXIT_CONSISTENCY
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="rankgeo",
                  description="invariants, classification and verification "
                              "for rank-metric codes and q-systems")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--budget", type=int, default=None,
                       help="enumeration budget (default: RANKGEO_BUDGET "
                            f"or {DEFAULT_BUDGET})")
        p.add_argument("--out", default=None, help="write result here")
        p.add_argument("--format", choices=("json", "table"),
                       default="json")

    p = sub.add_parser("weights", help="distance and weight profile")
    p.add_argument("--code", required=True)
    common(p)
    p.set_defaults(fn=_cmd_weights)

    p = sub.add_parser("classify", help="full classification report")
    p.add_argument("--code", required=True)
    common(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("evasive", help="(h,r)-evasiveness with witness")
    p.add_argument("--system", required=True)
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--witness", action="store_true",
                   help="complete the scan and report the maximum")
    common(p)
    p.set_defaults(fn=_cmd_evasive)

    p = sub.add_parser("spectrum", help="hyperplane intersection spectrum")
    p.add_argument("--system", required=True)
    common(p)
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("dual", help="dual code / rank-metric dual system")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--code")
    g.add_argument("--system")
    common(p)
    p.set_defaults(fn=_cmd_dual)

    p = sub.add_parser("construct", help="emit a constructed code/system")
    p.add_argument("construction",
                   choices=("gabidulin", "pseudoregulus", "near-mrd",
                            "direct-sum", "search"))
    p.add_argument("--field", required=True, help="field spec JSON path")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--h", type=int, default=None)
    p.add_argument("--summands", nargs="*", default=[],
                   help="code documents for direct-sum")
    p.add_argument("--mode", choices=("exhaustive", "random"),
                   default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-seconds", type=float, default=300.0)
    common(p)
    p.set_defaults(fn=_cmd_construct)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--n-min", dest="n_min", type=int, default=None)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--codes", type=int, default=None)
    p.add_argument("--pairs", type=int, default=None)
    common(p)
    p.set_defaults(fn=_cmd_verify)

    return top


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.budget is None:
            args.budget = _default_budget()
        return args.fn(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ConsistencyError as exc:
        print(f"INTERNAL CONSISTENCY FAILURE: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
