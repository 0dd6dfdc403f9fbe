"""Command-line front end.

Commands: check (one predicate against a ring-spec file), verify-paper
(the named suite), search (counterexample hunt), describe (ring
metadata).  Exit status: 0 when the property holds or the query
succeeds, 1 when it fails, 2 on errors or exceeded caps.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import semirings
from .ideals import idempotents
from .predicates import (CE_ORDER_CAP, center, central_idempotents, is_centrally_essential,
                         is_centrally_rational, is_commutative, is_essential_right_ideal,
                         is_reduced, is_semiprime, is_strongly_bounded, minimal_right_ideals)
from .ideals import generated_ideal
from .reports import CheckResult, Report
from .rings import CapExceeded, Ring, RingError
from .semirings import Semiring
from .specdoc import SpecError, normalize, parse_ring_spec, preset_names, serialize_ring_spec
from .suite import search_nilpotent_minimal_ideals, verify_paper

ENV_CAP = "RINGLAB_CAP"

PROPERTIES = ("center", "ce", "essential", "semiprime", "reduced", "centrally-rational",
              "strongly-bounded", "idempotents", "minimal-right-ideals", "semisubtractive")


def _default_cap() -> int:
    value = os.environ.get(ENV_CAP)
    if value:
        try:
            return int(value)
        except ValueError:
            raise SpecError(f"{ENV_CAP} must be an integer, got {value!r}")
    return CE_ORDER_CAP


def _load_spec(path: str):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _emit(report: Report, fmt: str):
    if fmt == "machine":
        print(report.to_machine())
    else:
        print(report.to_text())


def _run_check(args) -> int:
    obj = parse_ring_spec(_load_spec(args.spec))
    cap = args.cap or _default_cap()
    prop = args.property
    if isinstance(obj, Semiring):
        return _run_semiring_check(obj, prop, args)
    result = None
    if prop == "center":
        sub = center(obj)
        result = CheckResult("center", True, examined=obj.order,
                             detail=f"center order {len(sub)} in ring of order {obj.order}")
    elif prop == "ce":
        candidates = None
        if args.candidate:
            candidates = [json.loads(c) for c in args.candidate]
        if args.mode == "refute" and candidates is None:
            raise CapExceeded("refute mode needs at least one --candidate")
        cert = is_centrally_essential(obj, variant=args.variant, cap=cap,
                                      candidates=candidates)
        result = _cert_result("centrally-essential", cert)
    elif prop == "essential":
        if not args.ideal:
            raise SpecError("essential needs --ideal with a JSON list of generators")
        gens = [obj.element(tuple(g) if isinstance(g, list) else g)
                for g in json.loads(args.ideal)]
        sub = generated_ideal(obj, gens, "right")
        cert = is_essential_right_ideal(obj, sub)
        result = _cert_result("essential", cert)
    elif prop == "semiprime":
        result = _cert_result("semiprime", is_semiprime(obj))
    elif prop == "reduced":
        result = _cert_result("reduced", is_reduced(obj))
    elif prop == "centrally-rational":
        result = _cert_result("centrally-rational", is_centrally_rational(obj))
    elif prop == "strongly-bounded":
        result = _cert_result("strongly-bounded", is_strongly_bounded(obj))
    elif prop == "idempotents":
        idem = idempotents(obj, cap=cap)
        central = central_idempotents(obj, cap=cap)
        result = CheckResult("idempotents", True, examined=obj.order,
                             detail=f"{len(idem)} idempotents, {len(central)} central")
    elif prop == "minimal-right-ideals":
        records = minimal_right_ideals(obj)
        kinds = ", ".join(f"order {len(r.subgroup)} "
                          f"({'nilpotent' if r.nilpotent else 'non-nilpotent'}"
                          f"{', central' if r.central else ''})" for r in records)
        result = CheckResult("minimal-right-ideals", True, examined=obj.order,
                             detail=kinds or "none")
    elif prop == "semisubtractive":
        raise SpecError("semisubtractive applies to semirings")
    report = Report(f"check {prop}", [result])
    _emit(report, args.format)
    return 0 if result.passed else 1


def _run_semiring_check(s: Semiring, prop: str, args) -> int:
    if prop == "center":
        c = semirings.semiring_center(s)
        result = CheckResult("center", True, examined=s.order,
                             detail=f"center order {len(c)}: "
                                    f"{{{', '.join(s.label(x) for x in c)}}}")
    elif prop == "ce":
        result = _cert_result("centrally-essential", semirings.is_ce_semiring(s))
    elif prop == "semisubtractive":
        result = _cert_result("semisubtractive", semirings.is_semisubtractive(s))
    else:
        raise SpecError(f"property {prop!r} is not defined for semirings")
    _emit(Report(f"check {prop}", [result]), args.format)
    return 0 if result.passed else 1


def _cert_result(name: str, cert) -> CheckResult:
    witness = f"; witness {cert.witness}" if cert.witness and not cert.verdict else ""
    return CheckResult(name, cert.verdict, verdict=cert.verdict,
                       certificates=[{"target": None, "certificate": cert.to_dict()}],
                       examined=cert.examined,
                       detail=f"{cert.mode} scan{witness}")


def _run_describe(args) -> int:
    obj = parse_ring_spec(_load_spec(args.spec))
    if isinstance(obj, Semiring):
        c = semirings.semiring_center(obj)
        print(f"semiring {obj.name}: order {obj.order}, "
              f"{'unital' if obj.unital else 'non-unital'}, center order {len(c)}")
        return 0
    sub = center(obj)
    kind = "unital" if obj.unital else "non-unital"
    print(f"ring {obj.name}: order {obj.order}, characteristic {obj.characteristic}, "
          f"{kind}, center order {len(sub)}")
    return 0


def _run_verify_paper(args) -> int:
    report = verify_paper(filter_substring=args.filter, parallel=args.parallel)
    _emit(report, args.format)
    return 0 if report.ok else 1


def _run_search(args) -> int:
    report = search_nilpotent_minimal_ideals(args.family, max_order=args.max_order)
    _emit(report, args.format)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ringlab",
        description="finite rings, semirings, and their central essentiality")
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run one predicate against a ring-spec file")
    p_check.add_argument("property", choices=PROPERTIES)
    p_check.add_argument("spec", help="path to a JSON ring-spec document, or - for stdin")
    p_check.add_argument("--mode", choices=("exhaustive", "refute"), default="exhaustive")
    p_check.add_argument("--variant", choices=("nonunital", "unital"), default="nonunital")
    p_check.add_argument("--cap", type=int, default=None,
                         help=f"element cap (default {CE_ORDER_CAP}, or ${ENV_CAP})")
    p_check.add_argument("--candidate", action="append", default=[],
                         help="JSON element vector to try as a refutation candidate")
    p_check.add_argument("--ideal", help="JSON list of right-ideal generators (essential)")
    p_check.add_argument("--parallel", type=int, default=1)
    p_check.add_argument("--format", choices=("text", "machine"), default="text")

    p_paper = sub.add_parser("verify-paper", help="run the bundled named suite")
    p_paper.add_argument("--filter", default=None, help="substring filter on check names")
    p_paper.add_argument("--parallel", type=int, default=1)
    p_paper.add_argument("--format", choices=("text", "machine"), default="text")

    p_search = sub.add_parser("search", help="hunt for non-central nilpotent minimal ideals")
    p_search.add_argument("--family", default="corpus",
                          choices=("zn", "znq8", "quaternion", "corpus"))
    p_search.add_argument("--max-order", type=int, default=4096)
    p_search.add_argument("--format", choices=("text", "machine"), default="text")

    p_desc = sub.add_parser("describe", help="print ring metadata")
    p_desc.add_argument("spec")

    p_presets = sub.add_parser("presets", help="list the built-in preset names")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "check":
            return _run_check(args)
        if args.command == "verify-paper":
            return _run_verify_paper(args)
        if args.command == "search":
            return _run_search(args)
        if args.command == "describe":
            return _run_describe(args)
        if args.command == "presets":
            for name in preset_names():
                print(name)
            return 0
    except (CapExceeded,) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return 2
    except (SpecError, RingError, OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
