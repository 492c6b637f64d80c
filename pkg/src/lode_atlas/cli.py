"""Command-line interface: exact verification reports as deterministic JSON.

Exit codes: 0 when every requested check passes, 1 on any check failure,
2 on usage errors."""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog, pipeline
from .diffop import LinODE
from .errors import LodeAtlasError, NoHypergeometricStandard
from .groups import GROUP_ALIASES, GroupId, catalog_generators, closure, molien
from .serialize import linode_from_json, linode_to_json, load_fixture, ratfun_to_json, wrap_fixture
from .sympow import symmetric_power
from .ratsol import rational_solutions


def _group_id(s: str) -> GroupId:
    key = s.lower().replace("_", "").replace("-", "")
    if key not in GROUP_ALIASES:
        raise argparse.ArgumentTypeError(f"unknown group id {s!r}")
    return GROUP_ALIASES[key]


def _emit(payload, as_json: bool) -> None:
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    if as_json:
        sys.stdout.write(text + "\n")
        return
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=1) + "\n")


def _report_ok(payload) -> bool:
    if isinstance(payload, dict):
        if payload.get("ok") is False:
            return False
        return all(_report_ok(v) for v in payload.values())
    if isinstance(payload, list):
        return all(_report_ok(v) for v in payload)
    return True


def _load_operator(path: str) -> LinODE:
    data = load_fixture(path)
    if "operator" in data:
        data = data["operator"]
    return linode_from_json(data)


def main(argv=None) -> int:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="compact machine-readable output")
    common.add_argument("--fixtures", metavar="DIR",
                        help="override the packaged fixture directory")
    parser = argparse.ArgumentParser(
        prog="lode-atlas", parents=[common],
        description="Exact catalog and verification of the finite primitive "
                    "SL3 groups, their invariant rings, and the "
                    "hypergeometric standard operators")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    p = add_parser("group", help="order / projective order / SL3 check")
    p.add_argument("--id", type=_group_id, required=True)
    p.add_argument("--report", default="order,projective-order,sl3-check")

    p = add_parser("invariants", help="invariant-ring data and syzygies")
    p.add_argument("--group", type=_group_id, required=True)
    p.add_argument("--verify", default="all")

    p = add_parser("molien", help="invariant dimensions by degree")
    p.add_argument("--group", type=_group_id, required=True)
    p.add_argument("--up-to", type=int, default=12)

    p = add_parser("sympower", help="symmetric power of an operator")
    p.add_argument("--op", required=True, metavar="FILE")
    p.add_argument("--power", "-d", type=int, required=True)

    p = add_parser("ratsols", help="rational solutions of an operator")
    p.add_argument("--op", required=True, metavar="FILE")
    p.add_argument("--sympower", type=int, default=None)

    p = add_parser("verify-standard", help="checks for one standard equation")
    p.add_argument("--group", type=_group_id, required=True)
    p.add_argument("--checks", default="series,product,square,curve")
    p.add_argument("--unit-exact", action="store_true",
                   help="force the exact symmetric-power unit check")

    add_parser("verify-example", help="the worked pullback example")
    add_parser("closed-form", help="inverse gauge and closed-form compare")
    p = add_parser("verify-all", help="whole-catalog verification")
    p.add_argument("--heavy", action="store_true",
                   help="include the unit-invariant symmetric powers")

    args = parser.parse_args(argv)
    if args.fixtures:
        catalog.set_fixture_dir(args.fixtures)
    try:
        payload = _dispatch(args)
    except NoHypergeometricStandard as ex:
        _emit({"ok": False, "error": "NoHypergeometricStandard",
               "message": str(ex)}, args.json)
        return 1
    except LodeAtlasError as ex:
        _emit({"ok": False, "error": type(ex).__name__, "message": str(ex)},
              args.json)
        return 1
    _emit(payload, args.json)
    return 0 if _report_ok(payload) else 1


def _dispatch(args):
    if args.command == "group":
        rep = pipeline.group_report(args.id)
        wanted = {w.strip() for w in args.report.split(",")}
        key_map = {"order": "order", "projective-order": "projective_order",
                   "sl3-check": "sl3"}
        out = {"group": rep["group"]}
        for w in wanted:
            if w not in key_map:
                raise LodeAtlasError(f"unknown report field {w!r}")
            out[key_map[w]] = rep[key_map[w]]
        return out
    if args.command == "invariants":
        return pipeline.invariants_report(args.group, args.verify)
    if args.command == "molien":
        g = closure(catalog_generators(args.group))
        return {"group": args.group.value, "up_to": args.up_to,
                "dims": molien(g, args.up_to)}
    if args.command == "sympower":
        L = _load_operator(args.op)
        S = symmetric_power(L, args.power)
        return {"order": S.order, "operator": linode_to_json(S)}
    if args.command == "ratsols":
        L = _load_operator(args.op)
        base = None
        if args.sympower:
            base = L
            L = symmetric_power(L, args.sympower)
        pole_free = (catalog._pole_free_factors(L, base) if base is not None
                     else ())
        sols = rational_solutions(L, pole_free=pole_free)
        return {"dim": len(sols), "basis": [ratfun_to_json(s) for s in sols]}
    if args.command == "verify-standard":
        eq = catalog.standard_equation(args.group)
        checks = tuple(c.strip() for c in args.checks.split(","))
        return catalog.verify_standard(eq, checks,
                                       unit_exact=True if args.unit_exact else None)
    if args.command == "verify-example":
        return pipeline.verify_example()
    if args.command == "closed-form":
        report, _ = pipeline.closed_form()
        return report
    if args.command == "verify-all":
        return verify_all(heavy=args.heavy)
    raise AssertionError(args.command)


def verify_all(heavy: bool = False) -> dict:
    groups = [pipeline.group_report(g) for g in GroupId]
    expected = {"g168": (168, 168), "g168xc3": (504, 168), "h216": (648, 216),
                "h72": (216, 72), "f36": (108, 36), "a6": (1080, 360),
                "a5": (60, 60), "a5xc3": (180, 60)}
    for rep in groups:
        want = expected[rep["group"]]
        rep["ok"] = (rep["order"], rep["projective_order"]) == want and rep["sl3"]
    invs = [pipeline.invariants_report(g) for g in
            (GroupId.G168, GroupId.F36SL3, GroupId.H72SL3, GroupId.H216SL3,
             GroupId.A6SL3, GroupId.A5)]
    standards = []
    for gid in (GroupId.G168, GroupId.H216SL3, GroupId.F36SL3,
                GroupId.A6SL3, GroupId.A5):
        eq = catalog.standard_equation(gid)
        checks = ("series", "product", "square", "curve", "unit") if heavy \
            else ("series", "product", "square")
        standards.append(catalog.verify_standard(eq, checks))
    example = pipeline.verify_example()
    closed, _ = pipeline.closed_form()
    out = {"groups": groups, "invariants": invs, "standards": standards,
           "example": example, "closed_form": closed}
    if heavy:
        out["invariant_values"] = pipeline.invariant_value_checks()
        out["hauptmodul_degree14"] = pipeline.hauptmodul_membership()
    out["known_transcription_defects"] = [
        "h216 series-residual (printed operator; rederived alternative passes)",
        "closed-form-single-global-scalar (three exact but unequal bracket "
        "constants; the constant-term bracket matches the recorded global "
        "constant)",
        "invariants f36 syzygy T24 (printed reading; homogeneous-corrected "
        "reading passes)",
    ]
    out["ok"] = _report_ok(out)
    return out


if __name__ == "__main__":
    sys.exit(main())
