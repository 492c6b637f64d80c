"""JSON serialization for the exact types and checksummed fixture files."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from pathlib import Path

from .errors import FixtureError
from .exactnum import Cyclo, rat_from_str, rat_to_str
from .mpoly import MPoly
from .ratfun import RatFun
from .diffop import LinODE


def cyclo_to_json(x: Cyclo) -> dict:
    return {"conductor": x.m, "coeffs": [rat_to_str(c) for c in x.coeffs]}


def cyclo_from_json(d: dict) -> Cyclo:
    m = int(d["conductor"])
    coeffs = [rat_from_str(s) for s in d["coeffs"]]
    den = 1
    from math import gcd
    for c in coeffs:
        den = den * c.denominator // gcd(den, c.denominator)
    return Cyclo(m, [int(c * den) for c in coeffs], den)


def mpoly_to_json(F: MPoly) -> list:
    return [{"exp": list(e), "coeff": cyclo_to_json(c)}
            for e, c in F.sorted_terms()]


def mpoly_from_json(terms: list, nvars: int = 3) -> MPoly:
    out = MPoly.zero(nvars, 1)
    for t in terms:
        c = cyclo_from_json(t["coeff"])
        out = out + MPoly.monomial(tuple(t["exp"]), c, nvars)
    return out


def ratfun_to_json(f: RatFun) -> dict:
    num, den = f.monic_pairs()
    return {"num": [rat_to_str(c) for c in num],
            "den": [rat_to_str(c) for c in den]}


def ratfun_from_json(d: dict) -> RatFun:
    return RatFun.from_coeffs([rat_from_str(s) for s in d["num"]],
                              [rat_from_str(s) for s in d["den"]])


def linode_to_json(L: LinODE) -> dict:
    return {"order": L.order, "coeffs": [ratfun_to_json(c) for c in L.coeffs]}


def linode_from_json(d: dict) -> LinODE:
    L = LinODE([ratfun_from_json(c) for c in d["coeffs"]])
    if L.order != int(d["order"]):
        raise FixtureError("operator order disagrees with coefficient count")
    return L


def canonical_dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def payload_checksum(payload) -> str:
    return hashlib.sha256(canonical_dumps(payload).encode()).hexdigest()


def wrap_fixture(payload) -> dict:
    return {"sha256": payload_checksum(payload), "payload": payload}


def load_fixture(path) -> dict:
    path = Path(path)
    if not path.exists():
        raise FixtureError(f"fixture file missing: {path}")
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as ex:
        raise FixtureError(f"fixture not valid JSON: {path}: {ex}") from ex
    if "payload" not in data or "sha256" not in data:
        raise FixtureError(f"fixture missing checksum wrapper: {path}")
    if payload_checksum(data["payload"]) != data["sha256"]:
        raise FixtureError(f"fixture checksum mismatch: {path}")
    return data["payload"]
