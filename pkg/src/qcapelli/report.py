"""Verification records and their JSON/CSV rendering."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .coefficients import LaurentPoly, RationalFunction
from .symmetric import MultiPoly

__all__ = ["VerificationReport", "serialize", "format_q", "render_json", "render_csv"]

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def _q_term(k: int, c: Fraction) -> tuple:
    if k % 2 == 0:
        e = k // 2
        mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}" if e > 0 else f"q^({e})")
    else:
        mono = f"q^({k}/2)"
    sign = "-" if c < 0 else "+"
    mag = abs(c)
    if mono and mag == 1:
        body = mono
    elif mono:
        body = f"{mag}*{mono}" if mag.denominator == 1 else f"({mag})*{mono}"
    else:
        body = str(mag)
    return sign, body


def _format_laurent_q(p: LaurentPoly) -> str:
    if not p:
        return "0"
    parts = [_q_term(k, c) for k, c in p.items()]
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def format_q(x) -> str:
    """Human-readable form in powers of ``q`` (ascending)."""
    if isinstance(x, RationalFunction):
        if x.is_laurent():
            return _format_laurent_q(x.num)
        return f"({_format_laurent_q(x.num)}) / ({_format_laurent_q(x.den)})"
    if isinstance(x, LaurentPoly):
        return _format_laurent_q(x)
    return str(x)


def serialize(x):
    """JSON-ready form; Laurent polynomials are sorted ``[exponent, "num/den"]`` pairs in ``s``."""
    if isinstance(x, RationalFunction) and x.is_laurent():
        return x.to_laurent().to_json()
    if isinstance(x, (LaurentPoly, RationalFunction, MultiPoly)):
        return x.to_json()
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, (list, tuple)):
        return [serialize(v) for v in x]
    if isinstance(x, dict):
        return {k: serialize(v) for k, v in x.items()}
    if hasattr(x, "to_json"):
        return x.to_json()
    return str(x)


@dataclass
class VerificationReport:
    claim: str
    params: dict
    status: str
    lhs: object = None
    rhs: object = None
    detail: str = ""
    seconds: float | None = None
    extra: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        d = {"claim": self.claim, "params": serialize(self.params), "status": self.status}
        if self.lhs is not None or self.status == FAIL:
            d["lhs"] = serialize(self.lhs)
            d["lhs_q"] = format_q(self.lhs)
        if self.rhs is not None or self.status == FAIL:
            d["rhs"] = serialize(self.rhs)
            d["rhs_q"] = format_q(self.rhs)
        if self.detail:
            d["detail"] = self.detail
        for k, v in self.extra.items():
            d[k] = serialize(v)
        if self.seconds is not None:
            d["seconds"] = round(self.seconds, 6)
        return d


def summary(reports) -> dict:
    out = {PASS: 0, FAIL: 0, SKIPPED: 0}
    for r in reports:
        out[r.status] += 1
    return out


def render_json(command: str, reports) -> str:
    doc = {
        "command": command,
        "summary": summary(reports),
        "records": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def render_csv(command: str, reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["claim", "params", "status", "lhs", "rhs", "detail"])
    for r in reports:
        w.writerow([
            r.claim,
            json.dumps(serialize(r.params), sort_keys=True),
            r.status,
            format_q(r.lhs) if r.lhs is not None else "",
            format_q(r.rhs) if r.rhs is not None else "",
            r.detail,
        ])
    return buf.getvalue()
