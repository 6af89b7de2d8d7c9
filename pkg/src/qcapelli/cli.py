"""Command-line verification harness.

Exit status: 0 when every record passes (or is skipped), 1 when any record
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import audits
from .action import generate_module, serre_audit, weyl_dimension
from .algebra import algebra
from .coefficients import RationalFunction
from .invariants import (
    build_y,
    commutativity_check,
    eigenvalue,
    find_invariants,
    is_invariant,
    prop6_sides,
)
from .linalg import SingularSystem
from .partitions import Partition, count_partitions, enumerate_partitions, ones
from .report import FAIL, PASS, VerificationReport, render_csv, render_json
from .symmetric import (
    classical_limit,
    factorial_schur_classical,
    knop_interpolation,
    knop_residuals,
    lemma3_sides,
    lemma4_sides,
    prop4_sides,
    rhs_theorem1,
    rhs_theorem2,
)

WORKERS_ENV = "QCAPELLI_MAX_WORKERS"


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def _pmap(fn, items):
    items = list(items)
    w = _workers()
    if w == 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=w) as ex:
        return list(ex.map(fn, items))


def _timed(fn, *args):
    t0 = time.perf_counter()
    rep = fn(*args)
    rep.seconds = time.perf_counter() - t0
    return rep


# -- individual cells (top level so they can be shipped to worker processes) --

def theorem1_cell(pair):
    nu, lam = pair
    ev = RationalFunction.coerce(eigenvalue(nu, lam))
    rhs = rhs_theorem1(nu, lam)
    return VerificationReport("theorem1", {"n": len(nu), "nu": str(nu), "lambda": str(lam)},
                              _status(ev == rhs), ev, rhs)


def theorem2_cell(args):
    k, lam, with_eigen = args
    n = len(lam)
    r2 = rhs_theorem2(k, lam, n)
    r1 = rhs_theorem1(ones(k, n), lam)
    ok = r2 == r1
    extra = {}
    if with_eigen:
        ev = RationalFunction.coerce(eigenvalue(ones(k, n), lam))
        extra["eigenvalue"] = ev
        ok = ok and ev == r2
    return VerificationReport("theorem2", {"n": n, "k": k, "lambda": str(lam)},
                              _status(ok), r2, r1, extra=extra)


def _spectrum_report(nu, lam):
    rep = theorem1_cell((nu, lam))
    rep.claim = "spectrum"
    rep.extra = {"eigenvalue": rep.lhs, "theorem1_rhs": rep.rhs}
    return rep


# -- subcommands --------------------------------------------------------------

def cmd_theorem1(a):
    pairs = [(nu, lam) for nu in enumerate_partitions(a.n, a.max_nu)
             for lam in enumerate_partitions(a.n, a.max_lambda)]
    fn = theorem1_cell if not a.timing else (lambda p: _timed(theorem1_cell, p))
    return _pmap(fn, pairs) if not a.timing else [fn(p) for p in pairs]


def cmd_theorem2(a):
    out = []
    for k in range(1, a.n + 1):
        for lam in enumerate_partitions(a.n, a.max_lambda):
            out.append(theorem2_cell((k, lam, lam.weight <= a.max_lambda_eigen)))
    return out


def cmd_lemmas34(a):
    out = []
    for nu in enumerate_partitions(a.n, a.max_nu):
        if nu[-1] > 0:
            lhs, rhs = lemma3_sides(nu)
            out.append(VerificationReport("lemma3", {"n": a.n, "nu": str(nu)}, _status(lhs == rhs), lhs, rhs))
        else:
            lhs, rhs = lemma4_sides(nu)
            out.append(VerificationReport("lemma4", {"n": a.n, "nu": str(nu)}, _status(lhs == rhs), lhs, rhs))
    return out


def cmd_props(a):
    n = a.n
    alg = algebra(n)
    max_nu = a.max_nu if a.max_nu is not None else (2 if n <= 2 else 1)
    parts = enumerate_partitions(n, max_nu)
    out = []
    for i, nu in enumerate(parts):
        for mu in parts[i + 1:]:
            out.append(VerificationReport("prop2", {"n": n, "nu": str(nu), "mu": str(mu)},
                                          _status(commutativity_check(nu, mu))))
    prop6_range = [Partition(x) for x in enumerate_partitions(n, a.max_prop6) if x[-1] >= 1]
    for nu in prop6_range:
        lhs, rhs = prop6_sides(nu)
        out.append(VerificationReport("prop6", {"n": n, "nu": str(nu)}, _status(lhs == rhs),
                                      detail=f"{len(lhs)} terms"))
    for nu in parts:
        for lam in parts:
            if lam.weight <= nu.weight:
                ev = eigenvalue(nu, lam)
                ok = (not ev) if lam != nu else bool(ev)
                out.append(VerificationReport("vanishing", {"n": n, "nu": str(nu), "lambda": str(lam)},
                                              _status(ok), RationalFunction.coerce(ev)))
        out.append(VerificationReport("invariance", {"n": n, "nu": str(nu)},
                                      _status(is_invariant(build_y(nu).element))))
        dim = len(generate_module(alg, nu))
        out.append(VerificationReport("module_dimension", {"n": n, "nu": str(nu)},
                                      _status(dim == weyl_dimension(nu) ** 2),
                                      dim, weyl_dimension(nu) ** 2))
    for j in range(max_nu + 1):
        dim = len(find_invariants(n, j))
        out.append(VerificationReport("lemma1_dimension", {"n": n, "degree": j},
                                      _status(dim == count_partitions(j, n)), dim, count_partitions(j, n)))
    for d in range(a.pbw_degree + 1):
        out.append(VerificationReport("pbw", {"n": n, "degree": d}, _status(audits.pbw_audit(alg, d))))
    fails = audits.associativity_audit(alg, a.samples, a.seed)
    for name, count in fails.items():
        out.append(VerificationReport(name, {"n": n, "samples": a.samples, "seed": a.seed},
                                      _status(count == 0), detail=f"{count} failures"))
    bad = audits.relation_residuals(alg)
    out.append(VerificationReport("relations", {"n": n}, _status(not bad),
                                  detail=f"{len(bad)} nonzero residuals"))
    if a.serre_degree >= 0:
        out.append(VerificationReport("serre", {"n": n, "dmax": a.serre_degree},
                                      _status(serre_audit(alg, a.serre_degree))))
    return out


def cmd_interpolation(a):
    out = []
    qv, tv = a.q, a.t
    for lam in enumerate_partitions(a.n, a.max_lambda):
        params = {"n": a.n, "lambda": str(lam), "q": str(qv), "t": str(tv)}
        try:
            p = knop_interpolation(lam, qv, tv)
        except SingularSystem as exc:
            out.append(VerificationReport("prop3", params, FAIL, detail=f"singular system: {exc}"))
            continue
        res = knop_residuals(p, lam, qv, tv)
        ok = not any(res) and p.is_symmetric() and p.coefficient_in_m(lam) == 1
        out.append(VerificationReport("prop3", params, _status(ok), extra={"polynomial": p}))
        if a.t_equals_q:
            lhs, rhs = prop4_sides(lam)
            out.append(VerificationReport("prop4", {"n": a.n, "lambda": str(lam)},
                                          _status(lhs == rhs), extra={"lhs": lhs, "rhs": rhs}))
    return out


def cmd_spectrum(a):
    return [_spectrum_report(a.nu, a.lam)]


def cmd_limit(a):
    nu, lam = a.nu, a.lam
    params = {"n": a.n, "nu": str(nu), "lambda": str(lam)}
    if not lam.contains(nu):
        ev = eigenvalue(nu, lam)
        return [VerificationReport("limit", params, _status(not ev), detail="nu not contained in lambda; eigenvalue vanishes")]
    value = classical_limit(eigenvalue(nu, lam), nu)
    classical = factorial_schur_classical(nu, lam.shifted())
    return [VerificationReport("limit", params, _status(value == classical), extra={
        "q_to_1": value, "classical": classical})]


# -- argument parsing ----------------------------------------------------------

def _fraction(text: str) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")
    if v == 0:
        raise argparse.ArgumentTypeError("value must be nonzero")
    return v


def _partition_text(text: str) -> str:
    try:
        Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    return text


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write the report to FILE instead of stdout")
    common.add_argument("--timing", action="store_true",
                        help="record wall time per cell (reports are then not byte-stable)")

    p = argparse.ArgumentParser(prog="qcapelli", description="Exact verification of the q-analog spectral formula.")
    sub = p.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a verification grid")
    vsub = verify.add_subparsers(dest="claim", required=True)

    t1 = vsub.add_parser("theorem1", parents=[common])
    t1.add_argument("--n", type=int, required=True)
    t1.add_argument("--max-nu", type=int, default=2)
    t1.add_argument("--max-lambda", type=int, default=2)
    t1.set_defaults(func=cmd_theorem1)

    t2 = vsub.add_parser("theorem2", parents=[common])
    t2.add_argument("--n", type=int, required=True)
    t2.add_argument("--max-lambda", type=int, default=4)
    t2.add_argument("--max-lambda-eigen", type=int, default=None,
                    help="also compare eigenvalues for |lambda| up to this (default: --max-lambda)")
    t2.set_defaults(func=cmd_theorem2)

    l34 = vsub.add_parser("lemmas34", parents=[common])
    l34.add_argument("--n", type=int, required=True)
    l34.add_argument("--max-nu", type=int, default=6)
    l34.set_defaults(func=cmd_lemmas34)

    pr = vsub.add_parser("props", parents=[common])
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--max-nu", type=int, default=None)
    pr.add_argument("--max-prop6", type=int, default=None)
    pr.add_argument("--samples", type=int, default=200)
    pr.add_argument("--seed", type=int, default=0)
    pr.add_argument("--pbw-degree", type=int, default=None)
    pr.add_argument("--serre-degree", type=int, default=None)
    pr.set_defaults(func=cmd_props)

    ip = vsub.add_parser("interpolation", parents=[common])
    ip.add_argument("--n", type=int, required=True)
    ip.add_argument("--q", type=_fraction, default=Fraction(1, 2))
    ip.add_argument("--t", type=_fraction, default=Fraction(1, 3))
    ip.add_argument("--t-equals-q", action="store_true", help="also check the symbolic t = q identity")
    ip.add_argument("--max-lambda", type=int, default=3)
    ip.set_defaults(func=cmd_interpolation)

    for name, func in (("spectrum", cmd_spectrum), ("limit", cmd_limit)):
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--nu", type=_partition_text, required=True)
        sp.add_argument("--lambda", dest="lam", type=_partition_text, required=True)
        sp.set_defaults(func=func)
    return p


def _finish_args(parser, a):
    if a.n < 1:
        parser.error("--n must be positive")
    for attr in ("nu", "lam"):
        if hasattr(a, attr):
            try:
                setattr(a, attr, Partition.parse(getattr(a, attr), a.n))
            except ValueError as exc:
                parser.error(f"--{'lambda' if attr == 'lam' else attr}: {exc}")
    if getattr(a, "claim", None) == "props":
        n = a.n
        if a.max_prop6 is None:
            a.max_prop6 = 4 if n <= 2 else n
        if a.pbw_degree is None:
            a.pbw_degree = 4
        if a.serre_degree is None:
            a.serre_degree = 2 if n <= 2 else 1
    if getattr(a, "claim", None) == "theorem2" and a.max_lambda_eigen is None:
        a.max_lambda_eigen = a.max_lambda


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    _finish_args(parser, a)
    reports = a.func(a)
    if not a.timing:
        for r in reports:
            r.seconds = None
    command = " ".join([a.command] + ([a.claim] if getattr(a, "claim", None) else []))
    text = render_json(command, reports) if a.format == "json" else render_csv(command, reports)
    if a.out:
        with open(a.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if any(r.status == FAIL for r in reports) else 0


if __name__ == "__main__":
    sys.exit(main())
