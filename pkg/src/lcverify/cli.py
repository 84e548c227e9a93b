"""Command-line front end.

Subcommands: ``verify-all`` (the whole check suite), ``tower`` (build one
root-adjunction tower and print its certificates), ``cohomology`` (dimension
tables over a degree window), and ``member`` (ad-hoc ideal membership against
a presentation file).

Output is deterministic: identical configuration produces byte-identical JSON
apart from the top-level "timings" object.  Exit codes: 0 all checks passed,
1 a check failed, 2 configuration error, 3 resource budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import cohomology, verifiers
from .groebner import BudgetExceeded, DEFAULT_BUDGET
from .linalg import PieceTooLarge
from .presentations import PresentationError, load_presentation, present_ring
from .ring import ParseError


class ConfigError(ValueError):
    pass


def _frac(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"bad rational {text!r}") from e


def _parse_alphas(text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ConfigError("need exactly 4 alphas")
    alphas = tuple(_frac(p) for p in parts)
    if len(set(alphas)) != 4:
        raise ConfigError("alphas not distinct")
    return alphas


def _parse_window(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ConfigError(f"bad window {text!r} (expected LO..HI)")
    lo, hi = _frac(lo), _frac(hi)
    if hi < lo:
        raise ConfigError("empty window")
    return lo, hi


def _fmt_q(q):
    return str(Fraction(q))


def _report_json(rep):
    cert = None
    if rep.certificate is not None:
        cert = [[str(q), i] for i, q in rep.certificate.nonzero_entries()]
    return {
        "check": rep.check,
        "status": rep.status,
        "degrees": [_fmt_q(d) for d in rep.degrees],
        "witness": None if rep.witness is None else str(rep.witness),
        "certificate": cert,
        "stats": rep.stats,
        "detail": rep.detail,
    }


def _emit(payload, reports, cfg):
    out = sys.stdout
    if cfg.out:
        out = open(cfg.out, "w")
    try:
        if cfg.format == "json":
            json.dump(payload, out, indent=2, sort_keys=True)
            out.write("\n")
        else:
            for line in payload.get("lines", []):
                out.write(line + "\n")
    finally:
        if cfg.out:
            out.close()


def _text_lines(reports):
    lines = []
    for rep in reports:
        lines.append(f"{rep.status:<4} {rep.check} ({rep.timing_ms:.0f} ms)")
        if rep.status == "FAIL":
            if rep.witness is not None:
                lines.append(f"     witness: {rep.witness}")
            if rep.detail:
                lines.append(f"     detail: {rep.detail}")
    npass = sum(r.status == "PASS" for r in reports)
    nfail = sum(r.status == "FAIL" for r in reports)
    lines.append(f"{npass} passed, {nfail} failed, "
                 f"{len(reports) - npass - nfail} skipped")
    return lines


def _finish(reports, cfg):
    payload = {
        "checks": [_report_json(r) for r in reports],
        "timings": {r.check: round(r.timing_ms, 3) for r in reports},
        "lines": _text_lines(reports),
    }
    if cfg.format == "json":
        payload.pop("lines")
    _emit(payload, reports, cfg)
    return 1 if any(r.status == "FAIL" for r in reports) else 0


def cmd_verify_all(cfg):
    reports = verifiers.run_all(depth=cfg.depth, alphas=cfg.alphas,
                                budget_limit=cfg.budget)
    return _finish(reports, cfg)


def cmd_tower(cfg):
    if cfg.depth < 1:
        raise ConfigError("depth must be >= 1")
    partial = []
    budget_hit = None
    try:
        if cfg.target == "ex1":
            certs = verifiers.run_ex1_tower(cfg.depth, cfg.alphas, cfg.budget)
        else:
            certs = verifiers.run_ex2_tower(cfg.depth, cfg.budget)
        partial = certs
    except BudgetExceeded as e:
        budget_hit = e
    levels = []
    for k, c in enumerate(partial, 1):
        levels.append({
            "level": k,
            "u": str(c.u),
            "eps": _fmt_q(c.epsilon),
            "ring_vars": [[n, _fmt_q(d)] for n, d in
                          zip(c.level.ring.names, c.level.ring.degrees)],
            "certificate_terms": sum(len(q.terms) for q in
                                     c.result.certificate.cofactors),
        })
    payload = {"tower": cfg.target, "levels": levels,
               "budget_exceeded": budget_hit is not None,
               "timings": {}}
    if cfg.format == "json":
        _emit(payload, [], cfg)
    else:
        lines = [f"level {lv['level']}: u = {lv['u']}, eps = {lv['eps']}"
                 for lv in levels]
        if budget_hit:
            lines.append(f"budget exceeded after level {len(levels)}")
        _emit({"lines": lines}, [], cfg)
    return 3 if budget_hit else 0


RING_IDS = ("ex1A", "ex2A", "B", "ex1R", "ex2R")


def cmd_cohomology(cfg):
    if cfg.ring not in RING_IDS:
        raise ConfigError(f"unknown ring {cfg.ring!r}")
    lo, hi = cfg.window
    degrees = []
    d = lo
    while d <= hi:
        degrees.append(d)
        d += 1
    data = {
        "ex1A": cohomology.HypersurfaceDatum(1, 1, 2, 2, "ex1.A"),
        "ex2A": cohomology.HypersurfaceDatum(1, 1, 1, 3, "ex2.A"),
        "B": cohomology.HypersurfaceDatum(1, 1, 1, 1, "B"),
    }
    tables = {}
    if cfg.ring in data:
        H = data[cfg.ring]
        tables["hilbert"] = {_fmt_q(d): cohomology.hilbert_dim(H, d) for d in degrees}
        tables["h2_free_basis"] = {_fmt_q(d): cohomology.h2_dim_free_basis(H, d)
                                   for d in degrees}
        tables["h2_duality"] = {_fmt_q(d): cohomology.h2_dim_duality(H, d)
                                for d in degrees}
    else:
        A = data["ex1A"] if cfg.ring == "ex1R" else data["ex2A"]
        B = data["B"]
        tables["hilbert"] = {_fmt_q(d): cohomology.segre_hilbert_dim(A, B, d)
                             for d in degrees}
        kt = cohomology.kunneth_h2(A, B, degrees)
        tables["h2_kunneth"] = {_fmt_q(d): v for d, v in kt.pairs()}
    payload = {"ring": cfg.ring, "window": [_fmt_q(lo), _fmt_q(hi)],
               "tables": tables, "timings": {}}
    if cfg.format == "json":
        _emit(payload, [], cfg)
    else:
        lines = []
        for name, tab in tables.items():
            row = "  ".join(f"{d}:{v}" for d, v in tab.items())
            lines.append(f"{name}: {row}")
        _emit({"lines": lines}, [], cfg)
    return 0


def cmd_member(cfg):
    text = open(cfg.presentation).read()
    P = load_presentation(text, budget_limit=cfg.budget)
    f = P.ring.parse(cfg.element)
    gens = [P.ring.parse(g) for g in cfg.ideal.split(",")] if cfg.ideal else []
    res = P.member(f, gens)
    payload = {
        "presentation": P.label,
        "element": str(f),
        "ideal": [str(g) for g in gens],
        "inside": res.inside,
        "witness": None if res.inside else str(res.witness),
        "certificate": None if not res.inside else
            [[str(q), i] for i, q in res.certificate.nonzero_entries()],
        "timings": {},
    }
    if cfg.format == "json":
        _emit(payload, [], cfg)
    else:
        verdict = "IN" if res.inside else f"OUT (witness: {res.witness})"
        _emit({"lines": [f"{f} in ({cfg.ideal}) + relations: {verdict}"]}, [], cfg)
    return 0


def _common_flags(p, top=False):
    # accepted both before and after the subcommand; the subcommand copy wins
    kw = {} if top else {"default": argparse.SUPPRESS}
    p.add_argument("--format", choices=("text", "json"),
                   **({"default": "text"} if top else kw))
    p.add_argument("--out", help="write the report to a file",
                   **({"default": None} if top else kw))
    p.add_argument("--budget", type=int,
                   help="Groebner reduction-step budget",
                   **({"default": None} if top else kw))
    p.add_argument("--alphas", help="4 distinct rationals, comma-separated",
                   **({"default": None} if top else kw))


def build_parser():
    ap = argparse.ArgumentParser(
        prog="lcverify",
        description="exact certificate checks for graded annihilator towers")
    _common_flags(ap, top=True)
    sub = ap.add_subparsers(dest="command", required=True)

    va = sub.add_parser("verify-all", help="run the whole check suite")
    va.add_argument("--depth", type=int, default=3)
    _common_flags(va)

    tw = sub.add_parser("tower", help="build a root-adjunction tower")
    tw.add_argument("target", choices=("ex1", "ex2"))
    tw.add_argument("--depth", type=int, default=3)
    _common_flags(tw)

    co = sub.add_parser("cohomology", help="dimension tables over a window")
    co.add_argument("--ring", required=True)
    co.add_argument("--window", required=True, help="LO..HI")
    _common_flags(co)

    me = sub.add_parser("member", help="ideal membership in a presentation")
    me.add_argument("--presentation", required=True)
    me.add_argument("--element", required=True)
    me.add_argument("--ideal", default="")
    _common_flags(me)
    return ap


def main(argv=None):
    ap = build_parser()
    ns = ap.parse_args(argv)
    try:
        ns.alphas = (_parse_alphas(ns.alphas) if ns.alphas
                     else verifiers.DEFAULT_ALPHAS)
        if ns.budget is None:
            env = os.environ.get("LCVERIFY_BUDGET")
            ns.budget = int(env) if env else DEFAULT_BUDGET
        if ns.budget <= 0:
            raise ConfigError("budget must be positive")
        if ns.command == "cohomology":
            ns.window = _parse_window(ns.window)
        handler = {
            "verify-all": cmd_verify_all,
            "tower": cmd_tower,
            "cohomology": cmd_cohomology,
            "member": cmd_member,
        }[ns.command]
        return handler(ns)
    except (ConfigError, PresentationError, ParseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (BudgetExceeded, PieceTooLarge) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
