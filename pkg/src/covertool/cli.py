"""Command-line front end.

Subcommands: ideal, ass, stability, witness, gap, sweep.  Exit codes
separate operational failures from mathematical ones: 0 all good, 1 bad
input or precondition (parse errors, caps, unit ideals where an answer
needs a proper one), 2 usage, 3 a verification that should be a theorem
came out false (prediction MISMATCH, persistence violation, failed
witness or gap check).  Code 3 existing at all is defensive: hitting it
means an implementation bug, and treating it as success would hide
exactly the failures this tool exists to surface.
"""

from __future__ import annotations

import argparse
import json
import sys

from .associated import (
    ass_of_power,
    astab_tree,
    build_star_witness,
    check_persistence,
    cover_ideal_checked,
    empirical_astab,
    predict_ass_tree,
    verify_annihilator_divisibility,
)
from .covers import generalized_edge_ideal, partial_cover_ideal
from .graphs import Graph, Hypergraph, ParseError, parse_hypergraph
from .hypercovers import hypergraph_cover_ideal, verify_gap
from .monomials import (
    MonomialIdeal,
    alexander_dual,
    associated_primes,
    ideal_power,
    monomial_str,
    prime_str,
    sorted_primes,
)

SCHEMA_VERSION = 1
MAX_POWER = 6
MAX_VARIABLES = 12

OK, OPERATIONAL_ERROR, USAGE_ERROR, INTEGRITY_ERROR = 0, 1, 2, 3


class CommandError(Exception):
    """Operational failure: bad input, unmet precondition, cap hit."""


def _load_input(path: str) -> Graph | Hypergraph:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CommandError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        h = parse_hypergraph(text)
    except ParseError as exc:
        raise CommandError(f"{path}: {exc}") from exc
    if all(len(e) == 2 for e in h.edges):
        return Graph.build(h.vertices, h.edges)
    return h


def _check_power_cap(value: int, name: str, force: bool):
    if value > MAX_POWER and not force:
        raise CommandError(
            f"cap exceeded: {name}={value} > {MAX_POWER} (override with --force)"
        )


def _check_variable_cap(count: int, force: bool):
    if count > MAX_VARIABLES and not force:
        raise CommandError(
            f"cap exceeded: {count} variables > {MAX_VARIABLES} "
            "(override with --force)"
        )


def _emit(args, payload: dict, lines: list[str]):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _primes_json(primes, ambient) -> list[list[str]]:
    return [list(p.labels(ambient)) for p in sorted_primes(primes)]


def _primes_text(primes, ambient) -> str:
    return ", ".join(prime_str(p, ambient) for p in sorted_primes(primes))


def _gens_text(ideal: MonomialIdeal) -> str:
    return ", ".join(monomial_str(g, ideal.ambient) for g in ideal.gens)


def _gens_json(ideal: MonomialIdeal) -> list[str]:
    return [monomial_str(g, ideal.ambient) for g in ideal.gens]


def cmd_ideal(args) -> int:
    obj = _load_input(args.file)
    _check_variable_cap(obj.n, args.force)
    if isinstance(obj, Graph):
        ideal = partial_cover_ideal(obj, args.t)
    else:
        if args.t != 1:
            raise CommandError(
                "hypergraph cover ideals have no t parameter; use --t 1 or omit it"
            )
        ideal = hypergraph_cover_ideal(obj)
    unit = ideal.is_unit
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "ideal",
        "t": args.t,
        "ambient": list(ideal.ambient),
        "generators": _gens_json(ideal),
        "unit_ideal": unit,
    }
    lines = []
    if unit:
        lines.append(
            f"warning: J_{args.t} is the unit ideal - "
            "no constraints (t exceeds all degrees)"
        )
    else:
        lines.append(_gens_text(ideal))
    if args.dual:
        if unit:
            raise CommandError("the unit ideal has no Alexander dual here")
        if isinstance(obj, Graph):
            dual = generalized_edge_ideal(obj, args.t)
        else:
            dual = alexander_dual(ideal)
        payload["dual_generators"] = _gens_json(dual)
        lines.append("dual: " + _gens_text(dual))
    _emit(args, payload, lines)
    return OK


def cmd_ass(args) -> int:
    obj = _load_input(args.file)
    _check_variable_cap(obj.n, args.force)
    _check_power_cap(args.s, "s", args.force)
    payload: dict = {
        "schema": SCHEMA_VERSION,
        "command": "ass",
        "t": args.t,
        "s": args.s,
    }
    lines: list[str] = []
    exit_code = OK
    if isinstance(obj, Graph):
        modes = ["direct", "localized"] if args.mode == "both" else [args.mode]
        reports = {}
        for mode in modes:
            try:
                reports[mode] = ass_of_power(obj, args.t, args.s, mode)
            except ValueError as exc:
                raise CommandError(str(exc)) from exc
        report = reports[modes[0]]
        ambient = report.ambient
        payload["ambient"] = list(ambient)
        for mode in modes:
            payload[mode] = _primes_json(reports[mode].primes, ambient)
            lines.append(f"{mode}: {_primes_text(reports[mode].primes, ambient)}")
        if len(modes) == 2:
            agree = reports["direct"].primes == reports["localized"].primes
            payload["modes_agree"] = agree
            lines.append("modes agree" if agree else "MISMATCH: modes disagree")
            if not agree:
                exit_code = INTEGRITY_ERROR
        if args.predict:
            try:
                predicted = predict_ass_tree(obj, args.t, args.s)
            except ValueError as exc:
                raise CommandError(str(exc)) from exc
            match = predicted.primes == report.primes
            payload["predicted"] = _primes_json(predicted.primes, ambient)
            payload["match"] = match
            lines.append(f"predicted: {_primes_text(predicted.primes, ambient)}")
            lines.append("MATCH" if match else "MISMATCH: prediction differs")
            if not match:
                exit_code = INTEGRITY_ERROR
    else:
        if args.mode != "direct":
            raise CommandError("localized mode needs a graph file")
        if args.predict:
            raise CommandError("closed form proven only for trees")
        ideal = hypergraph_cover_ideal(obj)
        if ideal.is_unit:
            raise CommandError("the hypergraph cover ideal is the unit ideal")
        primes = associated_primes(ideal_power(ideal, args.s))
        payload["ambient"] = list(obj.vertices)
        payload["direct"] = _primes_json(primes, obj.vertices)
        lines.append(f"direct: {_primes_text(primes, obj.vertices)}")
    _emit(args, payload, lines)
    return exit_code


def cmd_stability(args) -> int:
    obj = _load_input(args.file)
    _check_variable_cap(obj.n, args.force)
    _check_power_cap(args.smax, "smax", args.force)
    if isinstance(obj, Graph):
        try:
            ideal = cover_ideal_checked(obj, args.t)
        except ValueError as exc:
            raise CommandError(str(exc)) from exc
        is_tree = obj.is_tree()
    else:
        ideal = hypergraph_cover_ideal(obj)
        if ideal.is_unit:
            raise CommandError("the hypergraph cover ideal is the unit ideal")
        is_tree = False
    report = (
        check_persistence(ideal, args.smax)
        if args.smax >= 2
        else empirical_astab(ideal, args.smax)
    )
    ambient = ideal.ambient
    exit_code = OK
    payload: dict = {
        "schema": SCHEMA_VERSION,
        "command": "stability",
        "t": args.t,
        "s_max": args.smax,
        "ambient": list(ambient),
        "per_power": [
            {"s": s + 1, "primes": _primes_json(primes, ambient)}
            for s, primes in enumerate(report.per_power)
        ],
        "persistence_ok": report.persistence_ok,
        "first_violation": report.first_violation,
    }
    lines = []
    for s, primes in enumerate(report.per_power, start=1):
        lines.append(f"s={s}: {_primes_text(primes, ambient)}")
    if report.persistence_ok:
        lines.append("persistence: OK")
    else:
        lines.append(
            f"persistence: VIOLATED at s={report.first_violation} "
            f"(Ass^{report.first_violation} not within the next power)"
        )
        exit_code = INTEGRITY_ERROR
    if is_tree:
        certified = astab_tree(obj, args.t)
        payload["astab"] = certified
        payload["astab_certified"] = True
        payload["astab_empirical"] = report.astab_value
        lines.append(f"astab: {certified} (certified)")
        if report.astab_value is not None and report.astab_value != certified:
            lines.append(
                f"MISMATCH: empirical tail starts at {report.astab_value}, "
                f"formula says {certified}"
            )
            exit_code = INTEGRITY_ERROR
    else:
        payload["astab"] = report.astab_value
        payload["astab_certified"] = False
        if report.astab_value is None:
            lines.append(f"astab: not determined up to s_max={args.smax}")
        else:
            lines.append(
                f"astab: {report.astab_value} (empirical, uncertified "
                f"beyond s_max={args.smax})"
            )
    _emit(args, payload, lines)
    return exit_code


def cmd_witness(args) -> int:
    _check_variable_cap(args.n + 1, args.force)
    _check_power_cap(args.s, "s", args.force)
    try:
        cert = build_star_witness(args.n, args.t, args.s)
    except ValueError as exc:
        message = str(exc)
        if "maximal ideal not associated" in message:
            message += "; the criterion is s(t-1) >= n-1"
        raise CommandError(message) from exc
    ambient = ("z",) + tuple(f"x{i}" for i in range(1, args.n + 1))
    passes = cert.valid
    divides = passes and verify_annihilator_divisibility(
        args.n, args.t, args.s, cert.T
    )
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "witness",
        "n": args.n,
        "t": args.t,
        "s": args.s,
        "s0": cert.s0,
        "e": cert.e,
        "T": monomial_str(cert.T, ambient),
        "empty_word": cert.empty_word,
        "not_in_power": cert.not_in_power,
        "colon_equals_prime": cert.colon_equals_prime,
        "annihilator_divides": divides,
    }
    lines = [
        f"T = {monomial_str(cert.T, ambient)}  (s0={cert.s0}, e={cert.e})"
        + ("  [empty word boundary]" if cert.empty_word else ""),
        f"T not in J^{args.s}: {'PASS' if cert.not_in_power else 'FAIL'}",
        f"colon(J^{args.s}, T) = <z, x1..x{args.n}>: "
        f"{'PASS' if cert.colon_equals_prime else 'FAIL'}",
        f"divisibility bound T | z^e*(x1..x{args.n})^(s-e-1): "
        f"{'PASS' if divides else 'FAIL'}",
    ]
    _emit(args, payload, lines)
    return OK if (passes and divides) else INTEGRITY_ERROR


def cmd_gap(args) -> int:
    _check_power_cap(args.smax or 0, "smax", args.force)
    try:
        report = verify_gap(args.m, s_max=args.smax, force=args.force)
    except ValueError as exc:
        message = str(exc)
        if "cap" in message:
            message = f"cap exceeded: m={args.m} (override with --force)"
        raise CommandError(message) from exc
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "gap",
        "m": report.m,
        "chi": report.chi,
        "astab": report.astab,
        "oracle_astab": report.oracle_astab,
        "s_max": report.s_max,
        "gap_bound": report.gap_bound,
        "gap_holds": report.gap_holds,
        "gap_is_equality": report.gap_is_equality,
        "baseline_holds": report.baseline_holds,
        "ideal_matches_star": report.ideal_matches_star,
    }
    verdict = "HOLDS" if report.gap_holds else "VIOLATED"
    lines = [
        f"H_{report.m}: chi={report.chi}, astab={report.astab} "
        f"(oracle tail: {report.oracle_astab})",
        f"gap bound chi-1+m = {report.gap_bound} <= astab: {verdict}"
        + (" (equality)" if report.gap_is_equality else ""),
        f"baseline chi-1 <= astab: "
        f"{'HOLDS' if report.baseline_holds else 'VIOLATED'}",
    ]
    if not report.ideal_matches_star:
        lines.append("MISMATCH: cover ideal differs from the star closed form")
    _emit(args, payload, lines)
    return OK if report.all_checks_pass else INTEGRITY_ERROR


def cmd_sweep(args) -> int:
    obj = _load_input(args.file)
    if not isinstance(obj, Graph):
        raise CommandError("sweep needs a graph file")
    _check_variable_cap(obj.n, args.force)
    delta = obj.max_degree() if obj.edges else 0
    if delta == 0:
        raise CommandError("the graph has no edges; nothing to sweep")
    ts = [args.t] if args.t is not None else list(range(1, delta + 1))
    for t in ts:
        if t > delta:
            raise CommandError(f"t={t} exceeds the maximum degree {delta}")
    is_tree = obj.is_tree()
    cells = []
    mismatch = False
    for t in ts:
        if args.smax is not None:
            smax = args.smax
        elif is_tree:
            smax = astab_tree(obj, t) + 1
        else:
            smax = 3
        _check_power_cap(smax, "smax", args.force)
        for s in range(1, smax + 1):
            oracle = ass_of_power(obj, t, s).primes
            cell = {
                "t": t,
                "s": s,
                "oracle": _primes_json(oracle, obj.vertices),
            }
            if is_tree:
                predicted = predict_ass_tree(obj, t, s).primes
                cell["predicted"] = _primes_json(predicted, obj.vertices)
                cell["match"] = predicted == oracle
                if not cell["match"]:
                    mismatch = True
            cells.append(cell)
    payload = {
        "schema": SCHEMA_VERSION,
        "command": "sweep",
        "ambient": list(obj.vertices),
        "tree": is_tree,
        "cells": cells,
    }
    lines = []
    for cell in cells:
        line = f"t={cell['t']} s={cell['s']} |Ass|={len(cell['oracle'])}"
        if "match" in cell:
            line += (
                f" predicted={len(cell['predicted'])} "
                + ("MATCH" if cell["match"] else "MISMATCH")
            )
        lines.append(line)
    lines.append(
        "result: "
        + ("MISMATCH found" if mismatch else "all cells consistent")
    )
    _emit(args, payload, lines)
    return INTEGRITY_ERROR if mismatch else OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covertool",
        description="Partial t-cover ideals: construction, associated primes, "
        "stability, witnesses, and the hypergraph chromatic gap.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, file=True):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument(
            "--force",
            action="store_true",
            help="override the desk-scale caps on powers and variables",
        )
        if file:
            p.add_argument("file", help="graph or hypergraph text file")

    p = sub.add_parser("ideal", help="print the minimal generators of J_t")
    p.add_argument("--t", type=int, default=1)
    p.add_argument(
        "--dual", action="store_true", help="also print the Alexander dual"
    )
    common(p)
    p.set_defaults(handler=cmd_ideal)

    p = sub.add_parser("ass", help="associated primes of J_t^s")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--s", type=int, required=True)
    p.add_argument(
        "--mode", choices=("direct", "localized", "both"), default="direct"
    )
    p.add_argument(
        "--predict",
        action="store_true",
        help="compare against the tree closed form",
    )
    common(p)
    p.set_defaults(handler=cmd_ass)

    p = sub.add_parser(
        "stability", help="per-power Ass, persistence, and the tail index"
    )
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--smax", type=int, required=True)
    common(p)
    p.set_defaults(handler=cmd_stability)

    p = sub.add_parser(
        "witness", help="explicit maximal-ideal witness for a star"
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    common(p, file=False)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("gap", help="chromatic gap verification for H_m")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--smax", type=int, default=None)
    common(p, file=False)
    p.set_defaults(handler=cmd_gap)

    p = sub.add_parser(
        "sweep", help="oracle (and prediction, on trees) across a (t, s) grid"
    )
    p.add_argument("--t", type=int, default=None, help="restrict to one t")
    p.add_argument(
        "--smax", type=int, default=None, help="uniform power range cap"
    )
    common(p)
    p.set_defaults(handler=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return OPERATIONAL_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return OPERATIONAL_ERROR


if __name__ == "__main__":
    sys.exit(main())
