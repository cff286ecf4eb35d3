"""Command-line entry point: ``matgrowth {classify,degree,oracle,track} FILE``.

Exit status is 0 on success, 2 on input errors and 3 when an internal
consistency check fails. Verdicts are never encoded in the exit status.
"""
from __future__ import annotations

import argparse
import dataclasses
import logging
import sys
import time

from .classifier import GrowthClass, classify, expand_witness, verify_witness
from .exceptions import InputError, InternalInconsistency
from .io import RunReport, oracle_to_dict, parse_labelled_graph, parse_matrix_set, read_input
from .oracle import DEFAULT_BUDGET, DEFAULT_CAP, agrees, classify_bruteforce
from .trackability import CONVENTIONS, decide_trackable, matrices_from_labels

log = logging.getLogger("matgrowth")

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 2, 3


def _describe(verdict) -> str:
    c = verdict.growth_class
    if c is GrowthClass.ZERO:
        return f"zero (every product of length >= {verdict.t0} vanishes)"
    if c is GrowthClass.POLYNOMIAL:
        return f"polynomial, degree {verdict.degree}"
    return c.value


def _witness_lines(w) -> list[str]:
    if w.kind == "exponential":
        bound = w.spectral_lower_bound()
        return [
            f"  word {list(w.word)} has diagonal entry ({w.index},{w.index}) = {w.diagonal}",
            f"  joint spectral radius >= {bound:.6f}",
        ]
    if w.kind == "polynomial":
        lines = []
        for s, p in enumerate(w.chain):
            lines.append(f"  pair ({p.i},{p.j}) via word {list(p.word)}")
            if s < len(w.connectors):
                lines.append(f"    connector {list(w.connectors[s])}")
        return lines
    return []


def _checked(S, verdict):
    if verdict.witness is not None and not verify_witness(S, verdict.witness):
        raise InternalInconsistency("emitted witness failed re-verification")
    return verdict


def _finish(args, report: RunReport, lines: list[str], started: float) -> int:
    if not args.reproducible:
        report = dataclasses.replace(report, wall_time=round(time.perf_counter() - started, 6))
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print("\n".join(lines))
    return EXIT_OK


def cmd_classify(args, degree_only: bool = False) -> int:
    started = time.perf_counter()
    text, digest = read_input(args.path)
    S, name = parse_matrix_set(text, args.path)
    verdict = _checked(S, classify(S))
    if degree_only and verdict.growth_class not in (GrowthClass.BOUNDED, GrowthClass.POLYNOMIAL):
        raise InputError(
            f"{args.path}: degree needs joint spectral radius 1, got {verdict.growth_class.value}"
        )
    lines = [f"{name or args.path}: n={S.n}, N={len(S)}, {verdict.scc_count} SCCs"]
    if degree_only:
        lines.append(f"degree: {verdict.degree or 0}")
    else:
        lines.append(f"class: {_describe(verdict)}")
    if args.witness and verdict.witness is not None:
        lines.extend(_witness_lines(verdict.witness))
    extra = {}
    if args.expand is not None:
        if verdict.growth_class is not GrowthClass.POLYNOMIAL:
            raise InputError("--expand applies only to polynomial verdicts")
        word = expand_witness(verdict.witness, args.expand)
        extra["expanded_word"] = list(word)
        lines.append(f"expanded word (p={args.expand}): {list(word)}")
    oracle = None
    if args.cross_check:
        o = classify_bruteforce(S, args.tmax, args.cap, args.budget, args.workers)
        ok = agrees(verdict, o)
        oracle = oracle_to_dict(o)
        oracle["agrees"] = ok
        state = {True: "agrees", False: "DISAGREES", None: "inconclusive"}[ok]
        lines.append(f"oracle (tmax={args.tmax}): {oracle['class']}, {state}")
    if not args.witness:
        verdict = dataclasses.replace(verdict, witness=None)
    report = RunReport("degree" if degree_only else "classify", digest, verdict, oracle=oracle, extra=extra)
    return _finish(args, report, lines, started)


def cmd_oracle(args) -> int:
    started = time.perf_counter()
    text, digest = read_input(args.path)
    S, name = parse_matrix_set(text, args.path)
    o = classify_bruteforce(S, args.tmax, args.cap, args.budget, args.workers)
    d = oracle_to_dict(o)
    lines = [f"{name or args.path}: n={S.n}, N={len(S)}", f"class: {d['class']}"]
    lines.append("max_t: " + ", ".join(str(m) for m in o.max_t))
    if o.brackets:
        lines.append(f"degree candidates: {list(o.degree_candidates)}")
    lines.extend(f"note: {x}" for x in o.notes)
    return _finish(args, RunReport("oracle", digest, oracle=d), lines, started)


def cmd_track(args) -> int:
    started = time.perf_counter()
    text, digest = read_input(args.path)
    G = parse_labelled_graph(text, args.path)
    tv = decide_trackable(G, args.convention)
    verdict = _checked(matrices_from_labels(G, args.convention), tv.verdict)
    lines = [
        f"{args.path}: {G.n} nodes, labels {list(tv.alphabet)}",
        f"trackable: {'yes' if tv.trackable else 'no'}",
        f"class: {_describe(verdict)}",
    ]
    if args.witness and verdict.witness is not None:
        lines.extend(_witness_lines(verdict.witness))
    if not args.witness:
        verdict = dataclasses.replace(verdict, witness=None)
    report = RunReport(
        "track", digest, verdict, trackable=tv.trackable, extra={"labels": list(tv.alphabet)}
    )
    return _finish(args, report, lines, started)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matgrowth", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("path")
        sp.add_argument("--json", action="store_true", help="structured output")
        sp.add_argument("--reproducible", action="store_true", help="omit wall time")

    def oracle_opts(sp):
        sp.add_argument("--tmax", type=int, default=10)
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP)
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
        sp.add_argument("--workers", type=int, default=1)

    for name in ("classify", "degree"):
        sp = sub.add_parser(name)
        common(sp)
        oracle_opts(sp)
        sp.add_argument("--witness", action="store_true", help="emit the witness")
        sp.add_argument("--cross-check", action="store_true", help="run the brute-force oracle")
        sp.add_argument("--expand", type=int, metavar="P", help="expand a degree witness with power P")

    sp = sub.add_parser("oracle")
    common(sp)
    oracle_opts(sp)

    sp = sub.add_parser("track")
    common(sp)
    sp.add_argument("--witness", action="store_true")
    sp.add_argument("--convention", choices=CONVENTIONS, default="destination")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
    try:
        if args.command == "classify":
            return cmd_classify(args)
        if args.command == "degree":
            return cmd_classify(args, degree_only=True)
        if args.command == "oracle":
            return cmd_oracle(args)
        return cmd_track(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInconsistency as exc:
        log.error("internal inconsistency: %s", exc)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
