"""Command-line front end.

Exit status: 0 on success or a passing verdict, 1 on a failing verdict,
2 on usage or parameter errors (including an exceeded enumeration cap).
With ``--json`` exactly one JSON document is written to stdout.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import axioms, spheres, uniformity
from .errors import HammingCompatError
from .metrics import truncated_hamming
from .registry import get_metric, list_metrics
from .words import Alphabet, Word, parse_word


class UsageError(HammingCompatError):
    pass


def _show(alphabet: Alphabet, w: Word) -> str:
    return alphabet.render(w) if len(w) else "ε"


def _words(args, alphabet, count=None):
    texts = list(getattr(args, "words", None) or []) + [""] * (getattr(args, "empty", 0) or 0)
    if count is not None and len(texts) != count:
        raise UsageError(f"expected {count} words (use \"\" or --empty for the empty word), got {len(texts)}")
    return [parse_word(t, alphabet) for t in texts]


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, indent=2, ensure_ascii=False))
    else:
        print(text)


def _axiom_text(report: axioms.AxiomReport, alphabet: Alphabet) -> str:
    head = f"{report.verdict} (max_len={report.max_len}, pairs={report.checked_pairs}, triples={report.checked_triples})"
    if report.passed:
        return head
    words = ", ".join(_show(alphabet, w) for w in report.witness)
    return f"{head}\n{report.kind} violated at ({words}) values {list(report.values)}"


def cmd_dist(args, alphabet):
    metric = get_metric(args.metric, alphabet)
    u, v = _words(args, alphabet, 2)
    d = metric(u, v)
    _emit(args, {"metric": metric.name, "u": alphabet.render(u), "v": alphabet.render(v), "distance": d}, str(d))
    return 0


def cmd_verify(args, alphabet):
    metric = get_metric(args.metric, alphabet)
    if args.property == "metric":
        report = axioms.verify_metric_axioms(metric, alphabet, args.max_len, fail_fast=args.fail_fast)
    elif args.property == "hamming-compatible":
        report = axioms.verify_hamming_compatible(metric, alphabet, args.max_len)
    else:
        report = uniformity.check_empty_word_bound(metric, alphabet, args.max_len)
    doc = {"metric": metric.name, "property": args.property, **report.to_dict(alphabet)}
    _emit(args, doc, _axiom_text(report, alphabet))
    return 0 if report.passed else 1


def cmd_characterize(args, alphabet):
    metric = get_metric(args.metric, alphabet)
    report = axioms.verify_hamming_characterization(metric, alphabet, args.max_len)
    _emit(args, {"metric": metric.name, **report.to_dict(alphabet)}, _axiom_text(report, alphabet))
    return 0 if report.passed else 1


def cmd_sphere(args, alphabet):
    metric = get_metric(args.metric, alphabet)
    if args.center is not None and args.empty:
        raise UsageError("give either --center or --empty, not both")
    center = parse_word(args.center or "", alphabet)
    mode = args.mode or ("both" if metric.name == "d2" else "enumerate")
    if mode != "enumerate" and metric.name != "d2":
        raise UsageError(f"--mode {mode}: closed-form sphere sizes exist for d2 only")
    if mode == "enumerate":
        count = spheres.sphere_count_by_enumeration(metric, center, args.radius, alphabet)
    else:
        count = spheres.sphere_size(center, args.radius, alphabet)
    doc = count.to_dict(alphabet)
    doc["metric"] = metric.name
    doc["mode"] = mode
    code = 0
    text = f"total {count.total}\nby length: " + ", ".join(f"{j}:{c}" for j, c in sorted(count.by_length.items()))
    if mode == "both":
        oracle = spheres.sphere_count_by_enumeration(metric, center, args.radius, alphabet)
        match = oracle.total == count.total and oracle.by_length == count.by_length
        doc["match"] = match
        text += f"\nmatch {str(match).lower()}"
        code = 0 if match else 1
    _emit(args, doc, text)
    return code


def cmd_opposite(args, alphabet):
    (u,) = _words(args, alphabet, 1)
    r = alphabet.render
    if args.w is None:
        opp = uniformity.hamming_opposites(u, alphabet)
        doc = {"u": r(u), "opposites": [r(v) for v in opp], "count": str(len(opp))}
        _emit(args, doc, "\n".join(_show(alphabet, v) for v in opp))
        return 0
    w = parse_word(args.w, alphabet)
    v = uniformity.lemma48_opposite(u, w, alphabet)
    hu, hv = truncated_hamming(u, w), truncated_hamming(v, w)
    doc = {"u": r(u), "w": r(w), "opposite": r(v), "h_u": hu, "h_v": hv, "length_w": len(w)}
    text = f"{_show(alphabet, v)}  ({hu} + {hv} = {len(w)})"
    if args.all:
        every = uniformity.lemma48_opposites(u, w, alphabet)
        doc["all"] = [r(x) for x in every]
        text += "\n" + "\n".join(_show(alphabet, x) for x in every)
    _emit(args, doc, text)
    return 0


def cmd_uniformity(args, alphabet):
    metric = get_metric(args.metric, alphabet)
    if args.weak_only:
        report = uniformity.is_weakly_uniform(metric, alphabet, args.max_len)
        ok = report.weakly_uniform == "pass"
    else:
        report = uniformity.is_uniform(metric, alphabet, args.max_len)
        ok = report.uniform == "pass"
    lines = [f"weakly uniform: {report.weakly_uniform}"]
    if report.uniform is not None:
        lines.append(f"uniform: {report.uniform}")
    if report.witness_weak:
        u, v, du, dv = report.witness_weak
        lines.append(f"weak witness: d({_show(alphabet, u)}, ε) = {du}, d({_show(alphabet, v)}, ε) = {dv}")
    if report.witness_uniform:
        u, v, w, gu, gv = report.witness_uniform
        lines.append(f"uniform witness: w = {_show(alphabet, w)}, gamma({_show(alphabet, u)}) = {gu}, "
                     f"gamma({_show(alphabet, v)}) = {gv}")
    lines.append(f"(bound {args.max_len})")
    _emit(args, {"metric": metric.name, **report.to_dict(alphabet)}, "\n".join(lines))
    return 0 if ok else 1


def cmd_minimality(args, alphabet):
    metric = get_metric(args.metric, alphabet)
    report = uniformity.check_minimality(metric, alphabet, args.max_len, include_uniformity=True)
    lines = [f"{report.verdict} (bound {report.bound}, uniform: {report.uniform})"]
    for u, w, d, e in report.violations:
        lines.append(f"  {metric.name}({_show(alphabet, u)}, {_show(alphabet, w)}) = {d} < d2 = {e}")
    _emit(args, {"metric": metric.name, **report.to_dict(alphabet)}, "\n".join(lines))
    return 0 if report.passed else 1


def cmd_stats(args, alphabet):
    metric = get_metric(args.metric, alphabet)
    w = parse_word(args.w, alphabet)
    stats = uniformity.opposite_satisfaction_stats(metric, alphabet, args.n, w)
    text = (f"violating words: {stats.violating_u}\nrescued by opposite: {stats.opposite_rescues}\n"
            f"lemma window size: {stats.lemma_window_size}\nprobability floor: {stats.probability_floor}")
    _emit(args, {"metric": metric.name, "n": args.n, "w": alphabet.render(w), **stats.to_dict(alphabet)}, text)
    return 0


def cmd_list(args, alphabet):
    entries = list_metrics()
    doc = {"metrics": entries, "note": "dn:<n> accepts any n >= 1; claimed_metric iff n <= 2"}
    text = "\n".join(
        f"{e['name']:<18} metric={str(e['claimed_metric']).lower():<5} "
        f"hamming_compatible={str(e['claimed_hamming_compatible']).lower()}"
        for e in entries
    )
    _emit(args, doc, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet", default="01", help="alphabet as a string of distinct symbols (default 01)")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    metric = argparse.ArgumentParser(add_help=False)
    metric.add_argument("--metric", default="d2", help="registry name or override JSON file (default d2)")
    bound = argparse.ArgumentParser(add_help=False)
    bound.add_argument("--max-len", type=int, default=4, help="length bound for exhaustive checks (default 4)")

    p = argparse.ArgumentParser(prog="hamming-compat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dist", parents=[common, metric], help="distance between two words")
    s.add_argument("words", nargs="*")
    s.add_argument("--empty", action="count", default=0, help="append the empty word")
    s.set_defaults(func=cmd_dist)

    s = sub.add_parser("verify", parents=[common, metric, bound], help="exhaustive property check")
    s.add_argument("--property", choices=["metric", "hamming-compatible", "empty-word-bound"], default="metric")
    s.add_argument("--fail-fast", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("characterize", parents=[common, metric, bound],
                       help="bound + additivity characterization of Hamming distance")
    s.set_defaults(func=cmd_characterize)

    s = sub.add_parser("sphere", parents=[common, metric], help="sphere size around a word")
    s.add_argument("--center")
    s.add_argument("--empty", action="store_true", help="center at the empty word")
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--mode", choices=["analytic", "enumerate", "both"])
    s.set_defaults(func=cmd_sphere)

    s = sub.add_parser("opposite", parents=[common], help="Hamming opposites of a word")
    s.add_argument("words", nargs="*")
    s.add_argument("--empty", action="count", default=0)
    s.add_argument("--w", help="build the opposite matching this word's prefix")
    s.add_argument("--all", action="store_true", help="with --w, list every matching opposite")
    s.set_defaults(func=cmd_opposite)

    s = sub.add_parser("uniformity", parents=[common, metric, bound], help="weak and full uniformity")
    s.add_argument("--weak-only", action="store_true")
    s.set_defaults(func=cmd_uniformity)

    s = sub.add_parser("minimality", parents=[common, metric, bound], help="compare against d2")
    s.set_defaults(func=cmd_minimality)

    s = sub.add_parser("stats", parents=[common, metric], help="opposite rescue statistics")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--w", default="")
    s.set_defaults(func=cmd_stats)

    s = sub.add_parser("list-metrics", parents=[common], help="registry names and claimed flags")
    s.set_defaults(func=cmd_list)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "max_len", 0) < 0:
            raise UsageError("--max-len must be non-negative")
        alphabet = Alphabet(args.alphabet)
        return args.func(args, alphabet)
    except HammingCompatError as exc:
        msg = str(exc)
        print(f"hamming-compat {args.command}: error: {msg}", file=sys.stderr)
        if args.json:
            print(json.dumps({"error": msg}, indent=2, ensure_ascii=False))
        return 2


if __name__ == "__main__":
    sys.exit(main())
