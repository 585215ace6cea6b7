"""Command-line entry point: ``repmeasure <command> ...``.

Exit codes: 0 all good, 1 bound or property violation, 2 usage or input
error, 3 internal oracle mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import List, Optional

from . import __version__
from .bounds import verify, verify_corpus
from .bwt import bwt, cyclic_bwt, rotation_order
from .correspondence import check_injectivity, check_nonextendability, run_boundary_pairs
from .corpus import FAMILIES, GeneratorSpec, default_corpus, generate
from .errors import RepMeasureError
from .lz77 import lz77
from .periodicity import fourth_power_runs, max_exponent_witness, power_witness, q_free_witness
from .repeats import cdawg_stats, copy_classes, enumerate_maximal_pairs, enumerate_maximal_repeats
from .selftest import exit_code, suites
from .taxonomy import LABELS, classify_index_pairs
from .text import EXHAUSTIVE_CAP, EXPONENT_CAP, Cap, Text, read_text, render

OK, VIOLATION, USAGE, MISMATCH = 0, 1, 2, 3
MIN_CAP = 16


class UsageError(Exception):
    pass


# -- input and output ----------------------------------------------------------


def _load(args) -> Text:
    if args.text is not None:
        t = Text(args.text)
    else:
        t = read_text(args.input, strip_newline=args.strip_newline)
    if len(t) == 0:
        raise UsageError("input is empty")
    return t


def _format(args) -> str:
    if args.format:
        return args.format
    return "human" if sys.stdout.isatty() else "json"


def _cap(args) -> Cap:
    if args.cap < MIN_CAP:
        raise UsageError(f"--cap must be at least {MIN_CAP}")
    return Cap(args.cap, "--cap")


def _emit_json(doc) -> None:
    json.dump(doc, sys.stdout, indent=2, ensure_ascii=False, default=str)
    sys.stdout.write("\n")


def _emit_csv(header: List[str], rows) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _emit(args, doc, header=None, rows=None, human=None) -> None:
    fmt = _format(args)
    if fmt == "json":
        _emit_json(doc)
    elif fmt == "csv":
        if header is None:
            raise UsageError("this command has no CSV form")
        _emit_csv(header, rows)
    else:
        sys.stdout.write((human() if human else json.dumps(doc, indent=2, default=str)) + "\n")


def _text_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", default="-", help="input file, '-' for stdin (default)")
    p.add_argument("--text", help="inline input instead of a file")
    p.add_argument("--strip-newline", action="store_true", help="drop one trailing newline")


def _format_args(p: argparse.ArgumentParser, csv_ok: bool = True) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="format", action="store_const", const="json")
    if csv_ok:
        g.add_argument("--csv", dest="format", action="store_const", const="csv")
    g.add_argument("--human", dest="format", action="store_const", const="human")


# -- commands ------------------------------------------------------------------


def _report_lines(rep) -> str:
    out = [
        f"text {rep.text_id}: |S|={rep.length} sigma={rep.alphabet_size} z={rep.z} r={rep.r} "
        f"q={rep.q} (q_min={rep.q_min}, max exponent {rep.max_exponent})"
    ]
    for row in rep.bounds:
        if row.holds is None:
            out.append(f"  {row.name:<4} skipped   {row.formula}  {row.note}")
            continue
        status = "holds" if row.holds else "VIOLATED"
        out.append(
            f"  {row.name:<4} {status:<9} {row.measured} <= {row.bound:.6g}  [{row.formula}] {row.anchor}"
            + (f" ({row.note})" if row.note else "")
        )
    out += [f"  notice: {n}" for n in rep.notices]
    out += [f"  MISMATCH: {m}" for m in rep.mismatches]
    return "\n".join(out)


def _verdict(reports) -> int:
    if any(r.mismatches for r in reports):
        return MISMATCH
    if any(not r.holds or r.measured.get("nonextendability_violations") for r in reports):
        return VIOLATION
    return OK


def cmd_analyze(args) -> int:
    t = _load(args)
    cap = _cap(args)
    cap.check(t, "analyze")
    parse = lz77(t)
    profile = bwt(t)
    pairs = enumerate_maximal_pairs(t, cap)
    classes = copy_classes(pairs)
    cdawg = cdawg_stats(t, cap)
    rep = verify(t, q=args.q, allow_powers=args.allow_powers, text_id=args.text_id,
                 sample=args.sample, seed=args.seed)
    universe = range(1, len(t) + 2) if args.all_indices else parse.starts
    rows = classify_index_pairs(t, pairs, rep.q, universe, parse, args.strict_variants)
    label_classes = {label: len({r.copy_key for r in rows if label in r.labels}) for label in LABELS}
    boundaries = run_boundary_pairs(t)
    doc = {
        "text_id": rep.text_id,
        "length": len(t),
        "z": parse.z,
        "lz77_starts": list(parse.starts),
        "bwt": render(profile.bwt),
        "r": profile.r,
        "maximal_pairs": len(pairs),
        "pair_classes": len(classes),
        "cdawg": {
            "maximal_repeats": cdawg.maximal_repeat_count,
            "right_extension_total": cdawg.right_extension_total,
            "arc_total": cdawg.arc_total,
        },
        "classification": {
            "index_universe": "all" if args.all_indices else "lz-starts",
            "rows": len(rows),
            "classes_per_label": label_classes,
        },
        "boundaries": {
            "count": len(boundaries),
            "with_pair": sum(1 for b in boundaries if b.pair is not None),
            "injective": check_injectivity(t, boundaries).injective,
        },
        "verify": rep.to_dict(),
    }

    def human():
        lines = [
            f"|S|={len(t)} z={parse.z} r={profile.r} maximal pairs={len(pairs)} classes={len(classes)} "
            f"maximal repeats={cdawg.maximal_repeat_count} CDAWG arcs={cdawg.arc_total}",
            f"LZ77 starts: {' '.join(map(str, parse.starts))}",
            f"BWT: {render(profile.bwt)}",
            "classes per label: " + ", ".join(f"{k}={v}" for k, v in label_classes.items()),
            _report_lines(rep),
        ]
        return "\n".join(lines)

    _emit(args, doc, human=human)
    return _verdict([rep])


def cmd_enumerate(args) -> int:
    t = _load(args)
    cap = _cap(args)
    if args.what == "pairs":
        pairs = enumerate_maximal_pairs(t, cap)
        class_id = {key: k for k, key in enumerate(copy_classes(pairs))}
        pad = t.padded
        header = ["n", "m", "l", "left_context", "body_prefix", "right_context", "class_id"]
        rows = [
            [p.n, p.m, p.l,
             render(bytes([pad[p.n - 1], pad[p.m - 1]])),
             render(t.substring(p.n, p.n + min(p.l, 16) - 1)),
             render(bytes([pad[p.n + p.l], pad[p.m + p.l]])),
             class_id[p.copy_key]]
            for p in pairs
        ]
        doc = {"pairs": [dict(zip(header, r)) for r in rows], "classes": len(class_id)}
    elif args.what == "repeats":
        reps = enumerate_maximal_repeats(t, cap)
        header = ["content", "occurrences", "left_extensions", "right_extensions", "first_occurrence"]
        rows = [
            [render(r.content), r.occurrence_count, render(bytes(sorted(r.left_extensions))),
             render(bytes(sorted(r.right_extensions))), r.first_occurrence]
            for r in reps
        ]
        doc = {"repeats": [dict(zip(header, r)) for r in rows]}
    else:
        s = cdawg_stats(t, cap)
        header = ["maximal_repeats", "right_extension_total", "root_arcs", "arc_total"]
        rows = [[s.maximal_repeat_count, s.right_extension_total, s.root_arcs, s.arc_total]]
        doc = dict(zip(header, rows[0]))
    _emit(args, doc, header, rows, human=lambda: "\n".join("\t".join(map(str, r)) for r in [header] + rows))
    return OK


def cmd_classify(args) -> int:
    t = _load(args)
    cap = _cap(args)
    parse = lz77(t)
    pairs = enumerate_maximal_pairs(t, cap)
    q = args.q if args.q is not None else q_free_witness(t)
    if q < 2:
        raise UsageError("--q must be at least 2")
    universe = range(1, len(t) + 2) if args.all_indices else parse.starts
    rows = classify_index_pairs(t, pairs, q, universe, parse, args.strict_variants)
    variant_names = sorted({name for r in rows for name, _ in r.variants})
    header = ["class_a", "class_b", "n", "m", "l", "i", "j"] + list(LABELS) + [f"variant_{v}" for v in variant_names]
    table = []
    for r in rows:
        p = r.representative
        variants = dict(r.variants)
        table.append(
            [render(r.copy_key[0]), render(r.copy_key[1]), p.n, p.m, p.l, r.i, r.j]
            + [label in r.labels for label in LABELS]
            + [variants.get(v, "") for v in variant_names]
        )
    if args.format is None:
        args.format = "csv"
    doc = {"q": q, "rows": [dict(zip(header, row)) for row in table]}
    _emit(args, doc, header, table)
    return OK


def _corpus_items(args):
    if args.default_corpus:
        return default_corpus()
    items = []
    for name in sorted(os.listdir(args.corpus)):
        path = os.path.join(args.corpus, name)
        if os.path.isfile(path):
            items.append((name, read_text(path, strip_newline=args.strip_newline)))
    return items


def cmd_verify(args) -> int:
    cap = Cap(args.exponent_cap, "--exponent-cap")
    kwargs = dict(q=args.q, allow_powers=args.allow_powers, sample=args.sample, seed=args.seed, cap=cap)
    if args.cross_check:
        kwargs["cross_check"] = True
    if args.corpus or args.default_corpus:
        agg = verify_corpus(_corpus_items(args), **kwargs)
        doc = {
            "reports": [r.to_dict() for r in agg.reports],
            "failures": agg.failures,
            "max_ratio": agg.max_ratio,
            "max_ratio_text": agg.argmax_ratio,
            "holds": agg.holds,
        }
        header = ["text_id", "name", "formula", "bound", "measured", "holds", "anchors"]
        rows = [[r.text_id, b.name, b.formula, b.bound, b.measured, b.holds, b.anchor]
                for r in agg.reports for b in r.bounds]

        def human():
            lines = [_report_lines(r) for r in agg.reports]
            lines += [f"FAILED {k}: {v}" for k, v in agg.failures.items()]
            lines += [f"max ratio {k}: {v:.4g} ({agg.argmax_ratio[k]})" for k, v in sorted(agg.max_ratio.items())]
            return "\n".join(lines)

        _emit(args, doc, header, rows, human)
        code = _verdict(agg.reports)
        return USAGE if agg.failures and code == OK else code
    t = _load(args)
    rep = verify(t, text_id=args.text_id, **kwargs)
    header = ["name", "formula", "bound", "measured", "holds", "anchors"]
    rows = [[b.name, b.formula, b.bound, b.measured, b.holds, b.anchor] for b in rep.bounds]
    _emit(args, rep.to_dict(), header, rows, lambda: _report_lines(rep))
    return _verdict([rep])


def cmd_bwt(args) -> int:
    t = _load(args)
    if args.cyclic:
        profile = cyclic_bwt(t)
        doc = {"cyclic_bwt": render(profile.bwt), "r": profile.r}
    else:
        profile = bwt(t)
        # JSON keeps the sentinel as NUL (escaped \u0000); human output shows "$"
        doc = {"bwt": render(profile.bwt, "\x00"), "r": profile.r, "pi": list(rotation_order(t).pi)}
    doc["runs"] = [[render(bytes([run.symbol]), "\x00"), run.start, run.length] for run in profile.runs]
    header = ["symbol", "start", "length"]
    rows = [[render(bytes([run.symbol])), run.start, run.length] for run in profile.runs]
    _emit(args, doc, header, rows, lambda: f"{render(profile.bwt)}\nr = {profile.r}")
    return OK


def cmd_bwt_map(args) -> int:
    t = _load(args)
    boundaries = run_boundary_pairs(t)
    entries = []
    failed = False
    for b in boundaries:
        entry = {"boundary": b.boundary_index, "prev": b.prev, "next": b.next, "L": b.lcp, "pair": None}
        if b.pair is not None:
            verdict = check_nonextendability(t, b)
            failed |= not verdict.holds
            entry["pair"] = list(b.pair.triple)
            entry["periods"] = [
                {"period": c.period, "added": list(c.added), "certified_by": list(c.sides)}
                for c in verdict.certificates
            ]
        entries.append(entry)
    inj = check_injectivity(t, boundaries)
    doc = {
        "boundaries": entries,
        "r": inj.r,
        "injective": inj.injective,
        "l0_count": inj.l0_count,
        "alphabet_size": inj.alphabet_size,
        "l0_needs_sentinel_slack": inj.needs_sentinel_slack,
        "certified": not failed,
    }

    def human():
        lines = [f"r={inj.r} boundaries={inj.boundaries} L=0 count={inj.l0_count} (alphabet {inj.alphabet_size})"]
        for e in entries:
            cert = ""
            if e["pair"]:
                cert = " periods " + ", ".join(f"{p['period']}:{'/'.join(p['certified_by']) or 'NONE'}" for p in e["periods"])
            lines.append(f"  i={e['boundary']} L={e['L']} pair={e['pair']}{cert}")
        return "\n".join(lines)

    _emit(args, doc, human=human)
    if not inj.injective or inj.boundaries + 1 != inj.r:
        return MISMATCH
    return VIOLATION if failed or not inj.l0_within_alphabet else OK


def cmd_periodicity(args) -> int:
    t = _load(args)
    cap = Cap(args.exponent_cap, "--exponent-cap")
    e, lo, hi = max_exponent_witness(t, cap)
    doc = {
        "max_exponent": str(e),
        "witness": [lo, hi, render(t.substring(lo, hi))],
        "q_min": q_free_witness(t, cap),
        "fourth_power_runs": [
            {"period": x.delta, "core": list(x.core), "padded": render(x.content_key)} for x in fourth_power_runs(t)
        ],
    }
    if args.q is not None:
        w = power_witness(t, args.q, cap)
        doc["q"] = args.q
        doc["q_power_free"] = w is None
        doc["q_power_witness"] = None if w is None else render(w)
    _emit(args, doc, human=lambda: f"max exponent {e} at [{lo}, {hi}] {render(t.substring(lo, hi))!r}; q_min {doc['q_min']}")
    return OK


def cmd_lz77(args) -> int:
    t = _load(args)
    parse = lz77(t)
    header = ["start", "length", "kind", "content"]
    rows = [[f.start, f.length, f.kind, render(c)] for f, c in zip(parse.factors, parse.contents(t))]
    doc = {"z": parse.z, "starts": list(parse.starts), "factors": [dict(zip(header, r)) for r in rows]}
    _emit(args, doc, header, rows, lambda: f"z = {parse.z}\n" + " | ".join(r[3] for r in rows))
    return OK


def cmd_generate(args) -> int:
    spec = GeneratorSpec(args.family, args.parameter, args.seed, args.length)
    t = generate(spec)
    if args.output in (None, "-"):
        sys.stdout.buffer.write(t.data)
        sys.stdout.flush()
    else:
        with open(args.output, "wb") as fh:
            fh.write(t.data)
    return OK


def cmd_selftest(args) -> int:
    results = suites(quick=args.quick, inject=args.inject_fault)
    for r in results:
        print(r.line())
    return exit_code(results)


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="repmeasure", description="Repetitiveness measures and their bounds.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def cap_arg(p):
        p.add_argument("--cap", type=int, default=EXHAUSTIVE_CAP.limit,
                       help=f"max |S| for enumeration stages (default {EXHAUSTIVE_CAP.limit}, min {MIN_CAP})")

    def verify_args(p):
        p.add_argument("--q", type=int, help="power-freeness parameter (default: smallest valid)")
        p.add_argument("--allow-powers", action="store_true",
                       help="skip rows that need q-power-freeness instead of failing")
        p.add_argument("--sample", type=int, help="sample this many LZ77 split indices for per-(i, j) rows")
        p.add_argument("--seed", type=int, default=0, help="seed for --sample")
        p.add_argument("--text-id", help="identifier used in reports")

    p = sub.add_parser("analyze", help="full report: measures, classifications and bounds")
    _text_args(p)
    _format_args(p, csv_ok=False)
    cap_arg(p)
    verify_args(p)
    p.add_argument("--all-indices", action="store_true", help="classify over every index pair (quadratic)")
    p.add_argument("--strict-variants", action="store_true", help="also report the per-side reading")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="maximal pairs, maximal repeats or CDAWG counts")
    p.add_argument("what", choices=("pairs", "repeats", "cdawg"))
    _text_args(p)
    _format_args(p)
    cap_arg(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="labels per (pair class, i, j); CSV by default")
    _text_args(p)
    _format_args(p)
    cap_arg(p)
    p.add_argument("--q", type=int, help="power-freeness parameter (default: smallest valid)")
    p.add_argument("--all-indices", action="store_true", help="use every index pair, not only LZ77 starts")
    p.add_argument("--strict-variants", action="store_true", help="add per-side unextendability columns")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="evaluate bounds B1..B12")
    _text_args(p)
    _format_args(p)
    verify_args(p)
    p.add_argument("--exponent-cap", type=int, default=EXPONENT_CAP.limit, help="max |S| for verify")
    p.add_argument("--cross-check", action="store_true", help="force brute-force cross checks")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--corpus", metavar="DIR", help="verify every file in DIR")
    g.add_argument("--default-corpus", action="store_true", help="verify the built-in generated corpus")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bwt", help="BWT of S$ (or the cyclic BWT of S)")
    _text_args(p)
    _format_args(p)
    p.add_argument("--cyclic", action="store_true")
    p.set_defaults(func=cmd_bwt)

    p = sub.add_parser("bwt-map", help="run boundaries, their pairs and period certificates")
    _text_args(p)
    _format_args(p, csv_ok=False)
    p.set_defaults(func=cmd_bwt_map)

    p = sub.add_parser("periodicity", help="max exponent, q_min and fourth-power runs")
    _text_args(p)
    _format_args(p, csv_ok=False)
    p.add_argument("--q", type=int)
    p.add_argument("--exponent-cap", type=int, default=EXPONENT_CAP.limit)
    p.set_defaults(func=cmd_periodicity)

    p = sub.add_parser("lz77", help="LZ77 factorisation")
    _text_args(p)
    _format_args(p)
    p.set_defaults(func=cmd_lz77)

    p = sub.add_parser("generate", help="write a generated string as raw bytes")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("parameter", type=int, nargs="?", default=1,
                   help="n (fibonacci), length (thue-morse, unary-power) or alphabet size (random)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--length", type=int, help="length for the random family")
    p.add_argument("-o", "--output", help="output file (default stdout)")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("selftest", help="exhaustive oracle suites and property sweeps")
    p.add_argument("--quick", action="store_true", help="shorter lengths")
    p.add_argument("--inject-fault", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, RepMeasureError, ValueError, OSError) as exc:
        print(f"repmeasure: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
