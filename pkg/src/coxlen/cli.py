"""Command-line surface.

Subcommands: ``classes`` (per-class table with formula extrema and
representatives), ``rep`` (one representative), ``excess`` (exact excess
of one element), ``verify`` (named verification campaigns), ``census``
(exact class censuses, classical or generic).

Exit codes: 0 success, 1 a verification statement failed, 2 usage,
parse or resource-budget errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import campaigns, coxgen, excess, reps, roots
from ._kernels import BACKEND
from .errors import CoxlenError, NotInSubgroupError, ParseError, ResourceBudgetError
from .signedperm import (
    SignedCycleType,
    format_cycles,
    format_window,
    parse_cycle_type,
    parse_element,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def letters_for(flavor: str, rank: int) -> int:
    """Window size for a CLI (type, rank) pair: the unsigned type of rank
    r permutes r+1 letters."""
    if rank < 1:
        raise ParseError("rank must be positive")
    return rank + 1 if flavor == "A" else rank


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-group-order", type=int, default=excess.DEFAULT_MAX_GROUP_ORDER)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--big", action="store_true")
    p.add_argument("--explain", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="coxlen",
        description="Exact length and excess combinatorics in finite Coxeter groups "
        f"(kernel backend: {BACKEND})",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", help="per-class table of length extrema and representatives")
    p.add_argument("type", choices=("A", "B", "D"))
    p.add_argument("rank", type=int)
    p.add_argument("--class", dest="class_label", default=None,
                   help="restrict to one class, e.g. '2,4;3' or '2,4;3+' for a split half")
    _add_common(p)

    p = sub.add_parser("rep", help="print one class representative")
    p.add_argument("type", choices=("A", "B", "D"))
    p.add_argument("rank", type=int)
    p.add_argument("--class", dest="class_label", required=True)
    p.add_argument("--kind", choices=("uc", "uct", "wlr", "kim"), required=True)
    _add_common(p)

    p = sub.add_parser("excess", help="exact excess of an element with a witness pair")
    p.add_argument("type", choices=("A", "B", "D"))
    p.add_argument("rank", type=int)
    p.add_argument("element", help="window '[..]' or cycle '(..)(..)' text")
    _add_common(p)

    p = sub.add_parser("verify", help="run a named verification campaign")
    p.add_argument("statement", help="statement id, or 'all' for the default battery")
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--type", dest="flavor", choices=("A", "B", "D"), default=None)
    _add_common(p)

    p = sub.add_parser("census", help="exact class census (classical or generic group)")
    p.add_argument("group", nargs="*",
                   help="'B 5', 'A 3', a preset like E6/F4/H3/I2(7), or --matrix FILE")
    p.add_argument("--matrix", default=None, help="Coxeter matrix file")
    p.add_argument("--class", dest="class_label", default=None)
    _add_common(p)

    return ap


# ---------------------------------------------------------------------------
# Emitters.
# ---------------------------------------------------------------------------


def _emit_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _emit_table(rows: list[dict], columns: list[str]) -> str:
    widths = {c: max(len(c), *(len(str(r.get(c, ""))) for r in rows)) if rows else len(c) for c in columns}
    out = ["  ".join(c.ljust(widths[c]) for c in columns)]
    for r in rows:
        out.append("  ".join(str(r.get(c, "")).ljust(widths[c]) for c in columns))
    return "\n".join(out)


def _emit_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in rows:
        writer.writerow([r.get(c, "") for c in columns])
    return buf.getvalue().rstrip("\n")


def _histogram_json(hist: dict[int, int]) -> dict[str, int]:
    return {str(k): v for k, v in sorted(hist.items())}


# ---------------------------------------------------------------------------
# classes / rep / excess.
# ---------------------------------------------------------------------------


def _parse_class_label(text: str, flavor: str, n: int):
    """Class label text: partition for A, cycle type (optional +/- split
    suffix) for B/D."""
    text = text.strip()
    if flavor == "A":
        try:
            parts = tuple(sorted((int(t) for t in text.split(",")), reverse=True))
        except ValueError as exc:
            raise ParseError(f"bad partition {text!r}") from exc
        if sum(parts) != n:
            raise ParseError(f"partition {text!r} does not sum to {n}")
        return parts, None
    split = None
    if text.endswith(("+", "-")):
        split = "plus" if text.endswith("+") else "minus"
        text = text[:-1]
    ct = parse_cycle_type(text)
    if ct.n != n:
        raise ParseError(f"cycle type {text!r} has rank {ct.n}, expected {n}")
    if split is not None and not ct.splits_in_d():
        raise ParseError(f"type {text!r} does not split; drop the +/- suffix")
    return ct, split


def _classical_descriptors(flavor: str, n: int, label_text: str | None):
    if label_text is None:
        return excess.all_class_descriptors(flavor, n)
    label, split = _parse_class_label(label_text, flavor, n)
    if flavor == "D" and split is None and isinstance(label, SignedCycleType):
        if not label.in_type_d():
            raise ParseError(f"type {label_text!r} lies outside the even subgroup")
        if label.splits_in_d():
            return [
                excess.ClassDescriptor(flavor, n, label, "plus"),
                excess.ClassDescriptor(flavor, n, label, "minus"),
            ]
    return [excess.ClassDescriptor(flavor, n, label, split)]


def _class_row(desc, args) -> dict:
    flavor = desc.flavor
    if flavor == "A":
        parts = reps.normalize_partition(desc.label)
        kim = reps.stair_element(parts)
        row = {
            "label": desc.label_str(),
            "rep_kim": format_cycles(kim),
            "max_len_A": roots.length_A(kim),
        }
    else:
        ct = desc.label
        lf = reps.length_formulas(ct)
        uc = reps.min_length_rep(ct) if desc.split != "minus" else reps.min_length_rep_twisted(ct)
        wlr = reps.max_length_rep_for_type(ct)
        if desc.split == "minus":
            wlr = reps.twist_by_last_sign(wlr)
        row = {
            "label": desc.label_str(),
            "min_len_B": lf.min_b,
            "max_len_B": lf.max_b,
            "rep_uc": format_cycles(uc),
            "rep_wlr": format_cycles(wlr),
        }
        if lf.min_d is not None:
            row["min_len_D"] = lf.min_d
            row["max_len_D"] = lf.max_d
        if args.explain and lf.max_d_alt is not None:
            row["max_len_D_alt_display"] = lf.max_d_alt
    if args.exhaustive:
        try:
            members = excess.conjugacy_class(desc, args.max_group_order)
            row["size"] = len(members)
            if flavor == "A":
                brute = max(roots.length_A(w) for w in members)
                row["brute_max_A"] = brute
                row["match"] = brute == row["max_len_A"]
            else:
                bmin = min(roots.length_B(w) for w in members)
                bmax = max(roots.length_B(w) for w in members)
                row["brute_min_B"], row["brute_max_B"] = bmin, bmax
                match = bmin == row["min_len_B"] and bmax == row["max_len_B"]
                if flavor == "D" or "min_len_D" in row:
                    dmin = min(roots.length_D(w) for w in members)
                    dmax = max(roots.length_D(w) for w in members)
                    row["brute_min_D"], row["brute_max_D"] = dmin, dmax
                    match = match and dmin == row["min_len_D"] and dmax == row["max_len_D"]
                row["match"] = match
        except ResourceBudgetError:
            row["size"] = "skipped(budget)"
            row["match"] = "skipped(budget)"
    return row


def cmd_classes(args) -> int:
    n = letters_for(args.type, args.rank)
    descriptors = _classical_descriptors(args.type, n, args.class_label)
    rows = [_class_row(d, args) for d in descriptors]
    rows.sort(key=lambda r: r["label"])
    if args.type == "A":
        columns = ["label", "max_len_A", "rep_kim"]
    else:
        columns = ["label", "min_len_B", "max_len_B", "min_len_D", "max_len_D",
                   "rep_uc", "rep_wlr"]
        if args.explain:
            columns.append("max_len_D_alt_display")
    if args.exhaustive:
        columns = ["label", "size"] + [c for c in columns if c != "label"]
        columns += [c for c in ("brute_min_B", "brute_max_B", "brute_min_D",
                                "brute_max_D", "brute_max_A", "match")
                    if any(c in r for r in rows)]
    payload = {
        "group": {"type": args.type, "rank": args.rank},
        "classes": rows,
    }
    if args.format == "json":
        print(_emit_json(payload))
    elif args.format == "csv":
        print(_emit_csv(rows, columns))
    else:
        print(_emit_table(rows, columns))
    return EXIT_OK


def cmd_rep(args) -> int:
    n = letters_for(args.type, args.rank)
    label, split = _parse_class_label(args.class_label, args.type, n)
    if args.kind == "kim":
        if args.type != "A":
            raise ParseError("kind 'kim' applies to type A")
        parts = reps.normalize_partition(label)
        w = reps.stair_element(parts)
        info = {"kind": "kim", "label": ",".join(map(str, label)),
                "cycles": format_cycles(w), "window": format_window(w),
                "len_A": roots.length_A(w)}
        if args.explain:
            cert = reps.certificate_A(parts)
            info["certificate"] = {
                "sigma": format_cycles(cert.sigma),
                "tau": format_cycles(cert.tau),
                "valid": cert.is_valid(),
                "lengths": cert.lengths(),
            }
    else:
        if args.type == "A":
            raise ParseError(f"kind {args.kind!r} applies to types B and D")
        ct = label
        if args.kind == "uc":
            w = reps.min_length_rep(ct) if split != "minus" else reps.min_length_rep_twisted(ct)
        elif args.kind == "uct":
            w = reps.min_length_rep_twisted(ct) if split != "minus" else reps.min_length_rep(ct)
        else:
            w = reps.max_length_rep_for_type(ct)
            if split == "minus":
                w = reps.twist_by_last_sign(w)
        info = {"kind": args.kind, "label": str(ct) + ({"plus": "+", "minus": "-"}.get(split) or ""),
                "cycles": format_cycles(w), "window": format_window(w),
                "len_B": roots.length_B(w)}
        if w.parity_negative_entries() == 0:
            info["len_D"] = roots.length_D(w)
        if args.explain and args.kind == "wlr":
            parts, rho = reps.normalize_split_type(ct)
            cert = reps.certificate_BD(parts, rho, "B")
            info["certificate"] = {
                "sigma": format_cycles(cert.sigma),
                "tau": format_cycles(cert.tau),
                "valid": cert.is_valid(),
                "lengths": cert.lengths(),
            }
    if args.format == "json":
        print(_emit_json(info))
    else:
        for key, value in info.items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_excess(args) -> int:
    n = letters_for(args.type, args.rank)
    w = parse_element(args.element, n)
    if args.type == "A" and not w.is_unsigned():
        raise ParseError("type-A elements must be unsigned")
    report = excess.excess(w, args.type, args.max_group_order)
    info = {
        "element": format_cycles(w),
        "flavor": args.type,
        "excess": report.excess,
        "len_w": roots.length(w, args.type),
        "sigma": format_cycles(report.sigma),
        "len_sigma": roots.length(report.sigma, args.type),
        "tau": format_cycles(report.tau),
        "len_tau": roots.length(report.tau, args.type),
        "reversing_examined": report.reversing_examined,
    }
    if args.format == "json":
        print(_emit_json(info))
    else:
        for key, value in info.items():
            print(f"{key}: {value}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify.
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    cfg = campaigns.VerifyConfig(
        seed=args.seed,
        samples=args.samples,
        flavor=args.flavor,
        rank=args.rank,
        max_group_order=args.max_group_order,
        big=args.big,
        threads=args.threads,
    )
    sid = args.statement.strip().lower()
    if sid == "all":
        ids = list(campaigns.DEFAULT_SUITE)
        if args.big:
            ids.append("e7")
    else:
        ids = [campaigns.resolve_statement(sid).id]
    statements = [campaigns.REGISTRY[i] for i in ids]
    if args.format == "json" and args.seed is None and any(s.randomized for s in statements):
        raise ParseError("randomized statements need --seed in JSON mode")
    for s in statements:
        if s.gated and not args.big:
            raise ResourceBudgetError(f"statement {s.id!r} is gated behind --big")

    def run_one(s):
        return s.runner(cfg)

    if args.threads > 1 and len(statements) > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            outcomes = list(pool.map(run_one, statements))
    else:
        outcomes = [run_one(s) for s in statements]

    all_pass = all(o.passed for o in outcomes)
    if args.format == "json":
        payload = {"outcomes": [o.as_json_dict() for o in outcomes]}
        if args.seed is not None:
            payload["seed"] = args.seed
        print(_emit_json(payload))
    else:
        for o in outcomes:
            mark = "PASS" if o.passed else "FAIL"
            print(f"[{mark}] {o.statement}  ({o.elapsed:.2f}s)")
            if not o.passed:
                print(f"       detail: {o.detail}")
            elif args.explain:
                print(f"       {o.detail}")
    return EXIT_OK if all_pass else EXIT_FAIL


# ---------------------------------------------------------------------------
# census.
# ---------------------------------------------------------------------------


def _census_rows_classical(flavor: str, n: int, args) -> list[dict]:
    descriptors = _classical_descriptors(flavor, n, args.class_label)

    def census_row(desc) -> dict:
        c = excess.class_census(desc, args.max_group_order)
        row = {
            "label": c.descriptor.label_str(),
            "size": c.size,
            "max_count": c.max_count,
            "excess_histogram": _histogram_json(c.excess_histogram),
            "all_max_zero_excess": c.all_max_zero,
            "exists_max_zero_excess": c.exists_max_zero,
        }
        if flavor == "A":
            row["min_len_A"], row["max_len_A"] = c.min_length, c.max_length
        elif flavor == "B":
            row["min_len_B"], row["max_len_B"] = c.min_length, c.max_length
        else:
            row["min_len_D"], row["max_len_D"] = c.min_length, c.max_length
        return row

    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(census_row, descriptors))
    else:
        rows = [census_row(d) for d in descriptors]
    rows.sort(key=lambda r: r["label"])
    return rows


def _census_rows_generic(group: coxgen.ReflectionGroup, args) -> list[dict]:
    budget = args.max_group_order
    if args.big:
        budget = max(budget, 3_000_000)
    sweep = group.full_group_sweep(budget)
    return [
        {
            "label": c.label,
            "size": c.size,
            "element_order": c.element_order,
            "min_len": c.min_length,
            "max_len": c.max_length,
            "max_count": c.max_count,
            "excess_histogram": _histogram_json(c.excess_histogram),
            "all_max_zero_excess": c.all_max_zero,
            "exists_max_zero_excess": c.exists_max_zero,
        }
        for c in sweep
    ]


def cmd_census(args) -> int:
    tokens = [t.strip() for t in args.group if t.strip()]
    if not tokens and not args.matrix:
        raise ParseError("census needs a group spec or --matrix FILE")
    if args.matrix:
        with open(args.matrix, encoding="utf-8") as fh:
            matrix = coxgen.CoxeterMatrix.from_text(fh.read())
        group = coxgen.ReflectionGroup(coxgen.build_root_table(matrix), name="custom")
        rows = _census_rows_generic(group, args)
        payload = {"group": {"type": "custom", "rank": matrix.rank}, "classes": rows}
    elif len(tokens) == 2 and tokens[0].upper() in ("A", "B", "D") and tokens[1].isdigit():
        flavor, rank = tokens[0].upper(), int(tokens[1])
        n = letters_for(flavor, rank)
        rows = _census_rows_classical(flavor, n, args)
        payload = {"group": {"type": flavor, "rank": rank}, "classes": rows}
    elif len(tokens) == 1:
        name = tokens[0].upper()
        group = coxgen.cached_group(name)
        rows = _census_rows_generic(group, args)
        payload = {"group": {"type": name, "rank": group.rank}, "classes": rows}
    else:
        raise ParseError(f"cannot understand group spec {' '.join(tokens)!r}")

    if args.format == "json":
        print(_emit_json(payload))
        return EXIT_OK
    columns = sorted({k for r in rows for k in r}, key=lambda c: (c != "label", c))
    flat = [
        {k: (json.dumps(v) if isinstance(v, dict) else v) for k, v in r.items()}
        for r in rows
    ]
    if args.format == "csv":
        print(_emit_csv(flat, columns))
    else:
        print(_emit_table(flat, columns))
    return EXIT_OK


# ---------------------------------------------------------------------------


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    handlers = {
        "classes": cmd_classes,
        "rep": cmd_rep,
        "excess": cmd_excess,
        "verify": cmd_verify,
        "census": cmd_census,
    }
    try:
        return handlers[args.command](args)
    except (ParseError, ResourceBudgetError, NotInSubgroupError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CoxlenError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
