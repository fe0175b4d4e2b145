"""Command-line front end.

Verbs: `compute` (any invariant), `classify-extension`, `report`,
`verify` (the consistency suites), `tables` (dump the data file).
Exit codes: 0 success, 1 verification failure, 2 usage error,
3 ambiguous result under --require-unique.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cohomotopy, ktheory, surgery, tables, verify
from .extensions import (
    AmbiguousResult,
    EmptyAfterFiltering,
    ShortExactSequence,
    SplittingFilter,
    resolve,
)
from .fgab import FgAbGroup
from .surgery import AmbiguousUpstream

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_AMBIGUOUS = 3

INVARIANTS = ("pi-s0", "ko", "k0", "k-1", "f-o", "f-pl", "pl-o", "structure-set")


def _emit(text: str):
    sys.stdout.write(text + "\n")


def _emit_json(payload: dict):
    _emit(json.dumps(payload, ensure_ascii=False, sort_keys=True))


def _group_payload(group: FgAbGroup | AmbiguousResult) -> dict:
    """Group content at the payload's top level, per the documented schema."""
    if isinstance(group, AmbiguousResult):
        return {"ambiguous": [g.to_json() for g in group]}
    return group.to_json()


def _parse_group(text: str) -> FgAbGroup:
    try:
        return FgAbGroup.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise SystemExit(_usage_error(f"bad group JSON {text!r}: {exc}"))


def _usage_error(message: str) -> int:
    sys.stderr.write(f"error: {message}\n")
    return EXIT_USAGE


def _cmd_compute(args) -> int:
    require_unique = args.require_unique
    k, n = args.k, args.n
    name = args.invariant
    payload: dict = {"invariant": name, "k": k, "n": n}
    ambiguous = False
    try:
        if name == "pi-s0":
            result = cohomotopy.pi_s0_connected_sum(k, n)
            payload.update(_group_payload(result.group))
            payload["citations"] = list(result.citations)
            ambiguous = result.is_ambiguous
        elif name == "ko":
            if args.s is None:
                return _usage_error("--invariant ko requires --s")
            s = args.s % 8  # Bott periodicity: reduce at the CLI only
            result = ktheory.ko_group(s, k, n)
            payload["s"] = s
            payload.update(result.group.to_json())
            payload["basis"] = [str(b) for b in result.basis]
            payload["relations"] = [b.relation for b in result.basis if b.relation]
            payload["citations"] = [result.citation]
        elif name == "k0":
            result = ktheory.complex_k0(k, n)
            payload.update(result.group.to_json())
            payload["basis"] = [str(b) for b in result.basis]
            payload["citations"] = [result.citation]
        elif name == "k-1":
            result = ktheory.complex_k_minus1(k, n)
            payload.update(result.group.to_json())
            payload["citations"] = [result.citation]
        elif name == "f-o":
            result = surgery.f_over_o(k, n)
            payload.update(result.group.to_json())
            payload["decomposition"] = {
                "torsion": result.torsion.to_json(),
                "torsion_source": result.torsion_source,
                "free_rank": result.free_rank,
                "free_source": result.free_source,
            }
            payload["citations"] = list(result.citations)
        elif name == "f-pl":
            result = surgery.f_over_pl(k, n)
            payload.update(result.group.to_json())
            payload["citations"] = list(result.citations)
        elif name == "pl-o":
            entry = tables.pl_over_o_entry(k, n)
            payload.update(entry.group.to_json())
            payload["citations"] = [entry.citation]
            payload["external"] = entry.external
        elif name == "structure-set":
            result = surgery.structure_set(k, n)
            payload.update(result.smooth.to_json())
            payload["pl_group"] = result.pl_group.to_json()
            payload["image_of_eta"] = result.image_of_eta.to_json()
            payload["exotic_count"] = result.exotic_count
            payload["derivation"] = result.derivation
            if result.note:
                payload["note"] = result.note
            payload["citations"] = list(result.citations)
        else:
            return _usage_error(f"unknown invariant {name!r}")
    except AmbiguousUpstream as exc:
        payload["ambiguous_torsion"] = [g.to_json() for g in exc.candidates]
        payload["citations"] = [str(exc)]
        ambiguous = True
    except (ValueError, LookupError) as exc:
        return _usage_error(str(exc))

    if args.json:
        _emit_json(payload)
    else:
        _render_compute_text(payload)
    if ambiguous and require_unique:
        return EXIT_AMBIGUOUS
    return EXIT_OK


def _format_group_json(record: dict) -> str:
    return str(FgAbGroup.from_json(record))


def _render_compute_text(payload: dict):
    head = f"{payload['invariant']}(k={payload['k']}, n={payload['n']}"
    if "s" in payload:
        head += f", s={payload['s']}"
    head += ")"
    if "ambiguous" in payload:
        _emit(f"{head}: ambiguous between")
        for record in payload["ambiguous"]:
            _emit(f"  {_format_group_json(record)}")
    elif "ambiguous_torsion" in payload:
        _emit(f"{head}: torsion part ambiguous between")
        for record in payload["ambiguous_torsion"]:
            _emit(f"  {_format_group_json(record)}")
    else:
        group = {"rank": payload["rank"], "torsion": payload["torsion"]}
        _emit(f"{head} = {_format_group_json(group)}")
    if payload.get("basis"):
        _emit("  basis: " + ", ".join(payload["basis"]))
    if payload.get("relations"):
        _emit("  relations: " + "; ".join(payload["relations"]))
    if "exotic_count" in payload:
        _emit(f"  exotic count: {payload['exotic_count']}")
        _emit(f"  derivation: {payload['derivation']}")
    if "decomposition" in payload:
        dec = payload["decomposition"]
        _emit(
            f"  torsion {_format_group_json(dec['torsion'])} from {dec['torsion_source']}"
        )
        _emit(f"  free rank {dec['free_rank']} from {dec['free_source']}")
    for cite in payload.get("citations", []):
        _emit(f"  [{cite}]")


def _cmd_classify(args) -> int:
    sub = _parse_group(args.sub)
    quot = _parse_group(args.quot)
    filters: list[SplittingFilter] = []
    for order in args.no_order or []:
        filters.append(SplittingFilter.no_element_of_order(order))
    for prime, group_text in args.localized or []:
        filters.append(
            SplittingFilter.localization_at(int(prime), _parse_group(group_text))
        )
    if args.torsion is not None:
        filters.append(SplittingFilter.torsion_equals(_parse_group(args.torsion)))
    if args.free_rank is not None:
        filters.append(SplittingFilter.free_rank_equals(args.free_rank))
    seq = ShortExactSequence(sub=sub, quot=quot)
    try:
        outcome = resolve(seq, filters)
    except EmptyAfterFiltering as exc:
        return _usage_error(str(exc))
    payload = {
        "sub": sub.to_json(),
        "quot": quot.to_json(),
        "filters": [f.describe() for f in filters],
    }
    payload.update(_group_payload(outcome))
    if args.json:
        _emit_json(payload)
    elif isinstance(outcome, AmbiguousResult):
        _emit(f"0 -> {sub} -> G -> {quot} -> 0: ambiguous between")
        for g in outcome:
            _emit(f"  {g}")
    else:
        _emit(f"0 -> {sub} -> G -> {quot} -> 0: G = {outcome}")
    if isinstance(outcome, AmbiguousResult) and args.require_unique:
        return EXIT_AMBIGUOUS
    return EXIT_OK


def _cmd_report(args) -> int:
    if args.sequence != "surgery":
        return _usage_error(f"unknown sequence {args.sequence!r}")
    try:
        rep = surgery.surgery_sequence_report(args.k, args.n)
    except (ValueError, LookupError) as exc:
        return _usage_error(str(exc))
    if args.json:
        _emit_json(
            {
                "k": rep.k,
                "n": rep.n,
                "odd_wall": rep.odd_wall.to_json(),
                "even_wall": rep.even_wall.to_json(),
                "normal_invariants": rep.normal_invariants.to_json(),
                "eta_injective": rep.eta_injective,
                "obstruction_status": rep.obstruction_status,
                "obstruction_image_order": rep.obstruction_image_order,
                "image_of_eta": rep.image_of_eta.to_json(),
                "citations": list(rep.citations),
            }
        )
    else:
        _emit(rep.render())
        for cite in rep.citations:
            _emit(f"  [{cite}]")
    return EXIT_OK


def _cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    try:
        reports = verify.run_suites(
            names, seed=args.seed, max_order=args.max_order, cases=args.cases
        )
    except (ValueError, LookupError) as exc:
        return _usage_error(str(exc))
    failed = False
    for rep in reports:
        status = "ok" if rep.ok else "FAILED"
        _emit(f"suite {rep.name}: {rep.cases} cases, {len(rep.failures)} failures [{status}]")
        for failure in rep.failures:
            failed = True
            _emit(f"  violated: {failure.prop}")
            _emit(f"  citation: {failure.citation}")
            _emit(f"  detail:   {failure.detail}")
    return EXIT_VERIFY_FAILED if failed else EXIT_OK


def _cmd_tables(args) -> int:
    records = tables.all_raw_records()
    if args.kind:
        records = [r for r in records if r["kind"] == args.kind]
        if not records:
            return _usage_error(f"no table records of kind {args.kind!r}")
    if args.json:
        for rec in records:
            _emit(json.dumps(rec, ensure_ascii=False, sort_keys=True))
    else:
        for rec in records:
            params = ", ".join(f"{k}={v}" for k, v in sorted(rec["params"].items()))
            if "group" in rec:
                value = str(FgAbGroup.from_json(rec["group"]))
            else:
                value = "(parametric)"
            flag = " [external]" if rec.get("external") else ""
            _emit(f"{rec['kind']}({params}) = {value}{flag}")
            _emit(f"  [{rec['citation']}]")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cpsums",
        description="Exact invariants of k-fold connected sums of complex projective spaces.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    compute = sub.add_parser("compute", help="compute a tabulated or derived invariant")
    compute.add_argument("--invariant", required=True, choices=INVARIANTS)
    compute.add_argument("--k", type=int, required=True)
    compute.add_argument("--n", type=int, required=True)
    compute.add_argument("--s", type=int, default=None, help="KO degree (Bott-reduced mod 8)")
    compute.add_argument("--json", action="store_true")
    compute.add_argument(
        "--require-unique",
        action="store_true",
        help="exit 3 when the result is an ambiguous candidate list",
    )
    compute.set_defaults(func=_cmd_compute)

    classify = sub.add_parser(
        "classify-extension", help="middle terms of 0 -> A -> G -> B -> 0"
    )
    classify.add_argument("--sub", required=True, help='group JSON, e.g. {"rank":0,"torsion":[2]}')
    classify.add_argument("--quot", required=True, help="group JSON")
    classify.add_argument("--no-order", type=int, action="append", metavar="N",
                          help="filter: no element of order N")
    classify.add_argument("--localized", nargs=2, action="append",
                          metavar=("P", "GROUP"),
                          help="filter: localization at prime P equals GROUP")
    classify.add_argument("--torsion", help="filter: torsion subgroup equals GROUP")
    classify.add_argument("--free-rank", type=int, help="filter: free rank equals R")
    classify.add_argument("--json", action="store_true")
    classify.add_argument("--require-unique", action="store_true")
    classify.set_defaults(func=_cmd_classify)

    report = sub.add_parser("report", help="render an exact-sequence report")
    report.add_argument("--sequence", required=True, choices=("surgery",))
    report.add_argument("--k", type=int, required=True)
    report.add_argument("--n", type=int, required=True)
    report.add_argument("--json", action="store_true")
    report.set_defaults(func=_cmd_report)

    verify_cmd = sub.add_parser("verify", help="run the consistency suites")
    verify_cmd.add_argument(
        "--suite",
        default="all",
        choices=tuple(verify.SUITES) + ("all",),
    )
    verify_cmd.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    verify_cmd.add_argument("--max-order", type=int, default=64)
    verify_cmd.add_argument("--cases", type=int, default=200,
                            help="random matrix count for the snf suite")
    verify_cmd.set_defaults(func=_cmd_verify)

    tables_cmd = sub.add_parser("tables", help="dump the citation-annotated tables")
    tables_cmd.add_argument("--kind", default=None)
    tables_cmd.add_argument("--json", action="store_true")
    tables_cmd.set_defaults(func=_cmd_tables)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:  # raised by helpers that already printed a message
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
