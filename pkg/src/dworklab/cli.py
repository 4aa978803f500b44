"""Command-line front end.

Subcommands
    classes   enumerate character classes, optionally grouped into orbits
    hodge     dimension / weight tables, or one class in detail
    witness   repeated-weight witnesses plus a brute-force scan cross-check
    count     exact fiber point counts, traces, bound checks, towers
    report    the full classical table document for N = 5

Every command accepts --format json|text, --workers, --budget and --out.
JSON goes to stdout (or the --out file), diagnostics to stderr.  Payloads
contain exact integers only, orderings are deterministic, and repeated runs
with the same flags produce byte-identical JSON (timings are therefore
reported on stderr, never in the document).

Exit codes: 0 success, 2 usage, 3 domain (smoothness / characteristic /
capability), 4 work budget exceeded.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from . import __version__
from .characters import (
    CharClass,
    ResidueVector,
    WeightVector,
    class_of,
    classical_weight,
    coset_elements,
    enumerate_classes,
    orbit_normal_form,
    symmetric_orbits,
    zero_dominant_form,
)
from .hodge import (
    WitnessConstructionError,
    classical_repeat_class,
    construct_repeat_witness,
    dual_class,
    hodge_data,
    repeated_ht_scan,
    total_dimension,
    totally_nonzero_representatives,
)
from .counting import (
    BudgetError,
    CapabilityError,
    CharacteristicError,
    DEFAULT_BUDGET,
    FiberSpec,
    SmoothnessError,
    count_projective_fast,
    count_projective_naive,
    field_make,
    tower_counts,
    weil_bound_ok,
)

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4


class UsageError(ValueError):
    pass


@dataclass
class ReportDocument:
    command: str
    argv: list[str]
    N: int
    W: tuple[int, ...]
    payload: dict
    warnings: list[str] = dc_field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "tool": {"name": "dworklab", "version": __version__},
            "command": self.command,
            "argv": list(self.argv),
            "N": self.N,
            "W": list(self.W),
            "payload": self.payload,
            "warnings": list(self.warnings),
        }


def _parse_vector(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be a comma-separated list of integers, got {text!r}")


def _weight_from_args(n: int, w_text: str | None) -> WeightVector:
    if w_text is None:
        return classical_weight(n)
    entries = _parse_vector(w_text, "--W")
    try:
        return WeightVector(n, entries)
    except ValueError as exc:
        raise UsageError(f"bad --W: {exc}")


def _class_from_v(n: int, weight: WeightVector, v_text: str) -> CharClass:
    entries = _parse_vector(v_text, "--v")
    if len(entries) != n:
        raise UsageError(f"--v needs {n} entries, got {len(entries)}")
    try:
        vector = ResidueVector(n, tuple(e % n for e in entries))
    except ValueError as exc:
        raise UsageError(f"bad --v: {exc}")
    return class_of(vector, weight)


def _entries(v) -> list[int]:
    return list(v.entries if isinstance(v, (ResidueVector, WeightVector)) else v)


# ---------------------------------------------------------------------------
# payload builders


def _class_row(cls: CharClass) -> dict:
    data = hodge_data(cls, "set")
    return {
        "representative": _entries(cls.representative),
        "dimension": data.dimension,
        "weights": list(data.weights),
        "totally_nonzero": [_entries(m) for m in totally_nonzero_representatives(cls)],
    }


def cmd_classes(args) -> ReportDocument:
    weight = _weight_from_args(args.N, args.W)
    classes = enumerate_classes(args.N, weight)
    payload: dict = {"count": len(classes)}
    if args.orbits:
        if not weight.classical:
            raise UsageError("--orbits requires the classical weight (1,...,1)")
        orbits = symmetric_orbits(args.N)
        payload["orbit_count"] = len(orbits)
        payload["orbits"] = [
            {
                "normal_form": _entries(form),
                "size": len(members),
                "classes": [_entries(c.representative) for c in members],
            }
            for form, members in orbits.items()
        ]
    else:
        payload["classes"] = [_entries(c.representative) for c in classes]
    return ReportDocument("classes", [], args.N, weight.entries, payload)


def cmd_hodge(args) -> ReportDocument:
    weight = _weight_from_args(args.N, args.W)
    warnings: list[str] = []
    if args.v is not None:
        cls = _class_from_v(args.N, weight, args.v)
        row = _class_row(cls)
        row["coset"] = [_entries(m) for m in coset_elements(cls)]
        row["weights_indexed"] = list(hodge_data(cls, "indexed").weights)
        payload = row
    elif weight.classical:
        rows = {}
        for cls in enumerate_classes(args.N, weight):
            form = zero_dominant_form(cls).entries
            if form not in rows:
                row = _class_row(class_of(form, weight))
                row["orbit_normal_form"] = _entries(orbit_normal_form(cls))
                rows[form] = row
        payload = {
            "rows": [rows[f] for f in sorted(rows)],
            "total_dimension": total_dimension(args.N, weight),
        }
    else:
        table = []
        for cls in enumerate_classes(args.N, weight):
            row = _class_row(cls)
            row["weights_indexed"] = list(hodge_data(cls, "indexed").weights)
            table.append(row)
        payload = {"rows": table, "total_dimension": total_dimension(args.N, weight)}
        warnings.append(
            "set and indexed weight multisets can differ for non-classical weights; both are listed"
        )
    return ReportDocument("hodge", [], args.N, weight.entries, payload, warnings)


def _witness_dict(report) -> dict:
    return {
        "class": _entries(report.char_class.representative),
        "dimension": report.hodge.dimension,
        "weights": list(report.hodge.weights),
        "semantics": report.hodge.semantics,
        "repeated_value": report.repeated_value,
        "multiplicity": report.multiplicity,
        "semantics_divergent": int(report.semantics_divergent),
    }


def cmd_witness(args) -> ReportDocument:
    weight = _weight_from_args(args.N, args.W)
    warnings: list[str] = []
    payload: dict = {"constructed": None, "construction_error": None}

    if weight.classical:
        try:
            payload["constructed"] = _witness_dict(classical_repeat_class(args.N))
        except ValueError as exc:
            payload["construction_error"] = str(exc)
    else:
        try:
            payload["constructed"] = _witness_dict(construct_repeat_witness(args.N, weight))
        except WitnessConstructionError as exc:
            payload["construction_error"] = str(exc)

    try:
        scan = repeated_ht_scan(args.N, weight, "indexed")
        payload["scan"] = {
            "checked": 1,
            "repeated_class_count": len(scan),
            "repeated_classes": [_witness_dict(r) for r in scan[:50]],
        }
        if payload["constructed"] is None:
            payload["agreement"] = None
            if not scan:
                warnings.append("no repeated-weight class exists for this (N, W): exhaustive scan is empty")
            else:
                warnings.append(
                    "the direct construction produced no witness but the scan found repeated-weight "
                    "classes; the first scanned class is a valid witness"
                )
        else:
            constructed = tuple(payload["constructed"]["class"])
            payload["agreement"] = int(
                any(r.char_class.representative.entries == constructed for r in scan)
            )
    except ValueError as exc:
        payload["scan"] = {"checked": 0, "reason": str(exc)}
        payload["agreement"] = None
        warnings.append(f"scan skipped: {exc}")

    return ReportDocument("witness", [], args.N, weight.entries, payload, warnings)


def _fiber_dict(fc, weight: WeightVector) -> dict:
    q, n = fc.spec.field.q, fc.spec.N
    out = {
        "p": fc.spec.field.p,
        "m": fc.spec.field.m,
        "q": q,
        "t": fc.spec.t,
        "projective_count": fc.projective_count,
        "strategy": fc.strategy,
    }
    if fc.trace is not None:
        out["trace"] = fc.trace
        out["lefschetz_identity_ok"] = int(
            fc.projective_count + fc.trace == sum(q ** j for j in range(n - 1))
        )
        out["weil_bound_ok"] = int(weil_bound_ok(fc.trace, q, n, weight))
    return out


def cmd_count(args) -> ReportDocument:
    weight = _weight_from_args(args.N, args.W)
    field = field_make(args.p, args.m)
    if args.t is None:
        raise UsageError("--t is required")
    t_entries = _parse_vector(args.t, "--t")
    if len(t_entries) == 1:
        t = t_entries[0]
        if not (0 <= t < field.q):
            raise UsageError(f"--t must lie in 0..{field.q - 1}")
    else:
        if len(t_entries) != field.m:
            raise UsageError(f"--t as coefficients needs {field.m} entries for {field}")
        if any(not (0 <= c < field.p) for c in t_entries):
            raise UsageError(f"--t coefficients must be canonical lifts in 0..{field.p - 1}")
        t = sum(c * field.p ** i for i, c in enumerate(t_entries))
    spec = FiberSpec(args.N, weight, t, field)
    warnings = list(spec.notes)

    fibers = []
    if args.tower:
        for fc in tower_counts(spec, args.tower, workers=args.workers, budget=args.budget):
            fibers.append(_fiber_dict(fc, weight))
            print(f"# level m={fc.spec.field.m}: {fc.strategy} count in {fc.elapsed:.3f}s",
                  file=sys.stderr)
    else:
        strategies = {"naive": [count_projective_naive], "fast": [count_projective_fast],
                      "both": [count_projective_naive, count_projective_fast]}[args.strategy]
        results = [fn(spec, workers=args.workers, budget=args.budget) for fn in strategies]
        for fc in results:
            fibers.append(_fiber_dict(fc, weight))
            print(f"# {fc.strategy} count in {fc.elapsed:.3f}s", file=sys.stderr)
        if len(results) == 2:
            agree = results[0].projective_count == results[1].projective_count
            if not agree:
                raise RuntimeError(
                    f"strategy disagreement: naive={results[0].projective_count} "
                    f"fast={results[1].projective_count}"
                )
    payload = {"fibers": fibers}
    if args.strategy == "both" and not args.tower:
        payload["strategies_agree"] = 1
    return ReportDocument("count", [], args.N, weight.entries, payload, warnings)


def cmd_report(args) -> ReportDocument:
    n = 5
    weight = classical_weight(n)
    classes = enumerate_classes(n, weight)

    rows = {}
    for cls in classes:
        form = zero_dominant_form(cls).entries
        if form not in rows:
            row = _class_row(class_of(form, weight))
            row["orbit_normal_form"] = _entries(orbit_normal_form(cls))
            dual_form = zero_dominant_form(dual_class(class_of(form, weight)))
            row["dual"] = _entries(dual_form)
            rows[form] = row

    census: dict[int, int] = {}
    for cls in classes:
        d = hodge_data(cls, "set").dimension
        census[d] = census.get(d, 0) + 1

    orbits = symmetric_orbits(n)
    payload = {
        "class_table": [rows[f] for f in sorted(rows)],
        "table_row_count": len(rows),
        "duality_pairs": sorted(
            {tuple(sorted((f, tuple(rows[f]["dual"])))) for f in rows}
        ),
        "dimension_census": {str(d): c for d, c in sorted(census.items())},
        "total_dimension": total_dimension(n, weight),
        "orbit_count": len(orbits),
        "orbits": [
            {"normal_form": _entries(form), "size": len(members)}
            for form, members in orbits.items()
        ],
        "class_count": len(classes),
    }
    payload["duality_pairs"] = [[list(a), list(b)] for a, b in payload["duality_pairs"]]
    warnings = [
        "table rows are labelled by zero-dominant forms; rows with equal orbit_normal_form "
        "are permutation-equivalent"
    ]
    return ReportDocument("report", [], n, weight.entries, payload, warnings)


# ---------------------------------------------------------------------------
# rendering


def _render_text(doc: ReportDocument) -> str:
    lines = [f"# dworklab {__version__} -- {doc.command} (N={doc.N}, W={list(doc.W)})"]
    for warning in doc.warnings:
        lines.append(f"! {warning}")

    def vec(v):
        return "(" + ",".join(map(str, v)) + ")"

    p = doc.payload
    if doc.command == "classes":
        if "orbits" in p:
            lines.append(f"{p['orbit_count']} orbits over {p['count']} classes")
            for orb in p["orbits"]:
                lines.append(f"  orbit {vec(orb['normal_form'])}  size {orb['size']}")
                for c in orb["classes"]:
                    lines.append(f"    {vec(c)}")
        else:
            lines.append(f"{p['count']} classes")
            lines.extend(f"  {vec(c)}" for c in p["classes"])
    elif doc.command == "hodge":
        if "rows" in p:
            for row in p["rows"]:
                lines.append(
                    f"  {vec(row['representative'])}  dim {row['dimension']}  "
                    f"weights {{{ ','.join(map(str, row['weights'])) }}}"
                )
            lines.append(f"total dimension {p['total_dimension']}")
        else:
            lines.append(f"class {vec(p['representative'])}")
            lines.append(f"  dimension {p['dimension']}  weights {{{ ','.join(map(str, p['weights'])) }}}")
            lines.append("  totally nonzero representatives:")
            lines.extend(f"    {vec(m)}" for m in p["totally_nonzero"])
            lines.append("  coset:")
            lines.extend(f"    {vec(m)}" for m in p["coset"])
    elif doc.command == "witness":
        if p["constructed"]:
            w = p["constructed"]
            lines.append(
                f"constructed witness {vec(w['class'])}: value {w['repeated_value']} "
                f"x{w['multiplicity']} in weights {{{ ','.join(map(str, w['weights'])) }}}"
            )
        else:
            lines.append(f"no constructed witness: {p['construction_error']}")
        scan = p.get("scan", {})
        if scan.get("checked"):
            lines.append(f"scan: {scan['repeated_class_count']} repeated-weight classes")
            agreement = p.get("agreement")
            if agreement is not None:
                lines.append(f"agreement: {'yes' if agreement else 'NO'}")
    elif doc.command == "count":
        for f in p["fibers"]:
            base = (f"q={f['q']} t={f['t']} [{f['strategy']}]  points {f['projective_count']}")
            if "trace" in f:
                base += (f"  trace {f['trace']}  lefschetz "
                         f"{'ok' if f['lefschetz_identity_ok'] else 'FAIL'}  "
                         f"weil {'ok' if f['weil_bound_ok'] else 'FAIL'}")
            lines.append(base)
    elif doc.command == "report":
        lines.append(f"{p['class_count']} classes, {p['table_row_count']} table rows, "
                     f"{p['orbit_count']} orbits, total dimension {p['total_dimension']}")
        for row in p["class_table"]:
            lines.append(
                f"  {vec(row['representative'])}  dim {row['dimension']}  "
                f"weights {{{ ','.join(map(str, row['weights'])) }}}  "
                f"dual {vec(row['dual'])}  orbit {vec(row['orbit_normal_form'])}"
            )
        lines.append("census: " + ", ".join(
            f"dim {d}: {c}" for d, c in p["dimension_census"].items()))
    return "\n".join(lines) + "\n"


def _emit(doc: ReportDocument, args) -> None:
    if args.format == "json":
        text = json.dumps(doc.to_dict(), indent=2, sort_keys=True) + "\n"
    else:
        text = _render_text(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"# wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    common.add_argument("--out", default=None, help="write the document to a file")

    parser = argparse.ArgumentParser(
        prog="dworklab",
        description="exact eigenspace tables and point counts for Dwork-family hypersurfaces",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classes", parents=[common], help="enumerate character classes")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--W", default=None, help="comma-separated weights, default classical")
    p.add_argument("--orbits", action="store_true", help="group by symmetric-group orbit")
    p.set_defaults(fn=cmd_classes)

    p = sub.add_parser("hodge", parents=[common], help="dimension and weight tables")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--W", default=None)
    p.add_argument("--v", default=None, help="single class, comma-separated residues")
    p.set_defaults(fn=cmd_hodge)

    p = sub.add_parser("witness", parents=[common], help="repeated-weight witnesses")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--W", default=None)
    p.set_defaults(fn=cmd_witness)

    p = sub.add_parser("count", parents=[common], help="fiber point counts")
    p.add_argument("--N", type=int, default=5)
    p.add_argument("--W", default=None)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--t", required=True,
                   help="parameter: integer lift, or comma-separated coefficients for extensions")
    p.add_argument("--strategy", choices=("naive", "fast", "both"), default="naive")
    p.add_argument("--tower", type=int, default=0, help="count over extensions up to this degree")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("report", parents=[common], help="full classical N=5 table document")
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if args.command == "witness" and args.N < 3:
        print("error: witness requires N >= 3", file=sys.stderr)
        return EXIT_USAGE

    try:
        doc = args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SmoothnessError, CharacteristicError, CapabilityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    doc.argv = argv
    _emit(doc, args)
    return EXIT_OK


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
