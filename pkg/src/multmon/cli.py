"""Command-line interface: every computation as a subcommand over parsed ideals.

Each run emits one structured JSON document (one per line in batch mode);
`--pretty` renders the same record for humans.  Field names are frozen in
docs/schema.md.  Errors map to exit codes: 0 success, 1 usage/parse error,
2 hypothesis violation, 3 unsupported, 4 resource cap, 5 internal
consistency failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Sequence

from . import __version__
from .core import MonomialIdeal, polar_sets
from .decomposition import multiplicity_recurrence
from .errors import (
    HypothesisError,
    InternalConsistencyError,
    MultmonError,
    ParseError,
    UsageError,
)
from .formulas import (
    detect_stem,
    e_aci,
    e_codim1,
    e_complete_intersection,
    e_quadratic_dominant,
    e_stem,
    e_structural,
    find_ci_split,
    reg_quadratic_dominant,
)
from .generate import random_ideal
from .invariants import classify, codim, dominance_witnesses
from .oracle import multiplicity_associativity
from .parsing import is_valid_variable_name, parse_ideal_detailed
from .taylor import (
    Q_MAX,
    betti_table,
    is_taylor_minimal,
    multiplicity_ps,
    regularity_dominant,
    taylor_resolution,
)

COMMANDS = (
    "multiplicity",
    "codim",
    "classify",
    "betti",
    "taylor",
    "diagram",
    "verify",
    "regularity",
)

MULTIPLICITY_METHODS = ("auto", "codim1", "ci", "stem", "aci", "structural", "recurrence", "ps", "oracle")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="multmon", description=__doc__)
    parser.add_argument("--version", action="version", version=f"multmon {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: _Parser) -> None:
        p.add_argument("--ideal", help="ideal text, e.g. \"a^2*b, b^3*c\"")
        p.add_argument("--file", help="batch file: one ideal per line, '#' comments")
        p.add_argument("--vars", help="explicit comma-separated variable order")
        p.add_argument(
            "--check",
            action="store_true",
            help="cross-check multiplicity with engine and oracle",
        )
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="structured output (default)")
        fmt.add_argument("--pretty", action="store_true", help="human-readable rendering")

    for name in COMMANDS:
        p = sub.add_parser(name)
        add_common(p)
        if name == "multiplicity":
            p.add_argument("--method", choices=MULTIPLICITY_METHODS, default="auto")
        if name == "verify":
            p.add_argument("--random", action="store_true", help="verify seeded random ideals")
            p.add_argument("--seed", type=int, default=0, help="seed for --random")
            p.add_argument("--cases", type=int, default=100, help="case count for --random")
    return parser


# ---------------------------------------------------------------------------
# multiplicity methods


def _recurrence_pivot(ideal: MonomialIdeal) -> int | None:
    """Smallest dominant pivot that keeps the codimension, if any."""
    c = codim(ideal)
    if ideal.q < 2:
        return None
    witnesses = dominance_witnesses(ideal)
    for i, w in enumerate(witnesses):
        if w is None:
            continue
        if codim(ideal.without(i)) == c:
            return i
    return None


def _compute_multiplicity(ideal: MonomialIdeal, method: str) -> int:
    if method == "codim1":
        return e_codim1(ideal)
    if method == "ci":
        return e_complete_intersection(ideal)
    if method == "stem":
        return e_stem(ideal)
    if method == "aci":
        return e_aci(ideal)
    if method == "structural":
        split = find_ci_split(ideal)
        if split is None:
            raise HypothesisError("no pairwise-coprime subset of size codim exists")
        return e_structural(ideal, split)
    if method == "recurrence":
        pivot = _recurrence_pivot(ideal)
        if pivot is None:
            raise HypothesisError("no dominant pivot preserves the codimension")
        return multiplicity_recurrence(ideal, pivot)
    if method == "ps":
        return multiplicity_ps(ideal)
    if method == "oracle":
        return multiplicity_associativity(ideal)
    raise UsageError(f"unknown method {method!r}")


def _auto_method(ideal: MonomialIdeal, report) -> str:
    if report.is_codim1:
        return "codim1"
    if report.is_ci:
        return "ci"
    if detect_stem(ideal) is not None:
        return "stem"
    if report.aci_witness is not None:
        return "aci"
    if report.is_dominant and find_ci_split(ideal) is not None:
        return "structural"
    return "ps"


def _applicable_methods(ideal: MonomialIdeal, report) -> list[str]:
    methods = ["ps", "oracle"]
    if report.is_codim1:
        methods.append("codim1")
    if report.is_ci:
        methods.append("ci")
    if detect_stem(ideal) is not None:
        methods.append("stem")
    if report.aci_witness is not None:
        methods.append("aci")
    if report.is_dominant and find_ci_split(ideal) is not None:
        methods.append("structural")
    if report.is_dominant and all(g.degree == 2 for g in ideal.gens):
        methods.append("quadratic")
    if _recurrence_pivot(ideal) is not None:
        methods.append("recurrence")
    return methods


def _compute_named(ideal: MonomialIdeal, method: str) -> int:
    if method == "quadratic":
        return e_quadratic_dominant(ideal)
    return _compute_multiplicity(ideal, method)


# ---------------------------------------------------------------------------
# document assembly


def _classification_payload(ideal: MonomialIdeal, report) -> dict:
    names = ideal.ring.names
    return {
        "codim": report.codim,
        "codim1": report.is_codim1,
        "dominant": report.is_dominant,
        "dominant_witnesses": [
            None if w is None else names[w] for w in report.dominant_witness
        ],
        "complete_intersection": report.is_ci,
        "aci_witness": None
        if report.aci_witness is None
        else str(ideal.gens[report.aci_witness]),
    }


def _result_for(
    ideal: MonomialIdeal, report, args
) -> tuple[dict, str | None, list[dict], bool | None]:
    """Result payload, chosen method, cross-checks, agreement flag."""
    command = args.command

    if command == "multiplicity":
        method = args.method if args.method != "auto" else _auto_method(ideal, report)
        value = _compute_multiplicity(ideal, method)
        checks = []
        agreement = None
        if args.check:
            for other in ("ps", "oracle"):
                checks.append({"method": other, "value": _compute_multiplicity(ideal, other)})
            agreement = all(c["value"] == value for c in checks)
        return {"multiplicity": value}, method, checks, agreement

    if command == "codim":
        return {"codim": report.codim}, "cover-search", [], None

    if command == "classify":
        structure = detect_stem(ideal)
        quadratic = report.is_dominant and all(g.degree == 2 for g in ideal.gens)
        result = {
            "stem": None
            if structure is None
            else {
                "stems": [str(s) for s in structure.stems],
                "blocks": [[str(ideal.gens[i]) for i in block] for block in structure.blocks],
            },
            "quadratic_dominant": quadratic,
            "taylor_minimal": is_taylor_minimal(ideal) if ideal.q <= Q_MAX else None,
        }
        return result, "classification", [], None

    if command == "betti":
        table = betti_table(ideal)
        entries = sorted(
            (
                {"hdeg": i, "mdeg": str(m), "degree": m.degree, "count": c}
                for (i, m), c in table.entries.items()
            ),
            key=lambda e: (e["hdeg"], e["degree"], e["mdeg"]),
        )
        graded = [
            {"hdeg": i, "degree": d, "count": c}
            for (i, d), c in sorted(table.graded().items())
        ]
        ranks = [table.total(i) for i in range(ideal.q + 1)]
        return {"entries": entries, "graded": graded, "ranks": ranks}, "taylor", [], None

    if command == "taylor":
        resolution = taylor_resolution(ideal)
        faces = [
            {
                "members": list(f.member_indices()),
                "hdeg": f.hdeg,
                "mdeg": str(f.mdeg),
                "degree": f.mdeg.degree,
            }
            for f in resolution.faces
        ]
        return {"ranks": list(resolution.ranks()), "faces": faces}, "taylor", [], None

    if command == "diagram":
        names = ideal.ring.names
        sets = []
        for g, labels in zip(ideal.gens, polar_sets(ideal)):
            rendered = [
                {"var": names[v], "slot": s} for v, s in sorted(labels)
            ]
            sets.append({"generator": str(g), "labels": rendered})
        return {"sets": sets}, "polarization", [], None

    if command == "regularity":
        quadratic = report.is_dominant and all(g.degree == 2 for g in ideal.gens)
        if quadratic:
            value = reg_quadratic_dominant(ideal)
            taylor_value = regularity_dominant(ideal)
            if taylor_value != value:
                raise InternalConsistencyError(
                    f"regularity paths disagree: {value} vs {taylor_value}"
                )
            checks = [{"method": "taylor", "value": taylor_value}]
            return {"regularity": value}, "quadratic", checks, True
        value = regularity_dominant(ideal)
        return {"regularity": value}, "taylor", [], None

    if command == "verify":
        methods = _applicable_methods(ideal, report)
        values = {m: _compute_named(ideal, m) for m in methods}
        agreement = len(set(values.values())) == 1
        checks = [{"method": m, "value": v} for m, v in values.items()]
        result = {
            "multiplicity": values["ps"] if agreement else None,
            "methods": values,
        }
        return result, "consensus", checks, agreement

    raise UsageError(f"unknown command {command!r}")


def _execute(text: str, args) -> tuple[dict, int]:
    """Run one command over one ideal text; returns (document, exit code)."""
    started = time.perf_counter()
    parsed = parse_ideal_detailed(text, _var_list(args))
    ideal = parsed.ideal
    report = classify(ideal)
    result, method, checks, agreement = _result_for(ideal, report, args)
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    document = {
        "command": args.command,
        "input": {
            "text": text,
            "vars": list(ideal.ring.names),
            "ideal": str(ideal),
            "notices": list(parsed.notices),
        },
        "classification": _classification_payload(ideal, report),
        "result": result,
        "method": method,
        "checks": checks,
        "agreement": agreement,
        "timing_ms": round(elapsed_ms, 3),
    }
    code = 0 if agreement in (None, True) else InternalConsistencyError.exit_code
    return document, code


def _var_list(args) -> list[str] | None:
    if not getattr(args, "vars", None):
        return None
    names = [name.strip() for name in args.vars.split(",")]
    for name in names:
        if not is_valid_variable_name(name):
            raise UsageError(f"--vars entry {name!r} is not a valid variable name")
    if len(set(names)) != len(names):
        raise UsageError("--vars entries must be distinct")
    return names


# ---------------------------------------------------------------------------
# rendering


def _emit(document: dict, args, stream=None) -> None:
    stream = stream or sys.stdout
    if getattr(args, "pretty", False):
        stream.write(_render_pretty(document) + "\n")
    else:
        stream.write(json.dumps(document, separators=(", ", ": ")) + "\n")


def _render_pretty(document: dict) -> str:
    lines = []
    command = document.get("command", "?")
    if "error" in document:
        err = document["error"]
        return f"{command}: error [{err['code']}] {err['message']}"
    if document.get("mode") == "random":
        lines.append(
            f"random verification: seed={document['seed']} cases={document['cases']}"
        )
        for failure in document["failures"]:
            lines.append(f"  disagreement on {failure['ideal']}: {failure['methods']}")
        lines.append(f"agreement: {document['agreement']}")
        return "\n".join(lines)
    cls = document["classification"]
    lines.append(f"ideal: {document['input']['ideal']}")
    for notice in document["input"]["notices"]:
        lines.append(f"note: {notice}")
    lines.append(
        "classification: codim={codim} dominant={dominant} ci={complete_intersection}".format(**cls)
    )
    result = document["result"]
    if command == "multiplicity":
        lines.append(f"multiplicity = {result['multiplicity']}  (method: {document['method']})")
    elif command == "codim":
        lines.append(f"codim = {result['codim']}")
    elif command == "regularity":
        lines.append(f"regularity = {result['regularity']}  (method: {document['method']})")
    elif command == "classify":
        stem = result["stem"]
        lines.append(f"stem ideal: {'no' if stem is None else 'yes, stems ' + ', '.join(stem['stems'])}")
        lines.append(f"quadratic dominant: {result['quadratic_dominant']}")
        lines.append(f"taylor resolution minimal: {result['taylor_minimal']}")
    elif command == "betti":
        lines.append("betti entries (hdeg, mdeg, count):")
        for e in result["entries"]:
            lines.append(f"  {e['hdeg']:>3}  {e['mdeg']:<24} {e['count']}")
        lines.append(f"ranks: {result['ranks']}")
    elif command == "taylor":
        lines.append(f"ranks: {result['ranks']}")
        lines.append("faces (members, hdeg, mdeg):")
        for f in result["faces"]:
            lines.append(f"  {f['members']!s:<16} {f['hdeg']:>3}  {f['mdeg']}")
    elif command == "diagram":
        for entry in result["sets"]:
            labels = ", ".join(f"{l['var']}_{l['slot']}" for l in entry["labels"])
            lines.append(f"A({entry['generator']}) = {{{labels}}}")
    elif command == "verify":
        for check in document["checks"]:
            lines.append(f"  {check['method']:<12} {check['value']}")
        lines.append(f"agreement: {document['agreement']}")
    if document["checks"] and command not in ("verify",):
        for check in document["checks"]:
            lines.append(f"check {check['method']}: {check['value']}")
    if document["agreement"] is not None and command != "verify":
        lines.append(f"agreement: {document['agreement']}")
    lines.append(f"time: {document['timing_ms']} ms")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# drivers


def _error_document(command: str, text: str | None, exc: MultmonError) -> dict:
    payload = {"code": type(exc).__name__, "message": str(exc), "exit_code": exc.exit_code}
    if isinstance(exc, ParseError):
        payload["code"] = exc.code
        payload["line"] = exc.line
        payload["column"] = exc.column
    doc = {"command": command, "error": payload}
    if text is not None:
        doc["input"] = {"text": text}
    return doc


def _run_batch(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read batch file: {exc}") from exc
    status = 0
    for line in lines:
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        try:
            document, code = _execute(stripped, args)
        except MultmonError as exc:
            document, code = _error_document(args.command, stripped, exc), exc.exit_code
        _emit(document, args)
        if status == 0 and code != 0:
            status = code
    return status


def _run_random_verify(args) -> int:
    if args.cases < 1:
        raise UsageError("--cases must be at least 1")
    rng = random.Random(args.seed)
    failures = []
    for index in range(args.cases):
        ideal = random_ideal(rng, max_gens=8, max_vars=6, max_exp=4)
        report = classify(ideal)
        methods = _applicable_methods(ideal, report)
        values = {m: _compute_named(ideal, m) for m in methods}
        if len(set(values.values())) != 1:
            failures.append({"case": index, "ideal": str(ideal), "methods": values})
    document = {
        "command": "verify",
        "mode": "random",
        "seed": args.seed,
        "cases": args.cases,
        "failures": failures,
        "agreement": not failures,
    }
    _emit(document, args)
    return 0 if not failures else InternalConsistencyError.exit_code


def _dispatch(args) -> int:
    if args.command == "verify" and args.random:
        return _run_random_verify(args)
    if args.file and args.ideal:
        raise UsageError("--ideal and --file are mutually exclusive")
    if args.file:
        return _run_batch(args)
    if not args.ideal:
        raise UsageError("provide an ideal with --ideal or --file")
    document, code = _execute(args.ideal, args)
    _emit(document, args)
    return code


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args)
    except MultmonError as exc:
        print(f"multmon: error: {exc}", file=sys.stderr)
        return exc.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
