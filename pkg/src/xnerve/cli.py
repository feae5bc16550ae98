"""Command-line front end.

    xnerve <command> <file> [--dims A..B] [--max-cells N] [--json OUT]
                             [--basepoint OBJ] [--pi LIST] [--seed S]

Commands: validate, classify, enumerate, audit, coskeletal, kan, fill,
homotopy.  Exit codes: 0 all requested checks pass, 1 structural error in
the input, 2 a property fails or an operation refuses (a witness is
reported), 3 an enumeration exceeded the cell budget.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import homotopy as H
from . import simplicial as S
from .algebra import classify_structure, validate_crossed_monoid
from .errors import (
    CapacityError,
    DEFAULT_CAPACITY,
    NotCrossedModuleError,
    NotKanError,
    StructureError,
    XNerveError,
)
from .fillers import HornFiller
from .io import parse_input, to_crossed_monoid
from .nerve import Nerve

EXIT_OK = 0
EXIT_STRUCTURAL = 1
EXIT_PROPERTY = 2
EXIT_CAPACITY = 3


def _parse_dims(text: str, default: tuple[int, int]) -> tuple[int, int]:
    if text is None:
        return default
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    v = int(text)
    return v, v


def _cell_text(c) -> str:
    return c.text() if hasattr(c, "text") else repr(c)


def _report_lines(checks: list[dict]) -> list[str]:
    lines = []
    for c in checks:
        status = "PASS" if c["passed"] else "FAIL"
        lines.append(f"{status} {c['label']}: {c['detail']}")
    return lines


def cmd_validate(xm, args) -> tuple[int, list[dict]]:
    report = validate_crossed_monoid(xm)
    checks = [
        {
            "label": "axioms",
            "passed": report.passed,
            "detail": "all axiom instances hold"
            if report.passed
            else "; ".join(f"{v.axiom} witness {v.witness} ({v.detail})" for v in report.violations),
            "violations": [
                {"axiom": v.axiom, "witness": list(v.witness), "detail": v.detail} for v in report.violations
            ],
        }
    ]
    return (EXIT_OK if report.passed else EXIT_PROPERTY), checks


def cmd_classify(xm, args) -> tuple[int, list[dict]]:
    cls = classify_structure(xm)
    flags = {
        "category_is_groupoid": cls.is_groupoid,
        "fibers_are_groups": cls.fibers_are_groups,
        "fibers_cancellative": cls.fibers_cancellative,
        "action_injective": cls.action_injective,
        "is_crossed_module": cls.is_crossed_module,
    }
    checks = [
        {"label": name, "passed": value, "detail": str(value), "witness": list(dict(cls.witnesses).get(name, ()))}
        for name, value in flags.items()
    ]
    return EXIT_OK, checks


def cmd_enumerate(xm, args) -> tuple[int, list[dict]]:
    lo, hi = _parse_dims(args.dims, (0, 3))
    nerve = Nerve(xm)
    checks = []
    for n in range(lo, hi + 1):
        count = nerve.count_cells(n)
        detail = f"{count} cells"
        listing = None
        if count <= 50:
            listing = [_cell_text(c) for c in nerve.cells(n, cap=args.max_cells)]
        elif count > args.max_cells:
            raise CapacityError(f"{count} cells of dimension {n} exceed --max-cells {args.max_cells}",
                                predicted=count, cap=args.max_cells)
        checks.append({"label": f"cells[{n}]", "passed": True, "detail": detail, "count": count, "cells": listing})
    return EXIT_OK, checks


def cmd_audit(xm, args) -> tuple[int, list[dict]]:
    lo, hi = _parse_dims(args.dims, (0, 3))
    report = S.audit_simplicial(Nerve(xm), hi, cap=args.max_cells)
    checks = [
        {
            "label": f"simplicial-identities<= {hi}",
            "passed": report.passed,
            "detail": "all identity instances hold"
            if report.passed
            else "; ".join(f"{v.axiom} at {v.witness[:3]} on {_cell_text(v.witness[3])}" for v in report.violations),
        }
    ]
    return (EXIT_OK if report.passed else EXIT_PROPERTY), checks


def cmd_coskeletal(xm, args) -> tuple[int, list[dict]]:
    lo, hi = _parse_dims(args.dims, (4, 5))
    records = S.check_coskeletal(Nerve(xm), lo - 1, hi, cap=args.max_cells)
    checks = []
    ok = True
    for r in records:
        passed = r.bijective
        ok = ok and passed
        detail = f"cells={r.cell_count} kernel={r.kernel_size} injective={r.injective} surjective={r.surjective}"
        entry = {"label": f"boundary-bijective[{r.dim}]", "passed": passed, "detail": detail}
        if r.surjectivity_witness is not None:
            entry["witness"] = [_cell_text(f) for f in r.surjectivity_witness.faces]
        if r.injectivity_witness is not None:
            entry["witness_cells"] = [_cell_text(c) for c in r.injectivity_witness]
        checks.append(entry)
    return (EXIT_OK if ok else EXIT_PROPERTY), checks


def cmd_kan(xm, args) -> tuple[int, list[dict]]:
    lo, hi = _parse_dims(args.dims, (1, 3))
    report = S.check_kan(Nerve(xm), upto=hi, from_dim=lo, cap=args.max_cells)
    checks = []
    for r in report.records:
        entry = {
            "label": f"horn-fillable[{r.dim},{r.omitted}]",
            "passed": r.fillable,
            "detail": f"{r.horn_count - r.unfillable}/{r.horn_count} horns fillable",
        }
        if r.witness is not None:
            entry["witness"] = [_cell_text(f) for f in r.witness.faces]
            entry["witness_omitted"] = r.witness.omitted
        checks.append(entry)
    return (EXIT_OK if report.is_kan else EXIT_PROPERTY), checks


def cmd_fill(xm, args) -> tuple[int, list[dict]]:
    lo, hi = _parse_dims(args.dims, (2, 3))
    filler = HornFiller(xm)
    nerve = filler.nerve
    rng = random.Random(args.seed)
    checks = []
    for n in range(max(lo, 2), hi + 1):
        count = nerve.count_cells(n)
        for l in range(n + 1):
            if count <= args.max_cells:
                horn_list = S.horns(nerve, n, l, cap=args.max_cells)
                mode = "exhaustive"
            else:
                sample = min(1000, args.max_cells)
                horn_list = [
                    S.horn_of_cell(nerve, nerve.cell_at(n, rng.randrange(count)), l)
                    for _ in range(sample)
                ]
                mode = f"sampled {sample} (seed {args.seed})"
            for h in horn_list:
                filler.fill(h)
            checks.append(
                {
                    "label": f"fill[{n},{l}]",
                    "passed": True,
                    "detail": f"{len(horn_list)} horns filled and face-verified ({mode})",
                }
            )
    return EXIT_OK, checks


def cmd_homotopy(xm, args) -> tuple[int, list[dict]]:
    wanted = [int(v) for v in (args.pi or "1,2").split(",") if v != ""]
    t = args.basepoint
    checks = []
    ok = True
    for n in wanted:
        if n == 0:
            comps = H.pi0(xm)
            checks.append(
                {
                    "label": "pi0",
                    "passed": True,
                    "detail": f"{len(comps)} connected component(s)",
                    "components": [list(c) for c in comps],
                }
            )
        elif n in (1, 2):
            comparison = H.pi_compare(xm, n, t, cap=args.max_cells)
            passed = comparison.isomorphic
            ok = ok and passed
            g = comparison.algebraic
            checks.append(
                {
                    "label": f"pi{n}[basepoint {t}]",
                    "passed": passed,
                    "detail": f"order {g.order} ({g.structure_tag()}), brute force agrees"
                    if passed
                    else f"algebraic order {g.order} but brute force gives {comparison.bruteforce.order}",
                    "order": g.order,
                    "abelian": g.is_abelian,
                    "isomorphism": list(comparison.isomorphism) if comparison.isomorphism else None,
                }
            )
        elif n == 3:
            v = H.higher_vanishing(xm, t, cap=args.max_cells)
            ok = ok and v.trivial
            checks.append(
                {
                    "label": f"pi3[basepoint {t}]",
                    "passed": v.trivial,
                    "detail": "trivial" if v.trivial else f"{v.classes} classes over {v.based_cells} cells",
                }
            )
        else:
            raise XNerveError(f"--pi supports 0..3, got {n}")
    return (EXIT_OK if ok else EXIT_PROPERTY), checks


_COMMANDS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "enumerate": cmd_enumerate,
    "audit": cmd_audit,
    "coskeletal": cmd_coskeletal,
    "kan": cmd_kan,
    "fill": cmd_fill,
    "homotopy": cmd_homotopy,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="xnerve", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("file", help="input document (JSON)")
    parser.add_argument("--dims", help="dimension range A..B (or a single dimension)")
    parser.add_argument("--max-cells", type=int, default=DEFAULT_CAPACITY, help="enumeration budget")
    parser.add_argument("--json", dest="json_out", help="write the machine-readable report here")
    parser.add_argument("--basepoint", type=int, default=0, help="object id for homotopy groups")
    parser.add_argument("--pi", help="comma-separated homotopy dimensions, e.g. 1,2")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled filling")
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    report: dict = {"tool": "xnerve", "command": args.command, "input": args.file}
    try:
        with open(args.file, "rb") as fh:
            doc = parse_input(fh.read())
        xm = to_crossed_monoid(doc)
        code, checks = _COMMANDS[args.command](xm, args)
    except FileNotFoundError:
        report.update(passed=False, exit_code=EXIT_STRUCTURAL, error={"kind": "io", "message": f"no such file: {args.file}"})
        code, checks = EXIT_STRUCTURAL, None
    except StructureError as exc:
        report.update(passed=False, exit_code=EXIT_STRUCTURAL, error={"kind": "structural", "message": str(exc)})
        code, checks = EXIT_STRUCTURAL, None
    except CapacityError as exc:
        report.update(passed=False, exit_code=EXIT_CAPACITY,
                      error={"kind": "capacity", "message": str(exc), "predicted": exc.predicted, "cap": exc.cap})
        code, checks = EXIT_CAPACITY, None
    except NotCrossedModuleError as exc:
        report.update(passed=False, exit_code=EXIT_PROPERTY,
                      error={"kind": "refusal", "hypothesis": exc.hypothesis, "witness": list(exc.witness)})
        code, checks = EXIT_PROPERTY, None
    except NotKanError as exc:
        report.update(passed=False, exit_code=EXIT_PROPERTY,
                      error={"kind": "not-kan", "dim": exc.dim, "omitted": exc.omitted})
        code, checks = EXIT_PROPERTY, None
    if checks is not None:
        report.update(passed=code == EXIT_OK, exit_code=code, checks=checks)
        for line in _report_lines(checks):
            print(line)
    else:
        err = report["error"]
        print(f"ERROR ({err['kind']}): " + err.get("message", json.dumps(err)), file=sys.stderr)
    if args.json_out:
        with open(args.json_out, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2, sort_keys=True)
            fh.write("\n")
    return code


def main() -> None:
    raise SystemExit(run())
