"""Command-line front end.

Exit codes: 0 when every requested property holds, 1 when one fails or a
synthesis is refused, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional

from .classify import (
    check_example1_counterexample,
    check_structure_identities,
    classify,
)
from .errors import InputError, JordanDerivError, NotJordan, WrongAlgebra
from .fixtures import FIXTURE_NAMES, load_fixture
from .formats import dumps, elem_coords_from_json, load_problem
from .algebra import algebra_from_json
from .ring import ring_from_json
from .solver import DEFAULT_BUDGET, compute_space
from .witness import (
    is_central,
    synthesize_witness,
    verify_witness,
    witness_difference_central,
)

PROPERTIES = ("jordan", "derivation", "antiderivation")
GLOBAL_DEFAULTS = {"input": None, "json": False, "require": "jordan", "budget": DEFAULT_BUDGET, "check_witness": None}


def _emit(text: str):
    sys.stdout.write(text.rstrip("\n") + "\n")


def _dense_lines(elem) -> List[str]:
    rows = elem.to_dense()
    width = max(len(str(v)) for row in rows for v in row)
    return ["  [" + " ".join(str(v).rjust(width) for v in row) + "]" for row in rows]


def _parse_require(text: str) -> List[str]:
    props = [p.strip() for p in text.split(",") if p.strip()]
    for p in props:
        if p not in PROPERTIES:
            raise InputError(f"--require: unknown property {p!r}; expected {', '.join(PROPERTIES)}")
    return props


def _parse_coords(text: str, algebra):
    text = text.strip()
    if text.startswith("["):
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"--check-witness: invalid JSON ({exc.msg})") from exc
    else:
        try:
            raw = [int(t) for t in text.split(",")]
        except ValueError as exc:
            raise InputError("--check-witness: expected comma-separated integers") from exc
    return elem_coords_from_json(raw, algebra, "--check-witness")


def _need_input(args):
    if not getattr(args, "input", None):
        raise InputError("--input is required for this subcommand")
    return load_problem(args.input, require_map=True)


def cmd_classify(args) -> int:
    problem = _need_input(args)
    required = _parse_require(args.require)
    report = classify(problem.map)
    ok = all(report.flag(p) for p in required)
    out = report.to_json()
    out["required"] = required
    out["holds"] = ok
    _emit(dumps(out))
    return 0 if ok else 1


def cmd_witness(args) -> int:
    problem = _need_input(args)
    D = problem.map
    try:
        w = synthesize_witness(D)
    except (WrongAlgebra, NotJordan) as exc:
        if args.json:
            _emit(dumps({"refused": True, "reason": str(exc)}))
        else:
            _emit(f"witness refused: {exc}")
        return 1
    out = w.to_json()
    ok = w.verified
    check = None
    if args.check_witness:
        B2 = _parse_coords(args.check_witness, problem.algebra)
        verified = verify_witness(D, B2)
        check = {
            "coords": list(B2.coords),
            "text": str(B2),
            "verified": verified,
            "difference_central": witness_difference_central(D, w.B, B2) if verified else None,
            "difference": str(w.B - B2),
        }
        ok = ok and verified
        out["check"] = check
    if args.json:
        _emit(dumps(out))
    else:
        lines = [
            f"algebra: {problem.algebra.describe()}",
            f"source: {w.source}",
            f"verified: {str(w.verified).lower()}",
            f"B = {w.B}",
            f"coords: {list(w.B.coords)}",
            "dense:",
            *_dense_lines(w.B),
        ]
        if check is not None:
            lines += [
                f"check witness: {check['text']}",
                f"  verified: {str(check['verified']).lower()}",
            ]
            if check["verified"]:
                lines += [
                    f"  difference from formula witness: {check['difference']}",
                    f"  difference central: {str(check['difference_central']).lower()}",
                ]
        _emit("\n".join(lines))
    return 0 if ok else 1


def cmd_identities(args) -> int:
    problem = _need_input(args)
    report = check_structure_identities(problem.map)
    _emit(dumps(report.to_json()))
    return 0 if report.passed else 1


def _space_algebra(args):
    if getattr(args, "input", None):
        return load_problem(args.input).algebra
    if not args.algebra:
        raise InputError("space needs --input or --algebra")

    def parse(text, what):
        p = Path(text)
        if not text.lstrip().startswith("{") and p.exists():
            text = p.read_text()
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"--{what}: invalid JSON ({exc.msg})") from exc

    alg_obj = parse(args.algebra, "algebra")
    if args.ring:
        ring_obj = parse(args.ring, "ring")
    else:
        ring_obj = alg_obj.get("ring") if isinstance(alg_obj, dict) else None
    if ring_obj is None:
        raise InputError("ring: missing (pass --ring or include \"ring\" in --algebra)")
    ring = ring_from_json(ring_obj, "ring")
    return algebra_from_json(alg_obj, ring, "algebra")


def _space_summary(space, listing: bool) -> dict:
    out = space.summary()
    if listing:
        out["members" if space.explicit is not None else "basis"] = [
            m.rows() for m in (space.explicit if space.explicit is not None else space.basis)
        ]
    return out


def cmd_space(args) -> int:
    algebra = _space_algebra(args)
    budget = args.budget
    requested = compute_space(algebra, args.kind, args.method, budget)
    spaces = {args.kind: requested}
    verdicts = {}
    try:
        for kind in ("jordan", "derivation", "inner"):
            if kind not in spaces:
                spaces[kind] = compute_space(algebra, kind, args.method, budget)
        verdicts["jordan == derivation"] = spaces["jordan"].same_as(spaces["derivation"])
        verdicts["jordan == inner"] = spaces["jordan"].same_as(spaces["inner"])
    except JordanDerivError as exc:
        verdicts = {"unavailable": str(exc)}
    if args.json:
        _emit(dumps({
            "algebra": algebra.describe(),
            "space": _space_summary(requested, args.list),
            "verdicts": verdicts,
        }))
        return 0
    s = requested.summary()
    lines = [f"algebra: {algebra.describe()}", f"kind: {args.kind}", f"method: {s['method']}"]
    for field in ("dimension", "count", "basis_size", "tested"):
        if field in s:
            lines.append(f"{field}: {s[field]}")
    if "unavailable" in verdicts:
        lines.append(f"verdicts unavailable: {verdicts['unavailable']}")
    else:
        lines += [f"{k}: {str(v).lower()}" for k, v in verdicts.items()]
    if args.list:
        items = requested.explicit if requested.explicit is not None else requested.basis
        lines.append("members:" if requested.explicit is not None else "basis:")
        lines += [f"  {json.dumps(m.rows())}" for m in items]
    _emit("\n".join(lines))
    return 0


# ---------------------------------------------------------------------------
# worked examples
# ---------------------------------------------------------------------------


def _run_example1(problem) -> dict:
    exp = problem.expect
    D = problem.map
    report = classify(D)
    ce = check_example1_counterexample(D)
    checks = {
        "jordan": report.is_jordan == exp.get("jordan"),
        "derivation": report.is_derivation == exp.get("derivation"),
        "D(XY)": list(ce.d_xy.coords) == exp.get("counterexample", {}).get("D(XY)"),
        "D(X)Y+XD(Y)": list(ce.leibniz_xy.coords) == exp.get("counterexample", {}).get("D(X)Y+XD(Y)"),
        "differs": ce.differs,
        "no_inner_witness": not any(verify_witness(D, B) for B in problem.algebra.elements()),
    }
    return checks


def _run_witness_example(problem) -> dict:
    exp = problem.expect
    D = problem.map
    alg = problem.algebra
    report = classify(D)
    checks = {
        "jordan": report.is_jordan == exp.get("jordan"),
        "derivation": report.is_derivation == exp.get("derivation"),
    }
    try:
        w = synthesize_witness(D)
    except (WrongAlgebra, NotJordan):
        checks["formula_witness"] = False
        return checks
    checks["formula_witness"] = list(w.B.coords) == [alg.ring.reduce(v) for v in exp.get("formula_witness", [])]
    checks["formula_verified"] = w.verified
    known = [alg.element(c) for c in exp.get("known_witnesses", [])]
    checks["known_witnesses_verify"] = bool(known) and all(verify_witness(D, B) for B in known)
    if checks["known_witnesses_verify"] and w.verified:
        cands = [w.B] + known
        checks["differences_central"] = all(
            is_central(a - b) for t, a in enumerate(cands) for b in cands[t + 1:]
        )
    else:
        checks["differences_central"] = False
    return checks


def cmd_paper_examples(args) -> int:
    results = []
    for name in FIXTURE_NAMES:
        try:
            problem = load_fixture(name, args.fixtures_dir)
            checks = _run_example1(problem) if name == "example1" else _run_witness_example(problem)
            error = None
        except JordanDerivError as exc:
            checks, error = {}, str(exc)
        entry = {"name": name, "checks": checks, "passed": error is None and all(checks.values())}
        if error:
            entry["error"] = error
        results.append(entry)
    ok = all(r["passed"] for r in results)
    if args.json:
        _emit(dumps({"examples": results, "passed": ok}))
    else:
        lines = []
        for r in results:
            lines.append(f"{r['name']}: {'pass' if r['passed'] else 'FAIL'}")
            for k, v in r["checks"].items():
                lines.append(f"  {k}: {'ok' if v else 'FAILED'}")
            if "error" in r:
                lines.append(f"  error: {r['error']}")
        lines.append(f"all examples: {'pass' if ok else 'FAIL'}")
        _emit("\n".join(lines))
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--input", metavar="PATH", help="problem file (JSON: ring, algebra, map)")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--require", metavar="PROPS",
                        help="comma list of jordan,derivation,antiderivation (classify; default jordan)")
    common.add_argument("--budget", type=int, metavar="N",
                        help=f"enumeration budget (default {DEFAULT_BUDGET})")
    common.add_argument("--check-witness", metavar="COORDS",
                        help="also verify this witness (comma-separated or JSON coordinates)")

    parser = argparse.ArgumentParser(
        prog="jordanderiv",
        parents=[common],
        description=(
            "Classify linear maps on matrix algebras as Jordan derivations, derivations or "
            "antiderivations, and build inner-derivation witnesses. Dense matrices print "
            "canonical representatives: values in [0, m) over Z/m, plain integers over Z."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="report Jordan / derivation / antiderivation")
    p.set_defaults(func=cmd_classify)
    p = sub.add_parser("witness", parents=[common], help="synthesize B with D(X) = BX - XB")
    p.set_defaults(func=cmd_witness)
    p = sub.add_parser("identities", parents=[common], help="check coefficient identities on T_n / M_n")
    p.set_defaults(func=cmd_identities)
    p = sub.add_parser("space", parents=[common], help="compute spaces of maps")
    p.add_argument("--algebra", metavar="JSON", help="algebra JSON (inline or path)")
    p.add_argument("--ring", metavar="JSON", help="ring JSON (inline or path)")
    p.add_argument("--kind", choices=["jordan", "derivation", "antiderivation", "inner"], default="jordan")
    p.add_argument("--method", choices=["kernel", "enumerate", "auto"], default="auto")
    p.add_argument("--list", action="store_true", help="print members or basis")
    p.set_defaults(func=cmd_space)
    p = sub.add_parser("paper-examples", parents=[common], help="run the three worked examples")
    p.add_argument("--fixtures-dir", metavar="DIR", default=None,
                   help="load fixtures from DIR instead of the bundled copies")
    p.set_defaults(func=cmd_paper_examples)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    # the global and per-subcommand flags share actions, so defaults go in here
    for name, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, name):
            setattr(args, name, value)
    try:
        return args.func(args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except JordanDerivError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
