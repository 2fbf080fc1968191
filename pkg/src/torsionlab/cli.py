"""Command line: run workbench tasks from a declarative spec file.

Subcommands map one-to-one onto tasks (`inspect` runs the `enumerate`
task, `monomial` runs `monomial-decide`).  The spec file is a single JSON
document validated strictly against the shipped schema; unknown fields are
rejected.  Reports render as text or JSON; the JSON form is byte-identical
across runs for a fixed spec and tool version, so timing is reported only
in text mode.

Exit codes: 0 on success, 1 on a theorem-suite counterexample or, under
--expect-pass, on any refuted or exhausted decision, 2 on input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources

import jsonschema

from . import __version__
from .errors import SpecValidationError, WorkbenchError
from .filters import (
    GabrielFilter,
    enumerate_gabriel_filters,
    filter_from_mult_set,
    filter_from_prime,
    gabriel_closure,
    improper_filter,
    lambda_filter,
    spec_partition,
    trivial_filter,
)
from .modules import free_module
from .monomial import (
    DecisionBudget,
    Monomial,
    MonomialIdeal,
    PrincipalMultSet,
    TailFamily,
    VariablePattern,
    almost_jansian_principal,
    cohen_scan,
    in_filter,
    monomial_ideal,
    s_finite_decide,
    saturation,
)
from .noether import theorem_suite, tfg_certificate, verify_certificate
from .rings import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    build_ring,
    enumerate_ideals,
    ideal_from_generators,
    local_decomposition,
    prime_spectrum,
    ring_catalog,
)

TASK_BY_COMMAND = {
    "inspect": "enumerate",
    "partition": "partition",
    "closure": "closure",
    "certify": "certify",
    "suite": "suite",
    "census": "census",
    "monomial": "monomial-decide",
}

_SPEC_SCHEMA = None


def _spec_schema() -> dict:
    global _SPEC_SCHEMA
    if _SPEC_SCHEMA is None:
        text = (
            resources.files("torsionlab.schemas")
            .joinpath("workbench-spec.v1.json")
            .read_text(encoding="utf-8")
        )
        _SPEC_SCHEMA = json.loads(text)
    return _SPEC_SCHEMA


def load_spec(path: str) -> dict:
    """Parse the spec file; JSON errors surface with line and column."""
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise SpecValidationError(f"cannot read spec file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecValidationError(
            f"spec file {path} is not valid JSON: {exc.msg} "
            f"(line {exc.lineno}, column {exc.colno})"
        ) from exc


def validate_spec(doc: dict) -> None:
    validator = jsonschema.Draft202012Validator(_spec_schema())
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.absolute_path))
    if errors:
        first = errors[0]
        where = first.json_path
        raise SpecValidationError(f"spec validation failed at {where}: {first.message}")


def build_filter(ring: FiniteRing, spec) -> GabrielFilter:
    if spec == "lambda":
        return lambda_filter(ring)
    if spec == "trivial":
        return trivial_filter(ring)
    if spec == "improper":
        return improper_filter(ring)
    if "mult_set" in spec:
        return filter_from_mult_set(ring, spec["mult_set"])
    if "prime_complement" in spec:
        prime = ideal_from_generators(ring, spec["prime_complement"]["ideal_gens"])
        return filter_from_prime(ring, prime)
    seeds = [ideal_from_generators(ring, gens) for gens in spec["seeds"]]
    return gabriel_closure(ring, seeds)


def _parse_monomial(doc: dict) -> Monomial:
    return Monomial.from_mapping(doc["vars"])


def _parse_monomial_ideal(doc: dict) -> MonomialIdeal:
    gens = [_parse_monomial(g) for g in doc.get("gens", [])]
    families = [
        TailFamily(
            _parse_monomial(f["base"]),
            f["start"],
            f.get("step", 1),
            f.get("e", 1),
        )
        for f in doc.get("families", [])
    ]
    ideal = MonomialIdeal(tuple(gens), tuple(families))
    ideal.validate()
    return ideal


def _parse_pattern(doc: dict) -> VariablePattern:
    tail = doc.get("tail")
    return VariablePattern(
        finite=frozenset(doc.get("finite", [])),
        tail_start=tail["start"] if tail else None,
        tail_step=tail.get("step", 1) if tail else 1,
    )


# ---------------------------------------------------------------------------
# Task runners: each returns (results dict, counterexamples list)
# ---------------------------------------------------------------------------


def _run_enumerate(doc: dict, cap: int, budget: DecisionBudget) -> tuple[dict, list]:
    ring = build_ring(doc["ring"], cap)
    results = {
        "kind": "enumerate",
        "ring": ring.label,
        "size": ring.size,
        "ideal_count": len(enumerate_ideals(ring)),
        "ideals": [i.label for i in enumerate_ideals(ring)],
        "spectrum": [p.label for p in prime_spectrum(ring)],
        "local_factors": [factor.label for factor, _ in local_decomposition(ring)],
    }
    return results, []


def _run_partition(doc: dict, cap: int, budget: DecisionBudget) -> tuple[dict, list]:
    ring = build_ring(doc["ring"], cap)
    sigma = build_filter(ring, doc["filter"])
    part = spec_partition(sigma)
    results = {
        "kind": "partition",
        "ring": ring.label,
        "filter": sigma.label,
        "K": [p.label for p in part.K],
        "Z": [p.label for p in part.Z],
        "C": [p.label for p in part.C],
    }
    return results, []


def _run_closure(doc: dict, cap: int, budget: DecisionBudget) -> tuple[dict, list]:
    from .filters import closure as module_closure
    from .filters import is_closed, is_dense

    ring = build_ring(doc["ring"], cap)
    sigma = build_filter(ring, doc["filter"])
    ideal = ideal_from_generators(ring, doc["params"]["ideal_gens"])
    carrier = free_module(ring, 1)
    sub = frozenset(ideal.elements)
    closed = module_closure(carrier, sub, sigma)
    closed_ideal = ideal_from_generators(ring, sorted(closed))
    results = {
        "kind": "closure",
        "ring": ring.label,
        "filter": sigma.label,
        "ideal": ideal.label,
        "closure": closed_ideal.label,
        "closure_elements": sorted(closed),
        "is_closed": is_closed(carrier, sub, sigma),
        "is_dense": is_dense(carrier, sub, sigma),
    }
    return results, []


def _run_certify(doc: dict, cap: int, budget: DecisionBudget) -> tuple[dict, list]:
    ring = build_ring(doc["ring"], cap)
    sigma = build_filter(ring, doc["filter"])
    ideal = ideal_from_generators(ring, doc["params"]["ideal_gens"])
    carrier = free_module(ring, 1)
    sub = frozenset(ideal.elements)
    cert = tfg_certificate(carrier, sub, sigma)
    verified, reason = verify_certificate(carrier, sub, sigma, cert)
    results = {
        "kind": "certify",
        "ring": ring.label,
        "filter": sigma.label,
        "ideal": ideal.label,
        "certificate": {
            "kind": cert.kind,
            "generators": list(cert.subobject_generators),
            "generator_labels": [
                carrier.elem_label(g) for g in cert.subobject_generators
            ],
            "h": cert.filter_ideal.label,
        },
        "verified": verified,
    }
    counterexamples = [] if verified else [f"certificate failed: {reason}"]
    return results, counterexamples


def _run_suite(doc: dict, cap: int, budget: DecisionBudget) -> tuple[dict, list]:
    params = doc.get("params", {})
    pairs: list[tuple[FiniteRing, GabrielFilter]] = []
    if "sweep_max_size" in params:
        for term in ring_catalog(params["sweep_max_size"]):
            ring = build_ring(term, cap)
            for sigma in enumerate_gabriel_filters(ring):
                pairs.append((ring, sigma))
    else:
        ring = build_ring(doc["ring"], cap)
        pairs.append((ring, build_filter(ring, doc["filter"])))
    reports = []
    counterexamples = []
    for ring, sigma in pairs:
        report = theorem_suite(ring, sigma)
        reports.append(report.to_dict())
        for result in report.results:
            if not result.passed:
                counterexamples.append(
                    f"{ring.label} / {sigma.label} / {result.name}: "
                    f"{result.counterexample}"
                )
    results = {
        "kind": "suite",
        "all_passed": not counterexamples,
        "reports": reports,
    }
    return results, counterexamples


def _run_census(doc: dict, cap: int, budget: DecisionBudget) -> tuple[dict, list]:
    ring = build_ring(doc["ring"], cap)
    filters = enumerate_gabriel_filters(ring)
    results = {
        "kind": "census",
        "ring": ring.label,
        "gabriel_filters": len(filters),
        "filters": [
            {"basis": [b.label for b in f.basis], "members": len(f.members)}
            for f in filters
        ],
    }
    return results, []


def _run_monomial(doc: dict, cap: int, budget: DecisionBudget) -> tuple[dict, list]:
    params = doc["params"]
    op = params["op"]
    mult = PrincipalMultSet(_parse_monomial(params["mult_set"]["s"]))
    results: dict = {"kind": "monomial-decide", "op": op, "mult_set": mult.label}
    counterexamples: list[str] = []
    if op in ("decide", "saturate", "in_filter"):
        if "ideal" not in params:
            raise SpecValidationError(f"monomial op {op!r} needs params.ideal")
        ideal = _parse_monomial_ideal(params["ideal"])
        results["ideal"] = ideal.label
        if op == "decide":
            decision = s_finite_decide(ideal, mult, budget)
            results["verdict"] = decision.verdict
            results["power"] = decision.power
            results["prefix"] = [p.label for p in decision.prefix]
            results["reason"] = decision.reason
            if decision.verdict != "certified":
                counterexamples.append(
                    f"decision {decision.verdict}: {decision.reason or 'budget exceeded'}"
                )
        elif op == "saturate":
            results["saturation"] = saturation(ideal, mult).label
        else:
            found, power = in_filter(ideal, mult)
            results["found"] = found
            results["power"] = power
    elif op == "cohen":
        if "primes" not in params:
            raise SpecValidationError("monomial op 'cohen' needs params.primes")
        patterns = [_parse_pattern(p) for p in params["primes"]]
        report = cohen_scan(mult, patterns, budget)
        results["entries"] = [
            {
                "pattern": e.pattern.label,
                "side": e.side,
                "verdict": e.decision.verdict if e.decision else None,
            }
            for e in report.entries
        ]
        results["verdict"] = report.verdict
        results["cross_check"] = (
            {
                "ideal": report.cross_check[0].label,
                "verdict": report.cross_check[1].verdict,
            }
            if report.cross_check
            else None
        )
        results["consistent"] = report.consistent
        if report.verdict == "not-totally-noetherian":
            counterexamples.extend(
                f"K-prime {p.label} is {d.verdict}" for p, d in report.uncertified
            )
    else:  # almost_jansian
        outcome = almost_jansian_principal(mult)
        results["holds"] = outcome.holds
        results["witness"] = outcome.witness.label if outcome.witness else None
        if not outcome.holds:
            counterexamples.append(
                f"stabilized powers of {results['witness']} leave the filter"
            )
    return results, counterexamples


_RUNNERS = {
    "enumerate": _run_enumerate,
    "partition": _run_partition,
    "closure": _run_closure,
    "certify": _run_certify,
    "suite": _run_suite,
    "census": _run_census,
    "monomial-decide": _run_monomial,
}


def execute(doc: dict, cap: int = DEFAULT_SIZE_CAP, budget: DecisionBudget = DecisionBudget(),
            expect_pass: bool = False) -> tuple[dict, int]:
    """Validate and run one workbench document; returns (report, exit code)."""
    validate_spec(doc)
    results, counterexamples = _RUNNERS[doc["task"]](doc, cap, budget)
    report = {
        "schema": "workbench-report.v1",
        "version": __version__,
        "task": doc["task"],
        "spec_echo": doc,
        "results": results,
        "counterexamples": counterexamples,
        "timing_ms": None,
    }
    code = 0
    if doc["task"] == "suite" and counterexamples:
        code = 1
    elif expect_pass and counterexamples:
        code = 1
    return report, code


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def render_text(report: dict, elapsed_ms: float) -> str:
    lines = [f"task: {report['task']}  (tool {report['version']})"]
    results = report["results"]
    kind = results["kind"]
    if kind == "enumerate":
        lines.append(f"ring: {results['ring']} (size {results['size']})")
        lines.append(f"ideals ({results['ideal_count']}): " + ", ".join(results["ideals"]))
        lines.append("spectrum: " + ", ".join(results["spectrum"]))
        lines.append("local factors: " + " x ".join(results["local_factors"]))
    elif kind == "partition":
        lines.append(f"ring: {results['ring']}   filter: {results['filter']}")
        lines.append("K: " + (", ".join(results["K"]) or "(empty)"))
        lines.append("Z: " + (", ".join(results["Z"]) or "(empty)"))
        lines.append("C: " + (", ".join(results["C"]) or "(empty)"))
    elif kind == "closure":
        lines.append(f"ring: {results['ring']}   filter: {results['filter']}")
        lines.append(f"closure({results['ideal']}) = {results['closure']}")
        lines.append(
            f"closed: {results['is_closed']}   dense: {results['is_dense']}"
        )
    elif kind == "certify":
        cert = results["certificate"]
        lines.append(f"ring: {results['ring']}   filter: {results['filter']}")
        lines.append(
            f"certificate for {results['ideal']}: H = <"
            + ",".join(cert["generator_labels"])
            + f">, h = {cert['h']}"
        )
        lines.append(f"verified: {results['verified']}")
    elif kind == "suite":
        lines.append(f"all_passed: {results['all_passed']}")
        for rep in results["reports"]:
            lines.append(f"- {rep['ring']} / {rep['filter']}: "
                         + ("pass" if rep["all_passed"] else "FAIL"))
            for theorem in rep["theorems"]:
                mark = "ok " if theorem["passed"] else "FAIL"
                lines.append(
                    f"    [{mark}] {theorem['name']} "
                    f"({theorem['instances_checked']} instances)"
                )
    elif kind == "census":
        lines.append(f"ring: {results['ring']}")
        lines.append(f"gabriel_filters: {results['gabriel_filters']}")
        for f in results["filters"]:
            lines.append(f"- basis {','.join(f['basis'])}: {f['members']} members")
    else:
        for key in sorted(results):
            if key != "kind":
                lines.append(f"{key}: {results[key]}")
    if report["counterexamples"]:
        lines.append("counterexamples:")
        lines.extend(f"- {c}" for c in report["counterexamples"])
    lines.append(f"elapsed: {elapsed_ms:.1f} ms")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsionlab",
        description="Exact workbench for torsion filters on finite rings "
        "and monomial finiteness decisions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for command in TASK_BY_COMMAND:
        p = sub.add_parser(command, help=f"run the {TASK_BY_COMMAND[command]} task")
        p.add_argument("--spec", required=True, help="path to the spec JSON file")
        p.add_argument("--format", choices=["text", "json"], default=None)
        p.add_argument("--cap", type=int, default=DEFAULT_SIZE_CAP,
                       help="carrier size cap (default %(default)s)")
        p.add_argument("--budget", type=int, default=8,
                       help="max certified power for monomial decisions")
        p.add_argument("--expect-pass", action="store_true",
                       help="exit 1 on refuted or exhausted decisions")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    started = time.perf_counter()
    try:
        doc = load_spec(args.spec)
        task = TASK_BY_COMMAND[args.command]
        if not isinstance(doc, dict):
            raise SpecValidationError("spec file must contain a JSON object")
        if "task" in doc and doc["task"] != task:
            raise SpecValidationError(
                f"spec file declares task {doc['task']!r} but the "
                f"{args.command!r} subcommand runs {task!r}"
            )
        doc = {**doc, "task": task}
        budget = DecisionBudget(max_power=args.budget)
        report, code = execute(
            doc, cap=args.cap, budget=budget, expect_pass=args.expect_pass
        )
    except WorkbenchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return 2
    fmt = args.format or report["spec_echo"].get("format") or "text"
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if fmt == "json":
        sys.stdout.write(render_json(report))
    else:
        sys.stdout.write(render_text(report, elapsed_ms))
    return code


if __name__ == "__main__":
    sys.exit(main())
