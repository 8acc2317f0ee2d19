"""Single command-line entry point for every operation.

Problem documents are JSON (or TOML for job files); rationals cross the
boundary as ``p/q`` strings only.  Output is canonical text or JSON and is
byte-identical across runs.  Exit codes: 0 success, 1 domain error (with a
structured report), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import curves, mundet, potentials, stability
from .algebra import format_fraction, to_fraction
from .errors import DomainError, InputError

DEFAULT_TRUNCATION = 4


@dataclass
class CommandResult:
    text: List[str]
    data: object


# -- payload validation helpers -------------------------------------------------


def _check_keys(payload: dict, required: Tuple[str, ...], optional: Tuple[str, ...]):
    if not isinstance(payload, dict):
        raise InputError("payload must be an object")
    for key in required:
        if key not in payload:
            raise InputError(f"payload misses required key {key!r}")
    unknown = set(payload) - set(required) - set(optional)
    if unknown:
        raise InputError(f"payload has unknown keys {sorted(unknown)}")


def _as_int(payload: dict, key: str, default=None) -> int:
    value = payload.get(key, default)
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"payload key {key!r} must be an integer")
    return value


def _as_bool(payload: dict, key: str, default=False) -> bool:
    value = payload.get(key, default)
    if not isinstance(value, bool):
        raise InputError(f"payload key {key!r} must be a boolean")
    return value


def _as_list(payload: dict, key: str) -> list:
    value = payload.get(key)
    if not isinstance(value, list):
        raise InputError(f"payload key {key!r} must be a list")
    return value


def _weight_rows(raw: list) -> list:
    """Accept [[...], ...] or a flat list of ints (rank-1 weights)."""
    if all(isinstance(x, int) and not isinstance(x, bool) for x in raw):
        return [[x] for x in raw]
    if all(isinstance(x, list) for x in raw):
        return raw
    raise InputError("weights must be integers or integer vectors")


def _series_json(series) -> dict:
    return {
        "degree_variables": list(series.degree_variables),
        "truncation": series.truncation,
        "coefficients": {
            ",".join(str(d) for d in degs): coeff.to_text()
            for degs, coeff in sorted(series.coefficients.items())
        },
    }


# -- command runners --------------------------------------------------------------


def _run_stability_classify(payload: dict) -> CommandResult:
    _check_keys(payload, ("weight_system", "support"), ())
    ws = stability.weight_system_from_json(payload["weight_system"])
    support = stability.SupportSet.of(_as_list(payload, "support"), ws.count)
    verdict = stability.classify(ws, support)
    lines = [f"status = {verdict.status.value}"]
    if verdict.witness is not None:
        lines.append(f"witness = {list(verdict.witness)}")
    return CommandResult(lines, verdict.to_json())


def _run_stability_strata(payload: dict) -> CommandResult:
    _check_keys(payload, ("weight_system",), ())
    ws = stability.weight_system_from_json(payload["weight_system"])
    strata = stability.kn_strata(ws)
    lines = [f"strata = {len(strata)}"]
    for stratum in strata:
        lam = "[" + ", ".join(format_fraction(x) for x in stratum.lam) + "]"
        fixed = sorted(stratum.fixed_support)
        lines.append(f"lambda = {lam}; fixed_support = {fixed}")
    return CommandResult(lines, {"strata": [s.to_json() for s in strata]})


def _run_mundet_check(payload: dict) -> CommandResult:
    _check_keys(
        payload, ("weight_system", "bundle_degree", "support"), ("section_degree",)
    )
    data = mundet.gauged_map_from_json(payload)
    verdict = mundet.mundet_classify(data)
    if verdict.witness is None:
        lines = [verdict.status.value]
    else:
        lines = [f"{verdict.status.value} witness={list(verdict.witness)}"]
    return CommandResult(lines, verdict.to_json())


def _run_mundet_quotdim(payload: dict) -> CommandResult:
    _check_keys(payload, ("k", "dp", "du"), ())
    dim = mundet.quot_moduli_dimension(
        _as_int(payload, "k"), _as_int(payload, "dp"), _as_int(payload, "du")
    )
    return CommandResult([f"dimension = {dim}"], {"dimension": dim})


def _run_curves_enumerate(payload: dict) -> CommandResult:
    _check_keys(payload, ("n", "mode"), ("bound",))
    bound = _as_int(payload, "bound", curves.DEFAULT_ENUMERATION_BOUND)
    types = curves.enumerate_types(_as_int(payload, "n"), payload["mode"], bound)
    lines = []
    data = []
    for t in types:
        dim = curves.stratum_dimension(t)
        lines.append(f"{curves.term(t)}  dim={dim}")
        data.append(
            {
                "term": curves.term(t),
                "dimension": dim,
                "type": curves.scaled_type_to_json(t),
            }
        )
    return CommandResult(lines, {"count": len(types), "types": data})


def _run_curves_balanced(payload: dict) -> CommandResult:
    _check_keys(payload, ("type", "params"), ())
    t = curves.scaled_type_from_json(payload["type"])
    params = curves.edge_params_from_json(payload["params"])
    violation = curves.validate(t)
    if violation is not None:
        raise DomainError(
            f"invalid type: {violation.clause} at vertex {violation.vertex}: "
            f"{violation.detail}"
        )
    ok = curves.check_balanced(t, params)
    return CommandResult(
        [f"balanced = {'true' if ok else 'false'}"], {"balanced": ok}
    )


def _run_curves_divisors(payload: dict) -> CommandResult:
    _check_keys(payload, ("n", "mode"), ("bound",))
    bound = _as_int(payload, "bound", curves.DEFAULT_ENUMERATION_BOUND)
    pairing = curves.divisor_pairs(_as_int(payload, "n"), payload["mode"], bound)
    lines = [f"side_a: {pairing.side_a_note}"]
    lines.extend(f"  {curves.term(t)}" for t in pairing.side_a)
    lines.append(f"side_b: {pairing.side_b_note}")
    lines.extend(f"  {curves.term(t)}" for t in pairing.side_b)
    return CommandResult(lines, pairing.to_json())


def _run_potential_localized(payload: dict) -> CommandResult:
    _check_keys(payload, ("weights",), ("rank", "trunc", "degree_basis", "branch"))
    weights = _weight_rows(_as_list(payload, "weights"))
    rank = _as_int(payload, "rank", len(weights[0]))
    trunc = _as_int(payload, "trunc", DEFAULT_TRUNCATION)
    basis = payload.get("degree_basis")
    branch = payload.get("branch", "default")
    spec = potentials.LinearActionSpec.create(rank, weights, basis, trunc)
    series = potentials.localized_potential(spec, branch)
    return CommandResult([series.to_text()], _series_json(series))


def _run_potential_jframed(payload: dict) -> CommandResult:
    _check_keys(payload, ("k", "r"), ("trunc", "specialize"))
    k = _as_int(payload, "k")
    specialize = payload.get("specialize")
    if specialize is None:
        point = None
    elif specialize == "default":
        point = potentials.default_specialization(k)
    elif isinstance(specialize, dict):
        try:
            point = {name: to_fraction(value) for name, value in specialize.items()}
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad specialization value: {exc}") from exc
    else:
        raise InputError("specialize must be omitted, \"default\", or an object")
    spec = potentials.FramedSheafSpec.create(
        k,
        _as_int(payload, "r"),
        _as_int(payload, "trunc", DEFAULT_TRUNCATION),
        point,
    )
    series = potentials.framed_sheaf_fundamental_solution(spec)
    return CommandResult([series.to_text()], _series_json(series))


def _run_potential_delta(payload: dict) -> CommandResult:
    _check_keys(payload, ("m",), ())
    value = potentials.delta_factor(_as_int(payload, "m"))
    return CommandResult([value.to_text()], {"delta": value.to_text()})


def _run_qde_check(payload: dict) -> CommandResult:
    _check_keys(payload, ("k", "trunc"), ("ktheory",))
    k = _as_int(payload, "k")
    trunc = _as_int(payload, "trunc")
    if _as_bool(payload, "ktheory"):
        residual = potentials.qde_residual_ktheoretic(k, trunc)
    else:
        residual = potentials.qde_residual_cohomological(k, trunc)
    text = residual.to_text()
    return CommandResult(
        [f"residual = {text}"], {"residual": text, "vanishes": residual.is_zero()}
    )


def _presentation_result(result) -> CommandResult:
    lines = list(result.relation_texts())
    for degenerate in result.degenerate_relations:
        lines.append(f"degenerate: {degenerate}")
    for name, meaning in result.dictionary:
        lines.append(f"{name}: {meaning}")
    return CommandResult(
        lines,
        {
            "relations": result.relation_texts(),
            "degenerate": list(result.degenerate_relations),
            "dictionary": {name: meaning for name, meaning in result.dictionary},
        },
    )


def _run_presentation_projective(payload: dict) -> CommandResult:
    _check_keys(payload, ("k",), ("ktheory",))
    k = _as_int(payload, "k")
    if _as_bool(payload, "ktheory"):
        return _presentation_result(potentials.qk_presentation(k))
    return _presentation_result(potentials.qh_presentation(k))


def _run_presentation_toric(payload: dict) -> CommandResult:
    _check_keys(payload, ("rank", "weights", "generators"), ("degree_basis",))
    spec = potentials.LinearActionSpec.create(
        _as_int(payload, "rank"),
        _weight_rows(_as_list(payload, "weights")),
        payload.get("degree_basis"),
        0,
    )
    generators = _as_list(payload, "generators")
    return _presentation_result(potentials.batyrev_presentation(spec, generators))


def _run_age(payload: dict) -> CommandResult:
    _check_keys(payload, ("order", "exponents"), ())
    value = potentials.age(_as_int(payload, "order"), _as_list(payload, "exponents"))
    return CommandResult(
        [f"age = {format_fraction(value)}"], {"age": format_fraction(value)}
    )


def _run_crepancy(payload: dict) -> CommandResult:
    _check_keys(payload, ("weights",), ())
    result = potentials.crepancy_check(_as_list(payload, "weights"))
    if result.crepant:
        lines = ["crepant"]
    else:
        lines = [f"non_crepant({result.weight_sum})"]
    return CommandResult(lines, result.to_json())


COMMANDS: Dict[str, Callable[[dict], CommandResult]] = {
    "stability.classify": _run_stability_classify,
    "stability.strata": _run_stability_strata,
    "mundet.check": _run_mundet_check,
    "mundet.quotdim": _run_mundet_quotdim,
    "curves.enumerate": _run_curves_enumerate,
    "curves.balanced": _run_curves_balanced,
    "curves.divisors": _run_curves_divisors,
    "potential.localized": _run_potential_localized,
    "potential.jframed": _run_potential_jframed,
    "potential.delta": _run_potential_delta,
    "qde.check": _run_qde_check,
    "presentation.projective": _run_presentation_projective,
    "presentation.toric": _run_presentation_toric,
    "age.compute": _run_age,
    "wallcross.crepancy": _run_crepancy,
}


def run_command(command: str, payload: dict) -> CommandResult:
    if command not in COMMANDS:
        raise InputError(f"unknown command {command!r}")
    return COMMANDS[command](payload)


def render(command: str, result: CommandResult, output: str) -> str:
    if output == "json":
        doc = {"command": command, "result": result.data}
        return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    return "\n".join(result.text) + "\n"


# -- job documents -----------------------------------------------------------------


def _load_document(path: str):
    try:
        with open(path, "rb") as handle:
            raw = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if path.endswith(".toml"):
        try:
            import tomllib  # Python >= 3.11
        except ModuleNotFoundError:
            import tomli as tomllib
        try:
            return tomllib.loads(raw.decode("utf-8"))
        except Exception as exc:
            raise InputError(f"bad TOML in {path}: {exc}") from exc
    try:
        return json.loads(raw.decode("utf-8"))
    except Exception as exc:
        raise InputError(f"bad JSON in {path}: {exc}") from exc


def _parse_jobspec(doc, index: Optional[int] = None) -> Tuple[str, dict, str]:
    where = "job document" if index is None else f"job {index}"
    if not isinstance(doc, dict):
        raise InputError(f"{where} must be an object")
    unknown = set(doc) - {"command", "payload", "output"}
    if unknown:
        raise InputError(f"{where} has unknown keys {sorted(unknown)}")
    command = doc.get("command")
    if command not in COMMANDS:
        raise InputError(f"{where}: unknown command {command!r}")
    payload = doc.get("payload")
    if not isinstance(payload, dict):
        raise InputError(f"{where}: payload must be an object")
    output = doc.get("output", "text")
    if output not in ("text", "json"):
        raise InputError(f"{where}: output must be 'text' or 'json'")
    return command, payload, output


def run_job_document(doc) -> Tuple[int, str]:
    command, payload, output = _parse_jobspec(doc)
    try:
        result = run_command(command, payload)
    except DomainError as exc:
        return 1, f"domain error: {exc}\n"
    return 0, render(command, result, output)


def run_batch(jobs: list, workers: int) -> Tuple[int, str]:
    parsed = [_parse_jobspec(doc, index) for index, doc in enumerate(jobs, start=1)]

    def execute(item):
        command, payload, output = item
        try:
            result = run_command(command, payload)
        except DomainError as exc:
            return 1, command, f"domain error: {exc}\n"
        return 0, command, render(command, result, output)

    if workers > 1 and len(parsed) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(execute, parsed))
    else:
        outcomes = [execute(item) for item in parsed]

    blocks = []
    failures = 0
    for index, (status, command, body) in enumerate(outcomes, start=1):
        tag = "ok" if status == 0 else "fail"
        failures += status
        blocks.append(f"=== job {index}: {command} [{tag}]\n{body}")
    summary = f"jobs = {len(outcomes)}, failed = {failures}\n"
    return (1 if failures else 0), "".join(blocks) + summary


# -- golden files -------------------------------------------------------------------

GOLDEN_JOBS: Tuple[Tuple[str, str, dict, str], ...] = (
    (
        "classify_stable",
        "stability.classify",
        {
            "weight_system": {"rank": 1, "weights": [[0], [1], [1], [-1], [-1]]},
            "support": [1, 2, 3, 4, 5],
        },
        "text",
    ),
    (
        "strata_p1",
        "stability.strata",
        {"weight_system": {"rank": 1, "weights": [[-1], [1]]}},
        "json",
    ),
    (
        "mundet_shifted",
        "mundet.check",
        {
            "weight_system": {"rank": 1, "weights": [[0], [1]], "theta": ["1/2"]},
            "bundle_degree": [1],
            "support": [1, 2],
        },
        "text",
    ),
    ("quotdim", "mundet.quotdim", {"k": 2, "dp": 1, "du": 0}, "text"),
    ("curves2proj", "curves.enumerate", {"n": 2, "mode": "projective"}, "text"),
    ("curves2aff", "curves.enumerate", {"n": 2, "mode": "affine"}, "text"),
    ("divisors2proj", "curves.divisors", {"n": 2, "mode": "projective"}, "text"),
    (
        "localized_k1",
        "potential.localized",
        {"weights": [1], "trunc": 3},
        "text",
    ),
    (
        "jframed_k1r1",
        "potential.jframed",
        {"k": 1, "r": 1, "trunc": 2, "specialize": "default"},
        "text",
    ),
    ("delta_m2", "potential.delta", {"m": 2}, "text"),
    ("qde_k2", "qde.check", {"k": 2, "trunc": 4}, "text"),
    ("qde_k2_ktheory", "qde.check", {"k": 2, "trunc": 4, "ktheory": True}, "text"),
    ("presentation_p3", "presentation.projective", {"k": 3}, "text"),
    (
        "presentation_toric",
        "presentation.toric",
        {"rank": 1, "weights": [1, 1, -1], "generators": [[1]]},
        "text",
    ),
    ("age", "age.compute", {"order": 3, "exponents": [1, 2]}, "text"),
    ("crepancy_flop", "wallcross.crepancy", {"weights": [0, 1, 1, -1, -1]}, "text"),
)


def run_golden(directory: str, check: bool) -> int:
    import os

    os.makedirs(directory, exist_ok=True)
    status = 0
    for name, command, payload, output in GOLDEN_JOBS:
        rendered = render(command, run_command(command, payload), output)
        path = os.path.join(directory, f"{name}.golden")
        if check:
            try:
                with open(path, "r", encoding="utf-8") as handle:
                    expected = handle.read()
            except OSError:
                sys.stderr.write(f"missing golden file {path}\n")
                status = 1
                continue
            if expected != rendered:
                sys.stderr.write(f"golden mismatch: {name}\n")
                status = 1
        else:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(rendered)
    return status


# -- argument parsing ----------------------------------------------------------------


def _csv_ints(text: str) -> List[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError as exc:
        raise InputError(f"expected comma-separated integers, got {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaugedgw",
        description="Exact stability, scaled-curve, and gauged-potential calculator",
    )
    sub = parser.add_subparsers(dest="group", required=True)

    def add(group, name, **kwargs):
        p = group.add_parser(name, **kwargs)
        p.add_argument("--output", choices=("text", "json"), default="text")
        return p

    run_p = sub.add_parser("run", help="run one job document")
    run_p.add_argument("--input", required=True)

    batch_p = sub.add_parser("batch", help="run a list of job documents")
    batch_p.add_argument("--input", required=True)
    batch_p.add_argument("--jobs", type=int, default=1)

    golden_p = sub.add_parser("golden", help="regenerate or check golden files")
    golden_p.add_argument("--dir", required=True)
    golden_p.add_argument("--check", action="store_true")

    stab = sub.add_parser("stability").add_subparsers(dest="action", required=True)
    p = add(stab, "classify")
    p.add_argument("--input", required=True, help="weight system JSON file")
    p.add_argument("--support", required=True)
    p = add(stab, "strata")
    p.add_argument("--input", required=True, help="weight system JSON file")

    mun = sub.add_parser("mundet").add_subparsers(dest="action", required=True)
    p = add(mun, "check")
    p.add_argument("--input", required=True, help="gauged map JSON file")
    p = add(mun, "quotdim")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--dp", type=int, required=True)
    p.add_argument("--du", type=int, required=True)

    cur = sub.add_parser("curves").add_subparsers(dest="action", required=True)
    p = add(cur, "enumerate")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=(curves.PROJECTIVE, curves.AFFINE), required=True)
    p.add_argument("--bound", type=int, default=curves.DEFAULT_ENUMERATION_BOUND)
    p = add(cur, "balanced")
    p.add_argument("--input", required=True, help="JSON with 'type' and 'params'")
    p = add(cur, "divisors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=(curves.PROJECTIVE, curves.AFFINE), required=True)
    p.add_argument("--bound", type=int, default=curves.DEFAULT_ENUMERATION_BOUND)

    pot = sub.add_parser("potential").add_subparsers(dest="action", required=True)
    p = add(pot, "localized")
    p.add_argument("--weights", required=True, help="comma-separated scalar weights")
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--branch", choices=("default", "conjugate"), default="default")
    p = add(pot, "jframed")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument(
        "--specialize",
        default=None,
        help="'default', or inline JSON object of parameter values",
    )
    p = add(pot, "delta")
    p.add_argument("--m", type=int, required=True)

    qde = sub.add_parser("qde").add_subparsers(dest="action", required=True)
    p = add(qde, "check")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--trunc", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--ktheory", action="store_true")

    pres = sub.add_parser("presentation").add_subparsers(dest="action", required=True)
    p = add(pres, "projective")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ktheory", action="store_true")
    p = add(pres, "toric")
    p.add_argument("--input", required=True, help="toric spec JSON file")

    age_p = sub.add_parser("age").add_subparsers(dest="action", required=True)
    p = add(age_p, "compute")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--exponents", required=True)

    wall = sub.add_parser("wallcross").add_subparsers(dest="action", required=True)
    p = add(wall, "crepancy")
    p.add_argument("--weights", required=True)

    return parser


def _payload_from_args(args) -> Tuple[str, dict]:
    group, action = args.group, getattr(args, "action", None)
    if group == "stability" and action == "classify":
        return "stability.classify", {
            "weight_system": _load_document(args.input),
            "support": _csv_ints(args.support),
        }
    if group == "stability" and action == "strata":
        return "stability.strata", {"weight_system": _load_document(args.input)}
    if group == "mundet" and action == "check":
        doc = _load_document(args.input)
        if not isinstance(doc, dict):
            raise InputError("gauged map document must be an object")
        return "mundet.check", doc
    if group == "mundet" and action == "quotdim":
        return "mundet.quotdim", {"k": args.k, "dp": args.dp, "du": args.du}
    if group == "curves" and action == "enumerate":
        return "curves.enumerate", {"n": args.n, "mode": args.mode, "bound": args.bound}
    if group == "curves" and action == "balanced":
        doc = _load_document(args.input)
        if not isinstance(doc, dict):
            raise InputError("balanced document must be an object")
        return "curves.balanced", doc
    if group == "curves" and action == "divisors":
        return "curves.divisors", {"n": args.n, "mode": args.mode, "bound": args.bound}
    if group == "potential" and action == "localized":
        return "potential.localized", {
            "weights": _csv_ints(args.weights),
            "trunc": args.trunc,
            "branch": args.branch,
        }
    if group == "potential" and action == "jframed":
        payload = {"k": args.k, "r": args.r, "trunc": args.trunc}
        if args.specialize is not None:
            if args.specialize == "default":
                payload["specialize"] = "default"
            else:
                try:
                    payload["specialize"] = json.loads(args.specialize)
                except json.JSONDecodeError as exc:
                    raise InputError(f"bad --specialize value: {exc}") from exc
        return "potential.jframed", payload
    if group == "potential" and action == "delta":
        return "potential.delta", {"m": args.m}
    if group == "qde" and action == "check":
        return "qde.check", {"k": args.k, "trunc": args.trunc, "ktheory": args.ktheory}
    if group == "presentation" and action == "projective":
        return "presentation.projective", {"k": args.k, "ktheory": args.ktheory}
    if group == "presentation" and action == "toric":
        doc = _load_document(args.input)
        if not isinstance(doc, dict):
            raise InputError("toric spec document must be an object")
        return "presentation.toric", doc
    if group == "age" and action == "compute":
        return "age.compute", {"order": args.r, "exponents": _csv_ints(args.exponents)}
    if group == "wallcross" and action == "crepancy":
        return "wallcross.crepancy", {"weights": _csv_ints(args.weights)}
    raise InputError(f"unknown command {group} {action}")  # pragma: no cover


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.group == "run":
            doc = _load_document(args.input)
            code, body = run_job_document(doc)
            sys.stdout.write(body)
            return code
        if args.group == "batch":
            doc = _load_document(args.input)
            if isinstance(doc, dict) and "jobs" in doc:
                doc = doc["jobs"]
            if not isinstance(doc, list):
                raise InputError("batch input must be a list of jobs")
            if args.jobs < 1:
                raise InputError("--jobs must be at least 1")
            code, body = run_batch(doc, args.jobs)
            sys.stdout.write(body)
            return code
        if args.group == "golden":
            return run_golden(args.dir, args.check)
        command, payload = _payload_from_args(args)
        try:
            result = run_command(command, payload)
        except DomainError as exc:
            sys.stdout.write(f"domain error: {exc}\n")
            return 1
        sys.stdout.write(render(command, result, args.output))
        return 0
    except InputError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
