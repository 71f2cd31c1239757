"""Command-line interface: problem files, solver commands, reports.

Problem files are JSON (complex entries as [real, imag] pairs, real
entries as plain numbers) or whitespace-separated real matrices. Reports
go to stdout as text or, with --json, as canonical JSON (sorted keys,
two-space indent) that is byte-identical across identical invocations
when --no-timings is given.

Exit codes: 0 success, 1 infeasible or unverifiable, 2 input error.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionError,
    MincontrolError,
    ParseError,
    VerificationFailed,
)
from .mcp import (
    McpSolution,
    RealizationConfig,
    build_cover_instance,
    solve_mcp,
)
from .numerics import LeftEigenbasis, left_eigenbasis, perturb_nonzero
from .oracle import DEFAULT_SIZE_LIMIT, brute_force_mcp
from .setcover import EXACT_UNIVERSE_LIMIT
from .structural import (
    compatible_mscp_solution,
    scc_dag,
    solve_mscp,
    state_digraph,
)
from .structure import StructuralMatrix, structural_geq, structural_pattern
from .tolerances import DEFAULT_ZERO_TOL, Tolerances
from .verify import kalman_test, pbh_eigenvalue_test, pbh_eigenvector_test

SCHEMA_VERSION = 1

#: When --perturb is active and no explicit zero threshold was given, the
#: pattern threshold is tightened to magnitude * this factor so that the
#: injected nonzeros are actually seen (the stock default sits above them).
PERTURB_ZERO_TOL_FACTOR = 1e-3

_TOL_KEYS = ("residual_tol", "gap_tol", "rank_tol", "zero_tol", "tau")


# ---------------------------------------------------------------------------
# problem files

@dataclass
class ProblemFile:
    """Validated problem input: matrix, optional eigenbasis, tolerance overrides."""

    n: int
    matrix: np.ndarray
    eigenvalues: np.ndarray | None = None
    eigenvectors: np.ndarray | None = None
    tolerance_overrides: dict = field(default_factory=dict)

    @property
    def has_eigenbasis(self) -> bool:
        return self.eigenvalues is not None

    def __eq__(self, other):
        if not isinstance(other, ProblemFile):
            return NotImplemented
        def same(a, b):
            if (a is None) != (b is None):
                return False
            return a is None or np.array_equal(a, b)
        return (
            self.n == other.n
            and same(self.matrix, other.matrix)
            and same(self.eigenvalues, other.eigenvalues)
            and same(self.eigenvectors, other.eigenvectors)
            and self.tolerance_overrides == other.tolerance_overrides
        )


def _decode_entry(raw, where: str) -> complex:
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        value = complex(raw)
    elif (
        isinstance(raw, list)
        and len(raw) == 2
        and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in raw)
    ):
        value = complex(raw[0], raw[1])
    else:
        raise ParseError(f"{where}: expected a number or a [real, imag] pair, got {raw!r}")
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise ParseError(f"{where}: entries must be finite")
    return value


def _decode_rows(raw, n_rows: int, n_cols: int, where: str) -> np.ndarray:
    if not isinstance(raw, list) or len(raw) != n_rows:
        raise DimensionError(f"{where}: expected {n_rows} rows")
    out = np.empty((n_rows, n_cols), dtype=complex)
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != n_cols:
            raise DimensionError(f"{where} row {i + 1}: expected {n_cols} entries")
        for j, entry in enumerate(row):
            out[i, j] = _decode_entry(entry, f"{where}[{i + 1}][{j + 1}]")
    return out


def _load_json_problem(text: str, path: str) -> ProblemFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}: {exc.msg}") from exc
    if not isinstance(doc, dict) or "matrix" not in doc:
        raise ParseError(f"{path}: expected an object with a 'matrix' field")
    raw_matrix = doc["matrix"]
    if not isinstance(raw_matrix, list) or not raw_matrix:
        raise ParseError(f"{path}: 'matrix' must be a nonempty array of rows")
    n = len(raw_matrix)
    if "n" in doc and doc["n"] != n:
        raise DimensionError(f"{path}: n={doc['n']} but the matrix has {n} rows")
    matrix = _decode_rows(raw_matrix, n, n, f"{path}: matrix")
    eigenvalues = eigenvectors = None
    if "eigenbasis" in doc and doc["eigenbasis"] is not None:
        basis = doc["eigenbasis"]
        if not isinstance(basis, dict) or not {"eigenvalues", "vectors"} <= basis.keys():
            raise ParseError(f"{path}: eigenbasis needs 'eigenvalues' and 'vectors'")
        raw_vals = basis["eigenvalues"]
        if not isinstance(raw_vals, list) or len(raw_vals) != n:
            raise DimensionError(
                f"{path}: eigenbasis has {len(raw_vals) if isinstance(raw_vals, list) else '?'}"
                f" eigenvalues for a {n}x{n} matrix"
            )
        eigenvalues = np.array(
            [_decode_entry(v, f"{path}: eigenvalue {k + 1}") for k, v in enumerate(raw_vals)]
        )
        eigenvectors = _decode_rows(basis["vectors"], n, n, f"{path}: eigenvectors")
    overrides = {}
    if "tolerances" in doc and doc["tolerances"] is not None:
        if not isinstance(doc["tolerances"], dict):
            raise ParseError(f"{path}: 'tolerances' must be an object")
        for key, val in doc["tolerances"].items():
            if key not in _TOL_KEYS:
                raise ParseError(f"{path}: unknown tolerance {key!r}")
            if not isinstance(val, (int, float)) or isinstance(val, bool):
                raise ParseError(f"{path}: tolerance {key} must be a number")
            overrides[key] = float(val)
    return ProblemFile(n, matrix, eigenvalues, eigenvectors, overrides)


def _load_text_problem(text: str, path: str) -> ProblemFile:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            rows.append([float(tok) for tok in stripped.split()])
        except ValueError as exc:
            raise ParseError(f"{path}:{lineno}: {exc}") from exc
    if not rows:
        raise ParseError(f"{path}: no matrix rows found")
    n = len(rows)
    for lineno, row in enumerate(rows, start=1):
        if len(row) != n:
            raise DimensionError(
                f"{path}: row {lineno} has {len(row)} entries, expected {n}"
            )
    return ProblemFile(n, np.array(rows, dtype=complex))


def load_problem(path: str) -> ProblemFile:
    """Read a JSON or plain-text problem file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _load_json_problem(text, path)
    return _load_text_problem(text, path)


def _c2j(z: complex) -> list:
    return [float(np.real(z)), float(np.imag(z))]


def _vec2j(v) -> list:
    return [_c2j(z) for z in np.asarray(v, dtype=complex)]


def _mat2j(M) -> list:
    return [_vec2j(row) for row in np.asarray(M, dtype=complex)]


def problem_to_dict(pf: ProblemFile) -> dict:
    doc = {"n": pf.n, "matrix": _mat2j(pf.matrix)}
    if pf.has_eigenbasis:
        doc["eigenbasis"] = {
            "eigenvalues": _vec2j(pf.eigenvalues),
            "vectors": _mat2j(pf.eigenvectors),
        }
    if pf.tolerance_overrides:
        doc["tolerances"] = dict(sorted(pf.tolerance_overrides.items()))
    return doc


def save_problem(pf: ProblemFile, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(problem_to_dict(pf), fh, indent=2, sort_keys=True)
        fh.write("\n")


def _matrix_digest(matrix) -> str:
    payload = json.dumps(_mat2j(matrix), separators=(",", ":")).encode()
    return hashlib.sha256(payload).hexdigest()


# ---------------------------------------------------------------------------
# tolerance resolution

def _effective_tolerances(args, pf: ProblemFile) -> tuple[Tolerances, bool]:
    """defaults < environment < problem file < command line; returns
    (tolerances, zero_tol_was_explicit)."""
    tol = Tolerances.from_env(os.environ)
    explicit_zero = "MINCONTROL_TOL_ZERO" in os.environ
    if pf.tolerance_overrides:
        tol = tol.replace(**pf.tolerance_overrides)
        explicit_zero = explicit_zero or "zero_tol" in pf.tolerance_overrides
    cli_overrides = {
        "residual_tol": args.residual_tol,
        "gap_tol": args.gap_tol,
        "rank_tol": args.rank_tol,
        "zero_tol": args.zero_tol,
        "tau": args.tau,
    }
    tol = tol.replace(**cli_overrides)
    explicit_zero = explicit_zero or args.zero_tol is not None
    return tol, explicit_zero


def _resolve_basis(
    pf: ProblemFile, matrix, tol: Tolerances, allow_file_basis: bool = True
) -> tuple[LeftEigenbasis, str]:
    if pf.has_eigenbasis and allow_file_basis:
        basis = LeftEigenbasis.from_pairs(
            pf.eigenvalues,
            pf.eigenvectors,
            A=matrix,
            residual_tol=tol.residual_tol,
            gap_tol=tol.gap_tol,
        )
        return basis, "file"
    return (
        left_eigenbasis(matrix, residual_tol=tol.residual_tol, gap_tol=tol.gap_tol),
        "computed",
    )


# ---------------------------------------------------------------------------
# report assembly

def _verification_to_dict(report) -> dict:
    out = {
        "controllable": report.controllable,
        "consistent": report.consistent,
        "kalman": None,
        "pbh_eigenvalue": None,
        "pbh_eigenvector": None,
    }
    if report.kalman is not None:
        out["kalman"] = {
            "controllable": report.kalman.controllable,
            "rank": report.kalman.rank,
        }
    if report.pbh_eigenvalue is not None:
        out["pbh_eigenvalue"] = {
            "controllable": report.pbh_eigenvalue.controllable,
            "ranks": list(report.pbh_eigenvalue.ranks),
        }
    if report.pbh_eigenvector is not None:
        out["pbh_eigenvector"] = {
            "controllable": report.pbh_eigenvector.controllable,
            "violator": report.pbh_eigenvector.violator,
            "min_inner": report.pbh_eigenvector.min_inner,
        }
    return out


def _base_report(command: str, path: str, pf: ProblemFile, tol: Tolerances) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "status": "ok",
        "message": None,
        "input": {
            "path": path,
            "n": pf.n,
            "matrix_digest": _matrix_digest(pf.matrix),
        },
        "tolerances": tol.as_dict(),
    }


def _solution_to_dict(solution: McpSolution) -> dict:
    return {
        "support": list(solution.support),
        "input_pattern": str(solution.pattern),
        "support_size": solution.size,
        "vector": _vec2j(solution.vector),
        "mode": solution.mode,
        "verification": _verification_to_dict(solution.certificate),
    }


# ---------------------------------------------------------------------------
# commands

def _cmd_solve_mcp(args) -> tuple[int, dict]:
    pf = load_problem(args.problem)
    tol, explicit_zero = _effective_tolerances(args, pf)
    matrix = pf.matrix
    perturbation = None
    if args.perturb is not None:
        matrix = perturb_nonzero(matrix, args.perturb, args.seed)
        perturbation = {"magnitude": args.perturb, "seed": args.seed}
        if not explicit_zero:
            tol = tol.replace(
                zero_tol=min(DEFAULT_ZERO_TOL, args.perturb * PERTURB_ZERO_TOL_FACTOR)
            )
    report = _base_report("solve-mcp", args.problem, pf, tol)
    report["perturbation"] = perturbation
    basis, basis_source = _resolve_basis(
        pf, matrix, tol, allow_file_basis=perturbation is None
    )
    patterns = [structural_pattern(v, tol.zero_tol) for v in basis.vectors]
    instance = build_cover_instance(patterns)
    report.update(
        {
            "eigenbasis_source": basis_source,
            "eigenvalues": _vec2j(basis.eigenvalues),
            "eigenvector_patterns": [str(p) for p in patterns],
            "cover_instance": {
                "universe": sorted(instance.universe),
                "sets": [sorted(s) for s in instance.sets],
            },
        }
    )
    config = RealizationConfig(tau=tol.tau)
    try:
        solution = solve_mcp(
            matrix,
            basis=basis,
            mode=args.mode,
            config=config,
            zero_tol=tol.zero_tol,
            rank_tol=tol.rank_tol,
            exact_limit=args.exact_limit,
        )
    except VerificationFailed as exc:
        report["status"] = "unverifiable"
        report["message"] = str(exc)
        if exc.solution is not None:
            report["solution"] = _solution_to_dict(exc.solution)
        return 1, report
    report["solution"] = _solution_to_dict(solution)
    return 0, report


def _cmd_solve_mscp(args) -> tuple[int, dict]:
    pf = load_problem(args.problem)
    tol, _ = _effective_tolerances(args, pf)
    report = _base_report("solve-mscp", args.problem, pf, tol)
    a_pattern = StructuralMatrix.from_numeric(pf.matrix, tol.zero_tol)
    b_pattern = solve_mscp(a_pattern)
    dag = scc_dag(state_digraph(a_pattern))
    report.update(
        {
            "matrix_pattern": [str(a_pattern.row(i)) for i in range(1, pf.n + 1)],
            "components": [list(c) for c in dag.components],
            "non_top_linked": [list(c) for c in dag.non_top_linked_components],
            "input_pattern": str(b_pattern),
            "support": list(b_pattern.support),
            "support_size": b_pattern.nnz,
        }
    )
    return 0, report


def _parse_vector(raw: str, n: int) -> np.ndarray:
    entries = []
    for k, token in enumerate(raw.split(","), start=1):
        try:
            entries.append(complex(token.strip().replace(" ", "")))
        except ValueError as exc:
            raise ParseError(f"--vector entry {k}: {token.strip()!r}") from exc
    if len(entries) != n:
        raise DimensionError(f"--vector has {len(entries)} entries, expected {n}")
    return np.array(entries)


def _cmd_verify(args) -> tuple[int, dict]:
    pf = load_problem(args.problem)
    tol, _ = _effective_tolerances(args, pf)
    report = _base_report("verify", args.problem, pf, tol)
    b = _parse_vector(args.vector, pf.n)
    report["vector"] = _vec2j(b)
    report["method"] = args.method
    if args.method == "kalman":
        res = kalman_test(pf.matrix, b, tol.rank_tol)
        report["result"] = {"controllable": res.controllable, "rank": res.rank}
    elif args.method == "pbh-eig":
        basis, _ = _resolve_basis(pf, pf.matrix, tol)
        res = pbh_eigenvalue_test(pf.matrix, b, basis.eigenvalues, tol.rank_tol)
        report["result"] = {"controllable": res.controllable, "ranks": list(res.ranks)}
    else:
        basis, _ = _resolve_basis(pf, pf.matrix, tol)
        res = pbh_eigenvector_test(basis, b, tol.tau)
        report["result"] = {
            "controllable": res.controllable,
            "violator": res.violator,
            "min_inner": res.min_inner,
        }
    if not res.controllable:
        report["status"] = "not-controllable"
        return 1, report
    return 0, report


def _cmd_oracle(args) -> tuple[int, dict]:
    pf = load_problem(args.problem)
    tol, _ = _effective_tolerances(args, pf)
    report = _base_report("oracle", args.problem, pf, tol)
    result = brute_force_mcp(
        pf.matrix,
        n_limit=args.n_limit,
        zero_tol=tol.zero_tol,
        config=RealizationConfig(tau=tol.tau),
        rank_tol=tol.rank_tol,
        residual_tol=tol.residual_tol,
        gap_tol=tol.gap_tol,
    )
    report.update(
        {
            "min_support_size": result.min_support_size,
            "optimal_supports": [list(s) for s in result.optimal_supports],
            "kalman_verdicts": list(result.kalman_verdicts),
        }
    )
    return 0, report


def _cmd_compare(args) -> tuple[int, dict]:
    pf = load_problem(args.problem)
    tol, _ = _effective_tolerances(args, pf)
    report = _base_report("compare", args.problem, pf, tol)
    a_pattern = StructuralMatrix.from_numeric(pf.matrix, tol.zero_tol)
    mscp_pattern = solve_mscp(a_pattern)
    basis, _ = _resolve_basis(pf, pf.matrix, tol)
    solution = solve_mcp(
        pf.matrix,
        basis=basis,
        mode="exact",
        config=RealizationConfig(tau=tol.tau),
        zero_tol=tol.zero_tol,
        rank_tol=tol.rank_tol,
        exact_limit=args.exact_limit,
    )
    witness = compatible_mscp_solution(a_pattern, solution.pattern)
    report.update(
        {
            "mcp": {
                "support": list(solution.support),
                "pattern": str(solution.pattern),
                "size": solution.size,
            },
            "mscp": {
                "support": list(mscp_pattern.support),
                "pattern": str(mscp_pattern),
                "size": mscp_pattern.nnz,
            },
            "dominance": {
                "holds": structural_geq(solution.pattern, witness),
                "witness_support": list(witness.support),
                "dominates_canonical": structural_geq(solution.pattern, mscp_pattern),
            },
            "size_gap": solution.size - mscp_pattern.nnz,
        }
    )
    return 0, report


def _cmd_eig(args) -> tuple[int, dict]:
    pf = load_problem(args.problem)
    tol, _ = _effective_tolerances(args, pf)
    report = _base_report("eig", args.problem, pf, tol)
    basis, basis_source = _resolve_basis(pf, pf.matrix, tol)
    patterns = [structural_pattern(v, tol.zero_tol) for v in basis.vectors]
    report.update(
        {
            "eigenbasis_source": basis_source,
            "eigenvalues": _vec2j(basis.eigenvalues),
            "eigenvectors": _mat2j(basis.vectors),
            "eigenvector_patterns": [str(p) for p in patterns],
        }
    )
    return 0, report


_COMMANDS = {
    "solve-mcp": _cmd_solve_mcp,
    "solve-mscp": _cmd_solve_mscp,
    "verify": _cmd_verify,
    "oracle": _cmd_oracle,
    "compare": _cmd_compare,
    "eig": _cmd_eig,
}


# ---------------------------------------------------------------------------
# rendering

def _fmt_complex(z: complex) -> str:
    if np.imag(z) == 0:
        return f"{np.real(z):.12g}"
    return f"{np.real(z):.12g}{np.imag(z):+.12g}j"


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}", f"status: {report['status']}"]
    if report.get("message"):
        lines.append(f"message: {report['message']}")
    if "input" in report:
        lines.append(f"input: {report['input']['path']} (n={report['input']['n']})")
    if "eigenvalues" in report:
        vals = ", ".join(_fmt_complex(complex(re, im)) for re, im in report["eigenvalues"])
        lines.append(f"eigenvalues: {vals}")
    if "eigenvector_patterns" in report:
        lines.append("eigenvector patterns: " + " ".join(report["eigenvector_patterns"]))
    if "cover_instance" in report:
        sets = report["cover_instance"]["sets"]
        rendered = ", ".join(
            f"S{i}={{{','.join(map(str, s))}}}" for i, s in enumerate(sets, start=1)
        )
        lines.append(f"cover sets: {rendered}")
    if "solution" in report:
        sol = report["solution"]
        lines.append(
            f"support: {sol['support']} pattern: {sol['input_pattern']} "
            f"size: {sol['support_size']}"
        )
        lines.append(
            "vector: ["
            + ", ".join(_fmt_complex(complex(re, im)) for re, im in sol["vector"])
            + "]"
        )
        ver = sol["verification"]
        if ver["kalman"] is not None:
            lines.append(
                f"kalman rank: {ver['kalman']['rank']} "
                f"controllable: {ver['kalman']['controllable']}"
            )
        if not ver["consistent"]:
            lines.append("note: the controllability tests disagree; see --json")
    if "input_pattern" in report:
        lines.append(
            f"pattern: {report['input_pattern']} support: {report['support']}"
        )
    if "non_top_linked" in report:
        lines.append(f"non-top-linked components: {report['non_top_linked']}")
    if "result" in report:
        lines.append(f"method: {report['method']} result: {report['result']}")
    if "min_support_size" in report:
        lines.append(f"minimum support size: {report['min_support_size']}")
        lines.append(f"optimal supports: {report['optimal_supports']}")
    if "mcp" in report:
        lines.append(
            f"MCP size {report['mcp']['size']} {report['mcp']['pattern']} vs "
            f"MSCP size {report['mscp']['size']} {report['mscp']['pattern']}; "
            f"dominance: {report['dominance']['holds']}"
        )
    return "\n".join(lines) + "\n"


def _emit(report: dict, args) -> str:
    if args.json:
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    return _render_text(report)


# ---------------------------------------------------------------------------
# argument parsing and dispatch

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("problem", help="problem file (JSON or whitespace matrix)")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--no-timings", action="store_true", help="omit timings for stable output"
    )
    for name, help_text in (
        ("--zero-tol", "pattern threshold, relative to the largest entry"),
        ("--rank-tol", "rank threshold, relative to the largest singular value"),
        ("--residual-tol", "eigenpair residual bound, relative to ||A||"),
        ("--gap-tol", "eigenvalue separation bound"),
        ("--tau", "orthogonality threshold"),
    ):
        common.add_argument(name, type=float, default=None, help=help_text)

    parser = argparse.ArgumentParser(
        prog="mincontrol",
        description="Sparsest single-input placement for LTI systems, "
        "with structural comparison.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("solve-mcp", parents=[common], help="solve the placement problem")
    p.add_argument("--mode", choices=("exact", "greedy"), default="exact")
    p.add_argument(
        "--perturb",
        type=float,
        default=None,
        metavar="MAG",
        help="add uniform noise on [-MAG, MAG] to each nonzero entry",
    )
    p.add_argument("--seed", type=int, default=0, help="noise seed")
    p.add_argument("--exact-limit", type=int, default=EXACT_UNIVERSE_LIMIT)

    sub.add_parser("solve-mscp", parents=[common], help="solve the structural problem")

    p = sub.add_parser("verify", parents=[common], help="run one controllability test")
    p.add_argument("--method", choices=("pbh-eig", "pbh-vec", "kalman"), required=True)
    p.add_argument(
        "--vector",
        required=True,
        help="comma-separated entries of b, complex literals allowed (e.g. 0,1,1,1,0)",
    )

    p = sub.add_parser("oracle", parents=[common], help="brute-force reference solve")
    p.add_argument("--n-limit", type=int, default=DEFAULT_SIZE_LIMIT)

    p = sub.add_parser("compare", parents=[common], help="MCP vs MSCP comparison")
    p.add_argument("--exact-limit", type=int, default=EXACT_UNIVERSE_LIMIT)

    sub.add_parser("eig", parents=[common], help="print the eigenbasis and patterns")
    return parser


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    started = time.perf_counter()
    try:
        code, report = _COMMANDS[args.subcommand](args)
    except (ParseError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MincontrolError as exc:
        report = {
            "schema_version": SCHEMA_VERSION,
            "command": args.subcommand,
            "status": "error",
            "error_type": type(exc).__name__,
            "message": str(exc),
        }
        sys.stdout.write(_emit(report, args))
        return 1
    if not args.no_timings:
        report["timings"] = {"total_seconds": time.perf_counter() - started}
    sys.stdout.write(_emit(report, args))
    return code


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
