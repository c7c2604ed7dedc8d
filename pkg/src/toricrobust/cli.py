"""Command-line front end: matrix file I/O, JSON reports, Graver cache.

Subcommands: graver, bouquets, robust, complex, lift, glm, cyclic,
check-dimension.  Every run produces a Report whose deterministic core
(schema, input hash, result payload, exit code) is byte-stable across runs,
thread counts, and cache hits; the command echo and timing live only in the
full report.

Exit codes: 0 success; 1 check-dimension bound violation; 2 domain or input
errors (machine-readable JSON on stderr).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .bouquet import bouquet_decomposition, cyclic_configuration, is_simple
from .errors import OracleMismatchError, SpecFileError, ToricError
from .graver import GraverBasis, graver_basis, graver_brute_force
from .lattice import IntMatrix, canon_sign
from .lawrence import (
    GLMSpec,
    OmegaSet,
    bezout_coefficients,
    build_generalized_lawrence,
    lawrence_lift,
    lawrence_lift_omega,
)
from .matio import parse_matrix, read_matrix_file, write_matrix
from .robustness import indispensable_set, strongly_robust_complex

SCHEMA = "toricrobust-report/1"
CACHE_ENV = "TORICROBUST_CACHE_DIR"

__all__ = ["Report", "execute", "main", "entrypoint", "SCHEMA", "CACHE_ENV"]


@dataclass(frozen=True)
class Report:
    """Outcome of one CLI invocation.

    ``artifact`` is the text written for -o (when the command produces a
    matrix file it is that text, otherwise the report core); ``human`` is the
    plain-text rendering used without --json.  Neither is part of the
    serialized payload.
    """

    command: tuple[str, ...]
    input_hash: str
    result: dict
    elapsed_seconds: float
    exit_code: int
    artifact: str | None = None
    human: str | None = None

    def payload(self) -> dict:
        return {
            "schema": SCHEMA,
            "command": list(self.command),
            "input_hash": self.input_hash,
            "result": self.result,
            "elapsed_seconds": self.elapsed_seconds,
            "exit_code": self.exit_code,
        }

    def to_json(self) -> str:
        return json.dumps(self.payload(), sort_keys=True, indent=2)

    def canonical_bytes(self) -> bytes:
        """Deterministic serialization: no command echo, no timing."""
        core = {
            "schema": SCHEMA,
            "input_hash": self.input_hash,
            "result": self.result,
            "exit_code": self.exit_code,
        }
        return json.dumps(core, sort_keys=True, separators=(",", ":")).encode() + b"\n"


def _matrix_hash(A: IntMatrix) -> str:
    return "sha256:" + hashlib.sha256(write_matrix(A).encode()).hexdigest()


def _cache_dir(args) -> Path | None:
    if args.cache_dir:
        return Path(args.cache_dir)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def _graver_with_cache(A: IntMatrix, cache: Path | None) -> GraverBasis:
    # an empty basis is stored as a single zero row (the zero vector is never
    # a Graver element, so the placeholder is unambiguous)
    if cache is None:
        return graver_basis(A)
    key = _matrix_hash(A).removeprefix("sha256:")
    path = cache / f"{key}.gra"
    if path.exists():
        stored = parse_matrix(path.read_text())
        reps = tuple(sorted(canon_sign(row) for row in stored.rows if any(row)))
        return GraverBasis(A, reps)
    gr = graver_basis(A)
    cache.mkdir(parents=True, exist_ok=True)
    body = write_matrix(IntMatrix(gr.elements or ((0,) * A.ncols,)))
    tmp = path.with_suffix(".tmp")
    tmp.write_text(body)
    tmp.replace(path)
    return gr


def _matrix_result(A: IntMatrix) -> dict:
    return {"rows": A.nrows, "cols": A.ncols, "matrix": [list(r) for r in A.rows]}


def _parse_omega(text: str, ground: int) -> OmegaSet:
    if not text.strip():
        return OmegaSet(ground)
    try:
        members = [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise SpecFileError(f"omega must be comma-separated integers, got {text!r}") from None
    return OmegaSet.of(members, ground)


def _cmd_graver(args) -> tuple[dict, int, str | None, str]:
    A = read_matrix_file(args.matrix)
    gr = _graver_with_cache(A, _cache_dir(args))
    if args.oracle:
        box = max(gr.max_norm(), 1) + 1
        oracle = graver_brute_force(A, box)
        if oracle != gr.signed_set:
            raise OracleMismatchError(
                f"brute force in box {box} disagrees with completion"
            )
    if gr.elements:
        text = write_matrix(IntMatrix(gr.elements))
    else:
        text = write_matrix(IntMatrix(((0,) * A.ncols,)))
    result = {
        "count": len(gr),
        "cols": A.ncols,
        "elements": [list(g) for g in gr.elements],
        "max_norm": gr.max_norm(),
        "oracle_checked": bool(args.oracle),
    }
    human = f"graver basis: {len(gr)} elements per sign pair\n{text}"
    return result, 0, text, human


def _cmd_bouquets(args) -> tuple[dict, int, str | None, str]:
    A = read_matrix_file(args.matrix)
    dec = bouquet_decomposition(A)
    table = []
    lines = []
    for i, b in enumerate(dec.bouquets, start=1):
        entry = {"index": i, "members": list(b.members), "class": b.kind}
        desc = f"B{i} {{{','.join(map(str, b.members))}}} {b.kind}"
        if b.c is not None:
            entry["c"] = list(b.c)
            entry["a"] = list(b.a)
            desc += f" c={list(b.c)}"
        table.append(entry)
        lines.append(desc)
    result = {"bouquets": table, "simple": is_simple(A)}
    lines.append(f"simple: {result['simple']}")
    return result, 0, None, "\n".join(lines)


def _cmd_robust(args) -> tuple[dict, int, str | None, str]:
    A = read_matrix_file(args.matrix)
    gr = _graver_with_cache(A, _cache_dir(args))
    ind = indispensable_set(gr)
    verdict = len(ind) == len(gr)
    result = {
        "strongly_robust": verdict,
        "graver_count": len(gr),
        "indispensable_count": len(ind),
    }
    human = (
        f"strongly robust: {'yes' if verdict else 'no'} "
        f"({len(ind)} of {len(gr)} Graver elements indispensable)"
    )
    return result, 0, None, human


def _complex_result(T: IntMatrix, args) -> dict:
    # only the base Graver basis is worth caching; the per-subset liftings
    # derive from it through the lifting correspondence
    gr = _graver_with_cache(T, _cache_dir(args))
    delta = strongly_robust_complex(T, threads=args.threads, graver=gr)
    return {
        "ground": list(delta.ground),
        "maximal_faces": [list(f) for f in delta.maximal],
        "dimension": delta.dimension,
        "face_count": delta.face_count(),
        "faces": [list(f) for f in delta.faces()],
        "rank": T.rank,
    }


def _cmd_complex(args) -> tuple[dict, int, str | None, str]:
    T = read_matrix_file(args.matrix)
    result = _complex_result(T, args)
    human = (
        f"dimension {result['dimension']}, {result['face_count']} faces, "
        f"maximal: {result['maximal_faces']}"
    )
    return result, 0, None, human


def _cmd_check_dimension(args) -> tuple[dict, int, str | None, str]:
    T = read_matrix_file(args.matrix)
    result = _complex_result(T, args)
    holds = result["dimension"] < result["rank"]
    result = {
        "dimension": result["dimension"],
        "rank": result["rank"],
        "bound_holds": holds,
    }
    human = (
        f"dim {result['dimension']} < rank {result['rank']}: "
        f"{'holds' if holds else 'VIOLATED'}"
    )
    return result, 0 if holds else 1, None, human


def _cmd_lift(args) -> tuple[dict, int, str | None, str]:
    T = read_matrix_file(args.matrix)
    omega = _parse_omega(args.omega, T.ncols)
    lifted = lawrence_lift(T) if not omega.members else lawrence_lift_omega(T, omega)
    result = _matrix_result(lifted)
    result["omega"] = list(omega.members)
    text = write_matrix(lifted)
    return result, 0, text, text.rstrip("\n")


def _cmd_glm(args) -> tuple[dict, int, str | None, str]:
    try:
        raw = json.loads(Path(args.spec).read_text())
    except json.JSONDecodeError as err:
        raise SpecFileError(f"not valid JSON: {err}") from None
    try:
        base = IntMatrix.from_rows(raw["base"])
        cs = tuple(tuple(int(a) for a in c) for c in raw["c"])
        lams = raw.get("lambda")
        lams = tuple(tuple(int(a) for a in l) for l in lams) if lams else None
    except (KeyError, TypeError, ValueError) as err:
        raise SpecFileError(f"spec needs 'base' and 'c' integer arrays: {err}") from None
    spec = GLMSpec(base, cs, lams)
    A = build_generalized_lawrence(spec)
    lams_used = spec.lambdas or tuple(bezout_coefficients(c) for c in cs)
    result = _matrix_result(A)
    result["c"] = [list(c) for c in cs]
    result["lambda"] = [list(l) for l in lams_used]
    text = write_matrix(A)
    return result, 0, text, text.rstrip("\n")


def _cmd_cyclic(args) -> tuple[dict, int, str | None, str]:
    A = cyclic_configuration(args.dim, args.params)
    result = _matrix_result(A)
    text = write_matrix(A)
    return result, 0, text, text.rstrip("\n")


_HANDLERS = {
    "graver": _cmd_graver,
    "bouquets": _cmd_bouquets,
    "robust": _cmd_robust,
    "complex": _cmd_complex,
    "check-dimension": _cmd_check_dimension,
    "lift": _cmd_lift,
    "glm": _cmd_glm,
    "cyclic": _cmd_cyclic,
}


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("-o", "--output", metavar="PATH", help="write the main artifact here")
    sub.add_argument("--json", action="store_true", help="print the full JSON report")
    sub.add_argument(
        "--cache-dir",
        metavar="PATH",
        help=f"Graver cache directory (fallback: ${CACHE_ENV})",
    )
    sub.add_argument("--threads", type=int, default=1, metavar="N",
                     help="worker threads for face enumeration")
    sub.add_argument("--oracle", action="store_true",
                     help="cross-check Graver output against brute force")


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="toricrobust",
        description="Strong robustness of toric ideals, exactly over the integers.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("graver", help="Graver basis of a matrix")
    sp.add_argument("matrix")
    _add_common(sp)

    sp = sub.add_parser("bouquets", help="bouquet decomposition of a matrix")
    sp.add_argument("matrix")
    _add_common(sp)

    sp = sub.add_parser("robust", help="decide strong robustness")
    sp.add_argument("matrix")
    _add_common(sp)

    sp = sub.add_parser("complex", help="strongly robust complex of a simple base")
    sp.add_argument("matrix")
    _add_common(sp)

    sp = sub.add_parser("check-dimension", help="exit 0 iff dim of the complex < rank")
    sp.add_argument("matrix")
    _add_common(sp)

    sp = sub.add_parser("lift", help="second Lawrence lifting (optionally partial)")
    sp.add_argument("matrix")
    sp.add_argument("--omega", default="", metavar="I,J,...",
                    help="1-based indices of mirrored pairs to drop")
    _add_common(sp)

    sp = sub.add_parser("glm", help="generalized Lawrence matrix from a JSON spec")
    sp.add_argument("spec", help="JSON file with 'base', 'c', optional 'lambda'")
    _add_common(sp)

    sp = sub.add_parser("cyclic", help="cyclic configuration matrix")
    sp.add_argument("dim", type=int)
    sp.add_argument("params", type=int, nargs="+", metavar="T")
    _add_common(sp)

    return p


def _input_hash(args, result: dict) -> str:
    if getattr(args, "matrix", None):
        return _matrix_hash(read_matrix_file(args.matrix))
    # generated matrices: hash what the command produced
    if "matrix" in result:
        return _matrix_hash(IntMatrix.from_rows(result["matrix"]))
    return "sha256:" + hashlib.sha256(b"").hexdigest()


def _run(args, argv: Sequence[str]) -> Report:
    start = time.perf_counter()
    result, code, artifact, human = _HANDLERS[args.command](args)
    elapsed = time.perf_counter() - start
    report = Report(
        command=tuple(argv),
        input_hash=_input_hash(args, result),
        result=result,
        elapsed_seconds=elapsed,
        exit_code=code,
        artifact=artifact,
        human=human,
    )
    if args.output:
        text = artifact if artifact is not None else report.canonical_bytes().decode()
        Path(args.output).write_text(text)
    return report


def execute(argv: Sequence[str]) -> Report:
    """Run one invocation and return its Report (library entry for tests)."""
    argv = list(argv)
    args = _parser().parse_args(argv)
    return _run(args, argv)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = _parser().parse_args(argv)
        report = _run(args, argv)
    except ToricError as err:
        json.dump(
            {"schema": SCHEMA, "error": err.code, "message": str(err)},
            sys.stderr,
        )
        sys.stderr.write("\n")
        return 2
    except ValueError as err:
        json.dump({"schema": SCHEMA, "error": "BadInput", "message": str(err)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    except OSError as err:
        json.dump({"schema": SCHEMA, "error": "IO", "message": str(err)}, sys.stderr)
        sys.stderr.write("\n")
        return 2
    print(report.to_json() if args.json else report.human or "")
    return report.exit_code


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
