"""Command-line front end: every operation on JSON files, plus `verify`.

Exit codes:
  0  success / predicate true
  1  predicate false on well-formed input
  2  parse or format error (bad JSON, bad rational literal, CLI misuse)
  3  domain or precondition error (wrong dimensions, non-symplectic input, ...)
  4  internal invariant failure (a verified theorem failed: a bug)

All file arguments also accept '-' for standard input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import DomainError, FormatError, InvariantViolation
from .core import (
    commutes_with_reversor,
    gl_witness,
    is_anti_symplectic,
    is_involution,
    is_reversible_symplectic,
    is_symplectic,
)
from .grassmannian import (
    ChartPoint,
    chart_coordinates,
    from_symmetric_unitary,
    involution_from_chart,
    to_symmetric_unitary,
)
from .factorization import factor_block_diagonal, factor_sl2, normalize_reversible
from .involutions import conjugated_reversor, eigenspace_split, reversor_conjugator
from .jsonio import (
    complex_matrix_from_json,
    complex_matrix_to_json,
    float_matrix_to_json,
    matrix_from_json,
    matrix_to_json,
    read_json,
    subspace_from_json,
    subspace_to_json,
)
from .lagrangian import basis_matrix, symplectic_basis_from_splitting
from .matrix import Matrix
from .sampling import (
    SampleConfig,
    sample_anti_symplectic_involution,
    sample_lagrangian,
    sample_reversible,
    sample_symmetric_unitary,
    sample_symplectic,
)
from .verify import run_all


def _load_matrix(path: str) -> Matrix:
    return matrix_from_json(read_json(path))


def _cmd_check(args) -> tuple[int, dict]:
    M = _load_matrix(args.file)
    if args.symplectic:
        report = is_symplectic(M)
        return (0 if report.verdict else 1), report.to_json()
    if args.anti_symplectic:
        report = is_anti_symplectic(M)
        return (0 if report.verdict else 1), report.to_json()
    if args.involution:
        report = is_involution(M)
        return (0 if report.verdict else 1), report.to_json()
    if args.sp_r:
        verdict = is_reversible_symplectic(M)
        return (0 if verdict else 1), {"verdict": verdict}
    verdict = commutes_with_reversor(M)
    payload: dict = {"verdict": verdict, "witness": None}
    if verdict:
        witness = gl_witness(M)
        payload["witness"] = matrix_to_json(witness) if witness is not None else None
    return (0 if verdict else 1), payload


def _cmd_split(args) -> tuple[int, dict]:
    split = eigenspace_split(_load_matrix(args.file))
    return 0, {"plus": subspace_to_json(split.plus), "minus": subspace_to_json(split.minus)}


def _cmd_basis(args) -> tuple[int, dict]:
    L1 = subspace_from_json(read_json(args.l1))
    L2 = subspace_from_json(read_json(args.l2))
    b = symplectic_basis_from_splitting(L1, L2)
    full = basis_matrix(b)
    n = L1.dimension
    return 0, {
        "v": matrix_to_json(full.block(0, 2 * n, 0, n)),
        "w": matrix_to_json(full.block(0, 2 * n, n, 2 * n)),
    }


def _cmd_conjugate(args) -> tuple[int, dict]:
    if args.direction == "to-r":
        psi = reversor_conjugator(_load_matrix(args.file))
        return 0, matrix_to_json(psi)
    return 0, matrix_to_json(conjugated_reversor(_load_matrix(args.file)))


def _cmd_factor(args) -> tuple[int, dict]:
    if args.kind == "sl2":
        phi = _load_matrix(args.files[0])
        pair = factor_sl2(phi)
    else:
        phi, pair = factor_block_diagonal([_load_matrix(p) for p in args.files])
    return 0, {
        "phi": matrix_to_json(phi),
        "T": matrix_to_json(pair.T),
        "S": matrix_to_json(pair.S),
    }


def _cmd_normalize(args) -> tuple[int, dict]:
    psi, phi_tilde = normalize_reversible(_load_matrix(args.phi), _load_matrix(args.s))
    return 0, {"psi": matrix_to_json(psi), "phi_tilde": matrix_to_json(phi_tilde)}


def _cmd_chart(args) -> tuple[int, dict]:
    if args.direction == "coords":
        point = chart_coordinates(_load_matrix(args.files[0]))
        return 0, {
            "base": subspace_to_json(point.base),
            "coordinate": matrix_to_json(point.coordinate),
        }
    base = subspace_from_json(read_json(args.files[0]))
    coordinate = matrix_from_json(read_json(args.files[1]))
    S = involution_from_chart(ChartPoint(base=base, coordinate=coordinate))
    return 0, matrix_to_json(S)


def _cmd_unitary(args) -> tuple[int, dict]:
    if args.direction == "to-theta":
        theta = to_symmetric_unitary(_load_matrix(args.file), tol=args.tol)
        return 0, complex_matrix_to_json(theta)
    theta = complex_matrix_from_json(read_json(args.file))
    real = from_symmetric_unitary(theta, tol=args.tol)
    return 0, float_matrix_to_json(real)


def _cmd_sample(args) -> tuple[int, dict]:
    cfg = SampleConfig(
        n=args.n,
        seed=args.seed,
        word_length=args.word_length,
        entry_bound=args.entry_bound,
    )
    if args.kind == "sp":
        return 0, matrix_to_json(sample_symplectic(cfg))
    if args.kind == "inv":
        return 0, matrix_to_json(sample_anti_symplectic_involution(cfg))
    if args.kind == "spr":
        return 0, matrix_to_json(sample_reversible(cfg))
    if args.kind == "lag":
        return 0, subspace_to_json(sample_lagrangian(cfg))
    return 0, complex_matrix_to_json(sample_symmetric_unitary(cfg))


def _cmd_verify(args) -> tuple[int, dict]:
    summary = run_all(n_max=args.n_max, trials=args.trials, seed=args.seed)
    # A failed property is a failed theorem check, i.e. an internal bug.
    return (0 if summary["all_passed"] else 4), summary


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linsymp",
        description="Exact rational symplectic linear algebra on JSON matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="membership predicates")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--symplectic", action="store_true")
    group.add_argument("--anti-symplectic", dest="anti_symplectic", action="store_true")
    group.add_argument("--involution", action="store_true")
    group.add_argument("--sp-r", dest="sp_r", action="store_true",
                       help="reversible symplectic: R M R = M^(-1)")
    group.add_argument("--gl-embedded", dest="gl_embedded", action="store_true",
                       help="commutes with the reversor; reports the witness block")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("split", help="eigenspace splitting of an involution")
    p.add_argument("file")
    p.set_defaults(handler=_cmd_split)

    p = sub.add_parser("basis", help="symplectic basis adapted to a Lagrangian splitting")
    p.add_argument("l1")
    p.add_argument("l2")
    p.set_defaults(handler=_cmd_basis)

    p = sub.add_parser("conjugate", help="conjugators between involutions and the reversor")
    psub = p.add_subparsers(dest="direction", required=True)
    q = psub.add_parser("to-r", help="find psi with psi^(-1) R psi = S")
    q.add_argument("file")
    q.set_defaults(handler=_cmd_conjugate)
    q = psub.add_parser("of", help="compute psi^(-1) R psi")
    q.add_argument("file")
    q.set_defaults(handler=_cmd_conjugate)

    p = sub.add_parser("factor", help="factor into two anti-symplectic involutions")
    psub = p.add_subparsers(dest="kind", required=True)
    q = psub.add_parser("sl2", help="closed form for a det-1 2x2 matrix")
    q.add_argument("files", nargs=1)
    q.set_defaults(handler=_cmd_factor)
    q = psub.add_parser("blocks", help="direct sum of det-1 2x2 blocks")
    q.add_argument("files", nargs="+")
    q.set_defaults(handler=_cmd_factor)

    p = sub.add_parser("normalize", help="conjugate into the reversible class")
    p.add_argument("phi")
    p.add_argument("s")
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("chart", help="charts over the Lagrangian Grassmannian")
    psub = p.add_subparsers(dest="direction", required=True)
    q = psub.add_parser("coords", help="involution -> (base, symmetric coordinate)")
    q.add_argument("files", nargs=1)
    q.set_defaults(handler=_cmd_chart)
    q = psub.add_parser("involution", help="(base, symmetric coordinate) -> involution")
    q.add_argument("files", nargs=2, metavar=("L", "A"))
    q.set_defaults(handler=_cmd_chart)

    p = sub.add_parser("unitary", help="bridge to symmetric unitary matrices")
    psub = p.add_subparsers(dest="direction", required=True)
    q = psub.add_parser("to-theta")
    q.add_argument("file")
    q.add_argument("--tol", type=float, default=1e-9)
    q.set_defaults(handler=_cmd_unitary)
    q = psub.add_parser("from-theta")
    q.add_argument("file")
    q.add_argument("--tol", type=float, default=1e-9)
    q.set_defaults(handler=_cmd_unitary)

    p = sub.add_parser("sample", help="seeded deterministic generators")
    p.add_argument("kind", choices=["sp", "inv", "spr", "lag", "theta"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--word-length", dest="word_length", type=int, default=6)
    p.add_argument("--entry-bound", dest="entry_bound", type=int, default=3)
    p.set_defaults(handler=_cmd_sample)

    p = sub.add_parser("verify", help="run every property suite")
    p.add_argument("--n-max", dest="n_max", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_verify)

    return parser


def run(argv=None) -> int:
    """Parse arguments, execute, print the JSON payload; returns the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, payload = args.handler(args)
    except FormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return 2
    except InvariantViolation as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 4
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    if payload is not None:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return code


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(main())
