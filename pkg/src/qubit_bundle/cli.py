"""Command-line interface.

Subcommands: classify, coords, reconstruct, bell, evolve, verify.  Structured
input is JSON (inline or a file path), trajectories are written as CSV, and
all angles are radians.  Exit codes: 0 ok, 2 parse error, 3 domain error,
4 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import serialize, tolerances, verify
from .charts import BundleCoords, extract, reconstruct
from .dynamics import coordinate_trajectory, evolve
from .entanglement import Stratum, classify
from .errors import ChartDomainError
from .extremes import (
    BlochPair,
    bell_table,
    compose_unentangled,
    factor_unentangled,
    rotation_from_state,
    state_from_rotation,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_VERIFY = 4


def _load_json(value: str, what: str) -> object:
    """Parse inline JSON (anything starting with '{') or read it from a file."""
    text = value
    if not value.lstrip().startswith("{"):
        try:
            with open(value, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ValueError(f"cannot read {what} file {value!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed {what} JSON: {exc}") from exc


def _tolerance(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("QUBIT_BUNDLE_TOL")
    if env is not None:
        try:
            return float(env)
        except ValueError as exc:
            raise ValueError(f"QUBIT_BUNDLE_TOL is not a number: {env!r}") from exc
    return tolerances.EPS_CLASS


def _print_json(data: dict) -> None:
    print(serialize.dumps(data))


def _cmd_classify(args) -> int:
    state = serialize.state_from_dict(_load_json(args.state, "state"))
    result = classify(state, eps_class=_tolerance(args))
    _print_json(
        {
            "concurrence": result.concurrence,
            "eta": result.eta,
            "stratum": result.stratum.value,
        }
    )
    return EXIT_OK


def _cmd_coords(args) -> int:
    eps = _tolerance(args)
    state = serialize.state_from_dict(_load_json(args.state, "state"))
    stratum = classify(state, eps_class=eps).stratum
    if stratum is Stratum.UNENTANGLED:
        payload = serialize.coords_to_dict(factor_unentangled(state, eps_class=eps))
    elif stratum is Stratum.FULL:
        payload = serialize.coords_to_dict(rotation_from_state(state, eps_class=eps))
    else:
        payload = serialize.coords_to_dict(extract(state, eps_class=eps))
    _print_json(payload)
    return EXIT_OK


def _cmd_reconstruct(args) -> int:
    coords = serialize.coords_from_dict(_load_json(args.coords, "coordinates"))
    if isinstance(coords, BundleCoords):
        state = reconstruct(coords)
    elif isinstance(coords, BlochPair):
        state = compose_unentangled(coords)
    else:
        state = state_from_rotation(coords)
    _print_json(serialize.state_to_dict(state))
    return EXIT_OK


def _cmd_bell(args) -> int:
    rows = [
        {
            "name": name,
            "axis": [float(x) for x in rotation.axis],
            "angle": rotation.angle,
            "amplitudes": serialize.state_to_dict(state)["amplitudes"],
        }
        for name, rotation, state in bell_table()
    ]
    print(json.dumps(rows, sort_keys=True, separators=(", ", ": ")))
    return EXIT_OK


def _cmd_evolve(args) -> int:
    eps = _tolerance(args)
    h = serialize.hamiltonian_from_dict(_load_json(args.hamiltonian, "Hamiltonian"))
    state = serialize.state_from_dict(_load_json(args.state, "state"))
    states = evolve(h, state, args.t0, args.t1, args.dt)
    trajectory = coordinate_trajectory(states, eps_class=eps)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        serialize.write_trajectory_csv(trajectory, fh)
    print(
        f"wrote {len(trajectory)} points "
        f"({len(trajectory.events)} events) to {args.out}"
    )
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.n < 1:
        raise ValueError(f"--n must be at least 1, got {args.n}")
    results = verify.run_all(seed=args.seed, n=args.n, eps_class=_tolerance(args))
    print(verify.format_report(results, args.seed, args.n))
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


def _add_tol(parser) -> None:
    parser.add_argument(
        "--tol",
        type=float,
        default=None,
        help="classification tolerance on the concurrence "
        "(default: QUBIT_BUNDLE_TOL or 1e-9)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubit-bundle",
        description="Entanglement-stratified coordinates for two-qubit pure states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="concurrence, eta, and stratum of a state")
    p.add_argument("--state", required=True, help="state JSON (inline or a file path)")
    _add_tol(p)
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("coords", help="stratum-appropriate coordinates of a state")
    p.add_argument("--state", required=True, help="state JSON (inline or a file path)")
    _add_tol(p)
    p.set_defaults(fn=_cmd_coords)

    p = sub.add_parser("reconstruct", help="state from coordinate JSON")
    p.add_argument("--coords", required=True, help="coordinate JSON (inline or a file path)")
    _add_tol(p)
    p.set_defaults(fn=_cmd_reconstruct)

    p = sub.add_parser("bell", help="the four Bell states with their rotation labels")
    p.set_defaults(fn=_cmd_bell)

    p = sub.add_parser("evolve", help="evolve a state and write the coordinate trajectory CSV")
    p.add_argument("--hamiltonian", required=True, help="Hamiltonian JSON (inline or a file path)")
    p.add_argument("--state", required=True, help="initial state JSON (inline or a file path)")
    p.add_argument("--t0", type=float, required=True, help="start time")
    p.add_argument("--t1", type=float, required=True, help="end time")
    p.add_argument("--dt", type=float, required=True, help="time step")
    p.add_argument("--out", required=True, help="output CSV path")
    _add_tol(p)
    p.set_defaults(fn=_cmd_evolve)

    p = sub.add_parser("verify", help="run the seeded property suite")
    p.add_argument("--seed", type=int, default=7, help="random seed (default 7)")
    p.add_argument("--n", type=int, default=500, help="trials per property (default 500)")
    _add_tol(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ChartDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
