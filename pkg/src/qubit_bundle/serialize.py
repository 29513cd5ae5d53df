"""JSON and CSV wire formats.

State JSON:       {"amplitudes": [[re, im], [re, im], [re, im], [re, im]]}
Bundle JSON:      {"chart": "NN", "eta": .., "theta1": .., "phi1": ..,
                   "theta2": .., "phi2": .., "gamma": ..}
Bloch-pair JSON:  {"q1": {"theta": .., "phi": ..}, "q2": {"theta": .., "phi": ..}}
Rotation JSON:    {"axis": [x, y, z], "angle": ..}
Hamiltonian JSON: {"matrix": 4x4 nested lists of [re, im]}

All angles are radians.  Trajectory CSV columns are fixed; the columns a
stratum does not use stay empty.
"""

from __future__ import annotations

import csv
import json
from typing import Any

import numpy as np

from .charts import BundleCoords, Chart
from .dynamics import HermitianGenerator, Trajectory
from .entanglement import Stratum
from .extremes import AxisAngleRotation, BlochPair
from .linalg import BlochPoint, TwoQubitState, normalize

TRAJECTORY_COLUMNS = (
    "t",
    "stratum",
    "concurrence",
    "chart",
    "theta1",
    "phi1",
    "theta2",
    "phi2",
    "gamma",
    "axis_x",
    "axis_y",
    "axis_z",
    "angle",
)


def _real_pair(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _number(value: Any, what: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"{what} must be a number, got {value!r}")
    return float(value)


def _complex_from_pair(value: Any, what: str) -> complex:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ValueError(f"{what} must be a [re, im] pair, got {value!r}")
    return complex(_number(value[0], what), _number(value[1], what))


def state_to_dict(state: TwoQubitState) -> dict:
    return {"amplitudes": [_real_pair(z) for z in state.amplitudes]}


def state_from_dict(data: Any) -> TwoQubitState:
    """Parse and normalize; zero-norm amplitudes are rejected."""
    if not isinstance(data, dict) or set(data) != {"amplitudes"}:
        raise ValueError('state JSON must be {"amplitudes": [[re, im] x 4]}')
    raw = data["amplitudes"]
    if not isinstance(raw, list) or len(raw) != 4:
        raise ValueError("amplitudes must be a list of 4 [re, im] pairs")
    amps = [_complex_from_pair(pair, "amplitude") for pair in raw]
    return normalize(TwoQubitState(amps))


def bundle_coords_to_dict(coords: BundleCoords) -> dict:
    return {
        "chart": coords.chart.value,
        "eta": coords.eta,
        "theta1": coords.theta1,
        "phi1": coords.phi1,
        "theta2": coords.theta2,
        "phi2": coords.phi2,
        "gamma": coords.gamma,
    }


def bundle_coords_from_dict(data: Any) -> BundleCoords:
    keys = {"chart", "eta", "theta1", "phi1", "theta2", "phi2", "gamma"}
    if not isinstance(data, dict) or set(data) != keys:
        raise ValueError(f"bundle coordinates JSON must have keys {sorted(keys)}")
    if data["chart"] not in {c.value for c in Chart}:
        raise ValueError(f"unknown chart {data['chart']!r}")
    return BundleCoords(
        chart=Chart(data["chart"]),
        eta=_number(data["eta"], "eta"),
        theta1=_number(data["theta1"], "theta1"),
        phi1=_number(data["phi1"], "phi1"),
        theta2=_number(data["theta2"], "theta2"),
        phi2=_number(data["phi2"], "phi2"),
        gamma=_number(data["gamma"], "gamma"),
    )


def bloch_pair_to_dict(pair: BlochPair) -> dict:
    return {
        "q1": {"theta": pair.q1.theta, "phi": pair.q1.phi},
        "q2": {"theta": pair.q2.theta, "phi": pair.q2.phi},
    }


def _bloch_point_from_dict(data: Any, what: str) -> BlochPoint:
    if not isinstance(data, dict) or set(data) != {"theta", "phi"}:
        raise ValueError(f'{what} must be {{"theta": .., "phi": ..}}')
    return BlochPoint(_number(data["theta"], "theta"), _number(data["phi"], "phi"))


def bloch_pair_from_dict(data: Any) -> BlochPair:
    if not isinstance(data, dict) or set(data) != {"q1", "q2"}:
        raise ValueError('Bloch pair JSON must have keys "q1" and "q2"')
    return BlochPair(
        q1=_bloch_point_from_dict(data["q1"], "q1"),
        q2=_bloch_point_from_dict(data["q2"], "q2"),
    )


def rotation_to_dict(rotation: AxisAngleRotation) -> dict:
    return {"axis": [float(x) for x in rotation.axis], "angle": rotation.angle}


def rotation_from_dict(data: Any) -> AxisAngleRotation:
    if not isinstance(data, dict) or set(data) != {"axis", "angle"}:
        raise ValueError('rotation JSON must have keys "axis" and "angle"')
    axis = data["axis"]
    if not isinstance(axis, list) or len(axis) != 3:
        raise ValueError("axis must be a list of 3 numbers")
    return AxisAngleRotation(
        np.array([_number(x, "axis component") for x in axis]),
        _number(data["angle"], "angle"),
    )


def coords_to_dict(coords: BlochPair | BundleCoords | AxisAngleRotation) -> dict:
    if isinstance(coords, BundleCoords):
        return bundle_coords_to_dict(coords)
    if isinstance(coords, BlochPair):
        return bloch_pair_to_dict(coords)
    if isinstance(coords, AxisAngleRotation):
        return rotation_to_dict(coords)
    raise TypeError(f"not a coordinate payload: {type(coords).__name__}")


def coords_from_dict(data: Any) -> BlochPair | BundleCoords | AxisAngleRotation:
    """Dispatch on the keys: chart -> bundle, q1 -> Bloch pair, axis -> rotation."""
    if not isinstance(data, dict):
        raise ValueError("coordinates JSON must be an object")
    if "chart" in data:
        return bundle_coords_from_dict(data)
    if "q1" in data:
        return bloch_pair_from_dict(data)
    if "axis" in data:
        return rotation_from_dict(data)
    raise ValueError(
        'coordinates JSON must contain "chart", "q1", or "axis" to identify the stratum'
    )


def hamiltonian_to_dict(h: HermitianGenerator) -> dict:
    return {"matrix": [[_real_pair(z) for z in row] for row in h.matrix]}


def hamiltonian_from_dict(data: Any) -> HermitianGenerator:
    if not isinstance(data, dict) or set(data) != {"matrix"}:
        raise ValueError('Hamiltonian JSON must be {"matrix": 4x4 of [re, im]}')
    rows = data["matrix"]
    if not isinstance(rows, list) or len(rows) != 4:
        raise ValueError("matrix must have 4 rows")
    m = np.empty((4, 4), dtype=np.complex128)
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != 4:
            raise ValueError("each matrix row must have 4 entries")
        for j, entry in enumerate(row):
            m[i, j] = _complex_from_pair(entry, "matrix entry")
    return HermitianGenerator(m)


def dumps(data: dict) -> str:
    """Deterministic JSON with full float precision."""
    return json.dumps(data, sort_keys=True, separators=(", ", ": "))


def write_trajectory_csv(trajectory: Trajectory, fileobj) -> None:
    """One row per point; unused columns per stratum are left empty."""
    writer = csv.writer(fileobj)
    writer.writerow(TRAJECTORY_COLUMNS)
    for point in trajectory.points:
        row = {name: "" for name in TRAJECTORY_COLUMNS}
        row["t"] = repr(point.t)
        row["stratum"] = point.stratum.value
        row["concurrence"] = repr(point.concurrence)
        coords = point.coords
        if point.stratum is Stratum.PARTIAL:
            row["chart"] = coords.chart.value
            row["theta1"] = repr(coords.theta1)
            row["phi1"] = repr(coords.phi1)
            row["theta2"] = repr(coords.theta2)
            row["phi2"] = repr(coords.phi2)
            row["gamma"] = repr(coords.gamma)
        elif point.stratum is Stratum.UNENTANGLED:
            row["theta1"] = repr(coords.q1.theta)
            row["phi1"] = repr(coords.q1.phi)
            row["theta2"] = repr(coords.q2.theta)
            row["phi2"] = repr(coords.q2.phi)
        else:
            row["axis_x"] = repr(float(coords.axis[0]))
            row["axis_y"] = repr(float(coords.axis[1]))
            row["axis_z"] = repr(float(coords.axis[2]))
            row["angle"] = repr(coords.angle)
        writer.writerow([row[name] for name in TRAJECTORY_COLUMNS])
