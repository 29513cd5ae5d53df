"""Entanglement-stratified coordinates for two-qubit pure states.

Classification by concurrence splits the projective state space into three
strata; each gets explicit coordinates with bidirectional maps:

* unentangled: a Bloch point per qubit (4 parameters),
* partially entangled: four overlapping circle-bundle charts over the two
  Bloch spheres (6 parameters including the class angle),
* fully entangled: an axis-angle rotation via the singlet (3 parameters).

``dynamics`` evolves states under a Hermitian generator and emits continuous,
chart-managed coordinate trajectories; the ``qubit-bundle`` CLI exposes the
maps, the Bell table, and a seeded property-verification suite.
"""

from ._backend import active_backend, available_backends
from .charts import (
    BundleCoords,
    Chart,
    chart_contains,
    extract,
    reconstruct,
    t_north,
    t_south,
    transition,
    transition_factor,
)
from .dynamics import (
    ContinuityReport,
    HermitianGenerator,
    Trajectory,
    TrajectoryEvent,
    TrajectoryPoint,
    continuity_report,
    coordinate_trajectory,
    evolve,
    local_hamiltonian,
)
from .entanglement import (
    EntanglementClass,
    SchmidtData,
    Stratum,
    classify,
    concurrence,
    schmidt,
    standard_state,
)
from .errors import ChartDomainError, DegenerateStateError, StratumError
from .extremes import (
    IDENTITY_ROTATION,
    SINGLET,
    AxisAngleRotation,
    BlochPair,
    bell_table,
    compose_unentangled,
    factor_unentangled,
    rotation_distance,
    rotation_from_state,
    state_from_rotation,
)
from .linalg import (
    BlochPoint,
    LocalUnitaryPair,
    TwoQubitState,
    apply_local,
    bloch_point_of_ket,
    coefficient_matrix,
    fidelity,
    ket_of_bloch_point,
    normalize,
    state_from_matrix,
    su2_from_axis_angle,
)

__version__ = "0.1.0"

__all__ = [
    "AxisAngleRotation",
    "BlochPair",
    "BlochPoint",
    "BundleCoords",
    "Chart",
    "ChartDomainError",
    "ContinuityReport",
    "DegenerateStateError",
    "EntanglementClass",
    "HermitianGenerator",
    "IDENTITY_ROTATION",
    "LocalUnitaryPair",
    "SINGLET",
    "SchmidtData",
    "Stratum",
    "StratumError",
    "Trajectory",
    "TrajectoryEvent",
    "TrajectoryPoint",
    "TwoQubitState",
    "active_backend",
    "apply_local",
    "available_backends",
    "bell_table",
    "bloch_point_of_ket",
    "chart_contains",
    "classify",
    "coefficient_matrix",
    "compose_unentangled",
    "concurrence",
    "continuity_report",
    "coordinate_trajectory",
    "evolve",
    "extract",
    "factor_unentangled",
    "fidelity",
    "ket_of_bloch_point",
    "local_hamiltonian",
    "normalize",
    "reconstruct",
    "rotation_distance",
    "rotation_from_state",
    "schmidt",
    "standard_state",
    "state_from_matrix",
    "state_from_rotation",
    "su2_from_axis_angle",
    "t_north",
    "t_south",
    "transition",
    "transition_factor",
]
