"""Central numeric tolerances.

Every threshold used by the library lives here so callers (and the CLI
``--tol`` flag) can override the classification tolerance in one place.
"""

# Concurrence threshold separating the unentangled / partial / full strata.
EPS_CLASS = 1e-9

# Widened stratum band used when classifying trajectory points, so that a
# trajectory grazing a stratum boundary produces tagged points instead of
# classification flicker.
EPS_BAND = 1e-6

# Pole guard for the chart coordinate domains, radians.  A north chart
# requires theta <= pi - DELTA_POLE, a south chart theta >= DELTA_POLE.
DELTA_POLE = 1e-6

# Norm agreement required of normalized amplitude vectors.
NORM_TOL = 1e-12

# Entrywise tolerance for accepting a matrix as unitary / Hermitian.
UNITARY_TOL = 1e-10
HERMITIAN_TOL = 1e-10

# Allowed deviation of a rotation axis from unit length.
AXIS_TOL = 1e-9

# theta closer than this to a pole makes phi meaningless; it is then
# canonicalized to 0.
POLE_PHI_TOL = 1e-9

# Budget for the off-support components of the chart-extraction residual.
# Looser than the round-trip tolerance to absorb SVD noise near the stratum
# boundaries.
RESIDUAL_TOL = 1e-8

# Default projective-equality tolerance on 1 - fidelity.
FIDELITY_TOL = 1e-9
