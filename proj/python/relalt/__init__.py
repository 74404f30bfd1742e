"""Relativistic alteration factors and separated-solution checks.

Thin re-export of the compiled core: metric factors (gamma, lambda),
s-frame to m-frame scaling rules, 1-D separating-operator eigenmodes with
frame-scaling verification, and the product-separated Hamilton-Jacobi
family with its mass-alteration identity.
"""

from ._core import (  # noqa: F401
    AlterationFactor,
    Constants,
    ConvergenceFailure,
    DomainError,
    FactorKind,
    Frame,
    FrameMismatch,
    FrameScalingRecord,
    GravitationalSource,
    Grid1D,
    HJFamily,
    HJMassRecord,
    HorizonViolation,
    InvalidInputError,
    KinematicFrame,
    MeasuredQuantity,
    OperatorKind,
    PoleCrossing,
    QuantityKind,
    SeparatedSolution,
    SeparatingOperator,
    SuperluminalVelocity,
    alter,
    alter_energy_gap,
    alter_frequency,
    alter_mass,
    alter_separation_constant,
    compose,
    eigen_residual,
    eigenmodes,
    fractional_shift,
    hj_closed_family,
    hj_mass_alteration,
    hj_mass_invariance,
    hj_residual,
    residual_operator_equation,
    schwarzschild_lambda,
    separation_constant,
    special_lambda,
    temporal_factor,
    time_m_from_s,
    time_s_from_m,
    verify_frame_scaling,
)

__version__ = "0.1.0"
