"""Exact and Monte Carlo phase-separation-point computations for the
one-dimensional spin chain with site-dependent bond couplings."""

from ._pspchain import (  # noqa: F401
    DEFAULT_ENUMERATION_CAP,
    BoundaryCondition,
    ChainState,
    ContourQuery,
    ContourResult,
    CouplingFamily,
    CrystalPair,
    DecompositionReport,
    DecompositionRow,
    EstimateReport,
    GrowthConditionReport,
    GrowthConditionViolation,
    InterfaceIndex,
    InterfaceStats,
    LogReal,
    MajorityClass,
    Moments,
    NecessaryConditionVerdict,
    PartitionPair,
    PspDistribution,
    RarefiedPair,
    ReflectionSymmetryReport,
    ReflectionSymmetryViolation,
    SamplerSchedule,
    SpinConfiguration,
    SummabilityReport,
    TableExtension,
    TailSeries,
    VarianceEnvelope,
    brute_force_partition,
    closed_form_partition,
    contour_probability,
    crystal_partitions,
    decomposition_check,
    energy,
    energy_pm,
    estimate_psp_distribution,
    flip_reflected,
    flipped,
    interface_points,
    interface_stats,
    ising_ratio,
    majority_class,
    merge_reports,
    parse_family_spec,
    psp,
    psp_distribution,
    psp_moments,
    psp_necessary_conditions,
    rarefied_left,
    rarefied_right,
    recursive_partition,
    reflected,
    summability_diagnostic,
    tail_series,
    validate_growth_condition,
    validate_reflection_symmetry,
    variance_envelope,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
