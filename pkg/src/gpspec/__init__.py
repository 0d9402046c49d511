"""Exact computations on the primary and prime spectra of graded modules
over Z and Z/n, the Zariski topology they carry, and an executable catalog
of the structural facts that govern them."""

from .algebra import (
    BaseRing,
    GradedModule,
    GradedSubmodule,
    GradingGroup,
    Ideal,
    QuotientInvariants,
    annihilator,
    enumerate_submodules,
    ideal_times_module,
    quotient_module,
)
from .dsl import Model, ParseError, model_text, parse_model, render
from .harness import CATALOG, ROSTER, CheckResult, run_checks
from .maps import (
    InducedSpectrumMap,
    MapAnalysis,
    PermutationMap,
    analyze_natural_map,
    reduced_ring,
)
from .spectra import (
    RadicalResult,
    Trilean,
    graded_radical,
    in_primary_spectrum,
    is_cancellation,
    is_graded_primary,
    is_graded_prime,
    is_multiplication,
    spectrum_points,
)
from .topology import (
    FiniteSpace,
    PointSet,
    TopologyReport,
    analyze_space,
    basic_open,
    build_ring_space,
    build_space,
    closure,
    ideal_core,
    is_primary_top_module,
    radical_core,
    ring_basic_open,
    ring_variety,
    variety,
    variety_membership,
)

__version__ = "0.1.0"
