"""Exact invariants of hyperplane arrangements in projective space.

The package computes, over exact rational arithmetic: the intersection
lattice with its Moebius function, Poincare and Chern polynomials of the
logarithmic sheaves, the defining tensor and the dual configuration,
stability classification of the associated sheaf, and recoverability
verdicts, together with a finite-field counting oracle that cross-checks
the lattice computation.
"""

from .arrangement import (Arrangement, InvalidArrangement, LinearForm,
                          is_essential, parse_arrangement, parse_arrangement_json)
from .ffcount import (DegenerateReduction, count_complement_points,
                      kernel_available, next_valid_prime, prime_preserves_lattice)
from .fixtures import fixture, fixture_names, fixture_note
from .invariants import (ChernData, DeltaData, LocallyFree, PoincareData, chern,
                         complement_count_prediction, delta_invariant, h0_values,
                         local_data, poincare, twist_transform)
from .lattice import (CrossingClass, Flat, IntersectionLattice, build_lattice,
                      classify_crossing, mobius)
from .report import build_report
from .stability import (StabilityVerdict, Status, Witness, WitnessKind, classify,
                        combinatorial_destabilizer, discriminant_test,
                        free_splitting_stability, git_ratio_test)
from .steiner import (DependentSets, GaleBijectionReport, GaleUndefined,
                      SteinerTensor, dependent_sets, gale_dual, slice_at_point,
                      steiner_tensor, verify_gale_bijection)
from .torelli import (ConicClass, ConicResult, RncResult, RncVerdict,
                      TorelliStatus, TorelliVerdict, conic_test, dual_points,
                      rnc_test, torelli_verdict)
from .truncpoly import TruncPoly

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "ChernData", "ConicClass", "ConicResult", "CrossingClass",
    "DegenerateReduction", "DeltaData", "DependentSets", "Flat",
    "GaleBijectionReport", "GaleUndefined", "IntersectionLattice", "LinearForm",
    "LocallyFree", "InvalidArrangement", "PoincareData", "RncResult",
    "RncVerdict", "StabilityVerdict", "Status", "SteinerTensor", "TorelliStatus",
    "TorelliVerdict", "TruncPoly", "Witness", "WitnessKind", "build_lattice",
    "build_report", "chern", "classify", "classify_crossing",
    "combinatorial_destabilizer", "complement_count_prediction", "conic_test",
    "count_complement_points", "delta_invariant", "dependent_sets",
    "discriminant_test", "dual_points", "fixture", "fixture_names",
    "fixture_note", "free_splitting_stability", "gale_dual", "git_ratio_test",
    "h0_values", "is_essential", "kernel_available", "local_data", "mobius",
    "next_valid_prime", "parse_arrangement", "parse_arrangement_json",
    "poincare", "prime_preserves_lattice", "rnc_test", "slice_at_point",
    "steiner_tensor", "torelli_verdict", "twist_transform",
    "verify_gale_bijection",
]
