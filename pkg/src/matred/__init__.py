"""Matroid closure congruences, consistent sets and reducts on small ground sets."""

from .dependence import (
    Congruence,
    DependenceSpace,
    TheoremReport,
    com_family,
    consistent_sets,
    gamma_of_family,
    is_congruence,
    is_consistent,
    is_dense,
    reducts,
    reducts_via_transversals,
    theta_from_matroid,
    verify_paper_theorems,
)
from .errors import AxiomViolation, MatredError, ParseError, UniverseTooLarge
from .hyperplanes import closed_sets, closure_leq, closure_via_hyperplanes, flat_as_hyperplane_intersection, hyperplanes
from .matroid import (
    ExplicitMatroid,
    Gf2Matroid,
    GraphicMatroid,
    Matroid,
    PartitionMatroid,
    UniformMatroid,
    greedy_max_weight_base,
    matroid_from_family,
    validate_closure_axioms,
)
from .rough_sets import Partition, lower_approx, upper_approx
from .subsets import SetFamily, format_family, format_set, max_family, min_family, parse_set, power_set
