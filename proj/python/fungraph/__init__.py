"""Semiring of functional digraphs.

Finite functional digraphs (endofunctions up to isomorphism) under
disjoint union and direct product: canonical forms, enumeration,
divisibility search, and verified non-primality witnesses.
"""

from fungraph._core import (
    Component,
    Digraph,
    ExpressionError,
    HeightProfile,
    QuotientSet,
    WitnessError,
    WitnessReport,
    build_witness,
    canonical_code,
    canonical_representative,
    check_iso_map,
    components,
    count_digraphs,
    cycle,
    cycle_product,
    cyclic_part,
    disjoint_sum,
    divides,
    enumerate_digraphs,
    height_profile,
    is_irreducible,
    is_isomorphic,
    iterate,
    literal,
    parse,
    product,
    quotients,
    scalar,
    to_dot,
    to_literal,
    trajectory_class_count,
    truncate,
    verify_witness,
    __version__,
)

__all__ = [
    "Component",
    "Digraph",
    "ExpressionError",
    "HeightProfile",
    "QuotientSet",
    "WitnessError",
    "WitnessReport",
    "build_witness",
    "canonical_code",
    "canonical_representative",
    "check_iso_map",
    "components",
    "count_digraphs",
    "cycle",
    "cycle_product",
    "cyclic_part",
    "disjoint_sum",
    "divides",
    "enumerate_digraphs",
    "height_profile",
    "is_irreducible",
    "is_isomorphic",
    "iterate",
    "literal",
    "parse",
    "product",
    "quotients",
    "scalar",
    "to_dot",
    "to_literal",
    "trajectory_class_count",
    "truncate",
    "verify_witness",
    "__version__",
]
