from ._core import (
    InvalidType,
    RootSystem,
    all_types,
    automorphism_group,
    enumerate_ideals,
    hasse_dot,
    ideals,
    is_abelian_ideal,
    max_dimension,
    poincare,
    tables,
    verify,
    word_to_theta,
    young_bits,
    young_decode,
    young_encode,
)

__all__ = [
    "InvalidType",
    "RootSystem",
    "all_types",
    "automorphism_group",
    "enumerate_ideals",
    "hasse_dot",
    "ideals",
    "is_abelian_ideal",
    "max_dimension",
    "poincare",
    "tables",
    "verify",
    "word_to_theta",
    "young_bits",
    "young_decode",
    "young_encode",
]
