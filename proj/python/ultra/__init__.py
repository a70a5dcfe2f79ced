"""Finite ultrametric spaces with exact rational distances.

Distances and other exact values are passed and returned as strings such
as ``"3/4"``; integers such as ``kappa(n)`` come back as Python ints.
"""

from ._ultra import (  # noqa: F401
    AxiomViolation,
    BadEpsilon,
    EmptySpace,
    Error,
    NotCharacteristic,
    NotExtremal,
    NotHamiltonian,
    NotInjective,
    NotStrictlyBinary,
    NotSurjective,
    NotUltrametric,
    Oversize,
    Space,
    SyntaxError,
    TooSmall,
    UnknownPoint,
    approximate,
    are_isometric,
    canonical_code,
    characteristic_path,
    enumerate_extremal,
    is_extremal,
    is_ultrametric,
    kappa,
    lift,
    reconstruct,
    run_cli,
    spectrum,
    tree_dot,
    violating_triple,
)

__version__ = "0.1.0"
