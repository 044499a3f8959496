"""Exact arithmetic in the free Rota-Baxter algebra on bracketed words.

The heavy lifting lives in the compiled extension ``rba._rba``; this package
re-exports its public surface.
"""

from ._rba import (
    Element,
    FormatError,
    ParseError,
    RbaError,
    TensorElement,
    WeightNotZeroError,
    antipode,
    check_rota_baxter,
    coproduct,
    counit,
    counterexample,
    diamond,
    enumerate_words,
    evaluate,
    rb,
)

__all__ = [
    "Element",
    "TensorElement",
    "ParseError",
    "FormatError",
    "WeightNotZeroError",
    "RbaError",
    "evaluate",
    "diamond",
    "rb",
    "coproduct",
    "counit",
    "antipode",
    "enumerate_words",
    "check_rota_baxter",
    "counterexample",
]

__version__ = "0.1.0"
