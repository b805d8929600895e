"""Exact weak Hopf algebra from the quantum sl2 modular category."""

from ._core import (
    Algebra,
    InputError,
    build,
    checks,
    dim,
    hopf_link,
    load,
    pin_conventions,
    sixj,
    tet,
    theta,
    twist,
)

__all__ = [
    "Algebra",
    "InputError",
    "build",
    "checks",
    "dim",
    "hopf_link",
    "load",
    "pin_conventions",
    "sixj",
    "tet",
    "theta",
    "twist",
]
