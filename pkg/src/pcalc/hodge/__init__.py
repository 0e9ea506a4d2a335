"""Highest-weight combinatorics for unitary Shimura varieties."""

from .weights import (
    HighestWeight,
    WOneElement,
    enumerate_W1,
    hodge_number,
    hodge_number_w0,
    identity_element,
    longest_element,
    shimura_dimension,
    star_action,
)

__all__ = [
    "HighestWeight",
    "WOneElement",
    "enumerate_W1",
    "hodge_number",
    "hodge_number_w0",
    "identity_element",
    "longest_element",
    "shimura_dimension",
    "star_action",
]
