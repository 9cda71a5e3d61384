"""Exact closed-form Conway base-13 function over the integers and Z[1/13]."""

from .conway import (
    encode_decimal,
    eval_z13,
    phase1,
    phase2,
    phase3,
    re_radix,
    resulting_sign,
)
from .oracle import oracle_f
from .values import DecimalValue, Z13Point

__all__ = [
    "DecimalValue",
    "Z13Point",
    "encode_decimal",
    "eval_z13",
    "oracle_f",
    "phase1",
    "phase2",
    "phase3",
    "re_radix",
    "resulting_sign",
]
