"""Hand-coded descriptions and algebras used as reference points."""

from __future__ import annotations

import functools

from ornate.core.codes import (
    Algebra,
    DescFun,
    DOne,
    DSigma,
    DVar,
    EnumSet,
    MuSet,
    SetCode,
    UnitSet,
    by_tag,
    const,
)
from ornate.core.values import UNIT, ZERO, VIn, VPair, VTag, Value, tagged
from ornate.errors import IllTypedValue

__all__ = [
    "BOOL",
    "BELOW",
    "BOOL_SET",
    "FALSE",
    "IS_SUC",
    "LENGTH",
    "NAT",
    "NAT_SET",
    "TRUE",
    "list_desc",
]

NAT = DescFun(
    UnitSet(),
    const(
        DSigma(
            EnumSet(("0", "suc")),
            by_tag({"0": DOne(), "suc": DVar(UNIT)}),
            choice=True,
        )
    ),
    name="Nat",
)
NAT_SET = MuSet(NAT, UNIT)

BOOL = DescFun(
    UnitSet(),
    const(DSigma(EnumSet(("false", "true")), const(DOne()), choice=True)),
    name="Bool",
)
BOOL_SET = MuSet(BOOL, UNIT)
FALSE = tagged("false")
TRUE = tagged("true")


def _is_suc(_i: Value, payload: Value) -> Value:
    match payload:
        case VPair(VTag("0"), _):
            return FALSE
        case VPair(VTag("suc"), _):
            return TRUE
    raise IllTypedValue(f"not a natural payload: {payload!r}")


IS_SUC = Algebra(const(BOOL_SET), _is_suc, name="isSuc")


@functools.cache
def list_desc(elem: SetCode) -> DescFun:
    """Lists over ``elem``, with the constructor tags of the naturals."""
    return DescFun(
        UnitSet(),
        const(
            DSigma(
                EnumSet(("0", "suc")),
                by_tag({"0": DOne(), "suc": DSigma(elem, const(DVar(UNIT)))}),
                choice=True,
            )
        ),
        name="List",
    )


def _length(_i: Value, payload: Value) -> Value:
    match payload:
        case VPair(VTag("0"), _):
            return ZERO
        case VPair(VTag("suc"), VPair(_, rest)):
            return VIn(VPair(VTag("suc"), rest))
    raise IllTypedValue(f"not a list payload: {payload!r}")


LENGTH = Algebra(const(NAT_SET), _length, name="length")


def _below(bound: Value, payload: Value) -> Value:
    match payload:
        case VPair(VTag("0"), _):
            return FALSE if bound == ZERO else TRUE
        case VPair(VTag("suc"), smaller):
            return smaller
    raise IllTypedValue(f"not a natural payload: {payload!r}")


# `m < b` by folding `m` over naturals indexed by the bound `b`, whose
# recursive index is the predecessor of `b`
BELOW = Algebra(const(BOOL_SET), _below, name="below")
