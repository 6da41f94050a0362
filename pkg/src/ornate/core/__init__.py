"""
The set/value kernel.

Closed universe of sets, canonical values, description codes, membership,
equality, bounded enumeration and generic recursion.
"""

from __future__ import annotations

from ornate.core import std
from ornate.core.check import (
    check_payload,
    check_value,
    elements,
    enumerate_set,
    equal_value,
    height,
    is_finite,
    payload_set,
)
from ornate.core.codes import (
    Algebra,
    Desc,
    DescFun,
    DOne,
    DPi,
    DSigma,
    DVar,
    EmptySet,
    EnumSet,
    EqSet,
    MuSet,
    PiSet,
    SetCode,
    SigmaSet,
    UnitSet,
    by_tag,
    const,
)
from ornate.core.printing import show_desc, show_set, show_value
from ornate.core.recursion import (
    Field,
    case_analysis,
    construct,
    destruct,
    fold,
    induction,
    map_payload,
    positions,
)
from ornate.core.values import (
    UNIT,
    ZERO,
    VFun,
    VIn,
    VPair,
    VRefl,
    VTag,
    VUnit,
    Value,
    apply_fun,
    from_pairs,
    nat,
    pairs,
    tag,
    tagged,
    to_int,
)

__all__ = [
    "UNIT",
    "ZERO",
    "Algebra",
    "DOne",
    "DPi",
    "DSigma",
    "DVar",
    "Desc",
    "DescFun",
    "EmptySet",
    "EnumSet",
    "EqSet",
    "Field",
    "MuSet",
    "PiSet",
    "SetCode",
    "SigmaSet",
    "UnitSet",
    "VFun",
    "VIn",
    "VPair",
    "VRefl",
    "VTag",
    "VUnit",
    "Value",
    "apply_fun",
    "by_tag",
    "case_analysis",
    "check_payload",
    "check_value",
    "const",
    "construct",
    "destruct",
    "elements",
    "enumerate_set",
    "equal_value",
    "fold",
    "from_pairs",
    "height",
    "induction",
    "is_finite",
    "map_payload",
    "nat",
    "pairs",
    "payload_set",
    "positions",
    "show_desc",
    "show_set",
    "show_value",
    "std",
    "tag",
    "tagged",
    "to_int",
]
