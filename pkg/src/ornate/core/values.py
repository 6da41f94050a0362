"""Canonical values: the inhabitants of set codes."""

from __future__ import annotations

import dataclasses
from collections.abc import Iterable, Iterator

from typing_extensions import Self

from ornate.errors import IllTypedValue

__all__ = [
    "UNIT",
    "ZERO",
    "VFun",
    "VIn",
    "VPair",
    "VRefl",
    "VTag",
    "VUnit",
    "Value",
    "apply_fun",
    "from_pairs",
    "nat",
    "pairs",
    "tag",
    "tagged",
    "to_int",
]


@dataclasses.dataclass(frozen=True, slots=True)
class VUnit:
    """The inhabitant of the unit set."""


@dataclasses.dataclass(frozen=True, slots=True)
class VPair:
    """Dependent pair."""

    fst: Value
    snd: Value


@dataclasses.dataclass(frozen=True, slots=True)
class VTag:
    """An element of an enumeration."""

    name: str


@dataclasses.dataclass(frozen=True, slots=True)
class VIn:
    """A node of an inductive family wrapping its payload."""

    payload: Value


@dataclasses.dataclass(frozen=True, slots=True)
class VRefl:
    """Proof of an equation; carries no content."""


@dataclasses.dataclass(frozen=True, slots=True)
class VFun:
    """A function over an enumerable domain, as a table in enumeration order."""

    table: tuple[tuple[Value, Value], ...]

    def __call__(self: Self, arg: Value) -> Value:
        """Look the argument up in the table."""
        return apply_fun(self, arg)


Value = VUnit | VPair | VTag | VIn | VRefl | VFun

UNIT = VUnit()
ZERO = VIn(VPair(VTag("0"), UNIT))


def apply_fun(fun: Value, arg: Value) -> Value:
    """Apply a function table to an argument."""
    if not isinstance(fun, VFun):
        raise IllTypedValue(f"not a function: {fun!r}")
    for key, result in fun.table:
        if key == arg:
            return result
    raise IllTypedValue(f"argument {arg!r} outside the function's table")


def tag(name: str) -> VTag:
    """Build a tag value."""
    return VTag(name)


def tagged(name: str, payload: Value = UNIT) -> VIn:
    """Build the node ``('name payload)``."""
    return VIn(VPair(VTag(name), payload))


def nat(n: int) -> Value:
    """
    Encode a natural number with the ``'0``/``'suc`` constructors.

    >>> to_int(nat(3))
    3
    """
    if n < 0:
        msg = f"negative natural {n}"
        raise ValueError(msg)
    value: Value = ZERO
    for _ in range(n):
        value = VIn(VPair(VTag("suc"), value))
    return value


def to_int(value: Value) -> int:
    """Decode a canonical natural, raising ``IllTypedValue`` on anything else."""
    count = 0
    while True:
        match value:
            case VIn(VPair(VTag("0"), VUnit())):
                return count
            case VIn(VPair(VTag("suc"), rest)):
                count += 1
                value = rest
            case _:
                raise IllTypedValue(f"not a natural number: {value!r}")


def from_pairs(items: Iterable[Value], end: Value = UNIT) -> Value:
    """Right-nest values into pairs terminated by ``end``."""
    result = end
    for item in reversed(list(items)):
        result = VPair(item, result)
    return result


def pairs(value: Value) -> Iterator[Value]:
    """Iterate the left components of a right-nested pair chain."""
    while isinstance(value, VPair):
        yield value.fst
        value = value.snd
