"""
Codes of the closed set universe and of indexed descriptions.

Families (the dependent parts of Σ, Π and descriptions) are host callables
evaluated on demand, so index sets may be infinite.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Callable, Mapping

from typing_extensions import Self

from ornate.core.values import VTag, Value
from ornate.errors import IllFormedSet, IllTypedValue

__all__ = [
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
    "MuSet",
    "PiSet",
    "SetCode",
    "SigmaSet",
    "UnitSet",
    "by_tag",
    "const",
]


@dataclasses.dataclass(frozen=True)
class UnitSet:
    """The one-element set."""


@dataclasses.dataclass(frozen=True)
class EmptySet:
    """The set without inhabitants."""


@dataclasses.dataclass(frozen=True)
class EnumSet:
    """A finite set of tags, in declaration order."""

    tags: tuple[str, ...]
    name: str = dataclasses.field(default="", compare=False)

    def __post_init__(self: Self) -> None:
        if len(set(self.tags)) != len(self.tags):
            raise IllFormedSet(f"duplicate tags in {self.tags}")


@dataclasses.dataclass(frozen=True)
class SigmaSet:
    """Dependent pairs."""

    first: SetCode
    rest: Callable[[Value], SetCode]


@dataclasses.dataclass(frozen=True)
class PiSet:
    """Dependent functions; only enumerable domains have inhabitants."""

    dom: SetCode
    cod: Callable[[Value], SetCode]


@dataclasses.dataclass(frozen=True)
class EqSet:
    """The equation ``lhs = rhs`` in ``carrier``."""

    carrier: SetCode
    lhs: Value
    rhs: Value


@dataclasses.dataclass(frozen=True)
class MuSet:
    """The inductive family described by ``family`` at ``index``."""

    family: DescFun
    index: Value


SetCode = UnitSet | EmptySet | EnumSet | SigmaSet | PiSet | EqSet | MuSet


@dataclasses.dataclass(frozen=True)
class DVar:
    """A recursive position at the given index."""

    index: Value


@dataclasses.dataclass(frozen=True)
class DOne:
    """End of a constructor."""


@dataclasses.dataclass(frozen=True)
class DPi:
    """A function-valued field."""

    dom: SetCode
    fam: Callable[[Value], Desc]


@dataclasses.dataclass(frozen=True)
class DSigma:
    """
    A data field followed by the rest of the node.

    ``choice`` marks the Σ over constructor tags; it only guides case analysis
    and printing.
    """

    dom: SetCode
    fam: Callable[[Value], Desc]
    choice: bool = dataclasses.field(default=False, compare=False)


Desc = DVar | DOne | DPi | DSigma


@dataclasses.dataclass(frozen=True)
class DescFun:
    """An inductive family: a description for every index."""

    index_set: SetCode
    at: Callable[[Value], Desc]
    name: str = dataclasses.field(default="", compare=False)


@dataclasses.dataclass(frozen=True)
class Algebra:
    """An algebra for a description, with carrier family ``carrier_at``."""

    carrier_at: Callable[[Value], SetCode]
    step: Callable[[Value, Value], Value]
    name: str = dataclasses.field(default="", compare=False)


def const[T](result: T) -> Callable[[Value], T]:
    """Build a family ignoring its argument."""
    return lambda _value: result


def by_tag[T](branches: Mapping[str, T]) -> Callable[[Value], T]:
    """Build a family over an enumeration from one entry per tag."""

    def family(value: Value) -> T:
        if isinstance(value, VTag) and value.name in branches:
            return branches[value.name]
        raise IllTypedValue(f"expected one of {sorted(branches)}, got {value!r}")

    return family
