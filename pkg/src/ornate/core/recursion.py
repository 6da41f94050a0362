"""Generic recursion over inductive families and constructor plumbing."""

from __future__ import annotations

import dataclasses
from collections.abc import Callable, Iterator, Sequence

from ornate.core.check import check_value
from ornate.core.codes import (
    Algebra,
    Desc,
    DescFun,
    DOne,
    DPi,
    DSigma,
    DVar,
    EnumSet,
    MuSet,
    SetCode,
)
from ornate.core.values import UNIT, VFun, VIn, VPair, VTag, VUnit, Value
from ornate.errors import IllTypedValue

__all__ = [
    "Field",
    "case_analysis",
    "construct",
    "destruct",
    "fold",
    "induction",
    "map_payload",
    "positions",
]


def map_payload(d: Desc, f: Callable[[Value, Value], object], v: Value) -> Value:
    """
    Replace every recursive position ``(i, x)`` of the payload by ``f(i, x)``.

    The shape is checked as it is traversed; data fields are checked against
    their sets.
    """
    match d:
        case DVar(index=index):
            return f(index, v)  # type: ignore[return-value]
        case DOne():
            if not isinstance(v, VUnit):
                raise IllTypedValue(f"expected unit, got {v!r}")
            return UNIT
        case DPi(dom=dom, fam=fam):
            if not isinstance(v, VFun):
                raise IllTypedValue(f"expected a function over {dom!r}, got {v!r}")
            return VFun(tuple((key, map_payload(fam(key), f, res)) for key, res in v.table))
        case DSigma(dom=dom, fam=fam):
            if not isinstance(v, VPair) or not check_value(dom, v.fst):
                raise IllTypedValue(f"expected a pair over {dom!r}, got {v!r}")
            return VPair(v.fst, map_payload(fam(v.fst), f, v.snd))
    raise IllTypedValue(f"not a description: {d!r}")


def _payload(t: Value) -> Value:
    if not isinstance(t, VIn):
        raise IllTypedValue(f"expected an inductive node, got {t!r}")
    return t.payload


def fold(family: DescFun, alg: Algebra, i: Value, t: Value) -> Value:
    """Fold ``alg`` over ``t : μ(family i)``."""
    mapped = map_payload(
        family.at(i), lambda j, x: fold(family, alg, j, x), _payload(t)
    )
    return alg.step(i, mapped)


def induction(
    family: DescFun,
    step: Callable[[Value, Value, Value], object],
    i: Value,
    t: Value,
) -> object:
    """
    Eliminate ``t`` with ``step(i, payload, sub_results)``.

    ``sub_results`` has the shape of the payload with each recursive position
    replaced by the result for that sub-tree.
    """
    payload = _payload(t)
    sub = map_payload(
        family.at(i), lambda j, x: induction(family, step, j, x), payload
    )
    return step(i, payload, sub)


def case_analysis(
    family: DescFun, step: Callable[[Value, Value], object], i: Value, t: Value
) -> object:
    """Induction without hypotheses."""
    payload = _payload(t)
    map_payload(family.at(i), lambda _j, x: x, payload)
    return step(i, payload)


def positions(d: Desc, v: Value) -> Iterator[tuple[Value, Value]]:
    """Yield the recursive positions ``(index, sub-tree)`` of a payload in order."""
    match d, v:
        case DVar(index=index), _:
            yield index, v
        case DPi(fam=fam), VFun(table=table):
            for key, res in table:
                yield from positions(fam(key), res)
        case DSigma(fam=fam), VPair(fst=fst, snd=snd):
            yield from positions(fam(fst), snd)


@dataclasses.dataclass(frozen=True)
class Field:
    """One field of a constructor payload."""

    value: Value
    set: SetCode | None = None
    index: Value | None = None

    @property
    def recursive(self) -> bool:
        """Whether this field is a recursive position."""
        return self.index is not None


def destruct(family: DescFun, i: Value, payload: Value) -> tuple[str | None, list[Field]]:
    """Split a payload into its constructor tag (if any) and its fields."""
    d = family.at(i)
    tag: str | None = None
    if isinstance(d, DSigma) and d.choice:
        if not isinstance(payload, VPair) or not isinstance(payload.fst, VTag):
            raise IllTypedValue(f"expected a tagged payload, got {payload!r}")
        tag = payload.fst.name
        d, payload = d.fam(payload.fst), payload.snd
    fields: list[Field] = []
    while True:
        match d:
            case DOne():
                return tag, fields
            case DVar(index=index):
                fields.append(Field(payload, MuSet(family, index), index))
                return tag, fields
            case DPi():
                fields.append(Field(payload))
                return tag, fields
            case DSigma(dom=dom, fam=fam):
                if not isinstance(payload, VPair):
                    raise IllTypedValue(f"expected a pair, got {payload!r}")
                fields.append(Field(payload.fst, dom))
                d, payload = fam(payload.fst), payload.snd


def construct(
    family: DescFun, i: Value, tag: str | None, args: Sequence[Value]
) -> Value:
    """
    Build the node ``(tag args...)`` of ``μ(family i)``.

    >>> from ornate.core.values import nat, to_int
    >>> from ornate.core import std
    >>> to_int(construct(std.NAT, UNIT, "suc", [nat(1)]))
    2
    """
    d = family.at(i)
    head: list[Value] = []
    if tag is not None:
        if not (isinstance(d, DSigma) and d.choice and isinstance(d.dom, EnumSet)):
            raise IllTypedValue(f"{family.name or 'family'} has no constructor choice here")
        if tag not in d.dom.tags:
            raise IllTypedValue(f"unknown constructor '{tag} of {family.name}")
        head.append(VTag(tag))
        d = d.fam(VTag(tag))
    remaining = list(args)

    def fill(node: Desc) -> Value:
        match node:
            case DOne():
                return UNIT
            case DVar() | DPi():
                return take()
            case DSigma(fam=fam):
                first = take()
                return VPair(first, fill(fam(first)))
        raise IllTypedValue(f"not a description: {node!r}")

    def take() -> Value:
        if not remaining:
            raise IllTypedValue(f"too few fields for '{tag}")
        return remaining.pop(0)

    body = fill(d)
    if remaining:
        raise IllTypedValue(f"too many fields for '{tag}")
    return VIn(VPair(head[0], body) if head else body)
