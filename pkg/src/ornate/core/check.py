"""Membership, equality and bounded enumeration over set codes."""

from __future__ import annotations

import functools
import itertools
from collections.abc import Callable, Sequence

from ornate.core.codes import (
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
)
from ornate.core.values import UNIT, VFun, VIn, VPair, VRefl, VTag, VUnit, Value
from ornate.errors import IllFormedSet, NonEnumerableDomain

__all__ = [
    "check_payload",
    "check_value",
    "elements",
    "enumerate_set",
    "equal_value",
    "height",
    "is_finite",
    "payload_set",
]

Check = Callable[[Value, Value], bool]


def check_value(s: SetCode, v: Value) -> bool:
    """
    Decide whether ``v`` is a canonical inhabitant of ``s``.

    >>> from ornate.core.codes import EnumSet
    >>> check_value(EnumSet(("a", "b")), VTag("b"))
    True
    """
    match s:
        case UnitSet():
            return isinstance(v, VUnit)
        case EmptySet():
            return False
        case EnumSet(tags=tags):
            return isinstance(v, VTag) and v.name in tags
        case SigmaSet(first=first, rest=rest):
            return (
                isinstance(v, VPair)
                and check_value(first, v.fst)
                and check_value(rest(v.fst), v.snd)
            )
        case PiSet(dom=dom, cod=cod):
            return _check_table(dom, v, lambda key, res: check_value(cod(key), res))
        case EqSet(carrier=carrier, lhs=lhs, rhs=rhs):
            _require_sides(s)
            return isinstance(v, VRefl) and equal_value(carrier, lhs, rhs)
        case MuSet(family=family, index=index):
            _require_index(s)
            return isinstance(v, VIn) and check_payload(
                family.at(index),
                lambda i, x: check_value(MuSet(family, i), x),
                v.payload,
            )
    raise IllFormedSet(f"not a set code: {s!r}")


def check_payload(d: Desc, check: Check, v: Value) -> bool:
    """Decide membership of ``v`` in ``⟦d⟧X`` where ``X`` is decided by ``check``."""
    match d:
        case DVar(index=index):
            return check(index, v)
        case DOne():
            return isinstance(v, VUnit)
        case DPi(dom=dom, fam=fam):
            return _check_table(dom, v, lambda key, res: check_payload(fam(key), check, res))
        case DSigma(dom=dom, fam=fam):
            return (
                isinstance(v, VPair)
                and check_value(dom, v.fst)
                and check_payload(fam(v.fst), check, v.snd)
            )
    raise IllFormedSet(f"not a description: {d!r}")


def _check_table(dom: SetCode, v: Value, entry_ok: Check) -> bool:
    if not isinstance(v, VFun):
        return False
    keys = [key for key, _ in v.table]
    if keys != list(elements(dom)):
        return False
    return all(entry_ok(key, res) for key, res in v.table)


def _require_sides(s: EqSet) -> None:
    if not (check_value(s.carrier, s.lhs) and check_value(s.carrier, s.rhs)):
        raise IllFormedSet(f"equation sides outside their carrier: {s!r}")


def _require_index(s: MuSet) -> None:
    if not check_value(s.family.index_set, s.index):
        name = s.family.name or "family"
        raise IllFormedSet(f"index {s.index!r} outside the index set of {name}")


def equal_value(s: SetCode, v1: Value, v2: Value) -> bool:
    """Structural equality of two inhabitants of ``s``; tables compare pointwise."""
    match s:
        case UnitSet() | EmptySet() | EqSet():
            return True
        case EnumSet():
            return v1 == v2
        case SigmaSet(first=first, rest=rest):
            if not (isinstance(v1, VPair) and isinstance(v2, VPair)):
                return False
            return equal_value(first, v1.fst, v2.fst) and equal_value(
                rest(v1.fst), v1.snd, v2.snd
            )
        case PiSet(dom=dom, cod=cod):
            if not (isinstance(v1, VFun) and isinstance(v2, VFun)):
                return False
            return all(
                equal_value(cod(key), v1(key), v2(key)) for key in elements(dom)
            )
        case MuSet(family=family, index=index):
            if not (isinstance(v1, VIn) and isinstance(v2, VIn)):
                return False
            return _equal_payload(family.at(index), family, v1.payload, v2.payload)
    raise IllFormedSet(f"not a set code: {s!r}")


def _equal_payload(d: Desc, family: DescFun, p1: Value, p2: Value) -> bool:
    match d:
        case DVar(index=index):
            return equal_value(MuSet(family, index), p1, p2)
        case DOne():
            return True
        case DPi(dom=dom, fam=fam):
            if not (isinstance(p1, VFun) and isinstance(p2, VFun)):
                return False
            return all(
                _equal_payload(fam(key), family, p1(key), p2(key))
                for key in elements(dom)
            )
        case DSigma(dom=dom, fam=fam):
            if not (isinstance(p1, VPair) and isinstance(p2, VPair)):
                return False
            return equal_value(dom, p1.fst, p2.fst) and _equal_payload(
                fam(p1.fst), family, p1.snd, p2.snd
            )
    return False


@functools.lru_cache(maxsize=4096)
def is_finite(s: SetCode) -> bool:
    """Whether ``s`` has finitely many inhabitants without a depth bound."""
    match s:
        case UnitSet() | EmptySet() | EnumSet() | EqSet():
            return True
        case SigmaSet(first=first, rest=rest):
            return is_finite(first) and all(
                is_finite(rest(a)) for a in _enumerate(first, 0)
            )
        case PiSet(dom=dom, cod=cod):
            return is_finite(dom) and all(is_finite(cod(a)) for a in _enumerate(dom, 0))
    return False


def elements(dom: SetCode) -> tuple[Value, ...]:
    """All inhabitants of a finite domain, or ``NonEnumerableDomain``."""
    if not is_finite(dom):
        raise NonEnumerableDomain(f"domain {dom!r} is not finite")
    return _enumerate(dom, 0)


def enumerate_set(s: SetCode, depth: int) -> tuple[Value, ...]:
    """
    Enumerate the inhabitants of ``s`` whose inductive nodes nest at most ``depth`` deep.

    Order: tags as declared, pairs lexicographically, inductive values by
    increasing depth and then payload order.

    >>> from ornate.core.codes import EnumSet
    >>> enumerate_set(EnumSet(("x", "y")), 0)
    (VTag(name='x'), VTag(name='y'))
    """
    if depth < 0:
        msg = f"depth must be non-negative, got {depth}"
        raise ValueError(msg)
    return _enumerate(s, depth)


@functools.lru_cache(maxsize=65536)
def _enumerate(s: SetCode, depth: int) -> tuple[Value, ...]:
    # depth -1 is the budget of the payload of a depth-0 node: no further nodes.
    match s:
        case UnitSet():
            return (UNIT,)
        case EmptySet():
            return ()
        case EnumSet(tags=tags):
            return tuple(VTag(t) for t in tags)
        case SigmaSet(first=first, rest=rest):
            return tuple(
                VPair(a, b) for a in _enumerate(first, depth) for b in _enumerate(rest(a), depth)
            )
        case PiSet(dom=dom, cod=cod):
            keys = elements(dom)
            return _tables(keys, [_enumerate(cod(k), depth) for k in keys])
        case EqSet(carrier=carrier, lhs=lhs, rhs=rhs):
            _require_sides(s)
            return (VRefl(),) if equal_value(carrier, lhs, rhs) else ()
        case MuSet(family=family, index=index):
            if depth < 0:
                return ()
            _require_index(s)
            nodes = [
                VIn(p)
                for p in _enumerate_payload(
                    family.at(index),
                    lambda i: _enumerate(MuSet(family, i), depth - 1),
                    depth - 1,
                )
            ]
            return tuple(sorted(nodes, key=height))
    raise IllFormedSet(f"not a set code: {s!r}")


def _enumerate_payload(
    d: Desc, carrier: Callable[[Value], Sequence[Value]], depth: int
) -> tuple[Value, ...]:
    match d:
        case DVar(index=index):
            return tuple(carrier(index))
        case DOne():
            return (UNIT,)
        case DPi(dom=dom, fam=fam):
            keys = elements(dom)
            return _tables(keys, [_enumerate_payload(fam(k), carrier, depth) for k in keys])
        case DSigma(dom=dom, fam=fam):
            return tuple(
                VPair(a, b)
                for a in _enumerate(dom, depth)
                for b in _enumerate_payload(fam(a), carrier, depth)
            )
    raise IllFormedSet(f"not a description: {d!r}")


def _tables(
    keys: Sequence[Value], columns: Sequence[Sequence[Value]]
) -> tuple[Value, ...]:
    return tuple(
        VFun(tuple(zip(keys, results, strict=True)))
        for results in itertools.product(*columns)
    )


def height(v: Value) -> int:
    """Depth metric: nesting of inductive nodes below the outermost one."""
    return max(_nesting(v) - 1, 0)


def _nesting(v: Value) -> int:
    match v:
        case VIn(payload=payload):
            return 1 + _nesting(payload)
        case VPair(fst=fst, snd=snd):
            return max(_nesting(fst), _nesting(snd))
        case VFun(table=table):
            return max((_nesting(res) for _, res in table), default=0)
    return 0


def payload_set(d: Desc, carrier: Callable[[Value], SetCode]) -> SetCode:
    """The set ``⟦d⟧X`` for a carrier family ``X`` of set codes."""
    match d:
        case DVar(index=index):
            return carrier(index)
        case DOne():
            return UnitSet()
        case DPi(dom=dom, fam=fam):
            return PiSet(dom, lambda key: payload_set(fam(key), carrier))
        case DSigma(dom=dom, fam=fam):
            return SigmaSet(dom, lambda key: payload_set(fam(key), carrier))
    raise IllFormedSet(f"not a description: {d!r}")
