"""
Ornaments: codes refining a base description by copying, inserting and deleting.

An ornament pairs a reindexing ``re : J -> I`` with an ornament code for every
fine index ``j``, checked against the base description at ``re(j)``.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from collections.abc import Callable

from typing_extensions import Self

from ornate.core import (
    UNIT,
    Algebra,
    Desc,
    DescFun,
    DOne,
    DPi,
    DSigma,
    DVar,
    MuSet,
    SetCode,
    VFun,
    VIn,
    VPair,
    VUnit,
    Value,
    check_value,
    enumerate_set,
    equal_value,
    fold,
    is_finite,
    show_value,
)
from ornate.errors import IllFormedOrnament, IllTypedValue, OrnateError

__all__ = [
    "InvWitness",
    "ODelete",
    "OInsert",
    "OOne",
    "OPi",
    "OSigma",
    "OVar",
    "OrnCode",
    "Ornament",
    "Reindexing",
    "check_ornament_at",
    "id_orn",
    "interp_code",
    "interp_orn",
    "orn_forget",
    "orn_forget_nat",
    "ornamental_algebra",
    "sweep_well_formed",
    "well_formed_orn",
]

logger = logging.getLogger(__name__)

Path = tuple[str, ...]


@dataclasses.dataclass(frozen=True)
class Reindexing:
    """The map ``re`` from fine indices ``J`` to coarse indices ``I``."""

    fine: SetCode
    coarse: SetCode
    apply: Callable[[Value], Value]

    @classmethod
    def identity(cls: type[Self], index_set: SetCode) -> Self:
        """Reindex a set onto itself."""
        return cls(index_set, index_set, _identity)


def _identity(value: Value) -> Value:
    return value


@dataclasses.dataclass(frozen=True)
class InvWitness:
    """A fine index ``j`` together with the coarse index it must map to."""

    j: Value
    expected: Value


@dataclasses.dataclass(frozen=True)
class OVar:
    """Refine a recursive position to the fine index of the witness."""

    witness: InvWitness


@dataclasses.dataclass(frozen=True)
class OOne:
    """Copy the end of a constructor."""


@dataclasses.dataclass(frozen=True)
class OPi:
    """Copy a function field, ornamenting pointwise."""

    fam: Callable[[Value], OrnCode]


@dataclasses.dataclass(frozen=True)
class OSigma:
    """Copy a data field, ornamenting the rest per value."""

    fam: Callable[[Value], OrnCode]


@dataclasses.dataclass(frozen=True)
class OInsert:
    """Insert a new field of set ``s``; ``label`` names it in scripts."""

    s: SetCode
    fam: Callable[[Value], OrnCode]
    label: str = dataclasses.field(default="", compare=False)


@dataclasses.dataclass(frozen=True)
class ODelete:
    """Delete a data field, fixing it to ``replacement``."""

    replacement: Value
    rest: OrnCode


OrnCode = OVar | OOne | OPi | OSigma | OInsert | ODelete


@dataclasses.dataclass(frozen=True)
class Ornament:
    """An ornament of ``base`` along ``re``."""

    base: DescFun
    re: Reindexing
    at: Callable[[Value], OrnCode]
    name: str = dataclasses.field(default="", compare=False)

    def base_at(self: Self, j: Value) -> Desc:
        """The base description node that ``at(j)`` ornaments."""
        return self.base.at(self.re.apply(j))


def _samples(s: SetCode, depth: int) -> tuple[Value, ...]:
    # infinite domains are checked up to the depth bound only
    return enumerate_set(s, 0 if is_finite(s) else depth)


def _check_code(
    oc: OrnCode, d: Desc, re: Reindexing, path: Path, depth: int
) -> None:
    match oc, d:
        case OVar(witness=w), DVar(index=index):
            if not check_value(re.fine, w.j):
                raise IllFormedOrnament(f"fine index {show_value(w.j)} outside J", path=path)
            if not equal_value(re.coarse, re.apply(w.j), w.expected):
                raise IllFormedOrnament("witness does not reindex as claimed", path=path)
            if not equal_value(re.coarse, w.expected, index):
                raise IllFormedOrnament(
                    f"refines index {show_value(w.expected)}, base has {show_value(index)}",
                    path=path,
                )
        case OOne(), DOne():
            pass
        case (OPi(fam=fam), DPi(dom=dom, fam=dfam)) | (
            OSigma(fam=fam),
            DSigma(dom=dom, fam=dfam),
        ):
            for s in _samples(dom, depth):
                _check_code(fam(s), dfam(s), re, (*path, show_value(s)), depth)
        case OInsert(s=s, fam=fam), _:
            for v in _samples(s, depth):
                _check_code(fam(v), d, re, (*path, f"insert {show_value(v)}"), depth)
        case ODelete(replacement=r, rest=rest), DSigma(dom=dom, fam=dfam):
            if not check_value(dom, r):
                raise IllFormedOrnament(f"deleted value {show_value(r)} outside its set", path=path)
            _check_code(rest, dfam(r), re, (*path, f"delete {show_value(r)}"), depth)
        case _:
            raise IllFormedOrnament(
                f"{type(oc).__name__} cannot ornament {type(d).__name__}", path=path
            )


def well_formed_orn(o: Ornament, j: Value, depth: int = 3) -> bool:
    """Whether ``o.at(j)`` fits the base description at ``re(j)``."""
    try:
        check_ornament_at(o, j, depth)
    except OrnateError as err:
        logger.debug("ornament %s ill-formed at %s: %s", o.name, show_value(j), err)
        return False
    return True


def check_ornament_at(o: Ornament, j: Value, depth: int = 3) -> None:
    """Raise ``IllFormedOrnament`` if ``o.at(j)`` does not fit its base."""
    if not check_value(o.re.fine, j):
        raise IllFormedOrnament(f"index {show_value(j)} outside J", path=(show_value(j),))
    _check_code(o.at(j), o.base_at(j), o.re, (show_value(j),), depth)


def sweep_well_formed(o: Ornament, depth: int) -> list[tuple[Value, str]]:
    """Check every fine index enumerable to ``depth``; return the failures."""
    failures = []
    for j in enumerate_set(o.re.fine, depth):
        try:
            check_ornament_at(o, j, depth)
        except OrnateError as err:
            failures.append((j, str(err)))
    return failures


def interp_code(oc: OrnCode, d: Desc, path: Path = ()) -> Desc:
    """The description a code yields over its base node; deletions emit no Σ."""
    match oc, d:
        case OVar(witness=w), DVar():
            return DVar(w.j)
        case OOne(), DOne():
            return DOne()
        case OPi(fam=fam), DPi(dom=dom, fam=dfam):
            return DPi(dom, lambda s: interp_code(fam(s), dfam(s), (*path, show_value(s))))
        case OSigma(fam=fam), DSigma(dom=dom, fam=dfam, choice=choice):
            return DSigma(
                dom,
                lambda s: interp_code(fam(s), dfam(s), (*path, show_value(s))),
                choice=choice,
            )
        case OInsert(s=s, fam=fam), _:
            return DSigma(s, lambda v: interp_code(fam(v), d, (*path, "insert")))
        case ODelete(replacement=r, rest=rest), DSigma(dom=dom, fam=dfam):
            if not check_value(dom, r):
                raise IllFormedOrnament(f"deleted value {show_value(r)} outside its set", path=path)
            return interp_code(rest, dfam(r), (*path, "delete"))
    raise IllFormedOrnament(
        f"{type(oc).__name__} cannot ornament {type(d).__name__}", path=path
    )


@functools.cache
def interp_orn(o: Ornament) -> DescFun:
    """The ornamented datatype, indexed by ``J``."""
    return DescFun(
        o.re.fine,
        lambda j: interp_code(o.at(j), o.base_at(j), (o.name, show_value(j))),
        name=o.name,
    )


@functools.cache
def id_orn(family: DescFun) -> Ornament:
    """The ornament copying ``family`` node for node."""
    return Ornament(
        family,
        Reindexing.identity(family.index_set),
        lambda i: _copy(family.at(i)),
        name=f"id{family.name}",
    )


def _copy(d: Desc) -> OrnCode:
    match d:
        case DVar(index=index):
            return OVar(InvWitness(index, index))
        case DOne():
            return OOne()
        case DPi(fam=fam):
            return OPi(lambda s: _copy(fam(s)))
        case DSigma(fam=fam):
            return OSigma(lambda s: _copy(fam(s)))
    raise IllFormedOrnament(f"not a description: {d!r}")


def orn_forget_nat(o: Ornament, j: Value, payload_plus: Value) -> Value:
    """Map an ornamented payload at ``j`` to a base payload at ``re(j)``."""
    return _forget_code(o.at(j), o.base_at(j), payload_plus)


def _forget_code(oc: OrnCode, d: Desc, v: Value) -> Value:
    match oc, d:
        case OVar(), DVar():
            return v
        case OOne(), DOne():
            if not isinstance(v, VUnit):
                raise IllTypedValue(f"expected unit, got {show_value(v)}")
            return UNIT
        case OPi(fam=fam), DPi(fam=dfam):
            if not isinstance(v, VFun):
                raise IllTypedValue(f"expected a function, got {show_value(v)}")
            return VFun(tuple((k, _forget_code(fam(k), dfam(k), r)) for k, r in v.table))
        case OSigma(fam=fam), DSigma(fam=dfam):
            fst, snd = _split(v)
            return VPair(fst, _forget_code(fam(fst), dfam(fst), snd))
        case OInsert(fam=fam), _:
            fst, snd = _split(v)
            return _forget_code(fam(fst), d, snd)
        case ODelete(replacement=r, rest=rest), DSigma(fam=dfam):
            return VPair(r, _forget_code(rest, dfam(r), v))
    raise IllFormedOrnament(f"{type(oc).__name__} cannot ornament {type(d).__name__}")


def _split(v: Value) -> tuple[Value, Value]:
    if not isinstance(v, VPair):
        raise IllTypedValue(f"expected a pair, got {show_value(v)}")
    return v.fst, v.snd


@functools.cache
def ornamental_algebra(o: Ornament) -> Algebra:
    """The algebra ``In ∘ orn_forget_nat`` on the ornamented datatype."""
    return Algebra(
        lambda j: MuSet(o.base, o.re.apply(j)),
        lambda j, payload: VIn(orn_forget_nat(o, j, payload)),
        name=f"forget{o.name}",
    )


def orn_forget(o: Ornament, j: Value, t_plus: Value) -> Value:
    """Forget the ornament: ``μ(interp_orn(o) j) -> μ(base (re j))``."""
    return fold(interp_orn(o), ornamental_algebra(o), j, t_plus)
