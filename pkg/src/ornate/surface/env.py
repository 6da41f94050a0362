"""
The environment of elaborated entities.

An ``Env`` is immutable: defining a name returns a new ``Env``. Definitions
and the names they depend on form a directed acyclic graph.
"""

from __future__ import annotations

import dataclasses
import types
from collections.abc import Callable, Iterable, Mapping, Sequence

import networkx as nx
from typing_extensions import Self

from ornate.body import fold_algebra
from ornate.core import UNIT, Algebra, DescFun, EnumSet, SetCode, UnitSet, Value
from ornate.errors import ElaborationError, UnknownName
from ornate.funorn import BaseFn, FunOrn, FunType, LiftedFn, PatchFn
from ornate.lift import HoleReport
from ornate.ornament import Ornament, interp_orn

__all__ = [
    "DEFAULT_PARAMS",
    "Applicable",
    "Entity",
    "Env",
    "HostFn",
    "NamedFunOrn",
    "NamedType",
    "tag_set",
]


def tag_set(name: str, tags: Sequence[str]) -> EnumSet:
    """A set parameter instantiated to an enumeration."""
    return EnumSet(tuple(tags), name=name)


DEFAULT_PARAMS: Mapping[str, SetCode] = types.MappingProxyType({"A": tag_set("A", ("x", "y"))})


@dataclasses.dataclass(frozen=True)
class NamedType:
    """A declared function type."""

    name: str
    sig: FunType


@dataclasses.dataclass(frozen=True)
class NamedFunOrn:
    """A declared functional ornament with the type it ornaments."""

    name: str
    over: FunType
    orn: FunOrn


@dataclasses.dataclass(frozen=True)
class HostFn:
    """A function given directly in the host language."""

    name: str
    arity: int
    run: Callable[..., Sequence[Value]]

    def __call__(self: Self, *args: Value) -> tuple[Value, ...]:
        """Apply to ``arity`` values."""
        return tuple(self.run(*args))


Entity = (
    DescFun
    | Ornament
    | Algebra
    | NamedType
    | BaseFn
    | NamedFunOrn
    | PatchFn
    | HoleReport
    | LiftedFn
    | HostFn
)
Applicable = BaseFn | LiftedFn | PatchFn | HostFn


def _kind(entity: Entity) -> str:
    match entity:
        case DescFun():
            return "datatype"
        case Ornament():
            return "ornament"
        case Algebra():
            return "algebra"
        case NamedType():
            return "type"
        case BaseFn():
            return "function"
        case NamedFunOrn():
            return "functional ornament"
        case PatchFn():
            return "lifting"
        case HoleReport():
            return "lifting with holes"
        case LiftedFn():
            return "lifted function"
    return "host function"


@dataclasses.dataclass(frozen=True)
class Env:
    """Named entities plus the set parameters they were elaborated under."""

    params: Mapping[str, SetCode] = DEFAULT_PARAMS
    entities: Mapping[str, Entity] = types.MappingProxyType({})
    graph: nx.DiGraph = dataclasses.field(default_factory=nx.DiGraph, compare=False)

    def define(self: Self, name: str, entity: Entity, depends_on: Iterable[str] = ()) -> Self:
        """Return a new environment with ``name`` bound to ``entity``."""
        if name in self.entities:
            raise ElaborationError((name,), f"{name} is already defined")
        graph = self.graph.copy()
        graph.add_node(name)
        graph.add_edges_from((name, dep) for dep in depends_on if dep != name)
        if not nx.is_directed_acyclic_graph(graph):
            raise ElaborationError((name,), "definitions depend on each other in a cycle")
        entities = types.MappingProxyType({**self.entities, name: entity})
        return dataclasses.replace(self, entities=entities, graph=graph)

    def __contains__(self: Self, name: object) -> bool:
        return name in self.entities

    def kind(self: Self, name: str) -> str:
        """Describe what ``name`` is."""
        return _kind(self.lookup(name))

    def lookup(self: Self, name: str, path: tuple[str, ...] = ()) -> Entity:
        """The entity called ``name``."""
        if name not in self.entities:
            raise UnknownName(path or (name,), f"unknown name {name}")
        return self.entities[name]

    def _wrong(self: Self, name: str, wanted: str, path: tuple[str, ...]) -> ElaborationError:
        return ElaborationError(path or (name,), f"{name} is a {self.kind(name)}, not {wanted}")

    def family(self: Self, name: str, path: tuple[str, ...] = ()) -> DescFun:
        """The inductive family of a datatype or an ornament."""
        match self.lookup(name, path):
            case DescFun() as family:
                return family
            case Ornament() as orn:
                return interp_orn(orn)
        raise self._wrong(name, "a datatype", path)

    def ornament(self: Self, name: str, path: tuple[str, ...] = ()) -> Ornament:
        """The ornament called ``name``."""
        entity = self.lookup(name, path)
        if not isinstance(entity, Ornament):
            raise self._wrong(name, "an ornament", path)
        return entity

    def algebra(self: Self, name: str, path: tuple[str, ...] = ()) -> Algebra:
        """An algebra, given directly or as a function defined by ``fold``."""
        match self.lookup(name, path):
            case Algebra() as alg:
                return alg
            case BaseFn(skeleton=fundef) if fundef is not None:
                return fold_algebra(fundef)
        raise self._wrong(name, "an algebra", path)

    def fun_type(self: Self, name: str, path: tuple[str, ...] = ()) -> FunType:
        """A declared function type."""
        entity = self.lookup(name, path)
        if not isinstance(entity, NamedType):
            raise self._wrong(name, "a function type", path)
        return entity.sig

    def function(self: Self, name: str, path: tuple[str, ...] = ()) -> BaseFn:
        """A base function."""
        entity = self.lookup(name, path)
        if not isinstance(entity, BaseFn):
            raise self._wrong(name, "a function", path)
        return entity

    def funorn(self: Self, name: str, path: tuple[str, ...] = ()) -> NamedFunOrn:
        """A functional ornament."""
        entity = self.lookup(name, path)
        if not isinstance(entity, NamedFunOrn):
            raise self._wrong(name, "a functional ornament", path)
        return entity

    def lifting(self: Self, name: str, path: tuple[str, ...] = ()) -> PatchFn | HoleReport:
        """The result of a lifting script."""
        entity = self.lookup(name, path)
        if not isinstance(entity, PatchFn | HoleReport):
            raise self._wrong(name, "a lifting", path)
        return entity

    def applicable(self: Self, name: str, path: tuple[str, ...] = ()) -> Applicable:
        """Anything that can be applied to values."""
        entity = self.lookup(name, path)
        if not isinstance(entity, BaseFn | LiftedFn | PatchFn | HostFn):
            raise self._wrong(name, "a function", path)
        return entity

    def default_index(self: Self, family: DescFun) -> Value | None:
        """The only index of a family over the unit set."""
        return UNIT if isinstance(family.index_set, UnitSet) else None

    def names(self: Self, kind: str | None = None) -> list[str]:
        """Defined names, optionally of one kind, in definition order."""
        return [n for n, e in self.entities.items() if kind is None or _kind(e) == kind]
