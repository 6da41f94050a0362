"""
Declarations of a source file, checked for shape but not yet elaborated.

Every declaration keeps the form it was read from; printing a declaration
prints that form.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Iterator
from typing import ClassVar

from typing_extensions import Self

from ornate.errors import ParseError
from ornate.surface.sexpr import Atom, SExpr, SList, SourceFile, show

__all__ = [
    "AlgDecl",
    "DataDecl",
    "Declaration",
    "FunDecl",
    "FunOrnDecl",
    "IndexClause",
    "LiftDecl",
    "OrnDecl",
    "PatchedDecl",
    "ReornDecl",
    "TypeDecl",
    "atoms",
    "declaration",
    "declarations",
    "expect_atom",
    "expect_list",
    "fail",
]


def fail(form: SExpr, expected: str) -> ParseError:
    """Build the error for ``form`` not being what was expected."""
    return ParseError(form.line, form.column, expected)


def expect_atom(form: SExpr, expected: str = "a name") -> Atom:
    """Return ``form`` as a plain name."""
    if not isinstance(form, Atom) or not form.is_name:
        raise fail(form, expected)
    return form


def expect_list(form: SExpr, expected: str, head: str | None = None) -> SList:
    """Return ``form`` as a list, optionally with the given head."""
    if not isinstance(form, SList) or (head is not None and form.head != head):
        raise fail(form, expected)
    return form


def atoms(form: SExpr) -> Iterator[str]:
    """Every atom text in ``form``."""
    if isinstance(form, Atom):
        yield form.text
    else:
        for item in form.items:
            yield from atoms(item)


@dataclasses.dataclass(frozen=True)
class IndexClause:
    """``(index [PAT] SET)``: the index set and how to bind the index."""

    set: SExpr
    pattern: SExpr | None = None

    @classmethod
    def from_form(cls: type[Self], form: SList) -> Self:
        """Read the clause."""
        match form.args:
            case (index_set,):
                return cls(index_set)
            case (pattern, index_set):
                return cls(index_set, pattern)
        raise fail(form, "(index SET) or (index PATTERN SET)")


@dataclasses.dataclass(frozen=True)
class Declaration:
    """A named top-level declaration."""

    keyword: ClassVar[str] = ""

    name: str
    form: SList

    def show(self: Self) -> str:
        """Print the declaration."""
        return show(self.form)

    @classmethod
    def from_form(cls: type[Declaration], form: SList) -> Declaration:
        """Read a declaration of this kind."""
        raise NotImplementedError


def _clauses(form: SList, start: int, allowed: set[str]) -> tuple[dict[str, SList], SExpr]:
    """Split optional keyword clauses from the final body form."""
    if len(form.items) <= start:
        raise fail(form, f"a body for {form.head}")
    clauses: dict[str, SList] = {}
    *middle, body = form.items[start:]
    for item in middle:
        clause = expect_list(item, f"one of the clauses {sorted(allowed)}")
        if clause.head not in allowed or clause.head in clauses:
            raise fail(item, f"one of the clauses {sorted(allowed)}, each at most once")
        clauses[clause.head] = clause
    return clauses, body


def _params(clauses: dict[str, SList]) -> tuple[str, ...]:
    if "param" not in clauses:
        return ()
    return tuple(expect_atom(a, "a parameter name").text for a in clauses["param"].args)


def _name_in(clause: SList) -> str:
    match clause.args:
        case (Atom() as atom,):
            return expect_atom(atom).text
    raise fail(clause, f"({clause.head} NAME)")


@dataclasses.dataclass(frozen=True)
class DataDecl(Declaration):
    """``(data Name [(param P ...)] (index ...) BODY)``."""

    keyword = "data"

    params: tuple[str, ...] = ()
    index: IndexClause | None = None
    body: SExpr = dataclasses.field(default_factory=lambda: SList(()))

    @classmethod
    def from_form(cls: type[DataDecl], form: SList) -> DataDecl:
        """Read a datatype declaration."""
        clauses, body = _clauses(form, 2, {"param", "index"})
        params = _params(clauses)
        index = IndexClause.from_form(clauses["index"]) if "index" in clauses else None
        return cls(_declared(form), form, params, index, body)


@dataclasses.dataclass(frozen=True)
class OrnDecl(Declaration):
    """``(ornament Name (from Base) [(param ...)] [(index ...)] [(reindex e)] BODY)``."""

    keyword = "ornament"

    base: str = ""
    params: tuple[str, ...] = ()
    index: IndexClause | None = None
    reindex: SExpr | None = None
    body: SExpr = dataclasses.field(default_factory=lambda: SList(()))

    @classmethod
    def from_form(cls: type[OrnDecl], form: SList) -> OrnDecl:
        """Read an ornament declaration."""
        clauses, body = _clauses(form, 2, {"from", "param", "index", "reindex"})
        if "from" not in clauses:
            raise fail(form, "a (from BASE) clause")
        params = _params(clauses)
        index = IndexClause.from_form(clauses["index"]) if "index" in clauses else None
        reindex = None
        if "reindex" in clauses:
            match clauses["reindex"].args:
                case (expr,):
                    reindex = expr
                case _:
                    raise fail(clauses["reindex"], "(reindex EXPR)")
        base = _name_in(clauses["from"])
        return cls(_declared(form), form, base, params, index, reindex, body)


@dataclasses.dataclass(frozen=True)
class ReornDecl(Declaration):
    """``(reornament Name (of Orn))``."""

    keyword = "reornament"

    of: str = ""

    @classmethod
    def from_form(cls: type[ReornDecl], form: SList) -> ReornDecl:
        """Read a reornament declaration."""
        match form.items:
            case (_, _, SList() as of):
                of_name = _name_in(expect_list(of, "(of ORNAMENT)", "of"))
                return cls(_declared(form), form, of_name)
        raise fail(form, "(reornament NAME (of ORNAMENT))")


@dataclasses.dataclass(frozen=True)
class AlgDecl(Declaration):
    """``(algebraic Name (of Data) (by fun))``."""

    keyword = "algebraic"

    of: str = ""
    by: str = ""

    @classmethod
    def from_form(cls: type[AlgDecl], form: SList) -> AlgDecl:
        """Read an algebraic ornament declaration."""
        match form.items:
            case (_, _, SList() as of, SList() as by):
                return cls(
                    _declared(form),
                    form,
                    _name_in(expect_list(of, "(of DATA)", "of")),
                    _name_in(expect_list(by, "(by FUNCTION)", "by")),
                )
        raise fail(form, "(algebraic NAME (of DATA) (by FUNCTION))")


@dataclasses.dataclass(frozen=True)
class TypeDecl(Declaration):
    """``(type Name FUNTYPE)``."""

    keyword = "type"

    spine: SExpr = dataclasses.field(default_factory=lambda: Atom("end"))

    @classmethod
    def from_form(cls: type[TypeDecl], form: SList) -> TypeDecl:
        """Read a function type declaration."""
        match form.items:
            case (_, _, spine):
                return cls(_declared(form), form, spine)
        raise fail(form, "(type NAME FUNTYPE)")


@dataclasses.dataclass(frozen=True)
class FunDecl(Declaration):
    """``(fun name TYPE (params ...) BODY)``."""

    keyword = "fun"

    sig: SExpr = dataclasses.field(default_factory=lambda: Atom("end"))
    params: tuple[str, ...] = ()
    body: SExpr = dataclasses.field(default_factory=lambda: SList(()))

    @classmethod
    def from_form(cls: type[FunDecl], form: SList) -> FunDecl:
        """Read a function definition."""
        match form.items:
            case (_, _, sig, SList() as params, body):
                names = tuple(expect_atom(p, "a parameter name").text for p in params.items)
                if len(set(names)) != len(names):
                    raise fail(params, "distinct parameter names")
                return cls(_declared(form), form, sig, names, body)
        raise fail(form, "(fun NAME TYPE (PARAMS ...) BODY)")


@dataclasses.dataclass(frozen=True)
class FunOrnDecl(Declaration):
    """``(funorn Name (over Type) NODE ...)``."""

    keyword = "funorn"

    over: str = ""
    nodes: tuple[SExpr, ...] = ()

    @classmethod
    def from_form(cls: type[FunOrnDecl], form: SList) -> FunOrnDecl:
        """Read a functional ornament declaration."""
        match form.items:
            case (_, _, SList() as over, *nodes):
                name = _name_in(expect_list(over, "(over TYPE)", "over"))
                return cls(_declared(form), form, name, tuple(nodes))
        raise fail(form, "(funorn NAME (over TYPE) NODE ...)")


@dataclasses.dataclass(frozen=True)
class LiftDecl(Declaration):
    """``(lift name (patch base funorn) SCRIPT)``."""

    keyword = "lift"

    base: str = ""
    funorn: str = ""
    script: SExpr = dataclasses.field(default_factory=lambda: SList(()))

    @classmethod
    def from_form(cls: type[LiftDecl], form: SList) -> LiftDecl:
        """Read a lifting declaration."""
        match form.items:
            case (_, _, SList(items=(Atom(text="patch"), base, funorn)), script):
                return cls(
                    _declared(form),
                    form,
                    expect_atom(base, "a base function").text,
                    expect_atom(funorn, "a functional ornament").text,
                    script,
                )
        raise fail(form, "(lift NAME (patch FUNCTION FUNORN) SCRIPT)")


@dataclasses.dataclass(frozen=True)
class PatchedDecl(Declaration):
    """``(patched name (lift L))``."""

    keyword = "patched"

    lift: str = ""

    @classmethod
    def from_form(cls: type[PatchedDecl], form: SList) -> PatchedDecl:
        """Read a patched function declaration."""
        match form.items:
            case (_, _, SList() as lift):
                lift_name = _name_in(expect_list(lift, "(lift NAME)", "lift"))
                return cls(_declared(form), form, lift_name)
        raise fail(form, "(patched NAME (lift LIFTING))")


_KINDS: dict[str, type[Declaration]] = {
    kind.keyword: kind
    for kind in (
        DataDecl,
        OrnDecl,
        ReornDecl,
        AlgDecl,
        TypeDecl,
        FunDecl,
        FunOrnDecl,
        LiftDecl,
        PatchedDecl,
    )
}


def _declared(form: SList) -> str:
    if len(form.items) < 2:
        raise fail(form, f"a name after {form.head}")
    return expect_atom(form.items[1], "the declared name").text


def declaration(form: SExpr) -> Declaration:
    """Read one top-level form."""
    top = expect_list(form, "a declaration")
    kind = _KINDS.get(top.head or "")
    if kind is None:
        raise fail(form, f"a declaration keyword, one of {sorted(_KINDS)}")
    return kind.from_form(top)


def declarations(source: SourceFile) -> tuple[Declaration, ...]:
    """Read every top-level form of a file."""
    return tuple(declaration(form) for form in source.forms)
