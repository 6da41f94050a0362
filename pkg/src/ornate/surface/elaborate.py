"""
Elaboration of declarations into kernel objects.

Datatypes become ``DescFun`` s whose nodes are computed from the declared
case tree on demand, ornaments become ``Ornament`` s checked against their
base, functions become ``BaseFn`` s that keep their body as recursion
skeleton, and lifting scripts become ``PatchFn`` s or ``HoleReport`` s.

Declarations of one file may appear in any order; they are elaborated after
the ones they mention.
"""

from __future__ import annotations

import dataclasses
import logging
from collections.abc import Callable, Mapping, Sequence

import networkx as nx
from typing_extensions import Self

from ornate.algebraic import algebraic_ornament, reornament
from ornate.body import Bound, FunDef, base_fn, check_fundef
from ornate.core import (
    UNIT,
    Desc,
    DescFun,
    DOne,
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
    VFun,
    VIn,
    VPair,
    VRefl,
    VTag,
    Value,
    by_tag,
    check_value,
    destruct,
    enumerate_set,
    nat,
    show_set,
    show_value,
    tagged,
)
from ornate.errors import ElaborationError, OrnateError, ParseError
from ornate.funorn import (
    BaseFn,
    End,
    FunOrn,
    FunType,
    LiftedFn,
    MuArrow,
    MuArrowOrn,
    MuTimes,
    MuTimesOrn,
    PatchFn,
    patch,
    slots,
    spine,
)
from ornate.lift import HoleReport, elaborate_script
from ornate.ornament import (
    InvWitness,
    ODelete,
    OInsert,
    OOne,
    OrnCode,
    Ornament,
    OSigma,
    OVar,
    Reindexing,
    id_orn,
    interp_orn,
    sweep_well_formed,
)
from ornate.surface.env import Env, NamedFunOrn, NamedType
from ornate.surface.script import parse_body, parse_script
from ornate.surface.sexpr import Atom, SExpr, SList, SourceFile, parse
from ornate.surface.syntax import (
    AlgDecl,
    DataDecl,
    Declaration,
    FunDecl,
    FunOrnDecl,
    IndexClause,
    LiftDecl,
    OrnDecl,
    PatchedDecl,
    ReornDecl,
    TypeDecl,
    atoms,
    declarations,
)

__all__ = ["Terms", "elaborate", "elaborate_declaration", "load_text"]

logger = logging.getLogger(__name__)

Scope = Mapping[str, Bound]
Alternative = tuple[SExpr, Scope]

# enumeration depth for the checks run on every new datatype and ornament
FORCE_DEPTH = 1


def _identity(value: Value) -> Value:
    return value


@dataclasses.dataclass
class Terms:
    """
    Sets, values and patterns inside one declaration.

    ``own`` holds the datatype being declared, so that its constructors can
    mention it before it is in the environment.
    """

    env: Env
    path: tuple[str, ...]
    own: dict[str, DescFun] = dataclasses.field(default_factory=dict)

    def error(self: Self, form: SExpr, reason: str) -> ElaborationError:
        """An error located at ``form``."""
        return ElaborationError(self.path, f"{form.line}:{form.column}: {reason}")

    def family(self: Self, form: SExpr) -> DescFun:
        """The family a datatype or ornament name refers to."""
        if not isinstance(form, Atom) or not form.is_name:
            raise self.error(form, "a datatype name")
        if form.text in self.own:
            return self.own[form.text]
        return self.env.family(form.text, self.path)

    # sets

    def set_expr(self: Self, form: SExpr, scope: Scope) -> SetCode:
        """Elaborate a set expression."""
        match form:
            case Atom(text="unit"):
                return UnitSet()
            case Atom(text="empty"):
                return EmptySet()
            case Atom(text=name) if name in self.env.params:
                return self.env.params[name]
            case Atom() if form.is_name:
                family = self.family(form)
                if not isinstance(family.index_set, UnitSet):
                    raise self.error(form, f"{form.text} needs an index: (mu {form.text} INDEX)")
                return MuSet(family, UNIT)
            case SList(items=(Atom(text="enum"), *tags)):
                names = tuple(self.tag_name(t) for t in tags)
                if len(set(names)) != len(names):
                    raise self.error(form, "distinct tags")
                return EnumSet(names)
            case SList(items=(Atom(text="mu"), name, index)):
                family = self.family(name)
                value = self.value(index, scope)
                if not check_value(family.index_set, value):
                    msg = f"index {show_value(value)} is not in {show_set(family.index_set)}"
                    raise self.error(index, msg)
                return MuSet(family, value)
            case SList(items=(Atom(text="sigma" | "pi") as head, SList(items=(x, first)), rest)):
                var = self.name(x)
                dom = self.set_expr(first, scope)

                def fam(v: Value) -> SetCode:
                    return self.set_expr(rest, {**scope, var: Bound(v, dom)})

                return SigmaSet(dom, fam) if head.text == "sigma" else PiSet(dom, fam)
            case SList(items=(Atom(text="eq"), carrier, lhs, rhs)):
                s = self.set_expr(carrier, scope)
                return EqSet(s, self.value(lhs, scope), self.value(rhs, scope))
        raise self.error(form, "a set")

    def name(self: Self, form: SExpr) -> str:
        """A plain name."""
        if not isinstance(form, Atom) or not form.is_name:
            raise self.error(form, "a name")
        return form.text

    def tag_name(self: Self, form: SExpr) -> str:
        """A constructor or enumeration tag, quoted or not."""
        if isinstance(form, Atom) and not form.is_hole:
            return form.tag if form.is_tag else form.text
        raise self.error(form, "a tag")

    # values

    def value(self: Self, form: SExpr, scope: Scope) -> Value:
        """Elaborate a value or index expression."""
        match form:
            case Atom(text="unit"):
                return UNIT
            case Atom(text="refl"):
                return VRefl()
            case Atom() if form.is_tag:
                return VTag(form.tag)
            case Atom() if form.is_nat:
                return nat(int(form.text))
            case Atom(text=name) if name in scope:
                return scope[name].value
            case Atom() if form.is_name:
                raise self.error(form, f"unbound variable {form.text}")
            case SList(items=(Atom(text="pair"), fst, snd)):
                return VPair(self.value(fst, scope), self.value(snd, scope))
            case SList(items=(Atom(text="in"), payload)):
                return VIn(self.value(payload, scope))
            case SList(items=(Atom(text="suc"), pred)):
                return tagged("suc", self.value(pred, scope))
            case SList(items=(Atom(text="fun"), *entries)):
                return VFun(tuple(self.entry(e, scope) for e in entries))
            case SList(items=(Atom() as head,)) if head.is_tag:
                return tagged(head.tag)
            case SList(items=(Atom() as head, payload)) if head.is_tag:
                return tagged(head.tag, self.value(payload, scope))
        raise self.error(form, "a value")

    def entry(self: Self, form: SExpr, scope: Scope) -> tuple[Value, Value]:
        """One ``(argument result)`` entry of a function table."""
        match form:
            case SList(items=(arg, result)):
                return self.value(arg, scope), self.value(result, scope)
        raise self.error(form, "a table entry (ARGUMENT RESULT)")

    # patterns

    def match(
        self: Self, pattern: SExpr, value: Value, s: SetCode | None
    ) -> dict[str, Bound] | None:
        """Match ``value`` of set ``s`` against ``pattern``, binding its variables."""
        match pattern:
            case Atom(text="_"):
                return {}
            case Atom(text=name) if pattern.is_name and name not in {"unit", "refl"}:
                return {name: Bound(value, s)}
            case Atom():
                return {} if self.value(pattern, {}) == value else None
            case SList(items=(Atom(text="pair"), p, q)):
                if not isinstance(value, VPair):
                    return None
                first = s.first if isinstance(s, SigmaSet) else None
                rest = s.rest(value.fst) if isinstance(s, SigmaSet) else None
                left = self.match(p, value.fst, first)
                right = self.match(q, value.snd, rest)
                return None if left is None or right is None else {**left, **right}
            case SList(items=(Atom() as head, *subs)) if head.is_tag or head.text == "suc":
                wanted = head.tag if head.is_tag else "suc"
                match value:
                    case VIn(VPair(VTag(name), rest)) if name == wanted:
                        pass
                    case _:
                        return None
                match subs:
                    case []:
                        return {} if rest == UNIT else None
                    case [sub]:
                        return self.match(sub, rest, _single_field_set(s, value))
                raise self.error(pattern, "at most one pattern after a tag")
        raise self.error(pattern, "a pattern")

    def bind_index(
        self: Self, clause: IndexClause | None, index: Value, index_set: SetCode
    ) -> Scope:
        """Bind the index of a node to the declared index pattern."""
        if clause is None or clause.pattern is None:
            return {}
        bound = self.match(clause.pattern, index, index_set)
        if bound is None:
            raise self.error(clause.pattern, f"a pattern matching {show_value(index)}")
        return bound

    def alternatives(self: Self, body: SExpr, scope: Scope) -> tuple[list[Alternative], bool]:
        """
        The constructor forms a case tree emits at one index.

        The flag is set when the index was matched by exactly one computed
        branch.
        """
        match body:
            case SList(items=(Atom(text="case"), Atom(text="_"), *groups)):
                out: list[Alternative] = []
                for group in groups:
                    if not isinstance(group, SList):
                        raise self.error(group, "a list of constructors")
                    out.extend((ctor, scope) for ctor in group.items)
                return out, False
            case SList(items=(Atom(text="case"), Atom() as var, *branches)) if var.is_name:
                if var.text not in scope:
                    raise self.error(var, f"{var.text} is not the index")
                bound = scope[var.text]
                out, matched = [], 0
                for branch in branches:
                    match branch:
                        case SList(items=(pattern, *elements)):
                            binding = self.match(pattern, bound.value, bound.set)
                        case _:
                            raise self.error(branch, "a branch (PATTERN CONSTRUCTOR ...)")
                    if binding is None:
                        continue
                    matched += 1
                    inner = {**scope, **binding}
                    out.extend((element, inner) for element in elements)
                return out, matched == 1
        raise self.error(body, "(case _ (CONSTRUCTOR ...) ...) or (case VAR (PATTERN ...) ...)")

    # datatypes

    def ctor_name(self: Self, form: SExpr) -> str:
        """The tag of a constructor form."""
        if isinstance(form, SList) and form.items:
            return self.tag_name(form.items[0])
        raise self.error(form, "a constructor (NAME FIELD ...)")

    def tagged_node(self: Self, alternatives: Sequence[Alternative]) -> Desc:
        """A tag Σ over the constructors, then their fields."""
        names = [self.ctor_name(form) for form, _ in alternatives]
        if len(set(names)) != len(names):
            raise self.error(alternatives[0][0], f"distinct constructor names, got {names}")
        branches = {
            name: self.fields(_args(form), scope)
            for name, (form, scope) in zip(names, alternatives, strict=True)
        }
        return DSigma(EnumSet(tuple(names)), by_tag(branches), choice=True)

    def fields(self: Self, fields: Sequence[SExpr], scope: Scope) -> Desc:
        """The description of a constructor's fields."""
        if not fields:
            return DOne()
        field, *rest = fields
        match field:
            case SList(items=(Atom(text="="), lhs, rhs)):
                eq = EqSet(self.carrier(lhs, scope), self.value(lhs, scope), self.value(rhs, scope))
                return DSigma(eq, lambda _: self.fields(rest, scope))
            case SList(items=(Atom(text="="), carrier, lhs, rhs)):
                carrier_set = self.set_expr(carrier, scope)
                eq = EqSet(carrier_set, self.value(lhs, scope), self.value(rhs, scope))
                return DSigma(eq, lambda _: self.fields(rest, scope))
            case SList(items=(Atom() as x, s)) if x.is_name:
                if self.recursive(s):
                    if rest:
                        raise self.error(field, "the recursive field last")
                    return DVar(self.own_index(s, scope))
                dom = self.set_expr(s, scope)
                return DSigma(dom, lambda v: self.fields(rest, {**scope, x.text: Bound(v, dom)}))
        raise self.error(field, "a field (NAME SET) or an equation (= LHS RHS)")

    def recursive(self: Self, s: SExpr) -> bool:
        """Whether a field set is the datatype being declared."""
        match s:
            case Atom(text=name):
                return name in self.own
            case SList(items=(Atom(text="mu"), Atom(text=name), _)):
                return name in self.own
        return False

    def own_index(self: Self, s: SExpr, scope: Scope) -> Value:
        """The index of a recursive field."""
        match s:
            case SList(items=(Atom(text="mu"), _, index)):
                return self.value(index, scope)
        return UNIT

    def carrier(self: Self, lhs: SExpr, scope: Scope) -> SetCode:
        """The set an equation lives in, read off its left-hand side variable."""
        if isinstance(lhs, Atom) and lhs.text in scope:
            known = scope[lhs.text].set
            if known is not None:
                return known
        raise self.error(lhs, "a variable of known set on the left, or (= SET LHS RHS)")

    # ornaments

    def node_code(
        self,
        inserts: Sequence[Alternative],
        ctors: Sequence[Alternative],
        d: Desc,
        detag: bool,
        default_fine: Callable[[Value], Value] | None,
        extra: Scope,
    ) -> OrnCode:
        """The ornament code of one index: leading insertions, then constructors."""
        if inserts:
            (form, scope), *more = inserts
            x, s_form = _insert_parts(form, self)
            s = self.set_expr(s_form, {**scope, **extra})
            return OInsert(
                s,
                lambda v: self.node_code(
                    more, ctors, d, detag, default_fine, {**extra, x: Bound(v, s)}
                ),
                label=x,
            )
        if not ctors:
            msg = "no constructors at this index"
            raise ElaborationError(self.path, msg)
        if isinstance(d, DSigma) and d.choice and isinstance(d.dom, EnumSet):
            tags = d.dom.tags
            if detag:
                form, scope = ctors[0]
                name = self.ctor_name(form)
                if name not in tags:
                    raise self.error(form, f"one of the base constructors {list(tags)}")
                return ODelete(
                    VTag(name),
                    self.ctor_code(
                        _args(form), d.fam(VTag(name)), {**scope, **extra}, default_fine
                    ),
                )
            listed: dict[str, Alternative] = {}
            for form, scope in ctors:
                name = self.ctor_name(form)
                if name not in tags or name in listed:
                    raise self.error(form, f"each base constructor of {list(tags)} once")
                listed[name] = (form, scope)
            missing = [t for t in tags if t not in listed]
            if missing:
                raise self.error(ctors[0][0], f"the missing base constructors {missing}")

            def copy(tag: Value) -> OrnCode:
                form, scope = listed[_tag_of(tag)]
                return self.ctor_code(_args(form), d.fam(tag), {**scope, **extra}, default_fine)

            return OSigma(copy)
        if len(ctors) != 1:
            raise self.error(ctors[1][0], "a single constructor, the base has no tags here")
        form, scope = ctors[0]
        return self.ctor_code(_args(form), d, {**scope, **extra}, default_fine)

    def ctor_code(
        self,
        items: Sequence[SExpr],
        d: Desc,
        scope: Scope,
        default_fine: Callable[[Value], Value] | None,
    ) -> OrnCode:
        """Ornament the fields of a base constructor, item by item."""
        if not items:
            if isinstance(d, DOne):
                return OOne()
            msg = "constructor stops before the base fields end"
            raise ElaborationError(self.path, msg)
        item, *rest = items
        match item, d:
            case SList(items=(Atom(text="insert"), x, s_form)), _:
                var = self.name(x)
                s = self.set_expr(s_form, scope)
                return OInsert(
                    s,
                    lambda v: self.ctor_code(rest, d, {**scope, var: Bound(v, s)}, default_fine),
                    label=var,
                )
            case SList(items=(Atom(text="delete"), x, v_form)), DSigma(dom=dom, fam=fam):
                var = self.name(x)
                v = self.value(v_form, scope)
                inner = {**scope, var: Bound(v, dom)}
                return ODelete(v, self.ctor_code(rest, fam(v), inner, default_fine))
            case (Atom() | SList(items=(Atom(),))), DSigma(dom=dom, fam=fam):
                var = self.name(item if isinstance(item, Atom) else item.items[0])
                return OSigma(
                    lambda s: self.ctor_code(
                        rest, fam(s), {**scope, var: Bound(s, dom)}, default_fine
                    )
                )
            case (Atom() | SList(items=(Atom(),))), DVar(index=index):
                if rest:
                    raise self.error(item, "the recursive field last")
                if default_fine is None:
                    raise self.error(item, "the fine index of the recursive field: (NAME INDEX)")
                return OVar(InvWitness(default_fine(index), index))
            case SList(items=(Atom(), j)), DVar(index=index):
                if rest:
                    raise self.error(item, "the recursive field last")
                return OVar(InvWitness(self.value(j, scope), index))
        raise self.error(item, f"a field matching the base node {type(d).__name__}")


def _args(form: SExpr) -> tuple[SExpr, ...]:
    return form.items[1:] if isinstance(form, SList) else ()


def _tag_of(value: Value) -> str:
    if not isinstance(value, VTag):
        msg = f"expected a tag, got {show_value(value)}"
        raise ElaborationError((), msg)
    return value.name


def _insert_parts(form: SExpr, terms: Terms) -> tuple[str, SExpr]:
    match form:
        case SList(items=(Atom(text="insert"), x, s)):
            return terms.name(x), s
    raise terms.error(form, "(insert NAME SET)")


def _single_field_set(s: SetCode | None, value: Value) -> SetCode | None:
    if not isinstance(s, MuSet) or not isinstance(value, VIn):
        return None
    try:
        _, fields = destruct(s.family, s.index, value.payload)
    except OrnateError:
        return None
    if len(fields) != 1:
        return None
    field = fields[0]
    return MuSet(s.family, field.index) if field.index is not None else field.set


def _force_nodes(family: DescFun) -> None:
    """Force the nodes of a new family at a few small indices."""
    for index in enumerate_set(family.index_set, FORCE_DEPTH):
        enumerate_set(MuSet(family, index), FORCE_DEPTH)


# declarations


def _data(decl: DataDecl, env: Env) -> DescFun:
    terms = Terms(env, (decl.name,))
    for param in decl.params:
        if param not in env.params:
            raise ElaborationError((decl.name,), f"parameter {param} is not instantiated")
    index_set = terms.set_expr(decl.index.set, {}) if decl.index else UnitSet()

    def at(index: Value) -> Desc:
        scope = terms.bind_index(decl.index, index, index_set)
        alternatives, computed = terms.alternatives(decl.body, scope)
        if computed and len(alternatives) == 1:
            form, inner = alternatives[0]
            return terms.fields(_args(form), inner)
        return terms.tagged_node(alternatives)

    family = DescFun(index_set, at, name=decl.name)
    terms.own[decl.name] = family
    _force_nodes(family)
    return family


def _unit_index(_index: Value) -> Value:
    return UNIT


def _reindexing(decl: OrnDecl, terms: Terms, base: DescFun) -> tuple[Reindexing, bool]:
    if decl.index is None:
        return Reindexing.identity(base.index_set), True
    fine = terms.set_expr(decl.index.set, {})
    clause = decl.index
    if decl.reindex is not None:
        expr = decl.reindex

        def apply(j: Value) -> Value:
            return terms.value(expr, terms.bind_index(clause, j, fine))

        return Reindexing(fine, base.index_set, apply), False
    if fine == base.index_set:
        return Reindexing(fine, base.index_set, _identity), True
    if isinstance(base.index_set, UnitSet):
        return Reindexing(fine, base.index_set, _unit_index), False
    raise terms.error(decl.form, f"a (reindex EXPR) clause from {show_set(fine)}")


def _ornament(decl: OrnDecl, env: Env) -> Ornament:
    terms = Terms(env, (decl.name,))
    base = env.family(decl.base, (decl.name,))
    re, identity = _reindexing(decl, terms, base)
    if identity:
        default_fine: Callable[[Value], Value] | None = _identity
    elif isinstance(re.fine, UnitSet):
        default_fine = _unit_index
    else:
        default_fine = None

    def at(j: Value) -> OrnCode:
        scope = terms.bind_index(decl.index, j, re.fine)
        alternatives, computed = terms.alternatives(decl.body, scope)
        inserts = [a for a in alternatives if _is_insert(a[0])]
        ctors = [a for a in alternatives if not _is_insert(a[0])]
        if any(_is_insert(form) for form, _ in alternatives[len(inserts) :]):
            raise terms.error(ctors[0][0], "insertions before the constructors")
        detag = computed and len(ctors) == 1
        return terms.node_code(inserts, ctors, base.at(re.apply(j)), detag, default_fine, {})

    orn = Ornament(base, re, at, name=decl.name)
    failures = sweep_well_formed(orn, FORCE_DEPTH)
    if failures:
        j, reason = failures[0]
        raise ElaborationError((decl.name,), f"ill-formed at {show_value(j)}: {reason}")
    _force_nodes(interp_orn(orn))
    return orn


def _is_insert(form: SExpr) -> bool:
    return isinstance(form, SList) and form.head == "insert"


def fun_type(form: SExpr, terms: Terms) -> FunType:
    """Elaborate a function type spine, or look up a declared one."""
    match form:
        case Atom(text="end"):
            return End()
        case Atom() if form.is_name:
            return terms.env.fun_type(form.text, terms.path)
        case SList(items=(Atom(text="->" | "*") as head, data, index, rest)):
            family = terms.family(data)
            value = terms.value(index, {})
            if not check_value(family.index_set, value):
                raise terms.error(index, f"an index in {show_set(family.index_set)}")
            node = MuArrow if head.text == "->" else MuTimes
            return node(family, value, fun_type(rest, terms))
    raise terms.error(form, "(-> DATA INDEX REST), (* DATA INDEX REST) or end")


def _fun(decl: FunDecl, env: Env) -> FunDef:
    terms = Terms(env, (decl.name,))
    sig = fun_type(decl.sig, terms)
    args, _ = spine(sig)
    if len(args) != len(decl.params):
        msg = f"{len(decl.params)} parameters for a type with {len(args)} arguments"
        raise ElaborationError((decl.name,), msg)
    fundef = FunDef(decl.name, sig, decl.params, parse_body(decl.body))
    known = {
        name: len(spine(env.function(name).sig)[0]) for name in env.names("function")
    }
    check_fundef(fundef, known)
    return fundef


def _funorn(decl: FunOrnDecl, env: Env) -> NamedFunOrn:
    terms = Terms(env, (decl.name,))
    over = env.fun_type(decl.over, terms.path)
    nodes = list(decl.nodes)

    def build(sig: FunType, k: int) -> FunOrn:
        match sig:
            case End():
                if k != len(nodes):
                    raise terms.error(nodes[k], f"{k} nodes for the type {decl.over}")
                return End()
            case MuArrow(family=family, index=index, rest=rest) | MuTimes(
                family=family, index=index, rest=rest
            ):
                if k >= len(nodes):
                    raise terms.error(decl.form, f"a node for every μ of {decl.over}")
                orn, j = _funorn_node(nodes[k], family, index, terms)
                node = MuArrowOrn if isinstance(sig, MuArrow) else MuTimesOrn
                return node(orn, InvWitness(j, index), build(rest, k + 1))

    orn = build(over, 0)
    slots(over, orn)
    return NamedFunOrn(decl.name, over, orn)


def _funorn_node(
    form: SExpr, family: DescFun, index: Value, terms: Terms
) -> tuple[Ornament, Value]:
    match form:
        case Atom(text="id"):
            return id_orn(family), index
        case Atom() if form.is_name:
            orn = terms.env.ornament(form.text, terms.path)
            if not isinstance(orn.re.fine, UnitSet):
                raise terms.error(form, f"the fine index: ({form.text} INDEX)")
            return orn, UNIT
        case SList(items=(Atom() as name, j)) if name.is_name:
            return terms.env.ornament(name.text, terms.path), terms.value(j, {})
    raise terms.error(form, "id, ORNAMENT or (ORNAMENT INDEX)")


def _lift(decl: LiftDecl, env: Env) -> PatchFn | HoleReport:
    f = env.function(decl.base, (decl.name,))
    named = env.funorn(decl.funorn, (decl.name,))
    if f.sig != named.over:
        msg = f"{decl.base} does not have the type {decl.funorn} ornaments"
        raise ElaborationError((decl.name,), msg)
    return elaborate_script(parse_script(decl.script), (named.over, named.orn, f), decl.name)


def _patched(decl: PatchedDecl, env: Env) -> LiftedFn:
    lifting = env.lifting(decl.lift, (decl.name,))
    if isinstance(lifting, HoleReport):
        msg = f"{decl.lift} still has {len(lifting.holes)} open holes"
        raise ElaborationError((decl.name,), msg)
    return patch(lifting.sig.fun_orn, lifting.sig.base, lifting, name=decl.name)


def elaborate_declaration(decl: Declaration, env: Env) -> Env:
    """Elaborate one declaration, returning the extended environment."""
    logger.debug("elaborating %s %s", decl.keyword, decl.name)
    depends_on = {name for name in atoms(decl.form) if name in env} - {decl.name}
    try:
        match decl:
            case DataDecl():
                entity = _data(decl, env)
            case OrnDecl():
                entity = _ornament(decl, env)
            case ReornDecl():
                entity = reornament(env.ornament(decl.of, (decl.name,)))
            case AlgDecl():
                family = env.family(decl.of, (decl.name,))
                entity = algebraic_ornament(family, env.algebra(decl.by, (decl.name,)))
            case TypeDecl():
                entity = NamedType(decl.name, fun_type(decl.spine, Terms(env, (decl.name,))))
            case FunDecl():
                entity = _base_fn(_fun(decl, env), env)
            case FunOrnDecl():
                entity = _funorn(decl, env)
            case LiftDecl():
                entity = _lift(decl, env)
            case PatchedDecl():
                entity = _patched(decl, env)
            case _:
                raise ElaborationError((decl.name,), f"cannot elaborate {decl.keyword}")
    except (ElaborationError, ParseError):
        raise
    except OrnateError as err:
        raise ElaborationError((decl.name,), str(err)) from err
    return env.define(decl.name, entity, depends_on)


def _base_fn(fundef: FunDef, env: Env) -> BaseFn:
    def resolve(name: str) -> BaseFn:
        return this if name == fundef.name else env.function(name, (fundef.name,))

    this = base_fn(fundef, resolve)
    return this


def elaborate(source: SourceFile, env: Env) -> Env:
    """
    Elaborate every declaration of ``source`` on top of ``env``.

    Declarations are ordered by what they mention; mutual references between
    distinct declarations are an error.
    """
    decls = declarations(source)
    by_name: dict[str, Declaration] = {}
    for decl in decls:
        if decl.name in by_name or decl.name in env:
            raise ElaborationError((source.name, decl.name), f"{decl.name} is already defined")
        by_name[decl.name] = decl
    position = {name: k for k, name in enumerate(by_name)}
    graph = nx.DiGraph()
    graph.add_nodes_from(by_name)
    for decl in decls:
        graph.add_edges_from(
            (dep, decl.name)
            for dep in set(atoms(decl.form))
            if dep in by_name and dep != decl.name
        )
    if not nx.is_directed_acyclic_graph(graph):
        cycle = " -> ".join(edge[0] for edge in nx.find_cycle(graph))
        raise ElaborationError((source.name,), f"declarations refer to each other: {cycle}")
    for name in nx.lexicographical_topological_sort(graph, key=position.__getitem__):
        env = elaborate_declaration(by_name[name], env)
    return env


def load_text(text: str, env: Env, name: str = "") -> Env:
    """Parse and elaborate source text."""
    return elaborate(parse(text, name), env)
