"""
Base function bodies and their interpreter.

A body is a tree of eliminators (``Case``, ``Ind``, ``Fold``) over named
variables, ending in expressions. The tree is kept after definition: it is
the recursion skeleton lifting scripts are aligned against.

Constructor applications are built against the set expected at their
position, so ``('suc e)`` means whatever ``'suc`` means in the type the
context asks for.
"""

from __future__ import annotations

import dataclasses
import logging
from collections.abc import Callable, Mapping, Sequence
from typing import ClassVar, NoReturn

from typing_extensions import Self

from ornate.core import (
    UNIT,
    Algebra,
    Desc,
    DOne,
    DPi,
    DSigma,
    DVar,
    EnumSet,
    Field,
    MuSet,
    SetCode,
    VIn,
    VPair,
    VTag,
    Value,
    check_value,
    const,
    destruct,
    enumerate_set,
    fold,
    show_set,
    show_value,
)
from ornate.errors import ElaborationError, IllTypedValue, NonEnumerableDomain
from ornate.funorn import BaseFn, FunType, spine

__all__ = [
    "Body",
    "Bound",
    "Branch",
    "Call",
    "Case",
    "Con",
    "Eliminator",
    "Expr",
    "Fold",
    "FunDef",
    "Ih",
    "Ind",
    "Interpreter",
    "Lit",
    "Scope",
    "Values",
    "Var",
    "base_fn",
    "build",
    "check_fundef",
    "fold_algebra",
]

logger = logging.getLogger(__name__)

Results = tuple[Value, ...]


@dataclasses.dataclass(frozen=True)
class Var:
    """A bound name."""

    name: str


@dataclasses.dataclass(frozen=True)
class Lit:
    """A closed value."""

    value: Value


@dataclasses.dataclass(frozen=True)
class Con:
    """Constructor application ``('tag args...)``."""

    tag: str
    args: tuple[Expr, ...] = ()


@dataclasses.dataclass(frozen=True)
class Call:
    """Call of a named function returning one result."""

    fn: str
    args: tuple[Expr, ...]


@dataclasses.dataclass(frozen=True)
class Ih:
    """The induction hypothesis for a recursive field of the enclosing ``Ind``."""

    var: str


@dataclasses.dataclass(frozen=True)
class Values:
    """Several results at once."""

    items: tuple[Expr, ...]


Expr = Var | Lit | Con | Call | Ih | Values


@dataclasses.dataclass(frozen=True)
class Branch:
    """``('tag binders...) body``; ``tag`` is ``None`` for untagged nodes."""

    tag: str | None
    binders: tuple[str, ...]
    body: Body


@dataclasses.dataclass(frozen=True)
class Eliminator:
    """Eliminate the variable ``scrutinee`` by cases on its constructor."""

    kind: ClassVar[str] = ""

    scrutinee: str
    branches: tuple[Branch, ...]

    def branch_for(self: Self, tag: str | None) -> Branch:
        """The branch handling constructor ``tag``."""
        for branch in self.branches:
            if branch.tag == tag or branch.tag is None:
                return branch
        msg = f"no branch for '{tag} in {self.kind} {self.scrutinee}"
        raise IllTypedValue(msg)


@dataclasses.dataclass(frozen=True)
class Case(Eliminator):
    """Case analysis."""

    kind = "case"


@dataclasses.dataclass(frozen=True)
class Ind(Eliminator):
    """Case analysis with hypotheses for the recursive fields."""

    kind = "ind"


@dataclasses.dataclass(frozen=True)
class Fold(Eliminator):
    """A fold: recursive fields are bound to their results."""

    kind = "fold"


Body = Case | Ind | Fold | Var | Lit | Con | Call | Ih | Values


@dataclasses.dataclass(frozen=True)
class FunDef:
    """A named function definition: its type, parameter names and body."""

    name: str
    sig: FunType
    params: tuple[str, ...]
    body: Body


@dataclasses.dataclass(frozen=True)
class Bound:
    """A value in scope with its set, when known."""

    value: Value
    set: SetCode | None = None


Scope = Mapping[str, Bound]
Resolver = Callable[[str], BaseFn]


def _single(results: Results, what: str) -> Value:
    if len(results) != 1:
        msg = f"{what} returns {len(results)} results where one is expected"
        raise IllTypedValue(msg)
    return results[0]


def build[T](
    tag: str,
    args: Sequence[T],
    expected: SetCode | None,
    evaluate: Callable[[T, SetCode | None], Value],
) -> Value:
    """
    Build constructor ``tag`` of ``expected`` from its field arguments.

    ``evaluate(arg, set)`` produces each field at the set the description
    demands, so later fields may depend on earlier ones.
    """
    if not isinstance(expected, MuSet):
        what = show_set(expected) if expected is not None else "an unknown set"
        msg = f"cannot build '{tag} in {what}"
        raise IllTypedValue(msg)
    family, index = expected.family, expected.index
    d = family.at(index)
    head: Value | None = None
    if isinstance(d, DSigma) and d.choice and isinstance(d.dom, EnumSet):
        if tag not in d.dom.tags:
            msg = f"'{tag} is not a constructor of {show_set(expected)}"
            raise IllTypedValue(msg)
        head, d = VTag(tag), d.fam(VTag(tag))
    remaining = list(args)

    def take(s: SetCode | None) -> Value:
        if not remaining:
            msg = f"too few fields for '{tag}"
            raise IllTypedValue(msg)
        return evaluate(remaining.pop(0), s)

    def fill(node: Desc) -> Value:
        match node:
            case DOne():
                return UNIT
            case DVar(index=sub):
                return take(MuSet(family, sub))
            case DPi():
                return take(None)
            case DSigma(dom=dom, fam=fam):
                first = take(dom)
                return VPair(first, fill(fam(first)))
        msg = f"not a description: {node!r}"
        raise IllTypedValue(msg)

    body = fill(d)
    if remaining:
        msg = f"too many fields for '{tag}"
        raise IllTypedValue(msg)
    return VIn(VPair(head, body) if head is not None else body)


@dataclasses.dataclass(frozen=True)
class Interpreter:
    """Run a ``FunDef``; other functions are found through ``resolve``."""

    fundef: FunDef
    resolve: Resolver

    def __call__(self: Self, *args: Value) -> Results:
        """Apply the definition to one value per arrow."""
        arg_sets, result_sets = spine(self.fundef.sig)
        if len(args) != len(arg_sets):
            msg = f"{self.fundef.name} takes {len(arg_sets)} arguments, got {len(args)}"
            raise IllTypedValue(msg, where="arguments")
        for s, v in zip(arg_sets, args, strict=True):
            if not check_value(s, v):
                msg = f"{show_value(v)} is not in {show_set(s)}"
                raise IllTypedValue(msg, where="arguments")
        scope = {
            name: Bound(v, s)
            for name, v, s in zip(self.fundef.params, args, arg_sets, strict=True)
        }
        return self.results(self.fundef.body, scope, {}, tuple(result_sets))

    def results(
        self: Self,
        body: Body,
        scope: Scope,
        ihs: Mapping[str, Callable[[], Results]],
        result_sets: tuple[SetCode, ...],
    ) -> Results:
        """Evaluate a body to its result tuple."""
        match body:
            case Fold():
                if len(result_sets) != 1:
                    msg = "a fold computes exactly one result"
                    raise IllTypedValue(msg)
                mu = _scrutinee(body, scope)
                alg = self.fold_algebra(body, scope, result_sets[0])
                return (fold(mu.family, alg, mu.index, scope[body.scrutinee].value),)
            case Case() | Ind():
                tag, fields, _ = self.open(body, scope)
                branch = body.branch_for(tag)
                inner = dict(scope)
                inner_ihs = dict(ihs)
                for name, field in zip(branch.binders, fields, strict=True):
                    inner[name] = Bound(field.value, field.set)
                    if isinstance(body, Ind) and field.recursive:
                        inner_ihs[name] = self._hypothesis(
                            body, scope, ihs, result_sets, name, field.value, field.set
                        )
                return self.results(branch.body, inner, inner_ihs, result_sets)
            case Values(items=items):
                if len(items) != len(result_sets):
                    msg = f"{len(items)} results where the type has {len(result_sets)}"
                    raise IllTypedValue(msg)
                return tuple(
                    self.expr(e, scope, ihs, s) for e, s in zip(items, result_sets, strict=True)
                )
        if len(result_sets) != 1:
            msg = f"one result where the type has {len(result_sets)}"
            raise IllTypedValue(msg)
        return (self.expr(body, scope, ihs, result_sets[0]),)

    def _hypothesis(
        self: Self,
        node: Ind,
        scope: Scope,
        ihs: Mapping[str, Callable[[], Results]],
        result_sets: tuple[SetCode, ...],
        name: str,
        value: Value,
        field_set: SetCode | None,
    ) -> Callable[[], Results]:
        def hypothesis() -> Results:
            again = {**scope, node.scrutinee: Bound(value, field_set)}
            logger.debug("%s: hypothesis for %s", self.fundef.name, name)
            return self.results(node, again, ihs, result_sets)

        return hypothesis

    def open(self: Self, node: Eliminator, scope: Scope) -> tuple[str | None, list[Field], MuSet]:
        """Destruct the scrutinee of ``node`` into its tag and fields."""
        mu = _scrutinee(node, scope)
        value = scope[node.scrutinee].value
        if not isinstance(value, VIn):
            msg = f"{node.scrutinee} = {show_value(value)} is not an inductive value"
            raise IllTypedValue(msg)
        tag, fields = destruct(mu.family, mu.index, value.payload)
        branch = node.branch_for(tag)
        if len(branch.binders) != len(fields):
            msg = f"'{tag} has {len(fields)} fields, branch binds {len(branch.binders)}"
            raise IllTypedValue(msg)
        return tag, fields, mu

    def fold_algebra(self: Self, node: Fold, scope: Scope, carrier: SetCode) -> Algebra:
        """The algebra a ``Fold`` node folds with, closed over ``scope``."""
        mu = _scrutinee(node, scope)

        def step(i: Value, payload: Value) -> Value:
            tag, fields = destruct(mu.family, i, payload)
            branch = node.branch_for(tag)
            inner = dict(scope)
            for name, field in zip(branch.binders, fields, strict=True):
                inner[name] = Bound(field.value, carrier if field.recursive else field.set)
            return _single(self.results(branch.body, inner, {}, (carrier,)), "fold branch")

        return Algebra(const(carrier), step, name=self.fundef.name)

    def expr(
        self: Self,
        e: Expr | Body,
        scope: Scope,
        ihs: Mapping[str, Callable[[], Results]],
        expected: SetCode | None,
    ) -> Value:
        """Evaluate an expression to one value, checked against ``expected``."""
        match e:
            case Var(name=name):
                if name not in scope:
                    msg = f"unbound variable {name}"
                    raise IllTypedValue(msg)
                value = scope[name].value
            case Lit(value=value):
                pass
            case Con(tag=tag, args=args):
                return build(tag, args, expected, lambda a, s: self.expr(a, scope, ihs, s))
            case Call(fn=fn, args=args):
                callee = self.resolve(fn)
                arg_sets, _ = spine(callee.sig)
                if len(args) != len(arg_sets):
                    msg = f"{fn} takes {len(arg_sets)} arguments, got {len(args)}"
                    raise IllTypedValue(msg, where="arguments")
                values = [
                    self.expr(a, scope, ihs, s) for a, s in zip(args, arg_sets, strict=True)
                ]
                value = _single(callee(*values), fn)
            case Ih(var=var):
                if var not in ihs:
                    msg = f"no induction hypothesis for {var}"
                    raise IllTypedValue(msg)
                value = _single(ihs[var](), f"ih {var}")
            case _:
                msg = f"not an expression here: {type(e).__name__}"
                raise IllTypedValue(msg)
        if expected is not None and not check_value(expected, value):
            msg = f"{show_value(value)} is not in {show_set(expected)}"
            raise IllTypedValue(msg)
        return value


def _scrutinee(node: Eliminator, scope: Scope) -> MuSet:
    if node.scrutinee not in scope:
        msg = f"unbound variable {node.scrutinee}"
        raise IllTypedValue(msg)
    s = scope[node.scrutinee].set
    if not isinstance(s, MuSet):
        msg = f"cannot {node.kind} on {node.scrutinee}: not an inductive value"
        raise IllTypedValue(msg)
    return s


def base_fn(fundef: FunDef, resolve: Resolver) -> BaseFn:
    """Wrap a definition as a ``BaseFn`` that remembers its skeleton."""
    return BaseFn(fundef.sig, Interpreter(fundef, resolve), name=fundef.name, skeleton=fundef)


def fold_algebra(fundef: FunDef) -> Algebra:
    """The algebra of a one-argument, one-result function defined by ``fold``."""
    arg_sets, result_sets = spine(fundef.sig)
    body = fundef.body
    if not (
        isinstance(body, Fold)
        and len(arg_sets) == 1
        and len(result_sets) == 1
        and body.scrutinee == fundef.params[0]
    ):
        raise ElaborationError(
            (fundef.name,), "only a one-argument fold over its parameter defines an algebra"
        )
    interpreter = Interpreter(fundef, _no_calls)
    scope = {fundef.params[0]: Bound(UNIT, arg_sets[0])}
    return interpreter.fold_algebra(body, scope, result_sets[0])


def _no_calls(name: str) -> BaseFn:
    msg = f"algebra bodies cannot call {name}"
    raise IllTypedValue(msg)


# static checks


def check_fundef(fundef: FunDef, known: Mapping[str, int]) -> None:
    """
    Check names, hypotheses and structural recursion of a definition.

    ``known`` maps every callable function name to its argument count. A call
    of the function itself must pass, at some parameter position, a recursive
    field obtained by eliminating that parameter. Only recursive fields carry
    an induction hypothesis.
    """
    arg_sets, _ = spine(fundef.sig)
    sets = dict(zip(fundef.params, arg_sets, strict=False))
    _Checker(fundef, known).body(
        fundef.body, {p: None for p in fundef.params}, sets, frozenset(), (fundef.name,)
    )


def _branch_fields(s: SetCode | None, tag: str | None, count: int) -> list[Field] | None:
    """The sets of a branch's fields, or ``None`` when they are not known statically."""
    if not isinstance(s, MuSet):
        return None
    try:
        d = s.family.at(s.index)
        if isinstance(d, DSigma) and d.choice:
            if tag is None or not isinstance(d.dom, EnumSet) or tag not in d.dom.tags:
                return None
            d = d.fam(VTag(tag))
        fields: list[Field] = []
        while isinstance(d, DSigma):
            sample = enumerate_set(d.dom, 1)
            if not sample:
                return None
            fields.append(Field(sample[0], d.dom))
            d = d.fam(sample[0])
        match d:
            case DVar(index=index):
                fields.append(Field(UNIT, MuSet(s.family, index), index))
            case DPi():
                fields.append(Field(UNIT))
    except (IllTypedValue, NonEnumerableDomain):
        return None
    return fields if len(fields) == count else None


@dataclasses.dataclass
class _Checker:
    fundef: FunDef
    known: Mapping[str, int]

    def fail(self: Self, path: tuple[str, ...], reason: str) -> NoReturn:
        raise ElaborationError(path, reason)

    def body(
        self: Self,
        node: Body,
        below: Mapping[str, str | None],
        sets: Mapping[str, SetCode | None],
        ihs: frozenset[str],
        path: tuple[str, ...],
    ) -> None:
        # below[v] names the parameter v is structurally smaller than
        match node:
            case Case() | Ind() | Fold():
                if node.scrutinee not in below:
                    self.fail(path, f"unbound variable {node.scrutinee}")
                root = below[node.scrutinee] or (
                    node.scrutinee if node.scrutinee in self.fundef.params else None
                )
                tags = [b.tag for b in node.branches]
                if len(set(tags)) != len(tags):
                    self.fail(path, f"duplicate branches in {node.kind} {node.scrutinee}")
                for branch in node.branches:
                    fields = _branch_fields(
                        sets.get(node.scrutinee), branch.tag, len(branch.binders)
                    )
                    if fields is None:
                        recursive = set(branch.binders)
                        inner_sets = {**sets, **dict.fromkeys(branch.binders)}
                    else:
                        pairs = list(zip(branch.binders, fields, strict=True))
                        recursive = {b for b, f in pairs if f.recursive}
                        # a fold binds the folded result, not the sub-term
                        inner_sets = {
                            **sets,
                            **{
                                b: None if isinstance(node, Fold) and f.recursive else f.set
                                for b, f in pairs
                            },
                        }
                    inner = {
                        **below,
                        **{b: root if b in recursive else None for b in branch.binders},
                    }
                    inner_ihs = ihs | recursive if isinstance(node, Ind) else ihs
                    self.body(
                        branch.body,
                        inner,
                        inner_sets,
                        inner_ihs,
                        (*path, f"'{branch.tag or '_'}"),
                    )
            case Values(items=items):
                for item in items:
                    self.body(item, below, sets, ihs, path)
            case Var(name=name):
                if name not in below:
                    self.fail(path, f"unbound variable {name}")
            case Lit():
                pass
            case Con(args=args):
                for arg in args:
                    self.body(arg, below, sets, ihs, path)
            case Ih(var=var):
                if var not in ihs:
                    self.fail(path, f"no induction hypothesis for {var}")
            case Call(fn=fn, args=args):
                self.call(fn, args, below, path)
                for arg in args:
                    self.body(arg, below, sets, ihs, path)

    def call(
        self: Self,
        fn: str,
        args: tuple[Expr, ...],
        below: Mapping[str, str | None],
        path: tuple[str, ...],
    ) -> None:
        if fn == self.fundef.name:
            arity = len(self.fundef.params)
            decreasing = any(
                isinstance(arg, Var) and below.get(arg.name) == param
                for arg, param in zip(args, self.fundef.params, strict=False)
            )
            if not decreasing:
                self.fail(path, f"recursive call to {fn} is not structural")
        elif fn not in self.known:
            self.fail(path, f"unknown function {fn}")
        else:
            arity = self.known[fn]
        if len(args) != arity:
            self.fail(path, f"{fn} takes {arity} arguments, got {len(args)}")
