"""Reading function bodies and lifting scripts into their syntax trees."""

from __future__ import annotations

from ornate.body import Body, Branch, Call, Case, Con, Expr, Fold, Ih, Ind, Lit, Values, Var
from ornate.core import UNIT, VRefl, VTag, nat
from ornate.lift import (
    Hole,
    Item,
    LiftCase,
    LiftConstructor,
    LiftFold,
    LiftInd,
    LiftScript,
    Return,
    ScriptBranch,
    SelfCall,
)
from ornate.surface.sexpr import Atom, SExpr, SList
from ornate.surface.syntax import expect_atom, expect_list, fail

__all__ = ["parse_body", "parse_expr", "parse_script"]

_ELIMINATORS: dict[str, type[Case | Ind | Fold]] = {"case": Case, "ind": Ind, "fold": Fold}
_LIFTS: dict[str, type[LiftCase | LiftInd | LiftFold]] = {
    kind.keyword: kind for kind in (LiftCase, LiftInd, LiftFold)
}


def _branch_tag(form: SExpr) -> str | None:
    match form:
        case Atom(text="_"):
            return None
        case Atom() if form.is_tag:
            return form.tag
    raise fail(form, "a quoted constructor tag or _")


def parse_expr(form: SExpr) -> Expr:
    """
    Read an expression.

    >>> parse_expr(SList((Atom("'suc"), Atom("n"))))
    Con(tag='suc', args=(Var(name='n'),))
    """
    match form:
        case Atom(text="unit"):
            return Lit(UNIT)
        case Atom(text="refl"):
            return Lit(VRefl())
        case Atom() if form.is_tag:
            return Lit(VTag(form.tag))
        case Atom() if form.is_nat:
            return Lit(nat(int(form.text)))
        case Atom() if form.is_name:
            return Var(form.text)
        case SList(items=(Atom(text="call"), fn, *args)):
            return Call(expect_atom(fn, "a function name").text, tuple(map(parse_expr, args)))
        case SList(items=(Atom(text="ih"), var)):
            return Ih(expect_atom(var, "a variable").text)
        case SList(items=(Atom(text="values"), *items)):
            return Values(tuple(map(parse_expr, items)))
        case SList(items=(Atom(text="suc"), arg)):
            return Con("suc", (parse_expr(arg),))
        case SList(items=(Atom() as head, *args)) if head.is_tag:
            return Con(head.tag, tuple(map(parse_expr, args)))
    raise fail(form, "an expression")


def parse_body(form: SExpr) -> Body:
    """Read a function body: eliminators down to expressions."""
    if isinstance(form, SList) and form.head in _ELIMINATORS:
        match form.items:
            case (_, Atom() as scrutinee, *branches) if scrutinee.is_name:
                kind = _ELIMINATORS[form.head]
                return kind(scrutinee.text, tuple(map(_body_branch, branches)))
        raise fail(form, f"({form.head} VAR ('TAG (VARS ...) BODY) ...)")
    return parse_expr(form)


def _body_branch(form: SExpr) -> Branch:
    match form:
        case SList(items=(tag, SList() as binders, body)):
            names = tuple(expect_atom(b, "a pattern variable").text for b in binders.items)
            return Branch(_branch_tag(tag), names, parse_body(body))
    raise fail(form, "a branch ('TAG (VARS ...) BODY)")


def parse_script(form: SExpr) -> LiftScript:
    """Read a lifting script."""
    lst = expect_list(form, "a lifting script")
    match lst.head:
        case head if head in _LIFTS:
            match lst.items:
                case (_, Atom() as scrutinee, *branches) if scrutinee.is_name:
                    kind = _LIFTS[head]
                    return kind(scrutinee.text, tuple(map(_script_branch, branches)))
            raise fail(form, f"({head} VAR ('TAG SCRIPT) ...)")
        case "lift-con":
            return _lift_con(lst)
        case "return":
            return Return(tuple(map(_item, lst.args)))
    raise fail(form, "lift-case, lift-ind, lift-fold, lift-con or return")


def _script_branch(form: SExpr) -> ScriptBranch:
    match form:
        case SList(items=(tag, script)):
            return ScriptBranch(_branch_tag(tag), parse_script(script))
    raise fail(form, "a script branch ('TAG SCRIPT)")


def _lift_con(form: SList) -> LiftConstructor:
    ext: tuple[Expr | Hole, ...] = ()
    rec: tuple[Item, ...] = ()
    for clause in form.args:
        match clause:
            case SList(items=(Atom(text="ext"), *values)) if not ext:
                ext = tuple(Hole() if _is_hole(v) else parse_expr(v) for v in values)
            case SList(items=(Atom(text="rec"), *items)) if not rec:
                rec = tuple(map(_item, items))
            case _:
                raise fail(clause, "(ext VALUE ...) or (rec RESULT ...), each at most once")
    return LiftConstructor(ext, rec)


def _is_hole(form: SExpr) -> bool:
    return isinstance(form, Atom) and form.is_hole


def _item(form: SExpr) -> Item:
    match form:
        case Atom() if form.is_name:
            return Var(form.text)
        case SList(items=(Atom(text="self"), *args)):
            return SelfCall(tuple(expect_atom(a, "an argument name").text for a in args))
        case SList(items=(Atom(text="ih"), var)):
            return Ih(expect_atom(var, "a variable").text)
        case SList(items=(Atom(text="lift-con"), *_)):
            return _lift_con(form)
    raise fail(form, "a result: VAR, VAR++, (self VAR ...), (ih VAR) or (lift-con ...)")
