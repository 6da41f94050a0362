"""Render values, set codes and descriptions in the surface syntax."""

from __future__ import annotations

from collections.abc import Callable

from ornate.core.check import elements, enumerate_set, is_finite
from ornate.core.codes import (
    Desc,
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
from ornate.core.values import VFun, VIn, VPair, VRefl, VTag, VUnit, Value, to_int
from ornate.errors import IllTypedValue, NonEnumerableDomain

__all__ = ["show_desc", "show_set", "show_value"]

# families over more elements than this are printed opaquely
_MAX_BRANCHES = 8
# elements of an infinite domain compared before printing a family as constant
_SAMPLE_DEPTH = 2


def show_value(v: object) -> str:
    """
    Print a value; naturals print as numerals, tagged nodes as ``('t payload)``.

    >>> from ornate.core.values import nat, tagged, VPair, VTag
    >>> show_value(nat(2))
    '2'
    >>> show_value(tagged("suc", VPair(VTag("x"), nat(0))))
    "('suc (pair 'x 0))"
    """
    match v:
        case VUnit():
            return "unit"
        case VRefl():
            return "refl"
        case VTag(name=name):
            return f"'{name}"
        case VPair(fst=fst, snd=snd):
            return f"(pair {show_value(fst)} {show_value(snd)})"
        case VFun(table=table):
            entries = " ".join(f"({show_value(k)} {show_value(r)})" for k, r in table)
            return f"(fun {entries})" if entries else "(fun)"
        case VIn(payload=payload):
            try:
                return str(to_int(v))
            except IllTypedValue:
                pass
            match payload:
                case VPair(VTag(name), VUnit()):
                    return f"('{name})"
                case VPair(VTag(name), rest):
                    return f"('{name} {show_value(rest)})"
            return f"(in {show_value(payload)})"
    return f"<{type(v).__name__}>"


def _branches(dom: SetCode) -> tuple[Value, ...] | None:
    try:
        if not is_finite(dom):
            return None
        keys = elements(dom)
    except NonEnumerableDomain:
        return None
    return keys if len(keys) <= _MAX_BRANCHES else None


def show_set(s: SetCode) -> str:
    """Print a set code; dependent families print by cases when the domain is small."""
    match s:
        case UnitSet():
            return "unit"
        case EmptySet():
            return "empty"
        case EnumSet(tags=tags, name=name):
            return name or "(enum" + "".join(f" {t}" for t in tags) + ")"
        case SigmaSet(first=first, rest=rest):
            return _binder("sigma", first, rest)
        case PiSet(dom=dom, cod=cod):
            return _binder("pi", dom, cod)
        case EqSet(carrier=carrier, lhs=lhs, rhs=rhs):
            return f"(eq {show_set(carrier)} {show_value(lhs)} {show_value(rhs)})"
        case MuSet(family=family, index=index):
            return f"(mu {family.name or '?'} {show_value(index)})"
    return repr(s)


def show_desc(d: Desc) -> str:
    """Print a description node."""
    match d:
        case DVar(index=index):
            return f"(var {show_value(index)})"
        case DOne():
            return "one"
        case DPi(dom=dom, fam=fam):
            return _family("pi", dom, fam, show_desc)
        case DSigma(dom=dom, fam=fam):
            return _family("sigma", dom, fam, show_desc)
    return repr(d)


def _binder(head: str, dom: SetCode, fam: Callable[[Value], SetCode]) -> str:
    # only a family that ignores its argument can be written back as a set expression;
    # over an infinite domain that is judged on its smallest elements
    keys = _branches(dom)
    try:
        sampled = keys is None
        if keys is None:
            keys = enumerate_set(dom, _SAMPLE_DEPTH)[:_MAX_BRANCHES]
        parts = {show_set(fam(k)) for k in keys}
    except (IllTypedValue, NonEnumerableDomain):
        return _family(head, dom, fam, show_set)
    if len(parts) > 1 or (sampled and not parts):
        return _family(head, dom, fam, show_set)
    body = parts.pop() if parts else "unit"
    return f"({head} (x {show_set(dom)}) {body})"


def _family[T](
    head: str, dom: SetCode, fam: Callable[[Value], T], show: Callable[[T], str]
) -> str:
    keys = _branches(dom)
    prefix = f"({head} {show_set(dom)}"
    if keys is None:
        return prefix + " _)"
    parts = [show(fam(k)) for k in keys]
    if not parts:
        return prefix + ")"
    if all(p == parts[0] for p in parts):
        return f"{prefix} {parts[0]})"
    cases = " ".join(f"({show_value(k)} {p})" for k, p in zip(keys, parts, strict=True))
    return f"{prefix} {cases})"
