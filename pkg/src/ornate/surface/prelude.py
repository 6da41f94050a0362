"""
The standard environment.

``prelude()`` elaborates the packaged ``prelude.orn`` on top of the host
algebra ``below`` and adds ``vlookup`` and ``vlookupFin``, which are derived
from ``ilookup`` through the adjunction rather than written in the surface
language.
"""

from __future__ import annotations

import functools
import importlib.resources
import logging
from collections.abc import Callable, Mapping

from ornate.adjoint import IndexedFnLeft, rl_adjoint
from ornate.algebraic import forget_reorn, remember, remember_reorn, reornament
from ornate.core import UNIT, MuSet, SetCode, VIn, VPair, Value, destruct, show_value
from ornate.core.std import BELOW, TRUE
from ornate.errors import ElaborationError, IndexMismatch
from ornate.funorn import slots
from ornate.lift import HoleReport
from ornate.ornament import interp_orn
from ornate.surface.elaborate import elaborate
from ornate.surface.env import DEFAULT_PARAMS, Env, HostFn
from ornate.surface.sexpr import parse

__all__ = ["PRELUDE_FILE", "prelude", "prelude_text", "vlookup", "vlookup_fin"]

logger = logging.getLogger(__name__)

PRELUDE_FILE = "prelude.orn"


def prelude_text() -> str:
    """The source of the prelude."""
    return importlib.resources.files("ornate.surface").joinpath(PRELUDE_FILE).read_text("utf-8")


def prelude(params: Mapping[str, SetCode] | None = None) -> Env:
    """
    The prelude elaborated under ``params``.

    Parameters not given keep their default instantiation. Results are cached
    per instantiation.
    """
    merged = {**DEFAULT_PARAMS, **(params or {})}
    return _prelude(tuple(sorted(merged.items(), key=lambda item: item[0])))


@functools.cache
def _prelude(params: tuple[tuple[str, SetCode], ...]) -> Env:
    logger.debug("elaborating the prelude for %s", [name for name, _ in params])
    env = Env(dict(params)).define("below", BELOW)
    env = elaborate(parse(prelude_text(), PRELUDE_FILE), env)
    uses = ["ilookup", "NatBelow", "Maybe", "List"]
    env = env.define("vlookup", vlookup(env), uses)
    return env.define("vlookupFin", vlookup_fin(env), uses)


def vlookup(env: Env) -> HostFn:
    """
    Look up a position in a list, the position being bounded by the length.

    Takes a natural ``k`` and a list. The position is remembered in ``FinA``
    at the list's length, so a position past the end is rejected before
    ``ilookup`` runs. Returns the element.
    """
    lookup = _bounded_lookup(env)
    list_orn = env.ornament("List")
    family = env.family("NatBelow")

    def run(k: Value, vs: Value) -> tuple[Value]:
        n, _ = remember_reorn(list_orn, UNIT, vs)
        return (lookup(remember(family, BELOW, n, k), vs),)

    return HostFn("vlookup", 2, run)


def vlookup_fin(env: Env) -> HostFn:
    """
    Look up a ``FinA`` position in a list.

    The position must be an inhabitant of ``FinA`` at ``(n, 'true)`` where
    ``n`` is the length of the list.
    """
    lookup = _bounded_lookup(env)
    return HostFn("vlookupFin", 2, lambda fin, vs: (lookup(fin, vs),))


def _bounded_lookup(env: Env) -> Callable[[Value, Value], Value]:
    # the right adjoint of ilookup, taken at the list's length
    lifting = env.lifting("ilookup", ("vlookup",))
    if isinstance(lifting, HoleReport):
        raise ElaborationError(("vlookup",), "ilookup still has open holes")
    list_orn = env.ornament("List")
    maybe = env.ornament("Maybe")
    family = env.family("NatBelow")
    (position, _), _ = slots(lifting.sig.fun_type, lifting.sig.fun_orn)
    options = interp_orn(reornament(maybe))

    def lookup_below(n: Value, vs_pp: Value) -> IndexedFnLeft:
        def f(i: Value, m: Value) -> Value:
            if i != n:
                msg = f"bound {show_value(i)} is not the length {show_value(n)}"
                raise IndexMismatch(msg)
            _, m_pp = remember_reorn(position.orn, position.witness.j, m)
            return lifting(m, m_pp, n, vs_pp)[0]

        return IndexedFnLeft(
            family, BELOW, lambda idx: MuSet(options, VPair(UNIT, _snd(idx))), f, name="vlookup"
        )

    def run(fin: Value, vs: Value) -> Value:
        n, vs_pp = remember_reorn(list_orn, UNIT, vs)
        y = rl_adjoint(lookup_below(n, vs_pp))(n, TRUE, fin)
        match forget_reorn(maybe, VPair(UNIT, TRUE), y):
            case VIn(payload):
                _, fields = destruct(interp_orn(maybe), UNIT, payload)
                return fields[0].value
        msg = f"vlookup produced {show_value(y)}"
        raise IndexMismatch(msg)

    return run


def _snd(value: Value) -> Value:
    if not isinstance(value, VPair):
        msg = f"expected an index pair, got {show_value(value)}"
        raise IndexMismatch(msg)
    return value.snd
