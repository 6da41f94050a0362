"""
Trading index-level computation for stronger premises.

A function whose result index is computed by folding ``alg`` over its
argument (``IndexedFnLeft``) corresponds to a function taking the argument
from the algebraic ornament ``D^alg`` at a given result index
(``IndexedFnRight``). ``rl_adjoint`` and ``lr_adjoint`` convert between the
two; transport along the recomputation equation is an index check, the value
itself is unchanged.
"""

from __future__ import annotations

import dataclasses
from collections.abc import Callable

from typing_extensions import Self

from ornate.algebraic import algebraic_ornament, remember
from ornate.core import (
    Algebra,
    DescFun,
    MuSet,
    SetCode,
    VPair,
    Value,
    check_value,
    equal_value,
    fold,
    show_set,
    show_value,
)
from ornate.errors import IllTypedValue, IndexMismatch
from ornate.ornament import interp_orn, orn_forget

__all__ = ["IndexedFnLeft", "IndexedFnRight", "lr_adjoint", "rl_adjoint"]

Target = Callable[[Value], SetCode]


def _check_result(target: Target, idx: Value, y: Value, name: str) -> Value:
    expected = target(idx)
    if not check_value(expected, y):
        msg = f"{name or 'function'} returned {show_value(y)}, not in {show_set(expected)}"
        raise IndexMismatch(msg)
    return y


@dataclasses.dataclass(frozen=True)
class IndexedFnLeft:
    """``f i t : target (i, fold alg t)`` for ``t : μ(family i)``."""

    family: DescFun
    alg: Algebra
    target: Target
    f: Callable[[Value, Value], Value]
    name: str = dataclasses.field(default="", compare=False)

    def __call__(self: Self, i: Value, t: Value) -> Value:
        """Apply, checking the argument and the index of the result."""
        if not check_value(MuSet(self.family, i), t):
            msg = f"{show_value(t)} is not in {self.family.name} at {show_value(i)}"
            raise IllTypedValue(msg, where="arguments")
        x = fold(self.family, self.alg, i, t)
        return _check_result(self.target, VPair(i, x), self.f(i, t), self.name)


@dataclasses.dataclass(frozen=True)
class IndexedFnRight:
    """``g i x tx : target (i, x)`` for ``tx : μ(family^alg (i, x))``."""

    family: DescFun
    alg: Algebra
    target: Target
    g: Callable[[Value, Value, Value], Value]
    name: str = dataclasses.field(default="", compare=False)

    def __call__(self: Self, i: Value, x: Value, tx: Value) -> Value:
        """Apply, checking the argument and the index of the result."""
        orn = algebraic_ornament(self.family, self.alg)
        idx = VPair(i, x)
        if not check_value(MuSet(interp_orn(orn), idx), tx):
            msg = f"{show_value(tx)} is not in {orn.name} at {show_value(idx)}"
            raise IllTypedValue(msg, where="arguments")
        return _check_result(self.target, idx, self.g(i, x, tx), self.name)


def rl_adjoint(f: IndexedFnLeft) -> IndexedFnRight:
    """Take the argument from the algebraic ornament; the index is re-verified."""
    orn = algebraic_ornament(f.family, f.alg)

    def g(i: Value, x: Value, tx: Value) -> Value:
        t = orn_forget(orn, VPair(i, x), tx)
        recomputed = fold(f.family, f.alg, i, t)
        if not equal_value(f.alg.carrier_at(i), recomputed, x):
            msg = f"{show_value(tx)} recomputes {show_value(recomputed)}, not {show_value(x)}"
            raise IndexMismatch(msg)
        return f(i, t)

    return IndexedFnRight(f.family, f.alg, f.target, g, name=f.name)


def lr_adjoint(g: IndexedFnRight) -> IndexedFnLeft:
    """Compute the result index by folding, remembering it in the argument."""

    def f(i: Value, t: Value) -> Value:
        return g(i, fold(g.family, g.alg, i, t), remember(g.family, g.alg, i, t))

    return IndexedFnLeft(g.family, g.alg, g.target, f, name=g.name)
