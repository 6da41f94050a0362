"""Test the adjunction between computed result indices and algebraic ornaments."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from ornate.adjoint import IndexedFnLeft, IndexedFnRight, lr_adjoint, rl_adjoint
from ornate.algebraic import algebraic_ornament, remember, reornament
from ornate.core import (
    UNIT,
    ZERO,
    EnumSet,
    MuSet,
    SetCode,
    VIn,
    VPair,
    VTag,
    Value,
    enumerate_set,
    fold,
    nat,
    std,
    to_int,
)
from ornate.errors import IllTypedValue, IndexMismatch
from ornate.ornament import Ornament, interp_orn, orn_forget
from ornate.surface import Env, prelude, tag_set

ListOf = Callable[..., Value]


def items(xs: Value) -> list[Value]:
    """The elements of a list, in order."""
    out: list[Value] = []
    while isinstance(xs, VIn):
        match xs.payload:
            case VPair(fst=VTag("suc"), snd=VPair(fst=a, snd=rest)):
                out.append(a)
                xs = rest
            case _:
                break
    return out


def from_items(values: list[Value]) -> Value:
    """Build a list from its elements."""
    xs: Value = ZERO
    for a in reversed(values):
        xs = VIn(VPair(VTag("suc"), VPair(a, xs)))
    return xs


@pytest.fixture(scope="module")
def reverse(elements: EnumSet) -> IndexedFnLeft:
    """Reverse a list into a vector of the same length."""
    family = std.list_desc(elements)
    vectors = interp_orn(algebraic_ornament(family, std.LENGTH))

    def target(idx: Value) -> SetCode:
        return MuSet(vectors, idx)

    def f(i: Value, t: Value) -> Value:
        return remember(family, std.LENGTH, i, from_items(items(t)[::-1]))

    return IndexedFnLeft(family, std.LENGTH, target, f, name="reverse")


def test_left_checks_the_result_index(reverse: IndexedFnLeft, listof: ListOf) -> None:
    """The result must sit at the index the algebra computes."""
    ys = reverse(UNIT, listof("x", "y", "y"))
    vector = algebraic_ornament(reverse.family, std.LENGTH)
    assert orn_forget(vector, VPair(UNIT, nat(3)), ys) == listof("y", "y", "x")
    dropping = IndexedFnLeft(
        reverse.family,
        reverse.alg,
        reverse.target,
        lambda i, t: remember(reverse.family, std.LENGTH, i, from_items(items(t)[1:])),
    )
    with pytest.raises(IndexMismatch, match="not in"):
        dropping(UNIT, listof("x", "y"))
    with pytest.raises(IllTypedValue):
        reverse(UNIT, nat(2))


def test_round_trips(reverse: IndexedFnLeft) -> None:
    """Both directions agree with the original on every list."""
    right = rl_adjoint(reverse)
    back = lr_adjoint(right)
    for t in enumerate_set(MuSet(reverse.family, UNIT), 4):
        x = fold(reverse.family, reverse.alg, UNIT, t)
        tx = remember(reverse.family, reverse.alg, UNIT, t)
        assert right(UNIT, x, tx) == reverse(UNIT, t)
        assert back(UNIT, t) == reverse(UNIT, t)


def test_right_checks_the_argument_index(reverse: IndexedFnLeft, listof: ListOf) -> None:
    """An argument from the wrong fiber is rejected."""
    tx = remember(reverse.family, reverse.alg, UNIT, listof("x"))
    with pytest.raises(IllTypedValue, match="is not in"):
        rl_adjoint(reverse)(UNIT, nat(2), tx)


def test_vlookup(env: Env, listof: ListOf) -> None:
    """Positions are taken below the length of the list."""
    vlookup = env.applicable("vlookup")
    assert vlookup(nat(1), listof("x", "y", "x")) == (VTag("y"),)
    with pytest.raises(IllTypedValue):
        vlookup(nat(3), listof("x", "y", "x"))


def test_vlookup_against_indexing(env: Env, elements: EnumSet) -> None:
    """Agree with plain indexing on every short list and position."""
    vlookup = env.applicable("vlookup")
    for xs in enumerate_set(MuSet(std.list_desc(elements), UNIT), 4):
        values = items(xs)
        for k in range(len(values) + 1):
            if k < len(values):
                assert vlookup(nat(k), xs) == (values[k],)
            else:
                with pytest.raises(IllTypedValue):
                    vlookup(nat(k), xs)


def test_right_round_trip(reverse: IndexedFnLeft) -> None:
    """A function on the algebraic ornament survives the trip through the left side."""
    family = reverse.family
    vectors = algebraic_ornament(family, std.LENGTH)

    def g(i: Value, x: Value, tx: Value) -> Value:
        t = orn_forget(vectors, VPair(i, x), tx)
        return remember(family, std.LENGTH, i, from_items(items(t)[::-1]))

    right = IndexedFnRight(family, std.LENGTH, reverse.target, g, name="reverse")
    again = rl_adjoint(lr_adjoint(right))
    for n in range(4):
        idx = VPair(UNIT, nat(n))
        for tx in enumerate_set(MuSet(interp_orn(vectors), idx), n + 1):
            assert again(UNIT, nat(n), tx) == right(UNIT, nat(n), tx)


@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_bounded_position_fibers(env: Env, n: int) -> None:
    """The positions accepted by ``below`` at n are the n naturals under it."""
    fin = interp_orn(env.ornament("FinA"))
    positions = enumerate_set(MuSet(fin, VPair(nat(n), std.TRUE)), n + 2)
    assert len(positions) == n
    assert len(enumerate_set(MuSet(fin, VPair(nat(n), std.FALSE)), n + 2)) > 0


def test_vlookup_fin() -> None:
    """The second element of three, reached with a bounded position."""
    three = prelude({"A": tag_set("A", ["x", "y", "z"])})
    vlookup = three.applicable("vlookupFin")
    below = three.family("NatBelow")
    xs = from_items([VTag("x"), VTag("y"), VTag("z")])
    second = remember(below, std.BELOW, nat(3), nat(1))
    assert vlookup(second, xs) == (VTag("y"),)
    first = remember(below, std.BELOW, nat(1), nat(0))
    assert vlookup(first, from_items([VTag("x")])) == (VTag("x"),)
    with pytest.raises(IllTypedValue):
        vlookup(second, from_items([VTag("x")]))


def test_vlookup_fin_against_indexing(env: Env, elements: EnumSet) -> None:
    """Every bounded position of every short list finds the element there."""
    vlookup = env.applicable("vlookupFin")
    fin_orn = env.ornament("FinA")
    lists = enumerate_set(MuSet(std.list_desc(elements), UNIT), 5)
    for n in range(5):
        idx = VPair(nat(n), std.TRUE)
        for fin in enumerate_set(MuSet(interp_orn(fin_orn), idx), n + 2):
            k = to_int(orn_forget(fin_orn, idx, fin))
            for xs in (xs for xs in lists if len(items(xs)) == n):
                assert vlookup(fin, xs) == (items(xs)[k],)


def test_indexed_options(maybe_orn: Ornament, elements: EnumSet) -> None:
    """Options indexed by their truth: one per element when true, one when false."""
    options = interp_orn(reornament(maybe_orn))
    assert len(enumerate_set(MuSet(options, VPair(UNIT, std.TRUE)), 2)) == len(elements.tags)
    assert len(enumerate_set(MuSet(options, VPair(UNIT, std.FALSE)), 2)) == 1
