"""Test the set/value kernel."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ornate.core import (
    UNIT,
    ZERO,
    EmptySet,
    EnumSet,
    EqSet,
    MuSet,
    PiSet,
    UnitSet,
    VFun,
    VIn,
    VPair,
    VRefl,
    VTag,
    case_analysis,
    check_payload,
    check_value,
    const,
    construct,
    destruct,
    enumerate_set,
    equal_value,
    fold,
    height,
    induction,
    nat,
    payload_set,
    show_value,
    std,
    to_int,
)
from ornate.errors import IllFormedSet, IllTypedValue, NonEnumerableDomain

AB = EnumSet(("a", "b"))
XY = EnumSet(("x", "y"))
LISTS = enumerate_set(MuSet(std.list_desc(XY), UNIT), 3)


def test_check_value_basics() -> None:
    """Membership in the small sets."""
    assert check_value(UnitSet(), UNIT)
    assert not check_value(EmptySet(), UNIT)
    assert check_value(AB, VTag("b"))
    assert not check_value(AB, VTag("c"))
    assert not check_value(EqSet(AB, VTag("a"), VTag("b")), VRefl())
    assert check_value(EqSet(AB, VTag("a"), VTag("a")), VRefl())
    assert check_value(std.NAT_SET, ZERO)
    assert check_value(std.NAT_SET, nat(4))
    assert not check_value(std.NAT_SET, VIn(VPair(VTag("suc"), UNIT)))


def test_check_payload() -> None:
    """Payload checks defer recursive positions to the given predicate."""
    d = std.NAT.at(UNIT)
    nat_check = lambda i, v: check_value(MuSet(std.NAT, i), v)  # noqa: E731
    assert check_payload(d, nat_check, VPair(VTag("suc"), ZERO))
    assert check_payload(d, nat_check, VPair(VTag("0"), UNIT))
    assert not check_payload(d, lambda _i, _v: False, VPair(VTag("suc"), ZERO))


def test_ill_formed_sets() -> None:
    """Codes breaking their invariants are rejected."""
    with pytest.raises(IllFormedSet):
        EnumSet(("a", "a"))
    with pytest.raises(IllFormedSet):
        check_value(MuSet(std.NAT, VTag("x")), ZERO)
    with pytest.raises(IllFormedSet):
        check_value(EqSet(AB, VTag("c"), VTag("a")), VRefl())


def test_function_tables() -> None:
    """Tables must list the domain in enumeration order."""
    bools = PiSet(AB, const(std.BOOL_SET))
    table = VFun(((VTag("a"), std.TRUE), (VTag("b"), std.FALSE)))
    assert check_value(bools, table)
    assert not check_value(bools, VFun(((VTag("b"), std.FALSE), (VTag("a"), std.TRUE))))
    assert not check_value(bools, VFun(((VTag("a"), std.TRUE),)))
    assert table(VTag("a")) == std.TRUE


def test_non_enumerable_domain() -> None:
    """Functions over the naturals cannot be checked or enumerated."""
    with pytest.raises(NonEnumerableDomain):
        check_value(PiSet(std.NAT_SET, const(UnitSet())), VFun(()))
    with pytest.raises(NonEnumerableDomain):
        enumerate_set(PiSet(std.NAT_SET, const(UnitSet())), 2)


@pytest.mark.parametrize(("depth", "count"), [(0, 1), (1, 3), (2, 7), (3, 15)])
def test_enumerate_lists(depth: int, count: int) -> None:
    """Lists over two elements of length at most the depth."""
    assert len(enumerate_set(MuSet(std.list_desc(XY), UNIT), depth)) == count


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_enumerate_tables(n: int) -> None:
    """Boolean tables over n tags."""
    tags = EnumSet(tuple(f"t{k}" for k in range(n)))
    assert len(enumerate_set(PiSet(tags, const(std.BOOL_SET)), 0)) == 2**n


def test_enumerate_order() -> None:
    """Tags in declaration order, naturals by depth, equations by their sides."""
    assert enumerate_set(XY, 0) == (VTag("x"), VTag("y"))
    assert [to_int(v) for v in enumerate_set(std.NAT_SET, 3)] == [0, 1, 2, 3]
    assert enumerate_set(EqSet(std.NAT_SET, nat(2), nat(2)), 0) == (VRefl(),)
    assert enumerate_set(EqSet(std.NAT_SET, nat(2), nat(3)), 0) == ()
    assert enumerate_set(EmptySet(), 5) == ()
    with pytest.raises(ValueError, match="non-negative"):
        enumerate_set(UnitSet(), -1)


def test_enumeration_sound_and_complete() -> None:
    """Every enumerated value checks and hand-built values show up."""
    assert all(check_value(MuSet(std.list_desc(XY), UNIT), v) for v in LISTS)
    assert all(height(v) <= 3 for v in LISTS)
    built = construct(
        std.list_desc(XY),
        UNIT,
        "suc",
        [VTag("y"), construct(std.list_desc(XY), UNIT, "0", [])],
    )
    assert built in LISTS
    assert len(set(LISTS)) == len(LISTS)


def test_fold() -> None:
    """Folds of the reference algebras."""
    assert fold(std.NAT, std.IS_SUC, UNIT, nat(0)) == std.FALSE
    assert fold(std.NAT, std.IS_SUC, UNIT, nat(2)) == std.TRUE
    abc = EnumSet(("a", "b", "c"))
    xs = ZERO
    for t in ("c", "b", "a"):
        xs = VIn(VPair(VTag("suc"), VPair(VTag(t), xs)))
    assert to_int(fold(std.list_desc(abc), std.LENGTH, UNIT, xs)) == 3
    with pytest.raises(IllTypedValue):
        fold(std.NAT, std.IS_SUC, UNIT, VTag("x"))


def test_fold_agrees_with_case_analysis() -> None:
    """The fold of isSuc only looks at the outer constructor."""
    for n in enumerate_set(std.NAT_SET, 4):
        head = case_analysis(std.NAT, lambda _i, payload: payload.fst.name, UNIT, n)
        expected = std.FALSE if head == "0" else std.TRUE
        assert fold(std.NAT, std.IS_SUC, UNIT, n) == expected


def test_induction() -> None:
    """Rebuilding is the identity; adding by induction on the first argument."""
    rebuild = lambda _i, _payload, sub: VIn(sub)  # noqa: E731
    assert induction(std.NAT, rebuild, UNIT, nat(3)) == nat(3)

    def plus_three(_i: object, payload: VPair, sub: VPair) -> object:
        return nat(3) if payload.fst == VTag("0") else VIn(sub)

    assert to_int(induction(std.NAT, plus_three, UNIT, nat(2))) == 5
    branches = {"0": "a", "suc": "b"}
    pick = lambda _i, payload: branches[payload.fst.name]  # noqa: E731
    assert case_analysis(std.NAT, pick, UNIT, nat(1)) == "b"


def test_construct_and_destruct() -> None:
    """Constructor payloads are built and split along the description."""
    lists = std.list_desc(XY)
    one = construct(lists, UNIT, "suc", [VTag("x"), ZERO])
    tag, fields = destruct(lists, UNIT, one.payload)
    assert tag == "suc"
    assert [f.value for f in fields] == [VTag("x"), ZERO]
    assert [f.recursive for f in fields] == [False, True]
    with pytest.raises(IllTypedValue, match="unknown constructor"):
        construct(lists, UNIT, "cons", [])
    with pytest.raises(IllTypedValue, match="too few"):
        construct(lists, UNIT, "suc", [VTag("x")])


def test_payload_set() -> None:
    """The payload of a natural is a tag paired with the rest."""
    s = payload_set(std.NAT.at(UNIT), const(std.NAT_SET))
    assert check_value(s, VPair(VTag("suc"), nat(1)))
    assert check_value(s, VPair(VTag("0"), UNIT))
    assert not check_value(s, VPair(VTag("0"), nat(1)))


def test_show_value() -> None:
    """Naturals print as numerals and tagged nodes with their payload."""
    assert show_value(nat(3)) == "3"
    assert show_value(std.TRUE) == "('true)"
    assert show_value(VFun(((VTag("a"), UNIT),))) == "(fun ('a unit))"
    assert show_value(VPair(VRefl(), UNIT)) == "(pair refl unit)"


def test_equality_is_an_equivalence() -> None:
    """Reflexive, symmetric and transitive on every pair of small lists."""
    s = MuSet(std.list_desc(XY), UNIT)
    small = enumerate_set(s, 2)
    for a, b in itertools.product(small, repeat=2):
        assert equal_value(s, a, b) == (a == b)
        assert equal_value(s, a, b) == equal_value(s, b, a)


@settings(max_examples=60, deadline=None)
@given(
    st.sampled_from(LISTS),
    st.sampled_from(LISTS),
    st.sampled_from(LISTS),
)
def test_equality_transitive(a: VIn, b: VIn, c: VIn) -> None:
    """Equal values chain."""
    s = MuSet(std.list_desc(XY), UNIT)
    assert equal_value(s, a, a)
    if equal_value(s, a, b) and equal_value(s, b, c):
        assert equal_value(s, a, c)
