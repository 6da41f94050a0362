"""Test the standard environment."""

from __future__ import annotations

import pytest

from ornate.core import UNIT, MuSet, VIn, VPair, VTag, enumerate_set, nat, tagged
from ornate.surface import Env, prelude, tag_set


@pytest.mark.parametrize(
    ("name", "kind"),
    [
        ("Nat", "datatype"),
        ("List", "ornament"),
        ("Vector", "ornament"),
        ("ListLen", "ornament"),
        ("below", "algebra"),
        ("natRelation", "type"),
        ("lessThan", "function"),
        ("typeLookup", "functional ornament"),
        ("ilookup", "lifting"),
        ("ihead-goals", "lifting with holes"),
        ("lookup", "lifted function"),
        ("vlookup", "host function"),
        ("vlookupFin", "host function"),
    ],
)
def test_kinds(env: Env, name: str, kind: str) -> None:
    """Every kind of declaration is represented."""
    assert env.kind(name) == kind
    assert name in env.names(kind)


def test_params() -> None:
    """Instantiating ``A`` changes every family built over it."""
    three = prelude({"A": tag_set("A", ["r", "g", "b"])})
    vectors = three.family("VectorD")
    assert len(enumerate_set(MuSet(vectors, nat(2)), 3)) == 9
    lists = three.family("List")
    assert len(enumerate_set(MuSet(lists, UNIT), 2)) == 1 + 3 + 9


def test_cached(env: Env) -> None:
    """The prelude is elaborated once per instantiation."""
    assert prelude() is env
    assert prelude({"A": tag_set("A", ["x", "y"])}) is env
    assert prelude({"A": tag_set("A", ["z"])}) is not env


def test_default_index(env: Env) -> None:
    """Unit-indexed families have an obvious index, the others do not."""
    assert env.default_index(env.family("Nat")) == UNIT
    assert env.default_index(env.family("VectorD")) is None


def test_singleton_params() -> None:
    """A one-element ``A`` still accepts the elements the scripts supply."""
    one = prelude({"A": tag_set("A", ["z"])})
    assert one.kind("ihead") == "lifting"
    zs = VIn(VPair(VTag("suc"), VPair(VTag("z"), nat(0))))
    assert one.applicable("lookup")(nat(0), zs) == (tagged("true", VPair(VTag("z"), UNIT)),)
    assert one.applicable("vlookup")(nat(0), zs) == (VTag("z"),)
