"""Test algebraic ornaments and reornaments."""

from __future__ import annotations

from collections.abc import Callable, Iterator

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ornate.algebraic import (
    AlgOrnament,
    Reorn,
    algebraic_ornament,
    assert_recomputation,
    extension,
    extension_bindings,
    forget_reorn,
    recomputation_check,
    remember,
    remember_reorn,
    reorn_children,
    reorn_roundtrip,
    reornament,
)
from ornate.core import (
    UNIT,
    Desc,
    DSigma,
    EnumSet,
    MuSet,
    VPair,
    VTag,
    Value,
    check_value,
    enumerate_set,
    fold,
    nat,
    std,
    to_int,
)
from ornate.errors import IllTypedValue
from ornate.ornament import Ornament, id_orn, interp_orn, orn_forget, ornamental_algebra
from ornate.surface import Env

ListOf = Callable[..., Value]
XY = EnumSet(("x", "y"), name="A")
LISTS = enumerate_set(MuSet(std.list_desc(XY), UNIT), 3)


def _sigmas(d: Desc) -> Iterator[DSigma]:
    # follow the first branch of every Σ down to the end of the node
    while isinstance(d, DSigma):
        yield d
        first = enumerate_set(d.dom, 0)
        if not first:
            return
        d = d.fam(first[0])


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_lists_by_length(n: int) -> None:
    """Indexing lists by their length leaves 2^n lists at n."""
    orn = algebraic_ornament(std.list_desc(XY), std.LENGTH)
    assert len(enumerate_set(MuSet(interp_orn(orn), VPair(UNIT, nat(n))), 3)) == 2**n


def test_list_len_from_surface(env: Env) -> None:
    """The declared algebraic ornament uses the folding body of length."""
    orn = env.ornament("ListLen")
    assert isinstance(orn, AlgOrnament)
    assert len(enumerate_set(MuSet(interp_orn(orn), VPair(UNIT, nat(2))), 3)) == 4


def test_remember_then_forget() -> None:
    """Remembering files a list under its length; forgetting gets it back."""
    family = std.list_desc(XY)
    orn = algebraic_ornament(family, std.LENGTH)
    for t in LISTS:
        x = fold(family, std.LENGTH, UNIT, t)
        t_alpha = remember(family, std.LENGTH, UNIT, t)
        assert check_value(MuSet(interp_orn(orn), VPair(UNIT, x)), t_alpha)
        assert orn_forget(orn, VPair(UNIT, x), t_alpha) == t
        assert assert_recomputation(orn, VPair(UNIT, x), t_alpha)


def test_recomputation_of_prelude(env: Env) -> None:
    """Every derived ornament of the prelude recomputes its index."""
    derived = {
        name: orn
        for name in env.names("ornament")
        if isinstance(orn := env.ornament(name), AlgOrnament | Reorn)
    }
    assert set(derived) >= {"ListLen", "FinA", "IMaybe", "Vector"}
    for orn in derived.values():
        report = recomputation_check(orn, 3)
        assert report.passed, report.render(quiet=True)
        assert report.records


def test_recomputation_rejects_foreign_values(env: Env) -> None:
    """The inhabitant must be at the claimed index."""
    orn = env.ornament("ListLen")
    t_alpha = remember(env.family("List"), env.algebra("length"), UNIT, nat(0))
    with pytest.raises(IllTypedValue):
        assert_recomputation(orn, VPair(UNIT, nat(1)), t_alpha)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_reornament_fibers(list_orn: Ornament, n: int) -> None:
    """One inhabitant per list of length n; one per natural for the identity."""
    reorn = interp_orn(reornament(list_orn))
    assert len(enumerate_set(MuSet(reorn, VPair(UNIT, nat(n))), 3)) == 2**n
    nats = interp_orn(reornament(id_orn(std.NAT)))
    assert len(enumerate_set(MuSet(nats, VPair(UNIT, nat(n))), 3)) == 1


@pytest.mark.parametrize("n", [0, 1, 2])
def test_reornament_matches_naive(list_orn: Ornament, n: int) -> None:
    """The optimised reornament has as many inhabitants as the plain algebraic one."""
    naive = algebraic_ornament(interp_orn(list_orn), ornamental_algebra(list_orn))
    idx = VPair(UNIT, nat(n))
    optimised = enumerate_set(MuSet(interp_orn(reornament(list_orn)), idx), 4)
    assert len(enumerate_set(MuSet(interp_orn(naive), idx), 4)) == len(optimised)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_reornament_is_detagged(list_orn: Ornament, n: int) -> None:
    """No constructor choice and no stored index in the reornament's nodes."""
    family = interp_orn(reornament(list_orn))
    for sigma in _sigmas(family.at(VPair(UNIT, nat(n)))):
        assert not sigma.choice
        assert not isinstance(sigma.dom, MuSet)
        assert sigma.dom != EnumSet(("0", "suc"))


def test_remember_and_forget_reorn(list_orn: Ornament, listof: ListOf) -> None:
    """A list splits into its length and the elements over it."""
    xs = listof("x", "y")
    t, t_pp = remember_reorn(list_orn, UNIT, xs)
    assert to_int(t) == 2
    assert forget_reorn(list_orn, VPair(UNIT, t), t_pp) == xs
    ((j, sub, _),) = reorn_children(list_orn, UNIT, t, t_pp)
    assert j == UNIT
    assert to_int(sub) == 1
    with pytest.raises(IllTypedValue):
        remember_reorn(list_orn, UNIT, nat(1))


def test_extension(list_orn: Ornament) -> None:
    """A successor node of the naturals needs one element."""
    payload = VPair(VTag("suc"), nat(0))
    ext = extension(list_orn.at(UNIT), list_orn.base_at(UNIT), payload)
    assert check_value(ext, VPair(VTag("x"), UNIT))
    assert not check_value(ext, UNIT)
    bindings = extension_bindings(
        list_orn.at(UNIT), list_orn.base_at(UNIT), payload, VPair(VTag("y"), UNIT)
    )
    assert bindings == [("a", VTag("y"))]


@pytest.mark.parametrize("name", ["List", "Maybe"])
def test_roundtrip_prelude(env: Env, name: str) -> None:
    """Remember and forget are inverse on every small fiber."""
    report = reorn_roundtrip(env.ornament(name), 3)
    assert report.passed, report.render(quiet=True)
    assert {record.note for record in report.records} == {
        "forget ∘ remember",
        "remember ∘ forget",
    }


def test_roundtrip_identity() -> None:
    """The identity ornament of the naturals."""
    assert reorn_roundtrip(id_orn(std.NAT), 3).passed


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(LISTS))
def test_reorn_roundtrip_sampled(t_plus: Value) -> None:
    """Splitting a hand-coded list and putting it back."""
    list_orn = id_orn(std.list_desc(XY))
    t, t_pp = remember_reorn(list_orn, UNIT, t_plus)
    assert t == t_plus
    assert forget_reorn(list_orn, VPair(UNIT, t), t_pp) == t_plus
