"""Test ornament codes, their interpretation and the forgetful map."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from ornate.core import (
    UNIT,
    ZERO,
    EnumSet,
    MuSet,
    UnitSet,
    VPair,
    VTag,
    Value,
    by_tag,
    check_value,
    const,
    enumerate_set,
    fold,
    nat,
    std,
    to_int,
)
from ornate.errors import IllFormedOrnament
from ornate.ornament import (
    InvWitness,
    OOne,
    Ornament,
    OSigma,
    OVar,
    Reindexing,
    check_ornament_at,
    id_orn,
    interp_orn,
    orn_forget,
    orn_forget_nat,
    ornamental_algebra,
    sweep_well_formed,
    well_formed_orn,
)
from ornate.surface import Env, prelude, tag_set

ListOf = Callable[..., Value]


def test_prelude_ornaments_well_formed(env: Env) -> None:
    """Every ornament of the prelude fits its base at every small fine index."""
    for name in env.names("ornament"):
        assert sweep_well_formed(env.ornament(name), 2) == [], name


def test_ill_formed_ornament() -> None:
    """Ending a constructor where the base has a tag choice."""
    bad = Ornament(std.NAT, Reindexing.identity(UnitSet()), const(OOne()), name="bad")
    assert not well_formed_orn(bad, UNIT)
    with pytest.raises(IllFormedOrnament, match="OOne cannot ornament DSigma"):
        check_ornament_at(bad, UNIT)


def test_fine_index_outside_j() -> None:
    """A recursive position refined to something that is not a fine index."""
    bad = Ornament(
        std.NAT,
        Reindexing(std.NAT_SET, UnitSet(), const(UNIT)),
        const(OSigma(by_tag({"0": OOne(), "suc": OVar(InvWitness(VTag("x"), UNIT))}))),
    )
    assert well_formed_orn(bad, ZERO) is False
    assert sweep_well_formed(bad, 1)


@pytest.mark.parametrize("depth", [0, 1, 2, 3])
def test_list_is_hand_coded_list(list_orn: Ornament, elements: EnumSet, depth: int) -> None:
    """The ornamented naturals are the hand-coded lists."""
    derived = enumerate_set(MuSet(interp_orn(list_orn), UNIT), depth)
    by_hand = enumerate_set(MuSet(std.list_desc(elements), UNIT), depth)
    assert set(derived) == set(by_hand)
    assert len(derived) == 2 ** (depth + 1) - 1


def test_forget_list(list_orn: Ornament, listof: ListOf) -> None:
    """Forgetting the elements leaves the length."""
    assert to_int(orn_forget(list_orn, UNIT, listof("x", "y", "x"))) == 3
    assert orn_forget(list_orn, UNIT, listof()) == ZERO
    payload = VPair(VTag("suc"), VPair(VTag("x"), ZERO))
    assert orn_forget_nat(list_orn, UNIT, payload) == VPair(VTag("suc"), ZERO)


def test_ornamental_algebra(list_orn: Ornament) -> None:
    """The forgetful algebra lands in the base at the reindexed index."""
    alg = ornamental_algebra(list_orn)
    carrier = alg.carrier_at(UNIT)
    lists = interp_orn(list_orn)
    for xs in enumerate_set(MuSet(lists, UNIT), 3):
        n = fold(lists, alg, UNIT, xs)
        assert check_value(carrier, n)
        assert n == orn_forget(list_orn, UNIT, xs)
    assert enumerate_set(carrier, 3) == enumerate_set(std.NAT_SET, 3)


def test_identity_ornament() -> None:
    """Copying every node forgets to the same value."""
    orn = id_orn(std.NAT)
    values = enumerate_set(MuSet(interp_orn(orn), UNIT), 3)
    assert values == enumerate_set(std.NAT_SET, 3)
    assert all(orn_forget(orn, UNIT, v) == v for v in values)


@pytest.mark.parametrize("name", ["Fin", "Fin'"])
@pytest.mark.parametrize("n", [0, 1, 2, 3, 4, 5])
def test_fin_fibers(env: Env, name: str, n: int) -> None:
    """There are n elements below n."""
    family = env.family(name)
    assert len(enumerate_set(MuSet(family, nat(n)), max(n, 1))) == n


def test_fin_prime_forgets_to_fin(env: Env) -> None:
    """The computed predecessors are put back."""
    orn = env.ornament("Fin'")
    fin = env.family("Fin")
    for v in enumerate_set(MuSet(interp_orn(orn), nat(3)), 3):
        assert orn_forget(orn, nat(3), v) in enumerate_set(MuSet(fin, nat(3)), 3)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_vec_of_list(env: Env, listof: ListOf, n: int) -> None:
    """Lists of length n, without the constructor tag."""
    orn = env.ornament("VecOfList")
    vectors = enumerate_set(MuSet(interp_orn(orn), nat(n)), n)
    assert len(vectors) == 2**n
    lists = {orn_forget(orn, nat(n), v) for v in vectors}
    assert listof(*["x"] * n) in lists
    assert all(to_int(orn_forget(env.ornament("List"), UNIT, xs)) == n for xs in lists)


@pytest.mark.parametrize("tags", [("x",), ("x", "y")])
@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_vector_styles_agree(tags: tuple[str, ...], n: int) -> None:
    """Constraint and computed vectors have as many inhabitants as there are lists."""
    env = prelude({"A": tag_set("A", tags)})
    counts = {
        name: len(enumerate_set(MuSet(env.family(name), nat(n)), n))
        for name in ("VectorC", "VectorD", "VecOfList")
    }
    assert set(counts.values()) == {len(tags) ** n}


def test_walk_branches(env: Env) -> None:
    """Every matching branch contributes its constructors."""
    walks = enumerate_set(MuSet(env.family("Walk"), ZERO), 2)
    assert len(walks) == 2
