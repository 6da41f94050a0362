"""Test functional ornaments, patches and the coherence sweeps."""

from __future__ import annotations

import json
from collections.abc import Callable

import pytest

from ornate.algebraic import remember_reorn
from ornate.core import UNIT, MuSet, Value, enumerate_set, nat, std, to_int
from ornate.errors import IllFormedFunOrn
from ornate.funorn import (
    LiftedFn,
    PatchFn,
    check_fn_against_type,
    check_patch_fn,
    coherence_check,
    coherence_witness,
    identity_funorn,
    input_tuples,
    patch,
    patch_sig,
    show_fun_type,
    slots,
    spine,
)
from ornate.ornament import Ornament, interp_orn, orn_forget
from ornate.surface import Env

ListOf = Callable[..., Value]


def test_spine(env: Env) -> None:
    """Two natural arguments, one boolean result."""
    args, results = spine(env.fun_type("natRelation"))
    assert [s.family.name for s in args] == ["Nat", "Nat"]
    assert [s.family.name for s in results] == ["Bool"]


def test_slots_and_show(env: Env) -> None:
    """The lookup ornament keeps the position, lists the count and options the answer."""
    named = env.funorn("typeLookup")
    args, results = slots(named.over, named.orn)
    assert [slot.orn.name for slot in args] == ["idNat", "List"]
    assert [slot.orn.name for slot in results] == ["Maybe"]
    assert show_fun_type(named.orn).endswith("unit")
    assert show_fun_type(named.over).count("->") == 2


def test_mismatched_patch_sig(env: Env) -> None:
    """The base function must have the ornamented type."""
    with pytest.raises(IllFormedFunOrn):
        patch_sig(env.fun_type("natRelation"), env.funorn("typeLookup").orn, env.function("plus"))


def test_input_tuples(env: Env) -> None:
    """Budgets are per argument."""
    sig = env.fun_type("natRelation")
    assert len(list(input_tuples(sig, 2))) == 9
    assert len(list(input_tuples(sig, (1, 3)))) == 8
    with pytest.raises(ValueError, match="depth budgets"):
        list(input_tuples(sig, (1, 2, 3)))


@pytest.mark.parametrize("name", ["isSuc", "length", "lessThan", "plus", "minus"])
def test_base_functions_type_check(env: Env, name: str) -> None:
    """Every prelude function stays inside its result sets."""
    assert check_fn_against_type(env.function(name), 3).passed


def test_identity_lifting_is_coherent(env: Env) -> None:
    """A function is a coherent lifting of itself."""
    f = env.function("plus")
    same = LiftedFn(identity_funorn(f.sig), f.run, name="plus")
    assert coherence_check(identity_funorn(f.sig), f, same, 3).passed


def test_lookup_coherence(env: Env, lookup: LiftedFn) -> None:
    """Looking up succeeds exactly below the length."""
    report = coherence_check(
        env.funorn("typeLookup").orn, env.function("lessThan"), lookup, (5, 4)
    )
    assert report.passed, report.render(quiet=True)
    assert len(report.records) == 6 * 31


def test_lookup_is_just_below_length(lookup: LiftedFn, list_orn: Ornament) -> None:
    """The result is present iff the position is below the length."""
    for n in range(6):
        for xs in enumerate_set(MuSet(interp_orn(list_orn), UNIT), 4):
            (result,) = lookup(nat(n), xs)
            length = to_int(orn_forget(list_orn, UNIT, xs))
            assert (result.payload.fst.name == "true") == (n < length)


def test_lookup_values(
    lookup: LiftedFn, listof: ListOf, just: Callable[[str], Value], nothing: Value
) -> None:
    """Positions count from zero."""
    assert lookup(nat(1), listof("x", "y")) == (just("y"),)
    assert lookup(nat(0), listof("y", "x")) == (just("y"),)
    assert lookup(nat(2), listof("x", "y")) == (nothing,)


def test_append(env: Env, listof: ListOf, list_orn: Ornament) -> None:
    """Appending adds the lengths."""
    append = env.applicable("append")
    assert append(listof("x"), listof("y")) == (listof("x", "y"),)
    lists = enumerate_set(MuSet(interp_orn(list_orn), UNIT), 3)
    for xs in lists:
        for ys in lists:
            (zs,) = append(xs, ys)
            lengths = [to_int(orn_forget(list_orn, UNIT, v)) for v in (xs, ys, zs)]
            assert lengths[2] == lengths[0] + lengths[1]


def test_append_coherence(env: Env) -> None:
    """The appended list forgets to the sum."""
    append = env.applicable("append")
    assert isinstance(append, LiftedFn)
    report = coherence_check(env.funorn("type++").orn, env.function("plus"), append, 3)
    assert report.passed, report.render(quiet=True)


def test_head(
    env: Env, listof: ListOf, just: Callable[[str], Value], nothing: Value
) -> None:
    """The first element, if any."""
    head = env.applicable("head")
    assert head(listof("x", "y")) == (just("x"),)
    assert head(listof()) == (nothing,)


@pytest.mark.parametrize("name", ["ihead", "ilookup", "vappend"])
def test_prelude_patches(env: Env, name: str) -> None:
    """Complete scripts stay in the reornament of the base result."""
    p = env.lifting(name)
    assert isinstance(p, PatchFn)
    assert check_patch_fn(p.sig, p, 3).passed
    assert coherence_witness(p.sig.fun_orn, p.sig.base, p, 3).passed
    lifted = patch(p.sig.fun_orn, p.sig.base, p)
    assert coherence_check(p.sig.fun_orn, p.sig.base, lifted, 3).passed


@pytest.mark.slow
@pytest.mark.parametrize("name", ["ihead", "ilookup", "vappend"])
def test_prelude_patches_deep(env: Env, name: str) -> None:
    """Passing patches are coherent at depth 4 too."""
    p = env.lifting(name)
    assert isinstance(p, PatchFn)
    assert check_patch_fn(p.sig, p, 4).passed
    lifted = patch(p.sig.fun_orn, p.sig.base, p)
    assert coherence_check(p.sig.fun_orn, p.sig.base, lifted, 4).passed


def test_patch_signature(ilookup: PatchFn) -> None:
    """An argument and its reornament partner per slot, one line per result."""
    lines = ilookup.sig.render()
    assert lines[0] == "(m : (mu Nat unit))"
    assert lines[1].startswith("(m++ : ")
    assert lines[2] == "(n : (mu Nat unit))"
    assert lines[-1].startswith("-> ")
    assert len(lines) == 5


def test_corrupted_patch_is_caught(ilookup: PatchFn, maybe_orn: Ornament) -> None:
    """Always answering nothing leaves the reornament of true results."""
    _, always_nothing = remember_reorn(maybe_orn, UNIT, std.FALSE)
    broken = PatchFn(ilookup.sig, lambda *_args: (always_nothing,), name="broken")
    report = check_patch_fn(ilookup.sig, broken, (2, 2))
    assert not report.passed
    assert report.first_failure is not None
    assert "index mismatch" in report.first_failure.note
    lifted = patch(ilookup.sig.fun_orn, ilookup.sig.base, broken)
    assert not coherence_check(ilookup.sig.fun_orn, ilookup.sig.base, lifted, 2).passed


def test_incoherent_lifting(env: Env, nothing: Value) -> None:
    """The first counterexample is the first in enumeration order."""
    named = env.funorn("typeLookup")
    never = LiftedFn(named.orn, lambda _m, _xs: (nothing,), name="never")
    report = coherence_check(named.orn, env.function("lessThan"), never, 2)
    assert not report.passed
    failure = report.first_failure
    assert failure is not None
    assert failure.inputs[0] == nat(0)
    assert to_int(orn_forget(env.ornament("List"), UNIT, failure.inputs[1])) == 1


def test_report_json(env: Env, lookup: LiftedFn) -> None:
    """One object per checked tuple, values in the surface syntax."""
    report = coherence_check(env.funorn("typeLookup").orn, env.function("lessThan"), lookup, 1)
    data = json.loads(report.as_json())
    assert data["passed"] is True
    assert data["checked"] == len(data["records"]) == 6
    assert data["depth"] == [1]
    first = data["records"][0]
    assert first["inputs"] == ["0", "0"]
    assert first["pass"] is True
    assert first["expected"] == ["('false)"]
