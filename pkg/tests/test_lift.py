"""Test the lifting combinators and the alignment of scripts with base functions."""

from __future__ import annotations

from collections.abc import Callable, Sequence

import pytest

from ornate.algebraic import forget_reorn, remember_reorn, reornament
from ornate.core import (
    UNIT,
    MuSet,
    VIn,
    VPair,
    VTag,
    Value,
    enumerate_set,
    nat,
    positions,
    show_set,
    std,
)
from ornate.errors import ElaborationError, IllTypedValue, SkeletonMismatch
from ornate.funorn import PatchFn, PatchSig, check_patch_fn
from ornate.lift import (
    CoherentAlgebra,
    Folded,
    HoleReport,
    Scrutinee,
    elaborate_script,
    lift_case,
    lift_constructor,
    lift_fold,
    lift_ind,
)
from ornate.ornament import Ornament, interp_orn
from ornate.surface import Env, read_one
from ornate.surface.script import parse_script

ListOf = Callable[..., Value]


@pytest.fixture(scope="module")
def head_sig(env: Env) -> PatchSig:
    """Coherent liftings of ``isSuc`` to the head of a list."""
    entity = env.lifting("ihead")
    assert isinstance(entity, PatchFn)
    return entity.sig


def head_of(list_orn: Ornament, maybe_orn: Ornament) -> Callable[[Scrutinee], Sequence[Value]]:
    """A step answering the head of the whole list, ignoring the recursion."""

    def step(sc: Scrutinee) -> Sequence[Value]:
        xs = forget_reorn(list_orn, VPair(UNIT, sc.t), sc.t_pp)
        match xs:
            case VIn(payload=VPair(fst=VTag("suc"), snd=VPair(fst=a))):
                answer: Value = VIn(VPair(VTag("true"), VPair(a, UNIT)))
            case _:
                answer = std.FALSE
        return (remember_reorn(maybe_orn, UNIT, answer)[1],)

    return step


@pytest.mark.parametrize(
    ("name", "goals"),
    [("ihead-goals", 1), ("ilookup-goals", 1)],
)
def test_open_goals(env: Env, name: str, goals: int) -> None:
    """Unspecified inserted data is reported with its set."""
    report = env.lifting(name)
    assert isinstance(report, HoleReport)
    assert len(report.holes) == goals
    (hole,) = report.holes
    assert show_set(hole.expected) == "A"
    (line,) = report.render()
    assert line.startswith(f"HOLE {name}/")
    assert line.endswith(": A")


def test_goal_context(env: Env) -> None:
    """The names usable at a hole are those bound by the enclosing branches."""
    report = env.lifting("ilookup-goals")
    assert isinstance(report, HoleReport)
    (hole,) = report.holes
    assert {"m", "n"} <= set(hole.context)


def test_complete_script(env: Env, head_sig: PatchSig) -> None:
    """Filling every hole yields a lifting coherent by construction."""
    lifted = env.lifting("ihead")
    assert isinstance(lifted, PatchFn)
    assert check_patch_fn(head_sig, lifted, 3).passed


def test_lift_constructor(env: Env, list_orn: Ornament, listof: ListOf) -> None:
    """Rebuild a reornament node from its inserted data and recursive arguments."""
    t, t_pp = remember_reorn(list_orn, UNIT, listof("y"))
    assert t == nat(1)
    assert isinstance(t, VIn)
    assert isinstance(t_pp, VIn)
    assert isinstance(t_pp.payload, VPair)
    e, a = t_pp.payload.fst, t_pp.payload.snd
    assert lift_constructor(list_orn, UNIT, t.payload, e, a) == VPair(t_pp, UNIT)
    with pytest.raises(IllTypedValue, match="is not in"):
        lift_constructor(list_orn, UNIT, t.payload, VTag("z"), a)
    with pytest.raises(IllTypedValue, match="does not fit"):
        lift_constructor(list_orn, UNIT, t.payload, e, VTag("z"))


def test_lift_case(head_sig: PatchSig, list_orn: Ornament, maybe_orn: Ornament) -> None:
    """A case step sees the whole argument and the base result to lift."""
    seen: list[Value] = []

    def step(sc: Scrutinee) -> Sequence[Value]:
        seen.append(sc.target[0])
        return head_of(list_orn, maybe_orn)(sc)

    lifted = lift_case(head_sig, CoherentAlgebra(step, name="head"))
    assert check_patch_fn(head_sig, lifted, 3).passed
    assert set(seen) == {std.FALSE, std.TRUE}


def test_lift_ind(head_sig: PatchSig, list_orn: Ornament, maybe_orn: Ornament) -> None:
    """Recursive positions of an induction step hold the lifting of the sub-tree."""
    reorn_desc = interp_orn(reornament(list_orn))
    slot = head_sig.args[0]
    answers: list[int] = []

    def step(sc: Scrutinee) -> Sequence[Value]:
        for _, hypothesis in positions(reorn_desc.at(slot.reorn_index(sc.t)), sc.payload):
            assert callable(hypothesis)
            answers.append(len(hypothesis()))
        return head_of(list_orn, maybe_orn)(sc)

    lifted = lift_ind(head_sig, CoherentAlgebra(step))
    assert check_patch_fn(head_sig, lifted, 3).passed
    assert answers
    assert set(answers) == {1}


def test_lift_fold(
    env: Env, head_sig: PatchSig, list_orn: Ornament, maybe_orn: Ornament
) -> None:
    """Recursive positions of a fold step pair the base and the lifted sub-result."""
    reorn_desc = interp_orn(reornament(list_orn))
    folded: list[Folded] = []

    def step(sc: Scrutinee) -> Sequence[Value]:
        idx = VPair(sc.j, sc.t)
        folded.extend(sub for _, sub in positions(reorn_desc.at(idx), sc.payload))
        return head_of(list_orn, maybe_orn)(sc)

    lifted = lift_fold(head_sig, env.algebra("isSuc"), CoherentAlgebra(step))
    assert check_patch_fn(head_sig, lifted, 3).passed
    assert folded
    assert all(isinstance(sub, Folded) for sub in folded)
    assert {sub.base for sub in folded} <= {std.FALSE, std.TRUE}


@pytest.mark.parametrize(
    ("script", "reason"),
    [
        ("(lift-case n ('0 (lift-con)) ('suc (lift-con (ext a))))", "has fold"),
        ("(lift-fold m ('0 (lift-con)) ('suc (lift-con (ext a))))", "eliminates n"),
        ("(lift-fold n ('0 (lift-con)))", "no branch for 'suc"),
        ("(lift-fold n ('0 (lift-con)) ('suc (lift-con (ext a))) ('nil (lift-con)))", "nil"),
    ],
)
def test_script_must_follow_the_base(env: Env, script: str, reason: str) -> None:
    """Scripts mirror the eliminators of the base function node for node."""
    named = env.funorn("typeHead")
    against = (named.over, named.orn, env.function("isSuc"))
    with pytest.raises(SkeletonMismatch, match=reason):
        elaborate_script(parse_script(read_one(script)), against, "bad")


def test_lift_constructor_without_recursion(
    maybe_orn: Ornament, just: Callable[[str], Value]
) -> None:
    """A node the ornament only inserts into has no recursive arguments."""
    _, t_pp = remember_reorn(maybe_orn, UNIT, just("x"))
    e = VPair(VTag("x"), UNIT)
    assert lift_constructor(maybe_orn, UNIT, VPair(VTag("true"), UNIT), e, UNIT) == VPair(
        t_pp, UNIT
    )


@pytest.mark.parametrize(
    ("ext", "reason"),
    [
        ("(ext b)", "unbound variable b"),
        ("(ext 'z)", "is not in A"),
        ("(ext (ih n))", "cannot supply inserted data"),
        ("(ext a a)", "more ext values than inserted fields"),
    ],
)
def test_inserted_data_is_resolved(env: Env, ext: str, reason: str) -> None:
    """Data given to ``ext`` is checked when the script is aligned."""
    named = env.funorn("typeHead")
    against = (named.over, named.orn, env.function("isSuc"))
    script = f"(lift-fold n ('0 (lift-con)) ('suc (lift-con {ext})))"
    with pytest.raises(ElaborationError, match=reason):
        elaborate_script(parse_script(read_one(script)), against, "bad")


def test_inserted_constant(env: Env, head_sig: PatchSig) -> None:
    """A closed element of the inserted set is a complete answer."""
    named = env.funorn("typeHead")
    against = (named.over, named.orn, env.function("isSuc"))
    script = "(lift-fold n ('0 (lift-con)) ('suc (lift-con (ext 'y))))"
    lifted = elaborate_script(parse_script(read_one(script)), against, "always-y")
    assert isinstance(lifted, PatchFn)
    assert check_patch_fn(head_sig, lifted, 3).passed


@pytest.mark.parametrize("name", ["List", "Maybe", "VecOfList", "Fin'", "ListLen"])
def test_lift_constructor_rebuilds_every_node(env: Env, name: str) -> None:
    """Each remembered reornament node is rebuilt from its own parts."""
    orn = env.ornament(name)
    family = interp_orn(orn)
    for j in enumerate_set(orn.re.fine, 3):
        for t_plus in enumerate_set(MuSet(family, j), 3):
            t, t_pp = remember_reorn(orn, j, t_plus)
            assert isinstance(t, VIn)
            assert isinstance(t_pp, VIn)
            assert isinstance(t_pp.payload, VPair)
            e, a = t_pp.payload.fst, t_pp.payload.snd
            assert lift_constructor(orn, j, t.payload, e, a) == VPair(t_pp, UNIT)
