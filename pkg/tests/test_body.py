"""Test base function bodies, their interpreter and the structural recursion check."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from ornate.body import Call, Case, Fold, FunDef, Ih, Var, check_fundef, fold_algebra
from ornate.core import UNIT, Value, fold, nat, std, to_int
from ornate.errors import ElaborationError
from ornate.surface import Env, load_text

ListOf = Callable[..., Value]

EXTRA = """
(type natEndo (-> Nat unit (* Nat unit end)))
(type natTwice (-> Nat unit (* Nat unit (* Nat unit end))))

(fun double natEndo (n)
  (ind n
    ('0 () 0)
    ('suc (m) ('suc ('suc (ih m))))))

(fun quadruple natEndo (n) (call double (call double n)))

(fun twice natTwice (n) (values n (suc n)))
"""


@pytest.fixture(scope="module")
def extended(env: Env) -> Env:
    """The prelude with a few more functions."""
    return load_text(EXTRA, env, "extra.orn")


@pytest.mark.parametrize(
    ("name", "args", "expected"),
    [
        ("isSuc", (nat(0),), std.FALSE),
        ("isSuc", (nat(3),), std.TRUE),
        ("plus", (nat(2), nat(3)), nat(5)),
        ("minus", (nat(3), nat(1)), nat(2)),
        ("minus", (nat(1), nat(3)), nat(0)),
        ("lessThan", (nat(1), nat(2)), std.TRUE),
        ("lessThan", (nat(2), nat(2)), std.FALSE),
        ("lessThan", (nat(0), nat(0)), std.FALSE),
    ],
)
def test_prelude_functions(env: Env, name: str, args: tuple[Value, ...], expected: Value) -> None:
    """The arithmetic of the prelude."""
    assert env.function(name)(*args) == (expected,)


def test_length(env: Env, listof: ListOf) -> None:
    """Counting the elements."""
    assert env.function("length")(listof("x", "y", "y")) == (nat(3),)


def test_induction_hypotheses_and_calls(extended: Env) -> None:
    """``ih`` names the recursive result; calls nest; several results at once."""
    assert to_int(extended.function("double")(nat(3))[0]) == 6
    assert to_int(extended.function("quadruple")(nat(2))[0]) == 8
    assert extended.function("twice")(nat(1)) == (nat(1), nat(2))


def test_skeleton_is_kept(env: Env) -> None:
    """The defining body stays attached to the function."""
    fundef = env.function("lessThan").skeleton
    assert fundef is not None
    assert fundef.params == ("m", "n")
    assert isinstance(fundef.body, Case)
    assert fundef.body.scrutinee == "n"


def test_fold_algebra(env: Env, listof: ListOf) -> None:
    """A fold body defines an algebra over its argument's description."""
    fundef = env.function("length").skeleton
    assert fundef is not None
    assert isinstance(fundef.body, Fold)
    alg = fold_algebra(fundef)
    assert fold(env.family("List"), alg, UNIT, listof("x", "x")) == nat(2)
    plus = env.function("plus").skeleton
    assert plus is not None
    with pytest.raises(ElaborationError, match="one-argument fold"):
        fold_algebra(plus)


@pytest.mark.parametrize(
    ("body", "known", "reason"),
    [
        (Call("loop", (Var("n"),)), {}, "not structural"),
        (Call("nowhere", (Var("n"),)), {}, "unknown function nowhere"),
        (Call("isSuc", (Var("n"), Var("n"))), {"isSuc": 1}, "takes 1 arguments, got 2"),
        (Var("k"), {}, "unbound variable k"),
        (Ih("n"), {}, "no induction hypothesis for n"),
    ],
)
def test_check_fundef_rejects(
    env: Env, body: Call | Var | Ih, known: dict[str, int], reason: str
) -> None:
    """Only structural recursion over bound names and known functions."""
    fundef = FunDef("loop", env.fun_type("natPredicate"), ("n",), body)
    with pytest.raises(ElaborationError, match=reason):
        check_fundef(fundef, known)


@pytest.mark.parametrize(
    "source",
    [
        "(fun bad natPredicate (n m) ('true))",
        "(fun bad natPredicate (n) (case n ('0 () ('true)) ('0 () ('false))))",
        "(fun bad natPredicate (n) (case n ('suc (m) (call bad n)) ('0 () ('true))))",
    ],
)
def test_bad_definitions(env: Env, source: str) -> None:
    """Arity, duplicate branches and non-structural calls are elaboration errors."""
    with pytest.raises(ElaborationError):
        load_text(source, env)


def test_hypotheses_only_for_recursive_fields(env: Env, listof: ListOf) -> None:
    """The element of a list node has no induction hypothesis, the tail does."""
    source = "(fun count listMeasure (xs) (ind xs ('0 () 0) ('suc (a r) ('suc (ih r)))))"
    counted = load_text(source, env, "count.orn")
    assert counted.function("count")(listof("x", "y")) == (nat(2),)
    with pytest.raises(ElaborationError, match="no induction hypothesis for a"):
        load_text("(fun bad listMeasure (xs) (ind xs ('0 () 0) ('suc (a r) (ih a))))", env)
    with pytest.raises(ElaborationError, match="not structural"):
        load_text(
            "(fun bad listMeasure (xs) (case xs ('0 () 0) ('suc (a r) (call bad a))))", env
        )
