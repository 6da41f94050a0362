"""
Function types, functional ornaments and the patch construction.

A function type is a spine of ``μ`` arguments (``MuArrow``) and ``μ`` results
(``MuTimes``), read uncurried: a function consumes one value per arrow and
returns one value per product, in spine order. A functional ornament
ornaments every node of the spine. The coherence between a base function and
a lifting, the ``Patch`` signature of coherent-by-construction liftings and
the projection of a lifting out of a patch all follow the spine.

Correctness claims are checked by exhaustive sweeps to a depth budget and
reported as ``VerificationReport`` objects.
"""

from __future__ import annotations

import dataclasses
import itertools
import logging
from collections.abc import Callable, Iterator, Sequence
from typing import TYPE_CHECKING

from typing_extensions import Self

from ornate.algebraic import (
    Reorn,
    assert_recomputation,
    forget_reorn,
    remember_reorn,
    reornament,
)
from ornate.core import (
    DescFun,
    MuSet,
    SetCode,
    VPair,
    Value,
    check_value,
    enumerate_set,
    equal_value,
    show_set,
    show_value,
)
from ornate.errors import IllFormedFunOrn, IllTypedValue, OrnateError
from ornate.ornament import InvWitness, Ornament, id_orn, interp_orn, orn_forget
from ornate.report import CheckRecord, VerificationReport

if TYPE_CHECKING:
    from ornate.body import FunDef

__all__ = [
    "BaseFn",
    "Budget",
    "End",
    "FunOrn",
    "FunType",
    "LiftedFn",
    "MuArrow",
    "MuArrowOrn",
    "MuTimes",
    "MuTimesOrn",
    "PatchFn",
    "PatchSig",
    "Slot",
    "check_fn_against_type",
    "check_patch_fn",
    "coherence_check",
    "coherence_witness",
    "identity_funorn",
    "input_tuples",
    "patch",
    "patch_inputs",
    "patch_sig",
    "show_fun_type",
    "slots",
    "spine",
]

logger = logging.getLogger(__name__)

Budget = int | Sequence[int]
Results = tuple[Value, ...]


@dataclasses.dataclass(frozen=True)
class MuArrow:
    """``μ(family index) -> rest``."""

    family: DescFun
    index: Value
    rest: FunType


@dataclasses.dataclass(frozen=True)
class MuTimes:
    """``μ(family index) × rest``."""

    family: DescFun
    index: Value
    rest: FunType


@dataclasses.dataclass(frozen=True)
class End:
    """The end of a spine: the unit result."""


FunType = MuArrow | MuTimes | End


@dataclasses.dataclass(frozen=True)
class MuArrowOrn:
    """Ornament an argument with ``orn`` at the fine index of ``witness``."""

    orn: Ornament
    witness: InvWitness
    rest: FunOrn


@dataclasses.dataclass(frozen=True)
class MuTimesOrn:
    """Ornament a result with ``orn`` at the fine index of ``witness``."""

    orn: Ornament
    witness: InvWitness
    rest: FunOrn


FunOrn = MuArrowOrn | MuTimesOrn | End


def spine(sig: FunType) -> tuple[list[MuSet], list[MuSet]]:
    """The argument and result sets of a function type, in order."""
    args: list[MuSet] = []
    results: list[MuSet] = []
    node = sig
    while True:
        match node:
            case MuArrow(family=family, index=index, rest=rest):
                args.append(MuSet(family, index))
                node = rest
            case MuTimes(family=family, index=index, rest=rest):
                results.append(MuSet(family, index))
                node = rest
            case End():
                return args, results


def show_fun_type(sig: FunType | FunOrn) -> str:
    """Render a spine as ``A -> B -> C × unit``."""
    parts: list[str] = []
    node = sig
    while not isinstance(node, End):
        match node:
            case MuArrow(family=family, index=index):
                parts.append(f"{show_set(MuSet(family, index))} -> ")
            case MuTimes(family=family, index=index):
                parts.append(f"{show_set(MuSet(family, index))} × ")
            case MuArrowOrn(orn=orn, witness=w):
                parts.append(f"{show_set(MuSet(interp_orn(orn), w.j))} -> ")
            case MuTimesOrn(orn=orn, witness=w):
                parts.append(f"{show_set(MuSet(interp_orn(orn), w.j))} × ")
        node = node.rest
    return "".join(parts) + "unit"


@dataclasses.dataclass(frozen=True)
class Slot:
    """One ``μ`` position of a functional ornament together with its base."""

    family: DescFun
    index: Value
    orn: Ornament
    witness: InvWitness

    @property
    def base_set(self: Self) -> MuSet:
        """``μ(D i)``."""
        return MuSet(self.family, self.index)

    @property
    def ornamented_set(self: Self) -> MuSet:
        """``μ(⟦O⟧ j)``."""
        return MuSet(interp_orn(self.orn), self.witness.j)

    @property
    def reorn(self: Self) -> Reorn:
        """The reornament of the slot's ornament."""
        return reornament(self.orn)

    def reorn_index(self: Self, t: Value) -> Value:
        """The reornament index ``(j, t)`` for a base value ``t``."""
        return VPair(self.witness.j, t)

    def reorn_set(self: Self, t: Value) -> MuSet:
        """``μ(O^ (j, t))``."""
        return MuSet(interp_orn(self.reorn), self.reorn_index(t))

    def forget(self: Self, x_plus: Value) -> Value:
        """Forget an ornamented value down to the base."""
        return orn_forget(self.orn, self.witness.j, x_plus)


def slots(sig: FunType, fun_orn: FunOrn) -> tuple[tuple[Slot, ...], tuple[Slot, ...]]:
    """Pair every node of ``fun_orn`` with the node of ``sig`` it ornaments."""
    args: list[Slot] = []
    results: list[Slot] = []
    node, onode, position = sig, fun_orn, 0
    while True:
        match node, onode:
            case MuArrow(), MuArrowOrn():
                args.append(_slot(node, onode, position))
            case MuTimes(), MuTimesOrn():
                results.append(_slot(node, onode, position))
            case End(), End():
                return tuple(args), tuple(results)
            case _:
                msg = (
                    f"node {position}: {type(onode).__name__} cannot ornament"
                    f" {type(node).__name__}"
                )
                raise IllFormedFunOrn(msg)
        node, onode, position = node.rest, onode.rest, position + 1


def _slot(node: MuArrow | MuTimes, onode: MuArrowOrn | MuTimesOrn, position: int) -> Slot:
    orn, w = onode.orn, onode.witness
    index_set = node.family.index_set
    if orn.base != node.family:
        msg = f"node {position}: {orn.name} ornaments {orn.base.name}, not {node.family.name}"
        raise IllFormedFunOrn(msg)
    if not check_value(orn.re.fine, w.j):
        msg = f"node {position}: fine index {show_value(w.j)} outside the index set of {orn.name}"
        raise IllFormedFunOrn(msg)
    if not (
        equal_value(index_set, orn.re.apply(w.j), w.expected)
        and equal_value(index_set, w.expected, node.index)
    ):
        msg = (
            f"node {position}: {orn.name} at {show_value(w.j)} does not refine"
            f" index {show_value(node.index)}"
        )
        raise IllFormedFunOrn(msg)
    return Slot(node.family, node.index, orn, w)


def identity_funorn(sig: FunType) -> FunOrn:
    """Ornament every node of ``sig`` with the identity ornament."""
    match sig:
        case MuArrow(family=family, index=index, rest=rest):
            return MuArrowOrn(id_orn(family), InvWitness(index, index), identity_funorn(rest))
        case MuTimes(family=family, index=index, rest=rest):
            return MuTimesOrn(id_orn(family), InvWitness(index, index), identity_funorn(rest))
    return End()


@dataclasses.dataclass(frozen=True)
class BaseFn:
    """
    A base function over ``⟦sig⟧``.

    ``skeleton`` is the body it was defined by, when known; lifting scripts are
    aligned against it.
    """

    sig: FunType
    run: Callable[..., Sequence[Value]]
    name: str = dataclasses.field(default="", compare=False)
    skeleton: FunDef | None = dataclasses.field(default=None, compare=False)

    def __call__(self: Self, *args: Value) -> Results:
        """Apply to one value per arrow; return one value per product."""
        return tuple(self.run(*args))


@dataclasses.dataclass(frozen=True)
class LiftedFn:
    """A function over the ornamented spine ``⟦sig⟧``."""

    sig: FunOrn
    run: Callable[..., Sequence[Value]]
    name: str = dataclasses.field(default="", compare=False)

    def __call__(self: Self, *args: Value) -> Results:
        """Apply to one ornamented value per arrow."""
        return tuple(self.run(*args))


@dataclasses.dataclass(frozen=True)
class PatchSig:
    """
    The signature of liftings of ``base`` that are coherent by construction.

    Every argument slot takes a base value ``t`` and an inhabitant of the
    slot's reornament at ``(j, t)``; every result slot returns an inhabitant of
    the reornament at ``(j, r)`` where ``r`` is the matching result of ``base``
    on the ``t``s.
    """

    fun_type: FunType
    fun_orn: FunOrn
    base: BaseFn
    args: tuple[Slot, ...]
    results: tuple[Slot, ...]

    def base_args(self: Self, flat: Sequence[Value]) -> Results:
        """The ``t``s of a flat ``(t, t++)`` argument tuple."""
        return tuple(flat[0::2])

    def result_indices(self: Self, ts: Sequence[Value]) -> list[Value]:
        """Reornament indices of the results, computed by running the base function."""
        outs = self.base(*ts)
        if len(outs) != len(self.results):
            msg = f"{self.base.name} returned {len(outs)} results, expected {len(self.results)}"
            raise IllTypedValue(msg)
        return [slot.reorn_index(r) for slot, r in zip(self.results, outs, strict=True)]

    def result_sets(self: Self, ts: Sequence[Value]) -> list[MuSet]:
        """The sets the results of a patch must inhabit for base arguments ``ts``."""
        return [
            MuSet(interp_orn(slot.reorn), idx)
            for slot, idx in zip(self.results, self.result_indices(ts), strict=True)
        ]

    def binders(self: Self) -> list[str]:
        """Names for the base arguments, from the defining body when known."""
        if self.base.skeleton is not None:
            return list(self.base.skeleton.params)
        return [f"t{n}" for n in range(len(self.args))]

    def render(self: Self) -> list[str]:
        """One line per slot."""
        names = self.binders()
        lines = []
        for name, slot in zip(names, self.args, strict=True):
            lines.append(f"({name} : {show_set(slot.base_set)})")
            lines.append(
                f"({name}++ : {slot.reorn.name} {show_value(slot.witness.j)} {name})"
            )
        call = " ".join([self.base.name or "f", *names])
        for k, slot in enumerate(self.results):
            lines.append(f"-> {slot.reorn.name} {show_value(slot.witness.j)} (#{k} ({call}))")
        return lines


@dataclasses.dataclass(frozen=True)
class PatchFn:
    """An inhabitant of a ``PatchSig``, applied to flat ``(t, t++)`` pairs."""

    sig: PatchSig
    run: Callable[..., Sequence[Value]]
    name: str = dataclasses.field(default="", compare=False)

    def __call__(self: Self, *args: Value) -> Results:
        """Apply to ``t0, t0++, t1, t1++, ...``."""
        if len(args) != 2 * len(self.sig.args):
            arity = 2 * len(self.sig.args)
            msg = f"{self.name or 'patch'} takes {arity} arguments, got {len(args)}"
            raise IllTypedValue(msg, where="arguments")
        return tuple(self.run(*args))


def patch_sig(sig: FunType, fun_orn: FunOrn, f: BaseFn) -> PatchSig:
    """Compute the signature of coherent liftings of ``f`` along ``fun_orn``."""
    if f.sig != sig:
        msg = f"{f.name or 'function'} does not have the given type"
        raise IllFormedFunOrn(msg)
    args, results = slots(sig, fun_orn)
    return PatchSig(sig, fun_orn, f, args, results)


# sweeps


def _budgets(depth: Budget, count: int) -> tuple[int, ...]:
    if isinstance(depth, int):
        return (depth,) * count
    budgets = tuple(depth)
    if len(budgets) != count:
        msg = f"expected {count} depth budgets, got {len(budgets)}"
        raise ValueError(msg)
    return budgets


def _depth_label(depth: Budget) -> tuple[int, ...]:
    return (depth,) if isinstance(depth, int) else tuple(depth)


def input_tuples(sig: FunType | FunOrn, depth: Budget) -> Iterator[Results]:
    """
    Every argument tuple of ``sig`` within the budget, first argument outermost.

    For a ``FunOrn`` the ornamented sets are enumerated.
    """
    sets: list[SetCode] = []
    node = sig
    while not isinstance(node, End):
        match node:
            case MuArrow(family=family, index=index):
                sets.append(MuSet(family, index))
            case MuArrowOrn(orn=orn, witness=w):
                sets.append(MuSet(interp_orn(orn), w.j))
        node = node.rest
    columns = [
        enumerate_set(s, d) for s, d in zip(sets, _budgets(depth, len(sets)), strict=True)
    ]
    yield from itertools.product(*columns)


def patch_inputs(sig: PatchSig, depth: Budget) -> Iterator[Results]:
    """Every flat ``(t, t++)`` tuple of a patch signature within the budget."""
    columns = []
    for slot, d in zip(sig.args, _budgets(depth, len(sig.args)), strict=True):
        columns.append(
            [
                (t, t_pp)
                for t in enumerate_set(slot.base_set, d)
                for t_pp in enumerate_set(slot.reorn_set(t), d)
            ]
        )
    for combo in itertools.product(*columns):
        yield tuple(v for pair in combo for v in pair)


def check_fn_against_type(f: BaseFn, depth: Budget) -> VerificationReport:
    """Run ``f`` on every enumerated input; each result must check at its set."""
    _, result_sets = spine(f.sig)
    report = VerificationReport("type", f.name, _depth_label(depth))
    for args in input_tuples(f.sig, depth):
        try:
            outs = f(*args)
        except OrnateError as err:
            report.add(CheckRecord(args, passed=False, note=str(err)))
            continue
        if len(outs) != len(result_sets):
            note = f"arity: {len(outs)} results, type has {len(result_sets)}"
            report.add(CheckRecord(args, actual=outs, passed=False, note=note))
            continue
        bad = [
            k for k, (s, v) in enumerate(zip(result_sets, outs, strict=True))
            if not check_value(s, v)
        ]
        note = "; ".join(f"result {k} not in {show_set(result_sets[k])}" for k in bad)
        report.add(CheckRecord(args, actual=outs, passed=not bad, note=note))
    logger.debug(report.summary())
    return report


def coherence_check(
    fun_orn: FunOrn, f: BaseFn, f_plus: LiftedFn, depth: Budget
) -> VerificationReport:
    """Check ``forget ∘ f_plus = f ∘ forget`` on every enumerated ornamented input."""
    args, results = slots(f.sig, fun_orn)
    report = VerificationReport("coherence", f_plus.name or f.name, _depth_label(depth))
    for x_plus in input_tuples(fun_orn, depth):
        try:
            expected = f(*(slot.forget(x) for slot, x in zip(args, x_plus, strict=True)))
            outs = f_plus(*x_plus)
            actual = tuple(slot.forget(y) for slot, y in zip(results, outs, strict=True))
        except (OrnateError, ValueError) as err:
            report.add(CheckRecord(x_plus, passed=False, note=str(err)))
            continue
        passed = len(expected) == len(results) and all(
            equal_value(slot.base_set, e, a)
            for slot, e, a in zip(results, expected, actual, strict=True)
        )
        report.add(CheckRecord(x_plus, expected, actual, passed))
    logger.debug(report.summary())
    return report


def check_patch_fn(sig: PatchSig, p: PatchFn, depth: Budget) -> VerificationReport:
    """Check every result of ``p`` against its reornament at the base result."""
    report = VerificationReport("patch", p.name, _depth_label(depth))
    for flat in patch_inputs(sig, depth):
        try:
            expected_sets = sig.result_sets(sig.base_args(flat))
            outs = p(*flat)
        except OrnateError as err:
            report.add(CheckRecord(flat, passed=False, note=str(err)))
            continue
        if len(outs) != len(expected_sets):
            note = f"arity: {len(outs)} results, signature has {len(expected_sets)}"
            report.add(CheckRecord(flat, actual=outs, passed=False, note=note))
            continue
        bad = [
            k for k, (s, v) in enumerate(zip(expected_sets, outs, strict=True))
            if not check_value(s, v)
        ]
        note = "; ".join(
            f"index mismatch: result {k} not in {show_set(expected_sets[k])}" for k in bad
        )
        report.add(CheckRecord(flat, actual=outs, passed=not bad, note=note))
    logger.debug(report.summary())
    return report


def _unpatch(sig: PatchSig, x_plus: Sequence[Value]) -> list[Value]:
    flat: list[Value] = []
    for slot, x in zip(sig.args, x_plus, strict=True):
        flat.extend(remember_reorn(slot.orn, slot.witness.j, x))
    return flat


def patch(fun_orn: FunOrn, f: BaseFn, p: PatchFn, *, name: str = "") -> LiftedFn:
    """
    Project the lifting out of a patch.

    Arguments are split into their base value and reornament inhabitant; the
    results of ``p`` are turned back into ornamented values.
    """
    sig = patch_sig(f.sig, fun_orn, f)

    def run(*x_plus: Value) -> Results:
        if len(x_plus) != len(sig.args):
            msg = f"expected {len(sig.args)} arguments, got {len(x_plus)}"
            raise IllTypedValue(msg, where="arguments")
        flat = _unpatch(sig, x_plus)
        indices = sig.result_indices(sig.base_args(flat))
        outs = p(*flat)
        if len(outs) != len(sig.results):
            msg = f"{p.name or 'patch'} returned {len(outs)} results"
            raise IllTypedValue(msg)
        return tuple(
            forget_reorn(slot.orn, idx, y)
            for slot, idx, y in zip(sig.results, indices, outs, strict=True)
        )

    return LiftedFn(fun_orn, run, name=name or p.name)


def coherence_witness(
    fun_orn: FunOrn, f: BaseFn, p: PatchFn, depth: Budget
) -> VerificationReport:
    """Check that every result of ``p`` recomputes its base result when forgotten."""
    sig = patch_sig(f.sig, fun_orn, f)
    report = VerificationReport("recomputation", p.name, _depth_label(depth))
    for x_plus in input_tuples(fun_orn, depth):
        try:
            flat = _unpatch(sig, x_plus)
            indices = sig.result_indices(sig.base_args(flat))
            outs = p(*flat)
            passed = len(outs) == len(indices) and all(
                assert_recomputation(slot.reorn, idx, y)
                for slot, idx, y in zip(sig.results, indices, outs, strict=True)
            )
        except OrnateError as err:
            report.add(CheckRecord(x_plus, passed=False, note=str(err)))
            continue
        report.add(CheckRecord(x_plus, actual=outs, passed=passed))
    logger.debug(report.summary())
    return report
