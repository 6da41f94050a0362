"""
Transporting a base function's recursion to the patch level.

The combinators ``lift_fold``, ``lift_ind`` and ``lift_case`` build a
``PatchFn`` from a coherent algebra that works on the reornament of one
argument; ``lift_constructor`` assembles a reornament node from the data the
ornament inserted and its recursive arguments.

A lifting script names these combinators node for node along the base
function's body. ``elaborate_script`` aligns the two, computes the set of
every piece of inserted data the script leaves open, and either reports
those holes or composes the combinators into a ``PatchFn``.
"""

from __future__ import annotations

import dataclasses
import logging
from collections.abc import Callable, Iterator, Sequence
from typing import ClassVar, NamedTuple

from typing_extensions import Self

from ornate.algebraic import (
    extension,
    extension_bindings,
    reorn_children,
    reornament,
    structure,
)
from ornate.body import (
    Body,
    Bound,
    Call,
    Case,
    Con,
    Eliminator,
    Expr,
    Fold,
    FunDef,
    Ih,
    Ind,
    Interpreter,
    Lit,
    Values,
    Var,
    build,
)
from ornate.core import (
    UNIT,
    Algebra,
    Desc,
    DOne,
    DSigma,
    DVar,
    EqSet,
    MuSet,
    SetCode,
    SigmaSet,
    UnitSet,
    VIn,
    VPair,
    VTag,
    Value,
    check_payload,
    check_value,
    destruct,
    enumerate_set,
    equal_value,
    fold,
    is_finite,
    map_payload,
    positions,
    show_set,
    show_value,
)
from ornate.errors import ElaborationError, IllTypedValue, IndexMismatch, SkeletonMismatch
from ornate.funorn import BaseFn, FunOrn, FunType, PatchFn, PatchSig, Slot, patch_sig
from ornate.ornament import (
    ODelete,
    OInsert,
    OrnCode,
    Ornament,
    OSigma,
    OVar,
    interp_code,
    interp_orn,
)

__all__ = [
    "CoherentAlgebra",
    "Folded",
    "Goal",
    "Hole",
    "HoleReport",
    "LiftCase",
    "LiftConstructor",
    "LiftFold",
    "LiftInd",
    "LiftScript",
    "Return",
    "ScriptBranch",
    "Scrutinee",
    "SelfCall",
    "elaborate_script",
    "lift_case",
    "lift_constructor",
    "lift_fold",
    "lift_ind",
]

logger = logging.getLogger(__name__)

Results = tuple[Value, ...]


# combinators


@dataclasses.dataclass(frozen=True)
class Scrutinee:
    """
    What a coherent algebra sees at one node of the eliminated argument.

    ``payload`` is the reornament node payload with every recursive position
    replaced by its sub-result; ``target`` holds the base results the node
    must be lifted to.
    """

    j: Value
    t: Value
    t_pp: Value
    payload: Value
    args: Results
    target: Results


@dataclasses.dataclass(frozen=True)
class CoherentAlgebra:
    """A step producing patch results from a ``Scrutinee``."""

    step: Callable[[Scrutinee], Sequence[Value]]
    name: str = dataclasses.field(default="", compare=False)


class Folded(NamedTuple):
    """The sub-result of ``lift_fold`` at a recursive position."""

    base: Value
    lifted: Value


def _node(value: Value) -> Value:
    if not isinstance(value, VIn):
        raise IllTypedValue(f"expected an inductive node, got {show_value(value)}")
    return value.payload


def _pair(value: Value) -> tuple[Value, Value]:
    if not isinstance(value, VPair):
        raise IllTypedValue(f"expected a pair, got {show_value(value)}")
    return value.fst, value.snd


def _replace(args: Results, position: int, t: Value, t_pp: Value) -> Results:
    return (*args[: 2 * position], t, t_pp, *args[2 * position + 2 :])


def _same_fine_index(slot: Slot, j: Value) -> None:
    if not equal_value(slot.orn.re.fine, slot.witness.j, j):
        msg = (
            f"recursive position at {show_value(j)}, the argument is fixed at"
            f" {show_value(slot.witness.j)}"
        )
        raise IndexMismatch(msg)


def lift_case(sig: PatchSig, beta: CoherentAlgebra, position: int = 0) -> PatchFn:
    """Case analysis on argument ``position``, transported to its reornament."""
    slot = sig.args[position]

    def run(*args: Value) -> Results:
        t, t_pp = args[2 * position], args[2 * position + 1]
        target = sig.base(*sig.base_args(args))
        return tuple(
            beta.step(Scrutinee(slot.witness.j, t, t_pp, _node(t_pp), args, target))
        )

    return PatchFn(sig, run, name=beta.name)


def lift_ind(sig: PatchSig, beta: CoherentAlgebra, position: int = 0) -> PatchFn:
    """
    Induction on argument ``position``, transported to its reornament.

    Recursive positions of the payload hold zero-argument callables computing
    the patch results for that sub-tree, the other arguments unchanged.
    """
    slot = sig.args[position]
    desc = interp_orn(slot.reorn)

    def run(*args: Value) -> Results:
        t, t_pp = args[2 * position], args[2 * position + 1]
        idx = slot.reorn_index(t)

        def hypothesis(sub_idx: Value, sub_pp: Value) -> Callable[[], Results]:
            j, sub_t = _pair(sub_idx)
            _same_fine_index(slot, j)
            return lambda: lifted(*_replace(args, position, sub_t, sub_pp))

        payload = map_payload(desc.at(idx), hypothesis, _node(t_pp))
        target = sig.base(*sig.base_args(args))
        return tuple(beta.step(Scrutinee(slot.witness.j, t, t_pp, payload, args, target)))

    lifted = PatchFn(sig, run, name=beta.name)
    return lifted


def lift_fold(
    sig: PatchSig, alg: Algebra, beta: CoherentAlgebra, position: int = 0
) -> PatchFn:
    """
    Fold ``beta`` over the reornament of argument ``position``.

    The base function must be the fold of ``alg`` on that argument with a
    single result; recursive positions hold ``Folded`` pairs of the base
    result and the lifted result for that sub-tree.
    """
    slot = sig.args[position]
    desc = interp_orn(slot.reorn)
    if len(sig.results) != 1:
        msg = f"{sig.base.name} has {len(sig.results)} results, a fold computes one"
        raise SkeletonMismatch(msg)

    def go(idx: Value, t_pp: Value, args: Results) -> Folded:
        j, t = _pair(idx)
        base = fold(slot.family, alg, slot.orn.re.apply(j), t)
        payload = map_payload(desc.at(idx), lambda k, s: go(k, s, args), _node(t_pp))
        (lifted,) = beta.step(Scrutinee(j, t, t_pp, payload, args, (base,)))
        return Folded(base, lifted)

    def run(*args: Value) -> Results:
        t, t_pp = args[2 * position], args[2 * position + 1]
        return (go(slot.reorn_index(t), t_pp, args).lifted,)

    return PatchFn(sig, run, name=beta.name)


def lift_constructor(
    orn: Ornament, j: Value, xs: Value, e: Value, a: Value, rest: Value = UNIT
) -> Value:
    """
    Lift the base node ``In xs`` to the reornament of ``orn`` at ``(j, In xs)``.

    ``e`` is the data the ornament inserts at this node and ``a`` the
    recursive arguments of the node; the result is paired with ``rest``.
    """
    oc, d = orn.at(j), orn.base_at(j)
    ext = extension(oc, d, xs)
    if not check_value(ext, e):
        raise IllTypedValue(f"{show_value(e)} is not in {show_set(ext)}", where="extension")
    reorn_desc = interp_orn(reornament(orn))
    # the structure code refines the ornamented node, not the base one
    node = interp_code(structure(oc, d, xs, e), interp_code(oc, d))
    ok = check_payload(node, lambda k, v: check_value(MuSet(reorn_desc, k), v), a)
    if not ok:
        raise IllTypedValue(f"{show_value(a)} does not fit the node", where="arguments")
    return VPair(VIn(VPair(e, a)), rest)


# scripts


@dataclasses.dataclass(frozen=True)
class Hole:
    """An open piece of inserted data."""

    label: str = ""


@dataclasses.dataclass(frozen=True)
class SelfCall:
    """Recursive call of the lifting on named arguments and their partners."""

    args: tuple[str, ...]


@dataclasses.dataclass(frozen=True)
class LiftConstructor:
    """Lift the constructor the base function returns here."""

    ext: tuple[Expr | Hole, ...] = ()
    rec: tuple[Item, ...] = ()


@dataclasses.dataclass(frozen=True)
class Return:
    """Return patch values directly."""

    items: tuple[Item, ...]


Item = Var | Ih | SelfCall | LiftConstructor


@dataclasses.dataclass(frozen=True)
class ScriptBranch:
    """The script for the base branch of constructor ``tag``."""

    tag: str | None
    body: LiftScript


@dataclasses.dataclass(frozen=True)
class ScriptEliminator:
    """A lifted eliminator on the argument ``scrutinee``."""

    mirrors: ClassVar[type[Eliminator]] = Eliminator
    keyword: ClassVar[str] = ""

    scrutinee: str
    branches: tuple[ScriptBranch, ...]

    def branch_for(self: Self, tag: str | None) -> ScriptBranch | None:
        """The branch for constructor ``tag``, if the script has one."""
        return next((b for b in self.branches if b.tag in (tag, None)), None)


@dataclasses.dataclass(frozen=True)
class LiftCase(ScriptEliminator):
    """Transport a ``case``."""

    mirrors = Case
    keyword = "lift-case"


@dataclasses.dataclass(frozen=True)
class LiftInd(ScriptEliminator):
    """Transport an ``ind``."""

    mirrors = Ind
    keyword = "lift-ind"


@dataclasses.dataclass(frozen=True)
class LiftFold(ScriptEliminator):
    """Transport a ``fold``."""

    mirrors = Fold
    keyword = "lift-fold"


LiftScript = LiftCase | LiftInd | LiftFold | LiftConstructor | Return


@dataclasses.dataclass(frozen=True)
class Goal:
    """A piece of inserted data: where it goes, its set and the names in scope."""

    path: str
    expected: SetCode
    context: tuple[str, ...] = ()
    solution: Value | None = None

    def render(self: Self) -> str:
        """The ``HOLE`` line of an open goal."""
        return f"HOLE {self.path} : {show_set(self.expected)}"


@dataclasses.dataclass
class HoleReport:
    """Open goals of a script, plus the trivial ones solved automatically."""

    name: str
    holes: list[Goal] = dataclasses.field(default_factory=list)
    solved: list[Goal] = dataclasses.field(default_factory=list)

    def render(self: Self) -> list[str]:
        """One ``HOLE <path> : <set>`` line per open goal."""
        return [goal.render() for goal in self.holes]


# extension spines


def _only(s: SetCode) -> Value | None:
    if not is_finite(s):
        return None
    elements = enumerate_set(s, 0)
    return elements[0] if len(elements) == 1 else None


def _sample(s: SetCode) -> Value | None:
    elements = enumerate_set(s, 0)
    return elements[0] if elements else None


def _fill(
    s: SetCode,
    choose: Callable[[SetCode], Value | None],
    solved: Callable[[SetCode, Value], None],
) -> Value | None:
    """
    Build an inhabitant of an extension, one field at a time.

    Equality fields left by deleted data are solved on their own. Every
    inserted field goes through ``choose``, which answers ``None`` when it
    cannot supply a value.
    """
    match s:
        case UnitSet():
            return UNIT
        case EqSet():
            proof = _only(s)
            if proof is not None:
                solved(s, proof)
            return proof
        case SigmaSet():
            first = _fill(s.first, choose, solved)
            if first is None:
                return None
            rest = _fill(s.rest(first), choose, solved)
            return None if rest is None else VPair(first, rest)
    return choose(s)


def _names(e: Expr) -> Iterator[Var | Ih]:
    match e:
        case Var() | Ih():
            yield e
        case Con(args=args) | Call(args=args):
            for a in args:
                yield from _names(a)
        case Values(items=items):
            for a in items:
                yield from _names(a)


def _recursive_indices(d: Desc) -> list[Value]:
    match d:
        case DOne():
            return []
        case DVar(index=index):
            return [index]
    msg = "only first-order recursive arguments can be lifted by a script"
    raise IllTypedValue(msg, where="arguments")


def _assemble(d: Desc, values: Sequence[Value]) -> Value:
    return values[0] if isinstance(d, DVar) else UNIT


def _static_branch(orn: Ornament, j: Value, tag: str | None) -> tuple[set[int], list[str]]:
    """Recursive field numbers and insert labels of a branch, read off the ornament."""
    recursive: set[int] = set()
    labels: list[str] = []

    def walk(oc: OrnCode, d: Desc, field: int) -> None:
        match oc, d:
            case OVar(), DVar():
                recursive.add(field)
            case OSigma(fam=fam), DSigma(dom=dom, fam=dfam, choice=choice):
                s = VTag(tag) if choice and tag is not None else _sample(dom)
                if s is not None:
                    walk(fam(s), dfam(s), field if choice else field + 1)
            case OInsert(s=s, fam=fam, label=label), _:
                if label:
                    labels.append(label)
                v = _sample(s)
                if v is not None:
                    walk(fam(v), d, field)
            case ODelete(replacement=r, rest=rest), DSigma(fam=dfam, choice=choice):
                walk(rest, dfam(r), field if choice else field + 1)

    walk(orn.at(j), orn.base_at(j), 0)
    return recursive, labels


def _static_node(leaf: Expr, base_set: MuSet, path: str) -> tuple[Value, list[Expr]]:
    """The base node a leaf returns, as far as it is known, and its recursive arguments."""
    match leaf:
        case Lit(value=VIn(payload=payload)):
            return payload, []
        case Con(tag=tag, args=args):
            recursive: list[Expr] = []

            def evaluate(arg: Expr, s: SetCode | None) -> Value:
                if isinstance(s, MuSet) and s.family == base_set.family:
                    recursive.append(arg)
                if isinstance(arg, Lit):
                    return arg.value
                value = _sample(s) if s is not None else None
                if value is None:
                    msg = f"{path}: cannot lift a field of an empty set"
                    raise SkeletonMismatch(msg)
                return value

            node = build(tag, args, base_set, evaluate)
            return _node(node), recursive
    msg = f"{path}: lift-con where the base function returns a computed value"
    raise SkeletonMismatch(msg)


@dataclasses.dataclass
class _Static:
    """Names in scope during alignment; ``below`` maps a name to the argument it is smaller than."""

    below: dict[str, str | None]
    partners: set[str]
    hypotheses: set[str]

    def names(self: Self) -> tuple[str, ...]:
        return (
            *self.below,
            *(f"{p}++" for p in sorted(self.partners)),
            *(f"(ih {h})" for h in sorted(self.hypotheses)),
        )


@dataclasses.dataclass
class _Aligner:
    sig: PatchSig
    fundef: FunDef
    report: HoleReport

    def script(self: Self, s: LiftScript, base: Body, scope: _Static, path: str) -> None:
        match s:
            case LiftCase() | LiftInd() | LiftFold():
                self.eliminator(s, base, scope, path)
            case LiftConstructor():
                if len(self.sig.results) != 1:
                    msg = f"{path}: lift-con needs a single result, use return"
                    raise SkeletonMismatch(msg)
                slot = self.sig.results[0]
                self.constructor(s, _leaf(base, 0, path), slot.orn, slot.witness.j, scope, path)
            case Return(items=items):
                count = 0
                for n, item in enumerate(items):
                    where = f"{path}/{n}"
                    if isinstance(item, LiftConstructor):
                        if count >= len(self.sig.results):
                            msg = f"{where}: more results than the signature has"
                            raise SkeletonMismatch(msg)
                        slot = self.sig.results[count]
                        leaf = _leaf(base, count, where)
                        self.constructor(item, leaf, slot.orn, slot.witness.j, scope, where)
                        count += 1
                    else:
                        count += self.item(item, scope, where)
                if count != len(self.sig.results):
                    msg = f"{path}: {count} results where the signature has {len(self.sig.results)}"
                    raise SkeletonMismatch(msg)

    def eliminator(
        self: Self, s: LiftCase | LiftInd | LiftFold, base: Body, scope: _Static, path: str
    ) -> None:
        if type(base) is not s.mirrors or not isinstance(base, Eliminator):
            found = base.kind if isinstance(base, Eliminator) else "an expression"
            msg = f"{path}: {s.keyword} {s.scrutinee} where the base function has {found}"
            raise SkeletonMismatch(msg)
        if base.scrutinee != s.scrutinee:
            msg = f"{path}: {s.keyword} {s.scrutinee} where the base eliminates {base.scrutinee}"
            raise SkeletonMismatch(msg)
        if s.scrutinee not in self.fundef.params:
            msg = f"{path}: {s.keyword} needs an argument, {s.scrutinee} is not one"
            raise SkeletonMismatch(msg)
        slot = self.sig.args[self.fundef.params.index(s.scrutinee)]
        extra = {b.tag for b in s.branches} - {b.tag for b in base.branches} - {None}
        if extra:
            msg = f"{path}: branches {sorted(extra)} are not in the base function"
            raise SkeletonMismatch(msg)
        root = scope.below.get(s.scrutinee) or s.scrutinee
        for branch in base.branches:
            sb = s.branch_for(branch.tag)
            if sb is None:
                msg = f"{path}: no branch for '{branch.tag}"
                raise SkeletonMismatch(msg)
            recursive, labels = _static_branch(slot.orn, slot.witness.j, branch.tag)
            inner = _Static(dict(scope.below), set(scope.partners), set(scope.hypotheses))
            for n, binder in enumerate(branch.binders):
                structural = n in recursive and not isinstance(s, LiftFold)
                inner.below[binder] = root if structural else None
                if n in recursive:
                    inner.partners.add(binder)
                    if isinstance(s, LiftInd):
                        inner.hypotheses.add(binder)
            inner.below.update(dict.fromkeys(labels))
            self.script(sb.body, branch.body, inner, f"{path}/{branch.tag or '_'}")

    def item(self: Self, item: Item, scope: _Static, path: str) -> int:
        """Check a result item; return how many results it provides."""
        match item:
            case Var(name=name):
                if not (name.endswith("++") and name[:-2] in scope.partners):
                    raise ElaborationError((path,), f"{name} is not a lifted value in scope")
                return 1
            case Ih(var=var):
                if var not in scope.hypotheses:
                    raise ElaborationError((path,), f"no induction hypothesis for {var}")
                return len(self.sig.results)
            case SelfCall(args=args):
                self.self_call(args, scope, path)
                return len(self.sig.results)
        raise ElaborationError((path,), f"not a result: {type(item).__name__}")

    def self_call(self: Self, args: Sequence[str], scope: _Static, path: str) -> None:
        params = self.fundef.params
        if len(args) != len(params):
            raise ElaborationError((path,), f"self takes {len(params)} arguments, got {len(args)}")
        for arg in args:
            if arg not in scope.partners:
                raise ElaborationError((path,), f"{arg} has no lifted partner in scope")
        if not any(scope.below.get(a) == p for a, p in zip(args, params, strict=True)):
            raise ElaborationError((path,), "recursive call is not structural")

    def resolve(self: Self, e: Expr, scope: _Static, path: str) -> None:
        """Inserted data is computed from base-level names only."""
        for n in _names(e):
            if isinstance(n, Ih):
                raise ElaborationError((path,), f"(ih {n.var}) cannot supply inserted data")
            if n.name not in scope.below:
                raise ElaborationError((path,), f"unbound variable {n.name}")

    def constructor(
        self: Self,
        s: LiftConstructor,
        leaf: Expr,
        orn: Ornament,
        j: Value,
        scope: _Static,
        path: str,
    ) -> None:
        base_set = MuSet(orn.base, orn.re.apply(j))
        xs, rec_args = _static_node(leaf, base_set, path)
        oc, d = orn.at(j), orn.base_at(j)
        supplied = iter(s.ext)
        count = 0

        def choose(expected: SetCode) -> Value | None:
            nonlocal count
            goal_path = f"{path}/ext.{count}"
            count += 1
            item = next(supplied, None)
            trivial = _only(expected)
            if item is None or isinstance(item, Hole):
                if trivial is not None:
                    solved(expected, trivial)
                    return trivial
                self.report.holes.append(Goal(goal_path, expected, scope.names()))
                return _sample(expected)
            self.resolve(item, scope, goal_path)
            if isinstance(item, Lit):
                if not check_value(expected, item.value):
                    msg = f"{show_value(item.value)} is not in {show_set(expected)}"
                    raise ElaborationError((goal_path,), msg)
                return item.value
            return trivial if trivial is not None else _sample(expected)

        def solved(expected: SetCode, value: Value) -> None:
            self.report.solved.append(Goal(f"{path}/auto", expected, (), value))

        e = _fill(extension(oc, d, xs), choose, solved)
        if next(supplied, None) is not None:
            raise ElaborationError((path,), "more ext values than inserted fields")
        if e is None:
            return
        indices = _recursive_indices(interp_code(structure(oc, d, xs, e), interp_code(oc, d)))
        if len(indices) != len(s.rec):
            msg = f"{path}: {len(indices)} recursive arguments expected, got {len(s.rec)}"
            raise SkeletonMismatch(msg)
        for n, (item, index) in enumerate(zip(s.rec, indices, strict=True)):
            where = f"{path}/rec.{n}"
            if isinstance(item, LiftConstructor):
                if n >= len(rec_args):
                    msg = f"{where}: the base function builds no constructor here"
                    raise SkeletonMismatch(msg)
                self.constructor(item, rec_args[n], orn, _pair(index)[0], scope, where)
            elif self.item(item, scope, where) != 1:
                msg = f"{where}: a recursive argument is a single value"
                raise SkeletonMismatch(msg)


def _leaf(base: Body, k: int, path: str) -> Expr:
    match base:
        case Case() | Ind() | Fold():
            msg = f"{path}: lift-con where the base function still has {base.kind}"
            raise SkeletonMismatch(msg)
        case Values(items=items):
            return items[k]
    return base


@dataclasses.dataclass
class _Frame:
    """Bindings while running a script at one call."""

    args: Results
    scope: dict[str, Bound]
    lifted: dict[str, Value]
    hypotheses: dict[str, Callable[[], Results]]
    target: Results


@dataclasses.dataclass
class _Runner:
    """Run a hole-free script, composing the combinators."""

    sig: PatchSig
    fundef: FunDef
    script: LiftScript
    interpreter: Interpreter
    this: PatchFn | None = None

    def __call__(self: Self, *args: Value) -> Results:
        frame = self.frame(args, _Frame(args, {}, {}, {}, ()), None)
        return self.run(self.script, self.fundef.body, frame)

    def frame(self: Self, args: Results, outer: _Frame, target: Results | None) -> _Frame:
        scope = dict(outer.scope)
        lifted = dict(outer.lifted)
        for k, (name, slot) in enumerate(zip(self.fundef.params, self.sig.args, strict=True)):
            scope[name] = Bound(args[2 * k], slot.base_set)
            lifted[f"{name}++"] = args[2 * k + 1]
        if target is None:
            target = self.sig.base(*self.sig.base_args(args))
        return _Frame(args, scope, lifted, dict(outer.hypotheses), target)

    def run(self: Self, s: LiftScript, base: Body, frame: _Frame) -> Results:
        match s:
            case LiftCase() | LiftInd() | LiftFold():
                assert isinstance(base, Eliminator)  # noqa: S101  # checked by alignment
                position = self.fundef.params.index(s.scrutinee)
                beta = CoherentAlgebra(lambda sc: self.branch(s, base, frame, sc))
                if isinstance(s, LiftFold):
                    carrier = self.sig.results[0].base_set
                    assert isinstance(base, Fold)  # noqa: S101  # checked by alignment
                    alg = self.interpreter.fold_algebra(base, frame.scope, carrier)
                    return lift_fold(self.sig, alg, beta, position)(*frame.args)
                combinator = lift_ind if isinstance(s, LiftInd) else lift_case
                return combinator(self.sig, beta, position)(*frame.args)
            case LiftConstructor():
                slot = self.sig.results[0]
                return (self.constructor(s, slot.orn, slot.witness.j, frame.target[0], frame),)
        out: list[Value] = []
        for item in s.items:
            if isinstance(item, LiftConstructor):
                slot = self.sig.results[len(out)]
                out.append(
                    self.constructor(item, slot.orn, slot.witness.j, frame.target[len(out)], frame)
                )
            else:
                out.extend(self.item(item, frame))
        return tuple(out)

    def branch(
        self: Self,
        s: LiftCase | LiftInd | LiftFold,
        base: Eliminator,
        outer: _Frame,
        sc: Scrutinee,
    ) -> Results:
        slot = self.sig.args[self.fundef.params.index(s.scrutinee)]
        folding = isinstance(s, LiftFold)
        frame = (
            _Frame(
                outer.args,
                dict(outer.scope),
                dict(outer.lifted),
                dict(outer.hypotheses),
                sc.target,
            )
            if folding
            else self.frame(sc.args, outer, sc.target)
        )
        i = slot.orn.re.apply(sc.j)
        tag, fields = destruct(slot.family, i, _node(sc.t))
        script_branch, base_branch = s.branch_for(tag), base.branch_for(tag)
        if script_branch is None:
            raise SkeletonMismatch(f"no script branch for '{tag}")
        children = iter(reorn_children(slot.orn, sc.j, sc.t, sc.t_pp))
        reorn_desc = interp_orn(slot.reorn).at(slot.reorn_index(sc.t))
        subs = iter(positions(reorn_desc, sc.payload)) if not isinstance(s, LiftCase) else None
        for binder, field in zip(base_branch.binders, fields, strict=True):
            if not field.recursive:
                frame.scope[binder] = Bound(field.value, field.set)
                continue
            _, sub_t, sub_pp = next(children)
            match s, (next(subs)[1] if subs is not None else None):
                case LiftFold(), Folded(base=value, lifted=lifted):
                    frame.scope[binder] = Bound(value, self.sig.results[0].base_set)
                    frame.lifted[f"{binder}++"] = lifted
                case LiftInd(), hypothesis:
                    frame.scope[binder] = Bound(sub_t, field.set)
                    frame.lifted[f"{binder}++"] = sub_pp
                    frame.hypotheses[binder] = hypothesis  # type: ignore[assignment]
                case _:
                    frame.scope[binder] = Bound(sub_t, field.set)
                    frame.lifted[f"{binder}++"] = sub_pp
        e, _ = _pair(_node(sc.t_pp))
        oc, d = slot.orn.at(sc.j), slot.orn.base_at(sc.j)
        for label, value in extension_bindings(oc, d, _node(sc.t), e):
            frame.scope[label] = Bound(value)
        return self.run(script_branch.body, base_branch.body, frame)

    def item(self: Self, item: Item, frame: _Frame) -> Results:
        match item:
            case Var(name=name):
                if name not in frame.lifted:
                    raise IllTypedValue(f"{name} is not bound")
                return (frame.lifted[name],)
            case Ih(var=var):
                return frame.hypotheses[var]()
            case SelfCall(args=args):
                assert self.this is not None  # noqa: S101  # set by elaborate_script
                flat = [v for a in args for v in (frame.scope[a].value, frame.lifted[f"{a}++"])]
                return self.this(*flat)
        raise IllTypedValue(f"not a result: {type(item).__name__}")

    def constructor(
        self: Self, s: LiftConstructor, orn: Ornament, j: Value, base_value: Value, frame: _Frame
    ) -> Value:
        xs = _node(base_value)
        oc, d = orn.at(j), orn.base_at(j)
        supplied = iter(s.ext)

        def choose(expected: SetCode) -> Value:
            item = next(supplied, None)
            if item is None or isinstance(item, Hole):
                trivial = _only(expected)
                if trivial is None:
                    raise IllTypedValue(f"no value for {show_set(expected)}", where="extension")
                return trivial
            return self.interpreter.expr(item, frame.scope, {}, expected)

        e = _fill(extension(oc, d, xs), choose, lambda _s, _v: None)
        if e is None:
            raise IllTypedValue("incomplete extension", where="extension")
        desc = interp_code(structure(oc, d, xs, e), interp_code(oc, d))
        values: list[Value] = []
        for item, index in zip(s.rec, _recursive_indices(desc), strict=True):
            if isinstance(item, LiftConstructor):
                sub_j, sub_t = _pair(index)
                values.append(self.constructor(item, orn, sub_j, sub_t, frame))
            else:
                (value,) = self.item(item, frame)
                values.append(value)
        lifted = lift_constructor(orn, j, xs, e, _assemble(desc, values))
        assert isinstance(lifted, VPair)  # noqa: S101
        return lifted.fst


def elaborate_script(
    script: LiftScript, against: tuple[FunType, FunOrn, BaseFn], name: str = ""
) -> PatchFn | HoleReport:
    """
    Align ``script`` with the body of the base function and build the lifting.

    Returns the ``HoleReport`` when inserted data is left open, the composed
    ``PatchFn`` otherwise.
    """
    fun_type, fun_orn, f = against
    sig = patch_sig(fun_type, fun_orn, f)
    fundef = f.skeleton
    if fundef is None:
        msg = f"{f.name or 'the base function'} has no recorded body to follow"
        raise SkeletonMismatch(msg)
    report = HoleReport(name)
    scope = _Static(dict.fromkeys(fundef.params), set(fundef.params), set())
    _Aligner(sig, fundef, report).script(script, fundef.body, scope, name or fundef.name)
    logger.debug(
        "script %s: %d open, %d solved", name, len(report.holes), len(report.solved)
    )
    if report.holes:
        return report
    interpreter = f.run if isinstance(f.run, Interpreter) else Interpreter(fundef, _no_calls)
    runner = _Runner(sig, fundef, script, interpreter)
    lifted = PatchFn(sig, runner, name=name)
    runner.this = lifted
    return lifted


def _no_calls(fn: str) -> BaseFn:
    msg = f"no function {fn} in scope"
    raise IllTypedValue(msg)
