"""
Algebraic ornaments and reornaments.

``algebraic_ornament(D, α)`` indexes ``μD`` by the result of folding ``α``;
``reornament(O)`` is the algebraic ornament of ``interp_orn(O)`` by the
ornamental algebra of ``O``, built directly in its forced and detagged form
from ``extension`` and ``structure``.
"""

from __future__ import annotations

import dataclasses
import functools
import logging
from collections.abc import Callable

from ornate.core import (
    UNIT,
    Algebra,
    Desc,
    DescFun,
    DOne,
    DPi,
    DSigma,
    DVar,
    EqSet,
    MuSet,
    PiSet,
    SetCode,
    SigmaSet,
    UnitSet,
    VFun,
    VIn,
    VPair,
    VRefl,
    Value,
    apply_fun,
    check_value,
    const,
    enumerate_set,
    equal_value,
    fold,
    map_payload,
    payload_set,
    show_set,
    show_value,
)
from ornate.errors import IllFormedAlgebra, IllFormedOrnament, IllTypedValue, OrnateError
from ornate.ornament import (
    InvWitness,
    ODelete,
    OInsert,
    OOne,
    OPi,
    OrnCode,
    Ornament,
    OSigma,
    OVar,
    Reindexing,
    interp_orn,
    orn_forget,
)
from ornate.report import CheckRecord, VerificationReport

__all__ = [
    "AlgOrnament",
    "Reorn",
    "algebraic_ornament",
    "assert_recomputation",
    "extension",
    "extension_bindings",
    "forget_reorn",
    "recomputation_check",
    "remember",
    "remember_reorn",
    "reorn_children",
    "reorn_roundtrip",
    "reornament",
    "structure",
]

logger = logging.getLogger(__name__)


def _fst(value: Value) -> Value:
    if not isinstance(value, VPair):
        raise IllTypedValue(f"expected an index pair, got {show_value(value)}")
    return value.fst


def _split(value: Value) -> tuple[Value, Value]:
    if not isinstance(value, VPair):
        raise IllTypedValue(f"expected a pair, got {show_value(value)}")
    return value.fst, value.snd


def _node(value: Value) -> Value:
    if not isinstance(value, VIn):
        raise IllTypedValue(f"expected an inductive node, got {show_value(value)}")
    return value.payload


@dataclasses.dataclass(frozen=True)
class AlgOrnament(Ornament):
    """The ornament ``D^α`` over ``Σ(i : I). X i``, reindexed by first projection."""

    algebra: Algebra = dataclasses.field(kw_only=True)


@dataclasses.dataclass(frozen=True)
class Reorn(Ornament):
    """The reornament of ``source``, over ``Σ(j : J). μ(base (re j))``."""

    source: Ornament = dataclasses.field(kw_only=True)


# algebraic ornaments


@functools.cache
def algebraic_ornament(family: DescFun, alg: Algebra) -> AlgOrnament:
    """Index ``family`` by the fold of ``alg``."""

    def at(index: Value) -> OrnCode:
        i, x = _split(index)
        return _alg_code(family.at(i), lambda payload: payload, i, x, alg)

    return AlgOrnament(
        family,
        Reindexing(SigmaSet(family.index_set, alg.carrier_at), family.index_set, _fst),
        at,
        name=f"{family.name}^{alg.name}",
        algebra=alg,
    )


def _constraint(alg: Algebra, i: Value, payload: Value, x: Value) -> EqSet:
    carrier = alg.carrier_at(i)
    result = alg.step(i, payload)
    if not check_value(carrier, result):
        raise IllFormedAlgebra(
            f"{alg.name or 'algebra'} produced {show_value(result)} outside {show_set(carrier)}"
        )
    return EqSet(carrier, result, x)


def _alg_code(
    d: Desc, rebuild: Callable[[Value], Value], i: Value, x: Value, alg: Algebra
) -> OrnCode:
    # rebuild closes the payload chosen so far into a whole node payload
    match d:
        case DVar(index=sub):
            return OInsert(
                alg.carrier_at(sub),
                lambda y: OInsert(
                    _constraint(alg, i, rebuild(y), x),
                    const(OVar(InvWitness(VPair(sub, y), sub))),
                ),
            )
        case DOne():
            return OInsert(_constraint(alg, i, rebuild(UNIT), x), const(OOne()))
        case DSigma(fam=fam):
            return OSigma(
                lambda s: _alg_code(fam(s), lambda rest: rebuild(VPair(s, rest)), i, x, alg)
            )
        case DPi():
            # all sub-results of a function field are chosen up front
            return OInsert(
                payload_set(d, alg.carrier_at),
                lambda f: OInsert(
                    _constraint(alg, i, rebuild(f), x), const(_refine(d, f))
                ),
            )
    raise IllFormedOrnament(f"not a description: {d!r}")


def _refine(d: Desc, payload: Value) -> OrnCode:
    match d:
        case DVar(index=sub):
            return OVar(InvWitness(VPair(sub, payload), sub))
        case DOne():
            return OOne()
        case DSigma(fam=fam):
            s, rest = _split(payload)
            return ODelete(s, _refine(fam(s), rest))
        case DPi(fam=fam):
            return OPi(lambda s: _refine(fam(s), apply_fun(payload, s)))
    raise IllFormedOrnament(f"not a description: {d!r}")


def remember(family: DescFun, alg: Algebra, i: Value, t: Value) -> Value:
    """Send ``t : μ(family i)`` to ``μ(family^alg)`` at ``(i, fold alg t)``."""
    return _remember(family, alg, i, t)[1]


def _remember(
    family: DescFun, alg: Algebra, i: Value, t: Value
) -> tuple[Value, Value]:
    d = family.at(i)
    sub = map_payload(d, lambda j, s: _remember(family, alg, j, s), _node(t))
    x = alg.step(i, _results(d, sub))
    return x, VIn(_remember_payload(d, sub))


def _results(d: Desc, sub: Value) -> Value:
    return map_payload(d, lambda _j, pair: pair[0], sub)  # type: ignore[index]


def _remember_payload(d: Desc, sub: Value) -> Value:
    match d:
        case DVar():
            x, value = sub  # type: ignore[misc]
            return VPair(x, VPair(VRefl(), value))
        case DOne():
            return VPair(VRefl(), UNIT)
        case DSigma(fam=fam):
            s, rest = _split(sub)
            return VPair(s, _remember_payload(fam(s), rest))
        case DPi():
            return VPair(_results(d, sub), VPair(VRefl(), _refined_payload(d, sub)))
    raise IllFormedOrnament(f"not a description: {d!r}")


def _refined_payload(d: Desc, sub: Value) -> Value:
    match d:
        case DVar():
            return sub[1]  # type: ignore[index]
        case DOne():
            return UNIT
        case DSigma(fam=fam):
            s, rest = _split(sub)
            return _refined_payload(fam(s), rest)
        case DPi(fam=fam):
            if not isinstance(sub, VFun):
                raise IllTypedValue("expected a function payload")
            return VFun(tuple((k, _refined_payload(fam(k), r)) for k, r in sub.table))
    raise IllFormedOrnament(f"not a description: {d!r}")


def assert_recomputation(orn: AlgOrnament | Reorn, idx: Value, t_alpha: Value) -> bool:
    """
    Check that forgetting ``t_alpha`` recomputes its index.

    For ``D^α`` at ``(i, x)``: ``fold α (forget t_alpha) = x``. For a
    reornament at ``(j, t)``: forgetting down to the base gives back ``t``.
    """
    if not check_value(MuSet(interp_orn(orn), idx), t_alpha):
        raise IllTypedValue(
            f"{show_value(t_alpha)} is not in {orn.name} at {show_value(idx)}"
        )
    first, second = _split(idx)
    match orn:
        case Reorn(source=source):
            t_plus = _forget_reorn(source, idx, t_alpha)
            base = orn_forget(source, first, t_plus)
            return equal_value(MuSet(source.base, source.re.apply(first)), base, second)
        case AlgOrnament(algebra=alg):
            base = orn_forget(orn, idx, t_alpha)
            return equal_value(alg.carrier_at(first), fold(orn.base, alg, first, base), second)
    msg = f"not an algebraic ornament: {orn.name}"
    raise TypeError(msg)


# reornaments


def extension(oc: OrnCode, d: Desc, xs: Value) -> SetCode:
    """The data ``oc`` adds on top of the base node payload ``xs`` of ``d``."""
    match oc, d:
        case (OVar(), DVar()) | (OOne(), DOne()):
            return UnitSet()
        case OPi(fam=fam), DPi(dom=dom, fam=dfam):
            return PiSet(dom, lambda s: extension(fam(s), dfam(s), apply_fun(xs, s)))
        case OSigma(fam=fam), DSigma(fam=dfam):
            s, rest = _split(xs)
            return extension(fam(s), dfam(s), rest)
        case OInsert(s=s, fam=fam), _:
            return SigmaSet(s, lambda v: extension(fam(v), d, xs))
        case ODelete(replacement=r, rest=rest), DSigma(dom=dom, fam=dfam):
            s, rest_xs = _split(xs)
            return SigmaSet(EqSet(dom, s, r), lambda _: extension(rest, dfam(r), rest_xs))
    raise IllFormedOrnament(f"{type(oc).__name__} cannot ornament {type(d).__name__}")


def structure(oc: OrnCode, d: Desc, xs: Value, e: Value) -> OrnCode:
    """The recursive skeleton of the reornament node, everything else deleted."""
    match oc, d:
        case OVar(witness=w), DVar():
            return OVar(InvWitness(VPair(w.j, xs), w.j))
        case OOne(), DOne():
            return OOne()
        case OPi(fam=fam), DPi(fam=dfam):
            return OPi(
                lambda s: structure(fam(s), dfam(s), apply_fun(xs, s), apply_fun(e, s))
            )
        case OSigma(fam=fam), DSigma(fam=dfam):
            s, rest = _split(xs)
            return ODelete(s, structure(fam(s), dfam(s), rest, e))
        case OInsert(fam=fam), _:
            v, rest_e = _split(e)
            return ODelete(v, structure(fam(v), d, xs, rest_e))
        case ODelete(replacement=r, rest=rest), DSigma(fam=dfam):
            _, rest_xs = _split(xs)
            _, rest_e = _split(e)
            return structure(rest, dfam(r), rest_xs, rest_e)
    raise IllFormedOrnament(f"{type(oc).__name__} cannot ornament {type(d).__name__}")


@functools.cache
def reornament(o: Ornament) -> Reorn:
    """The reornament of ``o``: ornamented values indexed by their forgotten shape."""
    ornamented = interp_orn(o)

    def at(index: Value) -> OrnCode:
        j, t = _split(index)
        xs = _node(t)
        oc, d = o.at(j), o.base_at(j)
        return OInsert(extension(oc, d, xs), lambda e: structure(oc, d, xs, e))

    return Reorn(
        ornamented,
        Reindexing(
            SigmaSet(o.re.fine, lambda j: MuSet(o.base, o.re.apply(j))),
            o.re.fine,
            _fst,
        ),
        at,
        name=f"{o.name}^",
        source=o,
    )


def remember_reorn(o: Ornament, j: Value, t_plus: Value) -> tuple[Value, Value]:
    """Split ``t_plus`` into its base value ``t`` and its reornament inhabitant."""
    if not check_value(MuSet(interp_orn(o), j), t_plus):
        raise IllTypedValue(f"{show_value(t_plus)} is not in {o.name} at {show_value(j)}")
    return _remember_reorn(o, j, t_plus)


def _remember_reorn(o: Ornament, j: Value, t_plus: Value) -> tuple[Value, Value]:
    xs, e, a = _remember_node(o, o.at(j), o.base_at(j), _node(t_plus))
    return VIn(xs), VIn(VPair(e, a))


def _remember_node(
    o: Ornament, oc: OrnCode, d: Desc, v: Value
) -> tuple[Value, Value, Value]:
    match oc, d:
        case OVar(witness=w), DVar():
            t, t_pp = _remember_reorn(o, w.j, v)
            return t, UNIT, t_pp
        case OOne(), DOne():
            return UNIT, UNIT, UNIT
        case OPi(fam=fam), DPi(fam=dfam):
            if not isinstance(v, VFun):
                raise IllTypedValue(f"expected a function, got {show_value(v)}")
            triples = [(k, _remember_node(o, fam(k), dfam(k), r)) for k, r in v.table]
            return tuple(  # type: ignore[return-value]
                VFun(tuple((k, triple[n]) for k, triple in triples)) for n in range(3)
            )
        case OSigma(fam=fam), DSigma(fam=dfam):
            s, rest = _split(v)
            xs, e, a = _remember_node(o, fam(s), dfam(s), rest)
            return VPair(s, xs), e, a
        case OInsert(fam=fam), _:
            s, rest = _split(v)
            xs, e, a = _remember_node(o, fam(s), d, rest)
            return xs, VPair(s, e), a
        case ODelete(replacement=r, rest=rest), DSigma(fam=dfam):
            xs, e, a = _remember_node(o, rest, dfam(r), v)
            return VPair(r, xs), VPair(VRefl(), e), a
    raise IllFormedOrnament(f"{type(oc).__name__} cannot ornament {type(d).__name__}")


def forget_reorn(o: Ornament, idx: Value, t_pp: Value) -> Value:
    """Rebuild the ornamented value from its index and reornament inhabitant."""
    if not check_value(MuSet(interp_orn(reornament(o)), idx), t_pp):
        raise IllTypedValue(
            f"{show_value(t_pp)} is not in {o.name}^ at {show_value(idx)}"
        )
    return _forget_reorn(o, idx, t_pp)


def _forget_reorn(o: Ornament, idx: Value, t_pp: Value) -> Value:
    j, t = _split(idx)
    e, a = _split(_node(t_pp))
    return VIn(_forget_node(o, o.at(j), o.base_at(j), _node(t), e, a))


def _forget_node(
    o: Ornament, oc: OrnCode, d: Desc, xs: Value, e: Value, a: Value
) -> Value:
    match oc, d:
        case OVar(witness=w), DVar():
            return _forget_reorn(o, VPair(w.j, xs), a)
        case OOne(), DOne():
            return UNIT
        case OPi(fam=fam), DPi(fam=dfam):
            if not isinstance(xs, VFun):
                raise IllTypedValue(f"expected a function, got {show_value(xs)}")
            return VFun(
                tuple(
                    (k, _forget_node(o, fam(k), dfam(k), r, apply_fun(e, k), apply_fun(a, k)))
                    for k, r in xs.table
                )
            )
        case OSigma(fam=fam), DSigma(fam=dfam):
            s, rest = _split(xs)
            return VPair(s, _forget_node(o, fam(s), dfam(s), rest, e, a))
        case OInsert(fam=fam), _:
            v, rest_e = _split(e)
            return VPair(v, _forget_node(o, fam(v), d, xs, rest_e, a))
        case ODelete(replacement=r, rest=rest), DSigma(fam=dfam):
            _, rest_xs = _split(xs)
            _, rest_e = _split(e)
            return _forget_node(o, rest, dfam(r), rest_xs, rest_e, a)
    raise IllFormedOrnament(f"{type(oc).__name__} cannot ornament {type(d).__name__}")


def reorn_children(
    o: Ornament, j: Value, t: Value, t_pp: Value
) -> list[tuple[Value, Value, Value]]:
    """
    The recursive positions of a reornament node, in payload order.

    Each entry is ``(j', t', t'⁺⁺)``: the fine index, the base sub-tree and the
    reornament sub-tree.
    """
    e, a = _split(_node(t_pp))
    out: list[tuple[Value, Value, Value]] = []
    _children(o.at(j), o.base_at(j), _node(t), e, a, out)
    return out


def _children(
    oc: OrnCode,
    d: Desc,
    xs: Value,
    e: Value,
    a: Value,
    out: list[tuple[Value, Value, Value]],
) -> None:
    match oc, d:
        case OVar(witness=w), DVar():
            out.append((w.j, xs, a))
        case OPi(fam=fam), DPi(fam=dfam) if isinstance(xs, VFun):
            for k, r in xs.table:
                _children(fam(k), dfam(k), r, apply_fun(e, k), apply_fun(a, k), out)
        case OSigma(fam=fam), DSigma(fam=dfam):
            s, rest = _split(xs)
            _children(fam(s), dfam(s), rest, e, a, out)
        case OInsert(fam=fam), _:
            v, rest_e = _split(e)
            _children(fam(v), d, xs, rest_e, a, out)
        case ODelete(replacement=r, rest=rest), DSigma(fam=dfam):
            _children(rest, dfam(r), _split(xs)[1], _split(e)[1], a, out)


def extension_bindings(oc: OrnCode, d: Desc, xs: Value, e: Value) -> list[tuple[str, Value]]:
    """The labelled inserted values of an extension, in order."""
    out: list[tuple[str, Value]] = []
    _bindings(oc, d, xs, e, out)
    return out


def _bindings(
    oc: OrnCode, d: Desc, xs: Value, e: Value, out: list[tuple[str, Value]]
) -> None:
    match oc, d:
        case OSigma(fam=fam), DSigma(fam=dfam):
            s, rest = _split(xs)
            _bindings(fam(s), dfam(s), rest, e, out)
        case OInsert(fam=fam, label=label), _:
            v, rest_e = _split(e)
            if label:
                out.append((label, v))
            _bindings(fam(v), d, xs, rest_e, out)
        case ODelete(replacement=r, rest=rest), DSigma(fam=dfam):
            _bindings(rest, dfam(r), _split(xs)[1], _split(e)[1], out)


# sweeps


def reorn_roundtrip(o: Ornament, depth: int) -> VerificationReport:
    """
    Check that ``remember_reorn`` and ``forget_reorn`` are mutually inverse.

    Every ornamented value up to ``depth`` must survive remember then forget,
    and every reornament inhabitant over a base value up to ``depth`` must
    survive forget then remember.
    """
    report = VerificationReport("roundtrip", o.name, (depth,))
    ornamented = interp_orn(o)
    reorn = interp_orn(reornament(o))
    for j in enumerate_set(o.re.fine, depth):
        for t_plus in enumerate_set(MuSet(ornamented, j), depth):
            try:
                t, t_pp = remember_reorn(o, j, t_plus)
                back = forget_reorn(o, VPair(j, t), t_pp)
            except OrnateError as err:
                report.add(CheckRecord((j, t_plus), passed=False, note=str(err)))
                continue
            passed = equal_value(MuSet(ornamented, j), back, t_plus)
            report.add(CheckRecord((j, t_plus), (t_plus,), (back,), passed, "forget ∘ remember"))
        for t in enumerate_set(MuSet(o.base, o.re.apply(j)), depth):
            idx = VPair(j, t)
            for t_pp in enumerate_set(MuSet(reorn, idx), depth):
                try:
                    again = remember_reorn(o, j, forget_reorn(o, idx, t_pp))
                except OrnateError as err:
                    report.add(CheckRecord((idx, t_pp), passed=False, note=str(err)))
                    continue
                note = "remember ∘ forget"
                report.add(CheckRecord((idx, t_pp), (t, t_pp), again, again == (t, t_pp), note))
    logger.debug(report.summary())
    return report


def recomputation_check(orn: AlgOrnament | Reorn, depth: int) -> VerificationReport:
    """Run ``assert_recomputation`` on every inhabitant enumerable to ``depth``."""
    report = VerificationReport("recomputation", orn.name, (depth,))
    family = interp_orn(orn)
    for idx in enumerate_set(orn.re.fine, depth):
        for t_alpha in enumerate_set(MuSet(family, idx), depth):
            try:
                passed = assert_recomputation(orn, idx, t_alpha)
            except OrnateError as err:
                report.add(CheckRecord((idx, t_alpha), passed=False, note=str(err)))
                continue
            report.add(CheckRecord((idx, t_alpha), passed=passed))
    logger.debug(report.summary())
    return report
