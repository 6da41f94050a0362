"""
The ornate verify commands.

Every command sweeps the inputs enumerable to ``--depth``, prints a report
and exits with 1 when a counterexample was found.
"""

from __future__ import annotations

import typer
from typing_extensions import Annotated

from ornate.algebraic import AlgOrnament, Reorn, recomputation_check, reorn_roundtrip
from ornate.cli import params
from ornate.cli.app import verify
from ornate.cli.session import FAILED, Session, guard
from ornate.funorn import (
    LiftedFn,
    PatchFn,
    check_patch_fn,
    coherence_check,
    coherence_witness,
    patch,
)
from ornate.report import VerificationReport
from ornate.surface import Env

__all__ = ["coherence", "patch_cmd", "recomputation", "roundtrip"]


def _finish(session: Session, report: VerificationReport) -> None:
    if session.json:
        session.comms.say(report.as_json())
    else:
        session.comms.lines(report.render(quiet=session.quiet))
    if not report.passed:
        session.comms.report_fail(f"counterexample: {report.failures[0].render()}")
        raise typer.Exit(code=FAILED)
    session.comms.report_success(report.summary())


def _complete_lifting(env: Env, name: str) -> PatchFn:
    lifting = env.lifting(name, (name,))
    if not isinstance(lifting, PatchFn):
        msg = f"{name} still has {len(lifting.holes)} open holes"
        raise params.usage_error(msg)
    return lifting


@verify.command()
def coherence(
    targets: Annotated[
        list[str], typer.Argument(metavar="FUNORN FUNCTION LIFTED | LIFTING")
    ],
    depth: params.Depth = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """Check that forgetting the lifted results gives the base results."""
    session = Session.open(depth, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        env = session.env
        match targets:
            case [funorn, base, lifted]:
                fun_orn = env.funorn(funorn, (funorn,)).orn
                f = env.function(base, (base,))
                f_plus = env.applicable(lifted, (lifted,))
                if isinstance(f_plus, PatchFn):
                    f_plus = patch(fun_orn, f, f_plus, name=lifted)
                if not isinstance(f_plus, LiftedFn):
                    raise params.usage_error(f"{lifted} is a {env.kind(lifted)}, not a lifting")
            case [name]:
                p = _complete_lifting(env, name)
                fun_orn, f = p.sig.fun_orn, p.sig.base
                f_plus = patch(fun_orn, f, p, name=name)
            case _:
                raise params.usage_error("coherence takes FUNORN FUNCTION LIFTED or a lifting")
        report = coherence_check(fun_orn, f, f_plus, session.budget)
    _finish(session, report)


@verify.command("patch")
def patch_cmd(
    name: Annotated[str, typer.Argument(metavar="LIFTING")],
    depth: params.Depth = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """Check every result of a lifting against its reornament index."""
    session = Session.open(depth, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        p = _complete_lifting(session.env, name)
        report = check_patch_fn(p.sig, p, session.budget)
    _finish(session, report)


@verify.command()
def roundtrip(
    name: Annotated[str, typer.Argument(metavar="ORNAMENT")],
    depth: params.Depth = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """Check that remembering and forgetting the reornament are inverse."""
    session = Session.open(depth, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        orn = session.env.ornament(name, (name,))
        report = reorn_roundtrip(orn, session.single_depth)
    _finish(session, report)


@verify.command()
def recomputation(
    name: Annotated[str, typer.Argument(metavar="ALGEBRAIC | LIFTING")],
    depth: params.Depth = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """
    Check that forgetting recomputes the index.

    For an algebraic ornament or a reornament every inhabitant is checked;
    for a lifting every result against the base result.
    """
    session = Session.open(depth, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        env = session.env
        match env.lookup(name, (name,)):
            case AlgOrnament() | Reorn() as orn:
                report = recomputation_check(orn, session.single_depth)
            case PatchFn() as p:
                report = coherence_witness(p.sig.fun_orn, p.sig.base, p, session.budget)
            case _:
                msg = f"{name} is a {env.kind(name)}, not an algebraic ornament or a lifting"
                raise params.usage_error(msg)
    _finish(session, report)
