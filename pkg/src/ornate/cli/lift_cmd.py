"""The ornate lift command."""

from __future__ import annotations

import typer
from typing_extensions import Annotated

from ornate.cli import params
from ornate.cli.app import app
from ornate.cli.session import FAILED, Session, guard
from ornate.core import show_set
from ornate.funorn import check_patch_fn
from ornate.lift import HoleReport

__all__ = ["lift"]


@app.command()
def lift(
    name: Annotated[str, typer.Argument(help="A lifting declared with (lift ...).")],
    depth: params.Depth = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """
    Show what a lifting script still needs, or what it built.

    Open holes are printed one per line with the set they must inhabit. A
    complete script prints its patch signature and is checked on every
    enumerated input.
    """
    session = Session.open(depth, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        lifting = session.env.lifting(name, (name,))
        if isinstance(lifting, HoleReport):
            holes = [
                {"path": goal.path, "expected": show_set(goal.expected), "context": goal.context}
                for goal in lifting.holes
            ]
            session.emit(lifting.render(), {"name": name, "holes": holes})
            session.comms.next_step(
                f"""
                fill the holes of `{name}` with `(ext VALUE)` using the names in scope:
                {", ".join(sorted({n for goal in lifting.holes for n in goal.context}))}
                """
            )
            return
        report = check_patch_fn(lifting.sig, lifting, session.budget)
    if session.json:
        session.comms.say(report.as_json())
    else:
        session.comms.lines([*lifting.sig.render(), *report.render(quiet=session.quiet)])
    if not report.passed:
        raise typer.Exit(code=FAILED)
