"""The ornate eval command."""

from __future__ import annotations

import typer
from typing_extensions import Annotated

from ornate.cli import params
from ornate.cli.app import app
from ornate.cli.session import Session, guard
from ornate.core import show_value
from ornate.surface import read_one
from ornate.surface.sexpr import Atom, SList

__all__ = ["eval_cmd"]


@app.command("eval")
def eval_cmd(
    expr: Annotated[str, typer.Argument(metavar="EXPR", help="An application (NAME ARG ...).")],
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """
    Apply a function to values and print its results.

    Base and lifted functions take one value per argument; liftings take a
    base value followed by its reornament inhabitant for every argument.
    """
    session = Session.open(None, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        match read_one(expr):
            case SList(items=(Atom() as head, *args)) if head.is_name:
                fn = session.env.applicable(head.text, (head.text,))
                terms = session.terms(head.text)
                values = [terms.value(arg, {}) for arg in args]
            case _:
                raise params.usage_error(f"expected (NAME ARG ...), got {expr!r}")
        results = fn(*values)
    session.emit(
        [show_value(r) for r in results],
        {"function": head.text, "arguments": values, "results": results},
    )
