"""The ornate enumerate command."""

from __future__ import annotations

import typer
from typing_extensions import Annotated

from ornate.cli import params
from ornate.cli.app import app
from ornate.cli.session import Session, guard
from ornate.core import enumerate_set, show_set, show_value
from ornate.surface import read_one

__all__ = ["enumerate_cmd"]


@app.command("enumerate")
def enumerate_cmd(
    set_expr: Annotated[str, typer.Argument(metavar="SET", help="A set expression.")],
    depth: params.Depth = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """Print the inhabitants of SET whose nodes nest at most --depth deep."""
    session = Session.open(depth, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        s = session.terms("SET").set_expr(read_one(set_expr), {})
        values = enumerate_set(s, session.single_depth)
    session.comms.report_success(f"{len(values)} inhabitants of {show_set(s)}")
    session.emit([show_value(v) for v in values], {"set": show_set(s), "inhabitants": values})
