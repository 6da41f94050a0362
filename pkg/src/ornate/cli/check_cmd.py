"""The ornate check command."""

from __future__ import annotations

import pathlib

import typer
from typing_extensions import Annotated

from ornate.cli import params
from ornate.cli.app import app
from ornate.cli.session import Session, guard
from ornate.surface import load_text, parse
from ornate.surface.syntax import declarations

__all__ = ["check"]


@app.command()
def check(
    files: Annotated[
        list[pathlib.Path], typer.Argument(help="Source files to parse and elaborate.")
    ],
    param: params.Params = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """Parse and elaborate FILES on top of the prelude, in the order given."""
    session = Session.open(None, param, None, config, quiet=quiet, verbose=verbose, json=json)
    missing = [str(path) for path in files if not path.is_file()]
    if missing:
        raise params.usage_error(f"no such file: {', '.join(missing)}")
    results: dict[str, list[dict[str, str]]] = {}
    lines: list[str] = []
    with guard(session.comms):
        env = session.env
        for path in files:
            text = path.read_text(encoding="utf-8")
            names = [decl.name for decl in declarations(parse(text, str(path)))]
            env = load_text(text, env, str(path))
            results[str(path)] = [{"name": name, "kind": env.kind(name)} for name in names]
            lines.extend(f"{path}: {name} : {env.kind(name)}" for name in names)
            session.comms.report_success(f"{path}: {len(names)} declarations")
    session.emit(lines, results)
