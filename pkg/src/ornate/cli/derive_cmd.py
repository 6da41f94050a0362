"""The ornate derive, reorn and forget commands."""

from __future__ import annotations

import typer
from typing_extensions import Annotated

from ornate.algebraic import reornament
from ornate.cli import params
from ornate.cli.app import app
from ornate.cli.session import Session, guard
from ornate.core import MuSet, check_value, enumerate_set, show_desc, show_value
from ornate.ornament import interp_orn, orn_forget

__all__ = ["derive", "forget", "reorn"]


@app.command()
def derive(
    name: Annotated[str, typer.Argument(help="A datatype or an ornament.")],
    index: params.Index = None,
    depth: params.Depth = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """Print the description of NAME at an index, then its inhabitants."""
    session = Session.open(depth, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        family = session.env.family(name, (name,))
        idx = session.index(family, index)
        desc = show_desc(family.at(idx))
        values = enumerate_set(MuSet(family, idx), session.single_depth)
    session.emit(
        [desc, *(show_value(v) for v in values)],
        {"name": name, "index": idx, "description": desc, "inhabitants": list(values)},
    )


@app.command()
def reorn(
    name: Annotated[str, typer.Argument(help="An ornament.")],
    index: params.Index = None,
    depth: params.Depth = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """
    Print the reornament of NAME.

    With --index, the description and inhabitants at that index; otherwise
    the description over every base value up to the depth.
    """
    session = Session.open(depth, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        orn = session.env.ornament(name, (name,))
        family = interp_orn(reornament(orn))
        if index is not None:
            idx = session.index(family, index)
            desc = show_desc(family.at(idx))
            values = enumerate_set(MuSet(family, idx), session.single_depth)
            data = {"name": family.name, "index": idx, "description": desc}
            session.emit([desc, *(show_value(v) for v in values)], data | {"inhabitants": values})
            return
        indices = enumerate_set(family.index_set, session.single_depth)
        rows = [(idx, show_desc(family.at(idx))) for idx in indices]
    session.emit(
        [f"{show_value(idx)} : {desc}" for idx, desc in rows],
        {"name": family.name, "descriptions": [{"index": i, "description": d} for i, d in rows]},
    )


@app.command()
def forget(
    name: Annotated[str, typer.Argument(help="An ornament.")],
    value: Annotated[str, typer.Argument(help="An inhabitant of the ornamented datatype.")],
    index: params.Index = None,
    param: params.Params = None,
    file: params.Files = None,
    config: params.ConfigFile = None,
    quiet: params.Quiet = False,
    verbose: params.Verbose = False,
    json: params.Json = False,
) -> None:
    """Forget the ornament NAME on VALUE, printing the base value."""
    session = Session.open(None, param, file, config, quiet=quiet, verbose=verbose, json=json)
    with guard(session.comms):
        orn = session.env.ornament(name, (name,))
        ornamented = interp_orn(orn)
        j = session.index(ornamented, index)
        v = session.value(value, "VALUE")
        if not check_value(MuSet(ornamented, j), v):
            msg = f"{show_value(v)} is not in {name} at {show_value(j)}"
            raise params.usage_error(msg)
        base = orn_forget(orn, j, v)
    session.emit([show_value(base)], {"name": name, "value": v, "forgotten": base})
