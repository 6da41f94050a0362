"""Parameter types for the ornate commandline."""

from __future__ import annotations

import pathlib

import typer
from typing_extensions import Annotated

from ornate.core import EnumSet
from ornate.surface.env import tag_set

__all__ = [
    "USAGE",
    "ConfigFile",
    "Depth",
    "Files",
    "Index",
    "Json",
    "Params",
    "Quiet",
    "Verbose",
    "parse_depth",
    "parse_param",
    "usage_error",
]

# exit code of invalid commandline input
USAGE = 3

Depth = Annotated[
    str | None,
    typer.Option(
        "--depth",
        "-d",
        help="Enumeration depth; a comma separated list gives one depth per argument.",
        show_default="3, or the project config",
    ),
]
Params = Annotated[
    list[str] | None,
    typer.Option("--param", "-p", help="Instantiate a set parameter, as in A=tags:x,y."),
]
Files = Annotated[
    list[pathlib.Path] | None,
    typer.Option("--file", "-f", help="Load declarations from this file after the prelude."),
]
ConfigFile = Annotated[
    pathlib.Path | None,
    typer.Option("--config", help="Project config file.", show_default="./ornate.yaml"),
]
Quiet = Annotated[bool, typer.Option("--quiet", "-q", help="Only print failures.")]
Verbose = Annotated[bool, typer.Option("--verbose", "-v", help="Log progress.")]
Json = Annotated[bool, typer.Option("--json", help="Print a machine-readable report.")]
Index = Annotated[
    str | None, typer.Option("--index", "-i", help="The index to work at, as a value.")
]


def usage_error(msg: str) -> typer.Exit:
    """Report a commandline mistake and build the exit to raise."""
    typer.echo(f"Error: {msg}", err=True)
    return typer.Exit(code=USAGE)


def parse_depth(text: str) -> tuple[int, ...]:
    """
    Read a depth budget.

    >>> parse_depth("5,4")
    (5, 4)
    """
    try:
        depths = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise usage_error(f"--depth takes naturals separated by commas, got {text!r}") from None
    if any(d < 0 for d in depths):
        raise usage_error(f"--depth must not be negative, got {text!r}")
    return depths


def parse_param(text: str) -> tuple[str, EnumSet]:
    """
    Read a parameter instantiation.

    >>> parse_param("A=tags:x,y")
    ('A', EnumSet(tags=('x', 'y'), name='A'))
    """
    name, sep, spec = text.partition("=")
    kind, colon, tags = spec.partition(":")
    if not (sep and colon and name and kind == "tags"):
        raise usage_error(f"--param takes NAME=tags:T1,T2,..., got {text!r}")
    names = tuple(tag for tag in tags.split(",") if tag)
    if len(set(names)) != len(names):
        raise usage_error(f"--param {name} repeats a tag")
    return name, tag_set(name, names)
