"""CLI typer app."""

from __future__ import annotations

import typer

__all__ = ["app", "verify"]


app = typer.Typer(name="ornate", no_args_is_help=True, pretty_exceptions_enable=False)
app.add_typer(
    verify := typer.Typer(no_args_is_help=True),
    name="verify",
    help="Sweep enumerated inputs and report counterexamples.",
)
