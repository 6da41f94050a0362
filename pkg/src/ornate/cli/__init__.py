"""
The ornate CLI.

Commands:
- check: elaborate declaration files and list what they define
- derive / reorn / forget: inspect ornaments and their reornaments
- enumerate: list the inhabitants of a set to a depth
- eval: apply a function to values
- lift: show the holes of a lifting script, or check the patch it built
- verify: coherence, patch, roundtrip and recomputation sweeps
"""

from __future__ import annotations

from collections.abc import Sequence

import click

from ornate.cli import (
    check_cmd,
    derive_cmd,
    enumerate_cmd,
    eval_cmd,
    lift_cmd,
    params,
    verify_cmd,
)
from ornate.cli.app import app

__all__ = [
    "app",
    "check_cmd",
    "derive_cmd",
    "enumerate_cmd",
    "eval_cmd",
    "lift_cmd",
    "main",
    "verify_cmd",
]


def main(args: Sequence[str] | None = None) -> int:
    """Run the commandline; commandline mistakes exit with the usage code."""
    try:
        result = app(
            args=list(args) if args is not None else None,
            prog_name="ornate",
            standalone_mode=False,
        )
    except click.ClickException as err:
        err.show()
        return params.USAGE
    return result if isinstance(result, int) else 0
