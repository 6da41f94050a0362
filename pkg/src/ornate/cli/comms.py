"""User communication utils for the ornate commandline."""

from __future__ import annotations

import dataclasses
import logging
import textwrap
from collections.abc import Iterable

import rich.console
import rich.logging
import rich.markdown

__all__ = ["Communicator", "configure_logging"]


def _stdout() -> rich.console.Console:
    return rich.console.Console(highlight=False, soft_wrap=True)


def _stderr() -> rich.console.Console:
    return rich.console.Console(stderr=True, highlight=False, soft_wrap=True)


@dataclasses.dataclass
class Communicator:
    """
    Standardize user communication from the ornate cli.

    Results go to standard output verbatim; status and failures go to
    standard error so that reports stay byte-stable.
    """

    console: rich.console.Console = dataclasses.field(default_factory=_stdout)
    errors: rich.console.Console = dataclasses.field(default_factory=_stderr)
    quiet: bool = False

    def task(self, msg: str) -> rich.console.Status:
        """Communicate a long running task is being carried out."""
        return self.errors.status(msg)

    def say(self, line: str) -> None:
        """Print one line of results."""
        self.console.print(line, markup=False)

    def lines(self, lines: Iterable[str]) -> None:
        """Print lines of results."""
        for line in lines:
            self.say(line)

    def report_success(self, msg: str) -> None:
        """Communicate something was successfully completed."""
        if not self.quiet:
            self.errors.print(textwrap.indent(msg, prefix=" ✅ "), markup=False)

    def report_fail(self, msg: str) -> None:
        """Communicate something failed."""
        self.errors.print(textwrap.indent(msg, prefix=" ❌ "), markup=False)

    def next_step(self, msg: str) -> None:
        """Communicate that there is a likely followup step."""
        if not self.quiet:
            self.errors.print(rich.markdown.Markdown(textwrap.dedent(msg)))


def configure_logging(*, verbose: bool = False, quiet: bool = False) -> None:
    """Route the ornate loggers to standard error through rich."""
    logger = logging.getLogger("ornate")
    handler = rich.logging.RichHandler(console=_stderr(), show_time=False, show_path=False)
    logger.handlers = [handler]
    logger.propagate = False
    if quiet:
        logger.setLevel(logging.ERROR)
    elif verbose:
        logger.setLevel(logging.INFO)
    else:
        logger.setLevel(logging.WARNING)
