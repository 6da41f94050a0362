"""
Reading and printing the parenthesized source format.

>>> source = parse("(data Nat (index unit)) ; trailing comment")
>>> show(source.forms[0])
'(data Nat (index unit))'
"""

from __future__ import annotations

import dataclasses
import re

from typing_extensions import Self

from ornate.errors import ParseError

__all__ = ["Atom", "SExpr", "SList", "SourceFile", "parse", "read_one", "show", "show_file"]

_TOKEN = re.compile(
    r"(?P<space>[ \t\r\f]+)|(?P<newline>\n)|(?P<comment>;[^\n]*)"
    r"|(?P<open>\()|(?P<close>\))|(?P<atom>[^\s();]+)"
)

WIDTH = 80


@dataclasses.dataclass(frozen=True)
class Atom:
    """A name, a natural, a quoted tag or the hole ``?``."""

    text: str
    line: int = dataclasses.field(default=0, compare=False)
    column: int = dataclasses.field(default=0, compare=False)

    @property
    def is_tag(self: Self) -> bool:
        """Whether this is a quoted tag ``'name``."""
        return self.text.startswith("'")

    @property
    def is_nat(self: Self) -> bool:
        """Whether this is a natural number literal."""
        return self.text.isdigit()

    @property
    def is_hole(self: Self) -> bool:
        """Whether this is the hole atom."""
        return self.text == "?"

    @property
    def is_name(self: Self) -> bool:
        """Whether this is a plain name."""
        return not (self.is_tag or self.is_nat or self.is_hole)

    @property
    def tag(self: Self) -> str:
        """The tag name without its quote."""
        return self.text[1:]


@dataclasses.dataclass(frozen=True)
class SList:
    """A parenthesized list of forms."""

    items: tuple[SExpr, ...]
    line: int = dataclasses.field(default=0, compare=False)
    column: int = dataclasses.field(default=0, compare=False)

    @property
    def head(self: Self) -> str | None:
        """The text of the first item when it is an atom."""
        if self.items and isinstance(self.items[0], Atom):
            return self.items[0].text
        return None

    @property
    def args(self: Self) -> tuple[SExpr, ...]:
        """Everything after the head."""
        return self.items[1:]


SExpr = Atom | SList


@dataclasses.dataclass(frozen=True)
class SourceFile:
    """The top-level forms of one source text."""

    forms: tuple[SExpr, ...]
    name: str = dataclasses.field(default="", compare=False)


def _tokens(text: str) -> list[tuple[str, str, int, int]]:
    tokens = []
    line, line_start = 1, 0
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup or ""
        column = match.start() - line_start + 1
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind in {"open", "close", "atom"}:
            tokens.append((kind, match.group(), line, column))
    tokens.append(("end", "", line, len(text) - line_start + 1))
    return tokens


def parse(text: str, name: str = "") -> SourceFile:
    """Read every top-level form of ``text``."""
    stack: list[tuple[list[SExpr], int, int]] = []
    forms: list[SExpr] = []
    for kind, token, line, column in _tokens(text):
        match kind:
            case "open":
                stack.append(([], line, column))
            case "close":
                if not stack:
                    raise ParseError(line, column, "a form or the end of input")
                items, start_line, start_column = stack.pop()
                form = SList(tuple(items), start_line, start_column)
                (stack[-1][0] if stack else forms).append(form)
            case "atom":
                if token == "'":
                    raise ParseError(line, column, "a tag name after the quote")
                atom = Atom(token, line, column)
                (stack[-1][0] if stack else forms).append(atom)
            case "end":
                if stack:
                    raise ParseError(line, column, "')'")
    return SourceFile(tuple(forms), name)


def read_one(text: str) -> SExpr:
    """Read exactly one form, as given on the commandline."""
    forms = parse(text).forms
    if len(forms) != 1:
        raise ParseError(1, 1, f"exactly one form, found {len(forms)}")
    return forms[0]


def _flat(form: SExpr) -> str:
    if isinstance(form, Atom):
        return form.text
    return "(" + " ".join(_flat(item) for item in form.items) + ")"


def show(form: SExpr, indent: int = 0) -> str:
    """
    Print a form, breaking lists that do not fit the line.

    A broken list keeps its head on the first line and puts every other item
    on its own line, two spaces deeper.
    """
    flat = _flat(form)
    if isinstance(form, Atom) or indent + len(flat) <= WIDTH or len(form.items) < 2:
        return flat
    pad = " " * (indent + 2)
    head, *rest = form.items
    lines = [f"({show(head, indent + 1)}"]
    lines.extend(pad + show(item, indent + 2) for item in rest)
    return "\n".join(lines) + ")"


def show_file(source: SourceFile) -> str:
    """Print every top-level form, one after the other."""
    return "".join(show(form) + "\n" for form in source.forms)
