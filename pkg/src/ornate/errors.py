"""Exceptions raised by the ornate kernel, surface language and commandline."""

from __future__ import annotations

import dataclasses
from typing import ClassVar

from typing_extensions import Self

__all__ = [
    "ElaborationError",
    "IllFormedAlgebra",
    "IllFormedFunOrn",
    "IllFormedOrnament",
    "IllFormedSet",
    "IllTypedValue",
    "IndexMismatch",
    "NonEnumerableDomain",
    "OrnateError",
    "ParseError",
    "SkeletonMismatch",
    "UnknownName",
]


class OrnateError(Exception):
    """Base class for every error ornate raises on purpose."""

    default_msg: ClassVar[str] = "ornate error"

    def __init__(self: Self, msg: str = "") -> None:
        super().__init__(msg)
        self.msg = msg

    def __str__(self: Self) -> str:
        """Format error message."""
        return self.msg or self.default_msg


class IllFormedSet(OrnateError):
    """A set code violates its invariants."""

    default_msg = "ill-formed set code"


class NonEnumerableDomain(OrnateError):
    """A function set or table needs a domain that cannot be enumerated."""

    default_msg = "function domain is not enumerable"


class IllTypedValue(OrnateError):
    """A value does not inhabit the set it was claimed to inhabit."""

    default_msg = "ill-typed value"

    def __init__(self: Self, msg: str = "", *, where: str = "") -> None:
        super().__init__(msg)
        self.where = where

    def __str__(self: Self) -> str:
        """Format error message."""
        base = self.msg or self.default_msg
        return f"{self.where}: {base}" if self.where else base


class IllFormedOrnament(OrnateError):
    """An ornament code does not fit its base description."""

    default_msg = "ill-formed ornament"

    def __init__(self: Self, msg: str = "", *, path: tuple[str, ...] = ()) -> None:
        super().__init__(msg)
        self.path = path

    def __str__(self: Self) -> str:
        """Format error message."""
        where = "/".join(self.path) or "<root>"
        return f"at {where}: {self.msg or self.default_msg}"


class IllFormedAlgebra(OrnateError):
    """An algebra step produced a value outside its carrier."""

    default_msg = "algebra step left its carrier"


class IllFormedFunOrn(OrnateError):
    """A functional ornament is not congruent with its function type."""

    default_msg = "functional ornament does not match its type"


class IndexMismatch(OrnateError):
    """A value was produced at an index other than the one claimed."""

    default_msg = "index mismatch"


class SkeletonMismatch(OrnateError):
    """A lifting script does not follow the recursion of its base function."""

    default_msg = "script does not follow the base function's recursion"


@dataclasses.dataclass
class ParseError(OrnateError):
    """Malformed source text."""

    line: int
    column: int
    expected: str

    def __post_init__(self: Self) -> None:
        super().__init__(self.expected)

    def __str__(self: Self) -> str:
        """Format error message."""
        return f"{self.line}:{self.column}: expected {self.expected}"


@dataclasses.dataclass
class ElaborationError(OrnateError):
    """A declaration could not be turned into kernel objects."""

    path: tuple[str, ...]
    reason: str

    def __post_init__(self: Self) -> None:
        super().__init__(self.reason)

    def __str__(self: Self) -> str:
        """Format error message."""
        return f"{'/'.join(self.path) or '<file>'}: {self.reason}"


class UnknownName(ElaborationError):
    """A referenced name is not defined."""
