"""Verification reports produced by exhaustive sweeps."""

from __future__ import annotations

import dataclasses

from cattrs.gen import make_dict_unstructure_fn, override
from typing_extensions import Self

from ornate.core import Value, show_value
from ornate.jsonable import CONVERTER, JsonableMixin

__all__ = ["CheckRecord", "VerificationReport"]


@dataclasses.dataclass
class CheckRecord:
    """The outcome for one input tuple."""

    inputs: tuple[Value, ...]
    expected: tuple[Value, ...] = ()
    actual: tuple[Value, ...] = ()
    passed: bool = True
    note: str = ""

    def render(self: Self) -> str:
        """One line of text for this record."""
        status = "ok  " if self.passed else "FAIL"
        line = f"{status} ({' '.join(show_value(v) for v in self.inputs)})"
        if self.expected or self.actual:
            line += (
                f" expected ({' '.join(show_value(v) for v in self.expected)})"
                f" actual ({' '.join(show_value(v) for v in self.actual)})"
            )
        if self.note:
            line += f" : {self.note}"
        return line


@dataclasses.dataclass
class VerificationReport(JsonableMixin):
    """All records of one sweep, in enumeration order."""

    kind: str
    target: str
    depth: tuple[int, ...]
    records: list[CheckRecord] = dataclasses.field(default_factory=list)

    @property
    def passed(self: Self) -> bool:
        """Whether every record passed."""
        return all(record.passed for record in self.records)

    @property
    def failures(self: Self) -> list[CheckRecord]:
        """The failing records."""
        return [record for record in self.records if not record.passed]

    @property
    def first_failure(self: Self) -> CheckRecord | None:
        """The first counterexample in enumeration order, if any."""
        return next(iter(self.failures), None)

    def add(self: Self, record: CheckRecord) -> None:
        """Append a record."""
        self.records.append(record)

    def summary(self: Self) -> str:
        """Headline with counts."""
        verdict = "passed" if self.passed else "FAILED"
        return (
            f"{self.kind} {self.target} depth {','.join(map(str, self.depth))}: {verdict}"
            f" ({len(self.records)} checked, {len(self.failures)} failed)"
        )

    def render(self: Self, *, quiet: bool = False) -> list[str]:
        """Text lines: the summary, then every record (only failures when quiet)."""
        shown = self.failures if quiet else self.records
        return [self.summary(), *(record.render() for record in shown)]

    def as_dict(self: Self) -> dict[str, object]:
        """Convert to a jsonable dictionary, including the verdict."""
        data = super().as_dict()
        data["passed"] = self.passed
        data["checked"] = len(self.records)
        return data


CONVERTER.register_unstructure_hook(
    CheckRecord,
    make_dict_unstructure_fn(CheckRecord, CONVERTER, passed=override(rename="pass")),
)
