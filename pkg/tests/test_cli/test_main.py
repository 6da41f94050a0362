"""Test the exit codes of the ornate entry point."""

from __future__ import annotations

import pathlib

import click
import pytest

from ornate import cli

BAD_APPEND = """
(lift badappend (patch plus type++)
  (lift-case m
    ('0 (return m++))
    ('suc (lift-con (ext a) (rec (self m' n))))))
"""


@pytest.fixture
def bad_append(tmp_path: pathlib.Path) -> pathlib.Path:
    """A lifting of addition that answers the wrong list for an empty prefix."""
    path = tmp_path / "badappend.orn"
    path.write_text(BAD_APPEND, encoding="utf-8")
    return path


def test_success() -> None:
    """Nothing went wrong."""
    assert cli.main(["enumerate", "Bool"]) == 0


def test_invalid_source(tmp_path: pathlib.Path) -> None:
    """Sources that do not parse or elaborate exit with 2."""
    unclosed = tmp_path / "unclosed.orn"
    unclosed.write_text("(data Nat\n", encoding="utf-8")
    assert cli.main(["check", str(unclosed)]) == 2
    twice = tmp_path / "twice.orn"
    twice.write_text("(data Bool (index unit) (case _ ((yes))))", encoding="utf-8")
    assert cli.main(["check", str(twice)]) == 2


@pytest.mark.parametrize(
    "args",
    [
        ["eval", "(nowhere 1)"],
        ["enumerate", "Nat", "--depth", "two"],
        ["enumerate", "Nat", "--depth", "1,-1"],
        ["enumerate", "Nat", "--bogus"],
        ["derive", "Nat", "--param", "A=x,y"],
        ["check", "no/such/file.orn"],
        ["verify", "coherence", "ihead-goals"],
    ],
)
def test_usage_errors(args: list[str]) -> None:
    """Commandline mistakes exit with 3."""
    assert cli.main(args) == 3


def test_counterexample(bad_append: pathlib.Path, capsys: pytest.CaptureFixture[str]) -> None:
    """A failing sweep exits with 1 and names the first counterexample."""
    assert cli.main(["verify", "patch", "badappend", "--file", str(bad_append), "-d", "1,1"]) == 1
    assert "counterexample" in capsys.readouterr().err


def test_other_click_errors(
    monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    """Click errors that are not usage errors keep the usage exit code."""

    def unreadable(**_kwargs: object) -> int:
        raise click.FileError("ornate.yaml", hint="permission denied")

    monkeypatch.setattr(cli, "app", unreadable)
    assert cli.main(["check"]) == 3
    assert "ornate.yaml" in capsys.readouterr().err
