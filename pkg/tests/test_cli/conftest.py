"""Fixtures for CLI tests."""

from __future__ import annotations

import pathlib

import pytest
import typer.testing

from ornate import project

SWAP = """
(type natSwap (-> Nat unit (-> Nat unit (* Nat unit (* Nat unit end)))))

(fun swap natSwap (m n) (values n m))
"""


@pytest.fixture(scope="session")
def runner() -> typer.testing.CliRunner:
    """One cli runner is enough."""
    return typer.testing.CliRunner()


@pytest.fixture
def source_file(tmp_path: pathlib.Path) -> pathlib.Path:
    """A source file with a single function."""
    path = tmp_path / "swap.orn"
    path.write_text(SWAP, encoding="utf-8")
    return path


@pytest.fixture
def empty_project(tmp_path: pathlib.Path) -> project.Project:
    """A project directory with a config that names no sources."""
    proj = project.Project(tmp_path)
    proj.config = project.Config(depth=2)
    return proj
