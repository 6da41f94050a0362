"""Common fixtures."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from ornate.core import UNIT, ZERO, EnumSet, Value, VIn, VPair, VTag, tagged
from ornate.funorn import LiftedFn, PatchFn
from ornate.ornament import Ornament
from ornate.surface import Env, prelude

ListOf = Callable[..., Value]


def pytest_collection_modifyitems(
    session: pytest.Session,  # noqa: ARG001  # signature determined by pytest
    config: pytest.Config,
    items: list[pytest.Item],
) -> None:
    """Skip the deep sweeps by default."""
    if not config.getoption("-m"):
        skip_me = pytest.mark.skip(reason="use `-m slow` to run this test")
        for item in items:
            if "slow" in item.keywords:
                item.add_marker(skip_me)


@pytest.fixture(scope="session")
def env() -> Env:
    """The prelude with the default instantiation ``A := (enum x y)``."""
    return prelude()


@pytest.fixture(scope="session")
def elements() -> EnumSet:
    """The default instantiation of ``A``."""
    return EnumSet(("x", "y"), name="A")


@pytest.fixture(scope="session")
def listof() -> ListOf:
    """Encode tags as a list the way the prelude's ``List`` stores it."""

    def build(*items: str) -> Value:
        value: Value = ZERO
        for item in reversed(items):
            value = VIn(VPair(VTag("suc"), VPair(VTag(item), value)))
        return value

    return build


@pytest.fixture(scope="session")
def just() -> Callable[[str], Value]:
    """Build the option holding a tag."""
    return lambda item: tagged("true", VPair(VTag(item), UNIT))


@pytest.fixture(scope="session")
def nothing() -> Value:
    """The empty option."""
    return tagged("false")


@pytest.fixture(scope="session")
def list_orn(env: Env) -> Ornament:
    """Lists as an ornament of the naturals."""
    return env.ornament("List")


@pytest.fixture(scope="session")
def maybe_orn(env: Env) -> Ornament:
    """Options as an ornament of the booleans."""
    return env.ornament("Maybe")


@pytest.fixture(scope="session")
def lookup(env: Env) -> LiftedFn:
    """``lookup`` patched from the ``ilookup`` script."""
    entity = env.applicable("lookup")
    assert isinstance(entity, LiftedFn)
    return entity


@pytest.fixture(scope="session")
def ilookup(env: Env) -> PatchFn:
    """The complete ``ilookup`` script."""
    entity = env.lifting("ilookup")
    assert isinstance(entity, PatchFn)
    return entity
