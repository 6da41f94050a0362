"""State shared by the commands of one invocation."""

from __future__ import annotations

import contextlib
import dataclasses
import functools
import logging
import pathlib
from collections.abc import Iterator, Sequence

import cattrs
import typer
import yaml
from typing_extensions import Self

from ornate.cli import params
from ornate.cli.comms import Communicator, configure_logging
from ornate.core import DescFun, SetCode, Value, check_value, show_set, show_value
from ornate.errors import ElaborationError, OrnateError, ParseError, UnknownName
from ornate.funorn import Budget
from ornate.jsonable import CONVERTER
from ornate.project import Config, Project
from ornate.surface import Env, Terms, load_text, prelude, read_one

__all__ = ["FAILED", "INVALID", "Session", "guard"]

logger = logging.getLogger(__name__)

# exit codes
FAILED = 1
INVALID = 2


@contextlib.contextmanager
def guard(comms: Communicator) -> Iterator[None]:
    """Turn ornate errors into messages and exit codes."""
    try:
        yield
    except UnknownName as err:
        comms.report_fail(str(err))
        raise typer.Exit(code=params.USAGE) from err
    except (ParseError, ElaborationError) as err:
        comms.report_fail(str(err))
        raise typer.Exit(code=INVALID) from err
    except OrnateError as err:
        comms.report_fail(str(err))
        raise typer.Exit(code=params.USAGE) from err


@dataclasses.dataclass
class Session:
    """Configuration, parameters and sources in effect for one command."""

    config: Config
    comms: Communicator
    params: dict[str, SetCode]
    files: list[pathlib.Path]
    depth: tuple[int, ...]
    json: bool = False

    @classmethod
    def open(
        cls: type[Self],
        depth: str | None = None,
        param: Sequence[str] | None = None,
        file: Sequence[pathlib.Path] | None = None,
        config: pathlib.Path | None = None,
        *,
        quiet: bool = False,
        verbose: bool = False,
        json: bool = False,
    ) -> Self:
        """Read the project config, then let the commandline override it."""
        configure_logging(verbose=verbose, quiet=quiet)
        if config is not None and not config.is_file():
            raise params.usage_error(f"no config file {config}")
        project = Project.from_config_file(config) if config else Project(pathlib.Path())
        try:
            cfg = project.config
        except (OSError, yaml.YAMLError, cattrs.BaseValidationError) as err:
            raise params.usage_error(f"cannot read {project.config_file}: {err}") from err
        logger.info("config %s", project.config_file)
        sets = cfg.param_sets() | dict(params.parse_param(p) for p in param or ())
        files = [*project.source_paths(), *(file or ())]
        missing = [str(path) for path in files if not path.is_file()]
        if missing:
            raise params.usage_error(f"no such file: {', '.join(missing)}")
        budget = params.parse_depth(depth) if depth is not None else (cfg.depth,)
        return cls(cfg, Communicator(quiet=quiet), sets, files, budget, json)

    @property
    def quiet(self: Self) -> bool:
        """Whether only failures are printed."""
        return self.comms.quiet

    @property
    def budget(self: Self) -> Budget:
        """The depth for sweeps over several arguments."""
        return self.depth[0] if len(self.depth) == 1 else self.depth

    @property
    def single_depth(self: Self) -> int:
        """The depth for enumerating one set."""
        return self.depth[0]

    @functools.cached_property
    def env(self: Self) -> Env:
        """The prelude extended by every configured and given source file."""
        env = prelude(self.params)
        try:
            for path in self.files:
                logger.info("loading %s", path)
                env = load_text(path.read_text(encoding="utf-8"), env, str(path))
        except UnknownName as err:
            raise ElaborationError(err.path, err.reason) from err
        return env

    def terms(self: Self, what: str) -> Terms:
        """Elaborate commandline arguments in the session environment."""
        return Terms(self.env, (what,))

    def value(self: Self, text: str, what: str) -> Value:
        """Read a value given on the commandline."""
        return self.terms(what).value(read_one(text), {})

    def index(self: Self, family: DescFun, text: str | None) -> Value:
        """The index given with ``--index``, or the only one of the family."""
        if text is None:
            only = self.env.default_index(family)
            if only is None:
                msg = f"{family.name} is indexed by {show_set(family.index_set)}: give --index"
                raise params.usage_error(msg)
            return only
        idx = self.value(text, "--index")
        if not check_value(family.index_set, idx):
            msg = f"{show_value(idx)} is not an index of {family.name}"
            raise params.usage_error(msg)
        return idx

    def emit(self: Self, lines: Sequence[str], data: object) -> None:
        """Print the text lines, or ``data`` as JSON when asked to."""
        if self.json:
            self.comms.say(CONVERTER.dumps(data, indent=2))
        else:
            self.comms.lines(lines)
