"""Functionality for working with ornate project files."""

from __future__ import annotations

import dataclasses
import pathlib

import cattrs
from cattrs.preconf.pyyaml import make_converter
from typing_extensions import Self

from ornate.core import SetCode
from ornate.surface.env import tag_set

__all__ = ["CONFIG_NAME", "Config", "Project"]

CONFIG_NAME = "ornate.yaml"


@dataclasses.dataclass
class Config:
    """Project configuration."""

    depth: int = 3
    params: dict[str, list[str]] = dataclasses.field(default_factory=dict)
    sources: list[str] = dataclasses.field(default_factory=list)

    def param_sets(self: Self) -> dict[str, SetCode]:
        """The configured parameter instantiations as enumerations."""
        return {name: tag_set(name, tags) for name, tags in self.params.items()}


@dataclasses.dataclass
class Project:
    """A directory holding an ornate config file and the sources it names."""

    path: pathlib.Path
    config_name: str = CONFIG_NAME
    converter: cattrs.preconf.pyyaml.PyyamlConverter = dataclasses.field(
        default_factory=make_converter
    )

    @classmethod
    def from_config_file(cls: type[Self], config_file: pathlib.Path) -> Self:
        """The project a config file belongs to."""
        return cls(config_file.parent, config_file.name)

    @property
    def config_file(self: Self) -> pathlib.Path:
        """Location of the config file of this project."""
        return self.path / self.config_name

    @property
    def config(self: Self) -> Config:
        """Read config object from file, defaults when there is none."""
        if not self.config_file.exists():
            return Config()
        return self.converter.loads(self.config_file.read_text(), Config)

    @config.setter
    def config(self: Self, config: Config) -> None:
        """Store the config object to file."""
        self.config_file.write_text(self.converter.dumps(config))

    def source_paths(self: Self) -> list[pathlib.Path]:
        """The configured sources, relative to the project directory."""
        return [self.path / source for source in self.config.sources]
