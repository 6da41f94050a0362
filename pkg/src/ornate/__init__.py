"""Ornaments, their reornaments and coherent liftings of functions along them."""

from ornate import algebraic, cli, core, funorn, lift, ornament, project, report, surface

__all__ = ["algebraic", "cli", "core", "funorn", "lift", "ornament", "project", "report", "surface"]
