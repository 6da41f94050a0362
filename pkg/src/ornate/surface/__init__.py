"""
The surface language: parenthesized declarations elaborated into kernel objects.

- sexpr: reading and printing forms
- syntax: declarations checked for shape
- script: function bodies and lifting scripts
- elaborate: declarations to datatypes, ornaments, functions and liftings
- env: the environment of elaborated names
- prelude: the standard environment
"""

from __future__ import annotations

from ornate.surface.elaborate import Terms, elaborate, load_text
from ornate.surface.env import DEFAULT_PARAMS, Env, HostFn, tag_set
from ornate.surface.prelude import prelude
from ornate.surface.sexpr import SourceFile, parse, read_one, show, show_file
from ornate.surface.syntax import declarations

__all__ = [
    "DEFAULT_PARAMS",
    "Env",
    "HostFn",
    "SourceFile",
    "Terms",
    "declarations",
    "elaborate",
    "load_text",
    "parse",
    "prelude",
    "read_one",
    "show",
    "show_file",
    "tag_set",
]
