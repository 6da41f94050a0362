"""JSON converter for reports; kernel values serialize through the pretty-printer."""

from __future__ import annotations

from cattrs.preconf.json import make_converter
from typing_extensions import Self

from ornate.core import VFun, VIn, VPair, VRefl, VTag, VUnit, show_value

__all__ = ["CONVERTER", "JsonableMixin"]

CONVERTER = make_converter()

for _value_type in (VUnit, VPair, VTag, VIn, VRefl, VFun):
    CONVERTER.register_unstructure_hook(_value_type, show_value)


class JsonableMixin:
    """Add ``as_dict``/``as_json`` to dataclasses holding kernel values."""

    def as_dict(self: Self) -> dict[str, object]:
        """Convert to a jsonable dictionary."""
        return CONVERTER.unstructure(self)

    def as_json(self: Self) -> str:
        """Convert to a JSON document."""
        return CONVERTER.dumps(self.as_dict(), indent=2)
