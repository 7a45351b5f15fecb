"""Base model with common methods."""

import json
from dataclasses import fields, is_dataclass
from enum import Enum


def _plain(value):
    if isinstance(value, BaseModel):
        return value.to_dict()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, frozenset, set)):
        return [_plain(v) for v in value]
    return value


class BaseModel:
    """Base model class for engine dataclasses."""

    def to_dict(self):
        """Convert model to dictionary."""
        if not is_dataclass(self):
            raise TypeError(f"{self.__class__.__name__} is not a dataclass")
        return {f.name: _plain(getattr(self, f.name)) for f in fields(self) if not f.name.startswith('_')}

    def to_json(self, **kwargs):
        """Serialize to a deterministic JSON string."""
        kwargs.setdefault('sort_keys', True)
        return json.dumps(self.to_dict(), **kwargs)
