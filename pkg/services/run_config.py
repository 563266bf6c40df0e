"""Flat `key = value` run configuration.

    # comment
    model = gng
    seed = 7
    gng.max_age = 50

Dotted keys address a model section. Unknown keys are rejected.
"""

import re
from pathlib import Path
from typing import Dict, Mapping, Optional

from pydantic import ValidationError

from core.errors import ConfigError
from models.config import RunConfig

_NONE_VALUES = {"", "none", "null"}
# "#" opens a comment only at line start or after whitespace
_COMMENT = re.compile(r"(?:^|\s)#.*$")


def parse_config_text(text: str, source: str = "<config>") -> Dict[str, str]:
    values: Dict[str, str] = {}
    for number, raw in enumerate(text.splitlines(), start=1):
        line = _COMMENT.sub("", raw).strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip()
        if not sep or not key:
            raise ConfigError(f"{source}, line {number}: expected 'key = value', got '{raw.strip()}'")
        if key in values:
            raise ConfigError(f"{source}, line {number}: duplicate key '{key}'")
        values[key] = value.strip()
    return values


def load_config_file(path) -> Dict[str, str]:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ConfigError(f"cannot read config file {path}: {e}")
    return parse_config_text(text, source=str(path))


def fold_flat(values: Mapping[str, object]) -> Dict[str, object]:
    """{'gng.max_age': '50'} -> {'gng': {'max_age': '50'}}."""
    nested: Dict[str, object] = {}
    for key, value in values.items():
        if isinstance(value, str) and value.lower() in _NONE_VALUES:
            value = None
        section, dot, name = key.partition(".")
        if not dot:
            nested[key] = value
            continue
        if not name or "." in name:
            raise ConfigError(f"malformed key '{key}'")
        target = nested.setdefault(section, {})
        if not isinstance(target, dict):
            raise ConfigError(f"key '{key}' conflicts with top-level key '{section}'")
        target[name] = value
    return nested


def build_run_config(file_values: Optional[Mapping[str, object]] = None,
                     overrides: Optional[Mapping[str, object]] = None) -> RunConfig:
    """Defaults < config file < overrides (CLI flags)."""
    merged: Dict[str, object] = dict(file_values or {})
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return RunConfig(**fold_flat(merged))
    except ValidationError as e:
        raise ConfigError(str(e))
