from __future__ import annotations

import logging
import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any, Dict, Literal, Optional, get_args

from .errors import InvalidParameterError

logger = logging.getLogger(__name__)

OutputFormat = Literal["json", "csv", "table", "dot"]

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off"}


# ============================================================
# CONFIG
# ============================================================

@dataclass(frozen=True)
class Config:
    # oracle resource caps
    max_basis_size: int = 20000
    max_depth: int = 16
    check_relations: bool = True

    # output
    output_format: OutputFormat = "json"

    # test toggles
    long_tests: bool = False
    seed: int = 20240601

    def validate(self) -> "Config":
        if self.max_basis_size <= 0 or self.max_depth <= 0:
            raise InvalidParameterError("resource caps must be positive")
        if self.output_format not in get_args(OutputFormat):
            raise InvalidParameterError(f"Unsupported output format: {self.output_format}")
        return self

    def with_overrides(self, **overrides: Any) -> "Config":
        given = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **given).validate()

    @classmethod
    def from_file(cls, path: str | Path) -> "Config":
        """
        Read `key = value` lines; `#` starts a comment.
        """
        known = {f.name: f.type for f in fields(cls)}
        values: Dict[str, Any] = {}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise InvalidParameterError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.replace("-", "_")
            if key not in known:
                raise InvalidParameterError(f"{path}:{lineno}: unknown key {key!r}")
            values[key] = _coerce(key, value, getattr(cls, key))
        logger.debug("config %s: %s", path, values)
        return cls(**values).validate()

    @classmethod
    def from_env(cls, base: Optional["Config"] = None) -> "Config":
        cfg = base or cls()
        flag = os.environ.get("SUPER_O_LONG", "").strip().lower()
        if flag in _TRUE:
            cfg = replace(cfg, long_tests=True)
        return cfg


def _coerce(key: str, value: str, default: Any) -> Any:
    if isinstance(default, bool):
        low = value.lower()
        if low in _TRUE:
            return True
        if low in _FALSE:
            return False
        raise InvalidParameterError(f"{key}: expected a boolean, got {value!r}")
    if isinstance(default, int):
        try:
            return int(value)
        except ValueError:
            raise InvalidParameterError(f"{key}: expected an integer, got {value!r}") from None
    return value


def colour_enabled(stream: Any) -> bool:
    if os.environ.get("NO_COLOR"):
        return False
    return bool(getattr(stream, "isatty", lambda: False)())
