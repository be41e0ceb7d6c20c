"""Runtime defaults and the ``PADIC_FRAMES_CONFIG`` override file.

Precedence is command-line flags, then the JSON file named by the
environment variable, then the values below.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields, replace

ENV_VAR = "PADIC_FRAMES_CONFIG"

TOL_REL = 1e-9
MATRIX_CAP = 243
# DFT length budget; gives max_level = 12 for p = 2
INDEX_BUDGET = 2**12


def default_max_level(p: int) -> int:
    level = 1
    while p ** (level + 1) <= INDEX_BUDGET:
        level += 1
    return level


@dataclass(frozen=True)
class Settings:
    tol_rel: float = TOL_REL
    max_level: int | None = None
    matrix_cap: int = MATRIX_CAP

    def level_for(self, p: int) -> int:
        return self.max_level if self.max_level is not None else default_max_level(p)


def load_settings(overrides: dict | None = None, environ=None) -> Settings:
    environ = os.environ if environ is None else environ
    settings = Settings()
    path = environ.get(ENV_VAR)
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        known = {f.name for f in fields(Settings)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown keys in {path}: {sorted(unknown)}")
        settings = replace(settings, **data)
    if overrides:
        settings = replace(settings, **{k: v for k, v in overrides.items() if v is not None})
    return settings
