"""Fixture lookup and JSON helpers."""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Any

from .errors import InputError

ENV_VAR = "PROOFWEAVE_FIXTURES"


def fixtures_dir() -> Path:
    override = os.environ.get(ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "fixtures"


def fixture_path(name: str) -> Path:
    p = fixtures_dir() / (name if name.endswith(".json") else name + ".json")
    if not p.is_file():
        raise InputError(f"no fixture named {name!r} in {p.parent}")
    return p


def load_json(path: str | os.PathLike[str]) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def load_fixture(name: str) -> Any:
    return load_json(fixture_path(name))


def dumps(data: Any) -> str:
    """Deterministic JSON rendering."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)
