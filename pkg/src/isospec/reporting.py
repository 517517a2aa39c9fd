"""Report envelopes and the on-disk result cache used by the CLI."""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path
from typing import Any, Optional

from . import __version__
from .numtheory import RHO_SEED

SCHEMA_VERSION = 1
SAFE_INT = 2**53
CACHE_ENV = "ISOSPEC_CACHE_DIR"


def jsonable(obj: Any) -> Any:
    """Plain JSON types; ints beyond double precision become decimal strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (str, float)):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [jsonable(v) for v in items]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def envelope(command: str, parameters: dict, result: dict) -> dict:
    return {
        "schema": SCHEMA_VERSION,
        "command": command,
        "parameters": jsonable(parameters),
        "result": jsonable(result),
        "toolkit_version": __version__,
        "deterministic_seed": RHO_SEED,
    }


def dumps(env: dict) -> str:
    return json.dumps(env, sort_keys=True, indent=2) + "\n"


def default_cache_dir() -> Path:
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "isospec"


class ResultCache:
    """Content-addressed store: one JSON file per (command, parameters)."""

    def __init__(self, root: Optional[Path]):
        self.root = None if root is None else Path(root)

    @staticmethod
    def key(command: str, parameters: dict) -> str:
        blob = json.dumps(
            {"command": command, "parameters": jsonable(parameters), "version": __version__},
            sort_keys=True,
        )
        return hashlib.sha256(blob.encode()).hexdigest()

    def path(self, command: str, parameters: dict) -> Optional[Path]:
        if self.root is None:
            return None
        return self.root / f"{self.key(command, parameters)}.json"

    def get(self, command: str, parameters: dict) -> Optional[dict]:
        path = self.path(command, parameters)
        if path is None or not path.exists():
            return None
        try:
            return json.loads(path.read_text())
        except (OSError, ValueError):
            return None

    def put(self, env: dict) -> None:
        path = self.path(env["command"], env["parameters"])
        if path is None:
            return
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                fh.write(dumps(env))
            os.replace(tmp, path)
        except OSError:
            # the cache is an optimization; a read-only location is not an error
            pass
