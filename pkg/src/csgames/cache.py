"""Disk cache for expensive results.

Keys are a pure function of (command id, canonical parameter encoding,
engine version); bumping the engine version invalidates everything.
Values are JSON with integers carried as decimal strings.  Writes go to a
temp file first and are renamed into place, so interrupted runs never
leave a corrupt entry.  The cache root comes from ``CSGAMES_CACHE_DIR``
(default ``~/.cache/csgames``).
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from datetime import datetime, timezone
from pathlib import Path

ENGINE_VERSION = "1"
CACHE_ENV = "CSGAMES_CACHE_DIR"

__all__ = ["CACHE_ENV", "ENGINE_VERSION", "cache_dir", "get", "key_for", "put"]


def cache_dir() -> Path:
    root = os.environ.get(CACHE_ENV)
    if root:
        return Path(root)
    return Path.home() / ".cache" / "csgames"


def key_for(command: str, params: dict) -> str:
    canon = json.dumps(
        {"command": command, "params": params, "engine": ENGINE_VERSION},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canon.encode()).hexdigest()


def get(command: str, params: dict):
    path = cache_dir() / f"{key_for(command, params)}.json"
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)["value"]
    except (OSError, ValueError, KeyError):
        return None


def put(command: str, params: dict, value) -> None:
    root = cache_dir()
    root.mkdir(parents=True, exist_ok=True)
    entry = {
        "command": command,
        "params": params,
        "engine_version": ENGINE_VERSION,
        "created_at": datetime.now(timezone.utc).isoformat(),
        "value": value,
    }
    path = root / f"{key_for(command, params)}.json"
    fd, tmp = tempfile.mkstemp(dir=root, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(entry, fh, sort_keys=True)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
