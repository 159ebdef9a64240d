"""Append-only JSON-lines store for finished search results.

One result per line.  Lookups scan the whole file and the last complete
entry for a ``(family, n)`` key wins, so rewriting is never needed.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

log = logging.getLogger(__name__)

ENV_VAR = "RHO_R_CACHE"


def default_cache_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "rho_r" / "results.jsonl"


_REQUIRED = ("family", "n", "rho", "profiles")


class ResultCache:
    def __init__(self, path: str | os.PathLike):
        self.path = Path(path)

    def _entries(self):
        if not self.path.exists():
            return
        with self.path.open() as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    entry = json.loads(line)
                except json.JSONDecodeError:
                    # a run killed mid-write leaves a torn last line
                    log.warning("%s:%d: skipping unreadable entry", self.path, lineno)
                    continue
                if all(k in entry for k in _REQUIRED):
                    yield entry

    def lookup(self, family: str, n: int) -> dict | None:
        found = None
        for entry in self._entries():
            if entry["family"] == family and entry["n"] == n:
                found = entry
        return found

    def append(self, entry: dict) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")
            fh.flush()
            os.fsync(fh.fileno())
