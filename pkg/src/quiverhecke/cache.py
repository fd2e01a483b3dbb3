"""On-disk cache for computed cyclotomic algebra summaries.

Entries are keyed by a hash of every mathematical input: Cartan matrix,
symmetrizer, coefficient polynomial table, weight levels, and the root
beta, plus a schema version so stale payload layouts are never reused.
The cache only ever stores finished summary payloads, so a hit and a
recomputation produce identical output.

The cache directory is resolved from, in order: an explicit argument
(the --cache-dir flag), the QUIVERHECKE_CACHE_DIR environment variable,
and a per-user default.
"""

from __future__ import annotations

import hashlib
import json
import os

__all__ = ["SCHEMA_VERSION", "resolve_cache_dir", "summary_key", "Cache"]

SCHEMA_VERSION = 1

_ENV_VAR = "QUIVERHECKE_CACHE_DIR"


def resolve_cache_dir(explicit=None) -> str:
    if explicit:
        return explicit
    env = os.environ.get(_ENV_VAR)
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "quiverhecke")


def summary_key(datum, qspec, weight, beta) -> str:
    """Stable hex digest identifying one cyclotomic computation."""
    payload = {
        "schema": SCHEMA_VERSION,
        "labels": [str(s) for s in datum.labels],
        "matrix": [list(row) for row in datum.matrix],
        "sym": list(datum.sym),
        "q_coeffs": qspec.describe(),
        "levels": list(weight.levels),
        "beta": list(beta),
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


class Cache:
    """A directory of JSON payloads addressed by hex key."""

    def __init__(self, root):
        self.root = root

    def _path(self, key):
        return os.path.join(self.root, key + ".json")

    def get(self, key):
        try:
            with open(self._path(key), "r", encoding="utf-8") as fh:
                return json.load(fh)
        except (OSError, json.JSONDecodeError):
            return None

    def put(self, key, payload):
        os.makedirs(self.root, exist_ok=True)
        path = self._path(key)
        tmp = path + ".tmp"
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
        os.replace(tmp, path)

    def _entries(self):
        try:
            names = os.listdir(self.root)
        except OSError:
            return []
        return sorted(n for n in names if n.endswith(".json"))

    def stat(self) -> dict:
        names = self._entries()
        size = 0
        for name in names:
            try:
                size += os.path.getsize(os.path.join(self.root, name))
            except OSError:
                pass
        return {"root": self.root, "entries": len(names), "bytes": size}

    def clear(self) -> int:
        removed = 0
        for name in self._entries():
            try:
                os.remove(os.path.join(self.root, name))
                removed += 1
            except OSError:
                pass
        return removed
