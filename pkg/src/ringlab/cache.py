"""On-disk cache for analysis reports, keyed by table fingerprint.

Reports are deterministic functions of the ring tables, so a fingerprint hit
can be replayed without recomputation. The cache directory defaults to
``~/.cache/ringlab`` and can be overridden with the RINGLAB_CACHE environment
variable or the --cache flag.
"""

from __future__ import annotations

import json
import os
from pathlib import Path
from typing import Optional

CACHE_VERSION = "analysis v1"


def default_cache_dir() -> Path:
    env = os.environ.get("RINGLAB_CACHE")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "ringlab"


class ReportCache:
    def __init__(self, directory: Optional[Path] = None):
        self.directory = Path(directory) if directory else default_cache_dir()
        self.hits = 0
        self.misses = 0

    def _path(self, fingerprint: str) -> Path:
        return self.directory / f"{fingerprint}.json"

    def get(self, fingerprint: str) -> Optional[dict]:
        path = self._path(fingerprint)
        try:
            with open(path) as f:
                report = json.load(f)
        except (OSError, json.JSONDecodeError):
            self.misses += 1
            return None
        # stale versions are treated as misses and overwritten on put
        if report.get("format") != CACHE_VERSION:
            self.misses += 1
            return None
        self.hits += 1
        return report

    def put(self, fingerprint: str, report: dict) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        path = self._path(fingerprint)
        tmp = path.with_suffix(".tmp")
        with open(tmp, "w") as f:
            json.dump(report, f, indent=2, sort_keys=True)
            f.write("\n")
        os.replace(tmp, path)
