"""On-disk JSON cache for computed series.

One file per form name.  A file is used only when its schema version matches
and its stored order covers the request; anything unreadable is ignored and
recomputed.  Writes go to a temporary file that is renamed into place.
"""
import json
import os
import re
import tempfile
from pathlib import Path

from .series import FracSeries, series_from_json

SCHEMA_VERSION = 1
ENV_VAR = "MIRRORCAYLEY_CACHE"
_PREFIX = "mc-"


def default_cache_dir():
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "mirrorcayley"


def resolve_cache_dir(flag=None):
    """Flag first, then the environment variable, then the default location."""
    if flag:
        return Path(flag)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return default_cache_dir()


def _filename(name):
    return _PREFIX + re.sub(r"[^A-Za-z0-9_.-]", "_", name) + ".json"


def truncate_to_order(series, order):
    if isinstance(series, FracSeries):
        return FracSeries(series.offset, series.body.truncate(order))
    return series.truncate(order)


class SeriesCache:
    def __init__(self, directory):
        self.directory = Path(directory)

    def path(self, name):
        return self.directory / _filename(name)

    def load(self, name, order):
        """The cached series truncated to ``order``, or None on any miss."""
        try:
            data = json.loads(self.path(name).read_text())
            if not isinstance(data, dict):
                return None
            if data.get("schema") != SCHEMA_VERSION or data.get("name") != name:
                return None
            if data["order"] < order:
                return None
            return truncate_to_order(series_from_json(data["series"]), order)
        except (OSError, ValueError, KeyError, TypeError):
            return None

    def store(self, name, order, series):
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = {"schema": SCHEMA_VERSION, "name": name, "order": order, "series": series.to_json()}
        fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w") as fh:
                json.dump(payload, fh)
            os.replace(tmp, self.path(name))
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise

    def get_or_compute(self, name, order, compute):
        cached = self.load(name, order)
        if cached is not None:
            return cached
        series = compute(order)
        self.store(name, order, series)
        return series

    def entries(self):
        out = []
        if not self.directory.is_dir():
            return out
        for p in sorted(self.directory.glob(_PREFIX + "*.json")):
            try:
                data = dict(json.loads(p.read_text()))
                out.append({"name": data["name"], "order": data["order"], "schema": data["schema"], "file": p.name})
            except (OSError, ValueError, KeyError, TypeError):
                out.append({"name": None, "order": None, "schema": None, "file": p.name})
        return out

    def clear(self):
        removed = 0
        if self.directory.is_dir():
            for p in self.directory.glob(_PREFIX + "*.json"):
                p.unlink()
                removed += 1
        return removed

