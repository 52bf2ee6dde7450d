"""Fixed labelings shipped as data (``data/tables.json``).

Each entry keeps the label lists exactly as listed, plus an errata list of
``[path, position, printed, corrected]`` fixes applied on load.  A sha256
over both guards against silent edits.
"""
from __future__ import annotations

import hashlib
import json
from functools import lru_cache
from importlib import resources

from .core import EdgeLabeling, ThetaGraph, align_paths, make_theta


class TableDrift(RuntimeError):
    pass


def table_checksum(entry: dict) -> str:
    blob = json.dumps({"paths": entry["paths"], "errata": entry["errata"]},
                      sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


@lru_cache(maxsize=None)
def load_tables() -> dict:
    raw = resources.files("thetala").joinpath("data/tables.json").read_text()
    tables = json.loads(raw)
    for key, entry in tables.items():
        if table_checksum(entry) != entry["sha256"]:
            raise TableDrift(f"table {key} does not match its checksum")
    return tables


def table_key(family: str, params: dict) -> str | None:
    for key, entry in load_tables().items():
        if entry["family"] == family and entry["params"] == dict(params):
            return key
    return None


def verbatim_paths(key: str) -> list[list[int]]:
    return [list(p) for p in load_tables()[key]["paths"]]


def corrected_paths(key: str) -> list[list[int]]:
    entry = load_tables()[key]
    paths = verbatim_paths(key)
    for path, pos, printed, fixed in entry["errata"]:
        if paths[path][pos] != printed:
            raise TableDrift(f"{key}: erratum at path {path} pos {pos} expects {printed}, found {paths[path][pos]}")
        paths[path][pos] = fixed
    return paths


def table_labeling(key: str, verbatim: bool = False) -> tuple[ThetaGraph, EdgeLabeling]:
    paths = verbatim_paths(key) if verbatim else corrected_paths(key)
    g = make_theta(load_tables()[key]["lengths"])
    f = align_paths(paths)
    f.check_shape(g)
    return g, f
