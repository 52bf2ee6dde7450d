"""Data model for theta graphs, their edge labelings and induced colorings.

A theta graph theta(a_1, ..., a_s) is s internally disjoint paths joining two
hub vertices ``u`` and ``v``.  Paths are kept sorted by length; a labeling
stores one label sequence per path, always read from the ``u`` end.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class ThetaError(ValueError):
    """Base class for malformed graph / labeling input."""


class EmptyInput(ThetaError):
    pass


class MultiEdge(ThetaError):
    pass


class TooSmall(ThetaError):
    pass


class ShapeMismatch(ThetaError):
    pass


@dataclass(frozen=True, order=True)
class ThetaGraph:
    lengths: tuple[int, ...]

    @property
    def s(self) -> int:
        return len(self.lengths)

    @property
    def m(self) -> int:
        return sum(self.lengths)

    @property
    def order(self) -> int:
        return self.m - self.s + 2

    def vertices(self) -> list["VertexRef"]:
        out = [U, V]
        for i, a in enumerate(self.lengths):
            out.extend(VertexRef.internal(i, p) for p in range(1, a))
        return out

    def edges(self) -> list[tuple["VertexRef", "VertexRef"]]:
        """Edges as vertex pairs, path by path from the u end."""
        out = []
        for i, a in enumerate(self.lengths):
            chain = [U] + [VertexRef.internal(i, p) for p in range(1, a)] + [V]
            out.extend(zip(chain, chain[1:]))
        return out

    def __str__(self) -> str:
        return f"theta({format_lengths(self.lengths)})"


@dataclass(frozen=True, order=True)
class VertexRef:
    kind: str  # "u", "v" or "p"
    path: int = -1
    pos: int = 0

    @classmethod
    def internal(cls, path: int, pos: int) -> "VertexRef":
        return cls("p", path, pos)

    @property
    def name(self) -> str:
        if self.kind == "p":
            return f"p{self.path}_{self.pos}"
        return self.kind

    def __repr__(self) -> str:
        return self.name


U = VertexRef("u")
V = VertexRef("v")


def make_theta(lengths: Iterable[int]) -> ThetaGraph:
    lengths = sorted(int(a) for a in lengths)
    if not lengths:
        raise EmptyInput("no path lengths given")
    if lengths[0] < 1:
        raise ThetaError(f"path lengths must be positive, got {lengths[0]}")
    if len(lengths) < 2:
        raise TooSmall("a theta graph needs at least two paths")
    g = ThetaGraph(tuple(lengths))
    if g.order < 3:
        raise TooSmall(f"{g} has order {g.order} < 3")
    if lengths[:2] == [1, 1]:
        raise MultiEdge(f"{g} has parallel edges between u and v")
    return g


_POWER = re.compile(r"^\s*(\d+)\s*(?:\^\s*\[?\s*(\d+)\s*\]?)?\s*$")


def parse_lengths(text: str) -> list[int]:
    """Parse ``"2,4^3,6"`` (or ``"2 4^[3] 6"``) into a flat length list."""
    out: list[int] = []
    for tok in re.split(r"[,\s]+", text.strip()):
        if not tok:
            continue
        match = _POWER.match(tok)
        if not match:
            raise ThetaError(f"cannot parse length token {tok!r}")
        value, reps = int(match.group(1)), match.group(2)
        out.extend([value] * (int(reps) if reps else 1))
    return out


def format_lengths(lengths: Sequence[int]) -> str:
    """Compact form with a^n runs, e.g. (2, 4, 4, 4, 6) -> '2,4^3,6'."""
    parts = []
    i = 0
    while i < len(lengths):
        j = i
        while j < len(lengths) and lengths[j] == lengths[i]:
            j += 1
        parts.append(str(lengths[i]) if j - i == 1 else f"{lengths[i]}^{j - i}")
        i = j
    return ",".join(parts)


@dataclass(frozen=True)
class EdgeLabeling:
    per_path: tuple[tuple[int, ...], ...]

    @classmethod
    def from_paths(cls, paths: Iterable[Iterable[int]]) -> "EdgeLabeling":
        return cls(tuple(tuple(int(v) for v in p) for p in paths))

    def reversed_path(self, i: int) -> "EdgeLabeling":
        paths = list(self.per_path)
        paths[i] = paths[i][::-1]
        return EdgeLabeling(tuple(paths))

    def labels(self) -> list[int]:
        return [v for p in self.per_path for v in p]

    def check_shape(self, g: ThetaGraph) -> None:
        got = tuple(len(p) for p in self.per_path)
        if got != g.lengths:
            raise ShapeMismatch(f"labeling path lengths {got} do not match {g.lengths}")


def align_paths(paths: Iterable[Sequence[int]]) -> EdgeLabeling:
    """Order label sequences by length (stable) so they line up with a ThetaGraph."""
    return EdgeLabeling.from_paths(sorted((tuple(p) for p in paths), key=len))


@dataclass(frozen=True)
class InducedColoring:
    color_of: dict
    palette: frozenset

    @property
    def count(self) -> int:
        return len(self.palette)


def induced_coloring(g: ThetaGraph, f: EdgeLabeling) -> InducedColoring:
    f.check_shape(g)
    color = {U: sum(p[0] for p in f.per_path), V: sum(p[-1] for p in f.per_path)}
    for i, seq in enumerate(f.per_path):
        for p in range(1, len(seq)):
            color[VertexRef.internal(i, p)] = seq[p - 1] + seq[p]
    return InducedColoring(color, frozenset(color.values()))


# -- serialization ---------------------------------------------------------

def labeling_to_dict(g: ThetaGraph, f: EdgeLabeling) -> dict:
    return {"lengths": list(g.lengths), "paths": [list(p) for p in f.per_path]}


def labeling_from_dict(data: dict) -> tuple[ThetaGraph, EdgeLabeling]:
    """Read a {"lengths", "paths"} object; paths may come in any order."""
    paths = [tuple(int(v) for v in p) for p in data["paths"]]
    g = make_theta(data.get("lengths") or [len(p) for p in paths])
    f = align_paths(paths)
    f.check_shape(g)
    return g, f


def dumps_labeling(g: ThetaGraph, f: EdgeLabeling, **extra) -> str:
    return json.dumps({**labeling_to_dict(g, f), **extra}, indent=None)


def to_dot(g: ThetaGraph, f: EdgeLabeling | None = None) -> str:
    """Graphviz rendering; vertex label shows the induced color when f is given."""
    colors = induced_coloring(g, f).color_of if f is not None else {}
    lines = ["graph theta {"]
    for vert in g.vertices():
        attr = f' [label="{vert.name}:{colors[vert]}"]' if colors else ""
        lines.append(f'  "{vert.name}"{attr};')
    labels = f.labels() if f is not None else [None] * g.m
    for (a, b), lab in zip(g.edges(), labels):
        attr = f' [label="{lab}"]' if lab is not None else ""
        lines.append(f'  "{a.name}" -- "{b.name}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"
