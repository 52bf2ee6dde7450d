"""Construction-agnostic checker for theta graph labelings.

Everything is recomputed from the raw label sequences; violations are
collected exhaustively rather than stopping at the first one.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .core import U, V, EdgeLabeling, ThetaGraph, VertexRef, induced_coloring


@dataclass
class VerificationReport:
    is_bijection: bool
    missing: list[int]
    duplicates: list[int]
    out_of_range: list[int]
    is_local_antimagic: bool
    violations: list[tuple[VertexRef, VertexRef]]
    palette: list[int]
    matches_targets: bool | None = None
    colors: dict = field(default_factory=dict, repr=False)

    @property
    def color_count(self) -> int:
        return len(self.palette)

    @property
    def valid(self) -> bool:
        return self.is_bijection and self.is_local_antimagic

    @property
    def status(self) -> str:
        if not self.valid:
            return "invalid"
        return "valid-2-colors" if self.color_count == 2 else "valid-not-2"

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "is_bijection": self.is_bijection,
            "missing": self.missing,
            "duplicates": self.duplicates,
            "out_of_range": self.out_of_range,
            "is_local_antimagic": self.is_local_antimagic,
            "violations": [[a.name, b.name] for a, b in self.violations],
            "palette": self.palette,
            "color_count": self.color_count,
            "matches_targets": self.matches_targets,
        }


def adjacent_pairs(g: ThetaGraph) -> list[tuple[VertexRef, VertexRef]]:
    pairs = []
    for i, a in enumerate(g.lengths):
        chain = [U] + [VertexRef.internal(i, p) for p in range(1, a)] + [V]
        pairs.extend(zip(chain, chain[1:]))
    return pairs


def verify(g: ThetaGraph, f: EdgeLabeling, expected: tuple[int, int] | None = None) -> VerificationReport:
    f.check_shape(g)
    labels = f.labels()
    counts = Counter(labels)
    m = g.m
    missing = [k for k in range(1, m + 1) if k not in counts]
    duplicates = sorted(k for k, c in counts.items() if c > 1)
    out_of_range = sorted(k for k in counts if not 1 <= k <= m)
    colors = induced_coloring(g, f).color_of
    violations = [(a, b) for a, b in adjacent_pairs(g) if colors[a] == colors[b]]
    report = VerificationReport(
        is_bijection=not (missing or duplicates or out_of_range),
        missing=missing,
        duplicates=duplicates,
        out_of_range=out_of_range,
        is_local_antimagic=not violations,
        violations=violations,
        palette=sorted(set(colors.values())),
        colors=colors,
    )
    if expected is not None:
        report.matches_targets = set(report.palette) == set(expected)
    return report
