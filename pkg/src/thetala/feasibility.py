"""Which theta graphs can carry a local antimagic labeling with two colors.

Covers the parity gate, the two forced colors, the integer parameter
candidates for a given path count, and the family classifier.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterator

from .core import ThetaGraph, make_theta


class Infeasible(ValueError):
    """No integral pair of colors exists for this graph."""


class ParityFailed(Infeasible):
    pass


FAMILIES = ("K2S", "F2B", "F1", "F2A", "F3A", "F3B", "F4")
NOT_TWO_REASONS = ("OddLength", "Cycle", "K23OddS", "NoFamily")


@dataclass(frozen=True)
class TwoColorTargets:
    m: int
    s: int
    x: int
    y: int
    size_X: int
    size_Y: int

    @property
    def gap(self) -> int:
        return self.y - self.x


@dataclass(frozen=True)
class DiophantineCandidate:
    s: int
    a: int
    b: int
    t: int
    y: int
    m: int
    case_tag: int

    @property
    def x(self) -> int:
        return self.m + 1


@dataclass(frozen=True)
class FamilyClassification:
    graph: ThetaGraph
    family: str | None
    params: dict = field(default_factory=dict)
    targets: TwoColorTargets | None = None
    reason: str | None = None
    also: tuple = ()

    @property
    def is_two(self) -> bool:
        return self.family is not None

    def to_dict(self) -> dict:
        out = {"lengths": list(self.graph.lengths), "s": self.graph.s, "m": self.graph.m}
        if self.is_two:
            out.update(verdict="TwoChromatic", family=self.family, params=dict(self.params),
                       x=self.targets.x, y=self.targets.y,
                       also=[[fam, dict(p)] for fam, p in self.also])
        else:
            out.update(verdict="NotTwo", reason=self.reason)
        return out


def parity_check(g: ThetaGraph) -> bool:
    return g.s >= 3 and all(a % 2 == 0 for a in g.lengths)


def two_color_targets(g: ThetaGraph) -> TwoColorTargets:
    """The colors (x, y) any 2-coloring must use, and the class sizes.

    u and v share the smaller color class, so they get the larger color y.
    """
    if not parity_check(g):
        raise ParityFailed(f"{g} is not bipartite with s >= 3")
    m, s = g.m, g.s
    den = m - 2 * s + 4
    if (m * (m + 1)) % den:
        raise Infeasible(f"{g}: y = {m * (m + 1)}/{den} is not an integer")
    return TwoColorTargets(m=m, s=s, x=m + 1, y=m * (m + 1) // den,
                           size_X=m // 2, size_Y=m // 2 - s + 2)


_CASE_OF_A = {8: 1, 6: 2, 4: 3, 2: 4}


def diophantine_candidates(s: int) -> list[DiophantineCandidate]:
    """Integer solutions (a, b) of a*b = 8(s-2)(2s-3) and the sizes m they force."""
    if s < 3:
        raise ValueError("need s >= 3")
    prod = 8 * (s - 2) * (2 * s - 3)
    out = []
    for a in (8, 6, 4, 2):
        if prod % a:
            continue
        b = prod // a
        if b % 2 or b < a:
            continue
        y = (a + b) // 2 + 4 * s - 7
        t = (b - a) // 2
        for root in sorted({y - 1 + t, y - 1 - t}, reverse=True):
            if root % 2:
                continue
            m = root // 2
            # non-K2S members have some path of length >= 4
            if m % 2 == 0 and m >= 2 * s + 2:
                out.append(DiophantineCandidate(s, a, b, t, y, m, _CASE_OF_A[a]))
    return out


# -- family shapes ---------------------------------------------------------

def f4_t_range(s: int) -> range:
    """Integer t with (2s-3)/8 < t < (6s-5)/8."""
    lo = (2 * s - 3) // 8 + 1
    hi = (6 * s - 5 - 1) // 8
    return range(lo, hi + 1)


def family_lengths(family: str, **p) -> list[int]:
    """Sorted length multiset of a family member (no range checking)."""
    if family == "K2S":
        out = [2] * p["s"]
    elif family == "F1":
        l = p["l"]
        out = [4 * l] * (3 * l + 2) + [4 * l + 2] * l
    elif family == "F2A":
        l = p["l"]
        out = [2 * l - 2] + [4 * l - 2] * (3 * l - 1)
    elif family == "F2B":
        out = list(F2B_GRAPHS[p["s"]])
    elif family == "F3A":
        l, t = p["l"], p["t"]
        out = [4 * l - 2 - 2 * t, 2 * t] + [4 * l - 4] * l + [4 * l - 2] * (l - 2)
    elif family == "F3B":
        l, t = p["l"], p["t"]
        out = [4 * l - 2 - 2 * t, 2 * t - 2] + [4 * l - 4] * (l - 1) + [4 * l - 2] * (l - 1)
    elif family == "F4":
        s, t = p["s"], p["t"]
        out = [2 * t, 4 * s - 6 - 2 * t, 2 * s - 4] + [4 * s - 6] * (s - 3)
    else:
        raise KeyError(family)
    return sorted(out)


F2B_GRAPHS = {
    5: (2, 4, 4, 4, 6),
    8: (4, 8, 8, 8, 8, 8, 10, 10),
    11: (6,) + (12,) * 7 + (14,) * 3,
}


def _leftover(lengths, bulk) -> list[int] | None:
    """lengths minus bulk as multisets, or None if bulk is not contained."""
    have = Counter(lengths)
    need = Counter(bulk)
    if any(have[k] < c for k, c in need.items()):
        return None
    return sorted((have - need).elements())


def _match_k2s(g):
    if g.s >= 4 and g.s % 2 == 0 and set(g.lengths) == {2}:
        yield {"s": g.s}


def _match_f2b(g):
    if F2B_GRAPHS.get(g.s) == g.lengths:
        yield {"s": g.s}


def _match_f1(g):
    if (g.s - 2) % 4 == 0 and g.s >= 6:
        l = (g.s - 2) // 4
        if list(g.lengths) == family_lengths("F1", l=l):
            yield {"l": l}


def _match_f2a(g):
    if g.s % 3 == 0 and g.s >= 6:
        l = g.s // 3
        if list(g.lengths) == family_lengths("F2A", l=l):
            yield {"l": l}


def _match_f3a(g):
    if g.s % 2 or g.s < 4:
        return
    l = g.s // 2
    rest = _leftover(g.lengths, [4 * l - 4] * l + [4 * l - 2] * (l - 2))
    if rest is None or len(rest) != 2 or sum(rest) != 4 * l - 2 or rest[1] % 2:
        return
    t = rest[1] // 2
    if l <= t and 4 * t <= 5 * l - 2:
        yield {"l": l, "t": t}


def _match_f3b(g):
    if g.s % 2 or g.s < 4:
        return
    l = g.s // 2
    rest = _leftover(g.lengths, [4 * l - 4] * (l - 1) + [4 * l - 2] * (l - 1))
    if rest is None or len(rest) != 2 or sum(rest) != 4 * l - 4 or rest[1] % 2:
        return
    t = rest[1] // 2 + 1
    if l <= t and 4 * t <= 5 * l and rest[0] >= 1:
        yield {"l": l, "t": t}


def _match_f4(g):
    s = g.s
    if s < 4:
        return
    rest = _leftover(g.lengths, [2 * s - 4] + [4 * s - 6] * (s - 3))
    if rest is None or len(rest) != 2 or sum(rest) != 4 * s - 6 or rest[0] % 2:
        return
    # {2t, 4s-6-2t} is symmetric in t <-> 2s-3-t; report whichever is in range
    tr = f4_t_range(s)
    for t in sorted({rest[0] // 2, rest[1] // 2}):
        if t in tr:
            yield {"s": s, "t": t}
            return


_MATCHERS = {
    "K2S": _match_k2s, "F2B": _match_f2b, "F1": _match_f1, "F2A": _match_f2a,
    "F3A": _match_f3a, "F3B": _match_f3b, "F4": _match_f4,
}


def classify_family(g: ThetaGraph) -> FamilyClassification:
    """Decide membership in the 2-chromatic families (first match by priority)."""
    if any(a % 2 for a in g.lengths):
        return FamilyClassification(g, None, reason="OddLength")
    if g.s == 2:
        return FamilyClassification(g, None, reason="Cycle")
    if set(g.lengths) == {2} and g.s % 2:
        return FamilyClassification(g, None, reason="K23OddS")
    matches = [(fam, p) for fam in FAMILIES for p in _MATCHERS[fam](g)]
    # every non-K2S family member has m > 2s + 2
    matches = [(fam, p) for fam, p in matches if fam == "K2S" or g.m > 2 * g.s + 2]
    if not matches:
        return FamilyClassification(g, None, reason="NoFamily")
    fam, params = matches[0]
    return FamilyClassification(g, fam, dict(params), two_color_targets(g),
                                also=tuple(matches[1:]))


# -- enumeration -----------------------------------------------------------

def _family_size(family: str, **p) -> int:
    return sum(family_lengths(family, **p))


def _members_up_to(max_m: int) -> Iterator[tuple[str, dict]]:
    s = 4
    while 2 * s <= max_m:
        yield "K2S", {"s": s}
        s += 2
    for s in F2B_GRAPHS:
        yield "F2B", {"s": s}
    l = 1
    while _family_size("F1", l=l) <= max_m:
        yield "F1", {"l": l}
        l += 1
    l = 2
    while _family_size("F2A", l=l) <= max_m:
        yield "F2A", {"l": l}
        l += 1
    l = 2
    while 8 * l * l - 10 * l + 2 <= max_m:  # size of every case-3 member with s = 2l
        for t in range(l, (5 * l - 2) // 4 + 1):
            yield "F3A", {"l": l, "t": t}
        for t in range(l, (5 * l) // 4 + 1):
            yield "F3B", {"l": l, "t": t}
        l += 1
    s = 4
    while 4 * s * s - 12 * s + 8 <= max_m:
        for t in f4_t_range(s):
            yield "F4", {"s": s, "t": t}
        s += 1


def enumerate_family_members(max_m: int) -> Iterator[tuple[ThetaGraph, FamilyClassification]]:
    """Every family member with m <= max_m, once, ordered by (m, s, lengths)."""
    graphs = set()
    for fam, p in _members_up_to(max_m):
        g = make_theta(family_lengths(fam, **p))
        if g.m <= max_m:
            graphs.add(g)
    for g in sorted(graphs, key=lambda h: (h.m, h.s, h.lengths)):
        cls = classify_family(g)
        if not cls.is_two:
            raise AssertionError(f"generated {g} but classifier rejects it: {cls.reason}")
        yield g, cls


def closed_form_targets(family: str, **p) -> tuple[int, int, int]:
    """(m, x, y) from the per-case closed forms, independent of two_color_targets."""
    if family == "K2S":
        s = p["s"]
        return 2 * s, 2 * s + 1, s * (2 * s + 1) // 2
    if family == "F1":
        l = p["l"]
        return 16 * l * l + 10 * l, 16 * l * l + 10 * l + 1, 16 * l * l + 18 * l + 5
    if family in ("F2A", "F2B"):
        s = 3 * p["l"] if family == "F2A" else p["s"]
        m = (4 * s * s - 8 * s) // 3
        return m, m + 1, 2 * s * (2 * s - 1) // 3
    if family in ("F3A", "F3B"):
        s = 2 * p["l"]
        return 2 * s * s - 5 * s + 2, 2 * s * s - 5 * s + 3, 2 * s * s - 3 * s + 1
    if family == "F4":
        s = p["s"]
        return 4 * s * s - 12 * s + 8, 4 * s * s - 12 * s + 9, 4 * s * s - 10 * s + 6
    raise KeyError(family)
