"""Explicit local antimagic 2-colorings for every member of the seven families.

Every path is labeled by an interleaved pair of opposite-difference
progressions, so interior vertex sums alternate between x and y by
construction.  What remains is to make the labels at ``u`` add up to y:
a few whole paths are reversed (each reversal moves the u-end label by a
known odd amount), and in the split families one long path is cut in two
so that a large label lands on ``u``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .ap import OutOfRange, NotFound, ap_path, odd_subset_with_sum, signed_subset_with_sum
from .core import EdgeLabeling, ThetaGraph, align_paths, make_theta
from .feasibility import (F2B_GRAPHS, FamilyClassification, classify_family, f4_t_range,
                          family_lengths, two_color_targets)
from .tables import table_key, table_labeling
from .verifier import verify


class WrongShape(ValueError):
    pass


class BadParams(ValueError):
    pass


class ConstructionBug(AssertionError):
    """A construction failed its own verification."""


class NotTwo(Exception):
    def __init__(self, classification: FamilyClassification):
        super().__init__(f"{classification.graph}: not 2-chromatic ({classification.reason})")
        self.classification = classification


@dataclass
class ConstructionTrace:
    family: str
    params: dict
    x: int
    y: int
    path_specs: list = field(default_factory=list)
    split: dict | None = None
    delta: int | None = None
    B: list = field(default_factory=list)
    u_end_labels: list = field(default_factory=list)
    exception_table: str | None = None
    recipe: str = "standard"
    flagged: bool = False

    @property
    def gap(self) -> int:
        return self.y - self.x

    def to_dict(self) -> dict:
        split = self.split or {}
        return {
            "family": self.family,
            "params": dict(self.params),
            "x": self.x,
            "y": self.y,
            "B": sorted(self.B),
            "gamma1": split.get("gamma1"),
            "gamma2": split.get("gamma2"),
            "exception_table": self.exception_table,
            "delta": self.delta,
            "recipe": self.recipe,
            "flagged": self.flagged,
            "u_end_labels": sorted(self.u_end_labels),
            "split": self.split,
            "paths": self.path_specs,
        }


class _Paths:
    """Named label sequences (u -> v) plus how each one was produced."""

    def __init__(self, x: int, gap: int):
        self.x, self.gap = x, gap
        self.seq: dict[str, tuple[int, ...]] = {}
        self.spec: dict[str, dict] = {}

    def ap(self, role: str, first: int, n: int):
        self.seq[role] = ap_path(first, self.x, self.gap, n)
        self.spec[role] = {"role": role, "first": first, "diff": self.gap, "n": n,
                           "second_first": self.x - first, "reversed": False}

    def gain(self, role: str) -> int:
        """Change of the u-end label if this path is reversed."""
        return self.seq[role][-1] - self.seq[role][0]

    def reverse(self, role: str):
        self.seq[role] = self.seq[role][::-1]
        self.spec[role]["reversed"] = not self.spec[role]["reversed"]

    def split(self, role: str, k: int, head: str, tail: str) -> dict:
        seq = self.seq.pop(role)
        spec = self.spec.pop(role)
        self.seq[head], self.seq[tail] = seq[:k], seq[k:]
        self.spec[head] = {**spec, "role": head, "piece_of": role, "edges": [1, k]}
        self.spec[tail] = {**spec, "role": tail, "piece_of": role, "edges": [k + 1, len(seq)]}
        return {"path": role, "at_edge": k, "gamma1": seq[k], "gamma2": seq[k - 1]}

    def u_sum(self) -> int:
        return sum(s[0] for s in self.seq.values())

    def apply(self, chosen, candidates: list[str]) -> None:
        by_gain = {self.gain(r): r for r in candidates}
        for b in chosen:
            self.reverse(by_gain[b])

    def result(self) -> tuple[EdgeLabeling, list[dict]]:
        roles = sorted(self.seq, key=lambda r: len(self.seq[r]))  # stable: insertion order within a length
        return align_paths(self.seq[r] for r in roles), [self.spec[r] for r in roles]


def _finish(g: ThetaGraph, f: EdgeLabeling, trace: ConstructionTrace) -> tuple[EdgeLabeling, ConstructionTrace]:
    trace.u_end_labels = [p[0] for p in f.per_path]
    report = verify(g, f, (trace.x, trace.y))
    if not (report.valid and report.color_count == 2 and report.matches_targets):
        raise ConstructionBug(f"{g} {trace.family}{trace.params}: {report.to_dict()}")
    return f, trace


def _from_table(key: str, family: str, params: dict) -> tuple[EdgeLabeling, ConstructionTrace]:
    g, f = table_labeling(key)
    tg = two_color_targets(g)
    trace = ConstructionTrace(family, dict(params), tg.x, tg.y, exception_table=key, recipe="table")
    return _finish(g, f, trace)


# -- K_{2,s} -----------------------------------------------------------------

def _k2s(s: int):
    if s < 4 or s % 2:
        raise BadParams(f"K(2,s) needs even s >= 4, got {s}")
    x, y = 2 * s + 1, s * (2 * s + 1) // 2
    P = _Paths(x, 0)
    for i in range(1, s + 1):
        P.seq[f"P{i}"] = (i, x - i)
        P.spec[f"P{i}"] = {"role": f"P{i}", "pair": [i, x - i], "reversed": False}
    delta = y - P.u_sum()
    B = odd_subset_with_sum(s, delta).chosen
    P.apply(B, list(P.seq))
    f, specs = P.result()
    trace = ConstructionTrace("K2S", {"s": s}, x, y, specs, delta=delta, B=sorted(B))
    return _finish(make_theta([2] * s), f, trace)


def construct_k2s(s: int) -> EdgeLabeling:
    return _k2s(s)[0]


# -- case 1 ------------------------------------------------------------------

def _u2_alphas(l: int) -> list[int]:
    return (list(range(3 * l + 1, 4 * l + 2)) + list(range(4 * l + 3, 5 * l + 2))
            + [5 * l + 3, 6 * l + 3] + list(range(7 * l + 5, 8 * l + 5)))


def _case1(l: int):
    if l < 1:
        raise BadParams(f"case 1 needs l >= 1, got {l}")
    g = make_theta(family_lengths("F1", l=l))
    x, y, gap = 16 * l * l + 10 * l + 1, 16 * l * l + 18 * l + 5, 8 * l + 4
    P = _Paths(x, gap)
    for j, alpha in enumerate(_u2_alphas(l), 1):
        P.ap(f"Q{j}", alpha, 2 * l)
    for i in range(1, l + 1):
        P.ap(f"R{i}", i, 2 * l + 1)
    delta = y - P.u_sum()
    if delta:
        raise ConstructionBug(f"case 1, l={l}: u-sum off by {delta}")
    f, specs = P.result()
    return _finish(g, f, ConstructionTrace("F1", {"l": l}, x, y, specs, delta=0))


def construct_case1(l: int) -> EdgeLabeling:
    return _case1(l)[0]


# -- case 2 ------------------------------------------------------------------

def _case2a(l: int):
    if l < 2:
        raise BadParams(f"case 2a needs l >= 2, got {l}")
    if l == 2:
        return _from_table("F2A_l2", "F2A", {"l": 2})
    g = make_theta(family_lengths("F2A", l=l))
    gap = 6 * l - 1
    x, y = (2 * l - 1) * gap, 12 * l * l - 2 * l
    P = _Paths(x, gap)
    P.ap("Q", l * gap, l - 1)  # u-end label y/2
    rs = [f"R{i}" for i in range(1, 3 * l)]
    for i, role in enumerate(rs, 1):
        P.ap(role, i, 2 * l - 1)
    delta = y - P.u_sum()
    sel = odd_subset_with_sum(3 * l - 1, delta)
    P.apply(sel.chosen, rs)
    f, specs = P.result()
    trace = ConstructionTrace("F2A", {"l": l}, x, y, specs, delta=delta, B=sorted(sel.chosen))
    return _finish(g, f, trace)


def construct_case2a(l: int) -> EdgeLabeling:
    return _case2a(l)[0]


def _case2b(g: ThetaGraph):
    for s, lengths in F2B_GRAPHS.items():
        if g.lengths == lengths:
            return _from_table(f"F2B_s{s}", "F2B", {"s": s})
    raise WrongShape(f"{g} is not one of the three sporadic case-2 graphs")


def construct_case2b(g: ThetaGraph) -> EdgeLabeling:
    return _case2b(g)[0]


# -- case 3 ------------------------------------------------------------------

def _case3_targets(l: int) -> tuple[int, int, int]:
    m = 8 * l * l - 10 * l + 2
    return m + 1, 8 * l * l - 6 * l + 1, 4 * l - 2


def _case3a_paths(l: int, t: int):
    x, y, gap = _case3_targets(l)
    P = _Paths(x, gap)
    for j in range(1, l):
        P.ap(f"T{j}", l - 1 + j, 2 * l - 1)
    for i in range(1, l + 1):
        P.ap(f"R{i}", 2 * l - 2 + i, 2 * l - 2)
    split = P.split(f"T{l - 1}", 4 * l - 2 - 2 * t, "Q2", "Q1")
    # D2: reversing R_i gains 2l+1-2i > 0; D1: reversing T_j (j < l-1) gains 1-2j < 0
    movable = [f"R{i}" for i in range(1, l + 1)] + [f"T{j}" for j in range(1, l - 1)]
    return P, split, movable, x, y


def _case3a(l: int, t: int, use_table: bool = True):
    if not (2 <= l <= t and 4 * t <= 5 * l - 2):
        raise BadParams(f"case 3a needs 2 <= l <= t <= (5l-2)/4, got l={l}, t={t}")
    if use_table and (l, t) == (6, 7):
        return _from_table("F3A_l6_t7", "F3A", {"l": l, "t": t})
    g = make_theta(family_lengths("F3A", l=l, t=t))
    P, split, movable, x, y = _case3a_paths(l, t)
    delta = y - P.u_sum()
    B = signed_subset_with_sum([P.gain(r) for r in movable], delta)
    P.apply(B, movable)
    f, specs = P.result()
    trace = ConstructionTrace("F3A", {"l": l, "t": t}, x, y, specs, split=split, delta=delta, B=sorted(B))
    return _finish(g, f, trace)


def construct_case3a(l: int, t: int) -> EdgeLabeling:
    return _case3a(l, t)[0]


def _case3b(l: int, t: int):
    if not (2 <= l <= t and 4 * t <= 5 * l):
        raise BadParams(f"case 3b needs 2 <= l <= t <= 5l/4, got l={l}, t={t}")
    key = table_key("F3B", {"l": l, "t": t})
    if key is not None:
        return _from_table(key, "F3B", {"l": l, "t": t})
    g = make_theta(family_lengths("F3B", l=l, t=t))
    x, y, gap = _case3_targets(l)
    P = _Paths(x, gap)
    ts = [f"T{j}" for j in range(1, l)]
    for j, role in enumerate(ts, 1):
        P.ap(role, j, 2 * l - 1)
    for i in range(1, l + 1):
        P.ap(f"R{i}", 3 * l - 2 + i, 2 * l - 2)
    split = P.split(f"R{l}", 4 * l - 2 - 2 * t, "Q2", "Q1")
    delta = y - P.u_sum()
    recipe = "standard"
    if t == l:
        # T_{l-1} gains +1, R_2 gains -3, R_{l-1} gains -(2l-3)
        B = [-(2 * l - 3), -3, 1]
        movable = ts + [f"R{i}" for i in range(1, l)]
    else:
        try:
            B = sorted(odd_subset_with_sum(l - 1, delta).chosen)
            movable = ts
        except OutOfRange:
            # delta = (l-1)^2 - 2, e.g. (l,t) = (4,5): let R_1..R_{l-1} join in
            movable = ts + [f"R{i}" for i in range(1, l)]
            B = sorted(signed_subset_with_sum([P.gain(r) for r in movable], delta))
            recipe = "fallback-search"
    if sum(B) != delta:
        raise ConstructionBug(f"case 3b (l,t)=({l},{t}): B={B} does not sum to {delta}")
    P.apply(B, movable)
    f, specs = P.result()
    trace = ConstructionTrace("F3B", {"l": l, "t": t}, x, y, specs, split=split, delta=delta, B=sorted(B),
                              recipe=recipe, flagged=recipe != "standard")
    return _finish(g, f, trace)


def construct_case3b(l: int, t: int) -> EdgeLabeling:
    return _case3b(l, t)[0]


# -- case 4 ------------------------------------------------------------------

def _case4_attempt(s: int, t: int, split_j: int, split_reversed: bool, exact_lemma: bool):
    """Label case-4 paths with R_{split_j} cut after 2t edges, then balance u.

    With ``exact_lemma`` the correction must come from the odd-subset rule
    on {1, 3, ..., 2s-7}; otherwise any signed subset of available
    reversal gains is accepted.
    """
    gap = 2 * s - 3
    x, y = gap * gap, gap * (2 * s - 2)
    P = _Paths(x, gap)
    rs = [f"R{j}" for j in range(1, s - 1)]
    for j, role in enumerate(rs, 1):
        P.ap(role, j, 2 * s - 3)
    P.ap("P", (s - 1) * gap, s - 2)
    if split_reversed:
        P.reverse(f"R{split_j}")
    split = P.split(f"R{split_j}", 2 * t, "Q2", "Q1")
    movable = [r for r in rs if r != f"R{split_j}"]
    delta = y - P.u_sum()
    gains = [P.gain(r) for r in movable]
    if exact_lemma:
        if sorted(gains) != list(range(1, 2 * len(gains), 2)):
            raise OutOfRange("reversal gains are not 1, 3, ..., 2n-1")
        B = odd_subset_with_sum(len(gains), delta).chosen
    else:
        B = signed_subset_with_sum(gains, delta)
    P.apply(B, movable)
    f, specs = P.result()
    alpha = split["gamma1"] - t * gap
    trace = ConstructionTrace("F4", {"s": s, "t": t}, x, y, specs, split={**split, "alpha": alpha},
                              delta=delta, B=sorted(B))
    return f, trace


def _case4(s: int, t: int):
    if s < 4 or t not in f4_t_range(s):
        raise BadParams(f"case 4 needs s >= 4 and (2s-3)/8 < t < (6s-5)/8, got s={s}, t={t}")
    key = table_key("F4", {"s": s, "t": t})
    if key is not None:
        return _from_table(key, "F4", {"s": s, "t": t})
    g = make_theta(family_lengths("F4", s=s, t=t))
    default = ("alpha=1", 1, False, True)
    low = ("alpha=2s-4", 1, True, True)
    recipes = [low, default] if 8 * t <= 2 * s - 3 + 16 else [default, low]
    if (s, t) == (13, 9):
        recipes.insert(0, ("alpha=3", 3, False, False))
    for j in range(1, s - 1):
        for rev in (False, True):
            recipes.append(("fallback-search", j, rev, False))
    for name, j, rev, exact in recipes:
        try:
            f, trace = _case4_attempt(s, t, j, rev, exact)
        except (OutOfRange, NotFound):
            continue
        trace.recipe = name
        trace.flagged = name == "fallback-search"
        return _finish(g, f, trace)
    raise ConstructionBug(f"case 4 (s,t)=({s},{t}): no recipe balances u")


def construct_case4(s: int, t: int) -> EdgeLabeling:
    return _case4(s, t)[0]


# -- dispatch ----------------------------------------------------------------

def construct_classified(cls: FamilyClassification) -> tuple[EdgeLabeling, ConstructionTrace]:
    if not cls.is_two:
        raise NotTwo(cls)
    p = cls.params
    fam = cls.family
    if fam == "K2S":
        return _k2s(p["s"])
    if fam == "F1":
        return _case1(p["l"])
    if fam == "F2A":
        return _case2a(p["l"])
    if fam == "F2B":
        return _case2b(cls.graph)
    if fam == "F3A":
        return _case3a(p["l"], p["t"])
    if fam == "F3B":
        return _case3b(p["l"], p["t"])
    if fam == "F4":
        return _case4(p["s"], p["t"])
    raise KeyError(fam)


def construct(g: ThetaGraph) -> tuple[EdgeLabeling, ConstructionTrace]:
    """Labeling with exactly two induced colors, or raise NotTwo."""
    return construct_classified(classify_family(g))
