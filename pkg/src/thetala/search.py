"""Exact decision procedures that know nothing about the constructions.

``exists_two_coloring`` uses the forced shape of a 2-colored path: once the
two colors (x, y) are fixed, a path of length 2r is determined by its first
label.  That turns the question into an exact cover of [1, m] by per-path
label sets, followed by a subset-sum over orientations so that u sees y.

``brute_force_min_colors`` is the permutation oracle for tiny graphs.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels
from .ap import complete_path_labels
from .core import EdgeLabeling, ThetaGraph, make_theta
from .feasibility import Infeasible, classify_family, parity_check, two_color_targets
from .verifier import verify


class TooLarge(ValueError):
    pass


class SearchBug(AssertionError):
    """A witness from the structured search failed verification."""


@dataclass
class SearchResult:
    graph: ThetaGraph
    found: bool
    witness: EdgeLabeling | None = None
    reason: str | None = None
    targets: tuple[int, int] | None = None
    nodes: int = 0
    count: int | None = None

    @property
    def verdict(self) -> str:
        return "yes" if self.found else "no"

    def to_dict(self) -> dict:
        out = {"lengths": list(self.graph.lengths), "verdict": self.verdict,
               "witness": [list(p) for p in self.witness.per_path] if self.witness else None}
        if self.targets:
            out["x"], out["y"] = self.targets
        if self.reason:
            out["reason"] = self.reason
        if self.count is not None:
            out["count"] = self.count
        return out


# -- structured search -----------------------------------------------------

@dataclass
class _CoverProblem:
    classes: list[int]             # half-lengths r, one per class, descending
    class_count: np.ndarray
    path_class: np.ndarray         # class per path, paths by length descending
    cand_class: np.ndarray
    cand_ptr: np.ndarray
    cand_lab: np.ndarray
    cand_lo: np.ndarray
    cand_hi: np.ndarray
    lab_ptr: np.ndarray
    lab_cands: np.ndarray
    class_ptr: np.ndarray
    sequences: list[tuple[int, ...]] = field(default_factory=list)


def _candidates(r: int, m: int, x: int, y: int):
    """Canonical (alpha_1 < beta_r) label sequences for a path of length 2r."""
    gap = y - x
    for a1 in range(1, m - (r - 1) * gap + 1):
        alphas, betas = complete_path_labels(a1, r, x, y)
        if alphas[0] >= betas[-1]:
            continue
        if len(set(alphas) | set(betas)) != 2 * r:
            continue
        seq = tuple(v for pair in zip(alphas, betas) for v in pair)
        yield seq


def _build_problem(g: ThetaGraph, x: int, y: int) -> _CoverProblem:
    m = g.m
    halves = sorted({a // 2 for a in g.lengths}, reverse=True)
    index = {r: k for k, r in enumerate(halves)}
    class_count = np.array([sum(1 for a in g.lengths if a // 2 == r) for r in halves], dtype=np.int64)
    path_class = np.array(sorted((index[a // 2] for a in g.lengths)), dtype=np.int64)

    seqs, cls = [], []
    class_ptr = [0]
    for k, r in enumerate(halves):
        for seq in _candidates(r, m, x, y):
            seqs.append(seq)
            cls.append(k)
        class_ptr.append(len(seqs))

    cand_ptr = np.zeros(len(seqs) + 1, dtype=np.int64)
    for c, seq in enumerate(seqs):
        cand_ptr[c + 1] = cand_ptr[c] + len(seq)
    cand_lab = np.array([v for seq in seqs for v in seq], dtype=np.int64)
    by_label: list[list[int]] = [[] for _ in range(m + 2)]
    for c, seq in enumerate(seqs):
        for v in seq:
            by_label[v].append(c)
    lab_ptr = np.zeros(m + 3, dtype=np.int64)
    for lab in range(m + 2):
        lab_ptr[lab + 1] = lab_ptr[lab] + len(by_label[lab])
    lab_cands = np.array([c for lst in by_label for c in lst], dtype=np.int64)
    return _CoverProblem(
        classes=halves,
        class_count=class_count,
        path_class=path_class,
        cand_class=np.array(cls, dtype=np.int64),
        cand_ptr=cand_ptr,
        cand_lab=cand_lab,
        cand_lo=np.array([seq[0] for seq in seqs], dtype=np.int64),
        cand_hi=np.array([seq[-1] for seq in seqs], dtype=np.int64),
        lab_ptr=lab_ptr,
        lab_cands=lab_cands,
        class_ptr=np.array(class_ptr, dtype=np.int64),
        sequences=seqs,
    )


def _gate(g: ThetaGraph) -> tuple[str | None, tuple[int, int] | None]:
    if any(a % 2 for a in g.lengths):
        return "OddLength", None
    if g.s == 2:
        return "Cycle", None
    if not parity_check(g):
        return "NotBipartite", None
    try:
        t = two_color_targets(g)
    except Infeasible:
        return "NonIntegralColors", None
    return None, (t.x, t.y)


def exists_two_coloring(g: ThetaGraph, prune: bool = True, count_all: bool = False,
                        kernel=None) -> SearchResult:
    """Decide whether g has a local antimagic labeling with exactly 2 colors.

    ``prune`` turns on symmetry breaking among equal-length paths and the
    dead-label cut; the verdict is the same either way.  With ``count_all``
    the number of labelings up to the order of equal-length paths is
    counted (covers times orientations), still returning the first witness.
    """
    if count_all and g.s > 62:
        raise TooLarge("orientation counts are int64; count_all needs s <= 62")
    reason, targets = _gate(g)
    if reason:
        return SearchResult(g, False, reason=reason, count=0 if count_all else None)
    x, y = targets
    prob = _build_problem(g, x, y)
    n = g.s
    chosen = np.zeros(n, dtype=np.int64)
    flips = np.zeros(n, dtype=np.int64)
    run = kernel or _kernels.cover_search
    solutions, nodes = run(
        g.m, y, n, prob.class_count, prob.path_class,
        prob.cand_class, prob.cand_ptr, prob.cand_lab, prob.cand_lo, prob.cand_hi,
        prob.lab_ptr, prob.lab_cands, prob.class_ptr,
        prune, count_all, chosen, flips)
    solutions, nodes = int(solutions), int(nodes)
    if count_all and not prune:
        # each cover was met once per ordering of its equal-length paths
        solutions //= math.prod(math.factorial(int(c)) for c in prob.class_count)
    if solutions == 0:
        return SearchResult(g, False, reason="NoCover", targets=targets, nodes=nodes,
                            count=0 if count_all else None)
    paths = []
    for c, flip in zip(chosen, flips):
        seq = prob.sequences[int(c)]
        paths.append(seq[::-1] if flip else seq)
    # stable sort by length keeps the per-class search order
    witness = EdgeLabeling.from_paths(sorted(paths, key=len))
    report = verify(g, witness, expected=targets)
    if not (report.valid and report.matches_targets):
        raise SearchBug(f"{g}: search witness failed verification ({report.status})")
    return SearchResult(g, True, witness=witness, targets=targets, nodes=nodes,
                        count=solutions if count_all else None)


# -- permutation oracle ----------------------------------------------------

def _edge_arrays(g: ThetaGraph):
    """Vertex ids (u=0, v=1, internals after) and edges path by path u -> v."""
    eu, ev = [], []
    nxt = 2
    for a in g.lengths:
        prev = 0
        for k in range(a):
            if k == a - 1:
                cur = 1
            else:
                cur = nxt
                nxt += 1
            eu.append(prev)
            ev.append(cur)
            prev = cur
    n_vertices = nxt
    m = g.m
    last_edge = [-1] * n_vertices
    nbrs: list[set[int]] = [set() for _ in range(n_vertices)]
    for d, (a, b) in enumerate(zip(eu, ev)):
        last_edge[a] = max(last_edge[a], d)
        last_edge[b] = max(last_edge[b], d)
        nbrs[a].add(b)
        nbrs[b].add(a)
    fin: list[list[int]] = [[] for _ in range(m)]
    for w, d in enumerate(last_edge):
        fin[d].append(w)
    fin_ptr = np.zeros(m + 1, dtype=np.int64)
    for d in range(m):
        fin_ptr[d + 1] = fin_ptr[d] + len(fin[d])
    nbr_ptr = np.zeros(n_vertices + 1, dtype=np.int64)
    for w in range(n_vertices):
        nbr_ptr[w + 1] = nbr_ptr[w] + len(nbrs[w])
    return (
        n_vertices,
        np.array(eu, dtype=np.int64),
        np.array(ev, dtype=np.int64),
        fin_ptr,
        np.array([w for lst in fin for w in lst], dtype=np.int64),
        nbr_ptr,
        np.array([z for w in range(n_vertices) for z in sorted(nbrs[w])], dtype=np.int64),
        np.array(last_edge, dtype=np.int64),
    )


def brute_force_min_colors(g: ThetaGraph, max_m: int = 9, kernel=None) -> int:
    """Minimum number of colors over every local antimagic bijection.

    Returns -1 if g has no local antimagic labeling at all.
    """
    if g.m > max_m:
        raise TooLarge(f"{g} has m = {g.m} > {max_m}")
    run = kernel or _kernels.min_colors_search
    best, _ = run(g.m, *_edge_arrays(g))
    return int(best)


# -- enumeration and cross-checking ----------------------------------------

def _multisets(total_max: int, parts_min: int, smallest: int, step: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of parts >= smallest (stepping by step), sum <= total_max."""
    def rec(prefix, lo, budget):
        if len(prefix) >= parts_min:
            yield tuple(prefix)
        a = lo
        while a <= budget:
            prefix.append(a)
            yield from rec(prefix, a, budget - a)
            prefix.pop()
            a += step
    yield from rec([], smallest, total_max)


def _valid_theta(lengths) -> bool:
    return lengths.count(1) <= 1 and sum(lengths) - len(lengths) + 2 >= 3


def all_theta_graphs(max_m: int) -> list[ThetaGraph]:
    """Every theta graph (s >= 2, no multi-edges) with m <= max_m, by (m, s, lengths)."""
    out = [make_theta(ls) for ls in _multisets(max_m, 2, 1, 1) if _valid_theta(list(ls))]
    return sorted(out, key=lambda h: (h.m, h.s, h.lengths))


def even_theta_graphs(max_m: int) -> list[ThetaGraph]:
    """Theta graphs with all path lengths even and m <= max_m."""
    out = [make_theta(ls) for ls in _multisets(max_m, 2, 2, 2)]
    return sorted(out, key=lambda h: (h.m, h.s, h.lengths))


@dataclass
class CrossCheckRow:
    graph: ThetaGraph
    classifier: bool
    search: bool
    brute: int | None = None

    @property
    def agrees(self) -> bool:
        ok = self.classifier == self.search
        if self.brute is not None:
            ok = ok and (self.brute == 2) == self.search
        return ok


@dataclass
class CrossCheckReport:
    max_m: int
    rows: list[CrossCheckRow]

    @property
    def disagreements(self) -> list[CrossCheckRow]:
        return [r for r in self.rows if not r.agrees]

    @property
    def positives(self) -> list[ThetaGraph]:
        return [r.graph for r in self.rows if r.search]

    @property
    def ok(self) -> bool:
        return not self.disagreements


def cross_check(max_m: int, brute_max_m: int = 9, prune: bool = True) -> CrossCheckReport:
    """Search vs classifier on every even theta graph with m <= max_m; below
    brute_max_m every theta graph is also run through the permutation oracle."""
    rows = {}
    for g in even_theta_graphs(max_m):
        rows[g] = CrossCheckRow(g, classify_family(g).is_two, exists_two_coloring(g, prune=prune).found)
    for g in all_theta_graphs(min(max_m, brute_max_m)):
        row = rows.get(g)
        if row is None:
            row = rows[g] = CrossCheckRow(g, classify_family(g).is_two,
                                          exists_two_coloring(g, prune=prune).found)
        row.brute = brute_force_min_colors(g, max_m=brute_max_m)
    ordered = sorted(rows.values(), key=lambda r: (r.graph.m, r.graph.s, r.graph.lengths))
    return CrossCheckReport(max_m, ordered)
