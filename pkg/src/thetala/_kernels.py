"""Inner loops of the exact searches.

Written in the numba-compatible subset of Python.  They are compiled with
``numba.njit`` unless ``THETALA_DISABLE_NUMBA`` is set to a non-empty value
other than ``0`` (or numba is missing), in which case the same functions run
as plain Python over numpy arrays.
"""
import os

import numpy as np

DISABLE_NUMBA = os.environ.get("THETALA_DISABLE_NUMBA", "0") not in ("", "0")

try:
    if DISABLE_NUMBA:
        raise ImportError("disabled by THETALA_DISABLE_NUMBA")
    from numba import njit
    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda fn: fn


def python_impl(fn):
    """The uncompiled function behind a kernel (itself when numba is off)."""
    return getattr(fn, "py_func", fn)


@njit(cache=True)
def orient_subset(gains, target, flags):
    """0/1 choice of ``gains`` summing to ``target``; writes choice into flags.

    Returns the number of distinct choices (0 when impossible).  The choice
    written is the one that prefers leaving later items unflipped.
    """
    n = gains.shape[0]
    for i in range(n):
        flags[i] = 0
    if target < 0:
        return 0
    ways = np.zeros((n + 1, target + 1), dtype=np.int64)
    ways[0, 0] = 1
    for i in range(n):
        gi = gains[i]
        for v in range(target + 1):
            w = ways[i, v]
            if v >= gi:
                w += ways[i, v - gi]
            ways[i + 1, v] = w
    total = ways[n, target]
    if total == 0:
        return 0
    v = target
    for i in range(n - 1, -1, -1):
        if ways[i, v] == 0:
            flags[i] = 1
            v -= gains[i]
    return total


@njit(cache=True)
def _coverable(m, covered, remaining, floor, cand_class, cand_ptr, cand_lab, lab_ptr, lab_cands):
    """False if the smallest uncovered label fits in no remaining candidate.

    A candidate of class k is still usable only above ``floor[k]``, the last
    one taken for that class (symmetry breaking).
    """
    lab = 1
    while lab <= m and covered[lab]:
        lab += 1
    if lab > m:
        return True
    for q in range(lab_ptr[lab], lab_ptr[lab + 1]):
        c = lab_cands[q]
        if remaining[cand_class[c]] == 0 or c <= floor[cand_class[c]]:
            continue
        ok = True
        for z in range(cand_ptr[c], cand_ptr[c + 1]):
            if covered[cand_lab[z]]:
                ok = False
                break
        if ok:
            return True
    return False


@njit(cache=True)
def _unplace(depth, c, chosen, path_class, covered, remaining, floor, cand_class, cand_ptr, cand_lab):
    for q in range(cand_ptr[c], cand_ptr[c + 1]):
        covered[cand_lab[q]] = False
    k = cand_class[c]
    remaining[k] += 1
    if depth > 0 and path_class[depth - 1] == k:
        floor[k] = chosen[depth - 1]
    else:
        floor[k] = -1


@njit(cache=True)
def cover_search(m, y, n_paths, class_count, path_class,
                 cand_class, cand_ptr, cand_lab, cand_lo, cand_hi,
                 lab_ptr, lab_cands, class_ptr,
                 prune, count_all, out_chosen, out_flips):
    """Pick one canonical label set per path so the sets partition [1, m]
    and some orientation puts exactly y on u.

    Paths are filled longest first, candidates in ascending alpha_1 order.
    With ``prune`` equal-length paths take candidates in increasing order
    (each cover is reached once) and a branch is cut as soon as the smallest
    uncovered label fits no remaining candidate.  Without it every ordering
    of equal-length paths is walked.

    Returns (solutions, nodes); solutions counts covers times orientations
    as visited.  Without ``count_all`` the search stops at the first one.
    The first solution is written to ``out_chosen`` (candidate per path)
    and ``out_flips`` (1 = reversed).
    """
    chosen = np.zeros(n_paths, dtype=np.int64)
    covered = np.zeros(m + 1, dtype=np.bool_)
    remaining = class_count.copy()
    floor = np.full(class_count.shape[0], -1, dtype=np.int64)
    hi_ptr = np.zeros(n_paths + 1, dtype=np.int64)
    pos = np.zeros(n_paths + 1, dtype=np.int64)
    gains = np.zeros(n_paths, dtype=np.int64)
    tmp_flags = np.zeros(n_paths, dtype=np.int64)
    solutions = 0
    nodes = 0

    depth = 0
    pos[0] = class_ptr[path_class[0]]
    hi_ptr[0] = class_ptr[path_class[0] + 1]

    while depth >= 0:
        placed = False
        while pos[depth] < hi_ptr[depth]:
            c = pos[depth]
            pos[depth] += 1
            ok = True
            for q in range(cand_ptr[c], cand_ptr[c + 1]):
                if covered[cand_lab[q]]:
                    ok = False
                    break
            if not ok:
                continue
            for q in range(cand_ptr[c], cand_ptr[c + 1]):
                covered[cand_lab[q]] = True
            remaining[cand_class[c]] -= 1
            chosen[depth] = c
            nodes += 1
            floor[cand_class[c]] = c
            if prune and depth < n_paths - 1:
                if not _coverable(m, covered, remaining, floor, cand_class, cand_ptr, cand_lab,
                                  lab_ptr, lab_cands):
                    _unplace(depth, c, chosen, path_class, covered, remaining, floor,
                             cand_class, cand_ptr, cand_lab)
                    continue
            placed = True
            break

        if not placed:
            depth -= 1
            if depth >= 0:
                _unplace(depth, chosen[depth], chosen, path_class, covered, remaining, floor,
                         cand_class, cand_ptr, cand_lab)
            continue

        if depth == n_paths - 1:
            base = 0
            for i in range(n_paths):
                base += cand_lo[chosen[i]]
                gains[i] = cand_hi[chosen[i]] - cand_lo[chosen[i]]
            ways = orient_subset(gains, y - base, tmp_flags)
            if ways > 0:
                if solutions == 0:
                    for i in range(n_paths):
                        out_chosen[i] = chosen[i]
                        out_flips[i] = tmp_flags[i]
                solutions += ways
                if not count_all:
                    return solutions, nodes
            _unplace(depth, chosen[depth], chosen, path_class, covered, remaining, floor,
                     cand_class, cand_ptr, cand_lab)
            continue

        depth += 1
        k = path_class[depth]
        start = class_ptr[k]
        if prune and path_class[depth - 1] == k:
            start = chosen[depth - 1] + 1
        pos[depth] = start
        hi_ptr[depth] = class_ptr[k + 1]

    return solutions, nodes


@njit(cache=True)
def min_colors_search(m, n_vertices, eu, ev, fin_ptr, fin_list, nbr_ptr, nbr_list, final_depth):
    """Fewest distinct vertex sums over all local antimagic bijections.

    Edges are labeled in the given order; once every edge at a vertex is
    labeled its sum is final and is compared against its finalized
    neighbours.  Branches whose finalized palette already reaches the best
    count are cut.  Returns (best, nodes); best is -1 if no labeling exists.
    """
    best = n_vertices + 1
    used = np.zeros(m + 1, dtype=np.bool_)
    vsum = np.zeros(n_vertices, dtype=np.int64)
    ccount = np.zeros(m * m + 2, dtype=np.int64)
    lab = np.zeros(m, dtype=np.int64)
    distinct = 0
    nodes = 0
    d = 0
    while d >= 0:
        cur = lab[d]
        if cur != 0:
            for q in range(fin_ptr[d], fin_ptr[d + 1]):
                w = fin_list[q]
                ccount[vsum[w]] -= 1
                if ccount[vsum[w]] == 0:
                    distinct -= 1
            vsum[eu[d]] -= cur
            vsum[ev[d]] -= cur
            used[cur] = False
        nxt = cur + 1
        while nxt <= m and used[nxt]:
            nxt += 1
        if nxt > m:
            lab[d] = 0
            d -= 1
            continue
        lab[d] = nxt
        used[nxt] = True
        vsum[eu[d]] += nxt
        vsum[ev[d]] += nxt
        nodes += 1
        ok = True
        for q in range(fin_ptr[d], fin_ptr[d + 1]):
            w = fin_list[q]
            for r in range(nbr_ptr[w], nbr_ptr[w + 1]):
                z = nbr_list[r]
                if final_depth[z] <= d and vsum[z] == vsum[w]:
                    ok = False
            if ccount[vsum[w]] == 0:
                distinct += 1
            ccount[vsum[w]] += 1
        if distinct >= best:
            ok = False
        if not ok:
            continue
        if d == m - 1:
            best = distinct
            if best <= 2:
                return best, nodes
            continue
        d += 1
        lab[d] = 0
    if best == n_vertices + 1:
        return -1, nodes
    return best, nodes
