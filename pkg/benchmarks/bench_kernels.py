"""Compiled vs plain-Python kernels on a few fixed instances.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

from thetala import _kernels
from thetala.core import format_lengths, make_theta
from thetala.search import brute_force_min_colors, exists_two_coloring

# (lengths, prune); without pruning equal-length paths are tried in every order
COVER_CASES = [((2,) * 8, False), ((4, 8, 8, 8, 8, 8, 10, 10), False),
               ((6,) + (12,) * 7 + (14,) * 3, True), ((2,) * 30, True)]
BRUTE_CASES = [(2, 2, 4), (2, 2, 2), (1, 3, 5)]


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"numba active: {_kernels.HAVE_NUMBA}")
    print(f"{'kernel':<10} {'graph':<22} {'njit s':>10} {'python s':>10} {'speedup':>8}")
    cover_py = _kernels.python_impl(_kernels.cover_search)
    brute_py = _kernels.python_impl(_kernels.min_colors_search)
    rows = []
    for ls, prune in COVER_CASES:
        g = make_theta(ls)
        exists_two_coloring(g)  # compile outside the timing
        fast, a = _best(lambda: exists_two_coloring(g, prune=prune, count_all=True).count, args.repeat)
        slow, b = _best(lambda: exists_two_coloring(g, prune=prune, count_all=True, kernel=cover_py).count, 1)
        assert a == b
        rows.append(("cover", format_lengths(ls), fast, slow))
    for ls in BRUTE_CASES:
        g = make_theta(ls)
        brute_force_min_colors(g)
        fast, a = _best(lambda: brute_force_min_colors(g), args.repeat)
        slow, b = _best(lambda: brute_force_min_colors(g, kernel=brute_py), 1)
        assert a == b
        rows.append(("brute", format_lengths(ls), fast, slow))
    for name, ls, fast, slow in rows:
        print(f"{name:<10} {ls:<22} {fast:>10.4f} {slow:>10.4f} {slow / max(fast, 1e-9):>8.1f}")


if __name__ == "__main__":
    main()
