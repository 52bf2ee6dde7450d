import itertools
import os
import subprocess
import sys

import numpy as np
from hypothesis import given, strategies as st

from thetala import _kernels
from thetala.core import make_theta
from thetala.search import brute_force_min_colors


@given(st.lists(st.integers(1, 30), min_size=0, max_size=8), st.integers(-5, 120))
def test_orient_subset_counts(gains, target):
    arr = np.array(gains, dtype=np.int64)
    flags = np.zeros(len(gains), dtype=np.int64)
    ways = _kernels.orient_subset(arr, target, flags)
    brute = sum(1 for k in range(len(gains) + 1) for c in itertools.combinations(range(len(gains)), k)
                if sum(gains[i] for i in c) == target)
    assert ways == brute
    if ways:
        assert sum(g for g, fl in zip(gains, flags) if fl) == target
    py_flags = np.zeros(len(gains), dtype=np.int64)
    assert _kernels.python_impl(_kernels.orient_subset)(arr, target, py_flags) == ways
    assert (py_flags == flags).all()


def test_python_brute_force_kernel_agrees():
    py = _kernels.python_impl(_kernels.min_colors_search)
    for lengths in [(1, 2), (2, 2, 2), (2, 2, 2, 2), (1, 3, 3)]:
        g = make_theta(lengths)
        assert brute_force_min_colors(g, kernel=py) == brute_force_min_colors(g)


def test_env_flag_disables_numba():
    env = dict(os.environ, THETALA_DISABLE_NUMBA="1")
    code = ("from thetala import _kernels; from thetala.search import exists_two_coloring;"
            "from thetala.core import make_theta;"
            "print(_kernels.HAVE_NUMBA, exists_two_coloring(make_theta([2, 4, 4, 4])).found)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.split() == ["False", "True"]


def test_python_impl_identity_without_numba():
    def f(x):
        return x
    assert _kernels.python_impl(f) is f
