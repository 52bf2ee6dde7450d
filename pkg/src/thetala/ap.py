"""Arithmetic-progression algebra used by every construction.

``APSpec(i, d, n)`` is the progression (i, i+d, ..., i+(n-1)d).  Two
progressions with opposite differences, interleaved, label a path whose
interior vertex sums alternate between two values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence


class LengthMismatch(ValueError):
    pass


class SpecMismatch(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class NotFound(LookupError):
    pass


@dataclass(frozen=True)
class APSpec:
    first: int
    diff: int
    length: int

    def __post_init__(self):
        if self.length < 1:
            raise ValueError(f"progression length must be >= 1, got {self.length}")

    @property
    def last(self) -> int:
        return self.first + (self.length - 1) * self.diff


def ap_terms(spec: APSpec) -> tuple[int, ...]:
    return tuple(spec.first + k * spec.diff for k in range(spec.length))


def diamond_interleave(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """(a1, b1, a2, b2, ...): odd positions from ``a``, even positions from ``b``."""
    if len(a) != len(b) or not a:
        raise LengthMismatch(f"cannot interleave sequences of lengths {len(a)} and {len(b)}")
    out: list[int] = []
    for p, q in zip(a, b):
        out.append(p)
        out.append(q)
    return tuple(out)


def deinterleave(seq: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    return tuple(seq[0::2]), tuple(seq[1::2])


def ap_path(first: int, x: int, diff: int, n: int) -> tuple[int, ...]:
    """A_n(first; diff) interleaved with A_n(x - first; -diff)."""
    return diamond_interleave(ap_terms(APSpec(first, diff, n)),
                              ap_terms(APSpec(x - first, -diff, n)))


def pairwise_sums(a_spec: APSpec, b_spec: APSpec) -> tuple[int, int | None]:
    """Constant sums of A(i; d) against A(j; -d).

    Returns ``(aligned, shifted)``: the k-th + k-th term sum, and the
    k-th + (k-1)-st term sum.  ``shifted`` is None for length-1 progressions.
    """
    if a_spec.diff != -b_spec.diff or a_spec.length != b_spec.length:
        raise SpecMismatch(f"{a_spec} and {b_spec} are not an opposite-difference pair")
    aligned = a_spec.first + b_spec.first
    shifted = aligned + a_spec.diff if a_spec.length > 1 else None
    return aligned, shifted


def _span(spec: APSpec) -> tuple[int, int]:
    return min(spec.first, spec.last), max(spec.first, spec.last)


def ap_disjoint(spec1: APSpec, spec2: APSpec) -> bool:
    """True iff the two progressions share no term."""
    d = abs(spec1.diff)
    if d == 0 or abs(spec2.diff) != d:
        return not set(ap_terms(spec1)) & set(ap_terms(spec2))
    lo1, hi1 = _span(spec1)
    lo2, hi2 = _span(spec2)
    # same step: a common term exists iff the residues agree and the ranges overlap
    return (lo1 - lo2) % d != 0 or max(lo1, lo2) > min(hi1, hi2)


def complete_path_labels(alpha1: int, r: int, x: int, y: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The forced labels of a 2r-edge path whose interior sums alternate x, y.

    alpha_k = alpha1 + (k-1)(y-x) sits on odd edges, beta_k = x - alpha_k on
    even edges.
    """
    gap = y - x
    alphas = tuple(alpha1 + k * gap for k in range(r))
    betas = tuple(x - a for a in alphas)
    return alphas, betas


# -- subset selection ------------------------------------------------------

@dataclass(frozen=True)
class SubsetSelection:
    n: int
    delta: int
    chosen: frozenset
    trace: dict = field(default_factory=dict)


def odd_subset_with_sum(n: int, delta: int) -> SubsetSelection:
    """Distinct odd numbers from {1, 3, ..., 2n-1} summing to ``delta``.

    Possible for every delta in [0, n^2] except 2 and n^2 - 2.  Small targets
    are hit directly; larger ones take the longest block of top odd numbers
    that fits and patch the remainder.
    """
    if n < 1:
        raise OutOfRange(f"n must be positive, got {n}")
    if delta < 0 or delta > n * n or delta in (2, n * n - 2):
        raise OutOfRange(f"no odd subset of [1, {2 * n - 1}] sums to {delta}")

    def done(chosen, **trace):
        return SubsetSelection(n, delta, frozenset(chosen), trace)

    if delta == 0:
        return done(())
    if delta <= 2 * n - 1:
        if delta % 2:
            return done((delta,))
        return done((1, delta - 1))

    # kappa(k) = sum of the k largest odd numbers = k(2n - k), increasing in k
    k = n
    while k * (2 * n - k) > delta:
        k -= 1
    kappa = k * (2 * n - k)
    tau = delta - kappa
    top = [2 * n - 2 * k + 1 + 2 * j for j in range(k)]
    trace = {"k": k, "kappa": kappa, "tau": tau}
    if tau == 0:
        return done(top, **trace)
    if tau % 2:
        return done(top + [tau], **trace)
    if tau >= 4:
        return done(top + [tau - 1, 1], **trace)
    # tau == 2: trade the smallest block element 2n-2k+1 for 2n-2k-1, 3, 1
    if k > n - 3:
        raise AssertionError(f"unreachable: tau=2 with k={k}, n={n}")
    return done(top[1:] + [2 * n - 2 * k - 1, 3, 1], **trace)


def signed_subset_with_sum(available: Sequence[int], delta: int) -> frozenset:
    """Subset of distinct signed odd numbers summing to ``delta``.

    When the positive part is exactly {1, 3, ..., 2n-1}, the explicit odd
    subset rule is tried first.  Otherwise an exhaustive search runs over
    positives (descending) then negatives (ascending magnitude), taking
    elements greedily whenever the rest can still reach the target; the
    first solution in that order is returned.
    """
    items = list(available)
    if len(set(items)) != len(items):
        raise ValueError("duplicate values in available set")
    if any(v % 2 == 0 for v in items):
        raise ValueError("available values must be odd")
    pos = sorted((v for v in items if v > 0), reverse=True)
    neg = sorted((v for v in items if v < 0), reverse=True)
    n = len(pos)
    if pos and sorted(pos) == list(range(1, 2 * n, 2)):
        try:
            return odd_subset_with_sum(n, delta).chosen
        except OutOfRange:
            pass

    order = pos + neg
    # reach[i] = every sum attainable from order[i:]
    reach = [set() for _ in range(len(order) + 1)]
    reach[-1] = {0}
    for i in range(len(order) - 1, -1, -1):
        reach[i] = reach[i + 1] | {v + order[i] for v in reach[i + 1]}
    if delta not in reach[0]:
        raise NotFound(f"no subset of {sorted(items)} sums to {delta}")
    chosen = []
    rest = delta
    for i, v in enumerate(order):
        if rest - v in reach[i + 1]:
            chosen.append(v)
            rest -= v
    return frozenset(chosen)
