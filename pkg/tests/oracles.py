"""Brute-force oracles, deliberately independent of the library code paths."""

import itertools
from math import prod


def semigroup_set(gens, bound=None):
    """All elements of <gens> below ``bound`` (default: product of generators)."""
    if bound is None:
        bound = max(prod(gens), 2)
    reach = {0}
    for g in gens:
        reach = {s + k * g for s in reach for k in range(bound // g + 1) if s + k * g < bound}
    return reach, bound


def gaps(gens):
    members, bound = semigroup_set(gens)
    return sorted(k for k in range(bound) if k not in members)


def count_below(gap_list, k):
    if k <= 0:
        return 0
    return k - sum(1 for x in gap_list if x < k)


def r_exhaustive(gap_lists, m):
    """min over all compositions m_1+...+m_n = m of sum_i #S_i ∩ [0, m_i)."""
    if m <= 0:
        return 0
    n = len(gap_lists)
    counts = [[count_below(g, k) for k in range(m + 1)] for g in gap_lists]
    best = None
    for head in itertools.product(range(m + 1), repeat=n - 1):
        if sum(head) > m:
            continue
        parts = head + (m - sum(head),)
        value = sum(c[p] for c, p in zip(counts, parts))
        best = value if best is None else min(best, value)
    return best


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def alexander_expand(gap_list):
    """Expand 1 + (t - 1) P(t) by explicit polynomial multiplication."""
    if not gap_list:
        return [1]
    P = [0] * (max(gap_list) + 1)
    for k in gap_list:
        P[k] = 1
    out = poly_mul([-1, 1], P)
    out[0] += 1
    return out
