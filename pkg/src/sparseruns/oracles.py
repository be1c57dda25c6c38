"""Brute-force reference implementations for property testing.

Everything here is definition-level and shares no code with the fast paths:
naive LCE by symbol scan, runs by period-by-period scanning with explicit
re-verification, and sparse suffix sorting by direct suffix comparison.
"""

from functools import cmp_to_key

from .runs import Run
from .sparse_lce import SampleSet


def naive_lce(text, x, y):
    """Longest common prefix of suffixes x and y by linear scan."""
    n = len(text)
    if not (1 <= x <= n and 1 <= y <= n):
        raise ValueError(f"positions must lie in [1..{n}]")
    syms = text.symbols
    cmp = text.compare
    d = 0
    while x + d <= n and y + d <= n and cmp(syms[x + d - 1], syms[y + d - 1]) == 0:
        d += 1
    return d


def lce_matrix(text):
    """All-pairs LCE table: m[x][y] for 1-based x, y (row/col 0 unused)."""
    n = len(text)
    syms = text.symbols
    cmp = text.compare
    m = [[0] * (n + 2) for _ in range(n + 2)]
    for x in range(n, 0, -1):
        row = m[x]
        nxt = m[x + 1]
        sx = syms[x - 1]
        for y in range(n, 0, -1):
            if cmp(sx, syms[y - 1]) == 0:
                row[y] = nxt[y + 1] + 1
    return m


def _minimal_period(syms, s, e, cmp):
    """Minimal period of syms[s-1..e-1] via the prefix function."""
    ln = e - s + 1
    pi = [0] * ln
    k = 0
    for i in range(1, ln):
        c = syms[s - 1 + i]
        while k > 0 and cmp(syms[s - 1 + k], c) != 0:
            k = pi[k - 1]
        if cmp(syms[s - 1 + k], c) == 0:
            k += 1
        pi[i] = k
    return ln - pi[-1]


def naive_runs(text):
    """All runs by scanning each period for maximal periodic intervals.

    Every maximal p-periodic interval of length >= 2p is a candidate; a
    candidate survives iff p is the true minimal period of the interval,
    which also forces maximality in the run sense.  Returns runs sorted by
    (start, end).
    """
    n = len(text)
    syms = text.symbols
    cmp = text.compare
    out = []
    for p in range(1, n // 2 + 1):
        j = 1
        while j <= n - p:
            if cmp(syms[j - 1], syms[j + p - 1]) != 0:
                j += 1
                continue
            s = j
            while j <= n - p and cmp(syms[j - 1], syms[j + p - 1]) == 0:
                j += 1
            e = j - 1 + p
            if e - s + 1 >= 2 * p and _minimal_period(syms, s, e, cmp) == p:
                out.append(Run(s, e, p))
    return sorted(out)


def naive_sparse_sort(text, sample):
    """(suffix order, adjacent LCPs) of sampled positions by direct comparison.

    ``sample`` is either a SampleSet (positions and comparisons then refer to
    the padded text, sentinels included) or a plain iterable of 1-based
    positions of the unpadded text.
    """
    syms = text.symbols
    cmp = text.compare
    if isinstance(sample, SampleSet):
        positions = sample.positions()
        limit = sample.N

        def sym_cmp(i, j):
            # positions beyond the text are the sentinel
            n = len(syms)
            if i > n or j > n:
                if i > n and j > n:
                    return 0
                return -1 if i > n else 1
            return cmp(syms[i - 1], syms[j - 1])
    else:
        positions = sorted(sample)
        limit = len(syms)

        def sym_cmp(i, j):
            return cmp(syms[i - 1], syms[j - 1])

    def suffix_lce(a, b):
        d = 0
        while a + d <= limit and b + d <= limit and sym_cmp(a + d, b + d) == 0:
            d += 1
        return d

    def suffix_cmp(a, b):
        if a == b:
            return 0
        d = suffix_lce(a, b)
        if a + d > limit:
            return -1
        if b + d > limit:
            return 1
        return sym_cmp(a + d, b + d)

    order = sorted(positions, key=cmp_to_key(suffix_cmp))
    lcps = [suffix_lce(order[i], order[i + 1]) for i in range(len(order) - 1)]
    return order, lcps
