"""All runs (maximal repetitions) from O(n) LCE/LCS queries.

For each of the two symbol orders (the given order and its reverse) and each
position i, the longest Lyndon prefix of suffix i is p = nss[i] - i, where
nss is the next-lexicographically-smaller-suffix array computed right to
left with a monotone stack.  The periodic candidate anchored at that Lyndon
root is extended right by LCE and left by LCS; it is a run iff its length
reaches twice the period.  Every run is produced by at least one order, and
candidates that pass the length test have minimal period p (Lyndon roots are
unbordered), so deduplicating the triples yields exactly the runs.
"""

from array import array
from dataclasses import dataclass
from fractions import Fraction

from .sparse_lce import build_index

FWD = "fwd"
REV = "rev"

LT, EQ, GT = -1, 0, 1


@dataclass(frozen=True, order=True)
class Run:
    start: int   # 1-based, inclusive
    end: int     # 1-based, inclusive
    period: int  # minimal period

    @property
    def length(self):
        return self.end - self.start + 1

    @property
    def exponent(self):
        return Fraction(self.length, self.period)


class LceOracle:
    """Forward LCE and backward LCS provider with a query counter.

    Backend "sparse" builds one sparse index on the text and one on its
    reversal (lcs(x, y) = lce_rev(n-x+1, n-y+1)); backend "naive" answers
    by direct symbol scans.
    """

    def __init__(self, text, backend="sparse", tau=None):
        self.text = text
        self.n = len(text)
        self.calls = 0
        if backend == "sparse":
            self._fwd = build_index(text, tau=tau)
            self._rev = build_index(text.reversed(), tau=tau)
            self._lce = self._fwd.lce
            self._rev_lce = self._rev.lce
        elif backend == "naive":
            self._fwd = self._rev = None
            self._lce = self._naive_lce
            self._rev_lce = self._naive_rev_lce
        else:
            raise ValueError(f"unknown backend: {backend}")

    def _naive_lce(self, x, y):
        syms = self.text.symbols
        cmp = self.text.compare
        n = self.n
        d = 0
        while x + d <= n and y + d <= n and cmp(syms[x + d - 1], syms[y + d - 1]) == 0:
            d += 1
        return d

    def _naive_rev_lce(self, x, y):
        # lce on the reversed text, expressed on the original symbols
        syms = self.text.symbols
        cmp = self.text.compare
        n = self.n
        a = n - x + 1
        b = n - y + 1
        d = 0
        while a - d >= 1 and b - d >= 1 and cmp(syms[a - d - 1], syms[b - d - 1]) == 0:
            d += 1
        return d

    def lce(self, x, y):
        """Longest common prefix length of suffixes x and y."""
        self.calls += 1
        return self._lce(x, y)

    def lcs(self, x, y):
        """Longest common suffix length of prefixes w[1..x] and w[1..y]."""
        self.calls += 1
        if x < 1 or y < 1:
            return 0
        n = self.n
        return self._rev_lce(n - x + 1, n - y + 1)


def compare_suffixes(oracle, i, j, order):
    """Three-way order of suffixes i and j; an exhausted suffix is smaller
    under both orders (the sentinel convention)."""
    if i == j:
        raise ValueError("suffixes are distinct by position")
    n = oracle.n
    l = oracle.lce(i, j)
    if i + l > n:
        return LT
    if j + l > n:
        return GT
    text = oracle.text
    c = text.compare(text.symbols[i + l - 1], text.symbols[j + l - 1])
    return -c if order == REV else c


def next_smaller_suffix(oracle, order):
    """nss[i] = smallest j > i whose suffix is smaller, or n+1; 1-based.

    Right-to-left monotone stack; at most 2n suffix comparisons.
    """
    n = oracle.n
    nss = array("i", [n + 1]) * (n + 2)
    stack = []
    for i in range(n, 0, -1):
        while stack and compare_suffixes(oracle, stack[-1], i, order) != LT:
            stack.pop()
        if stack:
            nss[i] = stack[-1]
        stack.append(i)
    return nss


def compute_runs(text, backend="sparse", tau=None, oracle=None):
    """All runs of the text, sorted by (start, end)."""
    n = len(text)
    if oracle is None:
        if n == 0:
            return []
        oracle = LceOracle(text, backend=backend, tau=tau)
    found = set()
    for order in (FWD, REV):
        nss = next_smaller_suffix(oracle, order)
        for i in range(1, n + 1):
            p = nss[i] - i
            e_r = oracle.lce(i, i + p) if i + p <= n else 0
            e_l = oracle.lcs(i - 1, i + p - 1) if i > 1 else 0
            s = i - e_l
            e = i + p - 1 + e_r
            if e - s + 1 >= 2 * p:
                found.add((s, e, p))
    return [Run(*t) for t in sorted(found)]


def run_stats(runs):
    """(count, sum of exponents) of a run collection; the sum is exact."""
    total = Fraction(0)
    cnt = 0
    for r in runs:
        cnt += 1
        total += Fraction(r.end - r.start + 1, r.period)
    return cnt, total
