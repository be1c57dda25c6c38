"""Sparse LCE index over difference-cover-sampled positions.

The sampled set M holds every position whose residue mod tau^2 lies in a
difference cover D.  Suffixes starting in M are inserted right to left into
a lexicographic list (order maintenance), an augmented tree holding adjacent
LCP values (rank + range-min), and a compacted trie over the length-(tau^2+1)
keys whose leaves bucket positions sharing a key.  Finalization emits the
plain sparse suffix array, lcp array, and a static RMQ; an LCE query for
arbitrary positions scans at most tau^2 symbols until both positions fall in
M and finishes with one RMQ.

The input text is padded with one explicit sentinel (smaller than every
symbol) plus 2*tau^2 further sentinels, so every sampled key is well defined
and each sampled position k <= n has its shifted partner k+tau^2 inside the
padded range.  All-sentinel suffixes are inserted analytically, without trie
probes: they order by increasing length with pairwise LCE = shorter length.
"""

import math
from array import array

from .difference_cover import DifferenceCover, build_difference_cover
from .order_maintenance import BEGIN, OmList
from .rank_min_tree import TOP, RankMinTree
from .sparse_trie import SparseTrie
from .static_rmq import StaticRmq
from .symbols import byte_compare


def choose_tau(n):
    """Smallest tau >= 1 with tau^3 >= log2(n), i.e. ceil(log2(n) ** (1/3))."""
    if n <= 1:
        return 1
    lg = math.log2(n)
    t = 1
    while t * t * t < lg - 1e-12:
        t += 1
    return t


class PaddedText:
    """Position-comparison view of a text extended with trailing sentinels.

    Positions in [1..n] carry the text's symbols; every position beyond n is
    the sentinel, strictly smaller than any symbol and equal to itself.
    Sentinel comparisons never touch the symbol comparator.
    """

    __slots__ = ("text", "n", "N", "_syms", "_cmp", "cmp_pos")

    def __init__(self, text, pad):
        self.text = text
        self.n = len(text)
        self.N = len(text) + pad
        self._syms = text.symbols
        self._cmp = text.compare
        # plain byte texts skip the comparator indirection
        self.cmp_pos = (self._cmp_pos_bytes if text.compare is byte_compare
                        else self._cmp_pos_generic)

    def _cmp_pos_generic(self, i, j):
        n = self.n
        if i > n or j > n:
            if i > n and j > n:
                return 0
            return -1 if i > n else 1
        s = self._syms
        return self._cmp(s[i - 1], s[j - 1])

    def _cmp_pos_bytes(self, i, j):
        n = self.n
        if i > n or j > n:
            if i > n and j > n:
                return 0
            return -1 if i > n else 1
        s = self._syms
        a = s[i - 1]
        b = s[j - 1]
        return (a > b) - (a < b)


class SampleSet:
    """The sampled position set M of the padded text."""

    __slots__ = ("tau", "k_mod", "dc", "n", "N", "_member")

    def __init__(self, n, tau, dc=None):
        self.tau = tau
        self.k_mod = tau * tau
        self.dc = dc if dc is not None else build_difference_cover(self.k_mod)
        if self.dc.k != self.k_mod:
            raise ValueError("difference cover modulus must equal tau^2")
        self.n = n
        self.N = n + 1 + 2 * self.k_mod
        member = bytearray(self.N + 1)
        in_dc = self.dc._member
        k = self.k_mod
        for i in range(1, self.N + 1):
            if in_dc[i % k]:
                member[i] = 1
        self._member = member

    def membership(self, i):
        return 1 <= i <= self.N and bool(self._member[i])

    def positions(self):
        """All members of [1..N], ascending."""
        m = self._member
        return [i for i in range(1, self.N + 1) if m[i]]

    def __len__(self):
        return sum(self._member)


class Builder:
    """Transient construction state, kept only for inspection and tests."""

    __slots__ = ("sample", "padded", "om", "nodes", "tree", "trie",
                 "sentinel_members")

    def __init__(self, sample, padded):
        self.sample = sample
        self.padded = padded
        self.om = OmList()
        self.nodes = array("i", bytes(4 * (sample.N + 2)))  # 0 = nil
        self.tree = RankMinTree()
        self.trie = SparseTrie(padded.cmp_pos, sample.k_mod + 1, self.om)
        self.sentinel_members = []  # B of the (virtual) all-sentinel leaf


class SparseLceIndex:
    """Finalized index: sparse suffix array, lcp array, static RMQ."""

    __slots__ = ("text", "sample", "sa", "suf", "lcp", "rmq", "n")

    def __init__(self, text, sample, sa, suf, lcp, rmq):
        self.text = text
        self.sample = sample
        self.sa = sa
        self.suf = suf
        self.lcp = lcp
        self.rmq = rmq
        self.n = len(text)

    def lce(self, x, y):
        """Length of the longest common prefix of suffixes x and y of the text."""
        n = self.n
        if not (1 <= x <= n and 1 <= y <= n):
            raise ValueError(f"positions must lie in [1..{n}]")
        if x == y:
            return n - x + 1
        member = self.sample._member
        syms = self.text.symbols
        cmp = self.text.compare
        d = 0
        while True:
            if member[x] and member[y]:
                return d + self._member_lce_raw(x, y)
            if x > n or y > n:
                return d
            if cmp(syms[x - 1], syms[y - 1]) != 0:
                return d
            x += 1
            y += 1
            d += 1

    def _member_lce_raw(self, x, y):
        """Padded-text LCE of two distinct member positions."""
        sa = self.sa
        j = sa[x]
        k = sa[y]
        if j > k:
            j, k = k, j
        return self.rmq.query(j - 1, k - 2)

    def member_lce(self, x, y):
        """LCE restricted to sampled positions: one rank pair plus one RMQ."""
        n = self.n
        if not (1 <= x <= n and 1 <= y <= n):
            raise ValueError(f"positions must lie in [1..{n}]")
        if not (self.sa[x] and self.sa[y]):
            raise ValueError("member_lce requires sampled positions")
        if x == y:
            return n - x + 1
        v = self._member_lce_raw(x, y)
        cap = n - (x if x > y else y) + 1
        return v if v < cap else cap


def build_index(text, tau=None, dc=None, keep_builder=False):
    """Build the sparse LCE index by right-to-left suffix insertion.

    ``tau`` overrides the automatic sampling parameter; ``dc`` supplies an
    explicit difference cover of [0..tau^2).  With ``keep_builder`` the
    transient construction state is returned alongside the index.
    """
    n = len(text)
    if tau is None:
        tau = choose_tau(n)
    if tau < 1:
        raise ValueError("tau must be >= 1")
    sample = SampleSet(n, tau, dc)
    padded = PaddedText(text, 1 + 2 * sample.k_mod)
    b = Builder(sample, padded)
    _construct(b)
    index = _finalize(text, b)
    if keep_builder:
        return index, b
    return index


def _construct(b):
    sample = b.sample
    padded = b.padded
    om = b.om
    tree = b.tree
    trie = b.trie
    nodes = b.nodes
    n = sample.n
    N = sample.N
    t2 = sample.k_mod
    cmp_pos = padded.cmp_pos
    payload = om.payload
    labels = om._label
    members = sample.positions()

    for k in reversed(members):
        if k > n:
            # all-sentinel suffix: largest so far, append at the end of L
            tail = om.last()
            node = om.insert_after(tail, k)
            if tail == BEGIN:
                ent = tree.insert_after(BEGIN, None, None)
            else:
                ent = tree.insert_after(tail, N - payload(tail) + 1, None)
            assert ent == node
            nodes[k] = node
            if k + t2 <= N:
                b.sentinel_members.append(nodes[k + t2])
            continue

        outcome = trie.insert_key(k)
        leaf = outcome.leaf
        pred_node = succ_node = 0
        lcp_left = lcp_right = None
        if outcome.is_new:
            if outcome.pred_leaf >= 0:
                pred_node = nodes[payload(trie.leaf_max(outcome.pred_leaf)) - t2]
                lcp_left = outcome.lcp_pred
            if outcome.succ_leaf >= 0:
                succ_node = nodes[payload(trie.leaf_min(outcome.succ_leaf)) - t2]
                lcp_right = outcome.lcp_succ
        else:
            probe = nodes[k + t2]
            pb, sb = trie.leaf_neighbors(leaf, probe)
            if pb >= 0:
                pred_node = nodes[payload(pb) - t2]
                lcp_left = t2 + tree.between_min(labels, probe, pb)
            if sb >= 0:
                succ_node = nodes[payload(sb) - t2]
                if pb >= 0:
                    # LCE(pred, succ) = min of the two sides, so when the
                    # left side exceeds it the right side equals it
                    g = tree.value(pred_node)
                    lcp_right = g if lcp_left > g \
                        else t2 + tree.between_min(labels, probe, sb)
                else:
                    lcp_right = t2 + tree.between_min(labels, probe, sb)
        # a missing side falls back to the current list neighbor; the
        # neighbor then has a different key, so a direct bounded scan
        # (< tau^2 + 1 symbols) yields the LCE
        if not pred_node:
            p = om.prev(succ_node) if succ_node else om.last()
            if p != BEGIN:
                pred_node = p
                lcp_left = _scan_lce(cmp_pos, k, payload(p))
        if not succ_node:
            s = om.next(pred_node) if pred_node else om.first()
            if s >= 0:
                succ_node = s
                lcp_right = _scan_lce(cmp_pos, k, payload(s))
        anchor = pred_node if pred_node else BEGIN
        assert om.next(anchor) == (succ_node if succ_node else -1)
        node = om.insert_after(anchor, k)
        ent = tree.insert_after(anchor, lcp_left, lcp_right)
        assert ent == node
        nodes[k] = node
        trie.leaf_add(leaf, nodes[k + t2])


def _scan_lce(cmp_pos, a, bpos):
    d = 0
    while cmp_pos(a + d, bpos + d) == 0:
        d += 1
    return d


def _finalize(text, b):
    sample = b.sample
    tree = b.tree
    sa = array("i", bytes(4 * (sample.N + 1)))
    suf = array("i")
    lcp = array("i")
    value = tree.value
    rank1 = 1
    for node in b.om:
        pos = b.om.payload(node)
        sa[pos] = rank1
        suf.append(pos)
        v = value(node)
        if v != TOP:
            lcp.append(v)
        rank1 += 1
    assert len(lcp) == max(len(suf) - 1, 0)
    rmq = StaticRmq(lcp)
    return SparseLceIndex(text, sample, sa, suf, lcp, rmq)
