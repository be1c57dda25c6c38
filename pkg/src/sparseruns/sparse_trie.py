"""Compacted trie over the fixed-length sampled keys w[x..x+tau^2].

Edge labels reference text positions (start, length) -- no symbol copies.
Children of a node are kept as a small list sorted by the first symbol of
each child edge and searched by binary search through the position
comparator, so the trie itself never sees symbol values.

Each leaf carries an ordered set B of order-maintenance node handles,
realized as a treap whose comparison is the current list-labeling order.
Every om node joins at most one B set, so the B treaps share one id space
(the om node handles) backed by parallel arrays.
"""

import random
from array import array
from typing import NamedTuple


class InsertOutcome(NamedTuple):
    is_new: bool
    leaf: int
    pred_leaf: int   # -1 when absent
    succ_leaf: int   # -1 when absent
    lcp_pred: int    # key-LCP with pred_leaf's key; meaningful iff pred_leaf >= 0
    lcp_succ: int


class SparseTrie:
    __slots__ = ("_cmp_pos", "_key_len", "_om", "_estart", "_elen",
                 "_children", "_leaf_pos", "_broot", "_bleft", "_bright",
                 "_bprio", "_rng", "leaf_count")

    def __init__(self, cmp_pos, key_len, om, seed=0xB0B5):
        self._cmp_pos = cmp_pos
        self._key_len = key_len
        self._om = om
        # node 0 is the root (empty edge, internal); leaves keep children=None
        self._estart = array("i", [0])
        self._elen = array("i", [0])
        self._children = [[]]
        self._leaf_pos = array("i", [-1])
        self._broot = array("i", [-1])
        # B treap arrays indexed by om node handle, grown on demand
        self._bleft = array("i")
        self._bright = array("i")
        self._bprio = array("i")
        self._rng = random.Random(seed)
        self.leaf_count = 0

    # -- trie ----------------------------------------------------------------

    def _new_node(self, estart, elen, leaf_pos):
        v = len(self._estart)
        self._estart.append(estart)
        self._elen.append(elen)
        # child lists are assigned only when a node becomes internal
        self._children.append(None)
        self._leaf_pos.append(leaf_pos)
        self._broot.append(-1)
        if leaf_pos >= 0:
            self.leaf_count += 1
        return v

    def _child_index(self, node, pos):
        """(index, found) of the child whose edge starts with symbol at pos."""
        ch = self._children[node]
        cmp_pos = self._cmp_pos
        estart = self._estart
        lo, hi = 0, len(ch)
        while lo < hi:
            mid = (lo + hi) // 2
            c = cmp_pos(pos, estart[ch[mid]])
            if c == 0:
                return mid, True
            if c < 0:
                hi = mid
            else:
                lo = mid + 1
        return lo, False

    def _max_leaf(self, v):
        ch = self._children
        while self._leaf_pos[v] < 0:
            v = ch[v][-1]
        return v

    def _min_leaf(self, v):
        ch = self._children
        while self._leaf_pos[v] < 0:
            v = ch[v][0]
        return v

    def insert_key(self, x):
        """Insert the key starting at position x; report leaf and neighbors.

        For a new key the outcome carries the lexicographically adjacent
        leaves and the exact key-LCP lengths to them (both < key length),
        determined during the descent.
        """
        kl = self._key_len
        cmp_pos = self._cmp_pos
        estart = self._estart
        elen = self._elen
        children = self._children
        pred_sub, pred_depth = -1, 0
        succ_sub, succ_depth = -1, 0
        cur = 0
        depth = 0
        while True:
            if depth == kl:
                return InsertOutcome(False, cur, -1, -1, 0, 0)
            idx, found = self._child_index(cur, x + depth)
            ch = children[cur]
            if not found:
                leaf = self._new_node(x + depth, kl - depth, x)
                ch.insert(idx, leaf)
                if idx > 0:
                    pred_sub, pred_depth = ch[idx - 1], depth
                if idx + 1 < len(ch):
                    succ_sub, succ_depth = ch[idx + 1], depth
                return self._new_outcome(leaf, pred_sub, pred_depth,
                                         succ_sub, succ_depth)
            if idx > 0:
                pred_sub, pred_depth = ch[idx - 1], depth
            if idx + 1 < len(ch):
                succ_sub, succ_depth = ch[idx + 1], depth
            child = ch[idx]
            es = estart[child]
            el = elen[child]
            t = 1
            while t < el:
                c = cmp_pos(x + depth + t, es + t)
                if c != 0:
                    # split the edge at offset t
                    mid = self._new_node(es, t, -1)
                    estart[child] = es + t
                    elen[child] = el - t
                    leaf = self._new_node(x + depth + t, kl - depth - t, x)
                    ch[idx] = mid
                    if c < 0:
                        children[mid] = [leaf, child]
                        succ_sub, succ_depth = child, depth + t
                    else:
                        children[mid] = [child, leaf]
                        pred_sub, pred_depth = child, depth + t
                    return self._new_outcome(leaf, pred_sub, pred_depth,
                                             succ_sub, succ_depth)
                t += 1
            depth += el
            cur = child

    def _new_outcome(self, leaf, pred_sub, pred_depth, succ_sub, succ_depth):
        pred = self._max_leaf(pred_sub) if pred_sub >= 0 else -1
        succ = self._min_leaf(succ_sub) if succ_sub >= 0 else -1
        return InsertOutcome(True, leaf, pred, succ,
                             pred_depth if pred >= 0 else 0,
                             succ_depth if succ >= 0 else 0)

    def key_start(self, leaf):
        """A representative starting position of the leaf's key."""
        return self._leaf_pos[leaf]

    def find_leaf(self, x):
        """Leaf of the key starting at x, or -1 if absent (no mutation)."""
        kl = self._key_len
        cur = 0
        depth = 0
        while depth < kl:
            idx, found = self._child_index(cur, x + depth)
            if not found:
                return -1
            child = self._children[cur][idx]
            es = self._estart[child]
            el = self._elen[child]
            for t in range(1, el):
                if self._cmp_pos(x + depth + t, es + t) != 0:
                    return -1
            depth += el
            cur = child
        return cur

    def leaves_inorder(self):
        out = []
        stack = [0]
        while stack:
            v = stack.pop()
            if self._leaf_pos[v] >= 0:
                out.append(v)
            else:
                stack.extend(reversed(self._children[v]))
        return out

    # -- per-leaf ordered sets -----------------------------------------------

    def _bgrow(self, node):
        bl = self._bleft
        while len(bl) <= node:
            bl.append(-1)
            self._bright.append(-1)
            self._bprio.append(self._rng.getrandbits(31))

    def leaf_neighbors(self, leaf, probe):
        """Immediate predecessor/successor of ``probe`` within the leaf's B set.

        ``probe`` must not already be a member; returns (-1 at either end).
        """
        label = self._om._label
        bleft = self._bleft
        bright = self._bright
        key = label[probe]
        pred = succ = -1
        v = self._broot[leaf]
        while v >= 0:
            lv = label[v]
            if key < lv:
                succ = v
                v = bleft[v]
            elif key > lv:
                pred = v
                v = bright[v]
            else:
                raise ValueError(f"probe {probe} already in B set")
        return pred, succ

    def leaf_add(self, leaf, node):
        """Insert ``node`` into the leaf's B set (ordered by list order)."""
        self._bgrow(node)
        label = self._om._label
        bleft = self._bleft
        bright = self._bright
        bprio = self._bprio
        key = label[node]
        path = []
        v = self._broot[leaf]
        while v >= 0:
            lv = label[v]
            if key == lv:
                raise ValueError(f"duplicate B insertion of node {node}")
            path.append(v)
            v = bleft[v] if key < lv else bright[v]
        if not path:
            self._broot[leaf] = node
            return
        p = path[-1]
        if key < label[p]:
            bleft[p] = node
        else:
            bright[p] = node
        # rotate up while the heap order is violated
        pr = bprio[node]
        x = node
        for i in range(len(path) - 1, -1, -1):
            p = path[i]
            if bprio[p] <= pr:
                break
            if bleft[p] == x:
                bleft[p] = bright[x]
                bright[x] = p
            else:
                bright[p] = bleft[x]
                bleft[x] = p
            g = path[i - 1] if i > 0 else -1
            if g < 0:
                self._broot[leaf] = x
            elif bleft[g] == p:
                bleft[g] = x
            else:
                bright[g] = x

    def leaf_min(self, leaf):
        v = self._broot[leaf]
        while self._bleft[v] >= 0:
            v = self._bleft[v]
        return v

    def leaf_max(self, leaf):
        v = self._broot[leaf]
        while self._bright[v] >= 0:
            v = self._bright[v]
        return v

    def leaf_members(self, leaf):
        """B members of the leaf in list order (for inspection and tests)."""
        out = []
        stack = []
        v = self._broot[leaf]
        while stack or v >= 0:
            while v >= 0:
                stack.append(v)
                v = self._bleft[v]
            v = stack.pop()
            out.append(v)
            v = self._bright[v]
        return out
