"""Augmented balanced tree over the lexicographic list of inserted suffixes.

One treap, ordered like the list L, serves two purposes at once: subtree
sizes give the rank of a node (the dynamic sparse suffix array), and a
subtree-minimum over the per-entry "LCP to in-order successor" values gives
dynamic range-minimum queries on the lcp array.

Entry handles are allocated sequentially starting at 1 so that the caller
can share ids with its order-maintenance nodes; handle 0 is the BEGIN
sentinel (insert at the leftmost position).
"""

import random
from array import array

BEGIN = 0
TOP = (1 << 31) - 1  # stored lcp of the in-order last entry; excluded from minima


class RankMinTree:
    __slots__ = ("_left", "_right", "_parent", "_prio", "_size", "_val",
                 "_min", "_root", "_rng")

    def __init__(self, seed=0x5EED):
        z = [-1]
        self._left = array("i", z)
        self._right = array("i", z)
        self._parent = array("i", z)
        self._prio = array("i", [0])
        self._size = array("i", [0])
        self._val = array("i", [TOP])
        self._min = array("i", [TOP])
        self._root = -1
        self._rng = random.Random(seed)

    def __len__(self):
        return len(self._left) - 1

    # -- queries ------------------------------------------------------------

    def rank(self, entry):
        """Number of entries strictly before ``entry`` in tree order."""
        left = self._left
        right = self._right
        parent = self._parent
        size = self._size
        if not 1 <= entry < len(left):
            raise ValueError(f"not a live entry: {entry}")
        l = left[entry]
        r = size[l] if l >= 0 else 0
        v = entry
        p = parent[v]
        while p >= 0:
            if right[p] == v:
                l = left[p]
                r += (size[l] if l >= 0 else 0) + 1
            v = p
            p = parent[v]
        return r

    def range_min(self, from_rank, to_rank):
        """Minimum stored lcp over entries with rank in [from_rank..to_rank-1]."""
        if not 0 <= from_rank < to_rank <= len(self):
            raise ValueError(f"bad rank range [{from_rank}, {to_rank})")
        left = self._left
        right = self._right
        size = self._size
        val = self._val
        vmin = self._min
        res = TOP
        stack = [(self._root, 0)]
        while stack:
            v, off = stack.pop()
            if v < 0:
                continue
            if to_rank <= off or off + size[v] <= from_rank:
                continue
            if from_rank <= off and off + size[v] <= to_rank:
                m = vmin[v]
                if m < res:
                    res = m
                continue
            l = left[v]
            ls = size[l] if l >= 0 else 0
            my = off + ls
            if from_rank <= my < to_rank and val[v] < res:
                res = val[v]
            stack.append((l, off))
            stack.append((right[v], my + 1))
        return res

    def between_min(self, label, a, b):
        """Min stored lcp from entry a (inclusive) to entry b (exclusive).

        ``label`` is the order-maintenance label array; tree order equals
        list order, so labels act as search keys.  The two entries may be
        given in either order.  Single root-to-leaf descent, O(log n).
        """
        left = self._left
        right = self._right
        val = self._val
        vmin = self._min
        la = label[a]
        lb = label[b]
        if la > lb:
            la, lb = lb, la
        v = self._root
        while True:
            lv = label[v]
            if lv < la:
                v = right[v]
            elif lv >= lb:
                v = left[v]
            else:
                break
        res = val[v]
        u = left[v]
        while u >= 0:
            if label[u] >= la:
                m = val[u]
                r = right[u]
                if r >= 0 and vmin[r] < m:
                    m = vmin[r]
                if m < res:
                    res = m
                u = left[u]
            else:
                u = right[u]
        u = right[v]
        while u >= 0:
            if label[u] < lb:
                m = val[u]
                l = left[u]
                if l >= 0 and vmin[l] < m:
                    m = vmin[l]
                if m < res:
                    res = m
                u = right[u]
            else:
                u = left[u]
        return res

    def value(self, entry):
        """Stored lcp of ``entry`` (LCE to its in-order successor; TOP if last)."""
        return self._val[entry]

    def inorder(self):
        out = []
        stack = []
        v = self._root
        while stack or v >= 0:
            while v >= 0:
                stack.append(v)
                v = self._left[v]
            v = stack.pop()
            out.append(v)
            v = self._right[v]
        return out

    # -- mutation -----------------------------------------------------------

    def insert_after(self, after, lcp_left=None, lcp_right=None):
        """New entry immediately after ``after`` (BEGIN for the leftmost spot).

        ``after``'s stored lcp is overwritten with lcp_left; the new entry's
        stored lcp is lcp_right (TOP when it has no successor, i.e. None).
        Returns the new entry handle.
        """
        left = self._left
        right = self._right
        parent = self._parent
        prio = self._prio
        size = self._size
        val = self._val
        vmin = self._min
        entry = len(left)
        if after != BEGIN and not 1 <= after < entry:
            raise ValueError(f"not a live entry: {after}")
        if self._root < 0 and after != BEGIN:
            raise ValueError("insert after a node in an empty tree")
        left.append(-1)
        right.append(-1)
        parent.append(-1)
        prio.append(self._rng.getrandbits(31))
        size.append(1)
        v = TOP if lcp_right is None else lcp_right
        val.append(v)
        vmin.append(v)

        if self._root < 0:
            self._root = entry
            return entry

        if after == BEGIN:
            p = self._root
            while left[p] >= 0:
                p = left[p]
            left[p] = entry
            parent[entry] = p
        else:
            # overwrite the predecessor's stored lcp before any aggregate
            # work so every recomputation below sees the final value
            if lcp_left is not None:
                val[after] = lcp_left
                m = lcp_left
                l = left[after]
                if l >= 0 and vmin[l] < m:
                    m = vmin[l]
                r = right[after]
                if r >= 0 and vmin[r] < m:
                    m = vmin[r]
                vmin[after] = m
            if right[after] < 0:
                right[after] = entry
                parent[entry] = after
            else:
                p = right[after]
                while left[p] >= 0:
                    p = left[p]
                left[p] = entry
                parent[entry] = p

        pe = prio[entry]
        p = parent[entry]
        while p >= 0 and pe < prio[p]:
            self._rotate_up(entry)
            p = parent[entry]
        # single bottom-up pass restores sizes and minima along the path
        v = p
        while v >= 0:
            s = 1
            m = val[v]
            l = left[v]
            if l >= 0:
                s += size[l]
                if vmin[l] < m:
                    m = vmin[l]
            r = right[v]
            if r >= 0:
                s += size[r]
                if vmin[r] < m:
                    m = vmin[r]
            size[v] = s
            vmin[v] = m
            v = parent[v]
        return entry

    def set_value(self, entry, value):
        val = self._val
        val[entry] = value
        v = entry
        while v >= 0:
            self._pull_min(v)
            v = self._parent[v]

    def _pull_min(self, v):
        left = self._left
        right = self._right
        vmin = self._min
        m = self._val[v]
        l = left[v]
        if l >= 0 and vmin[l] < m:
            m = vmin[l]
        r = right[v]
        if r >= 0 and vmin[r] < m:
            m = vmin[r]
        vmin[v] = m

    def _pull(self, v):
        left = self._left
        right = self._right
        size = self._size
        vmin = self._min
        s = 1
        m = self._val[v]
        l = left[v]
        if l >= 0:
            s += size[l]
            if vmin[l] < m:
                m = vmin[l]
        r = right[v]
        if r >= 0:
            s += size[r]
            if vmin[r] < m:
                m = vmin[r]
        size[v] = s
        vmin[v] = m

    def _rotate_up(self, x):
        left = self._left
        right = self._right
        parent = self._parent
        p = parent[x]
        g = parent[p]
        if left[p] == x:
            b = right[x]
            left[p] = b
            right[x] = p
        else:
            b = left[x]
            right[p] = b
            left[x] = p
        if b >= 0:
            parent[b] = p
        parent[p] = x
        parent[x] = g
        if g < 0:
            self._root = x
        elif left[g] == p:
            left[g] = x
        else:
            right[g] = x
        self._pull(p)
        self._pull(x)

    # -- debug --------------------------------------------------------------

    def check(self):
        """Recompute every aggregate; raises AssertionError on mismatch."""
        for v in self.inorder():
            l, r = self._left[v], self._right[v]
            s = 1 + (self._size[l] if l >= 0 else 0) + (self._size[r] if r >= 0 else 0)
            m = self._val[v]
            if l >= 0:
                m = min(m, self._min[l])
            if r >= 0:
                m = min(m, self._min[r])
            assert self._size[v] == s, f"size broken at {v}"
            assert self._min[v] == m, f"min broken at {v}"
