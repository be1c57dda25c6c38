"""Order-maintenance list via integer list-labeling.

Nodes are small integer handles into parallel arrays.  Each node carries a
64-bit label; `precedes` is a single label comparison.  When an insertion
finds no free label between two neighbors, the smallest enclosing aligned
label range whose population is below an exponential density threshold is
relabeled evenly (amortized O(log m) per insertion).

Deletion is not supported; the construction that uses this list never
deletes.
"""

from array import array

BEGIN = 0  # head sentinel handle

_MAX_LABEL = 1 << 62
_APPEND_GAP = 1 << 32
_T = 1.375  # density threshold base; capacity ~ _T**62 nodes


class OmList:
    __slots__ = ("_label", "_next", "_prev", "_payload", "_tail", "relabel_ops")

    def __init__(self):
        self._label = array("q", [0])
        self._next = array("i", [-1])
        self._prev = array("i", [-1])
        self._payload = array("i", [0])
        self._tail = BEGIN
        self.relabel_ops = 0  # total nodes moved by relabels (instrumentation)

    def __len__(self):
        return len(self._label) - 1

    def insert_after(self, anchor, payload):
        """New node immediately after ``anchor`` (BEGIN for head insertion)."""
        label = self._label
        nxt = self._next
        if not 0 <= anchor < len(label):
            raise ValueError(f"not a live node: {anchor}")
        node = len(label)
        succ = nxt[anchor]
        lab = self._free_label(anchor, succ)
        if lab < 0:
            self._relabel_around(anchor)
            succ = nxt[anchor]
            lab = self._free_label(anchor, succ)
            assert lab >= 0
        label.append(lab)
        self._next.append(succ)
        self._prev.append(anchor)
        self._payload.append(payload)
        nxt[anchor] = node
        if succ >= 0:
            self._prev[succ] = node
        else:
            self._tail = node
        return node

    def _free_label(self, anchor, succ):
        lo = self._label[anchor]
        if succ < 0:
            hi = min(lo + _APPEND_GAP, _MAX_LABEL)
        else:
            hi = self._label[succ]
        if hi - lo >= 2:
            return (lo + hi) // 2
        return -1

    def _relabel_around(self, anchor):
        label = self._label
        prev = self._prev
        nxt = self._next
        base = label[anchor]
        cap = _T * _T
        for e in range(2, 63):
            width = 1 << e
            lo = base & ~(width - 1)
            hi = lo + width
            # nodes with labels in [lo, hi) are contiguous in the list
            first = anchor
            while prev[first] >= 0 and label[prev[first]] >= lo:
                first = prev[first]
            count = 0
            v = first
            while v >= 0 and label[v] < hi:
                count += 1
                v = nxt[v]
            if count + 1 <= cap:
                gap = width // (count + 1)
                v = first
                t = 1
                while t <= count:
                    label[v] = lo + t * gap
                    v = nxt[v]
                    t += 1
                self.relabel_ops += count
                return
            cap *= _T
        raise OverflowError("order-maintenance label space exhausted")

    def precedes(self, a, b):
        """True iff node a is strictly earlier in the list than node b."""
        return self._label[a] < self._label[b]

    def payload(self, node):
        return self._payload[node]

    def label(self, node):
        return self._label[node]

    def next(self, node):
        """Following node handle, or -1 at the end."""
        return self._next[node]

    def prev(self, node):
        """Preceding node handle; BEGIN before the first real node."""
        return self._prev[node]

    def first(self):
        return self._next[BEGIN]

    def last(self):
        """Last node handle (BEGIN when empty)."""
        return self._tail

    def __iter__(self):
        v = self._next[BEGIN]
        while v >= 0:
            yield v
            v = self._next[v]
