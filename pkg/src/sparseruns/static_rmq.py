"""Static O(1) range-minimum structure over the finalized lcp array.

Fixed blocks of 32 values, a doubling (sparse) table over block minima, and
C-level ``min`` over short slices inside blocks.  Ties resolve to the value
itself (callers only consume the minimum value).
"""

_BLOCK = 32
_SHIFT = 5


class StaticRmq:
    __slots__ = ("_values", "_table", "_logs")

    def __init__(self, values):
        vals = list(values)
        self._values = vals
        nb = (len(vals) + _BLOCK - 1) >> _SHIFT
        block_mins = [min(vals[b << _SHIFT:(b + 1) << _SHIFT]) for b in range(nb)]
        table = [block_mins]
        j = 1
        while (1 << j) <= nb:
            prev = table[-1]
            half = 1 << (j - 1)
            table.append([min(prev[i], prev[i + half])
                          for i in range(nb - (1 << j) + 1)])
            j += 1
        self._table = table
        logs = [0] * (nb + 1)
        for i in range(2, nb + 1):
            logs[i] = logs[i >> 1] + 1
        self._logs = logs

    def __len__(self):
        return len(self._values)

    def query(self, l, r):
        """Minimum of values[l..r], inclusive."""
        if not 0 <= l <= r < len(self._values):
            raise ValueError(f"bad range [{l}, {r}] for length {len(self._values)}")
        vals = self._values
        bl = l >> _SHIFT
        br = r >> _SHIFT
        if bl == br:
            return min(vals[l:r + 1])
        res = min(min(vals[l:(bl + 1) << _SHIFT]), min(vals[br << _SHIFT:r + 1]))
        bl += 1
        if bl <= br - 1:
            j = self._logs[br - bl]
            t = self._table[j]
            m = min(t[bl], t[br - (1 << j)])
            if m < res:
                res = m
        return res
