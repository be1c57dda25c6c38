"""Difference covers of [0..k) with O(1) shift-witness queries.

A set D subset of [0..k) is a difference cover if every residue x has a
witness pair y, z in D with y - z = x (mod k).  The shift query: for any
integers i, j there is a d in [0..k) with (i+d) mod k in D and
(j+d) mod k in D; it is answered from a precomputed table.
"""

from math import isqrt


def is_difference_cover(k, elements):
    """Exhaustive check of the covering property, O(|D|^2 + k)."""
    if k < 1:
        raise ValueError("k must be positive")
    elems = sorted(set(elements))
    if elems and not (0 <= elems[0] and elems[-1] < k):
        raise ValueError(f"elements must lie in [0..{k})")
    covered = bytearray(k)
    left = k
    for y in elems:
        for z in elems:
            x = (y - z) % k
            if not covered[x]:
                covered[x] = 1
                left -= 1
        if not left:
            break
    return left == 0


class DifferenceCover:
    """A verified difference cover plus its delta table.

    delta[x] holds the z of some witness pair (y, z) for residue x, so the
    shift d of find_shift is a single table lookup.
    """

    __slots__ = ("k", "elements", "_delta", "_member")

    def __init__(self, k, elements):
        if k < 1:
            raise ValueError("k must be positive")
        elems = sorted(set(elements))
        if elems and not (0 <= elems[0] and elems[-1] < k):
            raise ValueError(f"elements must lie in [0..{k})")
        delta = [-1] * k
        filled = 0
        for y in elems:
            for z in elems:
                x = (y - z) % k
                if delta[x] < 0:
                    delta[x] = z
                    filled += 1
            if filled == k:
                break
        if filled != k:
            raise ValueError(f"{elems} is not a difference cover of [0..{k})")
        self.k = k
        self.elements = tuple(elems)
        self._delta = delta
        member = bytearray(k)
        for e in elems:
            member[e] = 1
        self._member = member

    def __contains__(self, residue):
        return bool(self._member[residue % self.k])

    def find_shift(self, i, j):
        """Some d in [0..k) with (i+d) mod k and (j+d) mod k both in D."""
        k = self.k
        return (self._delta[(j - i) % k] - i) % k

    def __repr__(self):
        return f"DifferenceCover(k={self.k}, elements={list(self.elements)})"


def build_difference_cover(k):
    """The simple cover [0..floor(sqrt(k))] + multiples of floor(sqrt(k)).

    Size is at most 3*ceil(sqrt(k)).
    """
    if k < 1:
        raise ValueError("k must be positive")
    r = isqrt(k)
    elems = set(x for x in range(r + 1) if x < k)
    m = 2 * r
    while m < k:
        elems.add(m)
        m += r
    return DifferenceCover(k, elems)
