"""General-ordered-alphabet primitives.

Core algorithms in this package never inspect symbol values: the only
permitted operation is a three-way order comparison supplied by the text.
This module provides the text container, the byte-order comparator, an
opt-in comparison-counting adapter, and an opaque symbol wrapper used to
enforce the discipline in tests.
"""

LT, EQ, GT = -1, 0, 1


def byte_compare(a, b):
    """Three-way unsigned byte order."""
    return (a > b) - (a < b)


class ComparisonCounter:
    """Tally of symbol comparisons routed through a counting text view."""

    __slots__ = ("count",)

    def __init__(self):
        self.count = 0

    def reset(self):
        self.count = 0


class Text:
    """Immutable 1-based symbol sequence with a total-order comparator.

    ``compare`` is exposed as a plain attribute (not a method) so hot loops
    can alias it locally.
    """

    __slots__ = ("_syms", "compare")

    def __init__(self, symbols, compare):
        self._syms = symbols if isinstance(symbols, (bytes, tuple)) else tuple(symbols)
        self.compare = compare

    def __len__(self):
        return len(self._syms)

    def symbol(self, i):
        """Symbol at 1-based position i."""
        if not 1 <= i <= len(self._syms):
            raise IndexError(f"position {i} outside [1..{len(self._syms)}]")
        return self._syms[i - 1]

    @property
    def symbols(self):
        """The raw symbol sequence (0-based); callers must not exploit values."""
        return self._syms

    def compare_at(self, i, j):
        """Three-way comparison of the symbols at 1-based positions i and j."""
        return self.compare(self.symbol(i), self.symbol(j))

    def reversed(self):
        return Text(self._syms[::-1], self.compare)

    def counted(self, counter):
        """View of this text whose comparator bumps ``counter`` once per call."""
        base = self.compare

        def counting(a, b):
            counter.count += 1
            return base(a, b)

        return Text(self._syms, counting)


def text_from_bytes(data):
    """Text over raw bytes; symbol order is unsigned byte order."""
    return Text(bytes(data), byte_compare)


class OpaqueSymbol:
    """Symbol handle exposing no operations at all.

    Ordering is only reachable through :func:`opaque_compare`; the rich
    comparison operators and hashing raise so that any code path relying on
    symbol values beyond the comparator fails loudly.
    """

    __slots__ = ("_v",)

    def __init__(self, v):
        self._v = v

    def _blocked(self, other):
        raise TypeError("opaque symbols admit only the three-way comparator")

    __eq__ = __ne__ = __lt__ = __le__ = __gt__ = __ge__ = _blocked
    __hash__ = None

    def __repr__(self):
        return "OpaqueSymbol(<hidden>)"


def opaque_compare(a, b):
    x, y = a._v, b._v
    return (x > y) - (x < y)


def opaque_text_from_bytes(data):
    """Text whose symbols are opaque handles over the given bytes."""
    return Text(tuple(OpaqueSymbol(b) for b in bytes(data)), opaque_compare)
