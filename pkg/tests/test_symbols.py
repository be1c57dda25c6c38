import random

import pytest

from sparseruns import ComparisonCounter, byte_compare, opaque_text_from_bytes, text_from_bytes
from sparseruns.symbols import EQ, GT, LT, OpaqueSymbol, opaque_compare


def test_empty_text():
    assert len(text_from_bytes(b"")) == 0


def test_basic_text():
    t = text_from_bytes(b"abc")
    assert len(t) == 3
    assert t.symbol(1) == ord("a")
    assert t.symbol(3) == ord("c")


def test_sample_string_length():
    assert len(text_from_bytes(b"abcabcababcabb$")) == 15


def test_byte_compare():
    assert byte_compare(1, 2) == LT
    assert byte_compare(2, 2) == EQ
    assert byte_compare(9, 2) == GT


def test_byte_compare_transitive():
    rng = random.Random(11)
    for _ in range(2000):
        a, b, c = (rng.randrange(256) for _ in range(3))
        if byte_compare(a, b) == LT and byte_compare(b, c) == LT:
            assert byte_compare(a, c) == LT


def test_compare_at():
    t = text_from_bytes(b"aba")
    assert t.compare_at(1, 3) == EQ
    assert t.compare_at(1, 2) == LT
    assert t.compare_at(2, 1) == GT


def test_reversed():
    t = text_from_bytes(b"abc").reversed()
    assert [t.symbol(i) for i in (1, 2, 3)] == [ord("c"), ord("b"), ord("a")]


def test_counted_view():
    counter = ComparisonCounter()
    t = text_from_bytes(b"ab").counted(counter)
    assert t.compare_at(1, 2) == LT
    assert t.compare_at(2, 2) == EQ
    assert counter.count == 2
    counter.reset()
    assert counter.count == 0


def test_opaque_symbols_compare_only():
    t = opaque_text_from_bytes(b"ba")
    a, b = t.symbols
    assert t.compare(a, b) == GT
    assert t.compare(a, a) == EQ
    assert opaque_compare(b, a) == LT
    with pytest.raises(TypeError):
        a < b
    with pytest.raises(TypeError):
        a == b
    with pytest.raises(TypeError):
        hash(a)
    assert isinstance(a, OpaqueSymbol)


def test_opaque_text_matches_byte_text():
    from sparseruns import compute_runs

    data = b"mississippi"
    assert compute_runs(opaque_text_from_bytes(data)) == compute_runs(text_from_bytes(data))
