import random

from sparseruns.static_rmq import StaticRmq


def test_single_element():
    r = StaticRmq([42])
    assert r.query(0, 0) == 42


def test_exhaustive_small_arrays():
    rng = random.Random(2024)
    for n in (1, 2, 3, 31, 32, 33, 64, 100, 257):
        vals = [rng.randrange(-1000, 1000) for _ in range(n)]
        rmq = StaticRmq(vals)
        for l in range(n):
            best = vals[l]
            for r in range(l, n):
                if vals[r] < best:
                    best = vals[r]
                assert rmq.query(l, r) == best


def test_large_random_queries():
    rng = random.Random(7)
    n = 5000
    vals = [rng.randrange(10**9) for _ in range(n)]
    rmq = StaticRmq(vals)
    for _ in range(3000):
        l = rng.randrange(n)
        r = rng.randrange(l, n)
        assert rmq.query(l, r) == min(vals[l:r + 1])


def test_duplicates_and_plateaus():
    vals = [5] * 100
    rmq = StaticRmq(vals)
    assert rmq.query(0, 99) == 5
    assert rmq.query(33, 34) == 5
