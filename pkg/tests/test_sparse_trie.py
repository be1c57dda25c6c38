import random

import pytest

from sparseruns import text_from_bytes
from sparseruns.order_maintenance import BEGIN, OmList
from sparseruns.sparse_lce import PaddedText
from sparseruns.sparse_trie import SparseTrie


def _setup(data, key_len):
    padded = PaddedText(text_from_bytes(data), key_len + 1)
    om = OmList()
    trie = SparseTrie(padded.cmp_pos, key_len, om)
    return padded, om, trie


def _key_cmp(padded, key_len, a, b):
    for d in range(key_len):
        c = padded.cmp_pos(a + d, b + d)
        if c:
            return c
    return 0


def _key_lcp(padded, key_len, a, b):
    d = 0
    while d < key_len and padded.cmp_pos(a + d, b + d) == 0:
        d += 1
    return d


def test_first_key_is_new():
    padded, om, trie = _setup(b"abaab", 2)
    out = trie.insert_key(1)
    assert out.is_new and out.pred_leaf == -1 and out.succ_leaf == -1
    assert trie.leaf_count == 1
    assert trie.key_start(out.leaf) == 1


def test_existing_key_is_found():
    padded, om, trie = _setup(b"abaab", 2)
    first = trie.insert_key(1)   # "ab"
    again = trie.insert_key(4)   # "ab" again
    assert not again.is_new
    assert again.leaf == first.leaf


def test_neighbor_reporting():
    padded, om, trie = _setup(b"abaab", 2)
    ab = trie.insert_key(1)      # "ab"
    aa = trie.insert_key(3)      # "aa" -> predecessor of nothing, successor "ab"
    assert aa.is_new
    assert aa.pred_leaf == -1 and aa.succ_leaf == ab.leaf
    assert aa.lcp_succ == 1
    ba = trie.insert_key(2)      # "ba" -> after "ab"
    assert ba.pred_leaf == ab.leaf and ba.succ_leaf == -1
    assert ba.lcp_pred == 0
    tail = trie.insert_key(5)    # "b<end>" sorts before "ba"
    assert tail.pred_leaf == ab.leaf and tail.succ_leaf == ba.leaf
    assert tail.lcp_pred == 0 and tail.lcp_succ == 1
    starts = [trie.key_start(v) for v in trie.leaves_inorder()]
    assert starts == [3, 1, 5, 2]


def test_random_tries_match_sorted_keys():
    rng = random.Random(31337)
    for trial in range(150):
        n = rng.randint(1, 40)
        sigma = rng.choice([1, 2, 3, 26])
        data = bytes(rng.randrange(97, 97 + sigma) for _ in range(n))
        key_len = rng.choice([1, 2, 3, 4])
        padded, om, trie = _setup(data, key_len)
        positions = list(range(1, n + 1))
        rng.shuffle(positions)
        reps = {}  # canonical position per distinct key
        for x in positions:
            out = trie.insert_key(x)
            match = next((r for r in reps
                          if _key_cmp(padded, key_len, r, x) == 0), None)
            assert out.is_new == (match is None)
            if match is None:
                reps[x] = out.leaf
                smaller = [r for r in reps if _key_cmp(padded, key_len, r, x) < 0]
                larger = [r for r in reps if _key_cmp(padded, key_len, r, x) > 0]
                if smaller:
                    pred = _extreme(padded, key_len, smaller, want_max=True)
                    assert out.pred_leaf == reps[pred]
                    assert out.lcp_pred == _key_lcp(padded, key_len, pred, x)
                else:
                    assert out.pred_leaf == -1
                if larger:
                    succ = _extreme(padded, key_len, larger, want_max=False)
                    assert out.succ_leaf == reps[succ]
                    assert out.lcp_succ == _key_lcp(padded, key_len, succ, x)
                else:
                    assert out.succ_leaf == -1
            else:
                assert out.leaf == reps[match]
        leaves = trie.leaves_inorder()
        starts = [trie.key_start(v) for v in leaves]
        for a, b in zip(starts, starts[1:]):
            assert _key_cmp(padded, key_len, a, b) < 0
        assert len(leaves) == len(reps)


def _extreme(padded, key_len, pool, want_max):
    best = pool[0]
    for r in pool[1:]:
        c = _key_cmp(padded, key_len, r, best)
        if (c > 0) == want_max and c != 0:
            best = r
    return best


def test_leaf_treap_order_and_neighbors():
    rng = random.Random(5)
    padded, om, trie = _setup(b"aaaaaaaaaa", 2)
    out = trie.insert_key(1)
    leaf = out.leaf
    nodes = []
    anchor = BEGIN
    for pos in range(1, 9):
        # om order here is just insertion order at the tail
        anchor = om.insert_after(anchor, pos)
        nodes.append(anchor)
        trie.leaf_add(leaf, anchor)
    assert trie.leaf_members(leaf) == nodes
    assert trie.leaf_min(leaf) == nodes[0]
    assert trie.leaf_max(leaf) == nodes[-1]
    probe = om.insert_after(nodes[3], 99)
    pred, succ = trie.leaf_neighbors(leaf, probe)
    assert pred == nodes[3] and succ == nodes[4]
    with pytest.raises(ValueError):
        trie.leaf_add(leaf, nodes[2])
    trie.leaf_add(leaf, probe)
    with pytest.raises(ValueError):
        trie.leaf_neighbors(leaf, probe)
