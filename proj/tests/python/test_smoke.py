import math
import random

import pytest

try:
    import ptrie as pt
except ImportError:  # in-tree runs import the extension directly
    import _ptrie as pt


def test_uint_sorted_drain():
    t = pt.UIntPTrie(k=4, m=16)
    values = [5, 3, 5, 9, 0, 65535]
    for i, v in enumerate(values):
        t.insert(v, i)
    assert len(t) == len(values)
    assert t.minimum()[0] == 0
    assert t.maximum()[0] == 65535
    drained = []
    while True:
        e = t.delete_min()
        if e is None:
            break
        drained.append(e)
    want = sorted(enumerate(values), key=lambda iv: iv[1])
    assert drained == [(v, i) for i, v in want]
    assert t.validate() == []


def test_stability_on_duplicates():
    t = pt.UIntPTrie(k=2, m=8)
    for i in range(50):
        t.insert(7, i)
    out = [t.delete_min()[1] for _ in range(50)]
    assert out == list(range(50))


def test_random_against_sorted():
    rng = random.Random(1)
    t = pt.UIntPTrie(k=4, m=32)
    items = []
    for i in range(3000):
        v = rng.getrandbits(32)
        t.insert(v, i)
        items.append((v, i))
    items.sort(key=lambda kv: kv[0])
    assert t.items() == items
    assert t.validate() == []
    assert t.stats()["depth_max"] <= 8


def test_signed():
    t = pt.SignedPTrie(k=4)
    for i, v in enumerate([-3, -1, -2, 0, 2]):
        t.insert(v, i)
    assert t.minimum()[0] == -3
    assert t.maximum()[0] == 2
    drained = []
    while True:
        e = t.delete_min()
        if e is None:
            break
        drained.append(e[0])
    assert drained == [-3, -2, -1, 0, 2]
    assert t.validate() == []


def test_float():
    t = pt.FloatPTrie(k=4)
    for i, v in enumerate([1.5, -2.25, 0.0, -0.0, math.inf, -math.inf]):
        t.insert(v, i)
    assert t.minimum()[0] == -math.inf
    assert t.maximum()[0] == math.inf
    with pytest.raises(ValueError):
        t.insert(math.nan, 0)
    drained = []
    while True:
        e = t.delete_min()
        if e is None:
            break
        drained.append(e[0])
    assert drained == sorted([1.5, -2.25, 0.0, -0.0, math.inf, -math.inf])
    assert t.validate() == []


def test_string():
    t = pt.StringPTrie(k=8)
    t.insert(b"abc", 1)
    t.insert(b"ab", 2)
    assert t.minimum()[0] == b"ab"  # prefix sorts first
    assert t.search(b"ab")
    assert not t.search(b"a")
    assert t.validate() == []


def test_analysis_formulas():
    assert pt.avg_layers(0, 2) == 0.0
    assert pt.avg_layers(1, 2) == 0.0
    assert pt.avg_layers(2, 2) == pytest.approx(2.0)
    assert pt.expected_layers(2, 2, 1) == pytest.approx(0.5)
    assert pt.prob_group(2, 2, 2, 1) == pytest.approx(0.25)
    a = pt.avg_layers(48, 4)
    s = pt.layer_series_total(48, 4)
    assert a == pytest.approx(s, rel=1e-9)


def test_empirical_profile():
    prof = pt.empirical_profile(trials=5, n=200, k=4, m=16, seed=3)
    assert prof["mean"][0] == 1.0  # the root
    assert prof["total_layers_mean"] <= 4 * 200
