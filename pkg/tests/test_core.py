import itertools

import pytest

from latkit import Lattice, named
from latkit.errors import (
    BadParam,
    CycleDetected,
    DuplicateLabel,
    NoBounds,
    NotALattice,
    NotComparable,
    SizeCapExceeded,
    UnknownLabel,
    UnknownName,
)


def test_from_covers_three_chain():
    lat = Lattice.from_covers(["0", "m", "1"], [("0", "m"), ("m", "1")])
    assert lat.n == 3
    assert lat.labels[lat.bottom] == "0"
    assert lat.labels[lat.top] == "1"
    assert lat.leq(lat.index("0"), lat.index("1"))


def test_from_covers_square():
    lat = Lattice.from_covers(
        "0ab1", [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]
    )
    a, b = lat.index("a"), lat.index("b")
    assert lat.meet(a, b) == lat.index("0")
    assert lat.join(a, b) == lat.index("1")
    assert not lat.leq(a, b) and not lat.leq(b, a)


def test_from_covers_missing_top():
    with pytest.raises(NoBounds):
        Lattice.from_covers("0ab1", [("0", "a"), ("0", "b")])


def test_from_covers_rejects_duplicates_cycles_unknowns():
    with pytest.raises(DuplicateLabel):
        Lattice.from_covers(["x", "x"], [])
    with pytest.raises(CycleDetected):
        Lattice.from_covers("ab", [("a", "b"), ("b", "a")])
    with pytest.raises(UnknownLabel):
        Lattice.from_covers("ab", [("a", "c")])


def test_from_covers_no_unique_bounds():
    # two incomparable "joins" for the pair of atoms
    with pytest.raises(NotALattice):
        Lattice.from_covers(
            "0abcd1",
            [("0", "a"), ("0", "b"), ("a", "c"), ("b", "c"),
             ("a", "d"), ("b", "d"), ("c", "1"), ("d", "1")],
        )


def test_construction_size_cap():
    labels = [f"e{i}" for i in range(501)]
    covers = [(f"e{i}", f"e{i+1}") for i in range(500)]
    with pytest.raises(SizeCapExceeded):
        Lattice.from_covers(labels, covers)


def test_meet_join_on_named_examples():
    c3 = named("chain", 3)
    assert c3.meet(c3.index("m"), c3.index("1")) == c3.index("m")
    b2 = named("B2")
    assert b2.join(b2.index("a"), b2.index("b")) == b2.index("1")
    n5 = named("N5")
    assert n5.meet(n5.index("x"), n5.index("z")) == n5.index("0")


def test_interval():
    c4 = named("chain", 4)
    zero, a, b = c4.index("0"), c4.index("a"), c4.index("b")
    assert c4.interval(zero, b) == (zero, a, b)
    n5 = named("N5")
    y, z, one = n5.index("y"), n5.index("z"), n5.index("1")
    assert set(n5.interval(y, one)) == {y, z, one}
    for lat in (c4, n5):
        assert set(lat.interval(lat.bottom, lat.top)) == set(range(lat.n))
    with pytest.raises(NotComparable):
        n5.interval(n5.index("x"), n5.index("z"))


def test_irreducibility():
    c3 = named("chain", 3)
    assert c3.is_meet_irreducible(c3.bottom)
    assert c3.is_join_irreducible(c3.top)
    b2 = named("B2")
    assert not b2.is_meet_irreducible(b2.bottom)
    assert not b2.is_join_irreducible(b2.top)
    m3 = named("M3")
    # exhaustive scan finds a pair of atoms meeting at the bottom
    assert not m3.is_meet_irreducible(m3.bottom)
    assert any(
        m3.meet(u, v) == m3.bottom
        for u in range(m3.n) for v in range(m3.n)
        if u != m3.bottom != v and u != v
    )


def test_named_shapes():
    c4 = named("chain", 4)
    assert c4.labels == ("0", "a", "b", "1")
    assert len(c4.cover_pairs) == 3
    k = named("K")
    assert k.labels == ("0", "m", "n", "p", "q", "1")
    cover_labels = {(k.labels[i], k.labels[j]) for i, j in k.cover_pairs}
    assert cover_labels == {
        ("0", "m"), ("m", "1"), ("0", "n"), ("n", "p"),
        ("0", "q"), ("q", "p"), ("p", "1"),
    }
    d12 = named("div", 12)
    assert d12.labels == ("1", "2", "3", "4", "6", "12")
    assert d12.labels[d12.bottom] == "1"
    assert d12.labels[d12.top] == "12"
    assert d12.meet(d12.index("4"), d12.index("6")) == d12.index("2")
    assert d12.join(d12.index("4"), d12.index("6")) == d12.index("12")


def test_named_errors():
    with pytest.raises(UnknownName):
        named("pentagon")
    with pytest.raises(BadParam):
        named("chain", 0)
    with pytest.raises(BadParam):
        named("div", 0)
    with pytest.raises(BadParam):
        named("M3", 3)


def test_one_element_lattice_is_trivial():
    lat = named("chain", 1)
    assert lat.trivial
    assert lat.bottom == lat.top
    assert named("div", 1).trivial


@pytest.mark.parametrize("name,args", [
    ("chain", (5,)), ("B2", ()), ("M3", ()), ("N5", ()), ("K", ()),
    ("div", (12,)), ("div", (30,)),
])
def test_lattice_axioms_exhaustively(name, args):
    lat = named(name, *args)
    rng = range(lat.n)
    for x, y in itertools.product(rng, rng):
        assert lat.meet(x, y) == lat.meet(y, x)
        assert lat.join(x, y) == lat.join(y, x)
        assert lat.meet(x, lat.join(x, y)) == x
        assert lat.join(x, lat.meet(x, y)) == x
    for x, y, z in itertools.product(rng, rng, rng):
        assert lat.meet(lat.meet(x, y), z) == lat.meet(x, lat.meet(y, z))
        assert lat.join(lat.join(x, y), z) == lat.join(x, lat.join(y, z))
    for x in rng:
        assert lat.meet(x, x) == x == lat.join(x, x)
        assert lat.leq(lat.bottom, x) and lat.leq(x, lat.top)


@pytest.mark.parametrize("name,args", [("N5", ()), ("K", ()), ("div", (12,))])
def test_intervals_are_convex_sublattices(name, args):
    lat = named(name, *args)
    for a in range(lat.n):
        for b in range(lat.n):
            if not lat.leq(a, b):
                continue
            seg = set(lat.interval(a, b))
            for x in seg:
                for y in seg:
                    assert lat.meet(x, y) in seg
                    assert lat.join(x, y) in seg


def test_json_round_trip():
    for lat in (named("N5"), named("K"), named("div", 12)):
        again = Lattice.from_json(lat.to_json())
        assert again.labels == lat.labels
        assert again.up == lat.up
        assert again.to_dict() == lat.to_dict()


def test_json_covers_are_lexicographic():
    k = named("K")
    covers = k.to_dict()["covers"]
    assert covers == sorted(covers)


def test_unknown_label_lookup():
    with pytest.raises(UnknownLabel):
        named("N5").index("w")
