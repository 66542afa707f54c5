"""Finite bounded lattices: construction, validation and order queries.

Elements are dense indices into `labels`. The order is stored as one upset
bitmask per element, so comparisons, intervals and bound searches are plain
integer bit operations; meet and join are precomputed lookup tables. Every
constructor validates the lattice axioms eagerly (unique glb/lub for all
pairs, unique bottom and top), so downstream code may assume a genuine
bounded lattice.
"""

from __future__ import annotations

import json
from functools import cached_property

from .errors import (
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

SIZE_CAP = 500


def bits(mask: int):
    """Iterate the set-bit indices of `mask`, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class Lattice:
    """Immutable finite bounded lattice.

    `name` is descriptive metadata only; it does not take part in equality.
    Instances are treated as immutable after construction and are safe to
    share freely.
    """

    def __init__(self, labels, up, name: str = ""):
        labels = tuple(labels)
        up = tuple(up)
        n = len(labels)
        if n == 0:
            raise NoBounds("empty carrier")
        if n > SIZE_CAP:
            raise SizeCapExceeded(f"{n} elements exceeds construction cap {SIZE_CAP}")
        if len(set(labels)) != n:
            dup = sorted({x for x in labels if labels.count(x) > 1})
            raise DuplicateLabel(f"duplicate labels: {dup}")
        if len(up) != n:
            raise ValueError("labels and up masks differ in length")
        full = (1 << n) - 1
        for i in range(n):
            row = up[i]
            if row & ~full:
                raise ValueError("up mask references out-of-range elements")
            if not (row >> i) & 1:
                raise NotALattice(labels[i], labels[i], "order not reflexive")
        for i in range(n):
            for j in bits(up[i]):
                if j != i and (up[j] >> i) & 1:
                    raise CycleDetected(
                        f"{labels[i]!r} and {labels[j]!r} are mutually comparable"
                    )
                if up[j] & ~up[i]:
                    raise NotALattice(labels[i], labels[j], "order not transitive")
        down = [0] * n
        for i in range(n):
            for j in bits(up[i]):
                down[j] |= 1 << i
        bottoms = [i for i in range(n) if up[i] == full]
        tops = [i for i in range(n) if down[i] == full]
        if len(bottoms) != 1 or len(tops) != 1:
            raise NoBounds(
                f"need unique bottom and top, found {len(bottoms)} bottom(s) "
                f"and {len(tops)} top(s)"
            )
        up_id = {up[i]: i for i in range(n)}
        down_id = {down[i]: i for i in range(n)}
        meet_t = [[0] * n for _ in range(n)]
        join_t = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                k = up_id.get(up[i] & up[j])
                if k is None:
                    raise NotALattice(labels[i], labels[j], "no unique least upper bound")
                join_t[i][j] = join_t[j][i] = k
                k = down_id.get(down[i] & down[j])
                if k is None:
                    raise NotALattice(labels[i], labels[j], "no unique greatest lower bound")
                meet_t[i][j] = meet_t[j][i] = k
        self.labels = labels
        self.up = up
        self.down = tuple(down)
        self.meet_t = tuple(map(tuple, meet_t))
        self.join_t = tuple(map(tuple, join_t))
        self.bottom = bottoms[0]
        self.top = tops[0]
        self.name = name

    # -- basic queries ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def trivial(self) -> bool:
        return len(self.labels) == 1

    def leq(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def meet(self, i: int, j: int) -> int:
        return self.meet_t[i][j]

    def join(self, i: int, j: int) -> int:
        return self.join_t[i][j]

    @cached_property
    def _index(self):
        return {x: i for i, x in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"no element labelled {label!r}") from None

    def up_indices(self, i: int):
        return tuple(bits(self.up[i]))

    def down_indices(self, i: int):
        return tuple(bits(self.down[i]))

    def interval(self, a: int, b: int):
        """Elements x with a <= x <= b; `a` must lie below `b`."""
        if not self.leq(a, b):
            raise NotComparable(
                f"{self.labels[a]!r} does not lie below {self.labels[b]!r}"
            )
        return tuple(bits(self.up[a] & self.down[b]))

    @cached_property
    def cover_pairs(self):
        """All pairs (i, j) where j covers i."""
        out = []
        for i in range(self.n):
            for j in bits(self.up[i] & ~(1 << i)):
                between = self.up[i] & self.down[j] & ~(1 << i) & ~(1 << j)
                if not between:
                    out.append((i, j))
        return tuple(out)

    def is_meet_irreducible(self, x: int) -> bool:
        """True iff x = u ^ v forces x in {u, v}; exhaustive pair scan."""
        mt = self.meet_t
        for u in range(self.n):
            if u == x:
                continue
            row = mt[u]
            for v in range(u + 1, self.n):
                if v != x and row[v] == x:
                    return False
        return True

    def is_join_irreducible(self, x: int) -> bool:
        jt = self.join_t
        for u in range(self.n):
            if u == x:
                continue
            row = jt[u]
            for v in range(u + 1, self.n):
                if v != x and row[v] == x:
                    return False
        return True

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.labels == other.labels and self.up == other.up

    def __hash__(self):
        return hash((self.labels, self.up))

    def __repr__(self):
        tag = self.name or f"{self.n} elements"
        return f"Lattice({tag})"

    def renamed(self, name: str) -> "Lattice":
        """Copy sharing all tables but carrying a different display name."""
        out = object.__new__(Lattice)
        out.__dict__.update(self.__dict__)
        out.name = name
        return out

    # -- interchange --------------------------------------------------------

    def to_dict(self) -> dict:
        pairs = sorted(
            [self.labels[i], self.labels[j]] for i, j in self.cover_pairs
        )
        return {"elements": list(self.labels), "covers": pairs}

    def to_json(self, indent=None) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: dict, name: str = "") -> "Lattice":
        return cls.from_covers(data["elements"], data["covers"], name=name)

    @classmethod
    def from_json(cls, text: str, name: str = "") -> "Lattice":
        return cls.from_dict(json.loads(text), name=name)

    # -- construction ---------------------------------------------------------

    @classmethod
    def from_covers(cls, labels, covers, name: str = "") -> "Lattice":
        """Lattice whose order is the reflexive-transitive closure of `covers`.

        `covers` is an iterable of (low, high) label pairs. Fails with
        CycleDetected on a cyclic declaration and NotALattice / NoBounds when
        the closed order is not a bounded lattice.
        """
        labels = tuple(labels)
        if len(set(labels)) != len(labels):
            dup = sorted({x for x in labels if labels.count(x) > 1})
            raise DuplicateLabel(f"duplicate labels: {dup}")
        ix = {x: i for i, x in enumerate(labels)}
        n = len(labels)
        adj = [[] for _ in range(n)]
        for a, b in covers:
            if a not in ix:
                raise UnknownLabel(f"cover endpoint {a!r} is not an element")
            if b not in ix:
                raise UnknownLabel(f"cover endpoint {b!r} is not an element")
            adj[ix[a]].append(ix[b])
        up = [0] * n
        state = [0] * n  # 0 unseen, 1 on stack, 2 closed
        for root in range(n):
            if state[root]:
                continue
            state[root] = 1
            stack = [(root, 0)]
            while stack:
                node, k = stack[-1]
                if k < len(adj[node]):
                    stack[-1] = (node, k + 1)
                    nxt = adj[node][k]
                    if state[nxt] == 1:
                        raise CycleDetected(
                            f"declared covers cycle through {labels[nxt]!r}"
                        )
                    if state[nxt] == 0:
                        state[nxt] = 1
                        stack.append((nxt, 0))
                else:
                    m = 1 << node
                    for s in adj[node]:
                        m |= up[s]
                    up[node] = m
                    state[node] = 2
                    stack.pop()
        return cls(labels, up, name=name)


def _is_prime(k: int) -> bool:
    if k < 2:
        return False
    d = 2
    while d * d <= k:
        if k % d == 0:
            return False
        d += 1
    return True


def _chain_labels(k: int):
    if k == 1:
        return ("0",)
    if k == 2:
        return ("0", "1")
    if k == 3:
        return ("0", "m", "1")
    if k == 4:
        return ("0", "a", "b", "1")
    return ("0",) + tuple(f"m{i}" for i in range(1, k - 1)) + ("1",)


NAMED_KINDS = ("chain", "B2", "M3", "N5", "K", "div")


def named(name: str, *params: int) -> Lattice:
    """Canonical small lattices used throughout the test corpus.

    chain(k) is the k-element chain, B2 the four-element Boolean lattice,
    M3 the diamond, N5 the pentagon, K a six-element lattice glueing a
    3-chain and a diamond-with-stem at shared bounds, div(n) the divisors
    of n ordered by divisibility (meet = gcd, join = lcm).
    """
    def want(count):
        if len(params) != count:
            raise BadParam(f"{name} takes {count} parameter(s), got {len(params)}")

    if name == "chain":
        want(1)
        k = params[0]
        if k < 1:
            raise BadParam("chain size must be >= 1")
        labels = _chain_labels(k)
        covers = list(zip(labels, labels[1:]))
        return Lattice.from_covers(labels, covers, name=f"chain({k})")
    if name == "B2":
        want(0)
        return Lattice.from_covers(
            ("0", "a", "b", "1"),
            [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
            name="B2",
        )
    if name == "M3":
        want(0)
        return Lattice.from_covers(
            ("0", "u", "v", "w", "1"),
            [("0", "u"), ("0", "v"), ("0", "w"), ("u", "1"), ("v", "1"), ("w", "1")],
            name="M3",
        )
    if name == "N5":
        want(0)
        return Lattice.from_covers(
            ("0", "x", "y", "z", "1"),
            [("0", "x"), ("x", "1"), ("0", "y"), ("y", "z"), ("z", "1")],
            name="N5",
        )
    if name == "K":
        want(0)
        return Lattice.from_covers(
            ("0", "m", "n", "p", "q", "1"),
            [("0", "m"), ("m", "1"), ("0", "n"), ("n", "p"),
             ("0", "q"), ("q", "p"), ("p", "1")],
            name="K",
        )
    if name == "div":
        want(1)
        k = params[0]
        if k < 1:
            raise BadParam("div parameter must be >= 1")
        divisors = [d for d in range(1, k + 1) if k % d == 0]
        labels = [str(d) for d in divisors]
        covers = [
            (str(d), str(e))
            for d in divisors
            for e in divisors
            if e % d == 0 and _is_prime(e // d)
        ]
        return Lattice.from_covers(labels, covers, name=f"div({k})")
    raise UnknownName(f"no lattice named {name!r}")
