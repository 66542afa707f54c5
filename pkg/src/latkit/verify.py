"""Theorem-checking harness.

Each check_* procedure compares a brute-force computation against a
predicted closed form on one finite instance and returns a CheckReport.
Brute force is always the arbiter; the closed form is the hypothesis
under test. Failed reports carry a serializable witness (the lattice as
JSON plus the offending object); instances skipped because of size caps
are reported as skipped, never as passed.
"""

from __future__ import annotations

import itertools
import json
import random

from .core import Lattice, bits, named
from .congruence import (
    DEFAULT_CON_CAP,
    DEFAULT_MEMBER_CAP,
    all_congruences,
    is_simple,
)
from .construct import dilate, fat_intervals, horizontal_sum, hsum_congruences
from .equiv import Partition, is_congruence
from .errors import BadConfig, BadParams, LatticeError, SizeCapExceeded
from .filters import all_filters, all_ideals, is_filter, is_ideal, \
    is_prime_filter, is_prime_ideal, prime_filters, prime_ideals
from . import expr as expr_mod

DEFAULT_DILATE_INPUT_CAP = 8
DEFAULT_SUMMAND_CAP = 10


class CheckReport:
    """Outcome of one check on one instance."""

    def __init__(self, check_name, instance_descr, passed, details=None,
                 skipped=False):
        self.check_name = check_name
        self.instance_descr = instance_descr
        self.passed = passed
        self.details = details if details is not None else {}
        self.skipped = skipped

    @property
    def status(self) -> str:
        if self.skipped:
            return "SKIP"
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        return f"[{self.status}] {self.check_name}: {self.instance_descr}"

    def to_dict(self) -> dict:
        return {
            "check": self.check_name,
            "instance": self.instance_descr,
            "status": self.status,
            "details": self.details,
        }

    def __repr__(self):
        return f"CheckReport({self.line()!r})"


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)


def _instance(lat: Lattice) -> str:
    return lat.name or f"<{lat.n} elements>"


def _skip(name, instance, reason) -> CheckReport:
    return CheckReport(name, instance, False, {"reason": reason}, skipped=True)


def _verdict(name, lat, instance, problems, **extra) -> CheckReport:
    details = dict(extra)
    if problems:
        details["lattice"] = lat.to_dict()
        details["witness"] = problems[:8]
    return CheckReport(name, instance, not problems, details)


# -- isomorphism ---------------------------------------------------------------

def _heights(lat, covers_down):
    order = sorted(range(lat.n), key=lambda i: bin(lat.down[i]).count("1"))
    h = [0] * lat.n
    for i in order:
        below = covers_down[i]
        h[i] = 1 + max((h[j] for j in below), default=-1)
    return h


def _invariants(lat):
    """Per-element isomorphism-invariant colors, stabilized by refinement."""
    n = lat.n
    ups = [[] for _ in range(n)]
    downs = [[] for _ in range(n)]
    for i, j in lat.cover_pairs:
        ups[i].append(j)
        downs[j].append(i)
    depth_base = sorted(range(n), key=lambda i: bin(lat.up[i]).count("1"))
    depth = [0] * n
    for i in depth_base:
        depth[i] = 1 + max((depth[j] for j in ups[i]), default=-1)
    height = _heights(lat, downs)
    inv = [(len(ups[i]), len(downs[i]), height[i], depth[i]) for i in range(n)]
    classes = len(set(inv))
    while True:
        keys = [
            (inv[i],
             tuple(sorted(inv[j] for j in ups[i])),
             tuple(sorted(inv[j] for j in downs[i])))
            for i in range(n)
        ]
        rank = {k: r for r, k in enumerate(sorted(set(keys)))}
        inv = [(rank[keys[i]],) for i in range(n)]
        new_classes = len(set(inv))
        if new_classes == classes:
            return [v[0] if len(v) == 1 else v for v in inv]
        classes = new_classes


def isomorphic(a: Lattice, b: Lattice):
    """An order isomorphism a -> b as an index list, or None.

    Backtracking over invariant-compatible candidates, trying elements in
    index order and candidates ascending, so the witness returned is the
    lexicographically least isomorphism.
    """
    if a.n != b.n:
        return None
    ia, ib = _invariants(a), _invariants(b)
    if sorted(ia) != sorted(ib):
        return None
    n = a.n
    cand = [[j for j in range(n) if ib[j] == ia[i]] for i in range(n)]
    f = [-1] * n
    used = [False] * n
    aup, bup = a.up, b.up

    def consistent(i, j):
        for k in range(i):
            fk = f[k]
            if ((aup[k] >> i) & 1) != ((bup[fk] >> j) & 1):
                return False
            if ((aup[i] >> k) & 1) != ((bup[j] >> fk) & 1):
                return False
        return True

    def backtrack(i):
        if i == n:
            return True
        for j in cand[i]:
            if not used[j] and consistent(i, j):
                f[i] = j
                used[j] = True
                if backtrack(i + 1):
                    return True
                used[j] = False
        f[i] = -1
        return False

    return list(f) if backtrack(0) else None


# -- corpus ---------------------------------------------------------------------

_ATOM_POOL = (
    [("chain", k) for k in (2, 3, 4, 5)]
    + [("B2", None), ("M3", None), ("N5", None), ("K", None)]
    + [("div", k) for k in (4, 6, 8, 12)]
)


def _named_baseline():
    out = [named("chain", k) for k in (2, 3, 4, 5)]
    out += [named("B2"), named("M3"), named("N5"), named("K")]
    out += [named("div", k) for k in (4, 6, 8, 12, 16, 24, 30, 36)]
    return out


def _random_expr(rng, depth):
    if depth <= 0 or rng.random() < 0.4:
        kind, arg = rng.choice(_ATOM_POOL)
        return expr_mod.NamedAtom(kind, arg)
    if rng.random() < 0.5:
        return expr_mod.OSum(_random_expr(rng, depth - 1),
                             _random_expr(rng, depth - 1))
    width = rng.choice((2, 2, 3))
    return expr_mod.HSum(tuple(_random_expr(rng, depth - 1)
                               for _ in range(width)))


def _subset_closure(rng) -> Lattice:
    """Random union/intersection-closed family of subsets: distributive."""
    k = rng.choice((3, 3, 4))
    full = (1 << k) - 1
    fam = {0, full}
    for _ in range(rng.randint(2, 4)):
        fam.add(rng.randrange(1 << k))
    changed = True
    while changed:
        changed = False
        items = sorted(fam)
        for i, s in enumerate(items):
            for t in items[i + 1:]:
                for c in (s & t, s | t):
                    if c not in fam:
                        fam.add(c)
                        changed = True
    items = sorted(fam)
    letters = "abcd"
    labels = ["{" + ",".join(letters[i] for i in bits(s)) + "}" for s in items]
    up = []
    for s in items:
        row = 0
        for j, t in enumerate(items):
            if s | t == t:
                row |= 1 << j
        up.append(row)
    name = f"closure({k};{','.join(map(str, items))})"
    return Lattice(labels, up, name=name)


def _chain_product_top(rng) -> Lattice:
    """Product of two chains with one new top adjoined above everything."""
    p = rng.randint(2, 4)
    q = rng.randint(2, 4)
    labels = [f"({i},{j})" for i in range(p) for j in range(q)] + ["T"]
    covers = []
    for i in range(p):
        for j in range(q):
            if i + 1 < p:
                covers.append((f"({i},{j})", f"({i + 1},{j})"))
            if j + 1 < q:
                covers.append((f"({i},{j})", f"({i},{j + 1})"))
    covers.append((f"({p - 1},{q - 1})", "T"))
    return Lattice.from_covers(labels, covers, name=f"chainprodtop({p},{q})")


def corpus(seed: int, count: int, max_size: int):
    """Deterministic-by-seed mix of named and random lattices, size-capped."""
    if max_size < 2:
        raise BadParams("max_size must be at least 2")
    if count < 0:
        raise BadParams("count must be non-negative")
    out = [lat for lat in _named_baseline() if lat.n <= max_size]
    rng = random.Random(seed)
    for _ in range(count):
        lat = None
        for _attempt in range(64):
            r = rng.random()
            if r < 0.55:
                lat = expr_mod.evaluate(_random_expr(rng, 2))
            elif r < 0.8:
                lat = _subset_closure(rng)
            else:
                lat = _chain_product_top(rng)
            if lat.n <= max_size:
                break
            lat = None
        if lat is not None:
            out.append(lat)
    return out


def enumerate_lattices(max_n: int):
    """Census of all lattices with up to max_n elements, one per iso class.

    Opt-in and exponential: elements are added in linear-extension order
    with down-closed lower sets, candidates are filtered through lattice
    validation and deduplicated up to isomorphism. Intended for max_n <= 7.
    """
    if max_n < 1:
        raise BadParams("max_n must be at least 1")
    if max_n > 8:
        raise BadParams("census capped at 8 elements")
    out = [Lattice(("e0",), (1,), name="census(1)#0")]
    for n in range(2, max_n + 1):
        found = []
        buckets = {}
        labels = tuple(f"e{i}" for i in range(n))
        lows = [0] * n  # lows[j]: bitmask of elements strictly below j

        def emit():
            up = []
            for i in range(n):
                row = 1 << i
                for j in range(i + 1, n):
                    if (lows[j] >> i) & 1:
                        row |= 1 << j
                up.append(row)
            try:
                lat = Lattice(labels, up)
            except LatticeError:
                return
            key = tuple(sorted(_invariants(lat)))
            bucket = buckets.setdefault(key, [])
            for seen in bucket:
                if isomorphic(lat, seen) is not None:
                    return
            lat = lat.renamed(f"census({n})#{len(found)}")
            bucket.append(lat)
            found.append(lat)

        def rec(j):
            if j == n - 1:
                lows[j] = (1 << (n - 1)) - 1  # top lies above everything
                emit()
                return
            for extra in range(1 << max(j - 1, 0)):
                s = (extra << 1) | 1  # bottom is below every later element
                if any(lows[i] & ~s for i in bits(s)):
                    continue  # not down-closed
                lows[j] = s
                rec(j + 1)

        if n == 2:
            lows[1] = 1
            emit()
        else:
            rec(1)
        out.extend(found)
    return out


# -- shared helpers for the horizontal-sum checks --------------------------------

def _pair_images(H, prov, A, B):
    """Index sets of A minus bottom/top and B minus bottom/top inside H."""
    map_a = prov.label_map(0)
    map_b = prov.label_map(1)
    def image(lat, m, exclude):
        return frozenset(
            H.index(m[lat.labels[i]]) for i in range(lat.n) if i != exclude
        )
    return {
        "A0": image(A, map_a, A.bottom),  # A minus its bottom
        "A1": image(A, map_a, A.top),
        "B0": image(B, map_b, B.bottom),
        "B1": image(B, map_b, B.top),
    }


def _two_block(H, left, right) -> Partition:
    return Partition.from_blocks(H.n, [sorted(left), sorted(right)])


# -- checks ----------------------------------------------------------------------

def check_prime_equivalences(lat: Lattice, con_cap: int = DEFAULT_CON_CAP,
                       member_cap: int = DEFAULT_MEMBER_CAP) -> CheckReport:
    """Five-way prime-filter equivalence and the two-class characterization."""
    name = "prime-filter-equivalences"
    inst = _instance(lat)
    try:
        con = all_congruences(lat, con_cap, member_cap)
    except SizeCapExceeded as e:
        return _skip(name, inst, str(e))
    coatoms = {con.members[i] for i in con.coatoms()}
    carrier = frozenset(range(lat.n))
    problems = []
    fam = all_filters(lat)
    for member in fam.members:
        fset = member.elements
        if fset == carrier:
            continue
        comp = sorted(carrier - fset)
        flags = [
            member.prime,
            is_ideal(lat, comp),
        ]
        flags.append(bool(flags[1] and is_prime_ideal(lat, comp)))
        part = Partition.from_blocks(lat.n, [sorted(fset), comp])
        flags.append(is_congruence(lat, part))
        flags.append(part in coatoms)
        if len(set(flags)) != 1:
            problems.append({
                "filter": [lat.labels[i] for i in sorted(fset)],
                "flags": flags,
            })
    pf_sets = set(prime_filters(lat).prime_sets())
    pid_sets = set(prime_ideals(lat).prime_sets())
    nab = Partition.nabla(lat.n)
    for m in con.members:
        two = m.num_blocks == 2
        zero_class = m.block(lat.bottom)
        one_class = m.block(lat.top)
        alt = (
            m != nab
            and len(zero_class) + len(one_class) == lat.n
            and m == Partition.from_blocks(lat.n, [zero_class, one_class])
        )
        if two != alt:
            problems.append({"congruence": m.render(lat.labels),
                             "two_blocks": two, "bound_cover": alt})
        if two and (frozenset(one_class) not in pf_sets
                    or frozenset(zero_class) not in pid_sets):
            problems.append({"congruence": m.render(lat.labels),
                             "reason": "classes not prime filter/ideal"})
    return _verdict(name, lat, inst, problems,
                    filters=len(fam.members), congruences=len(con.members))


def check_irreducibility(lat: Lattice, con_cap: int = DEFAULT_CON_CAP,
                         member_cap: int = DEFAULT_MEMBER_CAP) -> CheckReport:
    """Bound irreducibility against filters, spectra and congruences."""
    name = "bound-irreducibility"
    inst = _instance(lat)
    if lat.trivial:
        return _skip(name, inst, "needs a non-trivial lattice")
    try:
        con = all_congruences(lat, con_cap, member_cap)
    except SizeCapExceeded as e:
        return _skip(name, inst, str(e))
    coatoms = {con.members[i] for i in con.coatoms()}
    n = lat.n
    problems = []

    rest0 = sorted(set(range(n)) - {lat.bottom})
    flags0 = [lat.is_meet_irreducible(lat.bottom), is_filter(lat, rest0)]
    flags0.append(bool(flags0[1] and is_prime_filter(lat, rest0)))
    flags0.append(is_prime_ideal(lat, [lat.bottom]))
    part0 = Partition.from_blocks(n, [[lat.bottom], rest0])
    flags0.append(is_congruence(lat, part0))
    flags0.append(part0 in coatoms)
    if len(set(flags0)) != 1:
        problems.append({"bound": "bottom", "flags": flags0})

    rest1 = sorted(set(range(n)) - {lat.top})
    flags1 = [lat.is_join_irreducible(lat.top), is_ideal(lat, rest1)]
    flags1.append(bool(flags1[1] and is_prime_ideal(lat, rest1)))
    flags1.append(is_prime_filter(lat, [lat.top]))
    part1 = Partition.from_blocks(n, [rest1, [lat.top]])
    flags1.append(is_congruence(lat, part1))
    flags1.append(part1 in coatoms)
    if len(set(flags1)) != 1:
        problems.append({"bound": "top", "flags": flags1})

    if n > 2:
        both = lat.is_meet_irreducible(lat.bottom) and \
            lat.is_join_irreducible(lat.top)
        interior = [x for x in range(n) if x not in (lat.bottom, lat.top)]
        closed = all(
            lat.meet(x, y) in interior and lat.join(x, y) in interior
            for x in interior for y in interior
        )
        part = Partition.from_blocks(n, [[lat.bottom], interior, [lat.top]])
        cong = is_congruence(lat, part)
        if not (both == closed == cong):
            problems.append({"bound": "interior",
                             "flags": [both, closed, cong]})
    return _verdict(name, lat, inst, problems)


def check_hsum_counts(A: Lattice, B: Lattice) -> CheckReport:
    """Size and filter/ideal count identities of the two-summand sum."""
    name = "hsum-counts"
    inst = f"{_instance(A)} (+) {_instance(B)}"
    H, _ = horizontal_sum([A, B])
    problems = []
    if H.n != A.n + B.n - 2:
        problems.append({"size": [H.n, A.n, B.n]})
    fa, fb, fh = len(all_filters(A)), len(all_filters(B)), len(all_filters(H))
    if fh != fa + fb - 2:
        problems.append({"filters": [fh, fa, fb]})
    ia, ib, ih = len(all_ideals(A)), len(all_ideals(B)), len(all_ideals(H))
    if ih != ia + ib - 2:
        problems.append({"ideals": [ih, ia, ib]})
    return _verdict(name, H, inst, problems)


def check_spechsum(A: Lattice, B: Lattice,
                   con_cap: int = DEFAULT_CON_CAP,
                   member_cap: int = DEFAULT_MEMBER_CAP) -> CheckReport:
    """Prime spectra of a two-summand sum against the predicted candidates."""
    name = "hsum-spectra"
    inst = f"{_instance(A)} (+) {_instance(B)}"
    if A.n <= 2 or B.n <= 2:
        return _skip(name, inst, "summands must have more than two elements")
    H, prov = horizontal_sum([A, B])
    img = _pair_images(H, prov, A, B)
    pf = set(prime_filters(H).prime_sets())
    pid = set(prime_ideals(H).prime_sets())
    problems = []
    if not pf <= {img["A0"], img["B0"]}:
        problems.append({"unexpected_prime_filters": sorted(
            sorted(H.labels[i] for i in s)
            for s in pf - {img["A0"], img["B0"]})})
    if not pid <= {img["A1"], img["B1"]}:
        problems.append({"unexpected_prime_ideals": sorted(
            sorted(H.labels[i] for i in s)
            for s in pid - {img["A1"], img["B1"]})})
    try:
        con = all_congruences(H, con_cap, member_cap)
        coatoms = {con.members[i] for i in con.coatoms()}
    except SizeCapExceeded as e:
        return _skip(name, inst, str(e))
    for first, second, f_key, i_key in (
        (A, B, "A0", "B1"),
        (B, A, "B0", "A1"),
    ):
        part = _two_block(H, img[f_key], img[i_key])
        flags = [
            first.is_meet_irreducible(first.bottom)
            and second.is_join_irreducible(second.top),
            img[f_key] in pf,
            img[i_key] in pid,
            is_congruence(H, part),
            part in coatoms,
        ]
        if len(set(flags)) != 1:
            problems.append({"side": f_key, "flags": flags})
    return _verdict(name, H, inst, problems,
                    prime_filters=len(pf), prime_ideals=len(pid))


def check_cghsum(A: Lattice, B: Lattice,
                 con_cap: int = DEFAULT_CON_CAP,
                 member_cap: int = DEFAULT_MEMBER_CAP) -> CheckReport:
    """Two-summand congruence trichotomy, product decomposition, order iso."""
    name = "hsum-congruence-trichotomy"
    inst = f"{_instance(A)} (+) {_instance(B)}"
    if A.n <= 2 or B.n <= 2:
        return _skip(name, inst, "summands must have more than two elements")
    H, prov = horizontal_sum([A, B])
    try:
        conH = all_congruences(H, con_cap, member_cap)
        conA = all_congruences(A, con_cap, member_cap)
        conB = all_congruences(B, con_cap, member_cap)
    except SizeCapExceeded as e:
        return _skip(name, inst, str(e))
    con01A = conA.con01_members()
    con01B = conB.con01_members()
    if len(con01A) * len(con01B) > member_cap:
        return _skip(name, inst, "predicted congruence product too large")
    predicted01 = {
        hsum_congruences([(A, alpha), (B, beta)], H, prov)
        for alpha in con01A for beta in con01B
    }
    img = _pair_images(H, prov, A, B)
    taus = []
    if A.is_meet_irreducible(A.bottom) and B.is_join_irreducible(B.top):
        taus.append(_two_block(H, img["A0"], img["B1"]))
    if B.is_meet_irreducible(B.bottom) and A.is_join_irreducible(A.top):
        taus.append(_two_block(H, img["B0"], img["A1"]))
    predicted = predicted01 | set(taus) | {Partition.nabla(H.n)}
    computed = set(conH.members)
    problems = []
    if computed != predicted:
        extra = [m.render(H.labels) for m in sorted(
            computed - predicted, key=lambda p: p.block_of)]
        missing = [m.render(H.labels) for m in sorted(
            predicted - computed, key=lambda p: p.block_of)]
        problems.append({"extra": extra, "missing": missing})
    two_class = {m for m in conH.members if m.num_blocks == 2}
    if two_class != set(taus):
        problems.append({
            "case_index": len(taus),
            "two_class_found": [m.render(H.labels) for m in two_class],
        })
    con01H = conH.con01_members()
    if set(con01H) != predicted01 or \
            len(con01H) != len(con01A) * len(con01B):
        problems.append({
            "con01": len(con01H),
            "expected": len(con01A) * len(con01B),
        })
    # order isomorphism with the componentwise order, via restriction
    map_a, map_b = prov.label_map(0), prov.label_map(1)
    idx_a = [H.index(map_a[lab]) for lab in A.labels]
    idx_b = [H.index(map_b[lab]) for lab in B.labels]
    set_a, set_b = set(con01A), set(con01B)
    trips = []
    for theta in con01H:
        ra = theta.restrict(idx_a)
        rb = theta.restrict(idx_b)
        if ra not in set_a or rb not in set_b:
            problems.append({"restriction_escapes": theta.render(H.labels)})
            continue
        if hsum_congruences([(A, ra), (B, rb)], H, prov) != theta:
            problems.append({"reassembly_differs": theta.render(H.labels)})
        trips.append((theta, conA.index_of(ra), conB.index_of(rb)))
    oa, ob = conA.order, conB.order
    for theta, a1, b1 in trips:
        for theta2, a2, b2 in trips:
            lhs = theta.leq(theta2)
            rhs = ((oa[a1] >> a2) & 1) and ((ob[b1] >> b2) & 1)
            if lhs != bool(rhs):
                problems.append({
                    "order_mismatch": [theta.render(H.labels),
                                       theta2.render(H.labels)],
                })
                break
        else:
            continue
        break
    # ordinal-sum shape: two-class members sit above all of con01, pairwise
    # incomparable, with nabla strictly on top
    for tau in taus:
        if not all(th.leq(tau) for th in con01H):
            problems.append({"tau_not_above_con01": tau.render(H.labels)})
    if len(taus) == 2 and (taus[0].leq(taus[1]) or taus[1].leq(taus[0])):
        problems.append({"taus_comparable": True})
    return _verdict(name, H, inst, problems,
                    case=len(taus), con=len(conH.members),
                    con01=len(con01H))


def check_multi_hsum(lats, con_cap: int = DEFAULT_CON_CAP,
                     member_cap: int = DEFAULT_MEMBER_CAP) -> CheckReport:
    """Three or more summands: empty spectra and pure product congruences."""
    name = "multi-hsum-collapse"
    lats = list(lats)
    inst = " (+) ".join(_instance(lat) for lat in lats)
    if len(lats) < 3 or any(lat.n <= 2 for lat in lats):
        return _skip(name, inst,
                     "needs three or more summands, each above two elements")
    H, prov = horizontal_sum(lats)
    try:
        conH = all_congruences(H, con_cap, member_cap)
        cons = [all_congruences(lat, con_cap, member_cap) for lat in lats]
    except SizeCapExceeded as e:
        return _skip(name, inst, str(e))
    con01s = [c.con01_members() for c in cons]
    expected_size = 1
    for c in con01s:
        expected_size *= len(c)
    if expected_size > member_cap:
        return _skip(name, inst, "predicted congruence product too large")
    problems = []
    if prime_filters(H).prime_sets() or prime_ideals(H).prime_sets():
        problems.append({"spectra_not_empty": True})
    if any(m.num_blocks == 2 for m in conH.members):
        problems.append({"two_class_congruence_found": True})
    predicted = {
        hsum_congruences(list(zip(lats, combo)), H, prov)
        for combo in itertools.product(*con01s)
    }
    predicted |= {Partition.nabla(H.n)}
    computed = set(conH.members)
    if computed != predicted:
        problems.append({
            "extra": [m.render(H.labels) for m in computed - predicted][:4],
            "missing": [m.render(H.labels) for m in predicted - computed][:4],
        })
    if len(conH.members) != expected_size + 1:
        problems.append({"con_size": len(conH.members),
                         "expected": expected_size + 1})
    return _verdict(name, H, inst, problems, con=len(conH.members))


def check_dilate(lat: Lattice, con_cap: int = DEFAULT_CON_CAP) -> CheckReport:
    """Dilation: simplicity plus the size and filter/ideal count identities."""
    name = "dilation-simplicity"
    inst = _instance(lat)
    if lat.trivial:
        return _skip(name, inst, "needs a non-trivial lattice")
    D, _ = dilate(lat)
    if D.n > con_cap:
        return _skip(name, inst, f"dilation has {D.n} elements, cap {con_cap}")
    fats = fat_intervals(lat)
    problems = []
    if D.n != lat.n + 2 * len(fats):
        problems.append({"size": [D.n, lat.n, len(fats)]})
    if not is_simple(D, con_cap):
        problems.append({"not_simple": True})
    if len(all_filters(D)) != len(all_filters(lat)) + 2 * len(fats):
        problems.append({"filters": [len(all_filters(D)),
                                     len(all_filters(lat)), len(fats)]})
    if len(all_ideals(D)) != len(all_ideals(lat)) + 2 * len(fats):
        problems.append({"ideals": [len(all_ideals(D)),
                                    len(all_ideals(lat)), len(fats)]})
    return _verdict(name, D, inst, problems,
                    dilated_size=D.n, fat_intervals=len(fats))


def check_b2_hsum_simple(S: Lattice, con_cap: int = DEFAULT_CON_CAP,
                         member_cap: int = DEFAULT_MEMBER_CAP) -> CheckReport:
    """Summing with the four-element Boolean lattice leaves con01 plus top.

    When S has no proper congruence isolating both bounds, the sum is
    simple; in every case |Con(sum)| = |con01(S)| + 1.
    """
    name = "b2-hsum-simplicity"
    inst = _instance(S)
    if S.n <= 2:
        return _skip(name, inst, "needs more than two elements")
    try:
        conS = all_congruences(S, con_cap, member_cap)
    except SizeCapExceeded as e:
        return _skip(name, inst, str(e))
    con01S = conS.con01_members()
    H, _ = horizontal_sum([S, named("B2")])
    try:
        conH = all_congruences(H, con_cap, member_cap)
    except SizeCapExceeded as e:
        return _skip(name, inst, str(e))
    problems = []
    if len(conH.members) != len(con01S) + 1:
        problems.append({"con_size": len(conH.members),
                         "con01_of_summand": len(con01S)})
    trivial01 = len(con01S) == 1
    if trivial01 and not is_simple(H, con_cap):
        problems.append({"expected_simple": True})
    return _verdict(name, H, inst, problems,
                    con01=len(con01S), simple_case=trivial01)


# -- suite runner ------------------------------------------------------------------

SUITES = ("prime", "irred", "counts", "spechsum", "cghsum", "multi",
          "dilate", "b2hsum")


def _corrupted_pentagon() -> Lattice:
    """Pentagon with a tampered meet table, for harness self-tests."""
    lat = named("N5").renamed("N5-corrupted")
    rows = [list(r) for r in lat.meet_t]
    x, top = lat.index("x"), lat.top
    rows[x][top] = rows[top][x] = lat.bottom
    lat.meet_t = tuple(tuple(r) for r in rows)
    return lat


def run_suite(suites=("all",), seed: int = 7, count: int = 25,
              max_size: int = 9, con_cap: int = DEFAULT_CON_CAP,
              member_cap: int = DEFAULT_MEMBER_CAP,
              inject_fault: bool = False, census: int = 0):
    """Run the selected checks over the named + random corpus.

    Deterministic by seed. `census=n` additionally sweeps every lattice
    with up to n elements (opt-in: exhaustive, n <= 8). Returns the full
    report list; failures are whatever reports carry status FAIL.
    """
    if isinstance(suites, str):
        suites = (suites,)
    chosen = set()
    for s in suites:
        if s == "all":
            chosen.update(SUITES)
        elif s in SUITES:
            chosen.add(s)
        else:
            raise BadConfig(
                f"unknown suite {s!r}; valid: all, {', '.join(SUITES)}"
            )
    if count < 0:
        raise BadConfig("count must be non-negative")
    if max_size < 2:
        raise BadConfig("max_size must be at least 2")
    if census < 0 or census > 8:
        raise BadConfig("census must lie between 0 and 8")
    pool = corpus(seed, count, max_size)
    if census:
        pool.extend(lat for lat in enumerate_lattices(census)
                    if lat.n <= max_size)
    rng = random.Random(seed ^ 0x5EED)
    reports = []

    def run(fn, name, instance, lat_for_witness, *args, **kwargs):
        try:
            reports.append(fn(*args, **kwargs))
        except LatticeError as e:
            details = {"error": f"{type(e).__name__}: {e}"}
            if lat_for_witness is not None:
                details["lattice"] = lat_for_witness.to_dict()
            reports.append(CheckReport(name, instance, False, details))

    if "prime" in chosen:
        for lat in pool:
            run(check_prime_equivalences, "prime-filter-equivalences",
                _instance(lat), lat, lat, con_cap, member_cap)
    if "irred" in chosen:
        for lat in pool:
            run(check_irreducibility, "bound-irreducibility",
                _instance(lat), lat, lat, con_cap, member_cap)
    sizable = [lat for lat in pool if lat.n >= 2]
    if "counts" in chosen and sizable:
        for _ in range(max(count, 10)):
            A, B = rng.choice(sizable), rng.choice(sizable)
            run(check_hsum_counts, "hsum-counts",
                f"{_instance(A)} (+) {_instance(B)}", None, A, B)
    wide = [lat for lat in pool if lat.n > 2]
    if "spechsum" in chosen and wide:
        for _ in range(max(count, 10)):
            A, B = rng.choice(wide), rng.choice(wide)
            run(check_spechsum, "hsum-spectra",
                f"{_instance(A)} (+) {_instance(B)}", None, A, B,
                con_cap, member_cap)
    if "cghsum" in chosen and wide:
        small = [lat for lat in wide if lat.n <= DEFAULT_SUMMAND_CAP]
        for _ in range(max(count, 10)):
            A, B = rng.choice(small), rng.choice(small)
            run(check_cghsum, "hsum-congruence-trichotomy",
                f"{_instance(A)} (+) {_instance(B)}", None, A, B,
                con_cap, member_cap)
    if "multi" in chosen and wide:
        smaller = [lat for lat in wide if lat.n <= 6]
        for _ in range(max(count // 2, 5)):
            width = rng.choice((3, 3, 4))
            fam = [rng.choice(smaller) for _ in range(width)]
            run(check_multi_hsum, "multi-hsum-collapse",
                " (+) ".join(_instance(lat) for lat in fam), None, fam,
                con_cap, member_cap)
    if "dilate" in chosen:
        for lat in pool:
            if 2 <= lat.n <= DEFAULT_DILATE_INPUT_CAP:
                run(check_dilate, "dilation-simplicity", _instance(lat),
                    lat, lat, con_cap)
    if "b2hsum" in chosen:
        for lat in pool:
            if lat.n > 2:
                run(check_b2_hsum_simple, "b2-hsum-simplicity",
                    _instance(lat), lat, lat, con_cap, member_cap)
    if inject_fault:
        bad = _corrupted_pentagon()
        run(check_prime_equivalences, "prime-filter-equivalences",
            _instance(bad), bad, bad, con_cap, member_cap)
    return reports
