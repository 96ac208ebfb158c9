"""Slow reference definitions on plain Python sets.

Nothing here imports mtlab.  Spaces are ``(points, opens)`` with ``points``
a frozenset and ``opens`` a set of frozensets; ordered structures are
``(elements, le)`` with ``le`` a set of pairs.  These are the oracles the
frozen expectations in the tests were produced with.
"""

from itertools import chain, combinations, product


def subsets(xs):
    xs = list(xs)
    return [frozenset(c) for c in chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1))]


def families(xs):
    """All subfamilies of a collection (as tuples)."""
    xs = list(xs)
    return list(chain.from_iterable(combinations(xs, r) for r in range(len(xs) + 1)))


def big_union(fam):
    out = frozenset()
    for s in fam:
        out |= s
    return out


def big_inter(fam, top):
    out = frozenset(top)
    for s in fam:
        out &= s
    return out


# spaces


def is_topology(points, opens):
    opens = set(opens)
    if frozenset() not in opens or frozenset(points) not in opens:
        return False
    return all(a | b in opens and a & b in opens for a in opens for b in opens)


def all_topologies(n):
    pts = frozenset(range(n))
    middle = [s for s in subsets(pts) if s and s != pts]
    out = []
    for fam in families(middle):
        opens = {frozenset(), pts, *fam}
        if is_topology(pts, opens):
            out.append(frozenset(opens))
    return out


def interior(opens, a):
    return big_union(u for u in opens if u <= a)


def closure(points, opens, a):
    return points - interior(opens, points - a)


def classes(points, opens):
    points = frozenset(points)
    elems = subsets(points)
    closeds = {points - u for u in opens}
    sat = saturated(points, opens)
    lc = {u & c for u in opens for c in closeds}
    wlc = {s & c for s in sat for c in closeds}
    reg = {a for a in elems if closure(points, opens, interior(opens, a)) == a}
    gc = set()
    for a in elems:
        above = [closure(points, opens, interior(opens, c)) for c in elems if a <= interior(opens, c)]
        if big_inter(above, points) == a:
            gc.add(a)
    return {
        "opens": set(opens),
        "closeds": closeds,
        "saturated": sat,
        "locally_closed": lc,
        "weakly_locally_closed": wlc,
        "regular_closed": reg,
        "gc": gc,
        "clopen": set(opens) & closeds,
        "compact": set(elems),
        "compact_saturated": sat,
    }


def saturated(points, opens):
    """Sets equal to the intersection of the opens containing them."""
    return {a for a in subsets(points) if big_inter((u for u in opens if a <= u), points) == a}


def joins_generate(points, gens):
    return all(big_union(g for g in gens if g <= a) == a for a in subsets(points))


def specialization(points, opens):
    """``p <= q`` iff every open containing ``p`` contains ``q``."""
    return {(p, q) for p in points for q in points if all(q in u for u in opens if p in u)}


def is_t0(points, opens):
    spec = specialization(points, opens)
    return all(p == q or (q, p) not in spec for p, q in spec)


def is_t1(points, opens):
    return all(frozenset(points) - {p} in opens for p in points)


def is_sober(points, opens):
    points = frozenset(points)
    closeds = {points - u for u in opens}
    for c in closeds:
        if not c:
            continue
        irreducible = all(not (c1 | c2 == c and c1 != c and c2 != c) for c1 in closeds for c2 in closeds if c1 <= c and c2 <= c)
        if irreducible:
            generic = [p for p in c if closure(points, opens, frozenset({p})) == c]
            if len(generic) != 1:
                return False
    return True


def is_hausdorff(points, opens):
    return all(
        any(p in u and q in v and not (u & v) for u in opens for v in opens)
        for p in points for q in points if p != q
    )


def is_t_half(points, opens):
    """Every singleton is open or closed."""
    points = frozenset(points)
    closeds = {points - u for u in opens}
    return all(any({p} == (u & c) for u in opens for c in closeds) for p in points)


def is_continuous(f, x, y):
    """``f`` a dict from points of ``x`` to points of ``y``."""
    xp, xo = x
    yp, yo = y
    return all(frozenset(p for p in xp if f[p] in v) in xo for v in yo)


# ordered structures


def lattice_from_sets(family):
    """``(elements, le)`` for a family of frozensets under inclusion."""
    elems = list(family)
    return elems, {(a, b) for a in elems for b in elems if a <= b}


def lub(elems, le, xs):
    ubs = [u for u in elems if all((x, u) in le for x in xs)]
    least = [u for u in ubs if all((u, v) in le for v in ubs)]
    return least[0] if least else None


def glb(elems, le, xs):
    lbs = [u for u in elems if all((u, x) in le for x in xs)]
    great = [u for u in lbs if all((v, u) in le for v in lbs)]
    return great[0] if great else None


def filters(elems, le):
    """Every subset containing the top that is up-closed and meet-closed (improper included)."""
    top = lub(elems, le, elems) if elems else None
    out = []
    for f in subsets(elems):
        if top not in f:
            continue
        if any(x in f and (x, y) in le and y not in f for x in elems for y in elems):
            continue
        if any(glb(elems, le, [x, y]) not in f for x in f for y in f):
            continue
        out.append(f)
    return out


def prime_filters(elems, le):
    bottom = glb(elems, le, elems)
    out = []
    for f in filters(elems, le):
        if bottom in f:
            continue
        if all(x in f or y in f for x in elems for y in elems if lub(elems, le, [x, y]) in f):
            out.append(f)
    return out


def join_irreducibles(elems, le):
    bottom = glb(elems, le, elems)
    out = []
    for j in elems:
        if j == bottom:
            continue
        below = [x for x in elems if (x, j) in le and x != j]
        if lub(elems, le, below) != j:
            out.append(j)
    return out


def is_distributive(elems, le):
    for a, b, c in product(elems, repeat=3):
        lhs = glb(elems, le, [a, lub(elems, le, [b, c])])
        rhs = lub(elems, le, [glb(elems, le, [a, b]), glb(elems, le, [a, c])])
        if lhs != rhs:
            return False
    return True


def complemented(elems, le):
    top = lub(elems, le, elems)
    bottom = glb(elems, le, elems)
    return [
        a for a in elems
        if any(glb(elems, le, [a, b]) == bottom and lub(elems, le, [a, b]) == top for b in elems)
    ]


def way_below(elems, le):
    """``a << b``: every directed subset whose join is above ``b`` has a member above ``a``."""
    def directed(d):
        return bool(d) and all(any((x, z) in le and (y, z) in le for z in d) for x in d for y in d)

    rel = set()
    for a in elems:
        for b in elems:
            ok = True
            for d in subsets(elems):
                if directed(d) and (b, lub(elems, le, d)) in le and not any((a, x) in le for x in d):
                    ok = False
                    break
            if ok:
                rel.add((a, b))
    return rel
