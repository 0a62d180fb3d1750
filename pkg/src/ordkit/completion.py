"""Cut completions of finite posets and the interpolation orders on them.

The completion of a poset is the family of all cuts, ordered by inclusion.
A cut is any set of the form lower-bounds-of-upper-bounds; equivalently, any
intersection of principal down sets together with the full carrier.  The
element map x -> (down set of x) embeds the poset into the completion.

The module also provides the way-below relation (with a brute-force mode
that quantifies over all directed subsets), ideals closed under finite cuts,
the ideal-based interpolation relation, and the continuity checks built on
them.  Fast paths exist for all of these; they are asserted against the
brute-force definitions by the verification suites.
"""

from __future__ import annotations

from .order import (
    FinitePoset,
    FinitePreorder,
    QuotientMap,
    bits,
    full_mask,
    quotient,
    set_str,
    submasks,
)


class NotALatticeError(ValueError):
    """Raised when an operation needs a complete lattice and the input is not one."""


def meet_of(p: FinitePreorder, a: int) -> int | None:
    """Greatest lower bound of the subset a, or None if it does not exist."""
    lb = p.lower_bounds(a)
    for x in bits(lb):
        if lb & ~p.down[x] == 0:
            return x
    return None


def join_of(p: FinitePreorder, a: int) -> int | None:
    """Least upper bound of the subset a, or None if it does not exist."""
    ub = p.upper_bounds(a)
    for x in bits(ub):
        if ub & ~p.up[x] == 0:
            return x
    return None


def is_complete_lattice(p: FinitePreorder) -> bool:
    """True when p is a nonempty poset in which every pair has a meet and a
    join and top and bottom exist.  Finitely that settles every subset."""
    if p.n == 0 or not p.is_antisymmetric():
        return False
    full = full_mask(p.n)
    if not any(p.up[x] == full for x in range(p.n)):
        return False
    if not any(p.down[x] == full for x in range(p.n)):
        return False
    for x in range(p.n):
        for y in range(x + 1, p.n):
            pair = (1 << x) | (1 << y)
            if meet_of(p, pair) is None or join_of(p, pair) is None:
                return False
    return True


class CutLattice:
    """The cut completion of a finite poset.

    ``cuts`` lists every cut as a mask, ascending by mask value.  ``order``
    is the inclusion order on cut indices and ``embed[x]`` is the index of
    the cut that is the down set of x.  The constructor re-checks all the
    structural facts: each member is cut-fixed, the family is closed under
    intersection and joins exist as cuts of unions, the order is a complete
    lattice, and the element map is an order embedding.
    """

    __slots__ = ("base", "cuts", "embed", "order", "_index")

    def __init__(self, base: FinitePoset, cuts: tuple[int, ...]):
        cuts = tuple(sorted(cuts))
        index = {c: i for i, c in enumerate(cuts)}
        if len(index) != len(cuts):
            raise ValueError("duplicate cut")
        full = full_mask(base.n)
        if full not in index:
            raise ValueError("cut family must contain the full carrier")
        for c in cuts:
            if base.cut(c) != c:
                raise ValueError("family member %s is not a cut" % set_str(c))
        for a in cuts:
            for b in cuts:
                if a & b not in index:
                    raise ValueError("cut family not closed under intersection")
                if base.cut(a | b) not in index:
                    raise ValueError("join of cuts missing from family")
        m = len(cuts)
        rows = []
        for i in range(m):
            row = 0
            for j in range(m):
                if cuts[i] & ~cuts[j] == 0:
                    row |= 1 << j
            rows.append(row)
        order = FinitePoset(m, rows)
        if not is_complete_lattice(order):
            raise ValueError("cut family is not a complete lattice")
        embed = []
        for x in range(base.n):
            c = base.down[x]
            if c not in index:
                raise ValueError("down set of %d missing from cut family" % x)
            embed.append(index[c])
        for x in range(base.n):
            for y in range(base.n):
                if base.leq(x, y) != order.leq(embed[x], embed[y]):
                    raise ValueError("element map is not an order embedding")
        self.base = base
        self.cuts = cuts
        self.embed = tuple(embed)
        self.order = order
        self._index = index

    def index_of(self, cut_mask: int) -> int:
        return self._index[cut_mask]

    def meet(self, i: int, j: int) -> int:
        return self._index[self.cuts[i] & self.cuts[j]]

    def join(self, i: int, j: int) -> int:
        return self._index[self.base.cut(self.cuts[i] | self.cuts[j])]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CutLattice)
            and self.base == other.base
            and self.cuts == other.cuts
        )

    def __hash__(self) -> int:
        return hash((self.base, self.cuts))

    def __repr__(self) -> str:
        return "CutLattice(%r, %r)" % (self.base, self.cuts)


def macneille(p: FinitePoset) -> CutLattice:
    """Cut completion computed from principal down sets.

    The family of cuts equals the closure of {down(x) : x} plus the full
    carrier under pairwise intersection.  The brute-force route over all
    2^n subsets is available as all_cuts_bruteforce for cross-checking.
    """
    fam = {full_mask(p.n)}
    fam.update(p.down[x] for x in range(p.n))
    changed = True
    while changed:
        changed = False
        items = sorted(fam)
        for i, a in enumerate(items):
            for b in items[i + 1:]:
                c = a & b
                if c not in fam:
                    fam.add(c)
                    changed = True
    return CutLattice(p, tuple(sorted(fam)))


def all_cuts_bruteforce(p: FinitePoset) -> frozenset[int]:
    """{cut(A) : A subset of the carrier}, straight from the definition."""
    return frozenset(p.cut(a) for a in range(1 << p.n))


def _directed_subsets(p: FinitePreorder) -> list[int]:
    """All nonempty subsets in which every pair has an upper bound inside."""
    out = []
    for d in range(1, 1 << p.n):
        elems = list(bits(d))
        ok = True
        for i, a in enumerate(elems):
            for b in elems[i:]:
                if p.up[a] & p.up[b] & d == 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(d)
    return out


def way_below_matrix(p: FinitePoset, brute: bool = False) -> tuple[int, ...]:
    """Rows of the way-below relation: row x is the mask {y : x waybelow y}.

    The fast path uses the order itself, which is what way-below collapses
    to on a finite complete lattice.  The brute-force path quantifies over
    every directed subset: x waybelow y iff whenever y <= sup D for directed
    D there is some d in D with x <= d.
    """
    if not is_complete_lattice(p):
        raise NotALatticeError("way-below needs a complete lattice")
    if not brute:
        return p.up
    rows = [full_mask(p.n)] * p.n
    for d in _directed_subsets(p):
        sup = join_of(p, d)
        assert sup is not None
        dominated = p.down[sup]  # {y : y <= sup D}
        for x in range(p.n):
            if p.up[x] & d == 0:  # no member of D is above x
                rows[x] &= ~dominated
    return tuple(rows)


def way_below(p: FinitePoset, x: int, y: int, brute: bool = False) -> bool:
    """x waybelow y in the complete lattice p."""
    return bool((way_below_matrix(p, brute)[x] >> y) & 1)


def is_continuous_lattice(p: FinitePoset, brute: bool = False) -> bool:
    """Every element is the join of the elements way below it.

    Two routes are computed: the join condition itself, and the separation
    reformulation (x not below y implies some u way below x with u not
    below y).  They must agree; the join route is returned.
    """
    rows = way_below_matrix(p, brute)
    cols = [0] * p.n
    for u in range(p.n):
        for y in bits(rows[u]):
            cols[y] |= 1 << u
    route_join = all(join_of(p, cols[x]) == x for x in range(p.n))
    route_sep = True
    for x in range(p.n):
        for y in bits(full_mask(p.n) & ~p.up[x]):
            # need u waybelow x with u not below y
            if cols[x] & ~p.down[y] == 0:
                route_sep = False
                break
        if not route_sep:
            break
    assert route_join == route_sep, "continuity routes disagree"
    return route_join


def frink_ideals(p: FinitePoset, allow_empty: bool = True) -> tuple[int, ...]:
    """All sets I with cut(Z) inside I for every Z inside I (Z = I and Z
    empty included).

    Finitely this coincides with the cut-fixed sets containing cut(empty);
    both routes are computed here and must agree.  The empty set qualifies
    exactly when cut(empty) is empty; pass allow_empty=False to exclude it
    regardless.
    """
    empty_cut = p.cut(0)
    fast = []
    for i in range(1 << p.n):
        if i == 0 and not allow_empty:
            continue
        if p.cut(i) == i and empty_cut & ~i == 0:
            fast.append(i)
    slow = []
    for i in range(1 << p.n):
        if i == 0 and not allow_empty:
            continue
        if all(p.cut(z) & ~i == 0 for z in submasks(i)):
            slow.append(i)
    assert fast == slow, "ideal characterizations disagree"
    return tuple(fast)


def ideal_way_below(p: FinitePoset, x: int, y: int, brute: bool = False) -> bool:
    """Ideal interpolation relation: every ideal whose cut captures y
    already contains x.  The fast path is the order itself, which is what
    the relation collapses to finitely."""
    if not brute:
        return p.leq(x, y)
    for i in frink_ideals(p):
        if (p.cut(i) >> y) & 1 and not (i >> x) & 1:
            return False
    return True


def ideal_way_below_matrix(p: FinitePoset, brute: bool = False) -> tuple[int, ...]:
    rows = []
    for x in range(p.n):
        row = 0
        for y in range(p.n):
            if ideal_way_below(p, x, y, brute):
                row |= 1 << y
        rows.append(row)
    return tuple(rows)


def is_precontinuous(q: FinitePreorder, brute: bool = False) -> bool:
    """Every class of the quotient poset lies in the cut of the set of
    classes ideal-interpolation-below it."""
    t = quotient(q).target
    for x in range(t.n):
        below = 0
        for y in range(t.n):
            if ideal_way_below(t, y, x, brute):
                below |= 1 << y
        if not (t.cut(below) >> x) & 1:
            return False
    return True


def precontinuity_completion_check(q: FinitePreorder) -> bool:
    """Agreement of two independently computed facts: precontinuity of the
    preorder, and continuity of the cut completion of its quotient."""
    pre = is_precontinuous(q)
    lat = macneille(quotient(q).target)
    return pre == is_continuous_lattice(lat.order)
