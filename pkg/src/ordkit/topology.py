"""Finite topologies, bitopological preordered spaces, and exact separation.

Opens are bitmasks over {0, ..., n-1}.  A FiniteTopology stores the whole
open family explicitly and validates closure under union and intersection.
A BitopPreorderedSpace couples a preorder with two topologies: the first
has increasing opens, the second decreasing opens, and the order must be
closed in the product of the two (every related-in-neither pair admits a
separating open rectangle).  Constructing the dataclass performs that
certification and raises SpaceCertificationError when it fails.

All numeric functions on spaces take and return tuples of Fraction, and
every check here is exact; nothing is sampled or approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .order import FinitePreorder, bits, full_mask, set_str


class SpaceCertificationError(ValueError):
    """Raised when a candidate bitopological preordered space fails a check."""


class SeparationFailedError(RuntimeError):
    """Raised when no pair of disjoint opens covers the two given sets."""


class InvalidMetricError(ValueError):
    """Raised for a distance matrix that is not a quasi-pseudometric."""


class FiniteTopology:
    """Explicit open-set family on {0, ..., n-1}.

    The constructor checks that the empty set and the carrier are present
    and that the family is closed under pairwise union and intersection,
    which settles arbitrary unions finitely.
    """

    __slots__ = ("n", "opens", "_open_set")

    def __init__(self, n: int, opens):
        opens = tuple(sorted(set(opens)))
        full = full_mask(n)
        if n < 0:
            raise ValueError("carrier size must be nonnegative")
        for u in opens:
            if u < 0 or u > full:
                raise ValueError("open %s out of range" % set_str(u))
        oset = set(opens)
        if 0 not in oset or full not in oset:
            raise ValueError("topology must contain the empty set and the carrier")
        for u in opens:
            for v in opens:
                if u | v not in oset or u & v not in oset:
                    raise ValueError(
                        "family not closed under union and intersection: %s, %s"
                        % (set_str(u), set_str(v))
                    )
        self.n = n
        self.opens = opens
        self._open_set = frozenset(oset)

    def is_open(self, a: int) -> bool:
        return a in self._open_set

    def is_closed(self, a: int) -> bool:
        return full_mask(self.n) & ~a in self._open_set

    def closed_sets(self) -> tuple[int, ...]:
        full = full_mask(self.n)
        return tuple(sorted(full & ~u for u in self.opens))

    def interior(self, a: int) -> int:
        out = 0
        for u in self.opens:
            if u & ~a == 0:
                out |= u
        return out

    def closure(self, a: int) -> int:
        full = full_mask(self.n)
        return full & ~self.interior(full & ~a)

    def specialization(self) -> FinitePreorder:
        """x below y iff every open containing x contains y."""
        rows = []
        for x in range(self.n):
            acc = full_mask(self.n)
            for u in self.opens:
                if (u >> x) & 1:
                    acc &= u
            rows.append(acc)
        return FinitePreorder(self.n, rows)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteTopology)
            and self.n == other.n
            and self.opens == other.opens
        )

    def __hash__(self) -> int:
        return hash((self.n, self.opens))

    def __repr__(self) -> str:
        return "FiniteTopology(%d, %r)" % (self.n, list(self.opens))


def generate_topology(n: int, subbasis) -> FiniteTopology:
    """Smallest topology containing every mask in subbasis."""
    fam = {0, full_mask(n)}
    fam.update(subbasis)
    changed = True
    while changed:
        changed = False
        items = sorted(fam)
        for i, u in enumerate(items):
            for v in items[i + 1:]:
                for w in (u | v, u & v):
                    if w not in fam:
                        fam.add(w)
                        changed = True
    return FiniteTopology(n, fam)


def specialization_order(t: FiniteTopology) -> FinitePreorder:
    return t.specialization()


def scott_topology(p: FinitePreorder) -> FiniteTopology:
    """All increasing sets.  On a finite carrier every directed set contains
    its own supremum, so the directed-join condition holds for free and the
    Scott opens are exactly the increasing sets."""
    opens = [a for a in range(1 << p.n) if p.is_upper_set(a)]
    return FiniteTopology(p.n, opens)


def lower_topology(p: FinitePreorder) -> FiniteTopology:
    """All decreasing sets.  Finitely, every decreasing set is a finite
    intersection of complements of principal increasing sets, so this is
    the topology those complements generate."""
    opens = [a for a in range(1 << p.n) if p.is_lower_set(a)]
    return FiniteTopology(p.n, opens)


# ---------------------------------------------------------------------------
# functions into the rationals


def _profile(f) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in f)


def is_monotone(f, p: FinitePreorder) -> bool:
    vals = _profile(f)
    if len(vals) != p.n:
        raise ValueError("function length does not match carrier")
    for x in range(p.n):
        for y in bits(p.up[x]):
            if vals[x] > vals[y]:
                return False
    return True


def is_lower_semicontinuous(f, t: FiniteTopology) -> bool:
    """Every strict superlevel set is open.  Superlevel sets only change at
    attained values, so checking those settles every threshold."""
    vals = _profile(f)
    if len(vals) != t.n:
        raise ValueError("function length does not match carrier")
    for r in set(vals):
        mask = 0
        for x, v in enumerate(vals):
            if v > r:
                mask |= 1 << x
        if not t.is_open(mask):
            return False
    return True


def is_upper_semicontinuous(f, t: FiniteTopology) -> bool:
    """Every strict sublevel set is open."""
    vals = _profile(f)
    if len(vals) != t.n:
        raise ValueError("function length does not match carrier")
    for r in set(vals):
        mask = 0
        for x, v in enumerate(vals):
            if v < r:
                mask |= 1 << x
        if not t.is_open(mask):
            return False
    return True


def extrema(f) -> tuple[int, int]:
    """Witness masks of the points where f attains its minimum and maximum."""
    vals = _profile(f)
    if not vals:
        raise ValueError("empty function has no extrema")
    lo, hi = min(vals), max(vals)
    lo_mask = 0
    hi_mask = 0
    for x, v in enumerate(vals):
        if v == lo:
            lo_mask |= 1 << x
        if v == hi:
            hi_mask |= 1 << x
    return lo_mask, hi_mask


# ---------------------------------------------------------------------------
# product closedness of the order graph


def product_separation(
    order: FinitePreorder, t1: FiniteTopology, t2: FiniteTopology, a: int, b: int
):
    """Opens U in t1 around a and V in t2 around b whose rectangle misses
    the order graph, or None.  Smallest masks win, U scanned first."""
    for u in t1.opens:
        if not (u >> a) & 1:
            continue
        iu = order.up_set(u)
        for v in t2.opens:
            if (v >> b) & 1 and iu & v == 0:
                return u, v
    return None


def hull_separation(
    order: FinitePreorder, t1: FiniteTopology, t2: FiniteTopology, a: int, b: int
):
    """Like product_separation but the rectangle of hulls must miss: the
    increasing hull of U and the decreasing hull of V are disjoint.  By
    transitivity a pair separates in this sense iff it separates in the
    plain sense, and with the same witnesses."""
    for u in t1.opens:
        if not (u >> a) & 1:
            continue
        iu = order.up_set(u)
        for v in t2.opens:
            if (v >> b) & 1 and iu & order.down_set(v) == 0:
                return u, v
    return None


def product_closedness_witness(
    order: FinitePreorder, t1: FiniteTopology, t2: FiniteTopology
):
    """First unrelated pair (a, b) with no separating rectangle, or None
    when the order is closed in the product of the two topologies."""
    for a, b in order.nonleq_pairs():
        if product_separation(order, t1, t2, a, b) is None:
            return a, b
    return None


def is_closed_in_product(
    order: FinitePreorder, t1: FiniteTopology, t2: FiniteTopology
) -> bool:
    return product_closedness_witness(order, t1, t2) is None


# ---------------------------------------------------------------------------
# certified spaces


@dataclass(frozen=True)
class BitopPreorderedSpace:
    """A preorder with an increasing-open topology t1 and a decreasing-open
    topology t2 such that the order is closed in the product.  Construction
    checks all three conditions."""

    order: FinitePreorder
    t1: FiniteTopology
    t2: FiniteTopology

    def __post_init__(self):
        if self.t1.n != self.order.n or self.t2.n != self.order.n:
            raise SpaceCertificationError("carrier sizes disagree")
        for u in self.t1.opens:
            if not self.order.is_upper_set(u):
                raise SpaceCertificationError(
                    "first-topology open %s is not increasing" % set_str(u)
                )
        for v in self.t2.opens:
            if not self.order.is_lower_set(v):
                raise SpaceCertificationError(
                    "second-topology open %s is not decreasing" % set_str(v)
                )
        bad = product_closedness_witness(self.order, self.t1, self.t2)
        if bad is not None:
            raise SpaceCertificationError(
                "unrelated pair (%d, %d) admits no separating opens" % bad
            )

    @property
    def n(self) -> int:
        return self.order.n

    def increasing_hull(self, a: int) -> int:
        return self.order.up_set(a)

    def decreasing_hull(self, a: int) -> int:
        return self.order.down_set(a)


def canonical_space(p: FinitePreorder) -> BitopPreorderedSpace:
    """The space a preorder always carries: all increasing sets as the
    first topology, all decreasing sets as the second."""
    return BitopPreorderedSpace(p, scott_topology(p), lower_topology(p))


def from_specialization(t: FiniteTopology) -> BitopPreorderedSpace:
    """Pair t with its specialization preorder and the decreasing sets of
    that preorder.  t's opens are increasing by the definition of
    specialization, and complements of increasing opens separate every
    unrelated pair, so this always certifies."""
    p = t.specialization()
    return BitopPreorderedSpace(p, t, lower_topology(p))


def from_quasi_pseudometric(d) -> BitopPreorderedSpace:
    """Space of a quasi-pseudometric matrix.

    d is a square matrix of nonnegative rationals with zero diagonal
    satisfying the triangle inequality; symmetry is not required.  The
    first topology is generated by the forward balls, the second by the
    reverse balls, and the order is x below y iff d[x][y] == 0.  Only the
    attained positive distances are needed as radii: the ball at any other
    radius coincides with one of these.
    """
    n = len(d)
    rows = [[Fraction(v) for v in row] for row in d]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidMetricError("row %d has length %d, expected %d" % (i, len(row), n))
    for i in range(n):
        if rows[i][i] != 0:
            raise InvalidMetricError("nonzero diagonal at %d" % i)
        for j in range(n):
            if rows[i][j] < 0:
                raise InvalidMetricError("negative distance at (%d, %d)" % (i, j))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if rows[i][k] > rows[i][j] + rows[j][k]:
                    raise InvalidMetricError(
                        "triangle inequality fails at (%d, %d, %d)" % (i, j, k)
                    )
    radii = sorted({rows[i][j] for i in range(n) for j in range(n) if rows[i][j] > 0})
    fwd = []
    rev = []
    for x in range(n):
        for r in radii:
            fwd.append(sum(1 << y for y in range(n) if rows[x][y] < r))
            rev.append(sum(1 << y for y in range(n) if rows[y][x] < r))
    order_rows = [
        sum(1 << y for y in range(n) if rows[x][y] == 0) for x in range(n)
    ]
    order = FinitePreorder(n, order_rows)
    return BitopPreorderedSpace(
        order, generate_topology(n, fwd), generate_topology(n, rev)
    )


def join_topology(space: BitopPreorderedSpace) -> FiniteTopology:
    return generate_topology(space.n, space.t1.opens + space.t2.opens)


def is_joincompact(space: BitopPreorderedSpace) -> bool:
    """Compactness of the join topology plus hull separation of every
    unrelated pair.  The subcover search is run explicitly even though a
    finite cover is always its own finite subcover."""
    jt = join_topology(space)
    full = full_mask(space.n)
    covered = 0
    while covered != full:
        gain, pick = max(
            ((u & ~covered).bit_count(), u) for u in jt.opens
        )
        if gain == 0:
            return False
        covered |= pick
    for a, b in space.order.nonleq_pairs():
        if hull_separation(space.order, space.t1, space.t2, a, b) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# normal separation and exact two-sided functions


def _check_admissible(space: BitopPreorderedSpace, a_mask: int, b_mask: int):
    if a_mask & b_mask:
        raise ValueError("the two sets must be disjoint")
    if not space.order.is_lower_set(a_mask):
        raise ValueError("first set %s is not decreasing" % set_str(a_mask))
    if not space.order.is_upper_set(b_mask):
        raise ValueError("second set %s is not increasing" % set_str(b_mask))
    if not space.t1.is_closed(a_mask):
        raise ValueError("first set %s is not closed in the first topology" % set_str(a_mask))
    if not space.t2.is_closed(b_mask):
        raise ValueError("second set %s is not closed in the second topology" % set_str(b_mask))


def _find_separation(space: BitopPreorderedSpace, a_mask: int, b_mask: int):
    # first o1 in t2 covering a_mask that some o2 in t1 covering b_mask misses
    for o1 in space.t2.opens:
        if a_mask & ~o1:
            continue
        for o2 in space.t1.opens:
            if b_mask & ~o2 == 0 and o1 & o2 == 0:
                return o1, o2
    raise SeparationFailedError(
        "no disjoint opens around %s and %s" % (set_str(a_mask), set_str(b_mask))
    )


def find_normal_separation(space: BitopPreorderedSpace, a_mask: int, b_mask: int):
    """Disjoint opens (O1, O2): O1 decreasing-open covering the first set,
    O2 increasing-open covering the second.  The first set must be a
    decreasing closed set of the first topology, the second an increasing
    closed set of the second."""
    _check_admissible(space, a_mask, b_mask)
    return _find_separation(space, a_mask, b_mask)


def _saturate(space: BitopPreorderedSpace, a_mask: int, b_mask: int) -> int:
    """Grow a_mask to a set that is simultaneously open in the second
    topology and closed in the first, still missing b_mask.

    Each round separates the current set from b_mask and replaces it with
    the complement of the open around b_mask.  That complement is closed
    in the first topology and decreasing, and it contains the previous
    set, so the iteration is monotone and stops within n rounds.  At the
    fixpoint the set equals its own covering open.
    """
    cur = a_mask
    while True:
        o1, o2 = _find_separation(space, cur, b_mask)
        grown = full_mask(space.n) & ~o2
        if grown == cur:
            return cur
        cur = grown


def urysohn_nachbin(
    space: BitopPreorderedSpace, a_mask: int, b_mask: int, depth: int = 4
):
    """Exact separating function: 0 on the first set, 1 on the second,
    monotone, lower semicontinuous for the first topology and upper
    semicontinuous for the second, with dyadic values of denominator at
    most 2**depth.

    Every sublevel set of such a function must be decreasing, closed in
    the first topology and open in the second all at once, so the level
    sets are built directly in that form: the zero level saturates the
    first set away from the second, and each refinement round saturates a
    level toward the next one up, inserting the midpoint label when that
    produces a genuinely new set.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    _check_admissible(space, a_mask, b_mask)
    one = Fraction(1)
    full = full_mask(space.n)
    levels = {Fraction(0): _saturate(space, a_mask, b_mask)}
    gaps = [(Fraction(0), one)]
    for _ in range(depth):
        nxt = []
        for lo, hi in gaps:
            block = b_mask if hi == one else full & ~levels[hi]
            t = _saturate(space, levels[lo], block)
            if t == levels[lo] or (hi != one and t == levels[hi]):
                continue  # nothing strictly between, this gap is finished
            mid = (lo + hi) / 2
            levels[mid] = t
            nxt.append((lo, mid))
            nxt.append((mid, hi))
        if not nxt:
            break
        gaps = nxt
    labels = sorted(levels)
    out = []
    for x in range(space.n):
        val = one
        for r in labels:
            if (levels[r] >> x) & 1:
                val = r
                break
        out.append(val)
    return tuple(out)


def separate_points(space: BitopPreorderedSpace, a: int, b: int, depth: int = 4):
    """For a not below b, a function from urysohn_nachbin taking 1 at a and
    0 at b: the decreasing hull of b and the increasing hull of a are the
    admissible pair to separate."""
    if space.order.leq(a, b):
        raise ValueError("points are related; nothing separates them")
    return urysohn_nachbin(space, space.order.down[b], space.order.up[a], depth)
