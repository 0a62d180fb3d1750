"""Families of rational-valued functions representing preorders.

A family F represents a preorder when x is below y exactly if every member
of F is numerically below at y.  A member is strict when, additionally, it
increases strictly along strictly related pairs.  Families are plain tuples
of member tuples; every value is a Fraction and every check is exact.

The module covers the induced preorder and its invariances (lattice
closure, affine rescaling, constant adjunction), exact interpolation in
lattice-closed families, strict families built from linear extensions or
restricted value grids, transport of families along quotient maps, the
pipeline producing a strict representing family whose members are two-sided
semicontinuous for the canonical topologies, and the extension of such a
family to the cut completion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .completion import is_continuous_lattice, is_precontinuous, macneille
from .order import (
    FinitePoset,
    FinitePreorder,
    QuotientMap,
    bits,
    linear_extensions,
    quotient,
)
from .topology import (
    BitopPreorderedSpace,
    SpaceCertificationError,
    generate_topology,
    is_closed_in_product,
    is_monotone,
)


class NotClassConstantError(ValueError):
    """Raised when a function does not factor through a quotient map."""


def _member(f) -> tuple[Fraction, ...]:
    return tuple(Fraction(v) for v in f)


def _family(members) -> tuple[tuple[Fraction, ...], ...]:
    fam = tuple(_member(f) for f in members)
    if len({len(f) for f in fam}) > 1:
        raise ValueError("family members have unequal lengths")
    return fam


def sup_norm_distance(f, g) -> Fraction:
    a, b = _member(f), _member(g)
    if len(a) != len(b):
        raise ValueError("functions have different lengths")
    return max((abs(x - y) for x, y in zip(a, b)), default=Fraction(0))


def preorder_from_family(n: int, members) -> FinitePreorder:
    """x below y iff every member is numerically no larger at x than at y.
    The empty family induces the total preorder."""
    fam = _family(members)
    if any(len(f) != n for f in fam):
        raise ValueError("family members do not match the carrier")
    rows = []
    for x in range(n):
        row = 0
        for y in range(n):
            if all(f[x] <= f[y] for f in fam):
                row |= 1 << y
        rows.append(row)
    return FinitePreorder(n, rows)


def is_multi_utility(members, p: FinitePreorder) -> bool:
    return preorder_from_family(p.n, members) == p


def is_separating(members, p: FinitePreorder) -> bool:
    """Every unrelated-in-one-direction pair is witnessed by some member
    taking a strictly larger value at the first point.  Together with
    every member being monotone this is exactly representation."""
    fam = _family(members)
    if any(len(f) != p.n for f in fam):
        raise ValueError("family members do not match the carrier")
    for a, b in p.nonleq_pairs():
        if not any(f[a] > f[b] for f in fam):
            return False
    return True


def is_rp_utility(f, p: FinitePreorder) -> bool:
    """Monotone and strictly increasing along strictly related pairs."""
    vals = _member(f)
    if len(vals) != p.n:
        raise ValueError("function length does not match carrier")
    if not is_monotone(vals, p):
        return False
    return all(vals[x] < vals[y] for x, y in p.strict_pairs())


def is_rp_multi_utility(members, p: FinitePreorder) -> bool:
    fam = _family(members)
    return is_multi_utility(fam, p) and all(is_rp_utility(f, p) for f in fam)


def lattice_closure(members):
    """Closure under pointwise minimum and maximum of pairs, sorted by
    value tuple."""
    fam = set(_family(members))
    changed = True
    while changed:
        changed = False
        items = sorted(fam)
        for i, f in enumerate(items):
            for g in items[i + 1:]:
                for h in (tuple(map(min, f, g)), tuple(map(max, f, g))):
                    if h not in fam:
                        fam.add(h)
                        changed = True
    return tuple(sorted(fam))


def cone_invariance_check(n: int, members) -> bool:
    """The induced preorder survives replacing any single member by a
    positive affine rescale of itself (slopes 1/2 and 2, shifts -1 and 1)
    and survives adjoining a constant member."""
    fam = _family(members)
    base = preorder_from_family(n, fam)
    for i, f in enumerate(fam):
        for a in (Fraction(1, 2), Fraction(2)):
            for b in (Fraction(-1), Fraction(1)):
                g = tuple(a * v + b for v in f)
                variant = fam[:i] + (g,) + fam[i + 1:]
                if preorder_from_family(n, variant) != base:
                    return False
    for c in (Fraction(0), Fraction(1)):
        if preorder_from_family(n, fam + ((c,) * n,)) != base:
            return False
    return True


def lattice_interpolate(phi, members, validate: bool = True):
    """Exact interpolation in a lattice-closed family.

    If for every pair of points (diagonal included) some member agrees
    with phi at both, then phi itself belongs to the family: take, for
    each x, the pointwise minimum over y of the two-point witnesses, and
    then the pointwise maximum over x.  Returns (phi, None) on success and
    (None, (x, y)) with the first pair lacking a witness otherwise.

    Pass validate=False to skip re-deriving the closure when the caller
    just computed it.
    """
    target = _member(phi)
    fam = _family(members)
    n = len(target)
    if any(len(f) != n for f in fam):
        raise ValueError("family members do not match the function")
    if validate and set(fam) != set(lattice_closure(fam)):
        raise ValueError("family is not lattice closed")
    if n == 0:
        return target, None
    chosen = {}
    for x in range(n):
        for y in range(n):
            pick = next(
                (f for f in fam if f[x] == target[x] and f[y] == target[y]), None
            )
            if pick is None:
                return None, (x, y)
            chosen[x, y] = pick
    parts = [
        tuple(min(chosen[x, y][z] for y in range(n)) for z in range(n))
        for x in range(n)
    ]
    result = tuple(max(g[z] for g in parts) for z in range(n))
    assert result == target, "interpolation construction missed the target"
    return result, None


def rp_family_from_linear_extensions(p: FinitePoset):
    """One member per linear extension: rank divided by n-1, so values fill
    [0, 1].  A single point gets the constant 0.  Members are strict and
    the family represents p, since the order is the intersection of its
    linear extensions."""
    exts = linear_extensions(p)
    denom = p.n - 1
    out = []
    for ext in exts:
        f = [Fraction(0)] * p.n
        for rank, x in enumerate(ext):
            f[x] = Fraction(rank, denom) if denom > 0 else Fraction(0)
        t = tuple(f)
        if t not in out:
            out.append(t)
    return tuple(out)


def grid_family(p: FinitePreorder, k: int, strict: bool = False):
    """All monotone functions with values on the grid {0, 1/k, ..., 1},
    strictly increasing along strict pairs when strict is set.

    Enumerated by assigning elements in a linearizable order (each class
    after everything strictly below it), so partial assignments only ever
    face lower constraints.
    """
    if k < 1:
        raise ValueError("grid needs at least two values")
    grid = [Fraction(i, k) for i in range(k + 1)]
    qm = quotient(p)
    t = qm.target
    topo = []
    placed = 0
    while len(topo) < t.n:
        c = next(
            c for c in range(t.n)
            if not (placed >> c) & 1 and t.down[c] & ~placed & ~(1 << c) == 0
        )
        topo.append(c)
        placed |= 1 << c
    seq = [e for c in topo for e in bits(qm.classes[c])]
    out = []
    vals: list[Fraction | None] = [None] * p.n

    def go(i: int):
        if i == len(seq):
            out.append(tuple(vals))
            return
        x = seq[i]
        cands = grid
        for j in range(i):
            y = seq[j]
            if p.equiv(x, y):
                cands = [v for v in cands if v == vals[y]]
            elif p.leq(y, x):
                if strict:
                    cands = [v for v in cands if v > vals[y]]
                else:
                    cands = [v for v in cands if v >= vals[y]]
        for v in cands:
            vals[x] = v
            go(i + 1)
        vals[x] = None

    go(0)
    return tuple(out)


def push_to_quotient(qm: QuotientMap, f):
    """Function on classes agreeing with f on every member.  Raises
    NotClassConstantError when f takes two values on one class."""
    vals = _member(f)
    if len(vals) != qm.source.n:
        raise ValueError("function length does not match carrier")
    out = []
    for cmask in qm.classes:
        members = list(bits(cmask))
        v = vals[members[0]]
        for x in members[1:]:
            if vals[x] != v:
                raise NotClassConstantError(
                    "values %s and %s on one class" % (v, vals[x])
                )
        out.append(v)
    return tuple(out)


def lift_through_quotient(qm: QuotientMap, g):
    vals = _member(g)
    if len(vals) != qm.target.n:
        raise ValueError("function length does not match quotient")
    return tuple(vals[qm.proj[x]] for x in range(qm.source.n))


def scott_omega_rp_family(p: FinitePreorder):
    """Strict representing family whose members are monotone, hence lower
    semicontinuous for the increasing-set topology and upper semicontinuous
    for the decreasing-set topology.

    Built through the cut completion of the quotient: rank members from
    the completion's linear extensions, restricted along the embedding,
    deduplicated keeping first, and lifted back to the carrier.
    """
    if not is_precontinuous(p):
        raise ValueError("preorder is not precontinuous")
    qm = quotient(p)
    lat = macneille(qm.target)
    seen = []
    for f in rp_family_from_linear_extensions(lat.order):
        g = tuple(f[lat.embed[c]] for c in range(qm.target.n))
        if g not in seen:
            seen.append(g)
    return tuple(lift_through_quotient(qm, g) for g in seen)


def converse_completion_witness(p: FinitePreorder, members) -> bool:
    """From a strict representing family back to the completion.

    Each member factors through the quotient, extends to the cut lattice
    by taking the maximum over a cut (minimum value on the empty cut), and
    the extension restricts back along the embedding.  The pointwise floor
    of the extensions is monotone as well.  Returns the continuity verdict
    for the completed lattice.
    """
    fam = _family(members)
    if not is_rp_multi_utility(fam, p):
        raise ValueError("family is not a strict representation of the preorder")
    qm = quotient(p)
    lat = macneille(qm.target)
    extended = []
    for f in fam:
        g = push_to_quotient(qm, f)
        h = tuple(
            (max(g[c] for c in bits(cmask)) if cmask
             else (min(g) if g else Fraction(0)))
            for cmask in lat.cuts
        )
        assert all(h[lat.embed[c]] == g[c] for c in range(qm.target.n))
        assert is_monotone(h, lat.order)
        extended.append(h)
    if extended:
        floor = tuple(min(col) for col in zip(*extended))
        assert is_monotone(floor, lat.order)
    return is_continuous_lattice(lat.order)


def threshold_topologies(n: int, members):
    """Topologies generated by the strict superlevel and sublevel sets of
    the members."""
    fam = _family(members)
    if any(len(f) != n for f in fam):
        raise ValueError("family members do not match the carrier")
    up_sub = []
    low_sub = []
    for f in fam:
        for r in set(f):
            up_sub.append(sum(1 << x for x in range(n) if f[x] > r))
            low_sub.append(sum(1 << x for x in range(n) if f[x] < r))
    return generate_topology(n, up_sub), generate_topology(n, low_sub)


@dataclass(frozen=True)
class RoundtripReport:
    """Each representation condition reported on its own; no single
    verdict is synthesized from them."""

    separating: bool
    lattice_closed: bool
    cone_invariant: bool
    closure_invariant: bool
    product_closed: bool
    threshold_certified: bool
    reverse_separating: bool
    reverse_closure_invariant: bool

    def all_hold(self) -> bool:
        return all(
            (self.separating, self.lattice_closed, self.cone_invariant,
             self.closure_invariant, self.product_closed,
             self.threshold_certified, self.reverse_separating,
             self.reverse_closure_invariant)
        )


def representation_roundtrip(p: FinitePoset) -> RoundtripReport:
    """Build the linear-extension family for p and report every
    representation condition separately: separation, separation after
    lattice closure, cone invariance, the induced preorder after closure,
    closedness of the order in the product of the threshold topologies,
    certification of the threshold space, and the mirrored conditions for
    the reversed order with negated members."""
    fam = rp_family_from_linear_extensions(p)
    n = p.n
    closed = lattice_closure(fam)
    tu, tl = threshold_topologies(n, fam)
    try:
        BitopPreorderedSpace(p, tu, tl)
        certified = True
    except SpaceCertificationError:
        certified = False
    neg = tuple(tuple(-v for v in f) for f in fam)
    rev = p.reverse()
    return RoundtripReport(
        separating=is_separating(fam, p),
        lattice_closed=is_separating(closed, p),
        cone_invariant=cone_invariance_check(n, fam),
        closure_invariant=preorder_from_family(n, closed) == p,
        product_closed=is_closed_in_product(p, tu, tl),
        threshold_certified=certified,
        reverse_separating=is_separating(neg, rev),
        reverse_closure_invariant=preorder_from_family(n, lattice_closure(neg)) == rev,
    )
