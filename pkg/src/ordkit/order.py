"""Finite preorders and posets on the carrier {0, ..., n-1}.

Subsets of the carrier are plain int bit masks: bit x set means element x is
in the set.  A relation is stored as one mask per element: row x holds the
set {y : x <= y}.  Values are immutable once constructed and every operation
returns a new value.  Wherever a choice among subsets has to be made, the
smallest bit-mask value wins, so all results are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def full_mask(n: int) -> int:
    return (1 << n) - 1


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including mask itself and 0, descending."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def set_str(mask: int) -> str:
    """Render a mask as a braced element list, e.g. ``{0,2}``."""
    return "{" + ",".join(str(x) for x in bits(mask)) + "}"


class FinitePreorder:
    """A reflexive transitive relation on {0, ..., n-1}.

    ``up[x]`` is the mask {y : x <= y} and ``down[x]`` the mask
    {y : y <= x}.  The constructor rejects rows that are not reflexive
    or not transitive.
    """

    __slots__ = ("n", "up", "down")

    def __init__(self, n: int, up: Sequence[int]):
        up = tuple(up)
        if n < 0 or len(up) != n:
            raise ValueError("need exactly one relation row per element")
        full = full_mask(n)
        for x, row in enumerate(up):
            if row & ~full:
                raise ValueError("row %d mentions elements outside 0..%d" % (x, n - 1))
            if not (row >> x) & 1:
                raise ValueError("relation is not reflexive at %d" % x)
        for x in range(n):
            acc = 0
            for y in bits(up[x]):
                acc |= up[y]
            if acc != up[x]:
                raise ValueError("relation is not transitive at %d" % x)
        down = [0] * n
        for x in range(n):
            for y in bits(up[x]):
                down[y] |= 1 << x
        self.n = n
        self.up = up
        self.down = tuple(down)

    # relation queries ----------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return bool((self.up[x] >> y) & 1)

    def strict(self, x: int, y: int) -> bool:
        return self.leq(x, y) and not self.leq(y, x)

    def equiv(self, x: int, y: int) -> bool:
        return self.leq(x, y) and self.leq(y, x)

    def is_antisymmetric(self) -> bool:
        return all(self.up[x] & self.down[x] == 1 << x for x in range(self.n))

    # subset operations ---------------------------------------------------

    def up_set(self, a: int) -> int:
        """i(a): everything above some element of a."""
        m = 0
        for x in bits(a):
            m |= self.up[x]
        return m

    def down_set(self, a: int) -> int:
        """d(a): everything below some element of a."""
        m = 0
        for x in bits(a):
            m |= self.down[x]
        return m

    def is_upper_set(self, a: int) -> bool:
        return self.up_set(a) == a

    def is_lower_set(self, a: int) -> bool:
        return self.down_set(a) == a

    def upper_bounds(self, a: int) -> int:
        """Elements above every element of a; the full set when a is empty."""
        m = full_mask(self.n)
        for x in bits(a):
            m &= self.up[x]
        return m

    def lower_bounds(self, a: int) -> int:
        m = full_mask(self.n)
        for x in bits(a):
            m &= self.down[x]
        return m

    def cut(self, a: int) -> int:
        """Lower bounds of the upper bounds of a (a closure operator)."""
        return self.lower_bounds(self.upper_bounds(a))

    # enumeration helpers -------------------------------------------------

    def pairs(self) -> Iterator[tuple[int, int]]:
        for x in range(self.n):
            for y in bits(self.up[x]):
                yield (x, y)

    def nonleq_pairs(self) -> Iterator[tuple[int, int]]:
        """All ordered pairs (a, b) with a not below b."""
        for a in range(self.n):
            rest = full_mask(self.n) & ~self.up[a]
            for b in bits(rest):
                yield (a, b)

    def strict_pairs(self) -> Iterator[tuple[int, int]]:
        for x in range(self.n):
            for y in bits(self.up[x] & ~self.down[x]):
                yield (x, y)

    def reverse(self) -> "FinitePreorder":
        return self.__class__(self.n, self.down)

    # value semantics -----------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FinitePreorder)
            and self.n == other.n
            and self.up == other.up
        )

    def __hash__(self) -> int:
        return hash((self.n, self.up))

    def __repr__(self) -> str:
        return "%s(%d, %r)" % (type(self).__name__, self.n, list(self.up))


class FinitePoset(FinitePreorder):
    """A preorder that is also antisymmetric."""

    __slots__ = ()

    def __init__(self, n: int, up: Sequence[int]):
        super().__init__(n, up)
        if not self.is_antisymmetric():
            raise ValueError("relation is not antisymmetric")

    def covers(self, x: int, y: int) -> bool:
        """True when y covers x: x < y with nothing strictly between."""
        if not self.strict(x, y):
            return False
        between = self.up[x] & self.down[y] & ~(1 << x) & ~(1 << y)
        return between == 0


def transitive_reflexive_closure(n: int, pairs: Iterable[tuple[int, int]]) -> FinitePreorder:
    """Smallest preorder containing the given pairs."""
    rows = [1 << x for x in range(n)]
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise ValueError("pair (%d, %d) outside 0..%d" % (x, y, n - 1))
        rows[x] |= 1 << y
    changed = True
    while changed:
        changed = False
        for x in range(n):
            acc = rows[x]
            for y in bits(rows[x]):
                acc |= rows[y]
            if acc != rows[x]:
                rows[x] = acc
                changed = True
    return FinitePreorder(n, rows)


@dataclass(frozen=True)
class QuotientMap:
    """Collapse of a preorder along its symmetric part.

    ``classes`` lists the equivalence classes as masks, ordered by their
    smallest member.  ``proj[x]`` is the index of the class of x.  ``target``
    carries the induced order on classes, which is always a poset.
    """

    source: FinitePreorder
    classes: tuple[int, ...]
    proj: tuple[int, ...]
    target: FinitePoset

    def class_of(self, x: int) -> int:
        return self.proj[x]

    def representative(self, c: int) -> int:
        low = self.classes[c] & -self.classes[c]
        return low.bit_length() - 1


def quotient(p: FinitePreorder) -> QuotientMap:
    """Quotient of p by its symmetric part, with the induced order."""
    index: dict[int, int] = {}
    classes: list[int] = []
    proj: list[int] = []
    for x in range(p.n):
        cls = p.up[x] & p.down[x]
        if cls not in index:
            index[cls] = len(classes)
            classes.append(cls)
        proj.append(index[cls])
    m = len(classes)
    reps = [(c & -c).bit_length() - 1 for c in classes]
    rows = []
    for i in range(m):
        row = 0
        for j in range(m):
            if p.leq(reps[i], reps[j]):
                row |= 1 << j
        rows.append(row)
    target = FinitePoset(m, rows)
    return QuotientMap(source=p, classes=tuple(classes), proj=tuple(proj), target=target)


def linear_extensions(p: FinitePreorder) -> list[tuple[int, ...]]:
    """All total orders containing p, as element sequences, in lexicographic
    order of the sequence.  Requires a poset."""
    if not p.is_antisymmetric():
        raise ValueError("linear extensions require a poset")
    n = p.n
    full = full_mask(n)
    out: list[tuple[int, ...]] = []
    seq: list[int] = []

    def place(done: int) -> None:
        if done == full:
            out.append(tuple(seq))
            return
        for x in range(n):
            b = 1 << x
            if done & b:
                continue
            if (p.down[x] ^ b) & ~done:
                continue  # a strict predecessor is still unplaced
            seq.append(x)
            place(done | b)
            seq.pop()

    place(0)
    return out
