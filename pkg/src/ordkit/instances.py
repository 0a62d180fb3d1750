"""Text format, random generators, and exhaustive enumerators for instances.

An instance file is a header line ``<kind> <n> [name]`` followed by records
whose shape depends on the kind.  Blank lines and full-line ``#`` comments
are skipped.  The kinds:

    preorder, poset   lines ``x y``, one related pair per line; the
                      reflexive transitive closure is applied on parse
    topology          lines ``open e1 e2 ...`` (no elements for the empty
                      set); the generated topology is taken
    bitop             lines ``edge x y``, ``open1 e1 ...``, ``open2 e1 ...``
    qpm               n lines of n nonnegative rationals, row x giving the
                      distances from x
    family            one line of n rationals per member

Emission is canonical: related pairs sorted, open families complete and
ascending, rationals printed in lowest terms.  Parsing what was emitted
reproduces the instance exactly, including its bytes on re-emission.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .order import (
    FinitePoset,
    FinitePreorder,
    bits,
    transitive_reflexive_closure,
)
from .topology import (
    BitopPreorderedSpace,
    FiniteTopology,
    InvalidMetricError,
    from_quasi_pseudometric,
    generate_topology,
    lower_topology,
    scott_topology,
)

KINDS = ("preorder", "poset", "topology", "bitop", "qpm", "family")


class ParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        loc = ""
        if line is not None:
            loc = "line %d" % line
            if col is not None:
                loc += ", col %d" % col
            loc += ": "
        super().__init__(loc + msg)


@dataclass(frozen=True)
class BitopCandidate:
    """Uncertified raw pieces of a bitopological preordered space.  The
    order and both topologies are well formed on their own; certify()
    checks the compatibility conditions and returns the certified space."""

    n: int
    order: FinitePreorder
    t1: FiniteTopology
    t2: FiniteTopology

    def certify(self) -> BitopPreorderedSpace:
        return BitopPreorderedSpace(self.order, self.t1, self.t2)


@dataclass(frozen=True)
class Instance:
    kind: str
    n: int
    name: str
    payload: object


def _token_positions(line: str):
    out = []
    col = 0
    for tok in line.split():
        col = line.index(tok, col)
        out.append((col + 1, tok))
        col += len(tok)
    return out


def _int_token(tok: str, lineno: int, col: int, n: int, what: str = "element") -> int:
    try:
        v = int(tok)
    except ValueError:
        raise ParseError("expected an integer %s, got %r" % (what, tok), lineno, col)
    if not 0 <= v < n:
        raise ParseError("%s %d out of range for carrier %d" % (what, v, n), lineno, col)
    return v


def _fraction_token(tok: str, lineno: int, col: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError):
        raise ParseError("expected a rational, got %r" % tok, lineno, col)


def parse_instance(text: str) -> Instance:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, raw, _token_positions(raw)))
    if not rows:
        raise ParseError("empty instance")
    lineno, raw, toks = rows[0]
    kind = toks[0][1]
    if kind not in KINDS:
        raise ParseError("unknown kind %r" % kind, lineno, toks[0][0])
    if len(toks) < 2:
        raise ParseError("header needs a carrier size", lineno, len(raw) + 1)
    col, tok = toks[1]
    try:
        n = int(tok)
    except ValueError:
        raise ParseError("carrier size must be an integer, got %r" % tok, lineno, col)
    if n < 0:
        raise ParseError("carrier size must be nonnegative", lineno, col)
    if len(toks) > 3:
        raise ParseError("unexpected token after name", lineno, toks[3][0])
    name = toks[2][1] if len(toks) > 2 else ""
    body = rows[1:]

    if kind in ("preorder", "poset"):
        pairs = []
        for lineno, raw, toks in body:
            if len(toks) != 2:
                raise ParseError("expected a pair of elements", lineno, toks[0][0])
            x = _int_token(toks[0][1], lineno, toks[0][0], n)
            y = _int_token(toks[1][1], lineno, toks[1][0], n)
            pairs.append((x, y))
        pre = transitive_reflexive_closure(n, pairs)
        if kind == "poset":
            if not pre.is_antisymmetric():
                raise ParseError("related pairs close into a cycle", rows[0][0])
            return Instance(kind, n, name, FinitePoset(n, pre.up))
        return Instance(kind, n, name, pre)

    if kind == "topology":
        opens = []
        for lineno, raw, toks in body:
            if toks[0][1] != "open":
                raise ParseError("expected an open line", lineno, toks[0][0])
            mask = 0
            for col, tok in toks[1:]:
                mask |= 1 << _int_token(tok, lineno, col, n)
            opens.append(mask)
        return Instance(kind, n, name, generate_topology(n, opens))

    if kind == "bitop":
        pairs = []
        opens1 = []
        opens2 = []
        for lineno, raw, toks in body:
            tag = toks[0][1]
            if tag == "edge":
                if len(toks) != 3:
                    raise ParseError("expected edge x y", lineno, toks[0][0])
                x = _int_token(toks[1][1], lineno, toks[1][0], n)
                y = _int_token(toks[2][1], lineno, toks[2][0], n)
                pairs.append((x, y))
            elif tag in ("open1", "open2"):
                mask = 0
                for col, tok in toks[1:]:
                    mask |= 1 << _int_token(tok, lineno, col, n)
                (opens1 if tag == "open1" else opens2).append(mask)
            else:
                raise ParseError(
                    "expected edge, open1 or open2, got %r" % tag, lineno, toks[0][0]
                )
        return Instance(
            kind, n, name,
            BitopCandidate(
                n,
                transitive_reflexive_closure(n, pairs),
                generate_topology(n, opens1),
                generate_topology(n, opens2),
            ),
        )

    if kind == "qpm":
        if len(body) != n:
            raise ParseError(
                "expected %d distance rows, got %d" % (n, len(body)), rows[0][0]
            )
        matrix = []
        for lineno, raw, toks in body:
            if len(toks) != n:
                raise ParseError(
                    "expected %d entries, got %d" % (n, len(toks)), lineno, toks[0][0]
                )
            matrix.append(tuple(_fraction_token(tok, lineno, col) for col, tok in toks))
        matrix = tuple(matrix)
        try:
            from_quasi_pseudometric(matrix)
        except InvalidMetricError as exc:
            raise ParseError(str(exc), rows[0][0])
        return Instance(kind, n, name, matrix)

    # family
    members = []
    for lineno, raw, toks in body:
        if len(toks) != n:
            raise ParseError(
                "expected %d values, got %d" % (n, len(toks)), lineno, toks[0][0]
            )
        members.append(tuple(_fraction_token(tok, lineno, col) for col, tok in toks))
    return Instance(kind, n, name, tuple(members))


def _pair_lines(p: FinitePreorder, tag: str = "") -> list[str]:
    prefix = tag + " " if tag else ""
    return [
        "%s%d %d" % (prefix, x, y)
        for x in range(p.n)
        for y in bits(p.up[x])
        if x != y
    ]


def _open_line(tag: str, mask: int) -> str:
    elems = " ".join(str(e) for e in bits(mask))
    return tag + (" " + elems if elems else "")


def emit_instance(inst: Instance) -> str:
    head = "%s %d" % (inst.kind, inst.n)
    if inst.name:
        head += " " + inst.name
    lines = [head]
    if inst.kind in ("preorder", "poset"):
        lines.extend(_pair_lines(inst.payload))
    elif inst.kind == "topology":
        lines.extend(_open_line("open", u) for u in inst.payload.opens)
    elif inst.kind == "bitop":
        cand = inst.payload
        lines.extend(_pair_lines(cand.order, "edge"))
        lines.extend(_open_line("open1", u) for u in cand.t1.opens)
        lines.extend(_open_line("open2", u) for u in cand.t2.opens)
    elif inst.kind == "qpm":
        lines.extend(" ".join(str(v) for v in row) for row in inst.payload)
    else:
        lines.extend(" ".join(str(v) for v in f) for f in inst.payload)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# deterministic generation


def generate(kind: str, n: int, seed: int) -> Instance:
    """Deterministic pseudorandom instance; the stream depends only on
    (kind, n, seed)."""
    if kind not in KINDS:
        raise ValueError("unknown kind %r" % kind)
    if n < 0:
        raise ValueError("carrier size must be nonnegative")
    rng = random.Random("%s:%d:%d" % (kind, n, seed))
    name = "g%d" % seed

    if kind == "poset":
        return Instance(kind, n, name, _random_poset(rng, n))
    if kind == "preorder":
        return Instance(kind, n, name, _random_preorder(rng, n))
    if kind == "topology":
        masks = [rng.randrange(1 << n) for _ in range(3)]
        return Instance(kind, n, name, generate_topology(n, masks))
    if kind == "bitop":
        order = _random_preorder(rng, n)
        t1 = generate_topology(n, [rng.randrange(1 << n) for _ in range(3)])
        t2 = generate_topology(n, [rng.randrange(1 << n) for _ in range(3)])
        return Instance(kind, n, name, BitopCandidate(n, order, t1, t2))
    if kind == "qpm":
        d = [[Fraction(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                if i != j:
                    d[i][j] = Fraction(rng.randint(0, 4), rng.randint(1, 2))
        # shortest-path repair makes the triangle inequality hold
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    through = d[i][k] + d[k][j]
                    if through < d[i][j]:
                        d[i][j] = through
        return Instance(kind, n, name, tuple(tuple(row) for row in d))
    # zero-length members would emit as blank lines and vanish on reparse
    members = tuple(
        tuple(Fraction(rng.randint(0, 4), 4) for _ in range(n))
        for _ in range(3 if n else 0)
    )
    return Instance(kind, n, name, members)


def _random_poset(rng: random.Random, n: int) -> FinitePoset:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    perm = list(range(n))
    rng.shuffle(perm)
    pre = transitive_reflexive_closure(n, [(perm[i], perm[j]) for i, j in pairs])
    return FinitePoset(n, pre.up)


def _random_preorder(rng: random.Random, n: int) -> FinitePreorder:
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if i != j and rng.random() < 0.3
    ]
    return transitive_reflexive_closure(n, pairs)


def canonical_candidate(p: FinitePreorder) -> BitopCandidate:
    """The candidate every preorder certifies: increasing sets and
    decreasing sets."""
    return BitopCandidate(p.n, p, scott_topology(p), lower_topology(p))


# ---------------------------------------------------------------------------
# exhaustive enumeration


def enumerate_preorders(n: int) -> list[FinitePreorder]:
    """Every preorder on {0, ..., n-1}, by checking each assignment of the
    off-diagonal related pairs for transitivity.  Ascending by row tuple."""
    offdiag = [(x, y) for x in range(n) for y in range(n) if x != y]
    out = []
    for code in range(1 << len(offdiag)):
        rows = [1 << x for x in range(n)]
        for bit, (x, y) in enumerate(offdiag):
            if (code >> bit) & 1:
                rows[x] |= 1 << y
        ok = True
        for x in range(n):
            acc = rows[x]
            for y in bits(rows[x]):
                acc |= rows[y]
            if acc != rows[x]:
                ok = False
                break
        if ok:
            out.append(FinitePreorder(n, rows))
    out.sort(key=lambda p: p.up)
    return out


def enumerate_posets(n: int) -> list[FinitePoset]:
    return [
        FinitePoset(p.n, p.up)
        for p in enumerate_preorders(n)
        if p.is_antisymmetric()
    ]
