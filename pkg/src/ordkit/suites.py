"""Verification suites: exhaustive checks on small carriers plus seeded
randomized tiers, reported one instance at a time.

Each suite builds a deterministic job list from (n, count, seed); a job
checks one instance and returns a verdict.  Verdicts are "pass",
"violation", or "known-discrepancy"; the last marks a recorded finite-size
departure from the idealized statement being probed, with a witness, and
is not a failure.  Report streams are byte-deterministic: serialization
excludes timing, and jobs are emitted in construction order even when a
thread pool (ORDKIT_THREADS) runs them.
"""

from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import completion as comp
from . import instances as inst
from . import representation as rep
from . import topology as top
from .order import FinitePoset, FinitePreorder, bits, full_mask, quotient, set_str

PASS = "pass"
VIOLATION = "violation"
KNOWN = "known-discrepancy"


class UnknownSuiteError(ValueError):
    pass


@dataclass(frozen=True)
class Report:
    suite: str
    instance: str
    verdict: str
    witness: str | None
    elapsed_ms: float

    def json_line(self) -> str:
        # timing is excluded so identical runs serialize identically
        return json.dumps(
            {
                "suite": self.suite,
                "instance": self.instance,
                "verdict": self.verdict,
                "witness": self.witness,
            },
            sort_keys=True,
        )


def _ok():
    return PASS, None


def _bad(msg: str):
    return VIOLATION, msg


# ---------------------------------------------------------------------------
# per-instance checks


def _check_completion(p: FinitePoset):
    lat = comp.macneille(p)  # the constructor re-validates the structure
    if set(lat.cuts) != comp.all_cuts_bruteforce(p):
        return _bad("cut family differs from the brute-force cut set")
    if p.n == 0 and lat.cuts != (0,):
        return _bad("empty carrier must complete to the one-point lattice")
    return _ok()


def _check_ideals(p: FinitePoset, frink_empty: bool):
    with_empty = comp.frink_ideals(p, allow_empty=True)
    without = comp.frink_ideals(p, allow_empty=False)
    if set(without) != set(with_empty) - {0}:
        return _bad("allow_empty flag changed more than the empty set")
    chosen = comp.frink_ideals(p, allow_empty=frink_empty)
    if set(chosen) != (set(with_empty) if frink_empty else set(without)):
        return _bad("flagged ideal family is inconsistent")
    if comp.ideal_way_below_matrix(p, brute=True) != p.up:
        return _bad("ideal interpolation relation differs from the order")
    lat = comp.macneille(p).order
    if comp.way_below_matrix(lat, brute=True) != comp.way_below_matrix(lat):
        return _bad("way-below routes disagree on the completion")
    if comp.is_continuous_lattice(lat, brute=True) is not True:
        return _bad("completion is not a continuous lattice")
    if not comp.precontinuity_completion_check(p):
        return _bad("precontinuity disagrees with completion continuity")
    return _ok()


def _check_representation(q: FinitePreorder):
    fam = rep.scott_omega_rp_family(q)
    if not rep.is_rp_multi_utility(fam, q):
        return _bad("pipeline family is not a strict representation")
    sig = top.scott_topology(q)
    low = top.lower_topology(q)
    for f in fam:
        if not top.is_lower_semicontinuous(f, sig):
            return _bad("member %s not lower semicontinuous" % (f,))
        if not top.is_upper_semicontinuous(f, low):
            return _bad("member %s not upper semicontinuous" % (f,))
    if rep.converse_completion_witness(q, fam) is not True:
        return _bad("completion of the quotient is not continuous")
    return _ok()


def _check_orderclosed(cand: inst.BitopCandidate, must_certify: bool):
    order, t1, t2 = cand.order, cand.t1, cand.t2
    for a, b in order.nonleq_pairs():
        plain = top.product_separation(order, t1, t2, a, b) is not None
        hull = top.hull_separation(order, t1, t2, a, b) is not None
        if plain != hull:
            return _bad("separation routes disagree at (%d, %d)" % (a, b))
    try:
        space = cand.certify()
    except top.SpaceCertificationError as exc:
        if must_certify:
            return _bad("expected certification, got: %s" % exc)
        return _ok()
    for a in range(1 << order.n):
        if not t2.is_closed(order.up_set(a)):
            return _bad("increasing hull of %s not closed below" % set_str(a))
        if not t1.is_closed(order.down_set(a)):
            return _bad("decreasing hull of %s not closed above" % set_str(a))
    if not top.is_joincompact(space):
        return _bad("certified space is not joincompact")
    return _ok()


def _dyadic_ok(v: Fraction, depth: int) -> bool:
    d = v.denominator
    return 0 <= v <= 1 and d <= (1 << depth) and (d & (d - 1)) == 0


def _check_one_separation(space, a_mask, b_mask, depth):
    f = top.urysohn_nachbin(space, a_mask, b_mask, depth)
    for v in f:
        if not _dyadic_ok(v, depth):
            return "value %s escapes the dyadic grid" % v
    if a_mask or b_mask:
        for x in bits(a_mask):
            if f[x] != 0:
                return "value %s on the zero side" % f[x]
        for x in bits(b_mask):
            if f[x] != 1:
                return "value %s on the one side" % f[x]
    if not top.is_monotone(f, space.order):
        return "separating function is not monotone"
    if not top.is_lower_semicontinuous(f, space.t1):
        return "separating function not lower semicontinuous"
    if not top.is_upper_semicontinuous(f, space.t2):
        return "separating function not upper semicontinuous"
    return None


def _check_urysohn_poset(p: FinitePoset, depth: int):
    space = top.canonical_space(p)
    for a_mask in space.t2.opens:  # decreasing sets are closed in t1
        for b_mask in space.t1.opens:
            if a_mask & b_mask:
                continue
            msg = _check_one_separation(space, a_mask, b_mask, depth)
            if msg:
                return _bad(
                    "pair %s, %s: %s" % (set_str(a_mask), set_str(b_mask), msg)
                )
    for a, b in p.nonleq_pairs():
        f = top.separate_points(space, a, b, depth)
        if not f[a] > f[b]:
            return _bad("points %d, %d not separated" % (a, b))
    return _ok()


def _check_urysohn_random(p: FinitePoset, depth: int, rng):
    space = top.canonical_space(p)
    downs = space.t2.opens
    a_mask = downs[rng.randrange(len(downs))]
    ups = [u for u in space.t1.opens if u & a_mask == 0]
    b_mask = ups[rng.randrange(len(ups))]
    msg = _check_one_separation(space, a_mask, b_mask, depth)
    if msg:
        return _bad("pair %s, %s: %s" % (set_str(a_mask), set_str(b_mask), msg))
    pairs = list(p.nonleq_pairs())
    if pairs:
        a, b = pairs[rng.randrange(len(pairs))]
        f = top.separate_points(space, a, b, depth)
        if not f[a] > f[b]:
            return _bad("points %d, %d not separated" % (a, b))
    return _ok()


def _grid_functions(n: int, values) -> list[tuple[Fraction, ...]]:
    out = [()]
    for _ in range(n):
        out = [f + (v,) for f in out for v in values]
    return out


def _check_interpolation(gens, phis, memo):
    closed = rep.lattice_closure(gens)
    if closed in memo:
        return memo[closed]
    members = set(closed)
    result = _ok()
    for phi in phis:
        got, fail = rep.lattice_interpolate(phi, closed, validate=False)
        if (got is not None) != (phi in members):
            result = _bad(
                "two-point interpolation disagrees with membership for %s" % (phi,)
            )
            break
        if got is not None and got != phi:
            result = _bad("interpolation returned a different function")
            break
        if fail is not None:
            x, y = fail
            if any(f[x] == phi[x] and f[y] == phi[y] for f in closed):
                result = _bad("reported pair (%d, %d) has a witness after all" % fail)
                break
    memo[closed] = result
    return result


def _check_roundtrip_full(p: FinitePoset):
    report = rep.representation_roundtrip(p)
    failing = [
        name
        for name in (
            "separating", "lattice_closed", "cone_invariant", "closure_invariant",
            "product_closed", "threshold_certified", "reverse_separating",
            "reverse_closure_invariant",
        )
        if not getattr(report, name)
    ]
    if failing:
        return _bad("conditions failed: %s" % ", ".join(failing))
    return _ok()


def _check_roundtrip_random(p: FinitePoset):
    fam = rep.rp_family_from_linear_extensions(p)
    if not rep.is_rp_multi_utility(fam, p):
        return _bad("linear-extension family is not a strict representation")
    return _ok()


def _check_quotient(q: FinitePreorder):
    qm = quotient(q)
    t = qm.target
    union = 0
    for c in qm.classes:
        if union & c:
            return _bad("classes overlap")
        union |= c
    if union != full_mask(q.n):
        return _bad("classes do not cover the carrier")
    for x in range(q.n):
        for y in range(q.n):
            if q.leq(x, y) != t.leq(qm.proj[x], qm.proj[y]):
                return _bad("projection breaks the order at (%d, %d)" % (x, y))
    src_closed = top.is_closed_in_product(
        q, top.scott_topology(q), top.lower_topology(q)
    )
    tgt_closed = top.is_closed_in_product(
        t, top.scott_topology(t), top.lower_topology(t)
    )
    if src_closed != tgt_closed:
        return _bad("product closedness not preserved and reflected")
    if comp.is_precontinuous(q) != comp.is_precontinuous(t):
        return _bad("precontinuity not preserved and reflected")
    if not comp.precontinuity_completion_check(q):
        return _bad("precontinuity disagrees with completion continuity")
    fam_t = rep.rp_family_from_linear_extensions(t)
    for g in fam_t:
        lifted = rep.lift_through_quotient(qm, g)
        if rep.push_to_quotient(qm, lifted) != g:
            return _bad("push after lift changed a member")
    lifted_fam = tuple(rep.lift_through_quotient(qm, g) for g in fam_t)
    if rep.is_rp_multi_utility(lifted_fam, q) != rep.is_rp_multi_utility(fam_t, t):
        return _bad("strict representation not preserved by lifting")
    big = next((c for c in qm.classes if c.bit_count() > 1), None)
    if big is not None:
        probe = [Fraction(0)] * q.n
        probe[max(bits(big))] = Fraction(1)
        try:
            rep.push_to_quotient(qm, probe)
            return _bad("class-splitting function pushed without error")
        except rep.NotClassConstantError:
            pass
    return _ok()


def _greedy_subcover(t: top.FiniteTopology, target: int) -> bool:
    covered = 0
    while target & ~covered:
        gain, pick = max(
            ((u & target & ~covered).bit_count(), u) for u in t.opens
        )
        if gain == 0:
            return False
        covered |= pick
    return True


def _check_compactness(p: FinitePoset):
    space = top.canonical_space(p)
    if not top.is_joincompact(space):
        return _bad("canonical space is not joincompact")
    witness = None
    for a in range(1 << p.n):
        compact = _greedy_subcover(space.t2, a)
        closed = space.t1.is_closed(a)
        if closed and not compact:
            return _bad("closed set %s has no finite subcover" % set_str(a))
        if compact and not closed and witness is None:
            witness = a
    if witness is not None:
        return KNOWN, (
            "subset %s is compact in the second topology but not closed in "
            "the first; on finite carriers every subset is compact, so "
            "compactness cannot imply closedness" % set_str(witness)
        )
    return _ok()


def _check_semicontinuity(p: FinitePreorder, f):
    sig = top.scott_topology(p)
    low = top.lower_topology(p)
    mono = top.is_monotone(f, p)
    both = top.is_lower_semicontinuous(f, sig) and top.is_upper_semicontinuous(f, low)
    if mono != both:
        return _bad(
            "monotonicity and two-sided semicontinuity disagree for %s" % (f,)
        )
    if p.n:
        lo_mask, hi_mask = top.extrema(f)
        if not lo_mask or not hi_mask:
            return _bad("extrema witness sets are empty")
        lo_bit = (lo_mask & -lo_mask).bit_length() - 1
        hi_bit = (hi_mask & -hi_mask).bit_length() - 1
        if f[lo_bit] != min(f) or f[hi_bit] != max(f):
            return _bad("extrema witnesses do not attain the extreme values")
    return _ok()


def _check_gridfamily(p: FinitePoset):
    lat = comp.macneille(p).order
    k = max(1, lat.n - 1)
    strict_fam = rep.grid_family(lat, k, strict=True)
    if not strict_fam:
        return _bad("no strict grid members at the full grid size")
    if not rep.is_rp_multi_utility(strict_fam, lat):
        return _bad("strict grid family is not a strict representation")
    full_fam = rep.grid_family(lat, k, strict=False)
    if not rep.is_multi_utility(full_fam, lat):
        return _bad("monotone grid family does not represent the lattice")
    if list(lat.strict_pairs()):
        if all(rep.is_rp_utility(f, lat) for f in full_fam):
            return _bad("expected non-strict members (constants) in the full family")
    return _ok()


# ---------------------------------------------------------------------------
# job builders


def _poset_jobs(limit: int):
    for n in range(limit + 1):
        for i, p in enumerate(inst.enumerate_posets(n)):
            yield "poset:%d:#%d" % (n, i), p


def _preorder_jobs(limit: int):
    for n in range(limit + 1):
        for i, q in enumerate(inst.enumerate_preorders(n)):
            yield "preorder:%d:#%d" % (n, i), q


def _random_posets(sizes, count, seed):
    for n in sizes:
        for i in range(count):
            yield "poset:%d:g%d" % (n, seed + i), inst.generate("poset", n, seed + i).payload


def _jobs_completion(n, count, seed, depth, frink_empty):
    n = 8 if n is None else n
    count = 1000 if count is None else count
    for iid, p in _poset_jobs(min(4, n)):
        yield iid, (lambda p=p: _check_completion(p))
    for iid, p in _random_posets(range(5, n + 1), count, seed):
        yield iid, (lambda p=p: _check_completion(p))


def _jobs_ideals(n, count, seed, depth, frink_empty):
    n = 4 if n is None else n
    for iid, p in _poset_jobs(min(4, n)):
        yield iid, (lambda p=p: _check_ideals(p, frink_empty))
    if n > 4 and count:
        for iid, p in _random_posets(range(5, n + 1), count, seed):
            yield iid, (lambda p=p: _check_ideals(p, frink_empty))


def _jobs_representation(n, count, seed, depth, frink_empty):
    n = 6 if n is None else n
    count = 1000 if count is None else count
    for iid, q in _preorder_jobs(min(4, n)):
        yield iid, (lambda q=q: _check_representation(q))
    for size in range(5, n + 1):
        for i in range(count):
            q = inst.generate("preorder", size, seed + i).payload
            yield "preorder:%d:g%d" % (size, seed + i), (
                lambda q=q: _check_representation(q)
            )


def _jobs_orderclosed(n, count, seed, depth, frink_empty):
    n = 5 if n is None else n
    count = 200 if count is None else count
    for iid, p in _poset_jobs(min(4, n)):
        cand = inst.canonical_candidate(p)
        yield iid + ":canonical", (lambda c=cand: _check_orderclosed(c, True))
    for size in range(1, n + 1):
        for i in range(count):
            cand = inst.generate("bitop", size, seed + i).payload
            yield "bitop:%d:g%d" % (size, seed + i), (
                lambda c=cand: _check_orderclosed(c, False)
            )


def _jobs_urysohn(n, count, seed, depth, frink_empty):
    n = 6 if n is None else n
    count = 1000 if count is None else count
    for iid, p in _poset_jobs(min(4, n)):
        yield iid, (lambda p=p: _check_urysohn_poset(p, depth))
    for size in range(5, n + 1):
        for i in range(count):
            p = inst.generate("poset", size, seed + i).payload
            rng = random.Random("urysohn:%d:%d" % (size, seed + i))
            yield "poset:%d:g%d" % (size, seed + i), (
                lambda p=p, rng=rng: _check_urysohn_random(p, depth, rng)
            )


def _jobs_interpolation(n, count, seed, depth, frink_empty):
    n = 3 if n is None else n
    values = (Fraction(0), Fraction(1, 2), Fraction(1))
    memo: dict = {}
    for size in range(1, min(3, n) + 1):
        funcs = _grid_functions(size, values)
        phis = tuple(funcs)
        singles = [(f,) for f in funcs]
        pairs = [
            (funcs[i], funcs[j])
            for i in range(len(funcs))
            for j in range(i + 1, len(funcs))
        ]
        triples = [
            (funcs[i], funcs[j], funcs[k])
            for i in range(len(funcs))
            for j in range(i + 1, len(funcs))
            for k in range(j + 1, len(funcs))
        ]
        for tier, gens_list in (("one", singles), ("two", pairs), ("three", triples)):
            for idx, gens in enumerate(gens_list):
                yield "grid:%d:%s:#%d" % (size, tier, idx), (
                    lambda g=gens, ph=phis, m=memo: _check_interpolation(g, ph, m)
                )


def _jobs_roundtrip(n, count, seed, depth, frink_empty):
    n = 5 if n is None else n
    count = 1000 if count is None else count
    for iid, p in _poset_jobs(min(4, n)):
        yield iid, (lambda p=p: _check_roundtrip_full(p))
    for iid, p in _random_posets(range(5, n + 1), count, seed):
        yield iid, (lambda p=p: _check_roundtrip_random(p))


def _jobs_quotient(n, count, seed, depth, frink_empty):
    n = 4 if n is None else n
    for iid, q in _preorder_jobs(min(4, n)):
        yield iid, (lambda q=q: _check_quotient(q))
    if n > 4 and count:
        for size in range(5, n + 1):
            for i in range(count):
                q = inst.generate("preorder", size, seed + i).payload
                yield "preorder:%d:g%d" % (size, seed + i), (
                    lambda q=q: _check_quotient(q)
                )


def _jobs_compactness(n, count, seed, depth, frink_empty):
    n = 4 if n is None else n
    for iid, p in _poset_jobs(min(4, n)):
        yield iid, (lambda p=p: _check_compactness(p))


def _jobs_semicontinuity(n, count, seed, depth, frink_empty):
    n = 6 if n is None else n
    count = 500 if count is None else count
    values = (Fraction(0), Fraction(1, 2), Fraction(1))
    for size in range(min(3, n) + 1):
        for i, p in enumerate(inst.enumerate_posets(size)):
            for j, f in enumerate(_grid_functions(size, values)):
                yield "poset:%d:#%d:f%d" % (size, i, j), (
                    lambda p=p, f=f: _check_semicontinuity(p, f)
                )
    for size in range(5, n + 1):
        for i in range(count):
            q = inst.generate("preorder", size, seed + i).payload
            rng = random.Random("semi:%d:%d" % (size, seed + i))
            f = tuple(Fraction(rng.randint(0, 4), 4) for _ in range(size))
            yield "preorder:%d:g%d" % (size, seed + i), (
                lambda q=q, f=f: _check_semicontinuity(q, f)
            )


def _jobs_gridfamily(n, count, seed, depth, frink_empty):
    n = 3 if n is None else n
    for iid, p in _poset_jobs(min(3, n)):
        yield iid, (lambda p=p: _check_gridfamily(p))


SUITES = {
    "completion": _jobs_completion,
    "ideals": _jobs_ideals,
    "representation": _jobs_representation,
    "orderclosed": _jobs_orderclosed,
    "urysohn": _jobs_urysohn,
    "interpolation": _jobs_interpolation,
    "roundtrip": _jobs_roundtrip,
    "quotient": _jobs_quotient,
    "compactness": _jobs_compactness,
    "semicontinuity": _jobs_semicontinuity,
    "gridfamily": _jobs_gridfamily,
}


def suite_names():
    return sorted(SUITES)


def _run_job(job):
    iid, fn = job
    t0 = time.perf_counter()
    try:
        verdict, witness = fn()
    except Exception as exc:  # an oracle blew up; surface, never swallow
        verdict = VIOLATION
        witness = "unexpected %s: %s" % (type(exc).__name__, exc)
    elapsed = (time.perf_counter() - t0) * 1000.0
    return iid, verdict, witness, elapsed


def run_suite(
    name: str,
    *,
    n: int | None = None,
    count: int | None = None,
    seed: int = 0,
    depth: int = 4,
    frink_empty: bool = True,
    threads: int | None = None,
):
    """Run one suite; yields Reports in deterministic instance order."""
    try:
        builder = SUITES[name]
    except KeyError:
        raise UnknownSuiteError(
            "unknown suite %r; known: %s" % (name, ", ".join(suite_names()))
        )
    jobs = list(builder(n, count, seed, depth, frink_empty))
    if threads is None:
        threads = int(os.environ.get("ORDKIT_THREADS", "1") or 1)

    def emit():
        if threads > 1 and len(jobs) > 1:
            with ThreadPoolExecutor(max_workers=threads) as ex:
                for iid, verdict, witness, ms in ex.map(_run_job, jobs):
                    yield Report(name, iid, verdict, witness, ms)
        else:
            for job in jobs:
                iid, verdict, witness, ms = _run_job(job)
                yield Report(name, iid, verdict, witness, ms)

    return emit()
