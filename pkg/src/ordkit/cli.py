"""Command line interface.

Exit codes: 0 when the requested computation or check passes, 1 when a
check finds a violation (an unseparated pair, a missing interpolant, a
failing suite instance), 2 for usage or parse problems.  Known
discrepancies reported by suites do not affect the exit code.
"""

from __future__ import annotations

import argparse
import sys

from .completion import is_continuous_lattice, is_precontinuous, macneille
from .instances import Instance, ParseError, canonical_candidate, emit_instance, generate, parse_instance
from .order import quotient, set_str
from .representation import lattice_interpolate, scott_omega_rp_family
from .suites import UnknownSuiteError, run_suite, suite_names
from .topology import (
    SpaceCertificationError,
    find_normal_separation,
    SeparationFailedError,
    lower_topology,
    product_closedness_witness,
    scott_topology,
    urysohn_nachbin,
)


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _UsageError(str(exc))


def _load(path: str, kinds) -> Instance:
    try:
        instance = parse_instance(_read_text(path))
    except ParseError as exc:
        raise _UsageError("%s: %s" % (path, exc))
    if instance.kind not in kinds:
        raise _UsageError(
            "%s: expected %s instance, got %s" % (path, " or ".join(kinds), instance.kind)
        )
    return instance


def _space_of(instance: Instance):
    if instance.kind == "bitop":
        return instance.payload.certify()
    return canonical_candidate(instance.payload).certify()


def _cmd_complete(args) -> int:
    instance = _load(args.file, ("poset",))
    lat = macneille(instance.payload)
    print("cuts %d" % len(lat.cuts))
    for i, c in enumerate(lat.cuts):
        print("%d %s" % (i, set_str(c)))
    for x, i in enumerate(lat.embed):
        print("embed %d -> %d" % (x, i))
    return 0


def _cmd_scott(args) -> int:
    instance = _load(args.file, ("poset", "preorder"))
    for u in scott_topology(instance.payload).opens:
        print(set_str(u))
    return 0


def _cmd_lower(args) -> int:
    instance = _load(args.file, ("poset", "preorder"))
    for u in lower_topology(instance.payload).opens:
        print(set_str(u))
    return 0


def _cmd_precontinuous(args) -> int:
    instance = _load(args.file, ("poset", "preorder"))
    q = instance.payload
    pre = is_precontinuous(q)
    cont = is_continuous_lattice(macneille(quotient(q).target).order)
    print("precontinuous %s" % ("true" if pre else "false"))
    print("completion-continuous %s" % ("true" if cont else "false"))
    if pre != cont:
        print("agreement false")
        return 1
    print("agreement true")
    return 0


def _cmd_represent(args) -> int:
    instance = _load(args.file, ("poset", "preorder"))
    for f in scott_omega_rp_family(instance.payload):
        print(" ".join(str(v) for v in f))
    return 0


def _cmd_check_closed(args) -> int:
    instance = _load(args.file, ("bitop", "poset", "preorder"))
    if instance.kind == "bitop":
        cand = instance.payload
    else:
        cand = canonical_candidate(instance.payload)
    witness = product_closedness_witness(cand.order, cand.t1, cand.t2)
    if witness is None:
        try:
            cand.certify()
        except SpaceCertificationError as exc:
            print("closed but uncertified: %s" % exc)
            return 1
        print("closed")
        return 0
    print("witness %d %d" % witness)
    return 1


def _admissible_pairs(space):
    decreasing_closed = [
        a for a in space.t1.closed_sets() if space.order.is_lower_set(a)
    ]
    increasing_closed = [
        b for b in space.t2.closed_sets() if space.order.is_upper_set(b)
    ]
    for a in decreasing_closed:
        for b in increasing_closed:
            if a & b == 0:
                yield a, b


def _cmd_normality(args) -> int:
    instance = _load(args.file, ("bitop", "poset", "preorder"))
    try:
        space = _space_of(instance)
    except SpaceCertificationError as exc:
        raise _UsageError("instance does not certify: %s" % exc)
    failures = 0
    for a, b in _admissible_pairs(space):
        try:
            o1, o2 = find_normal_separation(space, a, b)
            print("%s %s -> %s %s" % (set_str(a), set_str(b), set_str(o1), set_str(o2)))
        except SeparationFailedError:
            failures += 1
            print("%s %s -> NONE" % (set_str(a), set_str(b)))
    return 1 if failures else 0


def _cmd_urysohn(args) -> int:
    instance = _load(args.file, ("bitop", "poset", "preorder"))
    try:
        space = _space_of(instance)
    except SpaceCertificationError as exc:
        raise _UsageError("instance does not certify: %s" % exc)
    for a, b in _admissible_pairs(space):
        f = urysohn_nachbin(space, a, b, args.depth)
        print(
            "%s %s -> %s"
            % (set_str(a), set_str(b), " ".join(str(v) for v in f))
        )
    return 0


def _cmd_interpolate(args) -> int:
    fam_inst = _load(args.family, ("family",))
    phi_inst = _load(args.function, ("family",))
    if len(phi_inst.payload) != 1:
        raise _UsageError(
            "%s: expected exactly one member, got %d" % (args.function, len(phi_inst.payload))
        )
    phi = phi_inst.payload[0]
    if fam_inst.n != phi_inst.n:
        raise _UsageError("carrier sizes disagree")
    try:
        member, fail = lattice_interpolate(phi, fam_inst.payload)
    except ValueError as exc:
        raise _UsageError(str(exc))
    if member is not None:
        print("member " + " ".join(str(v) for v in member))
        return 0
    print("none %d %d" % fail)
    return 1


def _cmd_gen(args) -> int:
    try:
        instance = generate(args.kind, args.n, args.seed)
    except ValueError as exc:
        raise _UsageError(str(exc))
    sys.stdout.write(emit_instance(instance))
    return 0


def _cmd_verify(args) -> int:
    out = sys.stdout
    close = False
    if args.out is not None:
        try:
            out = open(args.out, "w", encoding="utf-8")
        except OSError as exc:
            raise _UsageError(str(exc))
        close = True
    counts = {"pass": 0, "violation": 0, "known-discrepancy": 0}
    total_ms = 0.0
    try:
        for report in run_suite(
            args.suite,
            n=args.n,
            count=args.count,
            seed=args.seed,
            depth=args.depth,
            frink_empty=args.frink_empty,
        ):
            out.write(report.json_line() + "\n")
            counts[report.verdict] += 1
            total_ms += report.elapsed_ms
    except UnknownSuiteError as exc:
        if close:
            out.close()
        raise _UsageError(str(exc))
    if close:
        out.close()
    print(
        "%s: %d instances, %d pass, %d violation, %d known-discrepancy, %.1f ms"
        % (
            args.suite,
            sum(counts.values()),
            counts["pass"],
            counts["violation"],
            counts["known-discrepancy"],
            total_ms,
        ),
        file=sys.stderr,
    )
    return 1 if counts["violation"] else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordkit",
        description="Exact order, topology, completion and representation checks on finite carriers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("complete", help="cut completion of a poset instance")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_complete)

    p = sub.add_parser("scott", help="increasing-set topology of an order instance")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_scott)

    p = sub.add_parser("lower", help="decreasing-set topology of an order instance")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_lower)

    p = sub.add_parser("precontinuous", help="precontinuity and completion continuity")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_precontinuous)

    p = sub.add_parser("represent", help="strict semicontinuous representing family")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_represent)

    p = sub.add_parser("check-closed", help="is the order closed in the product of the topologies")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_check_closed)

    p = sub.add_parser("normality", help="separate every admissible closed pair by disjoint opens")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_normality)

    p = sub.add_parser("urysohn", help="exact separating functions for every admissible pair")
    p.add_argument("file")
    p.add_argument("--depth", type=int, default=4)
    p.set_defaults(fn=_cmd_urysohn)

    p = sub.add_parser("interpolate", help="interpolate a function in a lattice-closed family")
    p.add_argument("family")
    p.add_argument("function")
    p.set_defaults(fn=_cmd_interpolate)

    p = sub.add_parser("gen", help="emit a deterministic pseudorandom instance")
    p.add_argument("--kind", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="one of: %s" % ", ".join(suite_names()))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--frink-empty", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.fn(args)
    except _UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
