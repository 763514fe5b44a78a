"""Command-line interface.

Exit codes: 0 when the checked claim holds, 1 when it fails mathematically
(a tuple does not verify, an audit finds a violation, ...), 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import Sequence

from quintuple import bounds, lemmas, pell, tuples
from quintuple.errors import ConfigurationError, DomainError, InputError

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2


def _triple(text: str) -> tuple[int, int, int]:
    parts = text.replace(" ", "").split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected a,b,c but got {text!r}")
    try:
        return tuple(int(p) for p in parts)  # type: ignore[return-value]
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-integer in triple {text!r}") from None


def _sign(text: str) -> int:
    if text in ("1", "+1", "-1"):
        return int(text)
    raise argparse.ArgumentTypeError(f"sign must be +1 or -1, got {text!r}")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {text}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")

    p = argparse.ArgumentParser(prog="quintuple", description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=None, help="seed for randomized checks")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="check a Diophantine tuple")
    s.add_argument("elements", nargs="+", type=int)

    s = sub.add_parser("extend", parents=[common], help="regular extension d+ of a triple")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.add_argument("c", type=int)

    s = sub.add_parser("pell", parents=[common], help="terms of a Pellian solution sequence")
    s.add_argument("--triple", type=_triple, required=True)
    s.add_argument("--kind", choices=["v", "w", "V", "W"], required=True)
    s.add_argument("--sign", type=_sign, required=True)
    s.add_argument("--terms", type=_positive_int, default=4)

    s = sub.add_parser("intersect", parents=[common], help="common terms v_j = w_k")
    s.add_argument("--triple", type=_triple, required=True)
    s.add_argument("--max-index", type=int, default=10)

    s = sub.add_parser("search", parents=[common], help="enumerate tuples up to a limit")
    s.add_argument("--limit", type=int, required=True)
    s.add_argument("--size", type=int, required=True)
    s.add_argument("--jobs", type=_positive_int, default=1)
    s.add_argument("--spot-check", type=int, default=0, metavar="N",
                   help="random samples hunting for tuples the enumeration missed")

    s = sub.add_parser("audit", parents=[common], help="audit lemma checks over all triples")
    s.add_argument("--c-max", type=int, required=True)
    s.add_argument("--max-index", type=int, default=20)

    s = sub.add_parser("bound", parents=[common], help="solve the crossover of the combined inequality")
    s.add_argument("--tolerance", type=float, default=0.01)
    return p


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def cmd_verify(args) -> int:
    rep = tuples.verify_tuple(args.elements)
    if rep.ok:
        text = f"{rep.tuple} is a Diophantine {len(rep.tuple)}-tuple"
    else:
        bad = ", ".join(f"({x},{y}): {x * y + 1} not a square" for x, y in rep.failing_pairs)
        text = f"{rep.tuple} is NOT a Diophantine tuple; failing pairs {bad}"
    _emit(args, text, rep.to_dict())
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_extend(args) -> int:
    a, b, c = args.a, args.b, args.c
    d = tuples.regular_extension(a, b, c)
    rep = tuples.verify_tuple(sorted({a, b, c, d}))
    gap = d > 4 * a * b * c
    ok = rep.ok and gap
    text = "\n".join([
        str(d),
        f"{rep.tuple}: {'verified' if rep.ok else 'NOT verified'}",
        f"d+ > 4abc: {gap}",
    ])
    _emit(args, text, {"triple": [a, b, c], "d_plus": d, "quadruple": rep.to_dict(), "d_plus_gt_4abc": gap})
    return EXIT_OK if ok else EXIT_FALSE


def cmd_pell(args) -> int:
    pt = pell.make_pell_triple(*args.triple)
    seq = pell.generate_sequence(pt, args.kind, args.sign, args.terms)
    _emit(args, str(seq.terms), {"triple": list(args.triple), "kind": seq.kind,
                                 "sign": args.sign, "terms": seq.terms})
    return EXIT_OK


def cmd_intersect(args) -> int:
    pt = pell.make_pell_triple(*args.triple)
    res = pell.find_intersections(pt, args.max_index)
    bad_quads = [w for w in res if w.is_new_element
                 and not tuples.verify_tuple(sorted((pt.A, pt.B, pt.C, w.D))).ok]
    if args.json:
        print(pell.witnesses_to_json(res))
    else:
        print(f"triple {pt.as_tuple()} R={pt.R} S={pt.S} T={pt.T}, indices <= {args.max_index}: "
              f"{len(res)} witness(es)")
        for w in res:
            print(f"  j={w.j} k={w.k} m={w.m} n={w.n} lambda={w.lam:+d} z={w.z} D={w.D}")
        for w in res.anomalies:
            print(f"  ANOMALY: odd index in j={w.j} k={w.k}")
    return EXIT_FALSE if res.anomalies or bad_quads else EXIT_OK


def cmd_search(args) -> int:
    found = tuples.enumerate_tuples(args.limit, args.size, jobs=args.jobs)
    missing = []
    if args.spot_check:
        rng = random.Random(args.seed)
        missing = tuples.spot_check_enumeration(args.limit, args.size, found, args.spot_check, rng)
    if args.json:
        print(json.dumps({"limit": args.limit, "size": args.size, "count": len(found),
                          "tuples": [list(t.elements) for t in found],
                          "missing": [list(t.elements) for t in missing]}))
    else:
        print(f"count: {len(found)}")
        sys.stdout.write(tuples.format_lines(found))
        for t in missing:
            print(f"MISSING: {t}")
    return EXIT_FALSE if missing else EXIT_OK


def cmd_audit(args) -> int:
    rep = lemmas.audit_triples(args.c_max, args.max_index)
    if args.json:
        print(rep.to_json())
    else:
        s = rep.summary()
        print(f"triples: {s['triples']}  witnesses: {s['witnesses']}  "
              f"gap-lemma applicable: {s['gap_applicable']}  violations: {s['violations']}")
        for e, v in rep.violations:
            print(f"  VIOLATION ({e.A},{e.B},{e.C}) j={e.j} k={e.k}: {v}")
        print("PASS" if rep.ok else "FAIL")
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_bound(args) -> int:
    rep = bounds.solve_crossover(args.tolerance)
    checks = bounds.check_constant_consistency()
    ok = rep.confirms_theorem and all(c.holds for c in checks)
    if args.json:
        print(rep.to_json())
    else:
        print(f"crossover C* ~ {rep.c_star:.6e} in [{rep.bracket_lo:.6e}, {rep.bracket_hi:.6e}] "
              f"after {rep.iterations} bisection steps")
        print(f"combined inequality at C = 1e76: {'holds' if rep.verdict_at_10_76 else 'fails'}")
        for c in checks:
            print(f"  {c.claim}: {'ok' if c.holds else 'FAILS'} (margin {c.margin:.3g})")
        print(f"d < 10^76: {'confirmed' if ok else 'NOT confirmed'}")
        print(rep.to_json())
    return EXIT_OK if ok else EXIT_FALSE


COMMANDS = {
    "verify": cmd_verify,
    "extend": cmd_extend,
    "pell": cmd_pell,
    "intersect": cmd_intersect,
    "search": cmd_search,
    "audit": cmd_audit,
    "bound": cmd_bound,
}


def main(argv: Sequence[str] | None = None) -> int:
    try:
        sys.stdout.reconfigure(line_buffering=True, encoding="utf-8")
    except (AttributeError, ValueError):
        pass
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return COMMANDS[args.command](args)
    except (InputError, ConfigurationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as e:
        print(f"false: {e}", file=sys.stderr)
        return EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
