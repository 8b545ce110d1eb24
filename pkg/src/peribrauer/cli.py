"""Command-line surface for batch computation, verification and rendering.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
The PERIBRAUER_WORKERS environment variable overrides --workers.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import arrows, grothendieck, multiplicities, procedures, skew
from .partitions import format_partition, parse_partition


def _parse_diagram(literal: str | None, pair: str | None) -> skew.SkewDiagram:
    if pair is not None:
        literal = pair
    if literal is None:
        raise ValueError("give a diagram literal or --pair OUTER/INNER")
    if "/" in literal:
        outer_s, _, inner_s = literal.partition("/")
        return skew.skew_from_pair(parse_partition(outer_s), parse_partition(inner_s))
    return skew.parse_skew(literal)


def _workers(args) -> int:
    env = os.environ.get("PERIBRAUER_WORKERS")
    if env is not None:
        try:
            return max(1, int(env))
        except ValueError:
            raise ValueError(f"PERIBRAUER_WORKERS must be an integer: {env!r}")
    return max(1, args.workers)


def cmd_gamma(args) -> int:
    k = _parse_diagram(args.diagram, args.pair)
    member = skew.is_gamma(k)
    print(f"diagram: {skew.format_skew(k)}")
    print("member" if member else "non-member")
    for h in skew.covering(k):
        ok_hw = h.wd == h.ht + 1
        m = h.min_box
        ok_d = all(i + j >= m.row + m.col for i, j in h.boxes)
        boxes = ",".join(f"({i},{j})" for i, j in sorted(h.boxes))
        print(
            f"hook {boxes}: ht={h.ht} wd={h.wd} "
            f"HW={'ok' if ok_hw else 'fail'} D={'ok' if ok_d else 'fail'}"
        )
    print(skew.render(k))
    return 0


def cmd_gen(args) -> int:
    span_cap = args.span_cap
    if args.flavor == "gamma":
        members = [
            k
            for k in skew.enumerate_skew_diagrams(args.max_size, span_cap)
            if skew.is_gamma(k)
        ]
    else:
        members = procedures.generate_upsilon(
            args.max_size, barred=(args.flavor == "upsilon-bar"), span_cap=span_cap
        )
    for k in sorted(members, key=lambda k: (k.size, k.rows)):
        print(skew.format_skew(k))
    return 0


def cmd_verify_equivalence(args) -> int:
    rep = procedures.equivalence_report(args.max_size, args.span_cap, _workers(args))
    print(
        f"checked {rep.diagrams_checked} diagrams (size <= {rep.max_size}, "
        f"span <= {rep.span_cap}): {rep.member_count} members, "
        f"{rep.connected_nonzero_members} connected nonzero, "
        f"{len(rep.disagreements)} disagreements"
    )
    for k, g, u, b in rep.disagreements:
        print(f"witness {skew.format_skew(k)}: covering={g} plain={u} barred={b}")
        return 1
    return 0


def cmd_arrows(args) -> int:
    print(arrows.render_arrow_diagram(parse_partition(args.partition)))
    return 0


def cmd_pi(args) -> int:
    p = parse_partition(args.partition)
    for member in sorted(arrows.pi_set(p), key=lambda q: (-sum(q), q)):
        print(format_partition(member))
    return 0


def _print_matrix(m, fmt: str) -> None:
    if fmt == "text":
        print(multiplicities.matrix_text(m))
    elif fmt == "csv":
        print(multiplicities.matrix_csv(m), end="")
    else:
        print(multiplicities.matrix_json(m))


def cmd_cell_matrix(args) -> int:
    _print_matrix(multiplicities.cell_matrix(args.r), args.format)
    return 0


def cmd_cartan_matrix(args) -> int:
    _print_matrix(multiplicities.cartan_matrix(args.r), args.format)
    return 0


def cmd_verify_tl(args) -> int:
    lo, _, hi = args.q_range.partition(":")
    rep = grothendieck.verify_tl(args.r_max, int(lo), int(hi))
    print(f"{rep.checks} relation instances checked, {len(rep.violations)} violations")
    for relation, r, lam, q, p, lhs, rhs in rep.violations:
        print(
            f"violation {relation} on [W_{r}({format_partition(lam)})] "
            f"q={q} p={p}: {lhs} != {rhs}"
        )
        return 1
    return 0


def cmd_verify_all(args) -> int:
    workers = _workers(args)
    results = {}
    t0 = time.time()

    rep = procedures.equivalence_report(args.max_size, workers=workers)
    results["equivalence"] = {
        "checked": rep.diagrams_checked,
        "disagreements": len(rep.disagreements),
        "ok": rep.ok,
    }
    witness = rep.disagreements[0] if rep.disagreements else None

    d2 = multiplicities.prop_diff2_check(args.max_size)
    results["rim_two_hooks"] = {
        "checked": d2.pairs_checked,
        "violations": len(d2.violations),
        "ok": d2.ok,
    }

    flips_ok = True
    flip_mismatch = None
    from .partitions import partitions_of, subpartitions

    pi_ok = True
    pi_mismatch = None
    for n in range(0, args.max_size + 1):
        for mu in partitions_of(n):
            w = arrows.weight_of_partition(mu)
            for pair in arrows.wb_pairs(w):
                fh = arrows.rim_hook_of_flip(mu, pair)
                hook = skew.covering(skew.skew_from_pair(mu, fh.partition))[0]
                if arrows.is_arrow_pair(w, pair) != skew.is_gamma0(hook):
                    flips_ok, flip_mismatch = False, (mu, pair)
            pis = arrows.pi_set(mu)
            for lam in subpartitions(mu):
                if (lam in pis) != skew.is_gamma(skew.skew_from_pair(mu, lam)):
                    pi_ok, pi_mismatch = False, (mu, lam)
    results["arrow_flips"] = {"ok": flips_ok}
    results["flip_sets"] = {"ok": pi_ok}

    tl = grothendieck.verify_tl(max(2, args.r_max), -args.max_size - 2, args.max_size + 2)
    results["tl_relations"] = {
        "checked": tl.checks,
        "violations": len(tl.violations),
        "ok": tl.ok,
    }

    cartan_ok = True
    cartan_err = None
    try:
        for r in range(2, args.r_max + 1):
            multiplicities.cartan_matrix(r)
    except multiplicities.ConsistencyError as exc:
        cartan_ok, cartan_err = False, str(exc)
    results["cartan"] = {"ok": cartan_ok}

    results["elapsed_seconds"] = round(time.time() - t0, 2)
    ok = all(v.get("ok", True) for v in results.values() if isinstance(v, dict))

    if args.format == "json":
        print(json.dumps({"ok": ok, "checks": results}))
    else:
        for name, data in results.items():
            if isinstance(data, dict):
                print(f"{name}: {'pass' if data.get('ok') else 'FAIL'} {data}")
        print(f"overall: {'pass' if ok else 'FAIL'}")
        if witness is not None:
            k = witness[0]
            print(f"first witness: {skew.format_skew(k)}")
        if flip_mismatch is not None:
            print(f"flip witness: {flip_mismatch}")
        if pi_mismatch is not None:
            print(f"flip-set witness: {pi_mismatch}")
        if cartan_err is not None:
            print(f"cartan: {cartan_err}")
    return 0 if ok else 1


def cmd_render(args) -> int:
    k = _parse_diagram(args.diagram, args.pair)
    print(skew.render(k, contents=args.contents))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="peribrauer",
        description="Skew-diagram combinatorics and decomposition matrices "
        "of periplectic Brauer algebras.",
    )
    parser.add_argument("--workers", type=int, default=1,
                        help="worker processes for verification commands")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gamma", help="membership verdict and covering diagnostics")
    p.add_argument("diagram", nargs="?", default=None,
                   help="row-interval literal or OUTER/INNER pair")
    p.add_argument("--pair", help="outer/inner partition pair, e.g. [2,2]/[1]")
    p.set_defaults(fn=cmd_gamma)

    p = sub.add_parser("gen", help="list all members up to a size bound")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--span-cap", type=int, default=None,
                   help="content span bound (default max-size + 1)")
    p.add_argument("--flavor", choices=["upsilon", "upsilon-bar", "gamma"],
                   default="gamma")
    p.set_defaults(fn=cmd_gen)

    p = sub.add_parser("verify-equivalence",
                       help="three-way membership comparison over all diagrams")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--span-cap", type=int, default=None)
    p.set_defaults(fn=cmd_verify_equivalence)

    p = sub.add_parser("arrows", help="arrow diagram of a partition")
    p.add_argument("partition")
    p.set_defaults(fn=cmd_arrows)

    p = sub.add_parser("pi", help="partitions reachable by flipping arrow pairs")
    p.add_argument("partition")
    p.set_defaults(fn=cmd_pi)

    for name, fn in (("cell-matrix", cmd_cell_matrix),
                     ("cartan-matrix", cmd_cartan_matrix)):
        p = sub.add_parser(name, help=f"print the {name.split('-')[0]} matrix")
        p.add_argument("--r", type=int, required=True)
        p.add_argument("--format", choices=["text", "csv", "json"], default="text")
        p.set_defaults(fn=fn)

    p = sub.add_parser("verify-tl", help="operator relation check")
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--q-range", default="-8:8", help="LO:HI content range")
    p.set_defaults(fn=cmd_verify_tl)

    p = sub.add_parser("verify-all", help="run every verification suite")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(fn=cmd_verify_all)

    p = sub.add_parser("render", help="ASCII picture of a diagram")
    p.add_argument("diagram", nargs="?", default=None)
    p.add_argument("--pair")
    p.add_argument("--contents", action="store_true",
                   help="label boxes with content mod 10")
    p.set_defaults(fn=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    # accept `--q-range -8:8` without the = form argparse would demand
    argv = list(argv)
    for i, tok in enumerate(argv[:-1]):
        if tok == "--q-range" and argv[i + 1].startswith("-"):
            argv[i:i + 2] = [f"--q-range={argv[i + 1]}"]
            break
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, multiplicities.ConsistencyError) as exc:
        if isinstance(exc, multiplicities.ConsistencyError):
            print(f"internal consistency failure: {exc}", file=sys.stderr)
            return 1
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
