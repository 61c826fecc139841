"""Command-line surface for the toolkit.

All numbers cross the boundary as decimal strings (arguments, JSON fields,
DOT labels).  Exit codes: 0 success, 2 usage or bad input, 3 iteration cap
exhausted, 4 domain rejection (for example a reverse step on n = 3 mod 6).
The COLLATZ_CAP environment variable overrides the default iteration cap.
"""

import argparse
import json
import os
import sys

from . import engine, fsn, generate, graph, loops, reverse, verify

DEFAULT_CAP = 100_000
CAP_ENV = "COLLATZ_CAP"


class UsageError(Exception):
    pass


def _env_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if raw is None or raw == "":
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise UsageError("%s must be a decimal integer, got %r" % (CAP_ENV, raw))
    if cap < 1:
        raise UsageError("%s must be >= 1, got %d" % (CAP_ENV, cap))
    return cap


def _cap(args) -> int:
    return args.cap if getattr(args, "cap", None) else _env_cap()


def _traced_base(n: int, cap: int) -> engine.ExponentTrace:
    tr, reason = engine.trace(n, 1, cap=cap)
    if reason.tag == engine.CAP_HIT:
        raise engine.IterationCapHit(cap)
    return tr


def _bool_line(value: bool) -> int:
    print("true" if value else "false")
    return 0


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_traj(args) -> int:
    tr, reason = engine.trace(args.n, args.target, cap=_cap(args))
    if args.json:
        doc = {
            "start": str(tr.start),
            "exponents": [str(a) for a in tr.exponents],
            "values": [str(v) for v in tr.values()],
            "terminal": str(tr.terminal),
            "stop": reason.tag,
        }
        print(json.dumps(doc))
    else:
        values = tr.values()
        parts = [str(values[0])]
        for a, v in zip(tr.exponents, values[1:]):
            parts.append("-%d-> %d" % (a, v))
        print(" ".join(parts))
    return 3 if reason.tag == engine.CAP_HIT else 0


def cmd_fsn(args) -> int:
    if args.eval is not None:
        if args.eval == "-":
            text = sys.stdin.read()
        else:
            with open(args.eval, "r", encoding="utf-8") as fh:
                text = fh.read()
        print(fsn.eval_form(fsn.from_json(text)))
        return 0
    if args.n is None:
        raise UsageError("give a number to encode, or --eval FORM.json")
    if args.depth is not None:
        form = fsn.encode_ifsn(args.n, args.depth, cap=_cap(args))
    else:
        form = fsn.encode_fsn(args.n, cap=_cap(args))
    print(fsn.to_json(form))
    return 0


def cmd_gen_length1(args) -> int:
    print(generate.gen_length1(args.k))
    return 0


def cmd_gen_length2(args) -> int:
    print(generate.gen_length2(args.a1, args.b))
    return 0


def cmd_gen_enumerate2(args) -> int:
    for n, a1, a2 in generate.enumerate_length2(args.count):
        print("%d %d %d" % (n, a1, a2))
    return 0


def cmd_gen_additive(args) -> int:
    print(generate.additive_next(_traced_base(args.base, _cap(args)), args.b))
    return 0


def cmd_gen_jump(args) -> int:
    print(generate.additive_jump(_traced_base(args.base, _cap(args)), args.k, args.b))
    return 0


def cmd_gen_monotonic(args) -> int:
    _, chain = generate.gen_monotonic(args.j, args.k)
    print(" ".join(str(v) for v in chain))
    return 0


def _format_exponents(exps) -> str:
    return "(%s)" % ",".join(str(a) for a in exps)


def cmd_loops_search(args) -> int:
    for cand in loops.search_loops(args.j, args.max_sum):
        print("n=%d exponents=%s" % (cand.value, _format_exponents(cand.exponents)))
    return 0


def cmd_loops_pairs(args) -> int:
    for a1, a2 in loops.length2_feasible_pairs():
        print("(%d,%d)" % (a1, a2))
    return 0


def cmd_loops_check(args) -> int:
    return _bool_line(loops.loop_form_check(args.n, args.j))


def cmd_loops_candidate(args) -> int:
    res = loops.loop_candidate(args.exponents)
    if isinstance(res, loops.LoopCandidate):
        print("n=%d exponents=%s" % (res.value, _format_exponents(res.exponents)))
    else:
        value = "undefined" if res.value is None else str(res.value)
        print("rejected kind=%s value=%s" % (res.kind.value, value))
    return 0


def cmd_loops_member(args) -> int:
    return _bool_line(loops.loop_member_equation(args.n, args.m, args.exponents))


def cmd_reverse_step(args) -> int:
    print(reverse.reverse_step(args.n, args.x))
    return 0


def cmd_reverse_resolve(args) -> int:
    tag = reverse.resolve(args.n)
    print("family=%s a=%d b=%d" % (tag.family, tag.a, tag.b))
    return 0


def cmd_reverse_level0(args) -> int:
    tag = reverse.level0_partition(args.n)
    print("family=%s a=%d b=%d" % (tag.family, tag.a, tag.b))
    return 0


def cmd_reverse_classify(args) -> int:
    print(reverse.mod6_classify(args.n))
    return 0


def cmd_reverse_rr1(args) -> int:
    print(reverse.rr1(args.a, args.b, args.c))
    return 0


def cmd_reverse_rr5(args) -> int:
    print(reverse.rr5(args.a, args.b, args.c))
    return 0


def cmd_reverse_xcheck(args) -> int:
    return _bool_line(reverse.x_recursion_check(args.a, args.k))


def cmd_reverse_lemmas(args) -> int:
    return _bool_line(reverse.mod6_power_lemmas(args.x_max))


def _emit_graph(g, args) -> int:
    payload = graph.export(g, "json" if args.json else "dot")
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload.decode("utf-8"))
    return 0


def cmd_graph_sweep(args) -> int:
    plan = graph.SweepPlan(graph.FORMULA_SWEEP, value_cap=args.value_cap)
    return _emit_graph(graph.build_sweep(plan), args)


def cmd_graph_bfs(args) -> int:
    plan = graph.SweepPlan(
        graph.REVERSE_BFS,
        value_cap=args.value_cap,
        depth_cap=args.depth_cap,
        exponent_cap=args.exponent_cap,
    )
    return _emit_graph(graph.build_reverse_bfs(plan), args)


def _print_report(report) -> None:
    status = "PASS" if report.passed else "FAIL"
    print(
        "[%s] %s: %s, %d passed, %d failures (%.2fs)"
        % (
            status,
            report.check_name,
            report.range_desc,
            report.pass_count,
            len(report.failures),
            report.elapsed,
        )
    )
    for f in report.failures[:10]:
        print("    counterexample: %s" % f)


def cmd_verify(args) -> int:
    if args.suite == "all":
        reports = verify.run_all(workers=args.workers)
    else:
        reports = [verify.run_check(args.suite, args.max, args.workers)]
    for report in reports:
        _print_report(report)
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _add_cap(p) -> None:
    p.add_argument("--cap", type=int, help="iteration cap (default: COLLATZ_CAP or %d)" % DEFAULT_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="collatzkit",
        description="Reduced Collatz trajectories, encodings, generators, "
        "loop search, reverse iteration and graph construction.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("traj", help="print a reduced trajectory")
    p.add_argument("n", type=int)
    p.add_argument("--target", type=int, help="stop at this odd value instead of 1")
    p.add_argument("--json", action="store_true")
    _add_cap(p)
    p.set_defaults(func=cmd_traj)

    p = sub.add_parser("fsn", help="fractional-sum form of a number, or evaluate one")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--depth", type=int, help="encode only the first DEPTH steps")
    p.add_argument("--eval", metavar="FORM.json", help="evaluate a form file ('-' for stdin)")
    _add_cap(p)
    p.set_defaults(func=cmd_fsn)

    p = sub.add_parser("gen", help="closed-form generators")
    gsub = p.add_subparsers(dest="generator", required=True)
    q = gsub.add_parser("length1", help="(2^(2k+2)-1)/3")
    q.add_argument("k", type=int)
    q.set_defaults(func=cmd_gen_length1)
    q = gsub.add_parser("length2", help="two-step number from (a1, b)")
    q.add_argument("a1", type=int)
    q.add_argument("b", type=int)
    q.set_defaults(func=cmd_gen_length2)
    q = gsub.add_parser("enumerate2", help="smallest two-step numbers with exponents")
    q.add_argument("count", type=int)
    q.set_defaults(func=cmd_gen_enumerate2)
    q = gsub.add_parser("additive", help="one-step extension of a base orbit")
    q.add_argument("--base", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    _add_cap(q)
    q.set_defaults(func=cmd_gen_additive)
    q = gsub.add_parser("jump", help="k-step extension of a base orbit")
    q.add_argument("--base", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--b", type=int, required=True)
    _add_cap(q)
    q.set_defaults(func=cmd_gen_jump)
    q = gsub.add_parser("monotonic", help="monotone chain 2^j*k - 1")
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--k", type=int, required=True)
    q.set_defaults(func=cmd_gen_monotonic)

    p = sub.add_parser("loops", help="loop-candidate analysis")
    lsub = p.add_subparsers(dest="loop_op", required=True)
    q = lsub.add_parser("search", help="integer candidates under an exponent-sum bound")
    q.add_argument("--j", type=int, required=True)
    q.add_argument("--max-sum", type=int, required=True)
    q.set_defaults(func=cmd_loops_search)
    q = lsub.add_parser("pairs", help="feasible length-2 exponent pairs")
    q.set_defaults(func=cmd_loops_pairs)
    q = lsub.add_parser("check", help="loop form test: 2*3^j divides n-1")
    q.add_argument("n", type=int)
    q.add_argument("j", type=int)
    q.set_defaults(func=cmd_loops_check)
    q = lsub.add_parser("candidate", help="solve the loop equation for a tuple")
    q.add_argument("exponents", type=int, nargs="+")
    q.set_defaults(func=cmd_loops_candidate)
    q = lsub.add_parser("member", help="loop membership equation for (n, m, exponents)")
    q.add_argument("n", type=int)
    q.add_argument("m", type=int)
    q.add_argument("exponents", type=int, nargs="+")
    q.set_defaults(func=cmd_loops_member)

    p = sub.add_parser("reverse", help="reverse iteration")
    rsub = p.add_subparsers(dest="reverse_op", required=True)
    q = rsub.add_parser("step", help="(2^x*n - 1)/3 with validity checks")
    q.add_argument("n", type=int)
    q.add_argument("x", type=int)
    q.set_defaults(func=cmd_reverse_step)
    q = rsub.add_parser("resolve", help="unique (family, a, b) producing n")
    q.add_argument("n", type=int)
    q.set_defaults(func=cmd_reverse_resolve)
    q = rsub.add_parser("level0", help="level-0 family covering n")
    q.add_argument("n", type=int)
    q.set_defaults(func=cmd_reverse_level0)
    q = rsub.add_parser("classify", help="n mod 6")
    q.add_argument("n", type=int)
    q.set_defaults(func=cmd_reverse_classify)
    q = rsub.add_parser("rr1", help="residue-steered preimage of 6a+1")
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.add_argument("c", type=int)
    q.set_defaults(func=cmd_reverse_rr1)
    q = rsub.add_parser("rr5", help="residue-steered preimage of 6a+5")
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q.add_argument("c", type=int)
    q.set_defaults(func=cmd_reverse_rr5)
    q = rsub.add_parser("xcheck", help="level recursion identities at (a, k)")
    q.add_argument("a", type=int)
    q.add_argument("k", type=int)
    q.set_defaults(func=cmd_reverse_xcheck)
    q = rsub.add_parser("lemmas", help="power congruences mod 6 up to x_max")
    q.add_argument("x_max", type=int)
    q.set_defaults(func=cmd_reverse_lemmas)

    p = sub.add_parser("graph", help="graph construction and export")
    gr = p.add_subparsers(dest="graph_op", required=True)
    q = gr.add_parser("sweep", help="formula sweep under a value cap")
    q.add_argument("--value-cap", type=int, required=True)
    fmt = q.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", default=True)
    fmt.add_argument("--json", action="store_true")
    q.add_argument("--out", help="write to a file instead of stdout")
    q.set_defaults(func=cmd_graph_sweep)
    q = gr.add_parser("bfs", help="reverse BFS from 1")
    q.add_argument("--value-cap", type=int, required=True)
    q.add_argument("--depth-cap", type=int, default=64)
    q.add_argument("--exponent-cap", type=int, default=20)
    fmt = q.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", default=True)
    fmt.add_argument("--json", action="store_true")
    q.add_argument("--out", help="write to a file instead of stdout")
    q.set_defaults(func=cmd_graph_bfs)

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument("suite", choices=["all"] + verify.check_names())
    p.add_argument("--max", type=int, help="override the suite's default range")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except engine.IterationCapHit as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except (reverse.ReverseDomainError, fsn.NonIntegerForm, fsn.NotOddPositive) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4
    except (UsageError, ValueError, KeyError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
