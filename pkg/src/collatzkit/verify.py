"""Named verification sweeps over the library's numeric claims.

Every check returns a VerifyReport with the pass count and the sorted list
of counterexamples (empty iff the check passed).  Range sweeps can shard
their interval across a process pool; the report content is independent of
the worker count, only the elapsed time changes.
"""

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter

from . import engine, fsn, generate, graph, loops, reverse

SWEEP_CAP = 10_000  # per-orbit iteration budget used by the range sweeps

# The 22 smallest odd numbers with two-step descents, with their exponent
# pairs, each row re-verified here by replaying the engine.
FIRST_22_LENGTH2 = (
    (3, 1, 4), (13, 3, 4), (53, 5, 4), (113, 2, 8), (213, 7, 4),
    (227, 1, 10), (453, 4, 8), (853, 9, 4), (909, 3, 10), (1813, 6, 8),
    (3413, 11, 4), (3637, 5, 10), (7253, 8, 8), (7281, 2, 14),
    (13653, 13, 4), (14549, 7, 10), (14563, 1, 16), (29013, 10, 8),
    (29125, 4, 14), (54613, 15, 4), (58197, 9, 10), (58253, 3, 16),
)


@dataclass
class VerifyReport:
    check_name: str
    range_desc: str
    pass_count: int
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures


# ---------------------------------------------------------------------------
# sharded range sweeps (chunk workers are module-level for pickling)
# ---------------------------------------------------------------------------

def _split_range(lo: int, hi: int, parts: int) -> list:
    width = max(1, (hi - lo + parts - 1) // parts)
    spans = []
    cur = lo
    while cur < hi:
        spans.append((cur, min(cur + width, hi)))
        cur += width
    return spans


def _run_spans(chunk_fn, lo: int, hi: int, workers: int):
    parts = workers * 4 if workers > 1 else 1
    spans = _split_range(lo, hi, parts)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(chunk_fn, spans))
    else:
        results = [chunk_fn(span) for span in spans]
    passed = sum(p for p, _ in results)
    failures = sorted(f for _, fs in results for f in fs)
    return passed, failures


def _odd_range(span):
    lo, hi = span
    return range(lo | 1, hi, 2)


def _chunk_convergence(span):
    passed, failures = 0, []
    for n in _odd_range(span):
        try:
            engine.sequence_length(n, cap=SWEEP_CAP)
            passed += 1
        except engine.IterationCapHit:
            failures.append("n=%d" % n)
    return passed, failures


def _chunk_trace_replay(span):
    passed, failures = 0, []
    for n in _odd_range(span):
        tr, reason = engine.trace(n, cap=SWEEP_CAP)
        ok = reason.tag == engine.REACHED_ONE and tr.terminal == 1
        cur = n
        for a in tr.exponents:
            nxt, e = engine.reduced_step(cur)
            if e != a:
                ok = False
                break
            cur = nxt
        if ok and cur == tr.terminal and tr.replay() == tr.terminal:
            passed += 1
        else:
            failures.append("n=%d" % n)
    return passed, failures


def _chunk_cross(span):
    lo, hi = span
    passed, failures = 0, []
    for n in range(max(lo, 1), hi):
        if engine.cross_check(n, cap=SWEEP_CAP):
            passed += 1
        else:
            failures.append("n=%d" % n)
    return passed, failures


def _chunk_fsn_roundtrip(span):
    passed, failures = 0, []
    for n in _odd_range(span):
        form = fsn.encode_fsn(n, cap=SWEEP_CAP)
        if fsn.eval_form(form) == n:
            passed += 1
        else:
            failures.append("n=%d" % n)
    return passed, failures


def _chunk_ifsn(span):
    passed, failures = 0, []
    for n in _odd_range(span):
        if n < 3:
            continue
        length = engine.sequence_length(n, cap=SWEEP_CAP)
        ok = True
        cur = n
        for j in range(1, length):
            cur, _ = engine.reduced_step(cur)
            form = fsn.encode_ifsn(n, j, cap=SWEEP_CAP)
            if form.terminal != cur or fsn.eval_form(form) != n:
                ok = False
                break
        if ok:
            passed += 1
        else:
            failures.append("n=%d j=%d" % (n, j))
    return passed, failures


def _chunk_partition(span):
    passed, failures = 0, []
    fam = {reverse.R1: reverse.r1, reverse.R5: reverse.r5, reverse.X: reverse.x_fn}
    for n in _odd_range(span):
        tag = reverse.level0_partition(n)
        if tag.b != 0 or fam[tag.family](tag.a, 0) != n:
            failures.append("level0 n=%d" % n)
            continue
        try:
            reverse.resolve(n)  # asserts reconstruction internally
            passed += 1
        except AssertionError:
            failures.append("resolve n=%d" % n)
    return passed, failures


def _chunk_parity(span):
    passed, failures = 0, []
    for n in _odd_range(span):
        cls = n % 6
        ok = True
        if cls == 3:
            for x in (1, 2, 3, 4):
                try:
                    reverse.reverse_step(n, x)
                    ok = False
                except reverse.ClassThree:
                    pass
        else:
            bad = (1, 3, 5, 7, 9) if cls == 1 else (2, 4, 6, 8)
            for x in bad:
                try:
                    reverse.reverse_step(n, x)
                    ok = False
                except reverse.ParityMismatch:
                    pass
        if ok:
            passed += 1
        else:
            failures.append("n=%d" % n)
    return passed, failures


# ---------------------------------------------------------------------------
# individual checks: fn(max_value, workers) -> (pass_count, failures)
# ---------------------------------------------------------------------------

def _check_convergence(mx, workers):
    return _run_spans(_chunk_convergence, 1, mx + 1, workers)


def _check_trace_replay(mx, workers):
    return _run_spans(_chunk_trace_replay, 1, mx + 1, workers)


def _check_cross(mx, workers):
    return _run_spans(_chunk_cross, 1, mx + 1, workers)


def _check_fsn_roundtrip(mx, workers):
    return _run_spans(_chunk_fsn_roundtrip, 1, mx + 1, workers)


def _check_ifsn(mx, workers):
    return _run_spans(_chunk_ifsn, 1, mx + 1, workers)


def _check_partition(mx, workers):
    return _run_spans(_chunk_partition, 1, mx + 1, workers)


def _check_parity(mx, workers):
    return _run_spans(_chunk_parity, 1, mx + 1, workers)


def _check_table1(mx, workers):
    rows = generate.enumerate_length2(len(FIRST_22_LENGTH2))
    passed, failures = 0, []
    for got, want in zip(rows, FIRST_22_LENGTH2):
        n, a1, a2 = got
        tr, _ = engine.trace(n, cap=SWEEP_CAP)
        if got == want and tr.exponents == (a1, a2):
            passed += 1
        else:
            failures.append("row %r != %r" % (got, want))
    return passed, failures


def _check_worked_examples(mx, workers):
    passed, failures = 0, []
    tr7, _ = engine.trace(7, cap=SWEEP_CAP)
    if tr7.exponents == (1, 1, 2, 3, 4):
        passed += 1
    else:
        failures.append("trace(7) gave %r" % (tr7.exponents,))
    base, _ = engine.trace(5, cap=SWEEP_CAP)
    m = generate.additive_next(base, 1)
    trm, _ = engine.trace(m, cap=SWEEP_CAP)
    if m == 453 and trm.exponents == (4, 8):
        passed += 1
    else:
        failures.append("one-step extension of 5 gave %d %r" % (m, trm.exponents))
    m2 = generate.additive_jump(base, 2, 1)
    trm2, _ = engine.trace(m2, cap=SWEEP_CAP)
    form = fsn.encode_fsn(m2, cap=SWEEP_CAP)
    if (
        m2 == 2485509
        and trm2.exponents == (4, 2, 20)
        and form.prefix_sums == (0, 4, 6, 26)
    ):
        passed += 1
    else:
        failures.append("two-step extension of 5 gave %d %r" % (m2, trm2.exponents))
    return passed, failures


def _check_length1(mx, workers):
    passed, failures = 0, []
    for k in range(0, mx + 1):
        n = generate.gen_length1(k)
        if k == 0:
            ok = n == 1 and engine.sequence_length(n, cap=SWEEP_CAP) == 0
        else:
            tr, _ = engine.trace(n, cap=SWEEP_CAP)
            ok = tr.exponents == (2 * k + 2,)
        # odd powers never hit the divisibility: 2^(2k+1) - 1 = 1 mod 3
        ok = ok and (pow(2, 2 * k + 1, 3) - 1) % 3 == 1
        if ok:
            passed += 1
        else:
            failures.append("k=%d" % k)
    return passed, failures


def _check_length2(mx, workers):
    passed, failures = 0, []
    for a1 in range(1, 13):
        for b in range(1, 9):
            n = generate.gen_length2(a1, b)
            tr, _ = engine.trace(n, cap=SWEEP_CAP)
            a2 = 6 * b + (2 if a1 % 2 == 0 else -2)
            if n % 2 == 1 and tr.exponents == (a1, a2):
                passed += 1
            else:
                failures.append("a1=%d b=%d" % (a1, b))
    return passed, failures


def _base_pools():
    """First few odd numbers of each descent length 1..4."""
    pools = {1: [], 2: [], 3: [], 4: []}
    pools[1] = [generate.gen_length1(k) for k in range(1, 13)]
    pools[2] = [row[0] for row in generate.enumerate_length2(20)]
    n = 3
    while (len(pools[3]) < 20 or len(pools[4]) < 20) and n < 10 ** 6:
        j = engine.sequence_length(n, cap=SWEEP_CAP)
        if j in (3, 4) and len(pools[j]) < 20:
            pools[j].append(n)
        n += 2
    return pools


def _check_additive(mx, workers):
    pools = _base_pools()
    rng = random.Random(0x5EED)
    passed, failures = 0, []
    for _ in range(100):
        j = rng.randint(1, 4)
        base_n = rng.choice(pools[j])
        b = rng.randint(1, 3)
        base, _ = engine.trace(base_n, cap=SWEEP_CAP)
        m = generate.additive_next(base, b)
        tr, _ = engine.trace(m, cap=SWEEP_CAP)
        if tr.length == j + 1 and tr.exponents[:j] == base.exponents:
            passed += 1
        else:
            failures.append("base=%d b=%d" % (base_n, b))
    return passed, failures


def _check_jump_interior(mx, workers):
    pools = _base_pools()
    passed, failures = 0, []
    for base_n in pools[1][:4] + pools[2][:4]:
        base, _ = engine.trace(base_n, cap=SWEEP_CAP)
        j = base.length
        for k in range(1, 5):
            for b in range(1, 3):
                m = generate.additive_jump(base, k, b)
                tr, _ = engine.trace(m, cap=SWEEP_CAP)
                want_last = 2 * b * 3 ** (j + k - 1) + 2
                want = base.exponents + (2,) * (k - 1) + (want_last,)
                if tr.exponents == want:
                    passed += 1
                else:
                    failures.append("base=%d k=%d b=%d" % (base_n, k, b))
    return passed, failures


def _check_monotonic(mx, workers):
    passed, failures = 0, []
    for j in range(1, mx + 1):
        for k in range(1, 51):
            n, chain = generate.gen_monotonic(j, k)
            ok = n == chain[0] and all(x < y for x, y in zip(chain, chain[1:]))
            cur = n
            for want in chain[1:]:
                nxt, a = engine.reduced_step(cur)
                if a != 1 or nxt != want:
                    ok = False
                    break
                cur = nxt
            if ok:
                passed += 1
            else:
                failures.append("j=%d k=%d" % (j, k))
    return passed, failures


def _check_loops(mx, workers):
    passed, failures = 0, []
    if loops.length2_feasible_pairs() == [(2, 2), (3, 1)]:
        passed += 1
    else:
        failures.append("feasible pairs changed")
    res = loops.loop_candidate((3, 1))
    if (
        isinstance(res, loops.Rejection)
        and res.kind is loops.RejectionKind.NON_INTEGER
        and res.value == Fraction(11, 7)
    ):
        passed += 1
    else:
        failures.append("(3,1) not rejected as 11/7")
    for j, cap in ((1, 10), (2, 10), (3, 16)):
        cands = loops.search_loops(j, cap)
        ok = len(cands) == 1 and cands[0].value == 1
        ok = ok and cands[0].exponents == (2,) * j
        ok = ok and all(c.value % 6 == 1 for c in cands)
        ok = ok and all(loops.loop_form_check(c.value, j) for c in cands)
        if ok:
            passed += 1
        else:
            failures.append("search j=%d found %r" % (j, cands))
    return passed, failures


def _check_x_recursion(mx, workers):
    passed, failures = 0, []
    for a in range(0, mx + 1):
        for k in range(0, 13):
            if reverse.x_recursion_check(a, k):
                passed += 1
            else:
                failures.append("a=%d k=%d" % (a, k))
    return passed, failures


def _check_rr_steering(mx, workers):
    passed, failures = 0, []
    for a in range(0, mx + 1):
        for b in range(0, 21):
            for c in (1, 3, 5):
                v1 = reverse.rr1(a, b, c)
                ok = v1 % 6 == c and engine.reduced_step(v1) == (
                    6 * a + 1,
                    reverse.rr1_exponent(a, b, c),
                )
                v5 = reverse.rr5(a, b, c)
                ok = ok and v5 % 6 == c and engine.reduced_step(v5) == (
                    6 * a + 5,
                    reverse.rr5_exponent(a, b, c),
                )
                if ok:
                    passed += 1
                else:
                    failures.append("a=%d b=%d c=%d" % (a, b, c))
    return passed, failures


def _check_rr_filter(mx, workers):
    # the steered image over b <= B is exactly the residue-c slice of the
    # plain family over b' <= 3B+2
    B = 5
    passed, failures = 0, []
    for a in range(0, 51):
        for c in (1, 3, 5):
            plain1 = {reverse.r1(a, bp) for bp in range(0, 3 * B + 3)}
            if {reverse.rr1(a, b, c) for b in range(0, B + 1)} != {
                v for v in plain1 if v % 6 == c
            }:
                failures.append("rr1 a=%d c=%d" % (a, c))
                continue
            plain5 = {reverse.r5(a, bp) for bp in range(0, 3 * B + 3)}
            if {reverse.rr5(a, b, c) for b in range(0, B + 1)} != {
                v for v in plain5 if v % 6 == c
            }:
                failures.append("rr5 a=%d c=%d" % (a, c))
                continue
            passed += 1
    return passed, failures


def _check_mod6_lemmas(mx, workers):
    passed, failures = 0, []
    if reverse.mod6_power_lemmas(mx):
        passed += 1
    else:
        failures.append("modular route failed below x=%d" % mx)
    # independent route: exact big-integer arithmetic
    for x in range(0, mx + 1):
        ok = (
            (2 ** (2 * x + 1)) % 6 == 2
            and (2 ** (2 * x + 2)) % 6 == 4
            and ((2 ** (6 * x + 2) - 1) // 3) % 6 == 1
            and ((2 ** (6 * x + 4) - 1) // 3) % 6 == 5
            and ((2 ** (6 * x + 6) - 1) // 3) % 6 == 3
        )
        if ok:
            passed += 1
        else:
            failures.append("exact route failed at x=%d" % x)
    return passed, failures


def _check_graph(mx, workers):
    passed, failures = 0, []
    plan = graph.SweepPlan(graph.FORMULA_SWEEP, value_cap=mx)
    try:
        g = graph.build_sweep(plan)  # DuplicateSource would abort the build
        passed += 1
    except graph.DuplicateSource as exc:
        return 0, ["duplicate source: %s" % exc]
    for v in g.vertices:
        succ, a = engine.reduced_step(v)
        out = g.out_edge(v)
        if succ <= mx:
            ok = out == (succ, a)
        else:
            ok = out is None
        if ok:
            passed += 1
        else:
            failures.append("out-edge mismatch at %d" % v)
    ok, witness = graph.is_one_tree(g)
    if ok:
        passed += 1
    else:
        failures.append("tree check: %r" % (witness,))
    bfs = graph.build_reverse_bfs(
        graph.SweepPlan(
            graph.REVERSE_BFS,
            value_cap=mx,
            depth_cap=SWEEP_CAP,
            exponent_cap=max(4, (3 * mx + 1).bit_length()),
        )
    )
    for v in g.vertices & bfs.vertices:
        if v == 1 or g.out_edge(v) == bfs.out_edge(v):
            passed += 1
        else:
            failures.append("sweep/bfs disagree at %d" % v)
    fig = graph.replay_pairs([(reverse.R1, 0, 0), (reverse.R1, 0, 1)])
    if fig.vertices == {1, 5} and fig.edges() == {(1, 1, 2), (5, 1, 4)}:
        passed += 1
    else:
        failures.append("two-step replay mismatch")
    return passed, failures


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

_REGISTRY = {
    "table1": (_check_table1, None, "first 22 two-step rows"),
    "worked-examples": (_check_worked_examples, None, "golden worked examples"),
    "convergence": (_check_convergence, 10 ** 6, "odd n <= {max}"),
    "trace-replay": (_check_trace_replay, 10 ** 4, "odd n <= {max}"),
    "cross-check": (_check_cross, 10 ** 5, "n <= {max}"),
    "fsn-roundtrip": (_check_fsn_roundtrip, 10 ** 5, "odd n <= {max}"),
    "ifsn-coherence": (_check_ifsn, 10 ** 4, "odd n <= {max}, all depths"),
    "length1": (_check_length1, 200, "k <= {max}"),
    "length2": (_check_length2, None, "a1 <= 12, b <= 8"),
    "additive": (_check_additive, None, "100 seeded bases, lengths 1-4"),
    "jump-interior": (_check_jump_interior, None, "8 bases, k <= 4, b <= 2"),
    "monotonic": (_check_monotonic, 16, "j <= {max}, k <= 50"),
    "loops": (_check_loops, None, "j <= 3 searches and eliminations"),
    "partition": (_check_partition, 10 ** 6, "odd n <= {max}"),
    "x-recursion": (_check_x_recursion, 500, "a <= {max}, k <= 12"),
    "rr-steering": (_check_rr_steering, 300, "a <= {max}, b <= 20, c in 1/3/5"),
    "rr-filter": (_check_rr_filter, None, "a <= 50, B = 5"),
    "mod6-lemmas": (_check_mod6_lemmas, 1000, "x <= {max}"),
    "reverse-parity": (_check_parity, 10 ** 5, "odd n <= {max}"),
    "graph": (_check_graph, 10 ** 4, "value_cap {max}"),
}


def check_names() -> list:
    return list(_REGISTRY)


def run_check(name: str, max_value=None, workers: int = 1) -> VerifyReport:
    """Run one named check; max_value falls back to the check's default."""
    if name not in _REGISTRY:
        raise KeyError("unknown check %r" % (name,))
    fn, default_max, desc = _REGISTRY[name]
    mx = default_max if max_value is None else max_value
    start = perf_counter()
    passed, failures = fn(mx, workers)
    elapsed = perf_counter() - start
    return VerifyReport(
        check_name=name,
        range_desc=desc.format(max=mx) if mx is not None else desc,
        pass_count=passed,
        failures=failures,
        elapsed=elapsed,
    )


def run_all(workers: int = 1) -> list:
    """Run every registered check at its default range."""
    return [run_check(name, workers=workers) for name in _REGISTRY]
