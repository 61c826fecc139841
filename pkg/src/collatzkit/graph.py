"""Collatz graph construction by reverse sweeps.

Vertices are positive odd integers; the edge out of s is (s, d, a) where one
reduced step sends s to d with exponent a.  Out-degree is therefore at most
one everywhere and (1, 1, 2) is the only self-loop.  Finite truncations are
built two ways: a formula sweep enumerating the preimage families r1/r5 over
a diagonal (a, b) grid with both edge endpoints under a value cap, and a
reverse BFS growing out of 1.  Every insertion follows the same membership
procedure: add whichever endpoints are missing, then connect s to d.  A
finite window can expose a frontier (vertices whose successor lies outside
the window) but can never refute treeness, so the tree check reports
frontiers separately from genuine failures; the caps used are recorded on
the graph and flagged in exports.
"""

import json
from dataclasses import dataclass
from typing import Optional

from . import engine, reverse
from .arith import ensure_odd_positive

FORMULA_SWEEP = "formula-sweep"
REVERSE_BFS = "reverse-bfs"


class InvalidEdge(Exception):
    """The proposed edge is not a reduced step."""


class DuplicateSource(Exception):
    """The source vertex already carries its out-edge."""


@dataclass(frozen=True)
class SweepPlan:
    """Finite truncation policy for a graph build.

    value_cap bounds both endpoints of every edge; depth_cap and
    exponent_cap only matter for the reverse BFS (depth_cap may be 0 to
    build the bare root).
    """

    mode: str
    value_cap: int
    depth_cap: int = 64
    exponent_cap: int = 20

    def __post_init__(self):
        if self.mode not in (FORMULA_SWEEP, REVERSE_BFS):
            raise ValueError("unknown sweep mode %r" % (self.mode,))
        if self.value_cap < 1:
            raise ValueError("value_cap must be >= 1")
        if self.depth_cap < 0:
            raise ValueError("depth_cap must be >= 0")
        if self.exponent_cap < 1:
            raise ValueError("exponent_cap must be >= 1")


@dataclass(frozen=True)
class Witness:
    kind: str  # "cycle" or "orphan"
    vertices: tuple


class CollatzGraph:
    """Vertex and edge store with validated insertion."""

    def __init__(self, plan: Optional[SweepPlan] = None):
        self.vertices = set()
        self._out = {}
        self.plan = plan

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other):
        if not isinstance(other, CollatzGraph):
            return NotImplemented
        return self.vertices == other.vertices and self._out == other._out

    def add_vertex(self, v: int) -> None:
        ensure_odd_positive(v, "vertex")
        self.vertices.add(v)

    def out_edge(self, v: int):
        """(dest, exponent) of v's out-edge, or None."""
        return self._out.get(v)

    def edges(self) -> set:
        return {(s, d, a) for s, (d, a) in self._out.items()}

    def sorted_edges(self) -> list:
        return sorted(self.edges())

    def insert_pair(self, s: int, d: int, a: int) -> int:
        """Insert the edge (s, d, a) plus whichever endpoints are missing.

        Returns the membership case that applied: 1 both endpoints new,
        2 only the destination was present, 3 only the source was present,
        4 both present.  A source that already has its out-edge is rejected:
        the reduced step out of s is unique, so a proper sweep produces each
        source exactly once.
        """
        if engine.reduced_step(s) != (d, a):
            raise InvalidEdge(
                "no reduced step %d -> %d with exponent %d (actual step is %r)"
                % (s, d, a, engine.reduced_step(s))
            )
        if s in self._out:
            raise DuplicateSource("vertex %d already has its out-edge" % s)
        s_new = s not in self.vertices
        d_new = d not in self.vertices
        self.vertices.add(s)
        self.vertices.add(d)
        self._out[s] = (d, a)
        if s_new and d_new:
            return 1
        if s_new:
            return 2
        if d_new:
            return 3
        return 4


def replay_pairs(steps) -> CollatzGraph:
    """Build a graph by applying explicit (family, a, b) reverse calculations
    in the given order; family is "R1" or "R5"."""
    g = CollatzGraph()
    for family, a, b in steps:
        if family == reverse.R1:
            s, d, x = reverse.r1(a, b), 6 * a + 1, 2 * b + 2
        elif family == reverse.R5:
            s, d, x = reverse.r5(a, b), 6 * a + 5, 2 * b + 1
        else:
            raise ValueError("family must be R1 or R5, got %r" % (family,))
        g.insert_pair(s, d, x)
    return g


def _max_b(factor: int, offset: int, cap: int) -> int:
    """Largest b >= 0 with (factor * 2^(2b+offset) - 1)/3 <= cap, or -1."""
    b = -1
    while (factor << (2 * (b + 1) + offset)) - 1 <= 3 * cap:
        b += 1
    return b


def build_sweep(plan: SweepPlan) -> CollatzGraph:
    """Enumerate r1(a, b) and r5(a, b) under the value cap and insert each
    source/destination pair.

    Deterministic order: diagonals by a + b ascending, a ascending within a
    diagonal, r1 before r5 at each (a, b).  Pairs with either endpoint above
    the cap are skipped entirely, never half-inserted.
    """
    if plan.mode != FORMULA_SWEEP:
        raise ValueError("build_sweep needs a %s plan" % FORMULA_SWEEP)
    cap = plan.value_cap
    g = CollatzGraph(plan)
    # source lower bounds: r1(a, b) >= 8a+1, r5(a, b) >= 4a+3; destination
    # bounds 6a+1 <= cap, 6a+5 <= cap.  The r5 destination bound binds first.
    a1_max = (cap - 1) // 8
    a5_max = (cap - 5) // 6
    b1_max = _max_b(1, 2, cap)
    b5_max = _max_b(5, 1, cap)
    a_hi = max(a1_max, a5_max, 0)
    b_hi = max(b1_max, b5_max, 0)
    for t in range(a_hi + b_hi + 1):
        for a in range(max(0, t - b_hi), min(t, a_hi) + 1):
            b = t - a
            if a <= a1_max and b <= b1_max:
                d = 6 * a + 1
                s = ((d << (2 * b + 2)) - 1) // 3  # exact: d*2^even = 1 mod 3
                if s <= cap:
                    g.insert_pair(s, d, 2 * b + 2)
            if a <= a5_max and b <= b5_max:
                d = 6 * a + 5
                s = ((d << (2 * b + 1)) - 1) // 3  # exact: d*2^odd = 1 mod 3
                if s <= cap:
                    g.insert_pair(s, d, 2 * b + 1)
    return g


def build_reverse_bfs(plan: SweepPlan) -> CollatzGraph:
    """Grow the graph backwards from 1, level by level.

    Each frontier vertex not congruent to 3 mod 6 spawns its preimages for
    every valid exponent up to exponent_cap, pruned at value_cap; 1's own
    preimage beyond the recorded self-loop is skipped.
    """
    if plan.mode != REVERSE_BFS:
        raise ValueError("build_reverse_bfs needs a %s plan" % REVERSE_BFS)
    g = CollatzGraph(plan)
    g.insert_pair(1, 1, 2)  # the unique self-loop
    frontier = [1]
    for _ in range(plan.depth_cap):
        nxt = []
        for v in frontier:
            if v % 6 == 3:
                continue  # no preimages exist
            first = 2 if v % 6 == 1 else 1
            for x in range(first, plan.exponent_cap + 1, 2):
                s = reverse.reverse_step(v, x)
                if s > plan.value_cap:
                    break  # preimages grow with the exponent
                if s == v:
                    continue  # only 1 with x = 2: the recorded self-loop
                g.insert_pair(s, v, x)
                nxt.append(s)
        frontier = nxt
        if not frontier:
            break
    return g


def frontier_vertices(g: CollatzGraph) -> set:
    """Vertices other than 1 whose successor lies outside the vertex set."""
    out = set()
    for v in g.vertices:
        if v != 1 and g.out_edge(v) is None:
            succ, _ = engine.reduced_step(v)
            if succ not in g.vertices:
                out.add(v)
    return out


def is_one_tree(g: CollatzGraph):
    """(True, None) iff, ignoring the self-loop at 1, the graph is acyclic
    and every vertex either walks to 1 or walks off the vertex set (a cap
    frontier, which is not a failure).

    A walk that dead-ends at a vertex whose successor IS in the vertex set
    found an orphan: the endpoints exist but were never linked.  The witness
    carries the offending cycle or orphan vertex.
    """
    OK = True
    state = {}
    for start in g.vertices:
        if start in state:
            continue
        path = []
        on_path = set()
        v = start
        while True:
            if v == 1 or state.get(v) is OK:
                break
            if v in on_path:
                i = path.index(v)
                return False, Witness("cycle", tuple(path[i:]))
            out = g.out_edge(v)
            if out is None:
                succ, _ = engine.reduced_step(v)
                if succ in g.vertices:
                    return False, Witness("orphan", (v,))
                break  # frontier: the walk exits the window
            path.append(v)
            on_path.add(v)
            v = out[0]
        for u in path:
            state[u] = OK
    return True, None


def _meta(plan: SweepPlan) -> dict:
    return {
        "mode": plan.mode,
        "value_cap": str(plan.value_cap),
        "depth_cap": str(plan.depth_cap),
        "exponent_cap": str(plan.exponent_cap),
        "truncated": True,
    }


def to_dot(g: CollatzGraph) -> str:
    """Graphviz rendering: sorted vertex lines, then sorted edge lines."""
    lines = ["digraph collatz {"]
    if g.plan is not None:
        lines.append(
            "  // finite truncation: mode=%s value_cap=%d"
            % (g.plan.mode, g.plan.value_cap)
        )
    for v in sorted(g.vertices):
        lines.append("  %d;" % v)
    for s, d, a in g.sorted_edges():
        lines.append('  %d -> %d [label="%d"];' % (s, d, a))
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: CollatzGraph) -> str:
    """One-document JSON rendering; big integers as decimal strings."""
    doc = {
        "vertices": [str(v) for v in sorted(g.vertices)],
        "edges": [
            {"s": str(s), "d": str(d), "a": str(a)} for s, d, a in g.sorted_edges()
        ],
    }
    if g.plan is not None:
        doc["meta"] = _meta(g.plan)
    return json.dumps(doc)


def from_json(text: str) -> CollatzGraph:
    """Parse a JSON rendering back into a validated graph."""
    doc = json.loads(text)
    g = CollatzGraph()
    for e in doc["edges"]:
        g.insert_pair(int(e["s"]), int(e["d"]), int(e["a"]))
    for v in doc["vertices"]:
        g.add_vertex(int(v))
    return g


def export(g: CollatzGraph, fmt: str) -> bytes:
    """UTF-8 byte rendering in the named format ("dot" or "json")."""
    fmt = fmt.lower()
    if fmt == "dot":
        return to_dot(g).encode("utf-8")
    if fmt == "json":
        return to_json(g).encode("utf-8")
    raise ValueError("unknown export format %r" % (fmt,))
