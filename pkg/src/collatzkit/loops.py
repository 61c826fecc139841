"""Loop-candidate analysis for the reduced map.

A length-j loop visiting n with exponents a_1..a_j (prefix sums s_i) forces

    n = sum_{i=1..j} 3^(i-1) * 2^(s_{j-i})  /  (2^(s_j) - 3^j)

Tuples are screened exactly against that equation.  Failures come back as
typed Rejection values rather than exceptions: the elimination arguments
are rejection ledgers, and the tests assert *why* each tuple fails.
"""

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import engine
from .arith import ensure_odd_positive, pow2, pow3


class RejectionKind(enum.Enum):
    NON_POSITIVE_DENOMINATOR = "non-positive-denominator"
    NON_INTEGER = "non-integer"
    EVEN_VALUE = "even-value"


@dataclass(frozen=True)
class Rejection:
    kind: RejectionKind
    value: Optional[Fraction]  # the implied rational, when the equation defines one


@dataclass(frozen=True)
class LoopCandidate:
    exponents: tuple
    value: int


def loop_form_check(n: int, j: int) -> bool:
    """True iff n - 1 is a non-negative multiple of 2 * 3^j."""
    ensure_odd_positive(n)
    if j < 1:
        raise ValueError("j must be >= 1, got %r" % (j,))
    return (n - 1) % (2 * pow3(j)) == 0


def loop_candidate(exponents) -> Union[LoopCandidate, Rejection]:
    """Solve the loop equation for an exponent tuple.

    Returns the integer candidate, or a Rejection naming the first reason
    the tuple cannot close a loop.  Accepted candidates are replayed through
    the engine as an internal assertion; an integer solution always replays,
    because a dyadic denominator introduced by a bad division can never
    cancel again.
    """
    exps = tuple(exponents)
    if not exps:
        raise ValueError("exponent list is empty")
    if any(a < 1 for a in exps):
        raise ValueError("exponents must all be >= 1, got %r" % (exps,))
    j = len(exps)
    prefix = [0]
    for a in exps:
        prefix.append(prefix[-1] + a)
    den = pow2(prefix[j]) - pow3(j)
    num = sum(pow3(i - 1) * pow2(prefix[j - i]) for i in range(1, j + 1))
    if den <= 0:
        implied = Fraction(num, den) if den != 0 else None
        return Rejection(RejectionKind.NON_POSITIVE_DENOMINATOR, implied)
    q, r = divmod(num, den)
    if r != 0:
        return Rejection(RejectionKind.NON_INTEGER, Fraction(num, den))
    if q % 2 == 0:
        return Rejection(RejectionKind.EVEN_VALUE, Fraction(q))
    cur = q
    for a in exps:
        nxt, e = engine.reduced_step(cur)
        if e != a:
            raise AssertionError("replay exponent mismatch for %r" % (exps,))
        cur = nxt
    if cur != q:
        raise AssertionError("replay did not close the loop for %r" % (exps,))
    return LoopCandidate(exps, q)


def length2_feasible_pairs() -> list:
    """Exponent pairs satisfying 2^(a1+a2) - 2^a1 <= 12 and a1 + a2 > 3.

    The first inequality forces a1 + a2 <= 4 (since 2^a1 <= 2^(a1+a2-1)), so
    a bounded scan is exhaustive.
    """
    pairs = []
    for a1 in range(1, 9):
        for a2 in range(1, 9):
            if a1 + a2 > 3 and pow2(a1 + a2) - pow2(a1) <= 12:
                pairs.append((a1, a2))
    return pairs


def search_loops(j: int, max_exp_sum: int) -> list:
    """All integer loop candidates with j exponents summing to <= max_exp_sum.

    Bounds the exponent *sum*, not the entries: the positivity constraint
    2^(sum) > 3^j is a sum constraint.  Sorted by (value, exponents).
    """
    if j < 1:
        raise ValueError("j must be >= 1, got %r" % (j,))
    if max_exp_sum < j:
        raise ValueError("max_exp_sum must be >= j (every exponent is >= 1)")
    found = []

    def walk(partial, remaining):
        if len(partial) == j:
            res = loop_candidate(partial)
            if isinstance(res, LoopCandidate):
                found.append(res)
            return
        slots_after = j - len(partial) - 1
        for a in range(1, remaining - slots_after + 1):
            partial.append(a)
            walk(partial, remaining - a)
            partial.pop()

    walk([], max_exp_sum)
    found.sort(key=lambda c: (c.value, c.exponents))
    return found


def loop_member_equation(n: int, m: int, exponents) -> bool:
    """Exact check of n == (n - 1) * 2^(a_1+...+a_j) / 3^j + m."""
    ensure_odd_positive(n)
    ensure_odd_positive(m, "m")
    exps = tuple(exponents)
    if not exps:
        raise ValueError("exponent list is empty")
    if any(a < 1 for a in exps):
        raise ValueError("exponents must all be >= 1, got %r" % (exps,))
    return (n - m) * pow3(len(exps)) == (n - 1) * pow2(sum(exps))
