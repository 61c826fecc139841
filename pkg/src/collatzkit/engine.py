"""Forward iteration: the classical Collatz map and its odd-to-odd reduction.

collatz_f halves evens and sends odd n to 3n+1.  reduced_step fuses one
3n+1 step with all the halvings that follow it, returning the next odd
value together with the halving count (the step's exponent).  Iteration
caps are mandatory parameters throughout: whether every orbit reaches 1 is
open, so the library never loops unboundedly.
"""

from dataclasses import dataclass
from typing import Optional

from .arith import ensure_odd_positive, v2

REACHED_ONE = "reached-one"
REACHED_TARGET = "reached-target"
CAP_HIT = "cap-hit"


class IterationCapHit(Exception):
    """An iteration cap was exhausted before the stop condition fired."""

    def __init__(self, cap: int, message: str = ""):
        super().__init__(message or "iteration cap %d exhausted" % cap)
        self.cap = cap


@dataclass(frozen=True)
class StopReason:
    tag: str
    cap: Optional[int] = None  # set only when tag == CAP_HIT


@dataclass(frozen=True)
class ExponentTrace:
    """A start value plus the ordered halving exponents of its reduced orbit."""

    start: int
    exponents: tuple
    terminal: int

    @property
    def length(self) -> int:
        return len(self.exponents)

    def replay(self) -> int:
        """Recompute the terminal from start using the recorded exponents."""
        cur = self.start
        for a in self.exponents:
            t = 3 * cur + 1
            if t % (1 << a) != 0:
                raise ValueError("exponent %d does not divide 3*%d+1" % (a, cur))
            cur = t >> a
        return cur

    def values(self) -> list:
        """All odd values visited, start first, terminal last."""
        out = [self.start]
        cur = self.start
        for a in self.exponents:
            cur = (3 * cur + 1) >> a
            out.append(cur)
        return out


def collatz_f(n: int) -> int:
    """One classical step: n/2 for even n, 3n+1 for odd n."""
    if n < 1:
        raise ValueError("collatz_f requires n >= 1, got %r" % (n,))
    return n // 2 if n % 2 == 0 else 3 * n + 1


def reduced_step(n: int) -> tuple:
    """One odd-to-odd step: (m, a) with m odd and m * 2^a == 3n + 1."""
    ensure_odd_positive(n)
    t = 3 * n + 1
    a = v2(t)
    return t >> a, a


def trace(n: int, target: Optional[int] = None, *, cap: int):
    """Iterate reduced steps from n, recording exponents, until target is hit.

    The default target is 1.  At least one step is always taken, so trace(1)
    records the self-loop exponent 2.  Reaching 1 before a different target
    stops with REACHED_ONE and leaves the decision to the caller; the cap
    stops the walk with CAP_HIT.  Returns (ExponentTrace, StopReason).
    """
    ensure_odd_positive(n)
    if target is None:
        target = 1
    ensure_odd_positive(target, "target")
    if cap < 1:
        raise ValueError("cap must be >= 1, got %r" % (cap,))
    exponents = []
    cur = n
    while True:
        cur, a = reduced_step(cur)
        exponents.append(a)
        if cur == target:
            tag = REACHED_ONE if target == 1 else REACHED_TARGET
            break
        if cur == 1:
            tag = REACHED_ONE
            break
        if len(exponents) >= cap:
            tag = CAP_HIT
            break
    reason = StopReason(tag, cap) if tag == CAP_HIT else StopReason(tag)
    return ExponentTrace(n, tuple(exponents), cur), reason


def sequence_length(n: int, *, cap: int) -> int:
    """Number of reduced steps until n first reaches 1; 0 when n is already 1.

    Raises IterationCapHit when the cap is exhausted (which is evidence of
    nothing: it never asserts divergence).
    """
    ensure_odd_positive(n)
    if cap < 1:
        raise ValueError("cap must be >= 1, got %r" % (cap,))
    j = 0
    cur = n
    while cur != 1:
        if j >= cap:
            raise IterationCapHit(cap)
        t = 3 * cur + 1
        cur = t >> ((t & -t).bit_length() - 1)
        j += 1
    return j


def cross_check(n: int, *, cap: int) -> bool:
    """True iff the odd values of the classical orbit of n equal the reduced
    orbit of n's odd part, in order."""
    if n < 1:
        raise ValueError("cross_check requires n >= 1, got %r" % (n,))
    if cap < 1:
        raise ValueError("cap must be >= 1, got %r" % (cap,))
    odds = [n] if n % 2 == 1 else []
    cur = n
    steps = 0
    while cur != 1:
        cur = collatz_f(cur)
        steps += 1
        if steps > cap:
            raise IterationCapHit(cap)
        if cur % 2 == 1:
            odds.append(cur)
    start = n if n % 2 == 1 else n >> v2(n)
    reduced = [start]
    cur = start
    steps = 0
    while cur != 1:
        cur, _ = reduced_step(cur)
        steps += 1
        if steps > cap:
            raise IterationCapHit(cap)
        reduced.append(cur)
    return odds == reduced
