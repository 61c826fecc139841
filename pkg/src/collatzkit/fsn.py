"""Fractional-sum encodings of reduced orbits.

An odd n whose reduced orbit reaches m in j steps with exponents a_1..a_j
(prefix sums s_0 = 0 < s_1 < ... < s_j) satisfies, exactly,

    n = m * 2^(s_j) / 3^j  -  sum_{i=1..j} 2^(s_{i-1}) / 3^i

A form stores (j, prefix sums, m); terminal m = 1 encodes the full descent
to 1, and a general terminal encodes any orbit prefix.  Forms double as a
search space for the loop and generator machinery, so eval_form validates
integrality, oddness and positivity instead of trusting the shape: an
invalid form is a meaningful rejection, reported as a typed error.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from . import engine
from .arith import ensure_odd_positive, pow2, pow3


class NonIntegerForm(Exception):
    """The prefix sums do not encode a real orbit: the value is not an integer."""

    def __init__(self, value: Fraction):
        super().__init__("form evaluates to non-integer %s" % (value,))
        self.value = value


class NotOddPositive(Exception):
    """The form evaluates to an integer that is even or smaller than 1."""

    def __init__(self, value: int):
        super().__init__("form evaluates to %d, not a positive odd integer" % value)
        self.value = value


@dataclass(frozen=True)
class FractionalSumForm:
    depth: int            # j, the number of encoded steps
    prefix_sums: tuple    # s_0 = 0 < s_1 < ... < s_j
    terminal: int         # m, odd >= 1 (1 for a full descent)

    def __post_init__(self):
        if self.depth < 1:
            raise ValueError("depth must be >= 1, got %r" % (self.depth,))
        ps = tuple(self.prefix_sums)
        object.__setattr__(self, "prefix_sums", ps)
        if len(ps) != self.depth + 1:
            raise ValueError(
                "expected %d prefix sums, got %d" % (self.depth + 1, len(ps))
            )
        if ps[0] != 0:
            raise ValueError("prefix sums must start at 0")
        for lo, hi in zip(ps, ps[1:]):
            if hi <= lo:
                raise ValueError("prefix sums must be strictly increasing")
        ensure_odd_positive(self.terminal, "terminal")

    @property
    def exponents(self) -> tuple:
        """The step exponents, recovered by differencing the prefix sums."""
        ps = self.prefix_sums
        return tuple(hi - lo for lo, hi in zip(ps, ps[1:]))


def _from_exponents(exponents, terminal: int) -> FractionalSumForm:
    prefix = (0,) + tuple(accumulate(exponents))
    return FractionalSumForm(len(exponents), prefix, terminal)


def encode_fsn(n: int, *, cap: int) -> FractionalSumForm:
    """Encode the full descent of n to 1 (terminal 1)."""
    tr, reason = engine.trace(n, 1, cap=cap)
    if reason.tag == engine.CAP_HIT:
        raise engine.IterationCapHit(cap)
    return _from_exponents(tr.exponents, 1)


def encode_ifsn(n: int, j: int, *, cap: int) -> FractionalSumForm:
    """Encode the first j reduced steps of n; the terminal is the j-th iterate.

    The walk passes through 1 freely (1 steps to itself), so a depth-j form
    exists for every j.
    """
    ensure_odd_positive(n)
    if j < 1:
        raise ValueError("depth must be >= 1, got %r" % (j,))
    if j > cap:
        raise engine.IterationCapHit(cap)
    exponents = []
    cur = n
    for _ in range(j):
        cur, a = engine.reduced_step(cur)
        exponents.append(a)
    return _from_exponents(exponents, cur)


def eval_form(form: FractionalSumForm) -> int:
    """Exact value of a form; raises unless it is a positive odd integer."""
    j = form.depth
    ps = form.prefix_sums
    num = form.terminal * pow2(ps[j])
    for i in range(1, j + 1):
        num -= pow2(ps[i - 1]) * pow3(j - i)
    den = pow3(j)
    q, r = divmod(num, den)
    if r != 0:
        raise NonIntegerForm(Fraction(num, den))
    if q < 1 or q % 2 == 0:
        raise NotOddPositive(q)
    return q


def even_lift(form: FractionalSumForm, x: int) -> int:
    """2^x times the form's value: the shifted-exponent encoding of an even
    multiple."""
    if x < 0:
        raise ValueError("x must be >= 0, got %r" % (x,))
    return eval_form(form) * pow2(x)


def to_json(form: FractionalSumForm) -> str:
    """One-document JSON rendering; big integers as decimal strings."""
    doc = {
        "depth": form.depth,
        "prefix_sums": [str(s) for s in form.prefix_sums],
        "terminal": str(form.terminal),
    }
    return json.dumps(doc)


def from_json(text: str) -> FractionalSumForm:
    doc = json.loads(text)
    return FractionalSumForm(
        depth=int(doc["depth"]),
        prefix_sums=tuple(int(s) for s in doc["prefix_sums"]),
        terminal=int(doc["terminal"]),
    )
