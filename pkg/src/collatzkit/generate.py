"""Closed-form constructors for odd numbers with prescribed descent lengths.

Length-1 numbers are (2^(2k+2) - 1) / 3.  Length-2 numbers form a two
parameter family over the first exponent a1 and a jump b, with second
exponent 6b + 2 for even a1 and 6b - 2 for odd a1.  Longer descents are
built additively: from a base n whose orbit ends at 1 in j steps,

    m = 2^(a_1+...+a_j) / 3^(j+1) * (2^(a_new) - 4) + n,   a_new = 2*b*3^j + 2

has the same first j exponents plus one extra step; chaining the self-loop
at 1 for k-1 extra steps stretches the same idea to any target length j+k.
A separate family 2^j * k - 1 yields chains that grow monotonically for j
consecutive steps, every step halving exactly once.
"""

from .arith import ensure_odd_positive, pow2, pow3
from .engine import ExponentTrace


def gen_length1(k: int) -> int:
    """(2^(2k+2) - 1) / 3: one reduced step from 1.

    k = 0 gives 1 itself, the trivial-cycle boundary case: its loop takes one
    step, but its first arrival at 1 takes zero.
    """
    if k < 0:
        raise ValueError("k must be >= 0, got %r" % (k,))
    q, r = divmod(pow2(2 * k + 2) - 1, 3)
    assert r == 0  # 2^even - 1 is divisible by 3
    return q


def gen_length2(a1: int, b: int) -> int:
    """Odd number whose descent has exactly two steps, first exponent a1."""
    if a1 < 1:
        raise ValueError("a1 must be >= 1, got %r" % (a1,))
    if b < 1:
        raise ValueError("b must be >= 1, got %r" % (b,))
    a2 = 6 * b + (2 if a1 % 2 == 0 else -2)
    q, r = divmod(pow2(a1 + a2) - pow2(a1) - 3, 9)
    assert r == 0  # the parity pairing of a1 and a2 forces divisibility
    return q


def enumerate_length2(count: int) -> list:
    """The count smallest odd numbers with two-step descents, ascending,
    as (n, a1, a2) rows.

    Generates the (a1, b) grid under a total-exponent bound and sorts.  Any
    pair above the bound has a2 >= 4 and hence value at least
    (2^(E) - 2^(E-4) - 3)/9 for its total exponent E, so every kept value
    below that threshold is guaranteed final.
    """
    if count < 1:
        raise ValueError("count must be >= 1, got %r" % (count,))
    ecap = 10
    while True:
        found = []
        for a1 in range(1, ecap - 3):
            a2 = 6 + (2 if a1 % 2 == 0 else -2)  # b = 1
            while a1 + a2 <= ecap:
                q, r = divmod(pow2(a1 + a2) - pow2(a1) - 3, 9)
                assert r == 0
                found.append((q, a1, a2))
                a2 += 6
        threshold = (pow2(ecap + 1) - pow2(ecap - 3) - 3) // 9
        kept = sorted(row for row in found if row[0] < threshold)
        if len(kept) >= count:
            return kept[:count]
        ecap += 4


def additive_next(base: ExponentTrace, b: int) -> int:
    """One-step extension of a base orbit ending at 1.

    b = 0 returns the base start unchanged: the new exponent degenerates to
    2, the self-loop step at 1.
    """
    return additive_jump(base, 1, b)


def additive_jump(base: ExponentTrace, k: int, b: int) -> int:
    """k-step extension of a base orbit ending at 1.

    The result's exponents are the base exponents, then k-1 copies of the
    self-loop exponent 2, then 2*b*3^(j+k-1) + 2.
    """
    if base.terminal != 1:
        raise ValueError("base trace must end at 1, ends at %d" % base.terminal)
    if base.length < 1:
        raise ValueError("base trace must have at least one step")
    if k < 1:
        raise ValueError("k must be >= 1, got %r" % (k,))
    if b < 0:
        raise ValueError("b must be >= 0, got %r" % (b,))
    j = base.length
    s = sum(base.exponents)
    a_last = 2 * b * pow3(j + k - 1) + 2
    q, r = divmod(pow2(s + 2 * (k - 1)) * (pow2(a_last) - 4), pow3(j + k))
    assert r == 0  # 3^(j+k) divides 2^(a_last) - 4 by the choice of a_last
    return q + base.start


def gen_monotonic(j: int, k: int) -> tuple:
    """n = 2^j * k - 1 and its strictly increasing chain of j odd iterates.

    The i-th chain element is 3^i * (n+1) / 2^i - 1 exactly; each of the
    first j-1 steps halves exactly once.
    """
    if j < 1:
        raise ValueError("j must be >= 1, got %r" % (j,))
    if k < 1:
        raise ValueError("k must be >= 1, got %r" % (k,))
    n = pow2(j) * k - 1
    ensure_odd_positive(n)
    chain = []
    for i in range(j):
        q, r = divmod(pow3(i) * (n + 1), pow2(i))
        if r != 0:  # unreachable: 2^j divides n + 1
            raise AssertionError("chain element %d of (%d, %d) not integral" % (i, j, k))
        chain.append(q - 1)
    return n, chain
