"""Exact integer and rational helpers shared by every other module.

All arithmetic is exact: Python ints for naturals, fractions.Fraction for
ratios.  No floating point anywhere.
"""

from fractions import Fraction
from typing import Sequence, Tuple

Term = Tuple[int, int, int]  # (sign, s, t) encoding sign * 2^s / 3^t


def v2(n: int) -> int:
    """Largest e such that 2^e divides n (n >= 1)."""
    if n <= 0:
        raise ValueError("2-adic valuation requires n >= 1, got %r" % (n,))
    return (n & -n).bit_length() - 1


def pow2(e: int) -> int:
    """Exact 2^e."""
    if e < 0:
        raise ValueError("negative exponent: %r" % (e,))
    return 1 << e


def pow3(e: int) -> int:
    """Exact 3^e."""
    if e < 0:
        raise ValueError("negative exponent: %r" % (e,))
    return 3 ** e


def ratio_eval_sum(terms: Sequence[Term]) -> Fraction:
    """Exact reduced value of sum(sign * 2^s / 3^t) over the given terms."""
    if not terms:
        raise ValueError("term list is empty")
    total = Fraction(0)
    for sign, s, t in terms:
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1, got %r" % (sign,))
        total += Fraction(sign * pow2(s), pow3(t))
    return total


def ensure_odd_positive(n: int, what: str = "n") -> int:
    """Validate that n is a positive odd integer and return it."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("%s must be an int, got %r" % (what, n))
    if n < 1 or n % 2 == 0:
        raise ValueError("%s must be a positive odd integer, got %r" % (what, n))
    return n
