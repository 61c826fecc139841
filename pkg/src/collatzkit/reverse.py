"""Reverse reduced iteration: preimages of odd values under the reduced map.

The reverse step sends n to (2^x * n - 1) / 3.  Validity depends on n mod 6:
residue 1 needs an even exponent, residue 5 an odd one, and residue 3 has no
valid exponent at all.  The two preimage families

    r1(a, b) = ((6a+1) * 2^(2b+2) - 1) / 3
    r5(a, b) = ((6a+5) * 2^(2b+1) - 1) / 3

together hit every positive odd number exactly once.  x_fn is the
8a+5 residue family whose recursion drives that partition argument: its
level-0 values fill the gap left by r1 (8a+1) and r5 (4a+3), and each of
its levels splits into fresh r1, r5 and x_fn values one level up.
rr1/rr5 re-index the exponent of r1/r5 so that the output residue mod 6 is
chosen in advance.
"""

from dataclasses import dataclass

from . import engine
from .arith import ensure_odd_positive, pow2


class ReverseDomainError(Exception):
    """Base class for reverse-step domain rejections."""


class ClassThree(ReverseDomainError):
    """n = 3 (mod 6) admits no reverse exponent: 3 never divides 2^x*n - 1."""


class ParityMismatch(ReverseDomainError):
    """The exponent parity does not match n's residue class mod 6."""


R1 = "R1"
R5 = "R5"
X = "X"


@dataclass(frozen=True)
class PreimageTag:
    family: str  # R1, R5 or X
    a: int
    b: int


def mod6_classify(n: int) -> int:
    """n mod 6: one of 1, 3, 5 for odd n."""
    ensure_odd_positive(n)
    return n % 6


def reverse_step(n: int, x: int) -> int:
    """The odd m whose reduced step is m -> n with exponent x."""
    cls = mod6_classify(n)
    if cls == 3:
        raise ClassThree("no valid exponent: %d = 3 (mod 6)" % n)
    if x < 1:
        raise ValueError("exponent must be >= 1, got %r" % (x,))
    if x % 2 != (0 if cls == 1 else 1):
        want = "an even" if cls == 1 else "an odd"
        raise ParityMismatch(
            "%d = %d (mod 6) needs %s exponent, got %d" % (n, cls, want, x)
        )
    q, r = divmod((n << x) - 1, 3)
    assert r == 0  # enforced by the residue/parity gate above
    return q


def _exact_third(num: int) -> int:
    q, r = divmod(num, 3)
    assert r == 0
    return q


def r1(a: int, b: int) -> int:
    """((6a+1) * 2^(2b+2) - 1) / 3: the preimage of 6a+1 with exponent 2b+2."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0, got (%r, %r)" % (a, b))
    return _exact_third(((6 * a + 1) << (2 * b + 2)) - 1)


def r5(a: int, b: int) -> int:
    """((6a+5) * 2^(2b+1) - 1) / 3: the preimage of 6a+5 with exponent 2b+1."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0, got (%r, %r)" % (a, b))
    return _exact_third(((6 * a + 5) << (2 * b + 1)) - 1)


def x_fn(a: int, b: int) -> int:
    """2^(2b+3) * a + (2^(2b+4) - 1) / 3: the 8a+5 remainder family."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0, got (%r, %r)" % (a, b))
    return (a << (2 * b + 3)) + _exact_third(pow2(2 * b + 4) - 1)


def resolve(n: int) -> PreimageTag:
    """The unique (family, a, b) in {r1, r5} with family(a, b) == n.

    Derived arithmetically from the forward step, so uniqueness is
    structural: the image d = C(n) fixes the family by d mod 6 (d = 3 mod 6
    is impossible since 3 never divides 3n+1) and the exponent fixes b.
    """
    d, e = engine.reduced_step(n)
    cls = d % 6
    if cls == 1:
        if e % 2 != 0 or e < 2:
            raise AssertionError("even-exponent residue class broke at n=%d" % n)
        tag = PreimageTag(R1, (d - 1) // 6, (e - 2) // 2)
        rebuilt = r1(tag.a, tag.b)
    elif cls == 5:
        if e % 2 != 1:
            raise AssertionError("odd-exponent residue class broke at n=%d" % n)
        tag = PreimageTag(R5, (d - 5) // 6, (e - 1) // 2)
        rebuilt = r5(tag.a, tag.b)
    else:
        raise AssertionError("reduced image of %d is 3 mod 6, impossible" % n)
    if rebuilt != n:
        raise AssertionError("preimage reconstruction failed at n=%d" % n)
    return tag


def level0_partition(n: int) -> PreimageTag:
    """Which level-0 family covers n: 8a+1 -> R1, 4a+3 -> R5, 8a+5 -> X.

    Exactly one residue branch mod 8 fires (3 and 7 both belong to R5).
    """
    ensure_odd_positive(n)
    m8 = n % 8
    if m8 == 1:
        return PreimageTag(R1, (n - 1) // 8, 0)
    if m8 in (3, 7):
        return PreimageTag(R5, (n - 3) // 4, 0)
    return PreimageTag(X, (n - 5) // 8, 0)


def x_recursion_check(a: int, k: int) -> bool:
    """Exact check of the three level-k recursion identities at (a, k):

    x_fn(4a, k) == r1(a, k+1), x_fn(2a+1, k) == r5(a, k+1),
    x_fn(4a+2, k) == x_fn(a, k+1).
    """
    if a < 0 or k < 0:
        raise ValueError("a and k must be >= 0, got (%r, %r)" % (a, k))
    return (
        x_fn(4 * a, k) == r1(a, k + 1)
        and x_fn(2 * a + 1, k) == r5(a, k + 1)
        and x_fn(4 * a + 2, k) == x_fn(a, k + 1)
    )


def _check_residue(c: int) -> None:
    if c not in (1, 3, 5):
        raise ValueError("target residue must be 1, 3 or 5, got %r" % (c,))


def rr1_exponent(a: int, b: int, c: int) -> int:
    """The steered exponent 2*(3b + (c - 1 + a mod 3) mod 3) + 2."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0, got (%r, %r)" % (a, b))
    _check_residue(c)
    return 2 * (3 * b + (c - 1 + a % 3) % 3) + 2


def rr1(a: int, b: int, c: int) -> int:
    """r1 with the exponent steered so the result is c mod 6."""
    return _exact_third(((6 * a + 1) << rr1_exponent(a, b, c)) - 1)


def rr5_exponent(a: int, b: int, c: int) -> int:
    """The steered exponent 2*(3b + (c - a mod 3) mod 3) + 1."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be >= 0, got (%r, %r)" % (a, b))
    _check_residue(c)
    return 2 * (3 * b + (c - a % 3) % 3) + 1


def rr5(a: int, b: int, c: int) -> int:
    """r5 with the exponent steered so the result is c mod 6."""
    return _exact_third(((6 * a + 5) << rr5_exponent(a, b, c)) - 1)


def mod6_power_lemmas(x_max: int) -> bool:
    """Check five power congruences for every x in [0, x_max]:

    2^(2x+1) = 2 and 2^(2x+2) = 4 (mod 6), and (2^(6x+2)-1)/3 = 1,
    (2^(6x+4)-1)/3 = 5, (2^(6x+6)-1)/3 = 3 (mod 6).
    """
    if x_max < 0:
        raise ValueError("x_max must be >= 0, got %r" % (x_max,))
    for x in range(x_max + 1):
        if pow(2, 2 * x + 1, 6) != 2:
            return False
        if pow(2, 2 * x + 2, 6) != 4:
            return False
        # (2^e - 1)/3 mod 6 can be read off 2^e mod 18
        if (pow(2, 6 * x + 2, 18) - 1) // 3 != 1:
            return False
        if (pow(2, 6 * x + 4, 18) - 1) // 3 != 5:
            return False
        if (pow(2, 6 * x + 6, 18) - 1) // 3 != 3:
            return False
    return True
