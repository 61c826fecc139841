import pytest

from collatzkit import engine
from collatzkit.reverse import (
    R1,
    R5,
    X,
    ClassThree,
    ParityMismatch,
    PreimageTag,
    level0_partition,
    mod6_classify,
    mod6_power_lemmas,
    r1,
    r5,
    resolve,
    reverse_step,
    rr1,
    rr1_exponent,
    rr5,
    rr5_exponent,
    x_fn,
    x_recursion_check,
)


def test_mod6_classify():
    assert mod6_classify(7) == 1
    assert mod6_classify(9) == 3
    assert mod6_classify(11) == 5
    with pytest.raises(ValueError):
        mod6_classify(4)


def test_reverse_step_examples():
    assert reverse_step(1, 4) == 5
    assert reverse_step(1, 2) == 1
    assert reverse_step(5, 1) == 3
    assert reverse_step(11, 1) == 7
    for x in (1, 2, 3, 4, 5):
        with pytest.raises(ClassThree):
            reverse_step(9, x)


def test_reverse_step_parity_gate():
    with pytest.raises(ParityMismatch):
        reverse_step(7, 1)  # 7 = 1 (mod 6) needs an even exponent
    with pytest.raises(ParityMismatch):
        reverse_step(11, 2)  # 11 = 5 (mod 6) needs an odd exponent
    with pytest.raises(ValueError):
        reverse_step(7, 0)
    with pytest.raises(ValueError):
        reverse_step(7, -2)


def test_reverse_step_undoes_forward_step():
    for n in range(1, 3001, 2):
        cls = n % 6
        if cls == 3:
            continue
        xs = (2, 4, 6) if cls == 1 else (1, 3, 5)
        for x in xs:
            m = reverse_step(n, x)
            assert m % 2 == 1
            assert engine.reduced_step(m) == (n, x)


def test_residue_parity_gate_sweep():
    for n in range(1, 3001, 2):
        cls = n % 6
        if cls == 3:
            for x in (1, 2, 3, 4):
                with pytest.raises(ClassThree):
                    reverse_step(n, x)
        elif cls == 1:
            for x in (1, 3, 5, 7, 9):
                with pytest.raises(ParityMismatch):
                    reverse_step(n, x)
        else:
            for x in (2, 4, 6, 8):
                with pytest.raises(ParityMismatch):
                    reverse_step(n, x)


def test_family_examples():
    assert r1(0, 0) == 1
    assert r5(1, 0) == 7
    assert engine.reduced_step(7) == (11, 1)
    assert x_fn(0, 0) == 5
    with pytest.raises(ValueError):
        r1(-1, 0)


def test_family_level0_closed_forms():
    for a in range(0, 2000):
        assert r1(a, 0) == 8 * a + 1
        assert r5(a, 0) == 4 * a + 3
        assert x_fn(a, 0) == 8 * a + 5


def test_resolve_examples():
    assert resolve(7) == PreimageTag(R5, 1, 0)
    assert resolve(5) == PreimageTag(R1, 0, 1)
    assert resolve(1) == PreimageTag(R1, 0, 0)


def test_resolve_sweep():
    builders = {R1: r1, R5: r5}
    for n in range(1, 100001, 2):
        tag = resolve(n)
        assert tag.family in builders
        assert builders[tag.family](tag.a, tag.b) == n


def test_level0_examples():
    assert level0_partition(17) == PreimageTag(R1, 2, 0)
    assert level0_partition(7) == PreimageTag(R5, 1, 0)
    assert level0_partition(13) == PreimageTag(X, 1, 0)


def test_level0_partition_sweep():
    builders = {R1: r1, R5: r5, X: x_fn}
    for n in range(1, 100001, 2):
        tag = level0_partition(n)
        assert tag.b == 0
        assert builders[tag.family](tag.a, 0) == n
        # exactly one residue branch fires
        hits = sum(
            (n % 8 == 1 and fam == R1)
            or (n % 8 in (3, 7) and fam == R5)
            or (n % 8 == 5 and fam == X)
            for fam in (tag.family,)
        )
        assert hits == 1


def test_x_recursion_examples():
    assert x_recursion_check(0, 0)
    assert x_fn(0, 0) == 5 == r1(0, 1)
    assert x_recursion_check(1, 0)
    assert x_fn(3, 0) == 29 == r5(1, 1)
    assert x_recursion_check(2, 3)


def test_x_recursion_sweep():
    for a in range(0, 101):
        for k in range(0, 9):
            assert x_recursion_check(a, k)


def test_rr1_examples():
    assert rr1(0, 0, 1) == 1 and 1 % 6 == 1
    assert rr1(0, 0, 3) == 21 and 21 % 6 == 3
    assert rr1_exponent(0, 0, 3) == 6
    assert rr1(1, 0, 1) == 37
    assert engine.reduced_step(37) == (7, 4)


def test_rr5_examples():
    assert rr5(0, 0, 3) == 3 and 3 % 6 == 3
    assert rr5(0, 0, 1) == 13
    assert rr5_exponent(0, 0, 1) == 3
    assert rr5(1, 0, 5) == 29
    assert rr5_exponent(1, 0, 5) == 3
    with pytest.raises(ValueError):
        rr5(0, 0, 2)


def test_rr_steering_sweep():
    branches = set()
    for a in range(0, 61):
        for b in range(0, 11):
            for c in (1, 3, 5):
                v = rr1(a, b, c)
                assert v % 6 == c
                assert engine.reduced_step(v) == (6 * a + 1, rr1_exponent(a, b, c))
                v = rr5(a, b, c)
                assert v % 6 == c
                assert engine.reduced_step(v) == (6 * a + 5, rr5_exponent(a, b, c))
                branches.add((a % 3, c))
    assert len(branches) == 9  # every (a mod 3, c) combination exercised


def test_rr_is_residue_filtered_family():
    B = 5
    for a in range(0, 51):
        plain1 = {r1(a, bp) for bp in range(0, 3 * B + 3)}
        plain5 = {r5(a, bp) for bp in range(0, 3 * B + 3)}
        for c in (1, 3, 5):
            assert {rr1(a, b, c) for b in range(B + 1)} == {
                v for v in plain1 if v % 6 == c
            }
            assert {rr5(a, b, c) for b in range(B + 1)} == {
                v for v in plain5 if v % 6 == c
            }


def test_mod6_power_lemmas():
    assert mod6_power_lemmas(0)
    assert mod6_power_lemmas(1)
    assert mod6_power_lemmas(1000)
    with pytest.raises(ValueError):
        mod6_power_lemmas(-1)


def test_mod6_power_lemmas_exact_oracle():
    # independent route: exact big-integer arithmetic
    for x in range(0, 200):
        assert 2 ** (2 * x + 1) % 6 == 2
        assert 2 ** (2 * x + 2) % 6 == 4
        assert ((2 ** (6 * x + 2) - 1) // 3) % 6 == 1
        assert ((2 ** (6 * x + 4) - 1) // 3) % 6 == 5
        assert ((2 ** (6 * x + 6) - 1) // 3) % 6 == 3
