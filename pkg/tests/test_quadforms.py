import random
from fractions import Fraction
from math import isqrt

import pytest

from sc7core.arith import HypothesisViolation, divisors, is_fundamental
from sc7core.quadforms import (
    BinaryQF,
    dirichlet_hurwitz,
    hurwitz,
    hurwitz_adjusted,
    hurwitz_scaled,
    reduced_forms,
)

FORMS_308 = [(1, 0, 77), (2, 2, 39), (3, -2, 26), (3, 2, 26),
             (6, -2, 13), (6, 2, 13), (7, 0, 11), (9, 4, 9)]


def test_binary_qf():
    f = BinaryQF(2, 2, 39)
    assert f.discriminant() == -308
    assert f.is_positive_definite()
    assert f(1, 0) == 2 and f(0, 1) == 39 and f(1, -1) == 39
    assert not BinaryQF(-1, 0, 1).is_positive_definite()
    assert not BinaryQF(1, 3, 1).is_positive_definite()


def test_reduced_forms_308():
    assert [(f.a, f.b, f.c) for f in reduced_forms(308)] == FORMS_308


def test_reduced_forms_well_formed():
    for D in range(3, 401):
        if D % 4 not in (0, 3):
            continue
        forms = reduced_forms(D)
        assert forms == sorted(set(forms))
        for f in forms:
            assert f.discriminant() == -D
            assert -f.a < f.b <= f.a <= f.c
            assert not (f.a == f.c and f.b < 0)


def test_reduced_forms_rejects():
    with pytest.raises(ValueError):
        reduced_forms(0)
    with pytest.raises(ValueError):
        reduced_forms(-3)
    with pytest.raises(HypothesisViolation):
        reduced_forms(5)
    with pytest.raises(HypothesisViolation):
        reduced_forms(6)


def _gauss_reduce(a, b, c):
    """Textbook reduction by translations and flips; independent of the
    sweep in reduced_forms."""
    assert a > 0 and 4 * a * c - b * b > 0
    while True:
        k = (a - b) // (2 * a)  # shift b into (-a, a]
        if k:
            b, c = b + 2 * a * k, a * k * k + b * k + c
        if c < a or (c == a and b < 0):
            a, b, c = c, -b, a
            continue
        return a, b, c


def test_reduction_oracle_transversal():
    # reduced_forms must list exactly one representative per class: every
    # listed form is a reduction fixed point, every brute-enumerated form
    # of the discriminant reduces to a listed one, and random unimodular
    # images reduce back to their source form
    rng = random.Random(7)
    for D in (3, 4, 12, 35, 63, 84, 91, 308, 756):
        forms = reduced_forms(D)
        listed = {(f.a, f.b, f.c) for f in forms}
        for f in forms:
            assert _gauss_reduce(f.a, f.b, f.c) == tuple(f)
        for a in range(1, 15):
            for b in range(-20, 21):
                num = b * b + D
                if num % (4 * a):
                    continue
                c = num // (4 * a)
                assert _gauss_reduce(a, b, c) in listed
        for f in forms:
            for _ in range(20):
                a, b, c = f
                for _ in range(6):
                    if rng.random() < 0.5:
                        k = rng.randint(-4, 4)
                        b, c = b + 2 * a * k, a * k * k + b * k + c
                    else:
                        a, b, c = c, -b, a
                assert _gauss_reduce(a, b, c) == tuple(f)


def test_hurwitz_golden_values():
    assert hurwitz(3) == Fraction(1, 3)
    assert hurwitz(4) == Fraction(1, 2)
    assert hurwitz(12) == Fraction(4, 3)
    assert hurwitz(35) == 2
    assert hurwitz(63) == 5
    assert hurwitz(84) == 4
    assert hurwitz(91) == 2
    assert hurwitz(308) == 8
    assert hurwitz(756) == 16
    assert hurwitz(20475) == 50


def test_hurwitz_kronecker_relation():
    # sum over t^2 <= 4n of H(4n - t^2) equals 2 sigma1(n) minus the sum
    # of min(d, n/d) over divisors, with H(0) = -1/12.  Strong independent
    # check, and it exercises non-fundamental arguments too.
    for n in range(1, 61):
        total = Fraction(0)
        for t in range(-2 * isqrt(n) - 2, 2 * isqrt(n) + 3):
            r = 4 * n - t * t
            if r < 0:
                continue
            total += Fraction(-1, 12) if r == 0 else hurwitz(r)
        assert total == 2 * sum(divisors(n)) - sum(min(d, n // d) for d in divisors(n))


def test_hurwitz_denominator_divides_six():
    for D in range(3, 201):
        if D % 4 in (0, 3):
            value = hurwitz(D)
            assert value > 0
            assert 6 % value.denominator == 0


def test_hurwitz_adjusted():
    assert hurwitz_adjusted(7) == 1
    assert hurwitz_adjusted(77) == hurwitz(308)
    assert hurwitz_adjusted(3) == hurwitz(3)
    assert hurwitz_adjusted(1) == hurwitz(4)
    assert hurwitz_adjusted(2) == hurwitz(8)
    with pytest.raises(ValueError):
        hurwitz_adjusted(0)


def test_dirichlet_matches_forms():
    for D in range(3, 301):
        if is_fundamental(-D):
            assert dirichlet_hurwitz(D) == hurwitz(D)


def test_dirichlet_rejects_nonfundamental():
    for D in (12, 63, 756):
        with pytest.raises(HypothesisViolation):
            dirichlet_hurwitz(D)
    with pytest.raises(HypothesisViolation):
        dirichlet_hurwitz(-3)


def test_hurwitz_scaled_matches_direct():
    # the scaling identity holds for any f >= 1, even f included
    for D in (3, 4, 7, 8, 84, 91):
        for f in range(1, 10):
            assert hurwitz_scaled(D, f) == hurwitz(D * f * f)


def test_hurwitz_scaled_rejects():
    with pytest.raises(HypothesisViolation):
        hurwitz_scaled(12, 3)
    with pytest.raises(ValueError):
        hurwitz_scaled(3, 0)
