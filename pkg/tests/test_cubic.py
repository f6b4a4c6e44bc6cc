import math
import random
from fractions import Fraction
from itertools import combinations_with_replacement

import pytest

from cuboidsearch.cubic import (
    CubicPoly,
    discriminant,
    divisors,
    factorize,
    is_perfect_square,
    is_rational_square,
    rational_roots,
)

F = Fraction


def cubic_from_roots(r1, r2, r3):
    """Monic cubic with the given roots, by elementary symmetric functions."""
    return CubicPoly(-(r1 + r2 + r3), r1 * r2 + r1 * r3 + r2 * r3, -(r1 * r2 * r3))


def cubic_value(q, x):
    return x**3 + q.c2 * x * x + q.c1 * x + q.c0


# --- independent brute-force oracle ----------------------------------------


def naive_divisors(n):
    n = abs(n)
    out = []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            out.append(d)
            out.append(n // d)
    return sorted(set(out))


def oracle_full_split(q):
    """Brute force: try every rational-root-theorem candidate in every slot.

    Clears denominators naively and collects all candidate roots that
    actually vanish.  A zero constant term means 0 is a root and the
    candidate set comes from the lowest nonzero coefficient (the theorem
    applies to the polynomial with the x-power factored out).  Accepts any
    multiset of three vanishing candidates matching the coefficients by the
    symmetric-function relations.  Shares no code with the production
    solver.
    """
    lcm = 1
    for coeff in q:
        lcm = lcm * coeff.denominator // math.gcd(lcm, coeff.denominator)
    low_to_high = [int(q.c0 * lcm), int(q.c1 * lcm), int(q.c2 * lcm), lcm]
    low = 0
    while low_to_high[low] == 0:
        low += 1
    candidates = {F(0)} if low > 0 else set()
    for p in naive_divisors(low_to_high[low]):
        for s in naive_divisors(lcm):
            candidates.add(F(p, s))
            candidates.add(F(-p, s))
    actual_roots = [r for r in candidates if cubic_value(q, r) == 0]
    for combo in combinations_with_replacement(sorted(actual_roots), 3):
        r1, r2, r3 = combo
        if (
            r1 + r2 + r3 == -q.c2
            and r1 * r2 + r1 * r3 + r2 * r3 == q.c1
            and r1 * r2 * r3 == -q.c0
        ):
            return combo
    return None


# --- discriminant -----------------------------------------------------------


def test_discriminant_examples():
    assert discriminant(CubicPoly(F(-6), F(11), F(-6))) == 4
    assert discriminant(CubicPoly(F(0), F(0), F(0))) == 0
    assert discriminant(CubicPoly(F(0), F(-1), F(0))) == 4


def test_discriminant_equals_squared_root_differences():
    rng = random.Random(5)
    for _ in range(200):
        roots = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(3)]
        q = cubic_from_roots(*roots)
        expected = (
            (roots[0] - roots[1]) ** 2
            * (roots[0] - roots[2]) ** 2
            * (roots[1] - roots[2]) ** 2
        )
        assert discriminant(q) == expected


# --- squares ----------------------------------------------------------------


def test_is_rational_square_examples():
    assert is_rational_square(F(9, 4)) == F(3, 2)
    assert is_rational_square(F(2)) is None
    assert is_rational_square(F(0)) == 0
    assert is_rational_square(F(-4)) is None
    assert is_rational_square(F(63, 256)) is None


def test_is_perfect_square_large():
    n = 10**40 + 2 * 10**20 + 1  # (10^20 + 1)^2
    assert is_perfect_square(n) == 10**20 + 1
    assert is_perfect_square(n + 1) is None
    assert is_perfect_square(-1) is None


# --- factorization helpers ---------------------------------------------------


def test_factorize_small():
    assert factorize(1) == {}
    assert factorize(12) == {2: 2, 3: 1}
    assert factorize(97) == {97: 1}
    assert factorize(2 * 3 * 5 * 7 * 11 * 13) == {2: 1, 3: 1, 5: 1, 7: 1, 11: 1, 13: 1}


def test_factorize_beyond_trial_division():
    # both primes exceed the trial-division limit, forcing the rho fallback
    p, q = 10000019, 10000079
    assert factorize(p * q) == {p: 1, q: 1}
    assert factorize(p * p) == {p: 2}


def test_divisors_sorted_complete():
    assert divisors(1) == [1]
    assert divisors(36) == [1, 2, 3, 4, 6, 9, 12, 18, 36]


# --- rational_roots ----------------------------------------------------------


def test_roots_from_vieta_construction():
    q = cubic_from_roots(F(1, 4), F(1, 3), F(1, 2))
    assert q == CubicPoly(F(-13, 12), F(3, 8), F(-1, 24))
    assert rational_roots(q) == (F(1, 4), F(1, 3), F(1, 2))


def test_no_rational_cube_root_of_two():
    assert rational_roots(CubicPoly(F(0), F(0), F(-2))) is None


def test_partial_splitting_rejected():
    # x^3 - x^2 + x - 1 = (x - 1)(x^2 + 1): one rational root is not enough
    assert rational_roots(CubicPoly(F(-1), F(1), F(-1))) is None


def test_square_discriminant_without_rational_roots():
    # x^3 - 3x + 1 has discriminant 81 but its roots are irrational
    q = CubicPoly(F(0), F(-3), F(1))
    assert is_rational_square(discriminant(q)) == 9
    assert rational_roots(q) is None


def test_repeated_roots_returned_with_multiplicity():
    assert rational_roots(cubic_from_roots(F(2), F(2), F(2))) == (F(2), F(2), F(2))
    assert rational_roots(cubic_from_roots(F(-1), F(-1), F(3))) == (F(-1), F(-1), F(3))


def test_zero_root_returned():
    assert rational_roots(CubicPoly(F(-1), F(0), F(0))) == (F(0), F(0), F(1))


def test_recovery_of_constructed_roots():
    rng = random.Random(7)
    for _ in range(300):
        roots = sorted(F(rng.randint(-50, 50), rng.randint(1, 50)) for _ in range(3))
        q = cubic_from_roots(*roots)
        # the square prefilter must never lose a constructed instance
        assert is_rational_square(discriminant(q)) is not None
        found = rational_roots(q)
        assert found == tuple(roots)
        for r in found:
            assert cubic_value(q, r) == 0


def test_agreement_with_brute_force_oracle():
    rng = random.Random(8)
    for _ in range(300):
        q = CubicPoly(
            F(rng.randint(-30, 30), rng.randint(1, 12)),
            F(rng.randint(-30, 30), rng.randint(1, 12)),
            F(rng.randint(-30, 30), rng.randint(1, 12)),
        )
        assert rational_roots(q) == oracle_full_split(q)


def test_determinism():
    q = cubic_from_roots(F(5, 7), F(-3, 2), F(8))
    first = rational_roots(q)
    for _ in range(5):
        assert rational_roots(q) == first


def test_roots_sorted_ascending():
    found = rational_roots(cubic_from_roots(F(9), F(-2, 3), F(1, 5)))
    assert found == (F(-2, 3), F(1, 5), F(9))
