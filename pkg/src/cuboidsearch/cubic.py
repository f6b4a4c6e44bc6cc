"""Exact detection and extraction of full rational root triples of monic cubics.

The search pipeline asks one question per candidate point, twice: does a
monic cubic with rational coefficients split completely over the rationals,
and if so into which roots?  The answer is computed exactly:

  1. prefilter: the discriminant must be the square of a rational, since
     for a fully split cubic it equals the squared product of root
     differences.  Almost every candidate dies here, on a cheap integer
     perfect-square test, before any factoring work.
  2. clear denominators to a primitive integer cubic.
  3. find one root among the finitely many p/q with p | a0 and q | a3,
     tried in increasing height.
  4. deflate and solve the remaining quadratic exactly.

No floating point is used anywhere.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import NamedTuple, Optional

TRIAL_DIVISION_LIMIT = 10**6


class CubicPoly(NamedTuple):
    """Monic cubic x^3 + c2*x^2 + c1*x + c0 with rational coefficients."""

    c2: Fraction
    c1: Fraction
    c0: Fraction


# A fully split cubic's roots, as a sorted ascending triple (multiset).
RootTriple = tuple


def discriminant(q: CubicPoly) -> Fraction:
    """Discriminant of the monic cubic; equals prod (r_i - r_j)^2 over roots."""
    c2, c1, c0 = q
    return (
        18 * c2 * c1 * c0
        - 4 * c2**3 * c0
        + c2 * c2 * c1 * c1
        - 4 * c1**3
        - 27 * c0 * c0
    )


def is_perfect_square(n: int) -> Optional[int]:
    """Integer square root of n if n is a perfect square, else None."""
    if n < 0:
        return None
    root = math.isqrt(n)
    return root if root * root == n else None


def is_rational_square(r: Fraction) -> Optional[Fraction]:
    """Nonnegative rational square root of r if one exists, else None.

    A reduced fraction is a rational square exactly when numerator and
    denominator are both perfect integer squares.
    """
    if r < 0:
        return None
    num_root = is_perfect_square(r.numerator)
    if num_root is None:
        return None
    den_root = is_perfect_square(r.denominator)
    if den_root is None:
        return None
    return Fraction(num_root, den_root)


# --- integer factorization: trial division with a Pollard-rho fallback ---

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        x = rng.randrange(2, n)
        y = x
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of n >= 1 as {prime: exponent}."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    # wheel over 6k +/- 1 up to the trial division limit
    p = 7
    step = 4
    while p * p <= n and p <= TRIAL_DIVISION_LIMIT:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += step
        step = 6 - step
    if n == 1:
        return factors
    if p * p > n or _is_probable_prime(n):
        factors[n] = factors.get(n, 0) + 1
        return factors
    stack = [n]
    while stack:
        m = stack.pop()
        if _is_probable_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return factors


def divisors(n: int) -> list[int]:
    """All positive divisors of n >= 1, ascending."""
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _clear_to_integer_cubic(q: CubicPoly) -> tuple[int, int, int, int]:
    """Primitive integer form a3*x^3 + a2*x^2 + a1*x + a0 with a3 > 0."""
    lcm = 1
    for coeff in q:
        lcm = lcm * coeff.denominator // math.gcd(lcm, coeff.denominator)
    a3 = lcm
    a2 = q.c2.numerator * (lcm // q.c2.denominator)
    a1 = q.c1.numerator * (lcm // q.c1.denominator)
    a0 = q.c0.numerator * (lcm // q.c0.denominator)
    content = math.gcd(math.gcd(a3, a2), math.gcd(a1, a0))
    return a3 // content, a2 // content, a1 // content, a0 // content


def _first_rational_root(a3: int, a2: int, a1: int, a0: int) -> Optional[Fraction]:
    """Lowest-height rational root of the integer cubic, or None.

    Candidates are p/q with p | a0, q | a3 (rational root theorem), both
    signs, tested in increasing height so the returned root is canonical.
    """
    if a0 == 0:
        return Fraction(0)
    nums = divisors(abs(a0))
    dens = divisors(a3)
    candidates = [
        (max(p, q), q, p)
        for p in nums
        for q in dens
        if math.gcd(p, q) == 1
    ]
    candidates.sort()
    for _, q, p in candidates:
        q2 = q * q
        q3 = q2 * q
        # Horner in homogeneous form keeps everything in integers.
        pos = ((a3 * p + a2 * q) * p + a1 * q2) * p + a0 * q3
        if pos == 0:
            return Fraction(p, q)
        neg = ((-a3 * p + a2 * q) * p - a1 * q2) * p + a0 * q3
        if neg == 0:
            return Fraction(-p, q)
    return None


def rational_roots(q: CubicPoly) -> Optional[RootTriple]:
    """All three roots if the cubic splits completely over the rationals.

    Returns a sorted ascending triple (a multiset: repeated roots appear
    with multiplicity), or None when the cubic does not fully split.
    Deterministic: equal inputs give bit-identical outputs.
    """
    if is_rational_square(discriminant(q)) is None:
        return None
    a3, a2, a1, a0 = _clear_to_integer_cubic(q)
    first = _first_rational_root(a3, a2, a1, a0)
    if first is None:
        return None
    # q(x) = (x - r)(x^2 + p*x + s) by synthetic division
    p = q.c2 + first
    s = q.c1 + first * p
    quad_disc = p * p - 4 * s
    root = is_rational_square(quad_disc)
    if root is None:
        return None
    second = (-p + root) / 2
    third = (-p - root) / 2
    return tuple(sorted((first, second, third)))
