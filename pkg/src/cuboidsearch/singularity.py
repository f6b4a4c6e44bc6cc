"""Classification of parameter points against the three singular subvarieties.

The reduced common denominator of the coefficient formulas factors into
three pieces: two rational curves (each linear in b) and one quartic-in-c
factor that is quadratic in b.  A parameter pair (b, c) is singular exactly
when one of those factors vanishes there.  Over the rationals the quartic
factor vanishes only at the origin, because it can be rewritten as
(c-1)^2 (c-2)^2 b^2 + c^2, a sum of squares; that rewriting is one of the
machine-checked identities (see the identities module).
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .bipoly import B, C, IntPoly2


class SingularFlag(enum.Enum):
    """Which denominator factor vanishes at a point."""

    FIRST_CURVE = "FirstCurve"
    SECOND_CURVE = "SecondCurve"
    THIRD_VARIETY = "ThirdVariety"


# frozenset of SingularFlag; empty means nonsingular
SingularityClass = frozenset

NONSINGULAR: SingularityClass = frozenset()


class PoleError(ZeroDivisionError):
    """A curve parametrization was evaluated at the pole of its chart.

    Distinct from singularity of the inverse problems: the pole is an
    artifact of solving the curve equation for b.
    """


# Symbolic forms of the three factors, used by the identity checks and by
# test oracles.  The fast paths below evaluate the same expressions inline.
FIRST_CURVE_POLY = B * C - 1 - B
SECOND_CURVE_POLY = B * C - C - 2 * B
QUARTIC_POLY: IntPoly2 = (
    B**2 * C**4 - 6 * B**2 * C**3 + 13 * B**2 * C**2 - 12 * B**2 * C + 4 * B**2 + C**2
)


def first_curve_value(b: Fraction, c: Fraction) -> Fraction:
    return b * c - 1 - b


def second_curve_value(b: Fraction, c: Fraction) -> Fraction:
    return b * c - c - 2 * b


def quartic_value(b: Fraction, c: Fraction) -> Fraction:
    b2 = b * b
    return b2 * c**4 - 6 * b2 * c**3 + 13 * b2 * c * c - 12 * b2 * c + 4 * b2 + c * c


def factor_values(b: Fraction, c: Fraction) -> tuple[Fraction, Fraction, Fraction]:
    """Values of the three reduced denominator factors at (b, c)."""
    return (first_curve_value(b, c), second_curve_value(b, c), quartic_value(b, c))


def classify(b: Fraction, c: Fraction, recheck_quartic: bool = False) -> SingularityClass:
    """Flags of the denominator factors vanishing at (b, c); empty = nonsingular.

    The third-variety test uses its closed-form rational point list (the
    origin only) instead of evaluating the quartic factor, which keeps the
    search hot path cheap.  With recheck_quartic=True the quartic is also
    evaluated and cross-checked, for debugging and grid tests.
    """
    flags = set()
    if first_curve_value(b, c) == 0:
        flags.add(SingularFlag.FIRST_CURVE)
    if second_curve_value(b, c) == 0:
        flags.add(SingularFlag.SECOND_CURVE)
    on_third = b == 0 and c == 0
    if on_third:
        flags.add(SingularFlag.THIRD_VARIETY)
    if recheck_quartic and (quartic_value(b, c) == 0) != on_third:
        raise AssertionError(
            f"closed-form third-variety test disagrees with the quartic at ({b}, {c})"
        )
    return frozenset(flags)


def first_curve_b(c: Fraction) -> Fraction:
    """The unique b putting (b, c) on the first singular curve: b = 1/(c-1)."""
    if c == 1:
        raise PoleError("the first curve has no point over c = 1")
    return 1 / (c - 1)


def second_curve_b(c: Fraction) -> Fraction:
    """The unique b putting (b, c) on the second singular curve: b = c/(c-2)."""
    if c == 2:
        raise PoleError("the second curve has no point over c = 2")
    return c / (c - 2)


def third_variety_points() -> list[tuple[Fraction, Fraction]]:
    """All rational points of the quartic factor: just the origin.

    Complete because the factor equals (c-1)^2 (c-2)^2 b^2 + c^2, which is a
    sum of squares vanishing over the rationals only at b = c = 0.
    """
    return [(Fraction(0), Fraction(0))]
