"""Machine verification of the symbolic identities behind the denominators.

Four exact polynomial identities justify how the singularity classifier and
the coefficient formulas fit together:

  1. the six-term shared denominator of the three simplest formulas factors
     into the two curve factors;
  2. consequently the full product of all denominator factors equals the
     collapsed form with the curve factors cubed;
  3. the quartic factor, viewed as a quadratic in b, has discriminant
     -4 (c-1)^2 (c-2)^2 c^2;
  4. the quartic factor equals (c-1)^2 (c-2)^2 b^2 + c^2, the sum-of-squares
     form that pins its only rational zero to the origin.

Each check expands both sides with exact integer arithmetic and compares
canonical forms, so a pass is a proof of the identity, not a sampling
argument.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import B, C, IntPoly2, discriminant_in_b
from .coefficients import SHARED_DENOMINATOR_POLY
from .singularity import FIRST_CURVE_POLY, QUARTIC_POLY, SECOND_CURVE_POLY


@dataclass(frozen=True)
class IdentityResult:
    name: str
    passed: bool
    difference: IntPoly2  # left minus right; zero when passed

    @property
    def detail(self) -> str:
        return "0" if self.passed else str(self.difference)


def run_identity_checks(
    overrides: dict[str, IntPoly2] | None = None,
) -> list[IdentityResult]:
    """Run all four identity checks and report each one.

    ``overrides`` replaces named inputs (first_curve, second_curve, quartic,
    shared_denominator) before checking; tests use it as a negative control
    to prove the checks can fail loudly.
    """
    overrides = overrides or {}
    f1 = overrides.get("first_curve", FIRST_CURVE_POLY)
    f2 = overrides.get("second_curve", SECOND_CURVE_POLY)
    quart = overrides.get("quartic", QUARTIC_POLY)
    shared = overrides.get("shared_denominator", SHARED_DENOMINATOR_POLY)

    results = []

    def record(name: str, left: IntPoly2, right: IntPoly2) -> None:
        diff = left - right
        results.append(IdentityResult(name, diff.is_zero(), diff))

    record("shared-denominator-factors", f1 * f2, shared)
    record(
        "denominator-reduction",
        quart * f1**2 * f2**2 * shared,
        quart * f1**3 * f2**3,
    )
    record(
        "quartic-discriminant",
        discriminant_in_b(quart),
        -4 * (C - 1) ** 2 * (C - 2) ** 2 * C**2,
    )
    record(
        "quartic-sum-of-squares",
        quart,
        (C - 1) ** 2 * (C - 2) ** 2 * B**2 + C**2,
    )
    return results


def all_identities_hold() -> bool:
    return all(result.passed for result in run_identity_checks())
