"""Exact evaluation of the nine coefficient formulas at a rational point.

The two cubics of the inverse problem and the right-hand sides of its three
auxiliary equations are rational functions of the parameters (b, c).  This
module evaluates all nine of them with exact rational arithmetic, refusing
points where a denominator vanishes.

Every formula is implemented twice, from independent transcriptions:

  * the direct path (`eval_coefficients`) evaluates each formula in its
    nested-product shape straight in Fractions — the production path;
  * the cleared path (`eval_coefficients_cleared`) re-enters each formula
    as a single numerator/denominator pair of integer polynomials.

Agreement of the two paths on random nonsingular points is a standing test
guarding against transcription typos.

One ambiguity is kept configurable rather than resolved: the e21 formula
exists in two denominator variants, selected by ``e21_form``.  The
"printed" variant carries an extra -4c^3 term inside its quartic factor;
the "common" variant uses the same quartic factor as every other formula.
The extra term gives the printed variant zeros away from the singular set
— e.g. at (0, 1/4) — and evaluation there raises E21DenominatorPole.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .bipoly import B, C, IntPoly2
from .cubic import CubicPoly
from .singularity import SingularityClass, classify

E21_PRINTED = "printed"
E21_COMMON = "common"
E21_FORMS = (E21_PRINTED, E21_COMMON)


class Params(NamedTuple):
    """A rational parameter point of the inverse problems."""

    b: Fraction
    c: Fraction


class CoefficientSet(NamedTuple):
    """The nine coefficient values at a nonsingular point.

    e10, e20, e30 build the edge cubic, e01, e02, e03 the diagonal cubic,
    and e21, e11, e12 are the auxiliary-equation right-hand sides.
    """

    e10: Fraction
    e20: Fraction
    e30: Fraction
    e01: Fraction
    e02: Fraction
    e03: Fraction
    e21: Fraction
    e11: Fraction
    e12: Fraction


class SingularPoint(ValueError):
    """Coefficient evaluation was attempted at a singular parameter point."""

    def __init__(self, b: Fraction, c: Fraction, flags: SingularityClass):
        self.b = b
        self.c = c
        self.flags = flags
        names = ", ".join(sorted(flag.value for flag in flags))
        super().__init__(f"({b}, {c}) is singular: {names}")


class E21DenominatorPole(ZeroDivisionError):
    """The printed-form e21 denominator vanished at a nonsingular point.

    Only the printed form can raise this: its extra -4c^3 term gives the
    e21 denominator zeros that the singularity classifier (correctly) does
    not flag.  The first eight coefficients are still well defined there.
    """

    def __init__(self, b: Fraction, c: Fraction):
        self.b = b
        self.c = c
        super().__init__(
            f"printed e21 denominator vanishes at nonsingular point ({b}, {c})"
        )


def _check_form(e21_form: str) -> None:
    if e21_form not in E21_FORMS:
        raise ValueError(f"e21_form must be one of {E21_FORMS}, got {e21_form!r}")


def e21_printed_extra_value(b: Fraction, c: Fraction) -> Fraction:
    """The printed e21 quartic factor: vanishing marks the printed form's poles."""
    b2 = b * b
    c2 = c * c
    c3 = c2 * c
    return b2 * c3 * c - 6 * b2 * c3 + 13 * b2 * c2 - 12 * b2 * c - 4 * c3 + 4 * b2 + c2


def eval_coefficients(b: Fraction, c: Fraction, e21_form: str = E21_PRINTED) -> CoefficientSet:
    """All nine coefficients at (b, c), each an exact reduced Fraction.

    Raises SingularPoint if any reduced denominator factor vanishes, and
    E21DenominatorPole at the printed form's extra zeros (see module docs).
    """
    flags = classify(b, c)
    if flags:
        raise SingularPoint(b, c, flags)
    return eval_coefficients_unchecked(b, c, e21_form)


def eval_coefficients_unchecked(b: Fraction, c: Fraction, e21_form: str) -> CoefficientSet:
    """Direct-path evaluation without the singularity precheck.

    For callers that have already classified the point (the verifier
    pipeline classifies once and must not pay for it twice).  Behavior at
    singular points is undefined.
    """
    _check_form(e21_form)
    b2 = b * b
    b3 = b2 * b
    b4 = b3 * b
    c2 = c * c
    c3 = c2 * c
    c4 = c3 * c
    c5 = c4 * c
    c6 = c5 * c
    c7 = c6 * c
    c8 = c7 * c

    f1 = b * c - 1 - b
    f2 = b * c - c - 2 * b
    curves_sq = f1 * f1 * f2 * f2
    shared = b2 * c2 + 2 * b2 - 3 * b2 * c + c - b * c2 + 2 * b
    quart = b2 * c4 - 6 * b2 * c3 + 13 * b2 * c2 - 12 * b2 * c + 4 * b2 + c2

    e11 = -(b * (c2 + 2 - 4 * c)) / shared
    e10 = -(b2 * c2 + 2 * b2 - 3 * b2 * c - c) / shared
    e01 = -(b * (c2 + 2 - 2 * c)) / shared
    e20 = (
        b * (b * c2 - 2 * c - 2 * b) * (2 * b * c2 - c2 - 6 * b * c + 2 + 4 * b)
    ) / (2 * curves_sq)
    e02 = (
        28 * b2 * c2 - 16 * b2 * c - 2 * c2 - 4 * b2 - b2 * c4
        + 4 * b3 * c4 - 12 * b3 * c3 + 4 * b * c3 + 24 * b3 * c
        - 8 * b * c - 2 * b4 * c4 + 12 * b4 * c3 - 26 * b4 * c2
        - 8 * b2 * c3 + 24 * b4 * c - 16 * b3 - 8 * b4
    ) / (2 * curves_sq)
    e30 = (
        c * b2 * (1 - c) * (c - 2)
        * (b * c2 - 4 * b * c + 2 + 4 * b)
        * (2 * b * c2 - c2 - 4 * b * c + 2 * b)
    ) / (quart * curves_sq)
    e03 = (
        b
        * (b2 * c4 - 5 * b2 * c3 + 10 * b2 * c2 - 10 * b2 * c + 4 * b2
           + 2 * b * c + 2 * c2 - b * c3)
        * (2 * b2 * c4 - 12 * b2 * c3 + 26 * b2 * c2 - 24 * b2 * c + 8 * b2
           - c4 * b + 3 * b * c3 - 6 * b * c + 4 * b + c3 - 2 * c2 + 2 * c)
    ) / (2 * quart * curves_sq)

    e21_quart = quart - 4 * c3 if e21_form == E21_PRINTED else quart
    if e21_quart == 0:
        raise E21DenominatorPole(b, c)
    e21 = (
        b
        * (5 * c6 * b - 2 * c6 * b2 + 52 * c5 * b2 - 16 * c5 * b
           - 2 * c7 * b2 + 2 * b4 * c8 - 26 * b4 * c7 - 426 * b4 * c5
           - 61 * b3 * c6 + 100 * b3 * c5 + 14 * c7 * b3 - c8 * b3
           - 20 * b * c2 - 8 * b2 * c2 - 16 * b2 * c - 128 * b2 * c4
           - 200 * b3 * c3 + 244 * b3 * c2 + 32 * b * c3 + 768 * b4 * c4
           - 852 * b4 * c3 + 568 * b4 * c2 + 104 * b2 * c3 - 208 * b4 * c
           + 8 * c4 + 16 * b3 - 112 * b3 * c + 142 * b4 * c6 + 32 * b4 - 2 * c5)
    ) / (2 * e21_quart * curves_sq)
    e12 = (
        16 * b**6 + 32 * b**5 - 6 * c5 * b2 + 2 * c5 * b - 62 * b**5 * c6
        + 62 * b**6 * c6 + 16 * b4 - 180 * b**6 * c5 - c7 * b3 + 18 * b**5 * c7
        - 12 * b**6 * c7 - 2 * b**5 * c8 + b**6 * c8 + 248 * b**5 * c2
        + 248 * b**6 * c2 - 96 * b**6 * c + 321 * b**6 * c4 - 180 * b**5 * c3
        - 144 * b**5 * c - 360 * b**6 * c3 + b4 * c8 + 8 * b4 * c6
        - 6 * b4 * c7 + 18 * b4 * c5 + 7 * b3 * c6 + 90 * b**5 * c5
        - 14 * b3 * c5 + 17 * b2 * c4 + 32 * b4 * c2 + 28 * b3 * c3
        - 28 * b3 * c2 - 4 * b * c3 + 8 * b3 * c - 57 * b4 * c4
        + 36 * b4 * c3 - 12 * b2 * c3 - 48 * b4 * c - c4
    ) / (quart * curves_sq)

    return CoefficientSet(e10, e20, e30, e01, e02, e03, e21, e11, e12)


# --- cleared-fraction path: each formula as one polynomial fraction -------
#
# Re-entered independently of the direct path above.  Factors below are
# deliberately retranscribed rather than imported from the singularity
# module, so a typo in either location is caught by the identity checks
# and the path-agreement tests.

SHARED_DENOMINATOR_POLY: IntPoly2 = (
    B**2 * C**2 + 2 * B**2 - 3 * B**2 * C + C - B * C**2 + 2 * B
)

_F1 = B * C - 1 - B
_F2 = B * C - C - 2 * B
_F2_ALT = -C + B * C - 2 * B  # spelling used by two of the formulas; same polynomial
_QUART = B**2 * C**4 - 6 * B**2 * C**3 + 13 * B**2 * C**2 - 12 * B**2 * C + 4 * B**2 + C**2
_E21_QUART_PRINTED = (
    B**2 * C**4 - 6 * B**2 * C**3 + 13 * B**2 * C**2 - 12 * B**2 * C
    - 4 * C**3 + 4 * B**2 + C**2
)
_CURVES_SQ = _F1**2 * _F2**2

_E11_NUM = -(B * (C**2 + 2 - 4 * C))
_E10_NUM = -(B**2 * C**2 + 2 * B**2 - 3 * B**2 * C - C)
_E01_NUM = -(B * (C**2 + 2 - 2 * C))
_E20_NUM = B * (B * C**2 - 2 * C - 2 * B) * (2 * B * C**2 - C**2 - 6 * B * C + 2 + 4 * B)
_E20_DEN = 2 * _CURVES_SQ
_E02_NUM = (
    28 * B**2 * C**2 - 16 * B**2 * C - 2 * C**2 - 4 * B**2 - B**2 * C**4
    + 4 * B**3 * C**4 - 12 * B**3 * C**3 + 4 * B * C**3 + 24 * B**3 * C
    - 8 * B * C - 2 * B**4 * C**4 + 12 * B**4 * C**3 - 26 * B**4 * C**2
    - 8 * B**2 * C**3 + 24 * B**4 * C - 16 * B**3 - 8 * B**4
)
_E02_DEN = 2 * _CURVES_SQ
_E30_NUM = (
    C * B**2 * (1 - C) * (C - 2)
    * (B * C**2 - 4 * B * C + 2 + 4 * B)
    * (2 * B * C**2 - C**2 - 4 * B * C + 2 * B)
)
_E30_DEN = _QUART * _F1**2 * _F2_ALT**2
_E03_NUM = B * (
    B**2 * C**4 - 5 * B**2 * C**3 + 10 * B**2 * C**2 - 10 * B**2 * C + 4 * B**2
    + 2 * B * C + 2 * C**2 - B * C**3
) * (
    2 * B**2 * C**4 - 12 * B**2 * C**3 + 26 * B**2 * C**2 - 24 * B**2 * C + 8 * B**2
    - C**4 * B + 3 * B * C**3 - 6 * B * C + 4 * B + C**3 - 2 * C**2 + 2 * C
)
_E03_DEN = 2 * _QUART * _F1**2 * _F2_ALT**2
_E21_NUM = B * (
    5 * C**6 * B - 2 * C**6 * B**2 + 52 * C**5 * B**2 - 16 * C**5 * B
    - 2 * C**7 * B**2 + 2 * B**4 * C**8 - 26 * B**4 * C**7 - 426 * B**4 * C**5
    - 61 * B**3 * C**6 + 100 * B**3 * C**5 + 14 * C**7 * B**3 - C**8 * B**3
    - 20 * B * C**2 - 8 * B**2 * C**2 - 16 * B**2 * C - 128 * B**2 * C**4
    - 200 * B**3 * C**3 + 244 * B**3 * C**2 + 32 * B * C**3 + 768 * B**4 * C**4
    - 852 * B**4 * C**3 + 568 * B**4 * C**2 + 104 * B**2 * C**3 - 208 * B**4 * C
    + 8 * C**4 + 16 * B**3 - 112 * B**3 * C + 142 * B**4 * C**6 + 32 * B**4 - 2 * C**5
)
_E21_DEN_PRINTED = 2 * _E21_QUART_PRINTED * _F1**2 * _F2**2
_E21_DEN_COMMON = 2 * _QUART * _F1**2 * _F2**2
_E12_NUM = (
    16 * B**6 + 32 * B**5 - 6 * C**5 * B**2 + 2 * C**5 * B - 62 * B**5 * C**6
    + 62 * B**6 * C**6 + 16 * B**4 - 180 * B**6 * C**5 - C**7 * B**3
    + 18 * B**5 * C**7 - 12 * B**6 * C**7 - 2 * B**5 * C**8 + B**6 * C**8
    + 248 * B**5 * C**2 + 248 * B**6 * C**2 - 96 * B**6 * C + 321 * B**6 * C**4
    - 180 * B**5 * C**3 - 144 * B**5 * C - 360 * B**6 * C**3 + B**4 * C**8
    + 8 * B**4 * C**6 - 6 * B**4 * C**7 + 18 * B**4 * C**5 + 7 * B**3 * C**6
    + 90 * B**5 * C**5 - 14 * B**3 * C**5 + 17 * B**2 * C**4 + 32 * B**4 * C**2
    + 28 * B**3 * C**3 - 28 * B**3 * C**2 - 4 * B * C**3 + 8 * B**3 * C
    - 57 * B**4 * C**4 + 36 * B**4 * C**3 - 12 * B**2 * C**3 - 48 * B**4 * C - C**4
)
_E12_DEN = _QUART * _F1**2 * _F2**2

_CLEARED = {
    "e10": (_E10_NUM, SHARED_DENOMINATOR_POLY),
    "e20": (_E20_NUM, _E20_DEN),
    "e30": (_E30_NUM, _E30_DEN),
    "e01": (_E01_NUM, SHARED_DENOMINATOR_POLY),
    "e02": (_E02_NUM, _E02_DEN),
    "e03": (_E03_NUM, _E03_DEN),
    "e11": (_E11_NUM, SHARED_DENOMINATOR_POLY),
    "e12": (_E12_NUM, _E12_DEN),
}


def eval_coefficients_cleared(
    b: Fraction, c: Fraction, e21_form: str = E21_PRINTED
) -> CoefficientSet:
    """Second, independently transcribed path: one cleared fraction per formula."""
    _check_form(e21_form)
    flags = classify(b, c)
    if flags:
        raise SingularPoint(b, c, flags)
    values = {}
    for name, (num, den) in _CLEARED.items():
        values[name] = num.eval(b, c) / den.eval(b, c)
    e21_den = _E21_DEN_PRINTED if e21_form == E21_PRINTED else _E21_DEN_COMMON
    e21_den_value = e21_den.eval(b, c)
    if e21_den_value == 0:
        raise E21DenominatorPole(b, c)
    values["e21"] = _E21_NUM.eval(b, c) / e21_den_value
    return CoefficientSet(**values)


def edge_cubic(cs: CoefficientSet) -> CubicPoly:
    """Monic cubic whose roots are the candidate edges: x^3 - e10 x^2 + e20 x - e30."""
    return CubicPoly(-cs.e10, cs.e20, -cs.e30)


def diagonal_cubic(cs: CoefficientSet) -> CubicPoly:
    """Monic cubic whose roots are the candidate face diagonals."""
    return CubicPoly(-cs.e01, cs.e02, -cs.e03)
