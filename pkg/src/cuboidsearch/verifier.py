"""Graded verification of candidate parameter points.

A candidate point is pushed through a pipeline of increasingly demanding
exact checks, and the verdict records how deep it got:

  level 0  singular point, or the edge cubic's discriminant is not a
           rational square
  level 1  edge-cubic discriminant is a rational square
  level 2  edge cubic splits completely over the rationals
  level 3  all edge roots are positive
  level 4  diagonal cubic splits with all roots positive
  level 5  some pairing of the diagonal roots satisfies all three
           auxiliary equations
  level 6  the pairing also passes the defining Pythagorean relations
           with unit space diagonal: a perfect cuboid

All residuals are exact rationals; a check passes only on residual zero,
never within a tolerance.

Root extraction returns unordered multisets, while the auxiliary equations
are written with fixed indices.  Their three left-hand sides are invariant
under permuting edges and diagonals simultaneously, so holding the edges in
sorted order and trying all six diagonal permutations covers every joint
assignment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import (
    CoefficientSet,
    E21_PRINTED,
    E21DenominatorPole,
    diagonal_cubic,
    edge_cubic,
    eval_coefficients_unchecked,
)
from .cubic import discriminant, is_rational_square, rational_roots
from .singularity import SingularityClass, classify

# All permutations of the three diagonal slots, in lexicographic order.
PERMUTATIONS = tuple(itertools.permutations((0, 1, 2)))

LEVEL_PERFECT = 6


@dataclass(frozen=True)
class Verdict:
    """Outcome of grading one candidate point.

    For verdicts deep enough to have them, the fully assembled candidate
    data rides along: the edge and diagonal root triples and the accepted
    diagonal pairing.
    """

    level: int
    reason: str
    flags: SingularityClass = frozenset()
    residuals: tuple[Fraction, ...] = ()
    edges: tuple | None = None
    diagonals: tuple | None = None
    pairing: tuple | None = None


def _permuted(d: tuple, perm: tuple) -> tuple:
    return (d[perm[0]], d[perm[1]], d[perm[2]])


def auxiliary_residuals(
    x: tuple, d: tuple, perm: tuple, cs: CoefficientSet
) -> tuple[Fraction, Fraction, Fraction]:
    """Exact (left side - right side) of the three auxiliary equations.

    The diagonals are rearranged by ``perm`` before substitution; the edges
    stay in the given order.
    """
    dp = _permuted(d, perm)
    r1 = x[0] * x[1] * dp[2] + x[1] * x[2] * dp[0] + x[2] * x[0] * dp[1] - cs.e21
    r2 = (
        x[0] * dp[1] + dp[0] * x[1] + x[1] * dp[2]
        + dp[1] * x[2] + x[2] * dp[0] + dp[2] * x[0]
    ) - cs.e11
    r3 = x[0] * dp[1] * dp[2] + x[1] * dp[2] * dp[0] + x[2] * dp[0] * dp[1] - cs.e12
    return (r1, r2, r3)


def check_pairings(x: tuple, d: tuple, cs: CoefficientSet) -> tuple | None:
    """First permutation (lexicographic) zeroing all three auxiliary residuals."""
    for perm in PERMUTATIONS:
        if all(r == 0 for r in auxiliary_residuals(x, d, perm, cs)):
            return perm
    return None


# Face i is spanned by the two edges other than i.
_FACE_EDGES = ((1, 2), (0, 2), (0, 1))


def pythagorean_check(
    x: tuple, d: tuple, perm: tuple
) -> tuple[bool, tuple[Fraction, Fraction, Fraction], Fraction]:
    """Definitional cuboid check for a paired candidate.

    After applying ``perm`` to the diagonals, each diagonal must span the
    face of the two complementary edges and the squared edges must sum to 1
    (unit space diagonal).  Nothing fixes which cyclic labelling of the
    diagonals matches the faces, so all three are tried and any is accepted.

    Returns (ok, face residuals, space residual); residuals are reported
    for the accepted labelling, or for the unshifted one when all fail.
    """
    dp = _permuted(d, perm)
    space = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] - 1
    reported = None
    for shift in (0, 1, 2):
        faces = tuple(
            dp[(i + shift) % 3] ** 2 - (x[j] ** 2 + x[k] ** 2)
            for i, (j, k) in enumerate(_FACE_EDGES)
        )
        if reported is None:
            reported = faces
        if all(r == 0 for r in faces):
            return (space == 0, faces, space)
    return (False, reported, space)


def grade(b: Fraction, c: Fraction, e21_form: str = E21_PRINTED) -> Verdict:
    """Run the whole pipeline on one point and report the deepest level reached.

    The singular skip is decided by the classifier alone.  Under the printed
    e21 form, a point where that form's extra denominator factor vanishes is
    still graded through the cubic stages (the first eight coefficients are
    form-independent) but cannot be checked against the auxiliary equations,
    so it caps at level 4 with reason "e21-printed-pole".
    """
    flags = classify(b, c)
    if flags:
        return Verdict(0, "singular", flags=flags)

    aux_defined = True
    try:
        cs = eval_coefficients_unchecked(b, c, e21_form)
    except E21DenominatorPole:
        # Only e21 is undefined here; re-evaluate the form-independent rest.
        cs = eval_coefficients_unchecked(b, c, "common")
        aux_defined = False

    edge = edge_cubic(cs)
    edge_disc = discriminant(edge)
    if is_rational_square(edge_disc) is None:
        return Verdict(0, "disc-nonsquare", residuals=(edge_disc,))

    edges = rational_roots(edge)
    if edges is None:
        return Verdict(1, "edge-no-split", residuals=(edge_disc,))
    if edges[0] <= 0:
        bad = tuple(r for r in edges if r <= 0)
        return Verdict(2, "edge-root-nonpositive", residuals=bad, edges=edges)

    diagonals = rational_roots(diagonal_cubic(cs))
    if diagonals is None:
        return Verdict(3, "diag-no-split", edges=edges)
    if diagonals[0] <= 0:
        bad = tuple(r for r in diagonals if r <= 0)
        return Verdict(
            3, "diag-root-nonpositive", residuals=bad, edges=edges, diagonals=diagonals
        )

    if not aux_defined:
        return Verdict(4, "e21-printed-pole", edges=edges, diagonals=diagonals)

    pairing = check_pairings(edges, diagonals, cs)
    if pairing is None:
        first = auxiliary_residuals(edges, diagonals, PERMUTATIONS[0], cs)
        return Verdict(
            4, "aux-unsatisfied", residuals=first, edges=edges, diagonals=diagonals
        )

    ok, faces, space = pythagorean_check(edges, diagonals, pairing)
    if not ok:
        return Verdict(
            5,
            "pythagoras-failed",
            residuals=faces + (space,),
            edges=edges,
            diagonals=diagonals,
            pairing=pairing,
        )
    return Verdict(
        6, "perfect-cuboid", edges=edges, diagonals=diagonals, pairing=pairing
    )
