"""Shared fixtures: the knot corpus, cached pipeline runs, matrix builders."""

import functools
import itertools
from fractions import Fraction

from dehn.algebra import FieldMatrix, Polynomial, RatFunc
from dehn.pipeline import run_pipeline

# PD codes from the standard knot tables (bracket form, sequential labels).
UNKNOT_KINK = "[[1,2,2,1]]"
TREFOIL = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]"
FIG8 = "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]"
K5_1 = "[[1,6,2,7],[3,8,4,9],[5,10,6,1],[7,2,8,3],[9,4,10,5]]"
K5_2 = "[[1,4,2,5],[3,8,4,9],[5,10,6,1],[9,6,10,7],[7,2,8,3]]"
K6_1 = "[[1,4,2,5],[7,10,8,11],[3,9,4,8],[9,3,10,2],[5,12,6,1],[11,6,12,7]]"
# The same knots redrawn with one Reidemeister-I kink inserted on edge 1.
TREFOIL_KINKED = "[[3,6,4,7],[5,8,6,1],[7,4,8,5],[1,2,2,3]]"
FIG8_KINKED = "[[6,4,7,3],[10,8,1,7],[8,5,9,6],[4,9,5,10],[1,2,2,3]]"
# Valid labels and a single component, but the rotation system has genus 1.
NON_PLANAR = "[[1,3,2,4],[1,3,2,4]]"
# Hopf link: every label appears twice but the strands form two components.
HOPF_LINK = "[[4,1,3,2],[2,3,1,4]]"

CORPUS = {
    "unknot_kink": UNKNOT_KINK,
    "3_1": TREFOIL,
    "4_1": FIG8,
    "5_1": K5_1,
    "5_2": K5_2,
    "6_1": K6_1,
}

ALEXANDER = {
    "unknot_kink": (1,),
    "3_1": (1, -1, 1),
    "4_1": (1, -3, 1),
    "5_1": (1, -1, 1, -1, 1),
    "5_2": (2, -3, 2),
    "6_1": (2, -5, 2),
}


@functools.lru_cache(maxsize=None)
def pipeline(pd_text, outer_region=None, pivot_seed=None):
    return run_pipeline(pd_text, outer_region=outer_region, pivot_seed=pivot_seed)


def poly(*coeffs) -> Polynomial:
    return Polynomial(coeffs)


def rf(num, den=(1,)) -> RatFunc:
    num = Polynomial(num) if isinstance(num, (tuple, list)) else Polynomial((num,))
    den = Polynomial(den) if isinstance(den, (tuple, list)) else Polynomial((den,))
    return RatFunc(num, den)


def _as_rf(x) -> RatFunc:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, (int, Fraction)):
        return RatFunc(Polynomial((x,)))
    return rf(x)


def mat(rows) -> FieldMatrix:
    return FieldMatrix.from_rows([[_as_rf(x) for x in row] for row in rows])


def find_basis_permutation(ours, fixture):
    """Search for row/column permutations identifying our matrices with the
    fixture display.

    `ours` and `fixture` are dicts with keys d2, d1, g2, g1. Returns
    (row_perm, col_perm) with fixture.d2[i][j] == ours.d2[row_perm[i]][col_perm[j]]
    and the same permutations matching d1, g2 and g1, or None.
    """
    n_regions = fixture["d2"].rows
    n_crossings = fixture["d2"].cols
    for rperm in itertools.permutations(range(n_regions)):
        for cperm in itertools.permutations(range(n_crossings)):
            if all(fixture["d2"].entry(i, j) == ours["d2"].entry(rperm[i], cperm[j])
                   for i in range(n_regions) for j in range(n_crossings)) \
               and all(fixture["d1"].entry(0, i) == ours["d1"].entry(0, rperm[i])
                       for i in range(n_regions)) \
               and all(fixture["g2"].entry(j, i) == ours["g2"].entry(cperm[j], rperm[i])
                       for j in range(n_crossings) for i in range(n_regions)) \
               and all(fixture["g1"].entry(i, 0) == ours["g1"].entry(rperm[i], 0)
                       for i in range(n_regions)):
                return rperm, cperm
    return None
