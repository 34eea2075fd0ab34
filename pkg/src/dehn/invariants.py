"""Combinatorial propagator, torsion and the abelian defect of an exact
three-term complex.

The propagator picks coordinate lines S of C_1 completing the image of d2 to
a basis; G_1 inverts d1 on span(S) and G_2 inverts d2 on its image along
span(S). Torsion is the determinant of the square block matrix [d2 | g1]
mapping the even chains to C_1; it is well defined up to +-t^m, and a
canonical representative is obtained by stripping that unit.

The defect is a rational function modulo the integers. Every edge whose
label carries a nonempty word w contributes the exponent sum of w (its class
in the first homology of the knot exterior) times a scalar built from the
representation and the matching propagator entry; edges whose label is a
bare sign contribute nothing. Orientation conventions per degree: the scalar
for a crossing-to-region edge is the image of the signed label times the G_2
entry; region-to-basepoint edges enter with the opposite overall sign. This
is the convention under which defect = t (d/dt) log(torsion) mod Z.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Tuple

from .algebra import FieldMatrix, RatFunc, unit_equal
from .dehngraph import BASEPOINT, DehnGraph
from .errors import DehnError, NotExactError, UnsupportedRepresentationError
from .mscomplex import ChainComplex, Representation, check_exactness, eval_rep
from .words import exponent_sum


@dataclass(frozen=True)
class Propagator:
    g2: FieldMatrix  # c2_dim x c1_dim
    g1: FieldMatrix  # c1_dim x c0_dim
    selected: Tuple[int, ...]  # C_1 coordinates spanning the complement of im(d2)


def build_propagator(cx: ChainComplex, pivot_seed: Optional[int] = None) -> Propagator:
    """Construct a propagator; `pivot_seed` shuffles the candidate coordinate
    order (default is ascending), giving genuinely different propagators whose
    torsion and defect must agree."""
    report = check_exactness(cx)
    if not report.exact:
        raise NotExactError(f"complex is not exact: {report.witness}")
    c2, c1, c0 = cx.c2_dim, cx.c1_dim, cx.c0_dim
    candidates = list(range(c1))
    if pivot_seed is not None:
        random.Random(pivot_seed).shuffle(candidates)
    selected: List[int] = []
    for i in candidates:
        if len(selected) == c0:
            break
        cols = _coordinate_columns(c1, selected + [i]).hstack(cx.d2)
        if cols.rank() == c2 + len(selected) + 1:
            selected.append(i)
    if len(selected) != c0:
        raise NotExactError("could not complete im(d2) to a basis of C_1")
    basis = _coordinate_columns(c1, selected).hstack(cx.d2)
    binv = basis.inverse()
    g2 = binv.submatrix(range(c0, c1), range(c1))
    ms_inv = cx.d1.submatrix(range(c0), selected).inverse()
    g1_rows = [[RatFunc.zero()] * c0 for _ in range(c1)]
    for a, row_index in enumerate(selected):
        g1_rows[row_index] = list(ms_inv.row(a))
    g1 = FieldMatrix.from_rows(g1_rows)
    _verify_identities(cx, g2, g1)
    return Propagator(g2, g1, tuple(selected))


def _coordinate_columns(dim: int, indices: List[int]) -> FieldMatrix:
    cols = [[RatFunc.zero()] * len(indices) for _ in range(dim)]
    for j, i in enumerate(indices):
        cols[i][j] = RatFunc.one()
    return FieldMatrix.from_rows(cols)


def _verify_identities(cx: ChainComplex, g2: FieldMatrix, g1: FieldMatrix) -> None:
    if not (g2 @ cx.d2).is_identity():
        raise DehnError("propagator identity g2*d2 = id failed")
    if not (cx.d1 @ g1).is_identity():
        raise DehnError("propagator identity d1*g1 = id failed")
    if not (cx.d2 @ g2 + g1 @ cx.d1).is_identity():
        raise DehnError("propagator identity d2*g2 + g1*d1 = id failed")


@dataclass(frozen=True)
class TorsionValue:
    raw: RatFunc
    normalized: RatFunc
    unit_sign: int
    unit_power: int


def torsion(cx: ChainComplex, g: Propagator) -> TorsionValue:
    """Determinant of [d2 | g1] : C_2 + C_0 -> C_1, raw and normalized."""
    raw = cx.d2.hstack(g.g1).det()
    if raw.is_zero():
        raise DehnError("torsion determinant vanished on an exact complex")
    normalized, sign, power = _strip_unit(raw)
    return TorsionValue(raw, normalized, sign, power)


def _strip_unit(f: RatFunc) -> Tuple[RatFunc, int, int]:
    """Write f = sign * t^m * g with g having nonzero constant terms in both
    parts and positive numerator constant term."""
    a = f.num.t_multiplicity()
    b = f.den.t_multiplicity()
    num = f.num.shift(-a)
    den = f.den.shift(-b)
    sign = 1
    if num.constant_term() < 0:
        num = -num
        sign = -1
    return RatFunc(num, den), sign, a - b


def torsion_equal_up_to_units(a: TorsionValue, b: TorsionValue) -> bool:
    return unit_equal(a.raw, b.raw)


@dataclass(frozen=True)
class DefectValue:
    representative: RatFunc


def defect_terms(graph: DehnGraph, cx: ChainComplex, g: Propagator,
                 rep: Representation) -> List[Tuple[str, str, RatFunc]]:
    """Per-edge defect contributions (source, target, value), word-bearing
    edges only."""
    if rep.kind != "abelian" or rep.dim != 1:
        raise UnsupportedRepresentationError(
            "the defect is only computed for the abelian representation; "
            "higher-dimensional representations need a homology identification "
            "this package does not implement")
    terms = []
    for e in graph.edges:
        w = e.label.word
        if not w:
            continue
        degree = exponent_sum(w)
        coeff = eval_rep(rep, e.label).entry(0, 0)
        if e.target == BASEPOINT:
            entry = g.g1.entry(cx.block_of(e.source), 0)
            level_sign = -1
        else:
            entry = g.g2.entry(cx.block_of(e.source), cx.block_of(e.target))
            level_sign = 1
        value = coeff * entry
        if degree != 1:
            value = value * RatFunc(degree)
        if level_sign < 0:
            value = -value
        terms.append((e.source, e.target, value))
    return terms


def defect(graph: DehnGraph, cx: ChainComplex, g: Propagator,
           rep: Representation) -> DefectValue:
    total = RatFunc.zero()
    for _, _, value in defect_terms(graph, cx, g, rep):
        total = total + value
    return DefectValue(total)


def defect_equal_mod_Z(a: DefectValue, b: DefectValue) -> bool:
    """True iff the difference is a constant with integer value."""
    diff = a.representative - b.representative
    if not diff.is_constant():
        return False
    return diff.as_constant().denominator == 1


def check_lescop_relation(tor: TorsionValue, d: DefectValue) -> bool:
    """The defect equals t * (d/dt) log(torsion) modulo the integers.

    The unit ambiguity of the torsion shifts the logarithmic derivative by an
    integer, so the predicate is well defined on equivalence classes."""
    if tor.raw.is_zero():
        raise ValueError("torsion must be nonzero")
    rhs = RatFunc.t() * tor.raw.derivative() / tor.raw
    return defect_equal_mod_Z(d, DefectValue(rhs))
