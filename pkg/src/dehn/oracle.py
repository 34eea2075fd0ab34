"""Alexander polynomial by Fox calculus on the Wirtinger presentation.

This path never touches the Dehn graph, the chain complex or the propagator,
so it is an independent check on the torsion pipeline through the classical
identity: torsion times (t - 1) agrees with the Alexander polynomial up to
+-t^m units.
"""

from __future__ import annotations

from dataclasses import dataclass
from .algebra import FieldMatrix, Polynomial, RatFunc, poly_gcd, unit_equal
from .diagram import WirtingerPresentation
from .errors import DehnError
from .invariants import TorsionValue
from .words import Word


@dataclass(frozen=True)
class AlexanderPolynomial:
    """Normalized: nonzero constant term, positive leading coefficient."""

    poly: Polynomial

    def __str__(self) -> str:
        return str(self.poly)


def _fox_derivative(word: Word, gen: int) -> RatFunc:
    """Abelianized Fox derivative of a word with respect to one generator,
    with every generator sent to t."""
    result = RatFunc.zero()
    power = 0
    for g, e in word:
        if e == 1:
            if g == gen:
                result = result + RatFunc.t_power(power)
            power += 1
        else:
            power -= 1
            if g == gen:
                result = result - RatFunc.t_power(power)
    return result


def fox_alexander(presentation: WirtingerPresentation) -> AlexanderPolynomial:
    """Fox matrix of the relators, drop the lowest-id generator's column, and
    normalize the determinant of a maximal minor.

    The first (k-1)x(k-1) minor suffices for Wirtinger presentations; if it
    degenerates, the gcd of all maximal minors is used instead.
    """
    gens = presentation.generators
    if len(gens) < 1:
        raise DehnError("presentation has no generators")
    k = len(gens)
    if k == 1:
        return AlexanderPolynomial(Polynomial((1,)))
    dropped = min(gens)
    kept = [g for g in gens if g != dropped]
    rows = [[_fox_derivative(rel, g) for g in kept]
            for rel in presentation.relations]
    matrix = FieldMatrix.from_rows(rows)
    minor = matrix.submatrix(range(k - 1), range(k - 1)).det()
    if minor.is_zero():
        minors = []
        for skip in range(matrix.rows):
            idx = [r for r in range(matrix.rows) if r != skip]
            minors.append(matrix.submatrix(idx, range(k - 1)).det())
        polys = [_laurent_to_poly(m) for m in minors if not m.is_zero()]
        if not polys:
            raise DehnError("all maximal minors of the Fox matrix vanish")
        acc = polys[0]
        for p in polys[1:]:
            acc = poly_gcd(acc, p)
        return AlexanderPolynomial(_normalize(acc))
    return AlexanderPolynomial(_normalize(_laurent_to_poly(minor)))


def _laurent_to_poly(f: RatFunc) -> Polynomial:
    """The Fox determinant is a Laurent polynomial; clear the t-power."""
    den = f.den
    if den.t_multiplicity() != den.degree:
        raise DehnError(f"Fox determinant {f} is not a Laurent polynomial")
    return f.num


def _normalize(p: Polynomial) -> Polynomial:
    p = p.shift(-p.t_multiplicity())
    if p.leading() < 0:
        p = -p
    return p


def milnor_check(tor: TorsionValue, alex: AlexanderPolynomial) -> bool:
    """Torsion times (t - 1) is unit-equal to the Alexander polynomial."""
    t_minus_1 = RatFunc(Polynomial((-1, 1)))
    return unit_equal(tor.normalized * t_minus_1, RatFunc(alex.poly))
