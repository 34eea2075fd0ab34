from fractions import Fraction

import pytest

from conftest import ALEXANDER, CORPUS, FIG8, TREFOIL, UNKNOT_KINK, pipeline, poly
from dehn.algebra import Polynomial
from dehn.diagram import WirtingerPresentation, build_diagram, parse_pd, wirtinger
from dehn.errors import DehnError
from dehn.oracle import AlexanderPolynomial, fox_alexander, milnor_check


def _alexander(text):
    return fox_alexander(wirtinger(build_diagram(parse_pd(text))))


def test_trefoil_alexander():
    assert _alexander(TREFOIL).poly == poly(1, -1, 1)


def test_unknot_alexander_trivial():
    assert _alexander(UNKNOT_KINK).poly == poly(1)


def test_fig8_alexander():
    assert _alexander(FIG8).poly == poly(1, -3, 1)


@pytest.mark.parametrize("name,text", sorted(CORPUS.items()))
def test_corpus_alexander_values(name, text):
    assert _alexander(text).poly == Polynomial(ALEXANDER[name])


@pytest.mark.parametrize("name,text", sorted(CORPUS.items()))
def test_alexander_at_one_is_unit(name, text):
    assert _alexander(text).poly(1) in (Fraction(1), Fraction(-1))


@pytest.mark.parametrize("name,text", sorted(CORPUS.items()))
def test_alexander_palindromic_up_to_units(name, text):
    p = _alexander(text).poly
    reversed_coeffs = Polynomial(tuple(reversed(p.coeffs)))
    assert p == reversed_coeffs or p == -reversed_coeffs


def test_degenerate_presentation_rejected():
    with pytest.raises(DehnError):
        fox_alexander(WirtingerPresentation((), ()))


# -- torsion cross-check -------------------------------------------------------


def test_milnor_trefoil():
    run = pipeline(TREFOIL)
    assert milnor_check(run.tor, AlexanderPolynomial(poly(1, -1, 1)))


def test_milnor_unknot():
    run = pipeline(UNKNOT_KINK)
    assert milnor_check(run.tor, AlexanderPolynomial(poly(1)))


def test_milnor_negative_control():
    run = pipeline(TREFOIL)
    assert not milnor_check(run.tor, AlexanderPolynomial(poly(1, -3, 1)))


@pytest.mark.parametrize("name,text", sorted(CORPUS.items()))
def test_milnor_on_corpus(name, text):
    run = pipeline(text)
    assert milnor_check(run.tor, run.alexander)
