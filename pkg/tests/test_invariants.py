import pytest

from conftest import (CORPUS, FIG8, FIG8_KINKED, TREFOIL, TREFOIL_KINKED,
                      UNKNOT_KINK, find_basis_permutation, mat, pipeline, rf)
from dehn.algebra import RatFunc
from dehn.errors import NotExactError, UnsupportedRepresentationError
from dehn.dehngraph import build_d1, build_d2, build_dehn_graph
from dehn.diagram import build_diagram, parse_pd, wirtinger
from dehn.invariants import (DefectValue, TorsionValue, build_propagator,
                             check_lescop_relation, defect, defect_equal_mod_Z,
                             defect_terms, torsion, torsion_equal_up_to_units)
from dehn.mscomplex import Representation, build_complex

T = RatFunc.t()

# Reference values for the trefoil with the maximal abelian representation.
TORSION_TARGET = rf((1, -1, 1), (1, -1))  # (t^2-t+1)/(1-t), up to units
DEFECT_TARGET = rf((0, -1, 2), (1, -1, 1)) - rf((0, 1), (-1, 1))

G2_FIXTURE = mat([
    [0, (0, 0, 1), (0, 1), (-1, 1)],
    [0, 1, (1, -1), 1],
    [0, (0, -1), -1, (0, -1)],
]).scale(rf(1, (1, -1, 1)))
G1_FIXTURE = mat([[rf(1, (1, -1))], [0], [0], [0]])


# -- propagator ---------------------------------------------------------------


@pytest.mark.parametrize("text", sorted(CORPUS.values()))
def test_propagator_identities(text):
    run = pipeline(text)
    cx, g = run.complex, run.propagator
    assert (g.g2 @ cx.d2).is_identity()
    assert (cx.d1 @ g.g1).is_identity()
    assert (cx.d2 @ g.g2 + g.g1 @ cx.d1).is_identity()


def test_trefoil_default_propagator_matches_fixture():
    run = pipeline(TREFOIL)
    assert run.propagator.selected == (0,)
    ours = {"d2": run.complex.d2, "d1": run.complex.d1,
            "g2": run.propagator.g2, "g1": run.propagator.g1}
    from test_mscomplex import TREFOIL_D1, TREFOIL_D2
    fixture = {"d2": TREFOIL_D2, "d1": TREFOIL_D1,
               "g2": G2_FIXTURE, "g1": G1_FIXTURE}
    assert find_basis_permutation(ours, fixture) is not None


def test_propagator_random_seeds_all_valid():
    run = pipeline(TREFOIL)
    cx = run.complex
    propagators = [build_propagator(cx, pivot_seed=s) for s in range(10)]
    for g in propagators:
        assert (g.g2 @ cx.d2).is_identity()
        assert (cx.d1 @ g.g1).is_identity()
        assert (cx.d2 @ g.g2 + g.g1 @ cx.d1).is_identity()
    assert len({g.selected for g in propagators}) > 1  # genuinely different


def test_propagator_requires_exactness():
    d = build_diagram(parse_pd(TREFOIL))
    g = build_dehn_graph(d, build_d1(d), build_d2(d))
    rep = Representation.trivial(d.arc_count)
    cx = build_complex(g, rep)
    with pytest.raises(NotExactError):
        build_propagator(cx)


# -- torsion ------------------------------------------------------------------


def test_trefoil_torsion():
    run = pipeline(TREFOIL)
    assert torsion_equal_up_to_units(run.tor, TorsionValue(
        TORSION_TARGET, TORSION_TARGET, 1, 0))
    assert run.tor.normalized == rf((1, -1, 1), (-1, 1))
    assert run.tor.raw == TORSION_TARGET


def test_unknot_torsion():
    run = pipeline(UNKNOT_KINK)
    assert run.tor.normalized == rf(1, (-1, 1))


def test_fig8_torsion():
    run = pipeline(FIG8)
    assert run.tor.normalized == rf((1, -3, 1), (-1, 1))


def test_torsion_normalization_unit_bookkeeping():
    run = pipeline(TREFOIL)
    unit = RatFunc(run.tor.unit_sign) * RatFunc.t_power(run.tor.unit_power)
    assert run.tor.raw == unit * run.tor.normalized
    assert run.tor.normalized.num.constant_term() > 0
    assert run.tor.normalized.den.constant_term() != 0


def test_torsion_equal_up_to_units_cases():
    a = TorsionValue(TORSION_TARGET, TORSION_TARGET, 1, 0)
    scaled = -(RatFunc.t_power(3)) * TORSION_TARGET
    b = TorsionValue(scaled, TORSION_TARGET, -1, 3)
    assert torsion_equal_up_to_units(a, b)
    other = rf((1, -3, 1), (1, -1))
    assert not torsion_equal_up_to_units(a, TorsionValue(other, other, 1, 0))
    assert torsion_equal_up_to_units(a, a)


# -- defect -------------------------------------------------------------------


def test_trefoil_defect_value():
    run = pipeline(TREFOIL)
    assert defect_equal_mod_Z(run.d, DefectValue(DEFECT_TARGET))


def test_trefoil_defect_terms():
    run = pipeline(TREFOIL)
    terms = defect_terms(run.graph, run.complex, run.propagator, run.rep)
    nonzero = sorted(str(v) for _, _, v in terms if not v.is_zero())
    expected = sorted(str(v) for v in [
        rf((0, -1), (1, -1, 1)) * rf((1, -1)),   # -t(1-t)/(t^2-t+1)
        rf((0, 0, 1), (1, -1, 1)),               # (-t)(-t)/(t^2-t+1)
        rf((0, 1), (1, -1)),                     # t/(1-t)
    ])
    assert nonzero == expected


def test_defect_skips_bare_sign_labels():
    run = pipeline(TREFOIL)
    terms = defect_terms(run.graph, run.complex, run.propagator, run.rep)
    word_edges = [e for e in run.graph.edges if e.label.word]
    assert len(terms) == len(word_edges)


def test_defect_rejects_matrix_representation():
    d = build_diagram(parse_pd(TREFOIL))
    pres = wirtinger(d)
    m = mat([[T, 1], [0, T]])
    rep = Representation.matrix({g: m for g in pres.generators}, pres)
    graph = build_dehn_graph(d, build_d1(d), build_d2(d))
    cx = build_complex(graph, rep)
    g = build_propagator(cx)
    with pytest.raises(UnsupportedRepresentationError):
        defect(graph, cx, g, rep)


def test_defect_equal_mod_Z_cases():
    f = DefectValue(rf((0, 1), (1, -1, 1)))
    shifted = DefectValue(f.representative + RatFunc(3))
    assert defect_equal_mod_Z(f, shifted)
    half = DefectValue(f.representative + rf((1,), (2,)))
    assert not defect_equal_mod_Z(f, half)
    plus_t = DefectValue(f.representative + T)
    assert not defect_equal_mod_Z(f, plus_t)


# -- relations ----------------------------------------------------------------


@pytest.mark.parametrize("name,text", sorted(CORPUS.items()))
def test_lescop_relation_on_corpus(name, text):
    run = pipeline(text)
    assert check_lescop_relation(run.tor, run.d)


def test_lescop_insensitive_to_torsion_unit():
    run = pipeline(TREFOIL)
    scaled = -(RatFunc.t_power(5)) * run.tor.raw
    tor = TorsionValue(scaled, run.tor.normalized, -1, 5)
    assert check_lescop_relation(tor, run.d)


@pytest.mark.parametrize("name,text", sorted(CORPUS.items()))
def test_seed_independence(name, text):
    run = pipeline(text)
    for seed in range(10):
        g = build_propagator(run.complex, pivot_seed=seed)
        tor_s = torsion(run.complex, g)
        d_s = defect(run.graph, run.complex, g, run.rep)
        assert torsion_equal_up_to_units(run.tor, tor_s)
        assert defect_equal_mod_Z(run.d, d_s)


def test_diagram_independence_trefoil():
    a, b = pipeline(TREFOIL), pipeline(TREFOIL_KINKED)
    assert torsion_equal_up_to_units(a.tor, b.tor)
    assert defect_equal_mod_Z(a.d, b.d)


def test_diagram_independence_fig8():
    a, b = pipeline(FIG8), pipeline(FIG8_KINKED)
    assert torsion_equal_up_to_units(a.tor, b.tor)
    assert defect_equal_mod_Z(a.d, b.d)
