"""End-to-end per-knot pipeline and the stable JSON result object."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .dehngraph import (CornerLabeling, DehnGraph, RegionLabeling, build_d1,
                        build_d2, build_dehn_graph, check_d2)
from .diagram import KnotDiagram, PDCode, build_diagram, parse_pd, wirtinger
from .errors import DehnError, NotExactError
from .invariants import (DefectValue, Propagator, TorsionValue,
                         build_propagator, check_lescop_relation, defect,
                         torsion)
from .mscomplex import (ChainComplex, Representation, build_complex,
                        check_exactness)
from .oracle import AlexanderPolynomial, fox_alexander, milnor_check

SCHEMA_VERSION = 1


@dataclass
class PipelineRun:
    pd: PDCode
    diagram: KnotDiagram
    d1_labels: CornerLabeling
    d2_labels: RegionLabeling
    graph: DehnGraph
    rep: Representation
    complex: ChainComplex
    propagator: Propagator
    tor: TorsionValue
    d: DefectValue
    alexander: AlexanderPolynomial
    d2_violations: List[dict]
    lescop_ok: bool
    milnor_ok: bool

    def to_json_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "pd": self.pd.to_text(),
            "crossings": self.pd.k,
            "torsion": {
                "raw": self.tor.raw.to_json(),
                "normalized": self.tor.normalized.to_json(),
            },
            "defect": {
                "representative": self.d.representative.to_json(),
            },
            "checks": {
                "exact": True,
                "propagator": True,
                "lescop": self.lescop_ok,
                "milnor": self.milnor_ok,
                "d2_consistency": not self.d2_violations,
            },
        }


def run_pipeline(pd_text: str, outer_region: Optional[int] = None,
                 pivot_seed: Optional[int] = None) -> PipelineRun:
    """Parse, build the labeled graph and complex, and compute every invariant.

    Raises the error hierarchy in `dehn.errors` for invalid input, non-planar
    rotation data or a non-exact complex; never returns partial results.
    """
    pd = parse_pd(pd_text)
    diagram = build_diagram(pd, outer_region=outer_region)
    d1_labels = build_d1(diagram)
    d2_labels = build_d2(diagram)
    graph = build_dehn_graph(diagram, d1_labels, d2_labels)
    rep = Representation.abelian(diagram.arc_count)
    violations = check_d2(d2_labels, diagram, rep)
    if violations:
        raise DehnError(f"region labeling is inconsistent: {violations}")
    cx = build_complex(graph, rep)
    report = check_exactness(cx)  # build_propagator re-checks; fail early here
    if not report.exact:
        raise NotExactError(f"complex is not exact: {report.witness}")
    g = build_propagator(cx, pivot_seed=pivot_seed)
    tor = torsion(cx, g)
    d = defect(graph, cx, g, rep)
    alex = fox_alexander(wirtinger(diagram))
    return PipelineRun(
        pd=pd, diagram=diagram, d1_labels=d1_labels, d2_labels=d2_labels,
        graph=graph, rep=rep, complex=cx, propagator=g, tor=tor, d=d,
        alexander=alex, d2_violations=violations,
        lescop_ok=check_lescop_relation(tor, d),
        milnor_ok=milnor_check(tor, alex),
    )


def compute_result(pd_text: str, outer_region: Optional[int] = None,
                   pivot_seed: Optional[int] = None) -> dict:
    return run_pipeline(pd_text, outer_region, pivot_seed).to_json_dict()
