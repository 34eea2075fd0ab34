"""Corner and region labelings of a knot diagram, and the Dehn graph built
from them.

The corner labeling assigns, at each crossing with over arc x, the group-ring
labels -x, +1, +x, -1 to the four corners: -x before the crossing on the left
of the over strand, +1 before on the right, +x after on the left, -1 after on
the right. With positions numbered counterclockwise and o the over-in
position, that is corner o-1: -x, corner o: +1, corner o+1: -1, corner o+2: +x.

The region labeling seeds the unbounded region with the empty word and
propagates across arcs: crossing an arc from its left side to its right side
multiplies on the left by the arc generator. Labels are freely reduced words;
equalities that depend on the knot group relations are only ever checked
under a representation (check_d2), never by rewriting.

The graph has one vertex per crossing (index 2), one per bounded region
(index 1) and one basepoint (index 0). Every corner incidence with a bounded
region contributes its own edge, so a region meeting a crossing twice (a
kink) yields two parallel edges; each bounded region gets two edges to the
basepoint, labeled +1 and minus its region label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .diagram import KnotDiagram
from .words import (Word, format_word, free_reduce, generator_name,
                    word_inv, word_mul)


@dataclass(frozen=True)
class GroupRingTerm:
    """A signed group element: sign * word, with sign +1 or -1."""

    sign: int
    word: Word

    def __str__(self) -> str:
        return ("+" if self.sign > 0 else "-") + format_word(self.word)


CornerLabeling = Dict[Tuple[int, int], GroupRingTerm]
RegionLabeling = Dict[int, Word]


def build_d1(diagram: KnotDiagram) -> CornerLabeling:
    labels: CornerLabeling = {}
    for c in diagram.crossings:
        x = diagram.over_arc(c)
        o = c.over_in_pos
        labels[(c.id, (o - 1) % 4)] = GroupRingTerm(-1, ((x, 1),))
        labels[(c.id, o)] = GroupRingTerm(1, ())
        labels[(c.id, (o + 1) % 4)] = GroupRingTerm(-1, ())
        labels[(c.id, (o + 2) % 4)] = GroupRingTerm(1, ((x, 1),))
    return labels


def build_d2(diagram: KnotDiagram) -> RegionLabeling:
    """Breadth-first label propagation over the dual graph from the unbounded
    region; deterministic because edges are scanned in ascending label order."""
    labels: RegionLabeling = {diagram.unbounded_region: ()}
    frontier = [diagram.unbounded_region]
    edges = sorted(diagram.edge_tail)
    while frontier:
        next_frontier = []
        for region in frontier:
            for e in edges:
                left = diagram.left_region(e)
                right = diagram.right_region(e)
                gen = ((diagram.arc_of_edge[e], 1),)
                if left == region and right not in labels:
                    labels[right] = word_mul(gen, labels[left])
                    next_frontier.append(right)
                elif right == region and left not in labels:
                    labels[left] = word_mul(word_inv(gen), labels[right])
                    next_frontier.append(left)
        frontier = next_frontier
    if len(labels) != len(diagram.regions):
        raise AssertionError("region adjacency graph is not connected")
    return labels


def check_d2(labeling: RegionLabeling, diagram: KnotDiagram, rep) -> List[dict]:
    """Verify rho(l(right)) = rho(arc) * rho(l(left)) across every edge.

    Consistency is a theorem for labels produced by build_d2, so a non-empty
    report indicates a convention bug (or a deliberately corrupted labeling).
    `rep` only needs a word_image(word) -> FieldMatrix method.
    """
    violations = []
    for e in sorted(diagram.edge_tail):
        left = diagram.left_region(e)
        right = diagram.right_region(e)
        gen = ((diagram.arc_of_edge[e], 1),)
        lhs = rep.word_image(labeling[right])
        rhs = rep.word_image(gen) @ rep.word_image(labeling[left])
        if lhs != rhs:
            violations.append({
                "edge": e,
                "arc": generator_name(diagram.arc_of_edge[e]),
                "left_region": left,
                "right_region": right,
            })
    return violations


@dataclass(frozen=True)
class Vertex:
    id: str
    kind: str  # crossing | region | basepoint
    index: int  # 2 | 1 | 0


@dataclass(frozen=True)
class Edge:
    source: str
    target: str
    label: GroupRingTerm
    origin: Tuple  # ("corner", crossing, pos) | ("region_plus"|"region_minus", region)


@dataclass(frozen=True)
class DehnGraph:
    vertices: Tuple[Vertex, ...]
    edges: Tuple[Edge, ...]
    arc_names: Tuple[str, ...]
    crossing_vertex: Dict[int, str]
    region_vertex: Dict[int, str]

    def vertex(self, vid: str) -> Vertex:
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(vid)


BASEPOINT = "inf"


def build_dehn_graph(diagram: KnotDiagram, d1: CornerLabeling,
                     d2: RegionLabeling) -> DehnGraph:
    bounded = diagram.bounded_regions()
    crossing_vertex = {c.id: f"p{c.id}" for c in diagram.crossings}
    region_vertex = {r.id: f"q{i}" for i, r in enumerate(bounded)}
    vertices = (
        [Vertex(crossing_vertex[c.id], "crossing", 2) for c in diagram.crossings]
        + [Vertex(region_vertex[r.id], "region", 1) for r in bounded]
        + [Vertex(BASEPOINT, "basepoint", 0)]
    )
    edges: List[Edge] = []
    for c in diagram.crossings:
        for pos in range(4):
            region = diagram.corner_region[(c.id, pos)]
            if region == diagram.unbounded_region:
                continue
            edges.append(Edge(crossing_vertex[c.id], region_vertex[region],
                              d1[(c.id, pos)], ("corner", c.id, pos)))
    for r in bounded:
        edges.append(Edge(region_vertex[r.id], BASEPOINT,
                          GroupRingTerm(1, ()), ("region_plus", r.id)))
        edges.append(Edge(region_vertex[r.id], BASEPOINT,
                          GroupRingTerm(-1, d2[r.id]), ("region_minus", r.id)))
    arc_names = tuple(generator_name(i) for i in range(diagram.arc_count))
    return DehnGraph(tuple(vertices), tuple(edges), arc_names,
                     crossing_vertex, region_vertex)


_DOT_SHAPES = {2: "box", 1: "ellipse", 0: "doublecircle"}


def export_dot(graph: DehnGraph) -> str:
    lines = ["digraph dehn {"]
    for v in graph.vertices:
        lines.append(f'  "{v.id}" [shape={_DOT_SHAPES[v.index]} label="{v.id}:{v.index}"];')
    for e in graph.edges:
        lines.append(f'  "{e.source}" -> "{e.target}" [label="{e.label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(graph: DehnGraph) -> dict:
    return {
        "arcs": list(graph.arc_names),
        "vertices": [
            {"id": v.id, "kind": v.kind, "index": v.index} for v in graph.vertices
        ],
        "edges": [
            {
                "from": e.source,
                "to": e.target,
                "sign": e.label.sign,
                "word": [[generator_name(g), x] for g, x in e.label.word],
                "origin": list(e.origin),
            }
            for e in graph.edges
        ],
    }


def graph_from_json(data: dict) -> DehnGraph:
    arc_names = tuple(data["arcs"])
    name_to_id = {name: i for i, name in enumerate(arc_names)}
    vertices = tuple(Vertex(v["id"], v["kind"], v["index"])
                     for v in data["vertices"])
    edges = tuple(
        Edge(e["from"], e["to"],
             GroupRingTerm(e["sign"],
                           free_reduce([(name_to_id[g], x) for g, x in e["word"]])),
             tuple(e["origin"]))
        for e in data["edges"]
    )
    crossing_vertex = {int(v.id[1:]): v.id for v in vertices if v.kind == "crossing"}
    region_vertex = {e.origin[1]: e.source for e in edges
                     if e.origin[0] == "region_minus"}
    return DehnGraph(vertices, edges, arc_names, crossing_vertex, region_vertex)
