"""PD-code parsing, oriented knot diagrams, face tracing, Wirtinger presentation.

Conventions
-----------

A PD crossing tuple (a, b, c, d) lists the four incident edge labels
counterclockwise, starting at the incoming under-strand. Edge labels run
1..2k along the knot, so the outgoing under-strand is c = succ(a) and the
over-strand occupies b and d, entering at whichever of the two has the other
as its successor. The crossing is negative when the over-strand enters at
position 1 and positive when it enters at position 3.

Positions at a crossing are indexed 0..3 in the tuple order. Corner p of a
crossing is the face corner between positions p and p+1 (mod 4).

A PD code carries no embedding, only the rotation system, so the diagram
lives on the sphere; any face may be declared unbounded. The default rule
picks the face with the most corners, breaking ties by lowest face id.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

from .errors import (ConfigError, MultiComponentError, NotPlanarError,
                     PDLabelError, PDSyntaxError)
from .words import Word, free_reduce, word_inv

Slot = Tuple[int, int]  # (crossing id, position 0..3)

_X_FORM = re.compile(r"X[\(\[]\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*[\)\]]")


@dataclass(frozen=True)
class PDCode:
    crossings: Tuple[Tuple[int, int, int, int], ...]

    @property
    def k(self) -> int:
        return len(self.crossings)

    def succ(self, edge: int) -> int:
        """Successor edge label along the knot (labels are 1..2k cyclically)."""
        return edge % (2 * self.k) + 1

    def to_text(self) -> str:
        return "[" + ",".join("[" + ",".join(map(str, c)) + "]"
                              for c in self.crossings) + "]"


def parse_pd(text: str) -> PDCode:
    """Parse bracket form "[[1,4,2,5],...]" or X-form "X(1,4,2,5) ..."."""
    text = text.strip()
    if not text:
        raise PDSyntaxError("empty PD text")
    if text.startswith("["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise PDSyntaxError(f"malformed PD bracket syntax: {exc}") from None
        if (not isinstance(data, list) or not data
                or not all(isinstance(c, list) for c in data)):
            raise PDSyntaxError("PD bracket form must be a list of 4-tuples")
        tuples = data
    else:
        matches = _X_FORM.findall(text)
        leftover = _X_FORM.sub("", text).replace("PD", "").strip(" ,[]()\t")
        if not matches or leftover:
            raise PDSyntaxError("malformed PD X-form syntax")
        tuples = [[int(x) for x in m] for m in matches]
    crossings = []
    for c in tuples:
        if len(c) != 4 or not all(isinstance(x, int) and x >= 1 for x in c):
            raise PDSyntaxError(f"crossing {c!r} is not a 4-tuple of positive labels")
        crossings.append(tuple(c))
    pd = PDCode(tuple(crossings))
    _validate_labels(pd)
    _validate_single_component(pd)
    return pd


def _validate_labels(pd: PDCode) -> None:
    counts: Dict[int, int] = {}
    for c in pd.crossings:
        for e in c:
            counts[e] = counts.get(e, 0) + 1
    bad = sorted(e for e, n in counts.items() if n != 2)
    if bad:
        raise PDLabelError(f"edge labels {bad} do not appear exactly twice")
    expected = set(range(1, 2 * pd.k + 1))
    if set(counts) != expected:
        raise PDLabelError(
            f"edge labels must be exactly 1..{2 * pd.k}, got {sorted(counts)}")


def _validate_single_component(pd: PDCode) -> None:
    for a, b, c, d in pd.crossings:
        if pd.succ(a) != c:
            raise MultiComponentError(
                f"crossing ({a},{b},{c},{d}): under-strand labels do not chain; "
                "the PD code is not a single-component knot with sequential labels")
        if pd.succ(b) != d and pd.succ(d) != b:
            raise MultiComponentError(
                f"crossing ({a},{b},{c},{d}): over-strand labels do not chain; "
                "the PD code is not a single-component knot with sequential labels")


@dataclass(frozen=True)
class Crossing:
    id: int
    edges: Tuple[int, int, int, int]
    over_in_pos: int  # 1 or 3
    sign: int

    @property
    def under_in(self) -> int:
        return self.edges[0]

    @property
    def under_out(self) -> int:
        return self.edges[2]

    @property
    def over_in(self) -> int:
        return self.edges[self.over_in_pos]

    @property
    def over_out(self) -> int:
        return self.edges[(self.over_in_pos + 2) % 4]


@dataclass(frozen=True)
class Region:
    id: int
    corners: Tuple[Tuple[int, int], ...]  # cyclic (crossing id, corner position)


@dataclass(frozen=True)
class KnotDiagram:
    pd: PDCode
    crossings: Tuple[Crossing, ...]
    arc_count: int
    arc_of_edge: Dict[int, int]
    regions: Tuple[Region, ...]
    unbounded_region: int
    corner_region: Dict[Tuple[int, int], int]
    edge_tail: Dict[int, Slot]
    edge_head: Dict[int, Slot]

    @property
    def k(self) -> int:
        return self.pd.k

    def over_arc(self, crossing: Crossing) -> int:
        return self.arc_of_edge[crossing.over_in]

    def bounded_regions(self) -> Tuple[Region, ...]:
        return tuple(r for r in self.regions if r.id != self.unbounded_region)

    def left_region(self, edge: int) -> int:
        """Region on the left of the edge, walking along the knot orientation."""
        c, p = self.edge_tail[edge]
        return self.corner_region[(c, p)]

    def right_region(self, edge: int) -> int:
        c, p = self.edge_tail[edge]
        return self.corner_region[(c, (p - 1) % 4)]


def _resolve_crossing(pd: PDCode, idx: int) -> Crossing:
    a, b, c, d = pd.crossings[idx]
    b_chains = pd.succ(b) == d
    d_chains = pd.succ(d) == b
    if b_chains and not d_chains:
        pos = 1
    elif d_chains and not b_chains:
        pos = 3
    else:
        # Both chain only for k = 1; the under strand then fixes the roles:
        # the over slot sharing its label with the under-out is the incoming one.
        pos = 1 if b == c else 3
    sign = -1 if pos == 1 else 1
    return Crossing(idx, (a, b, c, d), pos, sign)


def _build_arcs(pd: PDCode, crossings: Tuple[Crossing, ...]):
    """Arcs are maximal over-strand runs: merge over-in/over-out at each crossing."""
    parent = {e: e for e in range(1, 2 * pd.k + 1)}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in crossings:
        ra, rb = find(c.over_in), find(c.over_out)
        if ra != rb:
            parent[rb] = ra
    classes: Dict[int, List[int]] = {}
    for e in parent:
        classes.setdefault(find(e), []).append(e)
    ordered = sorted(classes.values(), key=min)
    arc_of_edge = {e: i for i, edges in enumerate(ordered) for e in edges}
    return len(ordered), arc_of_edge


def _trace_faces(pd: PDCode) -> List[List[Tuple[int, int]]]:
    """Face tracing of the rotation system.

    Arrivals are slots (crossing, position) entered along their edge. From an
    arrival (c, j) the face continues along the edge at position j-1, so the
    face collects corner (c, j-1) and next arrives at that edge's other slot.
    """
    partner: Dict[Slot, Slot] = {}
    seen: Dict[int, Slot] = {}
    for ci, edges in enumerate(pd.crossings):
        for pos, e in enumerate(edges):
            slot = (ci, pos)
            if e in seen:
                partner[slot] = seen[e]
                partner[seen[e]] = slot
                del seen[e]
            else:
                seen[e] = slot
    faces: List[List[Tuple[int, int]]] = []
    visited = set()
    for ci in range(pd.k):
        for pos in range(4):
            start = (ci, pos)
            if start in visited:
                continue
            corners = []
            cur = start
            while True:
                visited.add(cur)
                c, j = cur
                depart = (c, (j - 1) % 4)
                corners.append(depart)
                cur = partner[depart]
                if cur == start:
                    break
            faces.append(corners)
    return faces


def choose_unbounded(regions: Tuple[Region, ...]) -> int:
    """Default unbounded-face rule: most corners, ties broken by lowest id."""
    return max(regions, key=lambda r: (len(r.corners), -r.id)).id


def identify_unbounded(diagram: KnotDiagram) -> int:
    return choose_unbounded(diagram.regions)


def build_diagram(pd: PDCode, outer_region: Optional[int] = None) -> KnotDiagram:
    crossings = tuple(_resolve_crossing(pd, i) for i in range(pd.k))
    arc_count, arc_of_edge = _build_arcs(pd, crossings)
    faces = _trace_faces(pd)
    if len(faces) != pd.k + 2:
        raise NotPlanarError(
            f"face tracing produced {len(faces)} faces, expected {pd.k + 2}: "
            "not a planar diagram")
    regions = tuple(Region(i, tuple(corners)) for i, corners in enumerate(faces))
    corner_region = {corner: r.id for r in regions for corner in r.corners}
    edge_tail: Dict[int, Slot] = {}
    edge_head: Dict[int, Slot] = {}
    for c in crossings:
        edge_head[c.under_in] = (c.id, 0)
        edge_tail[c.under_out] = (c.id, 2)
        edge_head[c.over_in] = (c.id, c.over_in_pos)
        edge_tail[c.over_out] = (c.id, (c.over_in_pos + 2) % 4)
    if outer_region is None:
        unbounded = choose_unbounded(regions)
    else:
        if not any(r.id == outer_region for r in regions):
            raise ConfigError(
                f"outer region {outer_region} does not exist "
                f"(valid ids: 0..{len(regions) - 1})")
        unbounded = outer_region
    return KnotDiagram(pd, crossings, arc_count, arc_of_edge, regions,
                       unbounded, corner_region, edge_tail, edge_head)


def with_outer_region(diagram: KnotDiagram, region_id: int) -> KnotDiagram:
    if not any(r.id == region_id for r in diagram.regions):
        raise ConfigError(f"outer region {region_id} does not exist")
    return replace(diagram, unbounded_region=region_id)


@dataclass(frozen=True)
class WirtingerPresentation:
    generators: Tuple[int, ...]  # arc ids
    relations: Tuple[Word, ...]  # one relator per crossing, freely reduced


def wirtinger(diagram: KnotDiagram) -> WirtingerPresentation:
    """One generator per arc; per crossing the relator over^e in over^-e out^-1."""
    relations = []
    for c in diagram.crossings:
        over = diagram.over_arc(c)
        uin = diagram.arc_of_edge[c.under_in]
        uout = diagram.arc_of_edge[c.under_out]
        e = c.sign
        relator = ((over, e), (uin, 1), (over, -e)) + word_inv(((uout, 1),))
        relations.append(free_reduce(relator))
    return WirtingerPresentation(tuple(range(diagram.arc_count)), tuple(relations))


def diagram_to_json(diagram: KnotDiagram) -> dict:
    """Debug serialization: crossings, arcs, regions and the corner table."""
    return {
        "pd": diagram.pd.to_text(),
        "crossings": [
            {
                "id": c.id,
                "edges": list(c.edges),
                "sign": c.sign,
                "over_in_pos": c.over_in_pos,
                "over_arc": diagram.over_arc(c),
            }
            for c in diagram.crossings
        ],
        "arcs": {str(e): a for e, a in sorted(diagram.arc_of_edge.items())},
        "regions": [
            {
                "id": r.id,
                "corners": [list(c) for c in r.corners],
                "unbounded": r.id == diagram.unbounded_region,
            }
            for r in diagram.regions
        ],
    }
