"""The three-term chain complex of a Dehn graph under a representation.

C_2 has one block of the representation space per crossing vertex, C_1 one
per bounded-region vertex, C_0 one for the basepoint. A boundary block from
vertex p to vertex q is the sum over the edges p -> q of the images of their
labels, where the image of a signed word is the sign times the product of
the generator matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .algebra import FieldMatrix, RatFunc
from .dehngraph import BASEPOINT, DehnGraph, GroupRingTerm
from .diagram import WirtingerPresentation
from .errors import InvalidRepresentationError
from .words import Word


class Representation:
    """Map from arc generators to invertible matrices over Q(t).

    The abelian representation sends every generator to the 1x1 matrix [t].
    Matrix representations of any dimension are accepted when every image is
    invertible and all Wirtinger relations hold.
    """

    def __init__(self, kind: str, dim: int, images: Dict[int, FieldMatrix],
                 presentation: Optional[WirtingerPresentation] = None):
        self.kind = kind
        self.dim = dim
        self.images = dict(images)
        self._inverses: Dict[int, FieldMatrix] = {}
        for gen, mat in self.images.items():
            if mat.rows != dim or mat.cols != dim:
                raise InvalidRepresentationError(
                    f"generator {gen} image is {mat.rows}x{mat.cols}, expected {dim}x{dim}")
            try:
                self._inverses[gen] = mat.inverse()
            except ValueError:
                raise InvalidRepresentationError(
                    f"generator {gen} image is singular") from None
        if presentation is not None:
            self._check_relations(presentation)

    @classmethod
    def abelian(cls, arc_count: int) -> "Representation":
        t = FieldMatrix(1, 1, [RatFunc.t()])
        return cls("abelian", 1, {i: t for i in range(arc_count)})

    @classmethod
    def matrix(cls, images: Dict[int, FieldMatrix],
               presentation: WirtingerPresentation) -> "Representation":
        dims = {m.rows for m in images.values()}
        if len(dims) != 1:
            raise InvalidRepresentationError("generator images have mixed sizes")
        return cls("matrix", dims.pop(), images, presentation)

    @classmethod
    def trivial(cls, arc_count: int) -> "Representation":
        one = FieldMatrix.identity(1)
        return cls("matrix", 1, {i: one for i in range(arc_count)})

    def _check_relations(self, presentation: WirtingerPresentation) -> None:
        missing = [g for g in presentation.generators if g not in self.images]
        if missing:
            raise InvalidRepresentationError(f"no image for generators {missing}")
        ident = FieldMatrix.identity(self.dim)
        for i, rel in enumerate(presentation.relations):
            if self.word_image(rel) != ident:
                raise InvalidRepresentationError(
                    f"Wirtinger relation {i} is not satisfied by the images")

    def word_image(self, word: Word) -> FieldMatrix:
        out = FieldMatrix.identity(self.dim)
        for gen, exp in word:
            out = out @ (self.images[gen] if exp == 1 else self._inverses[gen])
        return out


def eval_rep(rep: Representation, term: GroupRingTerm) -> FieldMatrix:
    """Image of a signed word: sign times the product of generator images."""
    mat = rep.word_image(term.word)
    return mat if term.sign == 1 else -mat


@dataclass(frozen=True)
class ChainComplex:
    d2: FieldMatrix  # c1_dim x c2_dim
    d1: FieldMatrix  # c0_dim x c1_dim
    c2_basis: Tuple[str, ...]  # crossing vertex ids, block order
    c1_basis: Tuple[str, ...]  # region vertex ids, block order
    c0_basis: Tuple[str, ...]
    block_size: int

    @property
    def c2_dim(self) -> int:
        return len(self.c2_basis) * self.block_size

    @property
    def c1_dim(self) -> int:
        return len(self.c1_basis) * self.block_size

    @property
    def c0_dim(self) -> int:
        return len(self.c0_basis) * self.block_size

    def block_of(self, vertex_id: str) -> int:
        for basis in (self.c2_basis, self.c1_basis, self.c0_basis):
            if vertex_id in basis:
                return basis.index(vertex_id)
        raise KeyError(vertex_id)


def build_complex(graph: DehnGraph, rep: Representation) -> ChainComplex:
    n = rep.dim
    c2_basis = tuple(v.id for v in graph.vertices if v.index == 2)
    c1_basis = tuple(v.id for v in graph.vertices if v.index == 1)
    c0_basis = (BASEPOINT,)
    c2_pos = {vid: i for i, vid in enumerate(c2_basis)}
    c1_pos = {vid: i for i, vid in enumerate(c1_basis)}
    d2 = [[RatFunc.zero()] * (len(c2_basis) * n) for _ in range(len(c1_basis) * n)]
    d1 = [[RatFunc.zero()] * (len(c1_basis) * n) for _ in range(n)]
    for e in graph.edges:
        block = eval_rep(rep, e.label)
        if e.target == BASEPOINT:
            row0, col0 = 0, c1_pos[e.source] * n
            target = d1
        else:
            row0, col0 = c1_pos[e.target] * n, c2_pos[e.source] * n
            target = d2
        for i in range(n):
            for j in range(n):
                target[row0 + i][col0 + j] = (target[row0 + i][col0 + j]
                                              + block.entry(i, j))
    return ChainComplex(FieldMatrix.from_rows(d2), FieldMatrix.from_rows(d1),
                        c2_basis, c1_basis, c0_basis, n)


@dataclass(frozen=True)
class ExactnessReport:
    exact: bool
    witness: Optional[str] = None


def check_exactness(cx: ChainComplex) -> ExactnessReport:
    """Exact iff d2 injects, d1 surjects, and the middle dimension matches."""
    if cx.c1_dim != cx.c2_dim + cx.c0_dim:
        return ExactnessReport(False, "dimension mismatch: "
                               f"{cx.c1_dim} != {cx.c2_dim} + {cx.c0_dim}")
    r2 = cx.d2.rank()
    if r2 != cx.c2_dim:
        return ExactnessReport(False, f"rank(d2) = {r2} < {cx.c2_dim}")
    r1 = cx.d1.rank()
    if r1 != cx.c0_dim:
        return ExactnessReport(False, f"rank(d1) = {r1} < {cx.c0_dim}")
    return ExactnessReport(True)


def complex_to_json(cx: ChainComplex) -> dict:
    """Boundary matrices plus the vertex-to-block bookkeeping table."""
    return {
        "block_size": cx.block_size,
        "bases": {
            "c2": list(cx.c2_basis),
            "c1": list(cx.c1_basis),
            "c0": list(cx.c0_basis),
        },
        "d2": cx.d2.to_json(),
        "d1": cx.d1.to_json(),
    }
