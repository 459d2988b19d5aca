"""Koszul simplicial complexes of a monomial ideal in three variables.

``K^b I`` is the set of squarefree ``tau`` with ``x^(b - tau)`` in ``I``.  It
is a subcomplex of the triangle on the vertices 0, 1, 2 (x, y, z).

Orientation convention: the three edges form an oriented cycle,

    d(xy) = x - y,    d(yz) = y - z,    d(xz) = z - x,

so ``xy`` and ``yz`` carry the reverse of their ascending orientation and
``xz`` its ascending one.  The signed quantity ``sign(v, e)`` used by the
closed forms is the coefficient, in the boundary of the edge ``e``, of the
endpoint other than ``v``; it is the sign picked up when ``v`` is removed
from ``e``.  Under this convention the known sylvan matrices of small examples come out
entry for entry.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .complexes import EMPTY, Chain, Face, SimplicialComplex, homology_dim
from .hedge import lex_least_stake_set
from .ideal_staircase import DegreeVector, MonomialIdeal
from .rational_linalg import RatMatrix, kernel

VERTEX_NAMES = "xyz"
FLIPPED_EDGES = frozenset({(0, 1), (1, 2)})
ALL_EDGES: tuple[Face, ...] = ((0, 1), (0, 2), (1, 2))


class VertexNotInFace(ValueError):
    pass


def koszul_complex(I: MonomialIdeal, b: DegreeVector) -> SimplicialComplex:
    return _koszul(I.gens, tuple(b))


@lru_cache(maxsize=200_000)
def _koszul(gens, b):
    faces = set()
    for mask in range(8):
        tau = tuple(v for v in range(3) if mask >> v & 1)
        rest = tuple(b[v] - (1 if v in tau else 0) for v in range(3))
        if min(rest) < 0:
            continue
        if any(g[0] <= rest[0] and g[1] <= rest[1] and g[2] <= rest[2] for g in gens):
            faces.add(tau)
    return _complex_from_faces(frozenset(faces))


@lru_cache(maxsize=None)
def _complex_from_faces(faces: frozenset) -> SimplicialComplex:
    # interned so that per-complex caches in the hedge module are shared
    return SimplicialComplex(faces, FLIPPED_EDGES)


def complex_from_facets(facets) -> SimplicialComplex:
    """A subcomplex of the triangle with the Koszul orientation, e.g. ``["xy", "z"]``."""
    raw = SimplicialComplex.from_facets(
        [tuple(VERTEX_NAMES.index(ch) for ch in f) if isinstance(f, str) else f for f in facets]
    )
    return _complex_from_faces(raw.faces)


def boundary_matrix(K: SimplicialComplex, i: int) -> RatMatrix:
    return K.boundary_matrix(i)


def sign(v: int, e: Face) -> int:
    """Sign for removing ``v`` from the edge ``e``: the boundary coefficient of the other endpoint."""
    e = tuple(sorted(e))
    if len(e) != 2:
        raise ValueError(f"{e} is not an edge")
    if v not in e:
        raise VertexNotInFace(f"vertex {v} is not in {e}")
    (other,) = (u for u in e if u != v)
    return _TRIANGLE.boundary_coefficient((other,), e)


_TRIANGLE = SimplicialComplex.from_facets([(0, 1, 2)], FLIPPED_EDGES)


def edge(u: int, v: int) -> Face:
    return (u, v) if u < v else (v, u)


class Shape(enum.Enum):
    VOID = "Void"
    IRRELEVANT = "Irrelevant"
    ONE_VERTEX = "OneVertex"
    TWO_VERTICES = "TwoVertices"
    THREE_VERTICES = "ThreeVertices"
    ONE_EDGE = "OneEdge"
    EDGE_PLUS_VERTEX = "EdgePlusVertex"
    TWO_EDGES = "TwoEdges"
    HOLLOW = "ThreeEdgesHollow"
    FULL = "FullTriangle"


@dataclass(frozen=True)
class KoszulShape:
    """Isomorphism type of a subcomplex of the triangle, with its labels kept.

    ``edges`` lists the edges, ``isolated`` the vertices lying on no edge and
    ``apex`` the vertex shared by the two edges of a ``TWO_EDGES`` complex.
    """

    kind: Shape
    vertices: tuple[int, ...] = ()
    edges: tuple[Face, ...] = ()
    isolated: tuple[int, ...] = ()
    apex: int | None = None

    @property
    def tag(self) -> str:
        return self.kind.value

    def label(self) -> str:
        n = VERTEX_NAMES
        parts = []
        if self.kind in (Shape.HOLLOW, Shape.FULL, Shape.VOID, Shape.IRRELEVANT):
            return self.tag
        if self.edges:
            parts.append(",".join("".join(n[v] for v in e) for e in self.edges))
        if self.isolated:
            parts.append(",".join(n[v] for v in self.isolated))
        return f"{self.tag}({';'.join(parts)})"

    @property
    def h0_nonzero(self) -> bool:
        return self.kind in (Shape.TWO_VERTICES, Shape.THREE_VERTICES, Shape.EDGE_PLUS_VERTEX)


def classify_shape(K: SimplicialComplex) -> KoszulShape:
    return _classify(K)


@lru_cache(maxsize=None)
def _classify(K):
    if not K.faces:
        return KoszulShape(Shape.VOID)
    verts = tuple(K.vertices)
    edges = tuple(K.faces_of_dim(1))
    on_edge = {v for e in edges for v in e}
    isolated = tuple(v for v in verts if v not in on_edge)
    if K.faces_of_dim(2):
        return KoszulShape(Shape.FULL, verts, edges)
    if not verts:
        return KoszulShape(Shape.IRRELEVANT)
    if not edges:
        kind = {1: Shape.ONE_VERTEX, 2: Shape.TWO_VERTICES, 3: Shape.THREE_VERTICES}[len(verts)]
        return KoszulShape(kind, verts, (), isolated)
    if len(edges) == 1:
        kind = Shape.ONE_EDGE if not isolated else Shape.EDGE_PLUS_VERTEX
        return KoszulShape(kind, verts, edges, isolated)
    if len(edges) == 2:
        (apex,) = set(edges[0]) & set(edges[1])
        return KoszulShape(Shape.TWO_EDGES, verts, edges, (), apex)
    return KoszulShape(Shape.HOLLOW, verts, edges)


def reduced_homology_dims(K: SimplicialComplex) -> tuple[int, int, int]:
    return (homology_dim(K, -1), homology_dim(K, 0), homology_dim(K, 1))


def homology_basis(K: SimplicialComplex, i: int) -> list[Chain]:
    """Deterministic cycle representatives of a basis of the reduced homology.

    Representatives are the cycles supported off the lexicographically least
    stake set in dimension ``i``; that space maps isomorphically onto
    homology, and its reduced-row-echelon basis is returned.
    """
    return list(_homology_basis(K, i))


@lru_cache(maxsize=None)
def _homology_basis(K, i):
    faces = K.faces_of_dim(i)
    if not faces:
        return ()
    S = lex_least_stake_set(K, i)
    d = K.boundary_matrix(i)
    rows = d.to_rows()
    for s in S.faces:
        rows.append([int(f == s) for f in faces])
    M = RatMatrix.from_rows(rows, len(faces))
    return tuple(Chain.from_vector(i, faces, v) for v in _echelon(kernel(M)))


def _echelon(vectors):
    """Row-reduce a list of vectors so the output does not depend on how they were found."""
    if not vectors:
        return []
    from .rational_linalg import rref

    reduced, _ = rref(RatMatrix.from_rows(vectors))
    return reduced


def empty_face_chain() -> Chain:
    return Chain.of(EMPTY)
