"""Saturated decreasing lattice paths in N^3 and the Koszul shapes along them.

A path from ``b`` down to ``a`` is stored as its list of points
``(b, b_1, ..., a)``; consecutive points differ by a unit vector.  Paths are
enumerated in lexicographic order of their step-direction words.

The transition system checked by :func:`validate_taxonomy` describes every
way the Koszul complexes can evolve from a hollow triangle down to a degree
whose complex is disconnected.  Writing ``d`` for the step direction:

    Hollow       --d-->  TwoEdges(apex d) | EdgePlusVertex(edge through d)
                         | TwoVertices(the other two) | ThreeVertices
    TwoEdges(p)  --p-->  same targets as from Hollow with d = p
    TwoEdges(p)  --q-->  TwoVertices{p, q} | OneEdge(pq)           (q != p)
    EdgePlusVertex(uv; w) --u or v-->  TwoVertices{u, v} | OneEdge(uv)
    OneEdge(uv)  --u or v-->  OneEdge(uv) | TwoVertices{u, v}

Two and three isolated vertices are terminal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .ideal_staircase import DegreeVector, MonomialIdeal, degree, leq, sub
from .koszul import KoszulShape, Shape, classify_shape, koszul_complex


class NotComparable(ValueError):
    pass


class PreconditionFailed(ValueError):
    pass


@dataclass(frozen=True)
class LatticePath:
    points: tuple[DegreeVector, ...]

    def __post_init__(self):
        pts = tuple(tuple(p) for p in self.points)
        if not pts:
            raise ValueError("a lattice path has at least one point")
        for p, q in zip(pts, pts[1:]):
            diff = sub(p, q)
            if sorted(diff) != [0, 0, 1]:
                raise ValueError(f"{p} -> {q} is not a unit step down")
        object.__setattr__(self, "points", pts)

    @classmethod
    def from_steps(cls, b: DegreeVector, steps) -> "LatticePath":
        pts = [tuple(b)]
        for k in steps:
            p = list(pts[-1])
            p[k] -= 1
            pts.append(tuple(p))
        return cls(tuple(pts))

    @property
    def start(self) -> DegreeVector:
        return self.points[0]

    @property
    def end(self) -> DegreeVector:
        return self.points[-1]

    @property
    def steps(self) -> tuple[int, ...]:
        return tuple(
            next(k for k in range(3) if p[k] != q[k]) for p, q in zip(self.points, self.points[1:])
        )

    @property
    def interior(self) -> tuple[DegreeVector, ...]:
        return self.points[1:-1]

    def __len__(self) -> int:
        return len(self.points) - 1

    def render(self) -> str:
        from .ideal_staircase import format_degree

        return "->".join(format_degree(p) for p in self.points)


def enumerate_paths(a: DegreeVector, b: DegreeVector) -> list[LatticePath]:
    a, b = degree(a), degree(b)
    if not leq(a, b):
        raise NotComparable(f"{a} is not below {b}")
    return [LatticePath.from_steps(b, w) for w in _words(sub(b, a))]


def _words(d):
    """Step words with d[k] copies of k, in lexicographic order."""
    out = []

    def rec(rest, word):
        if not any(rest):
            out.append(tuple(word))
            return
        for k in range(3):
            if rest[k]:
                rest[k] -= 1
                word.append(k)
                rec(rest, word)
                word.pop()
                rest[k] += 1

    rec(list(d), [])
    return out


def path_count(a: DegreeVector, b: DegreeVector) -> int:
    from math import factorial

    d = sub(b, a)
    return factorial(sum(d)) // (factorial(d[0]) * factorial(d[1]) * factorial(d[2]))


@dataclass(frozen=True)
class PathProfile:
    path: LatticePath
    shapes: tuple[KoszulShape, ...]
    r: int
    s: int
    m: int
    b_lambda: DegreeVector

    def labels(self) -> list[str]:
        return [sh.label() for sh in self.shapes]


def profile(I: MonomialIdeal, path: LatticePath) -> PathProfile:
    complexes = [koszul_complex(I, p) for p in path.points]
    shapes = tuple(classify_shape(K) for K in complexes)
    inner = shapes[1:-1]
    r = sum(sh.kind is Shape.TWO_EDGES for sh in inner)
    s = sum(sh.kind is Shape.ONE_EDGE for sh in inner)
    m = sum(sh.kind is Shape.EDGE_PLUS_VERTEX for sh in inner)
    b_lambda = next(
        (p for p, K in zip(path.points, complexes) if len(K.vertices) <= 1), path.end
    )
    return PathProfile(path, shapes, r, s, m, b_lambda)


def allowed_step(prev: KoszulShape, d: int, nxt: KoszulShape) -> bool:
    """One transition of the system in the module docstring."""
    kind = prev.kind
    if kind is Shape.HOLLOW or (kind is Shape.TWO_EDGES and prev.apex == d):
        return _from_hollow(d, nxt)
    if kind is Shape.TWO_EDGES:
        pair = {prev.apex, d}
        return _edge_or_pair(nxt, pair)
    if kind in (Shape.EDGE_PLUS_VERTEX, Shape.ONE_EDGE):
        (e,) = prev.edges
        return d in e and _edge_or_pair(nxt, set(e))
    return False


def _from_hollow(d, nxt):
    if nxt.kind is Shape.TWO_EDGES:
        return nxt.apex == d
    if nxt.kind is Shape.EDGE_PLUS_VERTEX:
        return d in nxt.edges[0]
    if nxt.kind is Shape.TWO_VERTICES:
        return d not in nxt.vertices
    return nxt.kind is Shape.THREE_VERTICES


def _edge_or_pair(nxt, pair):
    if nxt.kind is Shape.TWO_VERTICES:
        return set(nxt.vertices) == pair
    if nxt.kind is Shape.ONE_EDGE:
        return set(nxt.edges[0]) == pair
    return False


def shape_sequence_valid(shapes, steps) -> bool:
    if not shapes or shapes[0].kind is not Shape.HOLLOW or not shapes[-1].h0_nonzero:
        return False
    return all(allowed_step(p, d, q) for p, d, q in zip(shapes, steps, shapes[1:]))


def validate_taxonomy(I: MonomialIdeal, path: LatticePath) -> bool:
    if classify_shape(koszul_complex(I, path.start)).kind is not Shape.HOLLOW:
        raise PreconditionFailed("the path must start at a hollow triangle")
    if not classify_shape(koszul_complex(I, path.end)).h0_nonzero:
        raise PreconditionFailed("the path must end where the reduced 0th homology is nonzero")
    prof = profile(I, path)
    return shape_sequence_valid(prof.shapes, path.steps)


def relabel(shape: KoszulShape, perm) -> KoszulShape:
    """Apply a permutation of the vertex labels (``perm[v]`` is the new name of v)."""
    edges = tuple(sorted(tuple(sorted(perm[v] for v in e)) for e in shape.edges))
    return KoszulShape(
        shape.kind,
        tuple(sorted(perm[v] for v in shape.vertices)),
        edges,
        tuple(sorted(perm[v] for v in shape.isolated)),
        None if shape.apex is None else perm[shape.apex],
    )


def symmetric_images(shapes, steps):
    """All relabelings of a shape sequence under permutations of x, y, z."""
    for perm in permutations(range(3)):
        yield [relabel(s, perm) for s in shapes], [perm[d] for d in steps]
