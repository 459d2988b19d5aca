"""Explicit formulas for sylvan matrix entries of three-variable monomial ideals.

F0 <- F1.  For a vertex ``v`` of ``K^b`` with ``K^b`` disconnected and a
generator ``a <= b``, the entry ``D[empty, v]`` depends on the component of
``v``: an isolated vertex gives 1 for the generator on its ray, an edge
``uv`` gives ``sum over paths lam of 2^-|b - b_lam|`` where ``b_lam`` is the
first point of ``lam`` whose complex has at most one vertex, and anything
else is 0.  :func:`grid_count` reaches the same number by counting random
walks, which makes it a useful independent check.

F1 <- F2.  With ``K^b`` a hollow triangle, the contribution of a path is
read off its shape sequence (see :mod:`sylvan3.lattice`).  Write ``i`` for
the first step, ``R = 3^r`` with ``r`` the number of interior TwoEdges
complexes, ``C = (R + 1) / 2`` and ``F = (R - 1) / 2``.  The edge ``jk``
opposite ``i`` always gets a zero column.  Three endings occur:

* EdgePlusVertex or ThreeVertices, reached by a step ``i`` (3 x 2 table
  with denominators ``3R``);
* TwoVertices ``{j, k}``, reached by a step ``i`` (entries +-1/2);
* TwoVertices ``{i, j}`` at the end of a chain of TwoEdges, EdgePlusVertex
  and OneEdge complexes (entries ``C`` and ``F`` over ``R * 2^(s+m+1)``
  with ``s`` OneEdge and ``m`` EdgePlusVertex complexes on the way).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .complexes import Face
from .fence_oracle import SylvanMatrix, _faces
from .ideal_staircase import (
    DegreeVector,
    MonomialIdeal,
    degree,
    generators_behind,
    leq,
    norm1,
    sub,
    support,
)
from .koszul import Shape, classify_shape, edge, koszul_complex, sign
from .lattice import (
    LatticePath,
    NotComparable,
    PreconditionFailed,
    allowed_step,
    enumerate_paths,
    profile,
)
from .rational_linalg import RatMatrix


class UnclassifiablePath(ValueError):
    pass


class UnsupportedShape(ValueError):
    pass


@dataclass(frozen=True)
class PathContribution:
    path: LatticePath
    block: RatMatrix
    case_tag: str


# ------------------------------------------------------------------ F0 <- F1


def _component(K, v):
    comp, todo = {v}, [v]
    while todo:
        u = todo.pop()
        for e in K.faces_of_dim(1):
            if u in e:
                for w in e:
                    if w not in comp:
                        comp.add(w)
                        todo.append(w)
    return comp


def _check_f0f1(I, a, b):
    a, b = degree(a), degree(b)
    if not I.is_generator(a):
        raise PreconditionFailed(f"{a} is not a minimal generator")
    if not leq(a, b):
        raise NotComparable(f"{a} is not below {b}")
    if not classify_shape(koszul_complex(I, b)).h0_nonzero:
        raise PreconditionFailed(f"the complex at {b} is connected")
    return a, b


def entry_F0F1(I: MonomialIdeal, a: DegreeVector, b: DegreeVector, v: int) -> Fraction:
    a, b = _check_f0f1(I, a, b)
    K = koszul_complex(I, b)
    if (v,) not in K.faces:
        raise PreconditionFailed(f"vertex {v} is not in the complex at {b}")
    comp = _component(K, v)
    if not set(support(sub(b, a))) <= comp:
        return Fraction(0)
    if len(comp) == 1:
        return Fraction(1)
    total = Fraction(0)
    for lam in enumerate_paths(a, b):
        total += Fraction(1, 2 ** norm1(sub(b, profile(I, lam).b_lambda)))
    return total


def _edge_of(I, b):
    shape = classify_shape(koszul_complex(I, b))
    if shape.kind is not Shape.EDGE_PLUS_VERTEX:
        raise PreconditionFailed(f"the complex at {b} is {shape.label()}, not EdgePlusVertex")
    return shape.edges[0]


def grid_count(I: MonomialIdeal, a: DegreeVector, b: DegreeVector) -> Fraction:
    """Fraction of the ``2^m`` walks in the edge plane that end up at ``a``.

    A walk leaves ``b`` using only the two edge directions.  At its first
    point with at most one vertex the way on is forced (keep stepping in the
    direction of the remaining vertex until a generator is reached); the
    walk is credited to that generator.  ``m`` is the longest stretch
    ``|b - b_lam|`` over the generators behind ``b`` in the edge plane.
    """
    a, b = _check_f0f1(I, a, b)
    u, w = _edge_of(I, b)
    if not set(support(sub(b, a))) <= {u, w}:
        raise PreconditionFailed(f"{a} is not behind {b} in the edge directions")
    m = max(
        norm1(sub(b, profile(I, lam).b_lambda))
        for g in generators_behind(I, b, (u, w))
        for lam in enumerate_paths(g, b)
    )
    hits = 0
    for walk in product((u, w), repeat=m):
        if _walk_target(I, b, walk) == a:
            hits += 1
    return Fraction(hits, 2**m)


def _walk_target(I, b, walk):
    p = b
    for d in walk:
        if len(koszul_complex(I, p).vertices) <= 1:
            break
        if p[d] == 0:
            return None
        p = p[:d] + (p[d] - 1,) + p[d + 1:]
    K = koszul_complex(I, p)
    if len(K.vertices) > 1:
        return None
    while K.vertices:
        (d,) = K.vertices
        p = p[:d] + (p[d] - 1,) + p[d + 1:]
        K = koszul_complex(I, p)
    return p if I.is_generator(p) else None


# ------------------------------------------------------------------ F1 <- F2


def _others(i):
    j, k = (v for v in range(3) if v != i)
    return j, k


def _block(rows, cols, values):
    """Matrix on ``rows`` x ``cols`` with ``values[(vertex, edge)]``, zero elsewhere."""
    return RatMatrix.from_rows(
        [[values.get((r[0], c), Fraction(0)) for c in cols] for r in rows], len(cols)
    )


def _ending_via_i(i, R):
    j, k = _others(i)
    ij, ik = edge(i, j), edge(i, k)
    C, F = (R + 1) // 2, (R - 1) // 2
    den = 3 * R
    return {
        (i, ij): Fraction(sign(j, ij), den),
        (i, ik): Fraction(sign(k, ik), den),
        (j, ij): Fraction(sign(i, ij) * (R + C), den),
        (j, ik): Fraction(sign(k, ik) * (R + F), den),
        (k, ij): Fraction(sign(j, ij) * (R + F), den),
        (k, ik): Fraction(sign(i, ik) * (R + C), den),
    }


def _ending_opposite(i):
    j, k = _others(i)
    ij, ik = edge(i, j), edge(i, k)
    half = Fraction(1, 2)
    return {
        (j, ij): sign(i, ij) * half,
        (k, ij): sign(j, ij) * half,
        (j, ik): sign(k, ik) * half,
        (k, ik): sign(i, ik) * half,
    }


def _ending_pair(i, j, R, s, m):
    (k,) = {0, 1, 2} - {i, j}
    ij, ik = edge(i, j), edge(i, k)
    C, F = (R + 1) // 2, (R - 1) // 2
    den = R * 2 ** (s + m + 1)
    return {
        (i, ij): Fraction(sign(j, ij) * C, den),
        (j, ij): Fraction(sign(i, ij) * C, den),
        # the ik column carries the opposite signs to the ij column pattern
        (i, ik): Fraction(sign(i, ik) * F, den),
        (j, ik): Fraction(sign(k, ik) * F, den),
    }


def _dispatch(shapes, steps):
    """Entries and a descriptive tag for one classified shape sequence."""
    i = steps[0]
    inner = shapes[1:-1]
    last = shapes[-1]
    kinds = [sh.kind for sh in inner]
    r = kinds.count(Shape.TWO_EDGES)
    s = kinds.count(Shape.ONE_EDGE)
    m = kinds.count(Shape.EDGE_PLUS_VERTEX)
    R = 3**r
    tag = " > ".join(sh.tag for sh in shapes)
    if kinds != [Shape.TWO_EDGES] * len(kinds) and last.kind is not Shape.TWO_VERTICES:
        raise UnclassifiablePath(tag)
    if last.kind in (Shape.EDGE_PLUS_VERTEX, Shape.THREE_VERTICES):
        return _ending_via_i(i, R), tag
    if last.kind is Shape.TWO_VERTICES:
        if i not in last.vertices:
            if r != len(kinds):
                raise UnclassifiablePath(tag)
            return _ending_opposite(i), tag
        (j,) = (v for v in last.vertices if v != i)
        if r + s + m != len(kinds) or m > 1:
            raise UnclassifiablePath(tag)
        return _ending_pair(i, j, R, s, m), tag
    raise UnclassifiablePath(tag)


def _hollow(I, b):
    shape = classify_shape(koszul_complex(I, b))
    if shape.kind is not Shape.HOLLOW:
        raise UnsupportedShape(f"the complex at {b} is {shape.label()}, not a hollow triangle")


def path_contribution_F1F2(I: MonomialIdeal, path: LatticePath) -> PathContribution:
    _hollow(I, path.start)
    prof = profile(I, path)
    shapes, steps = prof.shapes, path.steps
    if not steps or not shapes[-1].h0_nonzero:
        raise PreconditionFailed("the path must end where the reduced 0th homology is nonzero")
    if not all(allowed_step(p, d, q) for p, d, q in zip(shapes, steps, shapes[1:])):
        raise UnclassifiablePath(" > ".join(sh.tag for sh in shapes))
    values, tag = _dispatch(shapes, steps)
    Ka, Kb = koszul_complex(I, path.end), koszul_complex(I, path.start)
    return PathContribution(path, _block(_faces(Ka, 0), _faces(Kb, 1), values), tag)


def contributing_paths(I: MonomialIdeal, a: DegreeVector, b: DegreeVector):
    """Paths from b to a whose shape sequence the transition system accepts.

    Found depth first in lexicographic step order, extending a prefix only
    along allowed transitions; every other path contributes nothing.
    """
    a, b = degree(a), degree(b)
    if not leq(a, b):
        raise NotComparable(f"{a} is not below {b}")

    def rec(p, shape, steps):
        if p == a:
            if steps and shape.h0_nonzero:
                yield LatticePath.from_steps(b, steps)
            return
        for k in range(3):
            if p[k] == a[k]:
                continue
            q = p[:k] + (p[k] - 1,) + p[k + 1:]
            nxt = classify_shape(koszul_complex(I, q))
            if allowed_step(shape, k, nxt):
                yield from rec(q, nxt, steps + [k])

    yield from rec(b, classify_shape(koszul_complex(I, b)), [])


def _f1f2_block(I, a, b):
    _hollow(I, b)
    Ka, Kb = koszul_complex(I, a), koszul_complex(I, b)
    rows, cols = _faces(Ka, 0), _faces(Kb, 1)
    total = RatMatrix.zeros(len(rows), len(cols))
    if a == b or not classify_shape(Ka).h0_nonzero:
        return rows, cols, total
    for lam in contributing_paths(I, a, b):
        total = total + path_contribution_F1F2(I, lam).block
    return rows, cols, total


def entry_F1F2(I: MonomialIdeal, a: DegreeVector, b: DegreeVector, v: int, e: Face) -> Fraction:
    a, b = degree(a), degree(b)
    if not classify_shape(koszul_complex(I, a)).h0_nonzero:
        raise PreconditionFailed(f"the complex at {a} is connected")
    rows, cols, total = _f1f2_block(I, a, b)
    if (v,) not in rows or tuple(e) not in cols:
        return Fraction(0)
    return total[rows.index((v,)), cols.index(tuple(e))]


def sylvan_matrix_closed(I: MonomialIdeal, a: DegreeVector, b: DegreeVector, i: int) -> SylvanMatrix:
    a, b = degree(a), degree(b)
    if i == 1:
        rows, cols, total = _f1f2_block(I, a, b)
        return SylvanMatrix(a, b, 1, rows, cols, total)
    if i != 0:
        raise ValueError("only the maps F0 <- F1 (i=0) and F1 <- F2 (i=1) exist here")
    Ka, Kb = koszul_complex(I, a), koszul_complex(I, b)
    rows, cols = _faces(Ka, -1), _faces(Kb, 0)
    if a == b or not rows:
        return SylvanMatrix(a, b, 0, rows, cols, RatMatrix.zeros(len(rows), len(cols)))
    entries = [[entry_F0F1(I, a, b, v) for (v,) in cols]]
    return SylvanMatrix(a, b, 0, rows, cols, RatMatrix.from_rows(entries, len(cols)))
