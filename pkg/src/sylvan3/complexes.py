"""Finite abstract simplicial complexes with rational chains.

Faces are sorted tuples of integer vertices; ``()`` is the empty face.  The
orientation of a face is the ascending order of its vertices unless the face
is listed in ``SimplicialComplex.flipped``, in which case its orientation is
reversed.  Boundary coefficients are taken relative to these orientations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping

from .rational_linalg import RatMatrix, format_rat, kernel, rank

Face = tuple[int, ...]
EMPTY: Face = ()


def face(vertices: Iterable[int]) -> Face:
    f = tuple(sorted(set(vertices)))
    return f


def dim(f: Face) -> int:
    return len(f) - 1


@dataclass(frozen=True)
class SimplicialComplex:
    faces: frozenset
    flipped: frozenset = field(default=frozenset())

    def __post_init__(self):
        faces = frozenset(face(f) for f in self.faces)
        object.__setattr__(self, "faces", faces)
        object.__setattr__(self, "flipped", frozenset(face(f) for f in self.flipped) & faces)
        for f in faces:
            for sub in combinations(f, len(f) - 1) if f else ():
                if sub not in faces:
                    raise ValueError(f"not closed under subfaces: {f} lacks {sub}")

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[int]], flipped=frozenset()) -> "SimplicialComplex":
        faces = set()
        for fc in facets:
            fc = face(fc)
            for k in range(len(fc) + 1):
                faces.update(combinations(fc, k))
        return cls(frozenset(faces), frozenset(flipped))

    def __contains__(self, f) -> bool:
        return face(f) in self.faces

    def __len__(self) -> int:
        return len(self.faces)

    @property
    def dimension(self) -> int:
        return max((dim(f) for f in self.faces), default=-2)

    def faces_of_dim(self, d: int) -> list[Face]:
        return sorted(f for f in self.faces if len(f) == d + 1)

    @property
    def vertices(self) -> list[int]:
        return [f[0] for f in self.faces_of_dim(0)]

    def orientation(self, f: Face) -> int:
        return -1 if f in self.flipped else 1

    def boundary_coefficient(self, sub: Face, f: Face) -> int:
        """Coefficient of ``sub`` in the boundary of ``f`` (0 unless ``sub`` is a facet of ``f``)."""
        if len(sub) + 1 != len(f) or not set(sub) <= set(f):
            return 0
        (missing,) = set(f) - set(sub)
        pos = f.index(missing)
        return (-1) ** pos * self.orientation(f) * self.orientation(sub)

    def boundary_matrix(self, i: int) -> RatMatrix:
        """Matrix of the boundary from i-chains to (i-1)-chains.

        Rows are the (i-1)-faces and columns the i-faces, both in sorted order.
        For ``i == -1`` the target is the zero space.
        """
        cols = self.faces_of_dim(i)
        if i <= -1:
            return RatMatrix(0, len(cols), ())
        rows = self.faces_of_dim(i - 1)
        return RatMatrix.from_rows(
            [[self.boundary_coefficient(r, c) for c in cols] for r in rows], len(cols)
        )

    def boundary(self, chain: "Chain") -> "Chain":
        out: dict[Face, Fraction] = {}
        for f, c in chain.terms:
            for v in f:
                sub = tuple(u for u in f if u != v)
                out[sub] = out.get(sub, Fraction(0)) + c * self.boundary_coefficient(sub, f)
        return Chain.from_dict(chain.dim - 1, out)

    def restrict(self, keep: Iterable[Face]) -> "SimplicialComplex":
        """Subcomplex generated by ``keep``."""
        return SimplicialComplex.from_facets(keep, self.flipped)

    def describe(self, names: str | None = None) -> list[str]:
        return sorted((face_name(f, names) for f in self.faces), key=lambda s: (len(s), s))


def face_name(f: Face, names: str | None = None) -> str:
    if not f:
        return "{}"
    if names is None:
        return "".join(str(v) for v in f) if all(v < 10 for v in f) else ",".join(map(str, f))
    return "".join(names[v] for v in f)


@dataclass(frozen=True)
class Chain:
    """A rational chain: sorted ``(face, coefficient)`` pairs with zeros dropped."""

    dim: int
    terms: tuple[tuple[Face, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, d: int, coeffs: Mapping[Face, object]) -> "Chain":
        items = []
        for f, c in coeffs.items():
            c = Fraction(c)
            if c != 0:
                f = face(f)
                if len(f) != d + 1:
                    raise ValueError(f"face {f} has wrong dimension for a {d}-chain")
                items.append((f, c))
        return cls(d, tuple(sorted(items)))

    @classmethod
    def of(cls, f: Face, c=1) -> "Chain":
        return cls.from_dict(len(f) - 1, {f: c})

    @classmethod
    def from_vector(cls, d: int, faces: list[Face], vec) -> "Chain":
        return cls.from_dict(d, dict(zip(faces, vec)))

    def coeff(self, f: Face) -> Fraction:
        for g, c in self.terms:
            if g == f:
                return c
        return Fraction(0)

    def as_dict(self) -> dict[Face, Fraction]:
        return dict(self.terms)

    def vector(self, faces: list[Face]) -> list[Fraction]:
        d = self.as_dict()
        return [d.get(f, Fraction(0)) for f in faces]

    @property
    def support(self) -> list[Face]:
        return [f for f, _ in self.terms]

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Chain") -> "Chain":
        if self.dim != other.dim and self.terms and other.terms:
            raise ValueError("dimension mismatch")
        d = self.as_dict()
        for f, c in other.terms:
            d[f] = d.get(f, Fraction(0)) + c
        return Chain.from_dict(self.dim if self.terms else other.dim, d)

    def __neg__(self) -> "Chain":
        return Chain(self.dim, tuple((f, -c) for f, c in self.terms))

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def scale(self, k) -> "Chain":
        return Chain.from_dict(self.dim, {f: c * k for f, c in self.terms})

    def render(self, names: str | None = None) -> str:
        if not self.terms:
            return "0"
        out = []
        for f, c in self.terms:
            name = face_name(f, names)
            if c == 1:
                term = f"+ {name}"
            elif c == -1:
                term = f"- {name}"
            elif c > 0:
                term = f"+ {format_rat(c)}*{name}"
            else:
                term = f"- {format_rat(-c)}*{name}"
            out.append(term)
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def homology_dim(K: SimplicialComplex, i: int) -> int:
    n = len(K.faces_of_dim(i))
    return n - rank(K.boundary_matrix(i)) - rank(K.boundary_matrix(i + 1))


def cycle_space(K: SimplicialComplex, i: int) -> list[Chain]:
    faces = K.faces_of_dim(i)
    return [Chain.from_vector(i, faces, v) for v in kernel(K.boundary_matrix(i))]
