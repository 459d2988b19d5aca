"""Shrubberies, stake sets and hedges of a simplicial complex.

A shrubbery in dimension i is a set of i-faces whose boundaries form a basis
of the (i-1)-boundaries.  A stake set in dimension i-1 is a set of
(i-1)-faces whose complement descends to a basis of chains modulo
boundaries.  Everything is enumerated by brute force over subsets, which is
fine for the complexes that occur here (at most a handful of faces per
dimension).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .complexes import Chain, Face, SimplicialComplex
from .rational_linalg import RatMatrix, gcd_of_maximal_minors, rank, rref, solve_unique


class NotAStake(ValueError):
    pass


@dataclass(frozen=True)
class Shrubbery:
    complex: SimplicialComplex
    dim: int
    faces: tuple[Face, ...]


@dataclass(frozen=True)
class StakeSet:
    complex: SimplicialComplex
    dim: int
    faces: tuple[Face, ...]


@dataclass(frozen=True)
class Hedge:
    stake_set: StakeSet
    shrubbery: Shrubbery

    @property
    def dim(self) -> int:
        return self.shrubbery.dim


def _int_rows(M: RatMatrix) -> list[list[int]]:
    return [[int(x) for x in M.row(r)] for r in range(M.rows)]


@lru_cache(maxsize=None)
def enumerate_shrubberies(K: SimplicialComplex, i: int) -> tuple[Shrubbery, ...]:
    faces = K.faces_of_dim(i)
    d = K.boundary_matrix(i)
    r = rank(d)
    out = []
    for sel in combinations(range(len(faces)), r):
        if rank(d.submatrix(range(d.rows), sel)) == r:
            out.append(Shrubbery(K, i, tuple(faces[c] for c in sel)))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_stake_sets(K: SimplicialComplex, d: int) -> tuple[StakeSet, ...]:
    """Stake sets of dimension ``d`` (subsets of the d-faces)."""
    faces = K.faces_of_dim(d)
    bd = K.boundary_matrix(d + 1)
    r = rank(bd)
    out = []
    for sel in combinations(range(len(faces)), r):
        if rank(bd.submatrix(sel, range(bd.cols))) == r:
            out.append(StakeSet(K, d, tuple(faces[s] for s in sel)))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_hedges(K: SimplicialComplex, i: int) -> tuple[Hedge, ...]:
    return tuple(
        Hedge(S, T) for S in enumerate_stake_sets(K, i - 1) for T in enumerate_shrubberies(K, i)
    )


def is_shrubbery(K: SimplicialComplex, i: int, faces) -> bool:
    faces = set(faces)
    return any(set(T.faces) == faces for T in enumerate_shrubberies(K, i))


def is_stake_set(K: SimplicialComplex, d: int, faces) -> bool:
    faces = set(faces)
    return any(set(S.faces) == faces for S in enumerate_stake_sets(K, d))


def circuit(K: SimplicialComplex, T: Shrubbery, tau: Face) -> Chain:
    """The unique cycle ``tau - t`` with ``t`` supported on the shrubbery.

    For ``tau`` in the shrubbery this is ``tau - tau = 0``.
    """
    if len(tau) != T.dim + 1:
        raise ValueError("face dimension does not match the shrubbery")
    return _circuit(K, T, tau)


@lru_cache(maxsize=None)
def _circuit(K, T, tau):
    if tau in T.faces:
        return Chain(T.dim)
    rows = K.faces_of_dim(T.dim - 1)
    cols = list(T.faces)
    M = RatMatrix.from_rows(
        [[K.boundary_coefficient(r, c) for c in cols] for r in rows], len(cols)
    )
    rhs = [K.boundary_coefficient(r, tau) for r in rows]
    t = solve_unique(M, rhs)
    coeffs = {tau: 1}
    for f, c in zip(cols, t):
        coeffs[f] = coeffs.get(f, 0) - c
    return Chain.from_dict(T.dim, coeffs)


def shrub(K: SimplicialComplex, H: Hedge, sigma: Face) -> Chain:
    """Chain on the shrubbery whose boundary is 1 on ``sigma`` and 0 on the other stakes."""
    if sigma not in H.stake_set.faces:
        raise NotAStake(f"{sigma} is not a stake")
    return _shrub(K, H, sigma)


@lru_cache(maxsize=None)
def _shrub(K, H, sigma):
    stakes = list(H.stake_set.faces)
    cols = list(H.shrubbery.faces)
    M = RatMatrix.from_rows(
        [[K.boundary_coefficient(s, c) for c in cols] for s in stakes], len(cols)
    )
    rhs = [int(s == sigma) for s in stakes]
    x = solve_unique(M, rhs)
    return Chain.from_dict(H.shrubbery.dim, dict(zip(cols, x)))


@lru_cache(maxsize=None)
def _boundary_basis(K: SimplicialComplex, i: int) -> RatMatrix:
    """Independent columns of the boundary into dimension i, spanning the i-boundaries."""
    bd = K.boundary_matrix(i + 1)
    _, pivots = rref(bd)
    return bd.submatrix(range(bd.rows), pivots)


def hedge_rim(K: SimplicialComplex, S: StakeSet, tau: Face) -> Chain:
    """The chain off the stake set that differs from ``tau`` by a boundary."""
    if len(tau) != S.dim + 1:
        raise ValueError("face dimension does not match the stake set")
    return _hedge_rim(K, S, tau)


@lru_cache(maxsize=None)
def _hedge_rim(K, S, tau):
    faces = K.faces_of_dim(S.dim)
    B = _boundary_basis(K, S.dim)
    if B.cols == 0:
        return Chain.of(tau)
    idx = [faces.index(s) for s in S.faces]
    target = [Fraction(int(s == tau)) for s in S.faces]
    c = solve_unique(B.submatrix(idx, range(B.cols)), target)
    beta = B.apply(c)
    vec = [Fraction(int(f == tau)) - b for f, b in zip(faces, beta)]
    return Chain.from_vector(S.dim, faces, vec)


def shrubbery_determinant(K: SimplicialComplex, T: Shrubbery) -> int:
    """Index of the lattice spanned by the shrubbery's boundaries in the integral boundaries."""
    full = K.boundary_matrix(T.dim)
    r = len(T.faces)
    faces = K.faces_of_dim(T.dim)
    sub = full.submatrix(range(full.rows), [faces.index(f) for f in T.faces])
    whole = gcd_of_maximal_minors(_int_rows(full), r)
    return gcd_of_maximal_minors(_int_rows(sub), r) // whole


def stake_set_determinant(K: SimplicialComplex, S: StakeSet) -> int:
    """Index of the projection of the integral boundaries onto the stake coordinates."""
    bd = K.boundary_matrix(S.dim + 1)
    faces = K.faces_of_dim(S.dim)
    sub = bd.submatrix([faces.index(s) for s in S.faces], range(bd.cols))
    return gcd_of_maximal_minors(_int_rows(sub), len(S.faces))


@lru_cache(maxsize=None)
def delta_T(K: SimplicialComplex, i: int) -> int:
    return sum(shrubbery_determinant(K, T) ** 2 for T in enumerate_shrubberies(K, i))


@lru_cache(maxsize=None)
def delta_S(K: SimplicialComplex, d: int) -> int:
    return sum(stake_set_determinant(K, S) ** 2 for S in enumerate_stake_sets(K, d))


def delta_ST(K: SimplicialComplex, i: int) -> int:
    return delta_S(K, i - 1) * delta_T(K, i)


@lru_cache(maxsize=None)
def verify_unimodular(K: SimplicialComplex) -> bool:
    top = max(K.dimension, 0) + 1
    for i in range(-1, top + 1):
        for T in enumerate_shrubberies(K, i):
            if abs(shrubbery_determinant(K, T)) != 1:
                return False
        for S in enumerate_stake_sets(K, i):
            if abs(stake_set_determinant(K, S)) != 1:
                return False
    return True


def lex_least_stake_set(K: SimplicialComplex, d: int) -> StakeSet:
    return enumerate_stake_sets(K, d)[0]
