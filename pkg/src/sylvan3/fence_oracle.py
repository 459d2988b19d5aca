"""Sylvan matrix entries from hedgerows and chain-link fences.

For ``a <= b`` and homological index ``i`` the entry ``D[sigma, tau]`` is

    sum over paths lam from b to a of  (1 / Delta_{i,lam}) * sum of fence weights,

where a fence runs  tau -- tau_0 \\ sigma_1 / tau_1 \\ ... / tau_{j-1} \\ sigma_j -- sigma.

Two evaluations are provided.  :func:`path_block_enumerated` literally lists
every hedgerow and every fence on it.  :func:`path_block` uses the fact that a
fence weight is a product of factors each depending on the choice made at a
single lattice point, so the double sum over hedgerows and fences is a product
of small per-point matrices (averaged over the local choices).  Paths are then
explored depth first from ``b`` and abandoned as soon as that running product
vanishes, which is exactly when every fence along every extension terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .complexes import Chain, Face, SimplicialComplex, face_name, homology_dim
from .hedge import (
    Hedge,
    Shrubbery,
    StakeSet,
    circuit,
    delta_S,
    delta_ST,
    delta_T,
    enumerate_hedges,
    enumerate_shrubberies,
    enumerate_stake_sets,
    hedge_rim,
    shrub,
    shrubbery_determinant,
    stake_set_determinant,
)
from .ideal_staircase import DegreeVector, MonomialIdeal, degree, format_degree, leq
from .koszul import VERTEX_NAMES, koszul_complex
from .lattice import LatticePath, NotComparable, enumerate_paths
from .rational_linalg import RatMatrix, format_rat


@dataclass(frozen=True)
class Hedgerow:
    path: LatticePath
    stake_at_b: StakeSet | None
    hedges: tuple[Hedge, ...]
    shrubbery_at_a: Shrubbery | None


@dataclass(frozen=True)
class ChainLinkFence:
    taus: tuple[Face, ...]
    sigmas: tuple[Face, ...]
    weight: Fraction


@dataclass(frozen=True)
class SylvanMatrix:
    target: DegreeVector
    source: DegreeVector
    hom: int
    rows: tuple[Face, ...]
    cols: tuple[Face, ...]
    matrix: RatMatrix

    def entry(self, sigma: Face, tau: Face) -> Fraction:
        return self.matrix[self.rows.index(tuple(sigma)), self.cols.index(tuple(tau))]

    def block(self) -> list[list[Fraction]]:
        return self.matrix.to_rows()

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def same_entries(self, other: "SylvanMatrix") -> bool:
        return (self.rows, self.cols, self.matrix) == (other.rows, other.cols, other.matrix)

    def to_dict(self) -> dict:
        return {
            "from": format_degree(self.source),
            "to": format_degree(self.target),
            "hom": self.hom,
            "rows": [face_name(f, VERTEX_NAMES) for f in self.rows],
            "cols": [face_name(f, VERTEX_NAMES) for f in self.cols],
            "entries": [[format_rat(x) for x in row] for row in self.block()],
        }

    def render(self) -> str:
        rows = [face_name(f, VERTEX_NAMES) for f in self.rows]
        cols = [face_name(f, VERTEX_NAMES) for f in self.cols]
        cells = [[format_rat(x) for x in row] for row in self.block()]
        width = max([len(c) for c in cols] + [len(x) for r in cells for x in r] + [1])
        lead = max([len(r) for r in rows] + [1])
        lines = [" " * lead + " " + " ".join(c.rjust(width) for c in cols)]
        for name, row in zip(rows, cells):
            lines.append(name.rjust(lead) + " " + " ".join(x.rjust(width) for x in row))
        return "\n".join(lines)


def _faces(K: SimplicialComplex, d: int) -> tuple[Face, ...]:
    return tuple(K.faces_of_dim(d))


# ---------------------------------------------------------------- enumeration


def enumerate_hedgerows(I: MonomialIdeal, path: LatticePath, i: int) -> list[Hedgerow]:
    if len(path) == 0:
        return [Hedgerow(path, None, (), None)]
    Kb = koszul_complex(I, path.start)
    Ka = koszul_complex(I, path.end)
    choices = [enumerate_stake_sets(Kb, i)]
    choices += [enumerate_hedges(koszul_complex(I, p), i) for p in path.interior]
    choices.append(enumerate_shrubberies(Ka, i - 1))
    return [Hedgerow(path, c[0], tuple(c[1:-1]), c[-1]) for c in product(*choices)]


def hedgerow_count(I: MonomialIdeal, path: LatticePath, i: int) -> int:
    """Size of the product that :func:`enumerate_hedgerows` would list."""
    if len(path) == 0:
        return 1
    n = len(enumerate_stake_sets(koszul_complex(I, path.start), i))
    for p in path.interior:
        n *= len(enumerate_hedges(koszul_complex(I, p), i))
    return n * len(enumerate_shrubberies(koszul_complex(I, path.end), i - 1))


def enumerate_fences(
    I: MonomialIdeal, path: LatticePath, h: Hedgerow, tau: Face, sigma: Face, i: int
) -> list[ChainLinkFence]:
    tau, sigma = tuple(tau), tuple(sigma)
    if len(path) == 0:
        return []
    pts = path.points
    steps = path.steps
    j = len(path)
    Kb = koszul_complex(I, pts[0])
    Ka = koszul_complex(I, pts[-1])
    out: list[ChainLinkFence] = []

    def walk(ell, taus, sigmas, w):
        # taus[-1] is tau_{ell-1}; move along step ell
        prev = taus[-1]
        k = steps[ell - 1]
        if k not in prev:
            return
        s = tuple(v for v in prev if v != k)
        w = w * koszul_complex(I, pts[ell - 1]).boundary_coefficient(s, prev)
        if ell == j:
            c = circuit(Ka, h.shrubbery_at_a, s).coeff(sigma)
            if c:
                out.append(ChainLinkFence(tuple(taus), tuple(sigmas) + (s,), w * c))
            return
        H = h.hedges[ell - 1]
        if s not in H.stake_set.faces:
            return
        K = koszul_complex(I, pts[ell])
        for t, c in shrub(K, H, s).terms:
            walk(ell + 1, taus + [t], sigmas + [s], w * c)

    for t0, c in hedge_rim(Kb, h.stake_at_b, tau).terms:
        walk(1, [t0], [], Fraction(c))
    return out


def delta_lambda(I: MonomialIdeal, path: LatticePath, i: int) -> int:
    if len(path) == 0:
        return 1
    n = delta_S(koszul_complex(I, path.start), i)
    for p in path.interior:
        n *= delta_ST(koszul_complex(I, p), i)
    return n * delta_T(koszul_complex(I, path.end), i - 1)


def delta_lambda_edge_formula(I: MonomialIdeal, path: LatticePath) -> int:
    """``v_j * prod (e_l + 1)`` for index one: vertices at the end, edges inside."""
    n = len(koszul_complex(I, path.end).vertices)
    for p in path.interior:
        n *= len(koszul_complex(I, p).faces_of_dim(1)) + 1
    return n


def _hedgerow_delta_sq(I, h: Hedgerow) -> int:
    path = h.path
    Kb = koszul_complex(I, path.start)
    Ka = koszul_complex(I, path.end)
    d = stake_set_determinant(Kb, h.stake_at_b) ** 2 * shrubbery_determinant(Ka, h.shrubbery_at_a) ** 2
    for p, H in zip(path.interior, h.hedges):
        K = koszul_complex(I, p)
        d *= (stake_set_determinant(K, H.stake_set) * shrubbery_determinant(K, H.shrubbery)) ** 2
    return d


def path_block_enumerated(I: MonomialIdeal, path: LatticePath, i: int) -> dict:
    """Contribution of one path, by listing every hedgerow and every fence.

    Returns ``{(sigma, tau): value}`` with zero entries omitted.  Fence
    weights carry the squared determinants of the hedgerow, which are
    asserted to equal one.
    """
    Kb = koszul_complex(I, path.start)
    Ka = koszul_complex(I, path.end)
    out: dict = {}
    if len(path) == 0:
        return out
    total = Fraction(1, delta_lambda(I, path, i))
    for h in enumerate_hedgerows(I, path, i):
        dsq = _hedgerow_delta_sq(I, h)
        assert dsq == 1, "torsion in a three-variable Koszul complex"
        for tau in _faces(Kb, i):
            for sigma in _faces(Ka, i - 1):
                for f in enumerate_fences(I, path, h, tau, sigma, i):
                    key = (sigma, tau)
                    out[key] = out.get(key, Fraction(0)) + total * dsq * f.weight
    return {k: v for k, v in out.items() if v}


# ------------------------------------------------------- factored evaluation
#
# A state is a dict face -> row vector over the source columns (the i-faces
# of K^b).  Local averages are taken over the choices available at a point.


@lru_cache(maxsize=None)
def _start_matrix(Kb: SimplicialComplex, i: int):
    """avg over stake sets S of K^b: tau0 -> tau weight (hedge rim coefficient)."""
    cols = _faces(Kb, i)
    stakes = enumerate_stake_sets(Kb, i)
    scale = Fraction(1, delta_S(Kb, i))
    acc: dict = {}
    for S in stakes:
        dsq = stake_set_determinant(Kb, S) ** 2
        for c, tau in enumerate(cols):
            for t0, w in hedge_rim(Kb, S, tau).terms:
                row = acc.setdefault(t0, [Fraction(0)] * len(cols))
                row[c] += scale * dsq * w
    return {t: tuple(r) for t, r in acc.items()}


@lru_cache(maxsize=None)
def _chain_link_matrix(K: SimplicialComplex, i: int):
    """avg over hedges at an interior point: stake sigma -> {tau: weight}."""
    scale = Fraction(1, delta_ST(K, i))
    acc: dict = {}
    for H in enumerate_hedges(K, i):
        dsq = (stake_set_determinant(K, H.stake_set) * shrubbery_determinant(K, H.shrubbery)) ** 2
        for s in H.stake_set.faces:
            row = acc.setdefault(s, {})
            for t, w in shrub(K, H, s).terms:
                row[t] = row.get(t, Fraction(0)) + scale * dsq * w
    return {s: {t: w for t, w in row.items() if w} for s, row in acc.items()}


@lru_cache(maxsize=None)
def _cycle_link_matrix(Ka: SimplicialComplex, i: int):
    """avg over shrubberies T of K^a in dim i-1: sigma_j -> {sigma: weight}."""
    scale = Fraction(1, delta_T(Ka, i - 1))
    acc: dict = {}
    for T in enumerate_shrubberies(Ka, i - 1):
        dsq = shrubbery_determinant(Ka, T) ** 2
        for s in _faces(Ka, i - 1):
            row = acc.setdefault(s, {})
            for t, w in circuit(Ka, T, s).terms:
                row[t] = row.get(t, Fraction(0)) + scale * dsq * w
    return {s: {t: w for t, w in row.items() if w} for s, row in acc.items()}


def _descend(K_prev: SimplicialComplex, state: dict, k: int) -> dict:
    """Drop vertex k from every tau, weighting by its boundary coefficient."""
    out: dict = {}
    for tau, row in state.items():
        if k not in tau:
            continue
        s = tuple(v for v in tau if v != k)
        c = K_prev.boundary_coefficient(s, tau)
        acc = out.setdefault(s, [Fraction(0)] * len(row))
        for n, x in enumerate(row):
            acc[n] += c * x
    return out


def _apply(link: dict, state: dict) -> dict:
    out: dict = {}
    for s, row in state.items():
        for t, w in link.get(s, {}).items():
            acc = out.setdefault(t, [Fraction(0)] * len(row))
            for n, x in enumerate(row):
                acc[n] += w * x
    return {t: r for t, r in out.items() if any(r)}


def _to_block(state: dict, rows, ncols) -> RatMatrix:
    zero = [Fraction(0)] * ncols
    return RatMatrix.from_rows([state.get(s, zero) for s in rows], ncols)


def path_block(I: MonomialIdeal, path: LatticePath, i: int) -> RatMatrix:
    """Contribution of one path as a matrix (rows (i-1)-faces of K^a, cols i-faces of K^b)."""
    Kb = koszul_complex(I, path.start)
    Ka = koszul_complex(I, path.end)
    rows, cols = _faces(Ka, i - 1), _faces(Kb, i)
    if len(path) == 0:
        return RatMatrix.zeros(len(rows), len(cols))
    state = {t: list(r) for t, r in _start_matrix(Kb, i).items()}
    K_prev = Kb
    for ell, (p, k) in enumerate(zip(path.points[1:], path.steps), start=1):
        K = koszul_complex(I, p)
        state = _descend(K_prev, state, k)
        link = _cycle_link_matrix(K, i) if ell == len(path) else _chain_link_matrix(K, i)
        state = _apply(link, state)
        K_prev = K
    return _to_block(state, rows, len(cols))


def path_contributions(I: MonomialIdeal, a: DegreeVector, b: DegreeVector, i: int):
    """Yield ``(path, block)`` for every path from b to a with a nonzero contribution.

    Depth-first in lexicographic step order; a prefix is dropped once its
    running product is zero.
    """
    a, b = degree(a), degree(b)
    if not leq(a, b):
        raise NotComparable(f"{a} is not below {b}")
    if a == b:
        return
    Kb = koszul_complex(I, b)
    Ka = koszul_complex(I, a)
    rows, cols = _faces(Ka, i - 1), _faces(Kb, i)
    start = {t: list(r) for t, r in _start_matrix(Kb, i).items()}
    start = {t: r for t, r in start.items() if any(r)}

    def rec(p, K_prev, state, steps):
        for k in range(3):
            if p[k] == a[k]:
                continue
            q = p[:k] + (p[k] - 1,) + p[k + 1:]
            K = koszul_complex(I, q)
            nxt = _descend(K_prev, state, k)
            if q == a:
                nxt = _apply(_cycle_link_matrix(K, i), nxt)
                if nxt:
                    yield LatticePath.from_steps(b, steps + [k]), _to_block(nxt, rows, len(cols))
                continue
            nxt = _apply(_chain_link_matrix(K, i), nxt)
            if nxt:
                yield from rec(q, K, nxt, steps + [k])

    if start:
        yield from rec(b, Kb, start, [])


def sylvan_matrix_oracle(I: MonomialIdeal, a: DegreeVector, b: DegreeVector, i: int) -> SylvanMatrix:
    if i not in (0, 1):
        raise ValueError("only the maps F0 <- F1 (i=0) and F1 <- F2 (i=1) exist here")
    a, b = degree(a), degree(b)
    Kb = koszul_complex(I, b)
    Ka = koszul_complex(I, a)
    rows, cols = _faces(Ka, i - 1), _faces(Kb, i)
    total = RatMatrix.zeros(len(rows), len(cols))
    if homology_dim(Ka, i - 1) == 0:
        return SylvanMatrix(a, b, i, rows, cols, total)
    for _, block in path_contributions(I, a, b, i):
        total = total + block
    return SylvanMatrix(a, b, i, rows, cols, total)


def sylvan_entry_oracle(
    I: MonomialIdeal, a: DegreeVector, b: DegreeVector, i: int, sigma: Face, tau: Face
) -> Fraction:
    D = sylvan_matrix_oracle(I, a, b, i)
    sigma, tau = tuple(sigma), tuple(tau)
    if sigma not in D.rows or tau not in D.cols:
        return Fraction(0)
    return D.entry(sigma, tau)


def sylvan_matrix_enumerated(I: MonomialIdeal, a: DegreeVector, b: DegreeVector, i: int) -> SylvanMatrix:
    """Same matrix via literal hedgerow and fence listing over every path (slow)."""
    a, b = degree(a), degree(b)
    Kb = koszul_complex(I, b)
    Ka = koszul_complex(I, a)
    rows, cols = _faces(Ka, i - 1), _faces(Kb, i)
    acc = [[Fraction(0)] * len(cols) for _ in rows]
    for path in enumerate_paths(a, b):
        for (s, t), v in path_block_enumerated(I, path, i).items():
            acc[rows.index(s)][cols.index(t)] += v
    return SylvanMatrix(a, b, i, rows, cols, RatMatrix.from_rows(acc, len(cols)))


def chain_image(D: SylvanMatrix, chain: Chain) -> Chain:
    vec = D.matrix.apply(chain.vector(list(D.cols)))
    return Chain.from_vector(D.hom - 1, list(D.rows), vec)
