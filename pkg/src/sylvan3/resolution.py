"""The minimal free resolution 0 <- F0 <- F1 <- F2 <- 0 of a monomial ideal.

``F_i`` has one summand ``S(-b)^beta`` for every degree ``b`` with
``beta = dim H~_{i-1}(K^b) > 0``.  A summand's basis is the list of cycle
representatives chosen by :func:`sylvan3.koszul.homology_basis`.  The map
between a summand at ``b`` in ``F_{i+1}`` and one at ``a`` in ``F_i`` is the
monomial ``x^(b - a)`` times a rational block.  The block is found by
applying the sylvan matrix to each source cycle and writing the image in
the target basis modulo boundaries.

Verification works one multidegree ``d`` at a time.  The degree-``d`` strand
keeps the summands with ``b <= d``.  For a resolution of ``I`` that strand is
exact except at ``F0``, where its homology is ``I_d`` (one-dimensional when
``x^d`` lies in ``I``, zero otherwise).
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .closed_form import sylvan_matrix_closed
from .complexes import Chain, homology_dim
from .fence_oracle import SylvanMatrix, chain_image, sylvan_matrix_oracle
from .ideal_staircase import (
    DegreeVector,
    MonomialIdeal,
    format_degree,
    leq,
    sub,
)
from .koszul import homology_basis, koszul_complex
from .rational_linalg import NoSolution, RatMatrix, format_rat, rank, rref, solve_unique

METHODS = ("oracle", "closed", "both")


class ImageNotCycleModBoundary(ArithmeticError):
    pass


class MethodMismatch(AssertionError):
    """Oracle and closed form disagree on some sylvan matrix."""


@dataclass(frozen=True)
class FreeSummand:
    hom: int
    degree: DegreeVector
    basis: tuple[Chain, ...]

    @property
    def rank(self) -> int:
        return len(self.basis)


@dataclass
class SylvanResolution:
    ideal: MonomialIdeal
    summands: dict[int, list[FreeSummand]]
    # (i, a, b) -> block from the F_{i+1} summand at b to the F_i summand at a
    blocks: dict[tuple[int, DegreeVector, DegreeVector], RatMatrix] = field(default_factory=dict)
    sylvan: dict[tuple[int, DegreeVector, DegreeVector], SylvanMatrix] = field(default_factory=dict)
    method: str = "oracle"

    def summand(self, hom: int, degree: DegreeVector) -> FreeSummand:
        return next(s for s in self.summands[hom] if s.degree == tuple(degree))

    def betti(self) -> dict[int, list[tuple[DegreeVector, int]]]:
        return {i: [(s.degree, s.rank) for s in self.summands[i]] for i in range(3)}

    def block(self, i: int, a: DegreeVector, b: DegreeVector) -> RatMatrix:
        key = (i, tuple(a), tuple(b))
        if key in self.blocks:
            return self.blocks[key]
        return RatMatrix.zeros(self.summand(i, a).rank, self.summand(i + 1, b).rank)


def _box(top):
    return [
        (x, y, z) for x in range(top[0] + 1) for y in range(top[1] + 1) for z in range(top[2] + 1)
    ]


def betti_support(I: MonomialIdeal) -> dict[int, list[tuple[DegreeVector, int]]]:
    out = {0: [], 1: [], 2: []}
    for p in _box(I.lcm_all()):
        K = koszul_complex(I, p)
        for i in range(3):
            beta = homology_dim(K, i - 1)
            if beta:
                out[i].append((p, beta))
    return out


def induce_on_homology(
    D: SylvanMatrix, src_basis: list[Chain], tgt_basis: list[Chain], target_complex=None
) -> RatMatrix:
    """Block of the map on homology, one column per source cycle.

    ``target_complex`` supplies the boundaries to divide out; it is needed
    whenever the target chains are not in the bottom dimension.
    """
    K = target_complex
    if K is None and D.hom > 0:
        raise ValueError("the target complex is needed to reduce modulo boundaries")
    faces = list(D.rows)
    basis_cols = [c.vector(faces) for c in tgt_basis]
    boundary_cols = []
    if K is not None:
        d = K.boundary_matrix(D.hom)
        _, pivots = rref(d)
        boundary_cols = [d.col(c) for c in pivots]
    cols = basis_cols + boundary_cols
    M = RatMatrix.from_rows([[c[r] for c in cols] for r in range(len(faces))], len(cols))
    out = []
    for z in src_basis:
        image = chain_image(D, z).vector(faces)
        try:
            x = solve_unique(M, image) if cols else _zero_or_fail(image)
        except NoSolution as exc:
            raise ImageNotCycleModBoundary(
                f"image of a cycle at {format_degree(D.source)} does not reduce at "
                f"{format_degree(D.target)}"
            ) from exc
        out.append(x[: len(tgt_basis)])
    return RatMatrix.from_rows(
        [[out[c][r] for c in range(len(src_basis))] for r in range(len(tgt_basis))],
        len(src_basis),
    )


def _zero_or_fail(image):
    if any(image):
        raise NoSolution("nonzero image with an empty target")
    return []


def _sylvan(I, a, b, i, method):
    if method == "oracle":
        return sylvan_matrix_oracle(I, a, b, i)
    if method == "closed":
        return sylvan_matrix_closed(I, a, b, i)
    O = sylvan_matrix_oracle(I, a, b, i)
    C = sylvan_matrix_closed(I, a, b, i)
    if not O.same_entries(C):
        raise MethodMismatch(
            f"oracle and closed form differ for {format_degree(a)} <- {format_degree(b)}"
        )
    return O


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get("SYLVAN3_THREADS", "1")))
    except ValueError:
        return 1


def build_resolution(
    I: MonomialIdeal, method: str = "oracle", workers: int | None = None
) -> SylvanResolution:
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}")
    support = betti_support(I)
    summands = {
        i: [
            FreeSummand(i, p, tuple(homology_basis(koszul_complex(I, p), i - 1)))
            for p, _ in support[i]
        ]
        for i in range(3)
    }
    jobs = [
        (i, t, s)
        for i in (0, 1)
        for s in summands[i + 1]
        for t in summands[i]
        if t.degree != s.degree and leq(t.degree, s.degree)
    ]

    def one(job):
        i, t, s = job
        D = _sylvan(I, t.degree, s.degree, i, method)
        Ka = koszul_complex(I, t.degree)
        return D, induce_on_homology(D, list(s.basis), list(t.basis), Ka)

    n = workers or default_workers()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(one, jobs))
    else:
        results = [one(job) for job in jobs]
    R = SylvanResolution(I, summands, method=method)
    for (i, t, s), (D, blk) in zip(jobs, results):
        key = (i, t.degree, s.degree)
        R.sylvan[key] = D
        R.blocks[key] = blk
    return R


def _product_sum(R, a, c):
    total = RatMatrix.zeros(R.summand(0, a).rank, R.summand(2, c).rank)
    for s in R.summands[1]:
        b = s.degree
        if leq(a, b) and leq(b, c) and a != b and b != c:
            total = total + R.block(0, a, b) @ R.block(1, b, c)
    return total


def verify_complex(R: SylvanResolution) -> bool:
    """Whether d1 * d2 vanishes summand by summand."""
    return all(
        _product_sum(R, t.degree, u.degree).is_zero()
        for t in R.summands[0]
        for u in R.summands[2]
        if leq(t.degree, u.degree)
    )


@dataclass(frozen=True)
class VerificationReport:
    is_complex: bool
    betti_match: bool
    failing_degrees: tuple[DegreeVector, ...]

    @property
    def ok(self) -> bool:
        return self.is_complex and self.betti_match and not self.failing_degrees

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "complex": self.is_complex,
            "betti_match": self.betti_match,
            "failing_degrees": [format_degree(d) for d in self.failing_degrees],
        }


def strand_matrix(R: SylvanResolution, i: int, d: DegreeVector) -> RatMatrix:
    """The degree-``d`` piece of the differential F_i <- F_{i+1}."""
    tgt = [s for s in R.summands[i] if leq(s.degree, d)]
    src = [s for s in R.summands[i + 1] if leq(s.degree, d)]
    rows = []
    for t in tgt:
        blocks = [
            R.block(i, t.degree, s.degree)
            if leq(t.degree, s.degree) and t.degree != s.degree
            else RatMatrix.zeros(t.rank, s.rank)
            for s in src
        ]
        for r in range(t.rank):
            rows.append([x for blk in blocks for x in blk.row(r)])
    ncols = sum(s.rank for s in src)
    return RatMatrix.from_rows(rows, ncols) if rows else RatMatrix.zeros(0, ncols)


def strand_homology(R: SylvanResolution, d: DegreeVector) -> tuple[int, int, int]:
    dims = [sum(s.rank for s in R.summands[i] if leq(s.degree, d)) for i in range(3)]
    r1 = rank(strand_matrix(R, 0, d)) if dims[0] and dims[1] else 0
    r2 = rank(strand_matrix(R, 1, d)) if dims[1] and dims[2] else 0
    return (dims[0] - r1, dims[1] - r1 - r2, dims[2] - r2)


def _degree_ok(R, d):
    return strand_homology(R, d) == (int(R.ideal.contains(d)), 0, 0)


def verify_exact_and_minimal(
    R: SylvanResolution, I: MonomialIdeal | None = None, workers: int | None = None
) -> VerificationReport:
    I = I or R.ideal
    expected = betti_support(I)
    betti_match = R.betti() == expected and all(
        a != b for (_, a, b) in R.blocks
    )
    degrees = _box(I.lcm_all())
    n = workers or default_workers()
    if n > 1:
        with ThreadPoolExecutor(max_workers=n) as pool:
            flags = list(pool.map(lambda d: _degree_ok(R, d), degrees))
    else:
        flags = [_degree_ok(R, d) for d in degrees]
    failing = tuple(d for d, ok in zip(degrees, flags) if not ok)
    return VerificationReport(verify_complex(R), betti_match, failing)


# ------------------------------------------------------------------ export


def _m2_monomial(d: DegreeVector) -> str:
    parts = []
    for name, e in zip("xyz", d):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"


def _m2_entry(q: Fraction, mono: str) -> str:
    if q == 0:
        return "0"
    if mono == "1":
        return f"({format_rat(q)})"
    if q == 1:
        return mono
    if q == -1:
        return f"-{mono}"
    return f"({format_rat(q)})*{mono}"


def _m2_degrees(summands):
    return ",".join(
        "{" + ",".join(str(-x) for x in s.degree) + "}" for s in summands for _ in range(s.rank)
    )


def _m2_differential(R, i):
    tgt, src = R.summands[i], R.summands[i + 1]
    rows = []
    for t in tgt:
        for r in range(t.rank):
            row = []
            for s in src:
                related = leq(t.degree, s.degree) and t.degree != s.degree
                blk = R.block(i, t.degree, s.degree) if related else None
                mono = _m2_monomial(sub(s.degree, t.degree)) if related else "1"
                for c in range(s.rank):
                    row.append(_m2_entry(blk[r, c], mono) if related else "0")
            rows.append("{" + ", ".join(row) + "}")
    return "matrix {" + ", ".join(rows) + "}"


def to_macaulay2(R: SylvanResolution) -> str:
    """Macaulay2 input that rebuilds the resolution and checks it."""
    gens = ", ".join(_m2_monomial(g) for g in R.ideal.gens)
    F0, F1, F2 = (R.summands[i] for i in range(3))
    aug = ", ".join(
        _m2_entry(s.basis[0].coeff(()) if s.basis else Fraction(0), _m2_monomial(s.degree))
        for s in F0
    )
    lines = [
        "R = QQ[x,y,z, Degrees => {{1,0,0},{0,1,0},{0,0,1}}];",
        f"I = ideal({gens});",
        f"F0 = R^{{{_m2_degrees(F0)}}};",
        f"F1 = R^{{{_m2_degrees(F1)}}};",
        f"F2 = R^{{{_m2_degrees(F2)}}};",
        f"eps = map(R^1, F0, {{{{{aug}}}}});",
    ]
    lines.append(f"d1 = map(F0, F1, {_m2_differential(R, 0)});" if F1 else "d1 = map(F0, F1, 0);")
    lines.append(f"d2 = map(F1, F2, {_m2_differential(R, 1)});" if F2 else "d2 = map(F1, F2, 0);")
    lines += [
        "assert(image eps == image gens I);",
        "assert(eps * d1 == 0);",
        "assert(d1 * d2 == 0);",
        "assert(prune homology(eps, d1) == 0);",
        "assert(prune homology(d1, d2) == 0);",
        "assert(kernel d2 == 0);",
    ]
    return "\n".join(lines) + "\n"
