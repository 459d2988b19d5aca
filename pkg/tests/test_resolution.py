from fractions import Fraction

import pytest

from sylvan3.complexes import Chain
from sylvan3.fence_oracle import SylvanMatrix, sylvan_matrix_oracle
from sylvan3.ideal_staircase import parse_ideal
from sylvan3.koszul import homology_basis, koszul_complex
from sylvan3.rational_linalg import RatMatrix
from sylvan3.resolution import (
    ImageNotCycleModBoundary,
    betti_support,
    build_resolution,
    induce_on_homology,
    strand_homology,
    to_macaulay2,
    verify_complex,
    verify_exact_and_minimal,
)


def degrees(betti, i):
    return {d: r for d, r in betti[i]}


def test_betti_of_three_generator_ideal(three_generator_ideal):
    betti = betti_support(three_generator_ideal)
    assert degrees(betti, 0) == {(1, 1, 0): 1, (0, 3, 0): 1, (0, 0, 1): 1}
    assert degrees(betti, 1) == {(1, 1, 1): 1, (1, 3, 0): 1, (0, 3, 1): 1}
    assert degrees(betti, 2) == {(1, 3, 1): 1}


def test_betti_of_four_generator_ideal(four_generator_ideal):
    betti = betti_support(four_generator_ideal)
    assert degrees(betti, 2) == {(2, 2, 1): 1}
    assert set(degrees(betti, 1)) == {(2, 2, 0), (1, 2, 1), (2, 1, 1), (1, 1, 1)}


def test_betti_of_principal_ideal():
    betti = betti_support(parse_ideal("x^2y"))
    assert betti == {0: [((2, 1, 0), 1)], 1: [], 2: []}


def test_maximal_ideal_has_koszul_ranks():
    R = build_resolution(parse_ideal("x, y, z"), "both")
    assert [sum(s.rank for s in R.summands[i]) for i in range(3)] == [3, 3, 1]
    assert verify_exact_and_minimal(R).ok


def test_induced_block_from_hollow_source(three_generator_ideal):
    I = three_generator_ideal
    a, b = (1, 1, 1), (1, 3, 1)
    D = sylvan_matrix_oracle(I, a, b, 1)
    Ka, Kb = koszul_complex(I, a), koszul_complex(I, b)
    blk = induce_on_homology(D, homology_basis(Kb, 1), homology_basis(Ka, 0), Ka)
    assert (blk.rows, blk.cols) == (1, 1)
    assert blk[0, 0] != 0


def test_induced_block_of_zero_matrix(three_generator_ideal):
    I = three_generator_ideal
    a, b = (1, 1, 1), (1, 3, 1)
    D = sylvan_matrix_oracle(I, a, b, 1)
    Z = SylvanMatrix(a, b, 1, D.rows, D.cols, RatMatrix.zeros(len(D.rows), len(D.cols)))
    Ka, Kb = koszul_complex(I, a), koszul_complex(I, b)
    assert induce_on_homology(Z, homology_basis(Kb, 1), homology_basis(Ka, 0), Ka).is_zero()


def test_induced_block_into_f0_is_direct(staircase_ideal):
    I = staircase_ideal
    a, b = (1, 1, 1), (3, 2, 1)
    D = sylvan_matrix_oracle(I, a, b, 0)
    src = homology_basis(koszul_complex(I, b), 0)
    blk = induce_on_homology(D, src, homology_basis(koszul_complex(I, a), -1))
    expected = [sum(D.entry((), f) * c for f, c in z.terms) for z in src]
    assert blk.to_rows() == [expected]


def test_bad_image_is_reported(three_generator_ideal):
    I = three_generator_ideal
    a, b = (1, 1, 1), (1, 3, 1)
    D = sylvan_matrix_oracle(I, a, b, 1)
    Ka = koszul_complex(I, a)
    # a single vertex is not a reduced cycle, so nothing can express it
    weird = SylvanMatrix(a, b, 1, D.rows, D.cols,
                         RatMatrix.from_rows([[1, 1, 1], [0, 0, 0], [0, 0, 0]]))
    with pytest.raises(ImageNotCycleModBoundary):
        induce_on_homology(weird, homology_basis(koszul_complex(I, b), 1),
                           homology_basis(Ka, 0), Ka)


@pytest.mark.parametrize("gens", ["xy, y^3, z", "yz, xz, xy^2, x^2y",
                                  "x^3z, xyz, y^2z, x^3y^2, x^2y^3"])
def test_worked_examples_resolve(gens):
    I = parse_ideal(gens)
    oracle = build_resolution(I, "oracle")
    closed = build_resolution(I, "closed")
    assert oracle.blocks == closed.blocks
    assert verify_complex(oracle)
    report = verify_exact_and_minimal(oracle)
    assert report.ok, report.to_dict()


def test_principal_ideal_resolution():
    R = build_resolution(parse_ideal("x"))
    assert [len(R.summands[i]) for i in range(3)] == [1, 0, 0]
    assert verify_complex(R)
    assert verify_exact_and_minimal(R).ok


def test_broken_differential_is_caught(four_generator_ideal):
    R = build_resolution(four_generator_ideal)
    key = next(k for k in R.blocks if k[0] == 1)
    R.blocks[key] = R.blocks[key] + R.blocks[key]
    assert not verify_complex(R)
    report = verify_exact_and_minimal(R)
    assert not report.ok and not report.is_complex


def test_strand_homology_at_a_generator(three_generator_ideal):
    R = build_resolution(three_generator_ideal)
    assert strand_homology(R, (1, 1, 0)) == (1, 0, 0)
    assert strand_homology(R, (1, 0, 0)) == (0, 0, 0)
    assert strand_homology(R, (1, 3, 1)) == (1, 0, 0)


def test_threads_do_not_change_the_result(four_generator_ideal):
    one = build_resolution(four_generator_ideal, "oracle", workers=1)
    many = build_resolution(four_generator_ideal, "oracle", workers=4)
    assert one.blocks == many.blocks


def test_macaulay2_export(three_generator_ideal):
    text = to_macaulay2(build_resolution(three_generator_ideal))
    assert "d1 = map(F0, F1, matrix" in text
    assert "F2 = R^{{-1,-3,-1}};" in text
    assert "assert(d1 * d2 == 0);" in text


def test_homology_basis_representatives_are_cycles(corpus):
    for I in corpus[:20]:
        R = build_resolution(I)
        for s in R.summands[2]:
            K = koszul_complex(I, s.degree)
            assert all(K.boundary(z).is_zero() for z in s.basis)
        for s in R.summands[1]:
            K = koszul_complex(I, s.degree)
            assert all(sum(c for _, c in z.terms) == 0 for z in s.basis)
            assert all(isinstance(z, Chain) for z in s.basis)
            assert all(isinstance(c, Fraction) for z in s.basis for _, c in z.terms)
