import pytest
from hypothesis import given
from hypothesis import strategies as st

from sylvan3.ideal_staircase import (
    EmptyIdeal,
    IdealSyntaxError,
    MonomialIdeal,
    NotAGenerator,
    format_degree,
    leq,
    minimalize,
    neighboring_syzygies,
    parse_degree,
    parse_ideal,
)


def test_parse_staircase_example(staircase_ideal):
    assert set(staircase_ideal.gens) == {(3, 0, 1), (1, 1, 1), (0, 2, 1), (3, 2, 0), (2, 3, 0)}


def test_parse_drops_redundant_generators():
    assert parse_ideal("xy, xy^2").gens == ((1, 1, 0),)


def test_parse_four_generators(four_generator_ideal):
    assert len(four_generator_ideal.gens) == 4


def test_parse_exponent_triples_and_comments():
    I = parse_ideal("# two generators\n1 1 0\n0,3,0\n")
    assert set(I.gens) == {(1, 1, 0), (0, 3, 0)}


def test_parse_errors():
    with pytest.raises(IdealSyntaxError):
        parse_ideal("x^2, w")
    with pytest.raises(EmptyIdeal):
        parse_ideal("# nothing here")


def test_degree_notation():
    assert parse_degree("131") == parse_degree("1,3,1") == (1, 3, 1)
    assert format_degree((1, 3, 1)) == "131"
    assert format_degree((12, 0, 3)) == "12,0,3"


def test_contains(three_generator_ideal, four_generator_ideal):
    assert three_generator_ideal.contains((1, 3, 1))
    assert not three_generator_ideal.contains((1, 0, 0))
    assert not four_generator_ideal.contains((1, 1, 0))


def test_lcm_all(three_generator_ideal, four_generator_ideal):
    assert three_generator_ideal.lcm_all() == (1, 3, 1)
    assert MonomialIdeal(((2, 1, 4),)).lcm_all() == (2, 1, 4)
    assert four_generator_ideal.lcm_all() == (2, 2, 1)


def test_neighboring_syzygies(staircase_ideal):
    b = (3, 2, 1)
    assert set(neighboring_syzygies(staircase_ideal, (1, 1, 1), (0, 1), b)) == {(3, 1, 1), (1, 2, 1)}
    assert neighboring_syzygies(staircase_ideal, (3, 0, 1), (0, 1), b) == [(3, 1, 1)]
    assert neighboring_syzygies(MonomialIdeal(((1, 0, 0), (0, 0, 1))), (1, 0, 0), (0, 1)) == []
    with pytest.raises(NotAGenerator):
        neighboring_syzygies(staircase_ideal, (1, 1, 2), (0, 1), b)


triple = st.tuples(*[st.integers(min_value=0, max_value=5)] * 3)


@given(st.lists(triple, min_size=1, max_size=8))
def test_minimalize_gives_antichain(gens):
    out = minimalize(gens)
    assert all(not leq(g, h) for g in out for h in out if g != h)
    assert all(any(leq(g, h) for g in out) for h in gens)


@given(st.lists(triple, min_size=1, max_size=6), triple, triple)
def test_contains_is_monotone(gens, b, extra):
    I = MonomialIdeal(minimalize(gens))
    bigger = tuple(x + y for x, y in zip(b, extra))
    if I.contains(b):
        assert I.contains(bigger)


@given(st.lists(triple, min_size=1, max_size=6))
def test_render_round_trip(gens):
    I = MonomialIdeal(minimalize(gens))
    assert set(parse_ideal(I.render()).gens) == set(I.gens)
