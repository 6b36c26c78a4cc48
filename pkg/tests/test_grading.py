import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wplines.grading import (
    C,
    ZERO,
    Degree,
    InvalidWeightError,
    dualizing_element,
    invariant_factors,
    linear_combine,
    make_group,
    normalize,
    smith_diagonal,
)

from oracles import coset_key, in_lattice, sympy_invariant_factors

GRID = [(a, b, c) for a in range(1, 6) for b in range(a, 7) for c in range(b, 8)]

weights = st.tuples(*(st.integers(1, 7) for _ in range(3)))
raw = st.tuples(*(st.integers(-50, 50) for _ in range(4))).map(lambda t: Degree(*t))


@pytest.mark.parametrize("bad", [(0, 2, 3), (2, -1, 3), (2, 3, 0)])
def test_invalid_weights(bad):
    with pytest.raises(InvalidWeightError):
        make_group(bad)


def test_rank_one_examples():
    assert make_group((2, 3, 4)).structure.rank == 1
    assert invariant_factors(make_group((1, 1, 1))).invariant_factors == ()
    assert invariant_factors(make_group((2, 2, 2))).invariant_factors == (2, 2)
    assert invariant_factors(make_group((2, 3, 5))).invariant_factors == ()


@pytest.mark.parametrize("p", GRID)
def test_structure_matches_sympy(p):
    s = invariant_factors(make_group(p))
    assert s.rank == 1
    assert list(s.invariant_factors) == sympy_invariant_factors(p)
    assert all(b % a == 0 for a, b in zip(s.invariant_factors, s.invariant_factors[1:]))


def test_smith_diagonal_general():
    # known decomposition: diag(1, 10, 30)
    m = [[12, 6, 4, 8], [3, 9, 6, 12], [2, 16, 14, 28], [20, 10, 10, 20]]
    assert smith_diagonal(m) == [1, 10, 30]


def test_normalize_examples():
    g = make_group((2, 3, 4))
    assert normalize(g, (2, 0, 0, 0)) == C
    assert normalize(g, ZERO) == ZERO
    omega = (-1, -1, -1, 1)
    assert normalize(g, omega) == (1, 2, 3, -2)
    assert in_lattice((2, 3, 4), Degree(*omega) - Degree(1, 2, 3, -2))


def test_linear_combine_examples():
    g = make_group((2, 3, 4))
    u = Degree(3, -7, 2, 5)
    assert linear_combine(g, [(1, u), (-1, u)]) == ZERO
    assert linear_combine(make_group((2, 3, 5)), [(30, (1, 1, 1, -1))]) == (0, 0, 0, 1)
    assert linear_combine(make_group((2, 2, 2)), [(2, (1, 0, 0, 0)), (2, (0, 1, 0, 0))]) == (0, 0, 0, 2)


def test_dualizing_element():
    assert dualizing_element(make_group((2, 3, 4))) == (1, 2, 3, -2)
    assert dualizing_element(make_group((1, 1, 1))) == (0, 0, 0, -2)
    assert dualizing_element(make_group((2, 3, 5))) == (1, 2, 4, -2)


def test_degree_wire_roundtrip():
    d = Degree(-1, 2, 0, 7)
    assert Degree.parse(d.wire()) == d
    with pytest.raises(ValueError):
        Degree.parse("1 2 3")


@given(weights, raw)
def test_normalize_idempotent_and_in_range(p, u):
    g = make_group(p)
    n = normalize(g, u)
    assert normalize(g, n) == n
    assert all(0 <= l < w for l, w in zip(n.arms, p))


@settings(max_examples=300)
@given(weights, raw, raw)
def test_equality_soundness(p, u, v):
    g = make_group(p)
    same = normalize(g, u) == normalize(g, v)
    assert same == in_lattice(p, u - v)
    assert same == (coset_key(p, u) == coset_key(p, v))


@given(weights, raw, raw)
def test_homomorphism(p, u, v):
    g = make_group(p)
    assert normalize(g, u + v) == linear_combine(g, [(1, normalize(g, u)), (1, normalize(g, v))])
