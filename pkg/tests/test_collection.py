import random

import pytest

from wplines.collection import (
    build_collection,
    check_euler_unimodular,
    check_strong_exceptional,
    custom_collection,
    euler_matrix,
    ext1_dim,
    hom_dim,
)
from wplines.grading import C, ZERO, Degree, make_group, unit
from wplines.matrices import determinant, is_unit_upper_triangular

from oracles import brute_graded_dim

G234 = make_group((2, 3, 4))


def test_build_collection_examples():
    d4 = build_collection((2, 2, 2))
    assert d4.twists == (ZERO, unit(0), unit(1), unit(2), C)
    assert len(build_collection((2, 3, 4))) == 8
    a3 = build_collection((1, 2, 2))
    assert a3.twists == (ZERO, unit(1), unit(2), C)
    assert build_collection((2, 3, 4), include_e0=False).twists[0] == unit(0)


def test_hom_dim_examples():
    assert hom_dim(G234, unit(1), unit(1)) == 1
    assert hom_dim(G234, ZERO, C) == 2 == brute_graded_dim((2, 3, 4), C)
    assert hom_dim(G234, unit(0), unit(1)) == 0


def test_ext1_examples():
    for p in [(1, 1, 1), (1, 2, 2), (2, 2, 2), (2, 2, 3), (2, 3, 3), (2, 3, 4), (2, 3, 5), (1, 3, 5), (2, 2, 7)]:
        g = make_group(p)
        assert ext1_dim(g, unit(0), unit(0)) == 0
    assert ext1_dim(G234, C.scale(2), ZERO) == 1 == brute_graded_dim((2, 3, 4), (-1, -1, -1, 3))
    assert ext1_dim(G234, unit(0), C) == 0


def test_strong_exceptional_examples():
    assert check_strong_exceptional(build_collection((2, 3, 4))).passed
    assert check_strong_exceptional(custom_collection((2, 3, 4), [ZERO])).passed
    bad = check_strong_exceptional(custom_collection((2, 3, 4), [ZERO, C.scale(2)]))
    assert bad.failed
    assert bad.witness["condition"] == "ext1" and bad.witness["ext1_dim"] == 1
    assert (bad.witness["i"], bad.witness["j"]) == (1, 0)


def test_backward_hom_detected():
    bad = check_strong_exceptional(custom_collection((2, 3, 4), [C, ZERO]))
    assert bad.failed and bad.witness["condition"] == "backward_hom"


def test_euler_examples():
    assert euler_matrix(custom_collection((2, 3, 4), [ZERO])) == [[1]]
    d4 = euler_matrix(build_collection((2, 2, 2), include_e0=False))
    assert d4 == [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1], [0, 0, 0, 1]]
    e7 = euler_matrix(build_collection((2, 3, 4)))
    assert len(e7) == 8 and is_unit_upper_triangular(e7)
    assert e7[0][7] == 2


SMALL = [(a, b, c) for a in range(1, 9) for b in range(a, 9) for c in range(b, 9)]


@pytest.mark.parametrize("p", SMALL)
def test_full_collection_strong_exceptional(p):
    coll = build_collection(p)
    assert len(coll) == sum(p) - 1
    assert check_strong_exceptional(coll).passed
    e = euler_matrix(coll)
    assert is_unit_upper_triangular(e) and determinant(e) == 1
    assert check_euler_unimodular(coll).passed


@pytest.mark.parametrize("p", [(2, 3, 4), (3, 3, 3), (2, 5, 7)])
def test_shift_invariance(p):
    g = make_group(p)
    rng = random.Random(7)
    for _ in range(200):
        a, b, t = (Degree(*(rng.randint(-12, 12) for _ in range(4))) for _ in range(3))
        assert hom_dim(g, a + t, b + t) == hom_dim(g, a, b)
        assert ext1_dim(g, a + t, b + t) == ext1_dim(g, a, b)


@pytest.mark.parametrize("p", [(1, 4, 6), (2, 2, 5), (2, 3, 5)])
def test_subcollection_euler_is_zero_one(p):
    e = euler_matrix(build_collection(p, include_e0=False))
    assert {x for row in e for x in row} <= {0, 1}
