import json
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from conftest import partitions_st
from schubfock.errors import NotContained, NotSymmetric
from schubfock.permcore import partitions
from schubfock.poly import (
    MPoly,
    SymP,
    complete_homogeneous,
    divided_difference,
    h_to_p,
    jacobi_trudi,
    mpoly_from_json,
    mpoly_to_json,
    p_expansion_to_poly,
    schur_expand,
    schur_ssyt,
    skew_schur_ssyt,
    symp_from_json,
    symp_to_json,
    z,
)

x = {i: MPoly.var(i) for i in range(-3, 6)}


@st.composite
def polys(draw, lo=1, hi=4, max_terms=4):
    out = MPoly()
    for _ in range(draw(st.integers(0, max_terms))):
        exps = {v: draw(st.integers(0, 2)) for v in range(lo, hi + 1)}
        c = draw(st.integers(-3, 3))
        out = out + MPoly.monomial({v: e for v, e in exps.items() if e}, c)
    return out


# ring operations ------------------------------------------------------------------


def test_arith_examples():
    assert (x[1] + x[2]) * (x[1] - x[2]) == x[1] ** 2 - x[2] ** 2
    assert (x[1] * x[2] + x[1]).substitute_zero({2}) == x[1]
    assert schur_ssyt((3, 1), 2).coeff({1: 3, 2: 1}) == 1


def test_constants_and_degrees():
    f = x[1] ** 3 * x[-2] + 2
    assert f.degree() == 4
    assert not f.is_homogeneous()
    assert f.truncate_degree(3) == 2
    assert f.coeff({}) == 2
    assert f.variables() == {1, -2}
    assert MPoly.var(3, 0) == 1


@given(polys(), polys(), polys())
def test_ring_axioms(f, g, h):
    assert f * (g + h) == f * g + f * h
    assert (f * g) * h == f * (g * h)
    assert f - f == MPoly()
    assert f * g == g * f


@given(polys())
def test_mpoly_json_round_trip(f):
    assert mpoly_from_json(json.loads(json.dumps(mpoly_to_json(f)))) == f


def test_negative_variables_and_relabel():
    f = x[-1] * x[0] ** 2
    assert f.relabel(lambda j: j + 3) == x[2] * x[3] ** 2
    assert f.restrict(-1, 0) == f
    assert f.restrict(0, 3) == MPoly()


# power sums -----------------------------------------------------------------------------


def test_z_examples():
    assert z(()) == 1
    assert z((1, 1)) == 2
    assert z((2, 1)) == 2
    assert z((2, 2, 1)) == 8


def test_h_to_p_examples():
    assert h_to_p(1) == SymP.p(1)
    half = Fraction(1, 2)
    assert h_to_p(2) == SymP({(2,): half, (1, 1): half})
    assert h_to_p(3) == SymP({(3,): Fraction(1, 3), (2, 1): half, (1, 1, 1): Fraction(1, 6)})


def test_p_expansion_examples():
    assert p_expansion_to_poly(SymP.p(1), [1, 2]) == x[1] + x[2]
    half = Fraction(1, 2)
    h2 = SymP({(2,): half, (1, 1): half})
    assert p_expansion_to_poly(h2, [1, 2]) == x[1] ** 2 + x[1] * x[2] + x[2] ** 2
    assert p_expansion_to_poly(SymP.p(2) - SymP.p(1, 1), [1]) == 0


def _brute_h(m, n):
    out = MPoly()
    for exps in product(range(m + 1), repeat=n):
        if sum(exps) == m:
            out = out + MPoly.monomial({i + 1: e for i, e in enumerate(exps) if e})
    return out


@pytest.mark.parametrize("m", range(1, 6))
def test_h_to_p_matches_monomial_sum(m):
    assert p_expansion_to_poly(h_to_p(m), [1, 2, 3]) == _brute_h(m, 3)
    assert complete_homogeneous(m, 3) == _brute_h(m, 3)


def test_symp_product_and_json():
    f = SymP.p(2) * SymP.p(1) + SymP.p(1, 2)
    assert f == SymP({(2, 1): 2})
    assert symp_from_json(json.loads(json.dumps(symp_to_json(f)))) == f


# Schur polynomials -------------------------------------------------------------------------


def test_schur_examples():
    assert schur_ssyt((1,), 2) == x[1] + x[2]
    assert schur_ssyt((2, 1), 2) == x[1] ** 2 * x[2] + x[1] * x[2] ** 2
    assert schur_ssyt((1, 1, 1), 2) == 0


def test_jacobi_trudi_examples():
    assert jacobi_trudi((2,), 2) == x[1] ** 2 + x[1] * x[2] + x[2] ** 2
    assert jacobi_trudi((1, 1), 2) == x[1] * x[2]
    assert jacobi_trudi((), 3) == 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ssyt_equals_jacobi_trudi(n):
    for size in range(7):
        for lam in partitions(size):
            assert schur_ssyt(lam, n) == jacobi_trudi(lam, n)


def test_skew_schur_needs_containment():
    with pytest.raises(NotContained):
        skew_schur_ssyt((1,), (2,), 2)


def test_schur_expand_examples():
    assert schur_expand(x[1] * x[2], 2) == {(1, 1): 1}
    p2 = p_expansion_to_poly(SymP.p(2), [1, 2])
    assert schur_expand(p2, 2) == {(2,): 1, (1, 1): -1}


def test_schur_expand_rejects_non_symmetric():
    with pytest.raises(NotSymmetric):
        schur_expand(x[1], 2)


@given(partitions_st(6), st.integers(1, 4))
def test_schur_expand_of_schur(lam, n):
    if len(lam) <= n:
        assert schur_expand(schur_ssyt(lam, n), n) == {lam: 1}


# divided differences ----------------------------------------------------------------------


def test_divided_difference_examples():
    assert divided_difference(x[1], 1) == 1
    assert divided_difference(x[1] * x[2], 1) == 0
    assert divided_difference(x[1] * x[2], 2) == x[1]


def _ddiff_oracle(f, i):
    # multiply back: (x_i - x_{i+1}) * d_i f == f - s_i f
    return f - f.swap(i, i + 1)


@given(polys(), st.integers(1, 3))
def test_divided_difference_definition(f, i):
    d = divided_difference(f, i)
    assert (x[i] - x[i + 1]) * d == _ddiff_oracle(f, i)
    assert divided_difference(d, i) == 0


@given(polys(max_terms=3), polys(max_terms=3), st.integers(1, 3))
def test_twisted_leibniz(f, g, i):
    lhs = divided_difference(f * g, i)
    rhs = divided_difference(f, i) * g + f.swap(i, i + 1) * divided_difference(g, i)
    assert lhs == rhs


@given(polys(max_terms=3))
def test_braid_relation(f):
    d = divided_difference
    assert d(d(d(f, 1), 2), 1) == d(d(d(f, 2), 1), 2)
