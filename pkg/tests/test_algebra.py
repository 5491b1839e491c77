"""Structure constants, brackets, Jacobi and the derived algebra."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lieranders import LieAlgebra, Subspace, catalog
from lieranders import exactlinalg as xl
from lieranders.errors import DimensionMismatch

from conftest import fr

RATIONALS = st.fractions(min_value=-8, max_value=8, max_denominator=5)
VECTORS = st.lists(RATIONALS, min_size=4, max_size=4).map(tuple)

X, Y, Z, W = (fr(*[1 if k == i else 0 for k in range(4)]) for i in range(4))


def test_catalog_case1_bracket_table():
    a = catalog(1)
    assert a.bracket(Y, Z) == W
    assert a.bracket(Z, W) == Y
    assert a.bracket(W, Y) == Z
    for e in (Y, Z, W):
        assert a.bracket(X, e) == fr(0, 0, 0, 0)


def test_catalog_case2_orientation():
    # the table stores [X,Z] = X, so bracket(X, Z) must return X itself
    a = catalog(2)
    assert a.bracket(X, Z) == X
    assert a.bracket(Z, X) == fr(-1, 0, 0, 0)


def test_catalog_case4_half_is_exact():
    a = catalog(4)
    assert a.bracket(Z, W) == fr(0, "1/2", 0, 0)
    assert a.structure[2][3][1] == Fraction(1, 2)


def test_catalog_unknown_case():
    with pytest.raises(ValueError):
        catalog(5)


@given(u=VECTORS)
def test_bracket_with_self_vanishes(u):
    a = catalog(2)
    assert a.bracket(u, u) == fr(0, 0, 0, 0)


@given(u=VECTORS, v=VECTORS)
def test_bracket_antisymmetry(u, v):
    a = catalog(4)
    assert a.bracket(u, v) == xl.vec_scale(-1, a.bracket(v, u))


@given(u=VECTORS, w=VECTORS, v=VECTORS, alpha=RATIONALS, beta=RATIONALS)
def test_bracket_bilinearity(u, w, v, alpha, beta):
    a = catalog(1)
    lhs = a.bracket(xl.vec_add(xl.vec_scale(alpha, u), xl.vec_scale(beta, w)), v)
    rhs = xl.vec_add(
        xl.vec_scale(alpha, a.bracket(u, v)), xl.vec_scale(beta, a.bracket(w, v))
    )
    assert lhs == rhs


@given(
    p=RATIONALS, q=RATIONALS, a=RATIONALS, b=RATIONALS, c=RATIONALS, d=RATIONALS
)
def test_case2_bracket_closed_form(p, q, a, b, c, d):
    # independent expansion of the case-2 table:
    # [pZ+qW, aX+bY+cZ+dW] = (qb - pa) X - (pb + qa) Y
    alg = catalog(2)
    got = alg.bracket((Fraction(0), Fraction(0), p, q), (a, b, c, d))
    assert got == (q * b - p * a, -(p * b + q * a), Fraction(0), Fraction(0))
    # consistency: g([Q,V],V) = -p (a^2 + b^2) on the orthonormal basis
    assert xl.dot(got, (a, b, c, d)) == -p * (a * a + b * b)


def test_bracket_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        catalog(1).bracket((Fraction(1),), X)


def test_jacobi_passes_on_catalog(algebras):
    for cid, a in algebras.items():
        assert a.jacobi_check() == [], f"case {cid}"


def test_jacobi_detects_corruption():
    # scaling [X,Z] in case 4 breaks the derivation property of ad_X
    # on the triple (X, Z, W); scaling [Z,W] alone would not
    bad = LieAlgebra.from_brackets(
        4,
        ("X", "Y", "Z", "W"),
        {
            (0, 1): fr(0, 1, 0, 0),
            (0, 2): fr(0, 0, 1, 0),
            (0, 3): fr(0, 0, 0, "1/2"),
            (2, 3): fr(0, "1/2", 0, 0),
        },
    )
    violations = bad.jacobi_check()
    assert violations
    assert (0, 2, 3) in [(i, j, k) for i, j, k, _ in violations]


def test_antisymmetry_enforced_at_construction():
    c = [[[Fraction(0)] * 2 for _ in range(2)] for _ in range(2)]
    c[0][1][0] = Fraction(1)  # but c[1][0][0] left at 0
    with pytest.raises(ValueError):
        LieAlgebra(dim=2, labels=("a", "b"), structure=tuple(
            tuple(tuple(v) for v in row) for row in c
        ))


def test_self_bracket_rejected():
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(2, ("a", "b"), {(0, 0): fr(1, 0)})


def test_derived_algebra_abelian_is_zero(algebras):
    d = algebras[0].derived_algebra()
    assert d.basis == ()
    assert d.dim == 0


@pytest.mark.parametrize(
    "case_id,expected",
    [
        (1, (Y, Z, W)),
        (2, (X, Y)),
        (3, (Y, Z, W)),
        (4, (Y, Z, W)),
    ],
)
def test_derived_algebra_catalog(case_id, expected):
    assert catalog(case_id).derived_algebra() == Subspace.span(expected, 4)


def test_derived_algebra_idempotent_and_contained(algebras):
    for a in algebras.values():
        d = a.derived_algebra()
        assert Subspace.span(d.basis, 4) == d
        pairwise = [
            a.bracket(a.basis_vector(i), a.basis_vector(j))
            for i in range(4)
            for j in range(4)
        ]
        big = Subspace.span(pairwise, 4)
        for b in d.basis:
            assert big.contains(b)


def test_subspace_contains():
    s = Subspace.span([X, Y], 4)
    assert s.contains(fr(2, -3, 0, 0))
    assert not s.contains(Z)
    assert s.contains(fr(0, 0, 0, 0))


def test_subspace_describe():
    s = Subspace.span([fr(1, 0, 0, 0), fr(0, 0, "1/2", "1/2")], 4)
    assert s.describe(("X", "Y", "Z", "W")) == "span{X, Z + W}"
    assert Subspace.zero(4).describe(("X", "Y", "Z", "W")) == "{0}"
