"""
Tests for Groebner bases, Hilbert functions and projective dimension/degree.
"""

from fractions import Fraction

import pytest

from torarr.errors import NotHomogeneousError, PreconditionError, VariableMismatchError
from torarr.poly import (
    IdealQ,
    MultiPolyQ,
    buchberger,
    contains_point,
    hilbert_function,
    hilbert_numerator,
    normal_form,
    projective_dim_degree,
)

XYZ = ("x", "y", "z")
XYZW = ("x", "y", "z", "w")


def var(name, variables=XYZ):
    return MultiPolyQ.variable(variables, name)


def twisted_cubic():
    x, y, z, w = (var(v, XYZW) for v in XYZW)
    return [x * z - y * y, y * w - z * z, x * w - y * z]


def test_variable_mismatch():
    with pytest.raises(VariableMismatchError):
        var("x") + MultiPolyQ.variable(("x", "y"), "x")
    with pytest.raises(VariableMismatchError):
        var("q")
    with pytest.raises(PreconditionError):
        IdealQ.of([])


def test_evaluate_and_degree():
    p = var("x") * var("y") - 2 * var("z") * var("z")
    assert p.degree == 2
    assert p.is_homogeneous()
    assert p.evaluate((2, 3, 1)) == 4
    assert not (var("x") - 1).is_homogeneous()
    assert p.leading_monomial() == (1, 1, 0)


def test_point_and_line():
    G = buchberger([var("x"), var("y")])
    assert G.leading_monomials == [(0, 1, 0), (1, 0, 0)]
    assert projective_dim_degree(G) == (0, 1)
    G = buchberger([var("x") + var("y") + var("z")])
    assert projective_dim_degree(G) == (1, 1)


def test_conic():
    G = buchberger([var("x") * var("z") - var("y") * var("y")])
    assert G.leading_monomials == [(0, 2, 0)]
    assert [hilbert_function(G, d) for d in range(5)] == [1, 3, 5, 7, 9]
    assert projective_dim_degree(G) == (1, 2)


def test_two_points():
    G = buchberger([var("x") * var("y"), var("z")])
    assert projective_dim_degree(G) == (0, 2)


def test_twisted_cubic():
    G = buchberger(twisted_cubic())
    assert len(G) == 3
    assert sorted(G.leading_monomials) == [(0, 0, 2, 0), (0, 1, 1, 0), (0, 2, 0, 0)]
    assert projective_dim_degree(G) == (1, 3)
    for g in twisted_cubic():
        assert G.contains(g)
    assert not G.contains(var("x", XYZW))
    # (s^3, s^2 t, s t^2, t^3) at s = 2, t = 3
    assert contains_point(twisted_cubic(), (8, 12, 18, 27))
    assert not contains_point(twisted_cubic(), (1, 0, 0, 1))


def test_normal_form_is_reduced():
    G = buchberger(twisted_cubic())
    y, z = var("y", XYZW), var("z", XYZW)
    r = normal_form(y * y * z, G)
    assert r.is_zero() or all(
        not all(a <= b for a, b in zip(lm, m)) for m in r.terms for lm in G.leading_monomials
    )
    assert G.contains(y * y * z - r)


def test_unit_ideal():
    G = buchberger([var("x"), MultiPolyQ.constant(XYZ, 3)])
    assert G.is_unit()
    assert projective_dim_degree(G) == (-1, 0)
    G = buchberger([var("x") * var("x") - 1, var("x") * var("x")])
    assert G.is_unit()


def test_irrelevant_ideal_is_empty():
    G = buchberger([var("x"), var("y"), var("z")])
    assert projective_dim_degree(G) == (-1, 0)


def test_lex_order():
    x, y = MultiPolyQ.variable(("x", "y"), "x"), MultiPolyQ.variable(("x", "y"), "y")
    G = buchberger([x * x - y, x * y - 1], order="lex")
    # y^3 - 1 eliminates x
    assert G.contains(y * y * y - 1)
    assert any(p.leading_monomial("lex") == (0, 3) for p in G)
    with pytest.raises(PreconditionError):
        buchberger([x], order="deglex")


def test_non_homogeneous_rejected():
    G = buchberger([var("x") - 1])
    with pytest.raises(NotHomogeneousError):
        projective_dim_degree(G)
    with pytest.raises(NotHomogeneousError):
        hilbert_function(G, 2)


def test_hilbert_numerator():
    assert hilbert_numerator([]) == [1]
    assert hilbert_numerator([(1, 0), (0, 1)]) == [1, -2, 1]
    assert hilbert_numerator([(2, 0), (1, 1), (0, 2)]) == [1, 0, -3, 2]


def test_monic_basis():
    G = buchberger([2 * var("x") - 4 * var("y")])
    (g,) = G.polys
    assert g.leading_coefficient() == 1
    assert g == var("x") - 2 * var("y")
    assert g.terms[(0, 1, 0)] == Fraction(-2)


def test_agrees_with_sympy():
    sympy = pytest.importorskip("sympy")
    sx, sy, sz, sw = sympy.symbols("x y z w")
    expected = sympy.groebner(
        [sx * sz - sy ** 2, sy * sw - sz ** 2, sx * sw - sy * sz], sx, sy, sz, sw, order="grevlex"
    )
    symbols = (sx, sy, sz, sw)

    def to_sympy(p):
        return sympy.expand(sum(
            sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*(s ** e for s, e in zip(symbols, m)))
            for m, c in p.terms.items()
        ))

    ours = {to_sympy(g) for g in buchberger(twisted_cubic())}
    assert ours == {sympy.expand(g) for g in expected.exprs}
