"""
Tests for first resonance varieties: Plücker coordinates, the wedge kernel,
the ideals I and J, and the plane components of the named arrangements.
"""

from fractions import Fraction

import pytest

from torarr.cohom import GradedAlgebraQ, Torus
from torarr.errors import NotDecomposableError, PreconditionError, UnresolvedResonanceError, UnsupportedResonanceError
from torarr.linalg import IntMatrix, Lattice, rref
from torarr.poly import buchberger, projective_dim_degree
from torarr.resonance import (
    Plane,
    PluckerPoint,
    delta_kernel_dim,
    grassmann_pfaffian_ideal,
    h1_basis,
    h1_coordinates,
    h1_element,
    in_R1,
    linear_ideal_of_subspace,
    local_planes,
    plane_from_plucker,
    plucker_variables,
    presentation_resonance,
    resonance_components,
    resonance_lattices,
    wedge_kernel,
)

# x15, x24, x45, x12+x13, x13+x23, x13-x34+x35
IDEAL_I = [
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
    [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, -1, 1, 0],
]

PLUCKER_A = [
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 0],
    [1, -1, 1, 0, 1, 0, 0, -1, 0, 0],
    [1, -1, 0, 0, 1, 0, -1, 0, 1, 0],
]

# H^1 coordinates on (omega-bar 1..4, alpha, beta, gamma)
PLANES_N = [
    [(1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0)],
    [(0, 1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 5, 0)],
    [(0, 0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 5)],
    [(0, 0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 3, 5, 5)],
]
PLANES_N_PRIME = [
    [(1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 0)],
    [(0, 1, 0, 0, 0, 0, 0), (0, 0, 0, 0, 4, 5, 0)],
    [(0, 0, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 0, 5)],
    [(0, 0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 6, 5, 5)],
]


def _linear_rows(ideal, nvars):
    return [
        [g.terms.get(tuple(int(j == i) for j in range(nvars)), 0) for i in range(nvars)]
        for g in ideal.generators
    ]


def test_plucker_variables():
    assert plucker_variables(3) == ("x12", "x13", "x23")
    assert plucker_variables(10)[0] == "x1_2"
    assert len(plucker_variables(5)) == 10


def test_plucker_point_normalization():
    p = PluckerPoint((0, 2, -4))
    assert p.dimension == 3
    assert p.normalized() == (0, 1, -2)
    assert p.projectively_equal(PluckerPoint((0, -1, 2)))
    with pytest.raises(PreconditionError):
        PluckerPoint((0, 0, 0))
    with pytest.raises(PreconditionError):
        PluckerPoint((1, 0, 0, 0)).dimension


def test_plane_span_is_canonical():
    P = Plane.span((1, 0, -1, 0, 0), (1, -1, 0, -1, 0))
    Q = Plane.span((0, 1, -1, 1, 0), (1, 0, -1, 0, 0))
    assert P == Q
    assert P.contains((2, -1, -1, -1, 0))
    assert not P.contains((0, 0, 0, 0, 1))
    assert P.plucker().projectively_equal(PluckerPoint(PLUCKER_A[3]))
    with pytest.raises(PreconditionError):
        Plane.span((1, 2), (2, 4))


def test_plane_from_plucker():
    assert plane_from_plucker(PluckerPoint(PLUCKER_A[0])) == Plane.span((1, 0, 0, 0, 0), (0, 0, 0, 1, 0))
    assert plane_from_plucker(PluckerPoint(PLUCKER_A[3])) == Plane.span((1, 0, -1, 0, 0), (1, -1, 0, -1, 0))
    for coords in PLUCKER_A:
        p = PluckerPoint(coords)
        assert plane_from_plucker(p).plucker().projectively_equal(p)
    with pytest.raises(NotDecomposableError):
        plane_from_plucker(PluckerPoint((1, 0, 0, 0, 0, 1)))


def test_pfaffian_ideals():
    assert len(grassmann_pfaffian_ideal(5).generators) == 5
    (quadric,) = grassmann_pfaffian_ideal(4).generators
    assert quadric.evaluate((1, 0, 0, 0, 0, 1)) == 1
    assert quadric.evaluate((1, 2, 3, 4, 5, 6)) == 1 * 6 - 2 * 5 + 3 * 4
    assert grassmann_pfaffian_ideal(3).generators == ()
    with pytest.raises(PreconditionError):
        grassmann_pfaffian_ideal(1)


def test_h1_basis_of_A(unimodular_A):
    H = unimodular_A.algebra
    assert [str(e) for e in h1_basis(H)] == ["omega1", "omega2", "omega3", "alpha", "beta"]
    assert h1_coordinates(H, H.psi(2)) == (0, 0, 0, 1, 1)
    assert h1_element(H, (0, 0, 0, 1, 1)) == H.psi(2)
    with pytest.raises(PreconditionError):
        h1_element(H, (1, 0))
    with pytest.raises(PreconditionError):
        h1_coordinates(H, H.one())


def test_delta_kernel_and_membership(unimodular_A):
    H = unimodular_A.algebra
    w1, w2 = H.generator("omega1"), H.generator("omega2")
    assert delta_kernel_dim(H, w1) >= 2
    assert delta_kernel_dim(H, w1 + w2) == 1
    assert delta_kernel_dim(H, H.zero(1)) == 5
    assert in_R1(H, w1)
    assert not in_R1(H, w1 + w2)
    assert in_R1(H, H.zero(1))


def test_wedge_kernel_and_ideal_I(unimodular_A):
    dim_k, kernel = wedge_kernel(unimodular_A.algebra)
    assert dim_k == 4
    I = linear_ideal_of_subspace(kernel, 5)
    assert rref(_linear_rows(I, 10), 10) == rref(IDEAL_I, 10)
    ideal = I + grassmann_pfaffian_ideal(5)
    G = buchberger(ideal.generators, "grevlex", ideal.variables)
    assert projective_dim_degree(G) == (0, 5)


def test_linear_ideal_extremes():
    everything = [tuple(int(i == j) for j in range(10)) for i in range(10)]
    assert linear_ideal_of_subspace(everything, 5).generators == ()
    assert len(linear_ideal_of_subspace([], 5).generators) == 10


def test_wedge_kernel_of_exterior_algebra():
    E = GradedAlgebraQ([Torus(0), Torus(1)], 2, name="E")
    assert wedge_kernel(E) == (0, [])
    assert resonance_components(E) == []


def test_wedge_kernel_of_N(rational_N):
    assert wedge_kernel(rational_N.algebra)[0] == 4


def test_resonance_of_A(unimodular_A):
    H = unimodular_A.algebra
    planes = presentation_resonance(unimodular_A)
    assert len(planes) == 5
    for coords in PLUCKER_A:
        assert any(p.plucker().projectively_equal(PluckerPoint(coords)) for p in planes)
    for plane in planes:
        u, v = (h1_element(H, b) for b in plane.basis)
        assert (u * v).is_zero()
        assert in_R1(H, u * 2 + v * 3)
    assert len(local_planes(H)) >= 2


def test_resonance_of_A_is_stable(unimodular_A):
    assert presentation_resonance(unimodular_A) == presentation_resonance(unimodular_A)


@pytest.mark.parametrize("fixture,expected", [
    ("rational_N", PLANES_N),
    ("rational_N_prime", PLANES_N_PRIME),
])
def test_resonance_of_N(fixture, expected, request):
    pres = request.getfixturevalue(fixture)
    planes = presentation_resonance(pres)
    assert len(planes) == 4
    for u, v in expected:
        assert Plane.span(u, v) in planes


def test_positive_dimensional_resonance_is_unsupported():
    F = GradedAlgebraQ([Torus(0), Torus(1), Torus(2)], 2, name="F")
    for i, j in ((0, 1), (0, 2), (1, 2)):
        F.add_relation({(i, j): Fraction(1)})
    with pytest.raises(UnsupportedResonanceError):
        resonance_components(F)


def test_irrational_points_are_unresolved():
    # kernel spanned by e12 + e34 and e13 - 2 e24 meets Gr(2, 4) where s^2 + 2 t^2 = 0
    G = GradedAlgebraQ([Torus(i) for i in range(4)], 2, name="G")
    G.add_relation({(0, 1): Fraction(1), (2, 3): Fraction(1)})
    G.add_relation({(0, 2): Fraction(1), (1, 3): Fraction(-2)})
    with pytest.raises(UnresolvedResonanceError) as info:
        resonance_components(G)
    assert info.value.found == 0
    assert info.value.degree == 2
    assert info.value.residual == 2


def test_presentation_required():
    with pytest.raises(PreconditionError):
        presentation_resonance(object())


def test_resonance_lattices():
    P = Plane.span((Fraction(1, 2), 0, 0), (0, 1, 1))
    (L,) = resonance_lattices([P])
    assert L == Lattice.from_generators([(1, 0, 0), (0, 1, 1)], 3)
    (L,) = resonance_lattices([P], IntMatrix.from_rows([[2, 0, 0], [0, 1, 0], [0, 0, 1]]))
    assert L == Lattice.from_generators([(1, 0, 0), (0, 1, 1)], 3)
    with pytest.raises(PreconditionError):
        resonance_lattices([P], IntMatrix.from_rows([[1, 0, 0], [0, 0, 0]]))
