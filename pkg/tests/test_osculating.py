"""
Tests for the osculating-plane incidence geometry.
"""

import os
import sys
import unittest
from fractions import Fraction

import sympy as sp
from hypothesis import assume, given, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.services.connection import ProjConnection, satisfies
from src.services.errors import (
    AmbientDimensionError,
    FreeParameterError,
    GrassmannRelationError,
    ModelMismatchError,
    PencilError,
    PluckerRelationError,
    TangentPlaneIntersectionError,
    UnsupportedModelError,
)
from src.services.exact import as_poly, proportional
from src.services.jet import Element2
from src.services.osculating import (
    CHI,
    CHI2,
    CHI3,
    CHI4,
    D2U,
    D2X,
    DU,
    DX,
    GENERIC,
    LINE,
    QUADRIC,
    AsymptoticNet,
    Developable,
    GeneralSurface,
    GrassmannPlane,
    LaplaceNet,
    Parabolic,
    PencilData,
    PlaneSurface,
    PluckerLine,
    SurfaceJet,
    asymptotic_form,
    conjugate_osculating_point,
    envelope_point_locus,
    envelope_tangential_cubic,
    general_osculating_point,
    geometry_from_connection,
    incidence_form,
    is_developable,
    plane_family,
    straight_lines_connection,
    union_locus_conjugate,
    union_locus_general,
)

small = st.integers(min_value=-3, max_value=3)
rationals = st.fractions(min_value=-3, max_value=3, max_denominator=3)
nonzero = rationals.filter(lambda x: x != 0)


@st.composite
def connections(draw):
    return ProjConnection(draw(small), draw(small), draw(small), draw(small))


def vectors(size):
    return st.lists(small, min_size=size, max_size=size)


@st.composite
def laplace_lines(draw):
    model = LaplaceNet(draw(small), draw(small), draw(small))
    alpha, beta = draw(vectors(4)), draw(vectors(4))
    assume(alpha[2] * beta[3] - alpha[3] * beta[2] != 0)
    return model, PluckerLine.from_points(alpha, beta)


@st.composite
def parabolic_pencils(draw):
    model = Parabolic(draw(small), draw(small), draw(small))
    alpha, beta = draw(vectors(4)), draw(vectors(4))
    assume(alpha[2] * beta[3] - alpha[3] * beta[2] != 0)
    return model, PencilData(alpha, beta, (draw(small), draw(small), 0, 0))


@st.composite
def general_planes(draw):
    try:
        plane = GrassmannPlane.from_points(draw(vectors(5)), draw(vectors(5)), draw(vectors(5)))
    except GrassmannRelationError:
        assume(False)
    assume(plane.coordinate((3, 4, 5)) != 0)
    return GeneralSurface(), plane


@st.composite
def asymptotic_nets(draw):
    return AsymptoticNet(a=draw(small), b=draw(small), a1=draw(small), b1=draw(small))


element_offsets = st.lists(st.tuples(rationals, nonzero), min_size=10, max_size=10)


def at(poly, values):
    return poly.as_expr().subs(dict(zip(poly.gens, values)))


class TestGeometricData(unittest.TestCase):

    def test_plucker_relation(self):
        with self.assertRaises(PluckerRelationError):
            PluckerLine(1, 0, 0, 0, 0, 1)
        with self.assertRaises(PluckerRelationError):
            PluckerLine(0, 0, 0, 0, 0, 0)

    def test_line_from_points(self):
        line = PluckerLine.from_points((1, 0, 2, 0), (0, 1, 0, 3))
        self.assertEqual(line.p12, 1)
        self.assertEqual(line.p34, 6)

    def test_pencil_requires_flat_beta_prime(self):
        with self.assertRaises(PencilError):
            PencilData((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 1, 0))
        with self.assertRaises(PencilError):
            PencilData((0, 0, 1, 0), (0, 0, 2, 0), (0, 0, 0, 0))

    def test_grassmann_from_points(self):
        plane = GrassmannPlane.from_points((1, 2, 0, 1, 3), (0, 1, 1, 0, 2), (2, 0, 1, 1, 1))
        self.assertEqual(len(plane.coordinates()), 10)

    def test_grassmann_relations(self):
        with self.assertRaises(GrassmannRelationError):
            GrassmannPlane.from_mapping({(1, 2, 3): 1, (1, 4, 5): 1})
        with self.assertRaises(GrassmannRelationError):
            GrassmannPlane((1, 2, 3))

    def test_grassmann_alternating(self):
        plane = GrassmannPlane.from_mapping({(3, 4, 5): 1})
        self.assertEqual(plane.coordinate((4, 3, 5)), -1)
        self.assertEqual(plane.coordinate((3, 3, 5)), 0)


class TestIncidence(unittest.TestCase):

    MODELS = (LaplaceNet(1, -2, 3), Parabolic(2, 1, -1), GeneralSurface())

    @settings(deadline=None)
    @given(connections())
    def test_geometry_round_trip(self, k):
        for model in self.MODELS:
            geometry = geometry_from_connection(model, k)
            self.assertEqual(incidence_form(model, geometry).connection, k)

    def test_free_parameters_round_trip(self):
        k = ProjConnection(1, -1, 2, 3)
        cases = [
            (Parabolic(1, 1, 1), {"alpha1": "1/2", "beta1": -2}),
            (GeneralSurface(), {"p145": 3, "p135": "-1/3"}),
        ]
        for model, free in cases:
            geometry = geometry_from_connection(model, k, free)
            self.assertEqual(incidence_form(model, geometry).connection, k)

    def test_unknown_free_parameter(self):
        with self.assertRaises(FreeParameterError):
            geometry_from_connection(LaplaceNet(), ProjConnection(), {"alpha1": 1})
        with self.assertRaises(FreeParameterError):
            geometry_from_connection(Parabolic(), ProjConnection(), {"p145": 1})

    def test_form_vanishes_exactly_on_connection(self):
        model = LaplaceNet(1, 2, 0)
        k = ProjConnection(1, 0, -1, 2)
        form = incidence_form(model, geometry_from_connection(model, k)).form
        self.assertEqual(form.coeff_monomial(DX * D2U), 1)
        for v, w in [(0, 1), (1, 2), (2, 13), (1, 3)]:
            value = form.as_expr().subs({DX: 1, DU: v, D2X: 0, D2U: w})
            self.assertEqual(value == 0, satisfies(k, Element2(v, w)))

    def _check_incidence(self, model, geometry, offsets):
        result = incidence_form(model, geometry)
        k = result.connection
        for v, delta in offsets:
            on_shell = Element2(v, k.evaluate(v))
            for e in (on_shell, Element2(v, on_shell.w + delta)):
                value = result.form.as_expr().subs({DX: 1, DU: e.v, D2X: 0, D2U: e.w})
                self.assertEqual(value == 0, satisfies(k, e))
            self.assertTrue(satisfies(k, on_shell))

    @settings(max_examples=50, deadline=None)
    @given(laplace_lines(), element_offsets)
    def test_laplace_incidence_iff_connection(self, case, offsets):
        self._check_incidence(*case, offsets)

    @settings(max_examples=50, deadline=None)
    @given(parabolic_pencils(), element_offsets)
    def test_parabolic_incidence_iff_connection(self, case, offsets):
        self._check_incidence(*case, offsets)

    @settings(max_examples=50, deadline=None)
    @given(general_planes(), element_offsets)
    def test_general_incidence_iff_connection(self, case, offsets):
        self._check_incidence(*case, offsets)

    def test_laplace_printed_map_differs_in_b(self):
        model = LaplaceNet(0, 1, 0)
        k = ProjConnection(1, 2, 3, 4)
        result = incidence_form(model, geometry_from_connection(model, k))
        self.assertEqual(result.connection, k)
        self.assertEqual(result.printed_map.cubic()[1], -2)

    def test_mismatch(self):
        line = geometry_from_connection(LaplaceNet(), ProjConnection(1, 0, 0, 0))
        with self.assertRaises(ModelMismatchError):
            incidence_form(Parabolic(), line)
        with self.assertRaises(UnsupportedModelError):
            incidence_form(AsymptoticNet(), line)
        with self.assertRaises(UnsupportedModelError):
            geometry_from_connection(Developable(), ProjConnection())

    def test_line_in_tangent_plane(self):
        with self.assertRaises(TangentPlaneIntersectionError):
            incidence_form(LaplaceNet(), PluckerLine(1, 0, 0, 0, 0, 0))


class TestEnvelope(unittest.TestCase):

    def test_tangential_cubic(self):
        cubic = envelope_tangential_cubic(AsymptoticNet(), ProjConnection(1, 0, 0, 1))
        expected = 2 * CHI2 * CHI3 * CHI4 + CHI2**3 - CHI3**3
        self.assertTrue(proportional(cubic, as_poly(expected, (CHI2, CHI3, CHI4))))

    def test_generic(self):
        locus = envelope_point_locus(AsymptoticNet(), ProjConnection(1, 0, 0, 1))
        self.assertEqual(locus.classification, GENERIC)
        self.assertEqual(locus.reduced, (locus.discriminant,))

    def test_quadric(self):
        locus = envelope_point_locus(AsymptoticNet(), ProjConnection(1, 0, 0, 0))
        self.assertEqual(locus.classification, QUADRIC)
        expected = as_poly(CHI3**2 - 2 * CHI2 * CHI4, (CHI2, CHI3, CHI4))
        self.assertTrue(proportional(locus.reduced[0], expected))

    def test_line(self):
        # A = 2b and D = -2a1 kill both end coefficients
        locus = envelope_point_locus(AsymptoticNet(b=1, a1=1), ProjConnection(2, 0, 0, -2))
        self.assertEqual(locus.classification, LINE)
        gens = (CHI2, CHI3, CHI4)
        self.assertTrue(proportional(locus.reduced[0], as_poly(CHI3, gens)))
        self.assertTrue(proportional(locus.reduced[1], as_poly(CHI2, gens)))

    @settings(max_examples=20, deadline=None)
    @given(asymptotic_nets(), connections())
    def test_trace_on_tangent_plane(self, model, k):
        # the asymptotic tangents chi2 = 0 and chi3 = 0, each counted twice
        locus = envelope_point_locus(model, k)
        assume(locus.classification == GENERIC)
        gens = (CHI2, CHI3, CHI4)
        trace = as_poly(locus.discriminant.as_expr().subs(CHI4, 0), gens)
        self.assertTrue(proportional(trace, as_poly(CHI2**2 * CHI3**2, gens)))

    @settings(max_examples=10, deadline=None)
    @given(asymptotic_nets(), connections(), st.lists(st.tuples(small, small), min_size=5, max_size=5))
    def test_characteristic_lines_lie_on_locus(self, model, k, directions):
        c0, c1, c2, c3 = plane_family(model, k).coefficients()
        locus = envelope_point_locus(model, k).discriminant.as_expr()
        gens = (CHI2, CHI3, CHI4)
        for s, t in directions:
            # the generator where the family is stationary in (s:t)
            d_s = sp.Poly(3 * c0 * s**2 + 2 * c1 * s * t + c2 * t**2, *gens)
            d_t = sp.Poly(c1 * s**2 + 2 * c2 * s * t + 3 * c3 * t**2, *gens)
            first = sp.Matrix([d_s.coeff_monomial(g) for g in gens])
            second = sp.Matrix([d_t.coeff_monomial(g) for g in gens])
            generator = first.cross(second)
            if generator == sp.zeros(3, 1):
                continue
            for scale in range(1, 6):
                point = dict(zip(gens, scale * generator))
                self.assertEqual(locus.subs(point), 0)

    def test_wrong_model(self):
        with self.assertRaises(ModelMismatchError):
            envelope_tangential_cubic(LaplaceNet(), ProjConnection())
        with self.assertRaises(UnsupportedModelError):
            envelope_point_locus(Developable(), ProjConnection())


class TestUnionLoci(unittest.TestCase):

    @given(connections(), small, st.fractions(min_value=-3, max_value=3, max_denominator=3))
    def test_conjugate_contains_osculating_planes(self, k, v, rho):
        model = LaplaceNet(1, -1, 2)
        locus = union_locus_conjugate(model, k)
        point = conjugate_osculating_point(model, 1, v, 0, k.evaluate(v), rho)
        self.assertEqual(at(locus, point), 0)

    def test_conjugate_off_shell(self):
        model = LaplaceNet(1, -1, 2)
        k = ProjConnection(1, 2, 3, 4)
        point = conjugate_osculating_point(model, 1, 1, 0, k.evaluate(1) + 1, 0)
        self.assertNotEqual(at(union_locus_conjugate(model, k), point), 0)

    @settings(deadline=None)
    @given(connections(), small, small)
    def test_general_contains_osculating_planes(self, k, v, rho):
        plane = geometry_from_connection(GeneralSurface(), k)
        point = general_osculating_point(1, v, 0, k.evaluate(v), rho)
        for equation in union_locus_general(plane):
            self.assertEqual(at(equation, point), 0)

    def test_general_off_shell(self):
        k = ProjConnection(1, 2, 3, 4)
        plane = geometry_from_connection(GeneralSurface(), k)
        for v, rho in [(0, 0), (1, 2), (-2, 1), (3, -1)]:
            point = general_osculating_point(1, v, 0, k.evaluate(v) + 1, rho)
            self.assertNotEqual(at(union_locus_general(plane)[0], point), 0)

    def test_general_needs_transversal_plane(self):
        plane = GrassmannPlane.from_mapping({(1, 2, 3): 1})
        with self.assertRaises(TangentPlaneIntersectionError):
            union_locus_general(plane)

    def test_conjugate_gens(self):
        locus = union_locus_conjugate(LaplaceNet(), ProjConnection(1, 0, 0, 0))
        self.assertEqual(locus.gens, CHI[:4])


class TestPlaneSurfaces(unittest.TestCase):

    def test_straight_lines(self):
        model = PlaneSurface(a=1, b=2, alpha=3, beta=4, r=5, s=6, p=7, q=8, c=9)
        self.assertEqual(straight_lines_connection(model), ProjConnection(-4, -1, -4, 5))

    def test_flat_frame(self):
        self.assertEqual(straight_lines_connection(PlaneSurface()), ProjConnection(0, 0, 0, 0))


class TestSurfaceJet(unittest.TestCase):

    def _jet(self, y_uu):
        return SurfaceJet(
            y=(1, 0, 0, 0), y_x=(0, 1, 0, 0), y_u=(0, 0, 1, 0),
            y_xx=(0, 0, 0, 1), y_xu=(0, 0, 0, 0), y_uu=y_uu,
        )

    def test_asymptotic_form(self):
        L, M, N = asymptotic_form(self._jet((0, 0, 0, 1)))
        self.assertNotEqual(L, 0)
        self.assertEqual(M, 0)
        self.assertEqual(L, N)
        self.assertFalse(is_developable(self._jet((0, 0, 0, 1))))

    def test_quadric_patch(self):
        # y = (1, x, u, xu) at the origin
        jet = SurfaceJet(
            y=(1, 0, 0, 0), y_x=(0, 1, 0, 0), y_u=(0, 0, 1, 0),
            y_xx=(0, 0, 0, 0), y_xu=(0, 0, 0, 1), y_uu=(0, 0, 0, 0),
        )
        self.assertEqual(asymptotic_form(jet), (0, -1, 0))
        self.assertFalse(is_developable(jet))

    def test_planar_jet(self):
        jet = SurfaceJet(
            y=(1, 0, 0, 0), y_x=(0, 1, 0, 0), y_u=(0, 0, 1, 0),
            y_xx=(1, 2, 3, 0), y_xu=(0, 1, 1, 0), y_uu=(2, 0, 1, 0),
        )
        self.assertEqual(asymptotic_form(jet), (0, 0, 0))

    def test_developable(self):
        self.assertTrue(is_developable(self._jet((0, 0, 0, 0))))

    def test_dimension(self):
        jet = SurfaceJet(*([(1, 0, 0, 0, 0)] * 6))
        with self.assertRaises(AmbientDimensionError):
            asymptotic_form(jet)


if __name__ == '__main__':
    unittest.main()
