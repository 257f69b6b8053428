"""
Tests for the JSON document codec.
"""

import os
import sys
import unittest
from fractions import Fraction

import sympy as sp

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.services.connection import Centre, ProjConnection
from src.services.documents import (
    decode_connection,
    decode_elements,
    decode_geometry,
    decode_jetmap,
    decode_matrix,
    decode_model,
    decode_polynomial,
    decode_rank2,
    dumps,
    elements_from_context,
    encode_centre,
    encode_connection,
    encode_polynomial,
    loads,
    validate,
)
from src.services.errors import DocumentError, UsageError
from src.services.exact import as_poly
from src.services.jet import Element2, JetMap
from src.services.osculating import LaplaceNet, PencilData, PluckerLine
from src.skills.base import SkillContext

x, y = sp.symbols("x y")


class TestCanonicalText(unittest.TestCase):

    def test_sorted_compact(self):
        text = dumps(encode_centre(Centre(-2, 2)))
        self.assertEqual(text, '{"kind":"centre","x0":"-2","y0":"2"}\n')

    def test_rationals_as_strings(self):
        text = dumps(encode_connection(ProjConnection(Fraction(1, 2), 0, 0, 0, 3)))
        self.assertEqual(text, '{"A":"1/2","B":"0","C":"0","D":"0","E":"3","kind":"connection"}\n')

    def test_loads_rejects_floats(self):
        with self.assertRaises(DocumentError):
            loads('{"kind": "elements", "elements": [{"v": 0.5, "w": 1}]}')
        with self.assertRaises(DocumentError):
            loads('{"kind": "elements", "elements": [{"v": NaN, "w": 1}]}')

    def test_loads_rejects_non_objects(self):
        with self.assertRaises(DocumentError):
            loads('[1, 2]')
        with self.assertRaises(DocumentError):
            loads('{"kind": ')

    def test_document_error_is_usage_error(self):
        self.assertTrue(issubclass(DocumentError, UsageError))


class TestValidate(unittest.TestCase):

    def test_kind(self):
        self.assertEqual(validate({"kind": "matrix", "rows": []}), "matrix")
        with self.assertRaises(DocumentError):
            validate({"kind": "spline"})
        with self.assertRaises(DocumentError):
            validate({"kind": "matrix", "rows": []}, "elements")

    def test_fields(self):
        with self.assertRaises(DocumentError):
            validate({"kind": "connection", "A": 1, "B": 0, "C": 0})
        with self.assertRaises(DocumentError):
            validate({"kind": "connection", "A": 1, "B": 0, "C": 0, "D": 0, "F": 1})


class TestDecoders(unittest.TestCase):

    def test_elements(self):
        document = {"kind": "elements", "elements": [{"v": "1/2", "w": -3}, {"v": 0, "w": "2"}]}
        self.assertEqual(decode_elements(document), [Element2(Fraction(1, 2), -3), Element2(0, 2)])

    def test_elements_reject_extra_field(self):
        with self.assertRaises(DocumentError):
            decode_elements({"kind": "elements", "elements": [{"v": 1, "w": 1, "u": 0}]})

    def test_elements_reject_booleans(self):
        with self.assertRaises(DocumentError):
            decode_elements({"kind": "elements", "elements": [{"v": True, "w": 1}]})

    def test_jetmap(self):
        document = {"kind": "jetmap", "a": 1, "b": "2", "c": 0, "d": 1, "lambda": 0, "mu": 0, "nu": "1/3", "xi": 0}
        self.assertEqual(decode_jetmap(document), JetMap(1, 2, 0, 1, 0, 0, Fraction(1, 3), 0))

    def test_connection_default_e(self):
        document = {"kind": "connection", "A": 2, "B": 0, "C": 0, "D": 4, "E": 2}
        self.assertEqual(decode_connection(document), ProjConnection(1, 0, 0, 2))

    def test_rank2(self):
        with self.assertRaises(DocumentError):
            decode_rank2({"kind": "rank2", "A0": 1, "B": [0, 0, 0], "C": [0] * 7})
        with self.assertRaises(DocumentError):
            decode_rank2({"kind": "rank2", "A0": 0, "B": [0] * 4, "C": [0] * 7})
        eqn = decode_rank2({"kind": "rank2", "A0": 1, "B": [0] * 4, "C": [1, 0, 4, 0, 5, 0, 2]})
        self.assertEqual(eqn.C[4], 5)

    def test_model(self):
        model = decode_model({"kind": "model", "model": "laplace-net", "coefficients": {"b": "1/2"}})
        self.assertEqual(model, LaplaceNet(0, Fraction(1, 2), 0))
        with self.assertRaises(DocumentError):
            decode_model({"kind": "model", "model": "ruled"})
        with self.assertRaises(DocumentError):
            decode_model({"kind": "model", "model": "laplace-net", "coefficients": {"alpha": 1}})

    def test_geometry(self):
        plucker = {"p12": 0, "p13": 0, "p14": 0, "p23": 0, "p42": -1, "p34": 1}
        line = decode_geometry({"kind": "geometry", "case": "laplace", "plucker": plucker})
        self.assertEqual(line, PluckerLine(0, 0, 0, 0, -1, 1))
        pencil = decode_geometry({
            "kind": "geometry",
            "case": "parabolic",
            "pencil": {"alpha": [0, 1, 1, 0], "beta": [0, 0, 0, 1], "beta_prime": [1, 0, 0, 0]},
        })
        self.assertIsInstance(pencil, PencilData)

    def test_geometry_errors(self):
        broken = {"p12": 1, "p13": 0, "p14": 0, "p23": 0, "p42": 0, "p34": 1}
        with self.assertRaises(DocumentError):
            decode_geometry({"kind": "geometry", "case": "laplace", "plucker": broken})
        with self.assertRaises(DocumentError):
            decode_geometry({"kind": "geometry", "case": "laplace", "grassmann": {}})
        with self.assertRaises(DocumentError):
            decode_geometry({"kind": "geometry", "case": "ruled", "plucker": broken})

    def test_matrix(self):
        self.assertEqual(decode_matrix({"kind": "matrix", "rows": [[1, 2], ["3", "1/4"]]}, 2)[1][1], Fraction(1, 4))
        with self.assertRaises(DocumentError):
            decode_matrix({"kind": "matrix", "rows": [[1, 2, 3], [4, 5, 6], [7, 8, 9]]}, 2)
        with self.assertRaises(DocumentError):
            decode_matrix({"kind": "matrix", "rows": [[1, 2], [3]]})

    def test_polynomial(self):
        poly = as_poly(x**2 * y - sp.Rational(1, 2) * y, (x, y))
        document = encode_polynomial(poly)
        self.assertEqual(document["variables"], ["x", "y"])
        self.assertEqual(document["terms"], [{"exps": [0, 1], "coef": "-1/2"}, {"exps": [2, 1], "coef": "1"}])
        self.assertEqual(decode_polynomial(document), poly)

    def test_polynomial_rejects_bad_exponents(self):
        with self.assertRaises(DocumentError):
            decode_polynomial({"variables": ["x"], "terms": [{"exps": [-1], "coef": 1}]})
        with self.assertRaises(DocumentError):
            decode_polynomial({"variables": ["x"], "terms": [{"exps": [1, 2], "coef": 1}]})


class TestElementsFromContext(unittest.TestCase):

    def test_flags(self):
        context = SkillContext(data={"v": "-1/2", "w": "3"})
        self.assertEqual(elements_from_context(context), [Element2(Fraction(-1, 2), 3)])

    def test_half_flag(self):
        with self.assertRaises(UsageError):
            elements_from_context(SkillContext(data={"v": "1"}))

    def test_document(self):
        context = SkillContext(data={"input": {"kind": "elements", "elements": [{"v": 1, "w": 1}]}})
        self.assertEqual(elements_from_context(context), [Element2(1, 1)])

    def test_missing(self):
        with self.assertRaises(UsageError):
            elements_from_context(SkillContext(command="centre"))


if __name__ == '__main__':
    unittest.main()
