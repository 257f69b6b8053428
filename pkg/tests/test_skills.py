"""
Test suite for the toolkit skills

Runs each skill against decoded documents the way the toolkits do.
"""

import os
import sys
import unittest
from unittest.mock import AsyncMock, Mock

ROOT = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
if ROOT not in sys.path:
    sys.path.insert(0, ROOT)

from src.services.errors import UsageError
from src.skills.base import BaseSkill, SkillContext, SkillExecutor, SkillRegistry
from src.toolkit.manager import ToolkitManager

WORKED = {
    "kind": "elements",
    "elements": [{"v": v, "w": w} for v, w in enumerate([0, 1, 5, 2, 3, 4])],
}
CUBIC = {"kind": "elements", "elements": [{"v": v, "w": v**3} for v in range(4)]}
SHIFT = {"kind": "jetmap", "a": 1, "b": 2, "c": 0, "d": 1, "lambda": 0, "mu": 0, "nu": 0, "xi": 0}


def elements(*pairs):
    return {"kind": "elements", "elements": [{"v": v, "w": w} for v, w in pairs]}


class SkillTestCase(unittest.IsolatedAsyncioTestCase):

    @classmethod
    def setUpClass(cls):
        cls.manager = ToolkitManager(ROOT)
        cls.manager.load_toolkits()

    async def run_skill(self, toolkit, name, **data):
        skill = self.manager.toolkits[toolkit].skills_registry.get(name)
        return await skill.execute(SkillContext(data=data, command=name))


class TestInvariantSkills(SkillTestCase):

    async def test_worked_example(self):
        result = await self.run_skill("invariants", "compute_invariants", input=WORKED)
        self.assertTrue(result["success"])
        self.assertEqual([str(x) for x in result["document"]["r"]], ["4/3", "3/2", "8/5"])
        self.assertEqual([str(x) for x in result["document"]["omega"]], ["1472/875"])

    async def test_non_generic(self):
        result = await self.run_skill("invariants", "compute_invariants", input=elements((0, 1), (1, 1), (2, 3), (3, 4)))
        self.assertFalse(result["success"])
        self.assertEqual(result["error"]["condition"], "w1=w2")

    async def test_cross_ratio(self):
        result = await self.run_skill("invariants", "cross_ratio", input=CUBIC)
        self.assertEqual(str(result["document"]["cross_ratio"]), "4/3")

    async def test_cross_ratio_needs_four(self):
        result = await self.run_skill("invariants", "cross_ratio", input=WORKED)
        self.assertEqual(result["error"]["condition"], "degenerate-configuration")

    async def test_basepoint_is_carried(self):
        document = dict(WORKED, basepoint={"x": "0", "u": "0"})
        result = await self.run_skill("invariants", "compute_invariants", input=document)
        self.assertEqual(result["document"]["basepoint"], {"x": "0", "u": "0"})


class TestConnectionSkills(SkillTestCase):

    async def test_fit(self):
        result = await self.run_skill("connection", "fit_connection", input=CUBIC)
        self.assertEqual([str(result["document"][k]) for k in "ABCDE"], ["0", "0", "0", "1", "1"])

    async def test_fit_singular(self):
        result = await self.run_skill("connection", "fit_connection", input=elements((0, 0), (0, 1), (2, 3), (3, 4)))
        self.assertEqual(result["error"]["condition"], "singular-system")

    async def test_transform_element_from_flags(self):
        result = await self.run_skill("connection", "transform_element", map=SHIFT, v="1", w="1")
        self.assertEqual([(str(e["v"]), str(e["w"])) for e in result["document"]["elements"]], [("3", "1")])

    async def test_transform_element_at_infinity(self):
        inversion = dict(SHIFT, a=0, b=1, c=1, d=0)
        result = await self.run_skill("connection", "transform_element", map=inversion, input=elements((0, 1)))
        self.assertEqual(result["error"]["condition"], "element-at-infinity")

    async def test_transform_connection(self):
        connection = {"kind": "connection", "A": 0, "B": 0, "C": 0, "D": 1}
        result = await self.run_skill("connection", "transform_connection", input=connection, map=SHIFT)
        # w = (v - 2)^3 after shifting v by 2
        self.assertEqual([str(result["document"][k]) for k in "ABCD"], ["-8", "12", "-6", "1"])

    async def test_centre(self):
        result = await self.run_skill("connection", "centre", v="1", w="1")
        self.assertEqual((str(result["document"]["x0"]), str(result["document"]["y0"])), ("-2", "2"))

    async def test_centres_and_inflection(self):
        result = await self.run_skill("connection", "centre", input=elements((1, 1), (0, 2)))
        self.assertEqual(len(result["document"]["centres"]), 2)
        result = await self.run_skill("connection", "centre", v="1", w="0")
        self.assertEqual(result["error"]["condition"], "inflection")

    async def test_centre_locus(self):
        connection = {"kind": "connection", "A": 1, "B": 0, "C": 0, "D": 0}
        result = await self.run_skill("connection", "centre_locus", input=connection)
        self.assertEqual(result["document"]["name"], "central-cubic")
        self.assertEqual(result["document"]["polynomials"][0]["variables"], ["x0", "y0"])

    async def test_classify(self):
        rank2 = {"kind": "rank2", "A0": 1, "B": [0, 0, 0, 0], "C": [1, 0, 4, 0, 5, 0, 2]}
        result = await self.run_skill("connection", "classify_rank2", input=rank2)
        self.assertEqual(result["document"]["classification"], "conic")


class TestOsculatingSkills(SkillTestCase):

    LAPLACE = {"kind": "model", "model": "laplace-net", "coefficients": {"a": 1, "b": 2}}
    CONNECTION = {"kind": "connection", "A": 1, "B": 2, "C": 3, "D": 4}

    async def test_geometry_then_incidence(self):
        result = await self.run_skill("osculating", "geometry", model=self.LAPLACE, input=self.CONNECTION)
        self.assertEqual(result["document"]["case"], "laplace")
        incidence = await self.run_skill("osculating", "incidence", model=self.LAPLACE, geometry=result["document"])
        connection = incidence["document"]["connection"]
        self.assertEqual([str(connection[k]) for k in "ABCD"], ["1", "2", "3", "4"])

    async def test_geometry_free_parameters(self):
        model = {"kind": "model", "model": "general-surface"}
        result = await self.run_skill("osculating", "geometry", model=model, input=self.CONNECTION, free={"p145": "1"})
        self.assertEqual(str(result["document"]["grassmann"]["p145"]), "1")
        result = await self.run_skill("osculating", "geometry", model=model, input=self.CONNECTION, free={"q": "1"})
        self.assertEqual(result["error"]["condition"], "free-parameter")

    async def test_envelope(self):
        model = {"kind": "model", "model": "asymptotic-net"}
        connection = {"kind": "connection", "A": 1, "B": 0, "C": 0, "D": 1}
        result = await self.run_skill("osculating", "envelope", model=model, input=connection)
        self.assertEqual(result["document"]["classification"], "generic")
        self.assertEqual(result["document"]["tangential"]["variables"], ["chi2", "chi3", "chi4"])

    async def test_union_locus(self):
        result = await self.run_skill("osculating", "union_locus", model=self.LAPLACE, input=self.CONNECTION)
        self.assertEqual(result["document"]["name"], "union-locus")
        self.assertEqual(len(result["document"]["polynomials"]), 1)
        general = {"kind": "model", "model": "general-surface"}
        result = await self.run_skill("osculating", "union_locus", model=general, input=self.CONNECTION)
        self.assertEqual(len(result["document"]["polynomials"]), 3)

    async def test_union_locus_unsupported(self):
        model = {"kind": "model", "model": "parabolic"}
        result = await self.run_skill("osculating", "union_locus", model=model, input=self.CONNECTION)
        self.assertEqual(result["error"]["condition"], "unsupported-model")

    async def test_straight_lines(self):
        model = {"kind": "model", "model": "plane-surface", "coefficients": {"alpha": 3, "b": 2}}
        result = await self.run_skill("osculating", "straight_lines", model=model)
        self.assertEqual(str(result["document"]["B"]), "-1")


class TestConeSkills(SkillTestCase):

    async def test_embed_with_map(self):
        result = await self.run_skill("cone", "embed", input=elements((1, 1)), map=SHIFT)
        self.assertEqual([str(z) for z in result["document"]["points"][0]], ["1", "3", "9", "27", "1"])
        self.assertEqual(result["document"]["on_cone"], [True])

    async def test_cone_check(self):
        cone = {"kind": "cone", "points": [[1, 2, 4, 8, 5], [1, 1, 2, 1, 0]]}
        result = await self.run_skill("cone", "cone_check", input=cone)
        self.assertEqual(result["document"]["on_cone"], [True, False])

    async def test_g_matrix(self):
        result = await self.run_skill("cone", "g_matrix", sym3={"kind": "matrix", "rows": [[1, 0], [0, 1]]})
        self.assertEqual(result["document"]["name"], "sym3")
        result = await self.run_skill("cone", "g_matrix", map=SHIFT)
        self.assertEqual(len(result["document"]["rows"]), 5)

    async def test_g_matrix_needs_one_source(self):
        skill = self.manager.toolkits["cone"].skills_registry.get("g_matrix")
        with self.assertRaises(UsageError):
            await skill.validate_input(SkillContext())

    async def test_cone_cross_ratio(self):
        cone = {"kind": "cone", "points": [[1, v, v**2, v**3, 1] for v in range(4)]}
        result = await self.run_skill("cone", "cone_cross_ratio", input=cone)
        self.assertEqual(str(result["document"]["cross_ratio"]), "4/3")
        cone["points"][0] = [0, 0, 0, 0, 1]
        result = await self.run_skill("cone", "cone_cross_ratio", input=cone)
        self.assertEqual(result["error"]["condition"], "cone-vertex")


class TestErrataSkill(SkillTestCase):

    async def test_report(self):
        result = await self.run_skill("errata", "verify_errata")
        entries = {entry["formula"]: entry["status"] for entry in result["document"]["entries"]}
        self.assertEqual(entries["rank2-central-sextic"], "matches")
        self.assertEqual(entries["centre-transform"], "differs")


class TestSkillExecutor(unittest.IsolatedAsyncioTestCase):

    def setUp(self):
        self.registry = SkillRegistry()
        self.skill = Mock(spec=BaseSkill)
        self.skill.name = "probe"
        self.skill.validate_input = AsyncMock(return_value=True)
        self.skill.execute = AsyncMock(return_value={"success": True, "document": {"kind": "report", "entries": []}})
        self.registry.register(self.skill)
        self.executor = SkillExecutor(self.registry)

    async def test_runs_skill(self):
        result = await self.executor.execute("probe", SkillContext())
        self.assertTrue(result["success"])
        self.skill.execute.assert_awaited_once()

    async def test_unknown_skill(self):
        with self.assertRaises(UsageError):
            await self.executor.execute("missing", SkillContext())

    async def test_failed_validation(self):
        self.skill.validate_input.return_value = False
        with self.assertRaises(UsageError):
            await self.executor.execute("probe", SkillContext())
        self.skill.execute.assert_not_awaited()

    async def test_unexpected_errors_propagate(self):
        self.skill.execute.side_effect = RuntimeError("boom")
        with self.assertRaises(RuntimeError):
            await self.executor.execute("probe", SkillContext())

    def test_duplicate_registration(self):
        with self.assertRaises(ValueError):
            self.registry.register(self.skill)


class TestSkillContext(unittest.TestCase):

    def test_require_names_the_flag(self):
        context = SkillContext(command="incidence")
        with self.assertRaisesRegex(UsageError, "--geometry"):
            context.require("geometry")
        with self.assertRaisesRegex(UsageError, "--in"):
            context.require("input")


if __name__ == '__main__':
    unittest.main()
