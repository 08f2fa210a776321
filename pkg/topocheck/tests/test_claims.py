from unittest import TestCase

from topocheck.axioms import resolve_axiom
from topocheck.claims import (REGISTRY, ClaimKind, Configuration, Status, UnknownClaim, check_claim, lookup_claim,
                              recheck_witness, search_counterexample)
from topocheck.enumeration import GroundSetTooLarge
from topocheck.fixtures import load_fixture
from topocheck.space import indiscrete_space

SMALL = Configuration(n_max=3, map_n_max=2)


class RegistryTester(TestCase):

    def test_ids_unique(self):
        ids = [claim.cid for claim in REGISTRY]
        self.assertEqual(len(ids), len(set(ids)))

    def test_every_claim_has_a_location(self):
        for claim in REGISTRY:
            self.assertTrue(claim.location)
            self.assertTrue(claim.describe())

    def test_covers_the_numbered_results(self):
        ids = set(claim.cid for claim in REGISTRY)
        for cid in ("THM-2.5-1", "THM-2.5-5", "THM-3.2-1", "THM-3.2-8", "THM-3.4", "THM-3.5", "THM-3.6", "THM-3.8",
                    "RMK-2.4-A", "RMK-3.3-A", "RMK-3.7-A", "RMK-4.1", "RMK-4.2-i", "RMK-4.2-ii", "EX-4.1.1",
                    "EX-4.1.2", "EX-5.1.1", "DIAG-4-EDGE-8", "DIAG-5-EDGE-6", "THM-5.2-i", "THM-5.3-iii",
                    "THM-5.4-iii", "PROP-5.5-ii", "THM-6.2-i", "THM-6.2-ii", "THM-6.3-i", "THM-6.3-ii"):
            self.assertIn(cid, ids)

    def test_sigma1_fails_both_scstar_axioms(self):
        claim = lookup_claim("RMK-3.3-B")
        failing = [a.statement.describe() for a in claim.assertions if not a.expected]
        self.assertEqual(len(failing), 2)
        self.assertIn("SC*-C0", failing[0])
        self.assertIn("SC*-C1", failing[1])

    def test_section_4_diagram_edges(self):
        edges = [claim for claim in REGISTRY if claim.cid.startswith("DIAG-4-EDGE-")]
        self.assertEqual(len(edges), 8)

    def test_unknown(self):
        with self.assertRaises(UnknownClaim):
            lookup_claim("THM-9.9")
        with self.assertRaises(UnknownClaim):
            check_claim("THM-9.9")


class SearchTester(TestCase):

    def test_c1_gives_c0(self):
        self.assertIsNone(search_counterexample(["c1"], "c0", 4))

    def test_t1_gives_t0(self):
        self.assertIsNone(search_counterexample([resolve_axiom("t1")], resolve_axiom("t0"), 3))

    def test_scstar_c0_gives_weakly_scstar_c0(self):
        self.assertIsNone(search_counterexample(["sc*-c0"], "weakly-sc*-c0", 4))
        self.assertIsNone(search_counterexample(["sc*-c0"], "weakly-sc*-c0", 4, n_min=2))

    def test_one_point_space_is_opt_in(self):
        witness = search_counterexample(["sc*-c0"], "weakly-sc*-c0", 4, n_min=1)
        self.assertEqual(witness.n, 1)

    def test_scstar_c0_without_c1(self):
        # SC*-closure is the identity, so SC*-C1 never fails
        self.assertIsNone(search_counterexample(["sc*-c0"], "sc*-c1", 3))

    def test_first_witness_is_deterministic(self):
        first = search_counterexample(["c0"], "c1", 3)
        self.assertIsNotNone(first)
        self.assertEqual(first, search_counterexample(["c0"], "c1", 3))

    def test_too_large(self):
        with self.assertRaises(GroundSetTooLarge):
            search_counterexample(["c1"], "c0", 7)


class FixtureClaimTester(TestCase):

    def test_example_4_1_1(self):
        verdict = check_claim("EX-4.1.1", SMALL)
        self.assertEqual(verdict.status, Status.CONFIRMED)
        self.assertIsNone(verdict.witness)
        self.assertIsNone(verdict.bound)

    def test_example_4_1_2(self):
        self.assertEqual(check_claim("EX-4.1.2", SMALL).status, Status.CONFIRMED)

    def test_example_5_1_1(self):
        verdict = check_claim("EX-5.1.1", SMALL)
        self.assertEqual(verdict.status, Status.REFUTED)
        self.assertEqual(verdict.witness.fixture, "example4")
        self.assertEqual(verdict.witness.index, 0)
        self.assertIn("h*-closed", verdict.families)
        self.assertTrue(recheck_witness(verdict, SMALL))
        record = verdict.to_dict()
        self.assertEqual(record["id"], "EX-5.1.1")
        self.assertEqual(record["witness"]["fixture"], "example4")

    def test_sigma1_is_scstar_c0(self):
        verdict = check_claim("RMK-3.3-B", SMALL)
        self.assertEqual(verdict.status, Status.REFUTED)
        self.assertIn("SC*-C0", verdict.detail)
        self.assertTrue(recheck_witness(verdict, SMALL))

    def test_subspace_claim(self):
        verdict = check_claim("THM-3.8", SMALL)
        self.assertEqual(verdict.status, Status.REFUTED)
        self.assertIn("subspace {a,c}", verdict.detail)
        self.assertEqual(verdict.witness.space, load_fixture("sigma"))


class EnumerationClaimTester(TestCase):

    def test_implication_from_two_points(self):
        verdict = check_claim("THM-3.6", SMALL)
        self.assertEqual(verdict.status, Status.CONFIRMED)

    def test_r0_without_weakly_r0_on_two_points(self):
        verdict = check_claim("THM-2.5-3", SMALL)
        self.assertEqual(verdict.status, Status.REFUTED)
        self.assertEqual(verdict.witness.space, indiscrete_space(2))

    def test_implication_refuted_on_one_point(self):
        config = SMALL.replace(n_min=1)
        verdict = check_claim("THM-3.6", config)
        self.assertEqual(verdict.status, Status.REFUTED)
        self.assertEqual(verdict.witness.space.n, 1)
        self.assertEqual(verdict.bound, 3)
        self.assertTrue(recheck_witness(verdict, config))

    def test_equivalences(self):
        for cid in ("THM-3.4", "THM-3.5", "THM-5.2-i"):
            self.assertEqual(check_claim(cid, SMALL).status, Status.CONFIRMED, cid)

    def test_property_claims(self):
        for cid in ("SET-HIER-4", "SET-SCL", "SET-PCL", "SET-ACL", "SET-SCSTAR-ALL", "DIAG-4-EDGE-1", "RMK-4.1"):
            self.assertEqual(check_claim(cid, SMALL).status, Status.CONFIRMED, cid)

    def test_independence_needs_separating_spaces(self):
        verdict = check_claim("THM-3.2-8", SMALL)
        self.assertEqual(verdict.status, Status.REFUTED)
        self.assertEqual(verdict.witness.fixture, "tau1")
        self.assertTrue(recheck_witness(verdict, SMALL))

    def test_strict_reading_is_applied(self):
        strict = SMALL.replace(strict_hstarg=True)
        self.assertTrue(strict.strict_hstarg)
        self.assertEqual(check_claim("DIAG-4-EDGE-1", strict).status, Status.CONFIRMED)


class MapClaimTester(TestCase):

    def test_homeomorphisms_preserve(self):
        for cid in ("THM-6.3-ii", "THM-6.3-ii-td", "SANITY-HOMEO", "THM-6.3-i"):
            verdict = check_claim(cid, SMALL)
            self.assertEqual(verdict.status, Status.CONFIRMED, cid)
            self.assertEqual(verdict.bound, 2)
            self.assertGreater(verdict.applicable, 0)

    def test_induced_map_claims_are_decided(self):
        for cid in ("THM-6.2-i", "THM-6.2-i-open", "THM-6.2-ii"):
            verdict = check_claim(cid, SMALL)
            self.assertIn(verdict.status, (Status.CONFIRMED, Status.REFUTED, Status.INAPPLICABLE))
            if verdict.status == Status.REFUTED:
                self.assertIsNotNone(verdict.witness.point_map)
                self.assertTrue(recheck_witness(verdict, SMALL))


class ConfigurationTester(TestCase):

    def test_defaults(self):
        config = Configuration()
        self.assertEqual((config.n_max, config.n_min, config.map_n_max, config.workers), (4, 2, 3, 1))
        self.assertFalse(config.strict_hstarg)

    def test_bounds(self):
        with self.assertRaises(GroundSetTooLarge):
            Configuration(n_max=7)
        with self.assertRaises(ValueError):
            Configuration(map_n_max=5)
        with self.assertRaises(ValueError):
            Configuration(n_max=3, n_min=4)

    def test_default_n_min_follows_n_max(self):
        self.assertEqual(Configuration(n_max=1).n_min, 1)
        self.assertEqual(Configuration(n_max=1).replace(n_max=3).n_min, 2)
        self.assertEqual(Configuration(n_min=1).replace(n_max=3).n_min, 1)

    def test_replace(self):
        config = Configuration(kinds=[ClaimKind.FIXTURE]).replace(workers=4)
        self.assertEqual(config.workers, 4)
        self.assertEqual(config.kinds, frozenset([ClaimKind.FIXTURE]))


class DefaultBoundsTester(TestCase):
    """Claims at the default bounds: 355 spaces on four points, homeomorphisms up to three points."""

    def setUp(self):
        self.config = Configuration()

    def test_kernel_and_closed_set_characterizations(self):
        for cid in ("THM-3.4", "THM-3.5", "THM-5.2-i"):
            verdict = check_claim(cid, self.config)
            self.assertEqual(verdict.status, Status.CONFIRMED, cid)
            self.assertEqual(verdict.bound, 4)

    def test_hstar_t_half_characterization(self):
        verdict = check_claim("THM-5.2-ii", self.config)
        self.assertIn(verdict.status, (Status.CONFIRMED, Status.REFUTED))
        if verdict.status == Status.REFUTED:
            self.assertTrue(recheck_witness(verdict, self.config))

    def test_property_claims(self):
        for claim in REGISTRY:
            if claim.cid.startswith("SET-"):
                verdict = check_claim(claim.cid, self.config)
                self.assertEqual(verdict.status, Status.CONFIRMED, claim.cid)
                self.assertFalse(claim.stated)

    def test_scstar_c0_gives_weakly_scstar_c0(self):
        self.assertEqual(check_claim("THM-3.6", self.config).status, Status.CONFIRMED)

    def test_homeomorphism_claims(self):
        for cid in ("THM-6.3-i", "THM-6.3-ii", "THM-6.3-ii-td", "SANITY-HOMEO"):
            verdict = check_claim(cid, self.config)
            self.assertEqual(verdict.status, Status.CONFIRMED, cid)
            self.assertEqual(verdict.bound, 3)
            self.assertGreater(verdict.applicable, 0)
