import json
from unittest import TestCase

import mock

from topocheck.claims import REGISTRY, ClaimKind, Configuration, Status
from topocheck.runner import (STATUS_CONFIRMED, STATUS_ERRORS, STATUS_REFUTED, Report, diff, run_registry,
                              select_claims)

SMALL = Configuration(n_max=3, map_n_max=2)


class SelectTester(TestCase):

    def test_everything_by_default(self):
        self.assertEqual(select_claims(SMALL), REGISTRY)

    def test_kind_filter(self):
        selected = select_claims(SMALL.replace(kinds=[ClaimKind.FIXTURE]))
        self.assertTrue(selected)
        for claim in selected:
            self.assertEqual(claim.kind, ClaimKind.FIXTURE)
            self.assertTrue(claim.cid.startswith(("RMK-", "EX-", "THM-3.8")))

    def test_id_prefix(self):
        ids = [claim.cid for claim in select_claims(SMALL.replace(ids=["THM-3.6"]))]
        self.assertEqual(ids, ["THM-3.6", "THM-3.6-c1"])
        ids = [claim.cid for claim in select_claims(SMALL.replace(ids=["THM-6.3-i"]))]
        self.assertEqual(ids, ["THM-6.3-i"])


class RunTester(TestCase):

    def test_full_registry(self):
        report = run_registry(SMALL)
        self.assertEqual([v.cid for v in report.verdicts], [claim.cid for claim in REGISTRY])
        for verdict in report.verdicts:
            self.assertNotEqual(verdict.status, Status.ERROR, verdict.detail)
            if verdict.status == Status.REFUTED:
                self.assertIsNotNone(verdict.witness, verdict.cid)
                self.assertTrue(verdict.witness_validated, verdict.cid)
        self.assertEqual(report.status_code, STATUS_REFUTED)

    def test_workers_merge_in_registry_order(self):
        config = SMALL.replace(kinds=[ClaimKind.FIXTURE, ClaimKind.IMPLICATION])
        serial = run_registry(config)
        parallel = run_registry(config.replace(workers=4))
        self.assertEqual([v.cid for v in serial.verdicts], [v.cid for v in parallel.verdicts])
        self.assertEqual([v.status for v in serial.verdicts], [v.status for v in parallel.verdicts])

    def test_confirmed_only(self):
        report = run_registry(SMALL.replace(ids=["EX-4.1.1", "EX-4.1.2"]))
        self.assertEqual(report.status_code, STATUS_CONFIRMED)
        self.assertEqual(report.divergences(), [])

    def test_errors_do_not_abort(self):
        with mock.patch("topocheck.runner.check_claim", side_effect=RuntimeError("boom")):
            report = run_registry(SMALL.replace(ids=["EX-4.1.1", "RMK-4.1"]))
        self.assertEqual(len(report.verdicts), 2)
        for verdict in report.verdicts:
            self.assertEqual(verdict.status, Status.ERROR)
            self.assertIn("boom", verdict.detail)
        self.assertEqual(report.status_code, STATUS_ERRORS)

    def test_unstated_claims_do_not_diverge(self):
        report = run_registry(SMALL.replace(ids=["EX-5.1.1", "SET-SCSTAR-ALL"]))
        self.assertEqual([c["stated"] for c in report.to_dict()["claims"]], [True, False])
        self.assertEqual([v.cid for v in report.divergences()], ["EX-5.1.1"])
        with mock.patch("topocheck.runner.check_claim", side_effect=RuntimeError("boom")):
            failing = run_registry(SMALL.replace(ids=["SET-SCL"]))
        self.assertEqual(failing.divergences(), [])
        self.assertEqual(failing.status_code, STATUS_ERRORS)

    def test_serialization(self):
        report = run_registry(SMALL.replace(ids=["EX-4.1.1", "EX-5.1.1"]))
        data = json.loads(report.to_json())
        self.assertEqual(data["n_max"], 3)
        self.assertEqual([c["id"] for c in data["claims"]], ["EX-4.1.1", "EX-5.1.1"])
        self.assertEqual(data["claims"][1]["status"], "refuted")
        self.assertTrue(data["claims"][1]["witness_validated"])
        table = report.to_table()
        self.assertIn("EX-4.1.1", table)
        self.assertIn("1 confirmed, 1 refuted", table)


class DiffTester(TestCase):

    def test_diff(self):
        first = run_registry(SMALL.replace(ids=["EX-4.1.1", "EX-5.1.1"]))
        second = Report(list(first.verdicts), SMALL)
        self.assertEqual(diff(first, second), [])
        changed = mock.Mock(cid="EX-4.1.1", status=Status.REFUTED)
        third = Report([changed, first.verdicts[1]], SMALL)
        self.assertEqual(diff(first, third), [("EX-4.1.1", Status.CONFIRMED, Status.REFUTED)])
