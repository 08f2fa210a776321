"""runner.py: Run the claim registry on worker threads and collect a Report."""

import json
import logging
import threading
import time

from six.moves import queue

from topocheck.claims import REGISTRY, Status, check_claim, recheck_witness

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


STATUS_CONFIRMED = 0
STATUS_REFUTED = 1
STATUS_ERRORS = 2


class ErrorVerdict(object):
    """Stands in for a ClaimVerdict when evaluating the claim raised."""

    def __init__(self, claim, error, elapsed):
        self.cid = claim.cid
        self.location = claim.location
        self.kind = claim.kind
        self.expected = claim.expected
        self.stated = claim.stated
        self.status = Status.ERROR
        self.witness = None
        self.bound = None
        self.elapsed = elapsed
        self.detail = "{}: {}".format(error.__class__.__name__, error)
        self.applicable = None
        self.witness_validated = None
        self.families = None

    @property
    def diverges(self):
        return True

    def to_dict(self):
        return {
            "id": self.cid,
            "location": self.location,
            "kind": self.kind.value,
            "status": self.status.value,
            "expected": self.expected.value,
            "stated": self.stated,
            "witness": None,
            "witness_validated": None,
            "bound": None,
            "applicable": None,
            "time": round(self.elapsed, 4),
            "detail": self.detail,
            "families": None,
        }


def select_claims(configuration):
    """
    Registry claims matching the configuration filters, in registry order. An
    id filter matches the id itself and every id continuing it with "-".
    """
    selected = []
    for claim in REGISTRY:
        if configuration.kinds is not None and claim.kind not in configuration.kinds:
            continue
        if configuration.ids is not None:
            if not any(claim.cid == i or claim.cid.startswith(i + "-") for i in configuration.ids):
                continue
        selected.append(claim)
    return selected


def evaluate(claim, configuration):
    """Check one claim and self-validate its witness; exceptions become error verdicts."""
    start = time.time()
    try:
        verdict = check_claim(claim.cid, configuration)
        if verdict.status == Status.REFUTED:
            verdict.witness_validated = recheck_witness(verdict, configuration)
            if not verdict.witness_validated:
                log.warning("%s: witness does not reproduce the refutation", claim.cid)
        return verdict
    except Exception as e:
        log.exception("%s failed", claim.cid)
        return ErrorVerdict(claim, e, time.time() - start)


class ClaimWorker(threading.Thread):

    def __init__(self, jobs, results, configuration):
        super(ClaimWorker, self).__init__()
        self.daemon = True
        self._jobs = jobs
        self._results = results
        self._configuration = configuration

    def run(self):
        while True:
            try:
                index, claim = self._jobs.get_nowait()
            except queue.Empty:
                return
            self._results.put((index, evaluate(claim, self._configuration)))


class Report(object):

    def __init__(self, verdicts, configuration, elapsed=0.0):
        self.verdicts = list(verdicts)
        self.configuration = configuration
        self.elapsed = elapsed

    def counts(self):
        counts = dict((status, 0) for status in Status)
        for v in self.verdicts:
            counts[v.status] += 1
        return counts

    def divergences(self):
        """Verdicts of stated claims differing from their recorded expectation."""
        return [v for v in self.verdicts if v.stated and v.diverges]

    @property
    def status_code(self):
        counts = self.counts()
        if counts[Status.ERROR]:
            return STATUS_ERRORS
        if counts[Status.REFUTED]:
            return STATUS_REFUTED
        return STATUS_CONFIRMED

    def verdict(self, cid):
        for v in self.verdicts:
            if v.cid == cid:
                return v
        raise KeyError(cid)

    def to_dict(self):
        config = self.configuration
        return {
            "n_max": config.n_max,
            "n_min": config.n_min,
            "map_n_max": config.map_n_max,
            "strict_hstarg": config.strict_hstarg,
            "time": round(self.elapsed, 3),
            "summary": dict((status.value, count) for status, count in self.counts().items()),
            "claims": [v.to_dict() for v in self.verdicts],
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent)

    def to_table(self):
        rows = [("ID", "STATUS", "EXPECTED", "BOUND", "TIME", "DETAIL")]
        for v in self.verdicts:
            detail = v.detail
            if v.witness is not None:
                detail = "{} [{}]".format(detail, v.witness)
            rows.append((v.cid, v.status.value, v.expected.value if v.stated else "-",
                         "-" if v.bound is None else str(v.bound),
                         "{:.3f}".format(v.elapsed), detail))
        widths = [max(len(row[i]) for row in rows) for i in range(5)]
        lines = []
        for row in rows:
            cells = [row[i].ljust(widths[i]) for i in range(5)]
            lines.append("  ".join(cells + [row[5]]).rstrip())
        counts = self.counts()
        lines.append("")
        lines.append(", ".join("{} {}".format(counts[s], s.value) for s in Status))
        return "\n".join(lines)


def diff(first, second):
    """(id, first status, second status) for every claim whose status differs."""
    changes = []
    statuses = dict((v.cid, v.status) for v in second.verdicts)
    for v in first.verdicts:
        other = statuses.get(v.cid)
        if other is not None and other != v.status:
            changes.append((v.cid, v.status, other))
    return changes


def run_registry(configuration):
    """
    Evaluate every selected claim. Claims are spread over configuration.workers
    threads; verdicts are merged back into registry order.
    """
    start = time.time()
    claims = select_claims(configuration)
    jobs = queue.Queue()
    results = queue.Queue()
    for index, claim in enumerate(claims):
        jobs.put((index, claim))

    if configuration.workers == 1:
        ClaimWorker(jobs, results, configuration).run()
    else:
        workers = [ClaimWorker(jobs, results, configuration)
                   for _ in range(min(configuration.workers, max(1, len(claims))))]
        for worker in workers:
            worker.start()
        for worker in workers:
            worker.join()

    verdicts = [None] * len(claims)
    while not results.empty():
        index, verdict = results.get_nowait()
        verdicts[index] = verdict

    report = Report(verdicts, configuration, time.time() - start)
    log.info("%d claims in %.1fs", len(verdicts), report.elapsed)
    return report
