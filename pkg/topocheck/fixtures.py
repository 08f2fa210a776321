"""fixtures.py: The example spaces shipped with topocheck."""

import logging
import os
import threading

from topocheck.document import read_document

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


FIXTURE_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "data")

FIXTURES = ["tau1", "tau2", "sigma", "sigma1", "sigma2", "eta1", "example4", "indiscrete2"]

_spaces = {}
_lock = threading.Lock()


class UnknownFixture(KeyError):
    pass


def fixture_path(name):
    if name not in FIXTURES:
        raise UnknownFixture("Unknown fixture '{}'".format(name))
    return os.path.join(FIXTURE_DIR, name + ".json")


def fixture_document(name):
    return read_document(fixture_path(name))


def load_fixture(name):
    """The fixture space, shared between callers so its memo is reused."""
    with _lock:
        if name not in _spaces:
            _spaces[name] = fixture_document(name).to_space()
            log.debug("loaded fixture %s", name)
        return _spaces[name]
