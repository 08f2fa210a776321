"""maps.py: Point maps between finite spaces and their morphism properties."""

import itertools
import logging

from topocheck.set_classes import NotATopology, Polarity, SetClass, calculator, induced_space

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


MAX_MAP_POINTS = 5


class MapError(ValueError):
    pass


class DomainTooLarge(MapError):
    pass


class PointMap(object):
    """f: source -> target, assignment[i] is the image of point i."""

    def __init__(self, source, target, assignment):
        assignment = tuple(assignment)
        if len(assignment) != source.n:
            raise MapError("Assignment has {} entries for {} points".format(len(assignment), source.n))
        for j in assignment:
            if not 0 <= j < target.n:
                raise MapError("Image point {} outside 0..{}".format(j, target.n - 1))
        self._source = source
        self._target = target
        self._assignment = assignment

    @property
    def source(self):
        return self._source

    @property
    def target(self):
        return self._target

    @property
    def assignment(self):
        return self._assignment

    def image(self, mask):
        result = 0
        for i, j in enumerate(self._assignment):
            if mask >> i & 1:
                result |= 1 << j
        return result

    def preimage(self, mask):
        result = 0
        for i, j in enumerate(self._assignment):
            if mask >> j & 1:
                result |= 1 << i
        return result

    def __eq__(self, other):
        if not isinstance(other, PointMap):
            return NotImplemented
        return (self._source, self._target, self._assignment) == \
               (other._source, other._target, other._assignment)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._assignment)

    def __repr__(self):
        return "PointMap({})".format(list(self._assignment))


def image(f, mask):
    return f.image(mask)


def preimage(f, mask):
    return f.preimage(mask)


def is_bijective(f):
    return f.source.n == f.target.n and len(set(f.assignment)) == f.source.n


def is_continuous(f):
    return all(f.source.is_open(f.preimage(v)) for v in f.target.opens)


def is_open_map(f):
    return all(f.target.is_open(f.image(u)) for u in f.source.opens)


def is_closed_map(f):
    return all(f.target.is_closed(f.image(c)) for c in f.source.closed_sets)


def inverse(f):
    if not is_bijective(f):
        raise MapError("{!r} is not a bijection".format(f))
    assignment = [0] * f.source.n
    for i, j in enumerate(f.assignment):
        assignment[j] = i
    return PointMap(f.target, f.source, assignment)


def is_homeomorphism(f):
    return is_bijective(f) and is_continuous(f) and is_continuous(inverse(f))


def _hstar(space, polarity, strict_hstarg):
    return calculator(space, strict_hstarg).family(SetClass.HSTAR, polarity)


def is_pre_hstar_closed(f, strict_hstarg=False):
    """Images of H*-closed sets are H*-closed."""
    target = _hstar(f.target, Polarity.CLOSED, strict_hstarg)
    return all(f.image(c) in target for c in _hstar(f.source, Polarity.CLOSED, strict_hstarg))


def is_pre_hstar_open(f, strict_hstarg=False):
    target = _hstar(f.target, Polarity.OPEN, strict_hstarg)
    return all(f.image(u) in target for u in _hstar(f.source, Polarity.OPEN, strict_hstarg))


def is_hstar_irresolute(f, strict_hstarg=False):
    """Preimages of H*-closed sets are H*-closed."""
    source = _hstar(f.source, Polarity.CLOSED, strict_hstarg)
    return all(f.preimage(c) in source for c in _hstar(f.target, Polarity.CLOSED, strict_hstarg))


def induced_map(f, set_class=SetClass.HSTAR, strict_hstarg=False):
    """
    The same assignment between the induced class spaces, or None when either
    class-open family is not a topology.
    """
    source = induced_space(f.source, set_class, strict_hstarg)
    target = induced_space(f.target, set_class, strict_hstarg)
    if isinstance(source, NotATopology) or isinstance(target, NotATopology):
        return None
    return PointMap(source, target, f.assignment)


def enumerate_maps(source, target, bijective_only=False):
    """All maps (or bijections) source -> target in lexicographic order of assignments."""
    if source.n > MAX_MAP_POINTS or target.n > MAX_MAP_POINTS:
        raise DomainTooLarge("Maps are enumerated for at most {} points, got {} -> {}".format(
            MAX_MAP_POINTS, source.n, target.n))
    if bijective_only:
        if source.n != target.n:
            return
        assignments = itertools.permutations(range(target.n))
    else:
        assignments = itertools.product(range(target.n), repeat=source.n)
    for assignment in assignments:
        yield PointMap(source, target, assignment)
