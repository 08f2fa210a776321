"""space.py: Finite topological spaces, interior, closure and subspaces."""

import logging
import operator
import threading

from topocheck.utils import MAX_POINTS, full_mask, iter_bits, mask_names

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


class TopologyError(Exception):

    def __init__(self, message, witness=None):
        super(TopologyError, self).__init__(message)
        self.witness = witness


class MissingEmptyOrFull(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    pass


class NotClosedUnderIntersection(TopologyError):
    pass


class EmptySubspace(TopologyError):
    pass


class MaskWidthError(TopologyError, ValueError):
    pass


class SubsetMask(object):
    """A subset of the ground set {0..n-1}, point i present iff bit i is set."""
    __slots__ = ("_bits", "_n")

    def __init__(self, bits, n):
        if not 1 <= n <= MAX_POINTS:
            raise MaskWidthError("Mask width {} outside 1..{}".format(n, MAX_POINTS))
        if bits < 0 or bits >> n:
            raise MaskWidthError("Mask {:#x} does not fit in {} bits".format(bits, n))
        self._bits = bits
        self._n = n

    @classmethod
    def from_points(cls, points, n):
        bits = 0
        for p in points:
            if not 0 <= p < n:
                raise MaskWidthError("Point {} outside 0..{}".format(p, n - 1))
            bits |= 1 << p
        return cls(bits, n)

    @property
    def bits(self):
        return self._bits

    @property
    def n(self):
        return self._n

    def points(self):
        return list(iter_bits(self._bits))

    def complement(self):
        return SubsetMask(self._bits ^ full_mask(self._n), self._n)

    def issubset(self, other):
        return self._bits & ~operator.index(other) == 0

    def _check(self, other):
        if isinstance(other, SubsetMask) and other._n != self._n:
            raise MaskWidthError("Mask widths differ: {} != {}".format(self._n, other._n))
        return operator.index(other)

    def __or__(self, other):
        return SubsetMask(self._bits | self._check(other), self._n)

    def __and__(self, other):
        return SubsetMask(self._bits & self._check(other), self._n)

    def __sub__(self, other):
        return SubsetMask(self._bits & ~self._check(other), self._n)

    def __invert__(self):
        return self.complement()

    def __index__(self):
        return self._bits

    __int__ = __index__

    def __len__(self):
        return bin(self._bits).count("1")

    def __contains__(self, point):
        return bool(self._bits >> point & 1)

    def __bool__(self):
        return self._bits != 0

    __nonzero__ = __bool__

    def __eq__(self, other):
        if isinstance(other, SubsetMask):
            return self._bits == other._bits and self._n == other._n
        if isinstance(other, int):
            return self._bits == other
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._bits)

    def __repr__(self):
        return "SubsetMask({:#x}, {})".format(self._bits, self._n)

    def __str__(self):
        return mask_names(self._bits)


class FiniteSpace(object):
    """
    A topology on {0..n-1}. Opens are int bit masks, kept sorted and unique.
    Use build_space to construct one from untrusted input.
    """

    def __init__(self, n, opens):
        self._n = n
        self._full = full_mask(n)
        self._opens = tuple(opens)
        self._open_set = frozenset(self._opens)
        self._interiors = None
        self._lock = threading.RLock()
        self._memo = {}

    @property
    def n(self):
        return self._n

    @property
    def full(self):
        return self._full

    @property
    def opens(self):
        return self._opens

    @property
    def closed_sets(self):
        return tuple(sorted(self._full ^ u for u in self._opens))

    def is_open(self, mask):
        return operator.index(mask) in self._open_set

    def is_closed(self, mask):
        return (self._full ^ operator.index(mask)) in self._open_set

    def interior(self, mask):
        if self._interiors is None:
            table = []
            for a in range(self._full + 1):
                inner = 0
                for u in self._opens:
                    if u & ~a == 0:
                        inner |= u
                table.append(inner)
            self._interiors = table
        return self._interiors[operator.index(mask)]

    def closure(self, mask):
        return self._full ^ self.interior(self._full ^ operator.index(mask))

    def memo(self, key, factory):
        """
        Return the memoized value for key, building it once with factory. The
        lock is reentrant so factories may memoize further values of the space.
        """
        value = self._memo.get(key)
        if value is None:
            with self._lock:
                value = self._memo.get(key)
                if value is None:
                    value = factory()
                    self._memo[key] = value
        return value

    def __eq__(self, other):
        if not isinstance(other, FiniteSpace):
            return NotImplemented
        return self._n == other._n and self._opens == other._opens

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._n, self._opens))

    def __repr__(self):
        return "FiniteSpace({}, {})".format(self._n, [hex(u) for u in self._opens])

    def __str__(self):
        return "{" + ", ".join(mask_names(u) for u in self._opens) + "}"


def _as_bits(mask, n):
    if isinstance(mask, SubsetMask):
        if mask.n != n:
            raise MaskWidthError("Mask width {} != space size {}".format(mask.n, n))
        return mask.bits
    bits = operator.index(mask)
    if bits < 0 or bits >> n:
        raise MaskWidthError("Mask {:#x} does not fit in {} bits".format(bits, n))
    return bits


def build_space(n, opens):
    """
    Validate a family of open sets and return the normalized FiniteSpace.

    :param n: Ground set size, 1..16.
    :param opens: Iterable of SubsetMask or int masks.
    :return: FiniteSpace
    """
    if not 1 <= n <= MAX_POINTS:
        raise MaskWidthError("Ground set size {} outside 1..{}".format(n, MAX_POINTS))
    family = sorted(set(_as_bits(u, n) for u in opens))
    members = frozenset(family)
    full = full_mask(n)
    if 0 not in members or full not in members:
        raise MissingEmptyOrFull("Topology must contain the empty set and the full set")

    for i, u in enumerate(family):
        for v in family[i + 1:]:
            if u | v not in members:
                raise NotClosedUnderUnion("{} | {} is not open".format(mask_names(u), mask_names(v)),
                                          witness=(SubsetMask(u, n), SubsetMask(v, n)))
            if u & v not in members:
                raise NotClosedUnderIntersection("{} & {} is not open".format(mask_names(u), mask_names(v)),
                                                 witness=(SubsetMask(u, n), SubsetMask(v, n)))
    return FiniteSpace(n, family)


def interior(space, mask):
    return space.interior(_as_bits(mask, space.n))


def closure(space, mask):
    return space.closure(_as_bits(mask, space.n))


def subspace(space, mask):
    """
    Relative topology on the points of mask. The points are re-indexed in
    increasing order, so point k of the result is the k-th point of mask.
    """
    y = _as_bits(mask, space.n)
    if y == 0:
        raise EmptySubspace("Subspace of the empty set")
    points = list(iter_bits(y))
    traces = set()
    for u in space.opens:
        trace = 0
        for k, p in enumerate(points):
            if u >> p & 1:
                trace |= 1 << k
        traces.add(trace)
    log.debug("subspace %s has %d opens", mask_names(y), len(traces))
    return FiniteSpace(len(points), sorted(traces))


def discrete_space(n):
    return FiniteSpace(n, range(full_mask(n) + 1))


def indiscrete_space(n):
    return FiniteSpace(n, (0, full_mask(n)))
