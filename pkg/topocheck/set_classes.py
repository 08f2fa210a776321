"""set_classes.py: Generalized open and closed set classes of a finite space."""

import logging
import operator
import threading
from enum import Enum

from topocheck.space import TopologyError, build_space
from topocheck.utils import mask_names, submasks

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


class PolarityMismatch(ValueError):
    pass


class Polarity(Enum):
    OPEN = "open"
    CLOSED = "closed"
    RAW = "raw"


class SetClass(Enum):
    OPEN = "open"
    SEMI = "semi"
    PRE = "pre"
    ALPHA = "alpha"
    CSTAR = "c*"
    ALPHA_STAR = "alpha*"
    C_SET = "c-set"
    W = "w"
    H = "h"
    HCG = "hcg"
    HSTAR = "h*"
    G = "g"
    GHSTAR = "gh*"
    HSTARG = "h*g"
    SCSTAR = "sc*"
    ALPHACG = "alphacg"
    GALPHA = "galpha"
    ALPHAG = "alphag"

    @property
    def symmetric(self):
        return self not in RAW_CLASSES

    @staticmethod
    def lookup(name):
        key = name.strip().lower()
        if key in CLASS_ALIASES:
            return CLASS_ALIASES[key]
        for c in SetClass:
            if key == c.value or key == c.name.lower():
                return c
        raise KeyError("Unknown set class '{}'".format(name))


RAW_CLASSES = frozenset([SetClass.ALPHA_STAR, SetClass.C_SET])

CLASS_ALIASES = {"feebly": SetClass.ALPHA, "semi-open": SetClass.SEMI, "pre-open": SetClass.PRE}

# Closure operator of the closed sets, then the family of test sets U: a set A
# is closed in the class when op-cl(A) is inside every test set containing A.
GENERALIZED = {
    SetClass.W: (SetClass.OPEN, SetClass.SEMI, Polarity.OPEN),
    SetClass.H: (SetClass.SEMI, SetClass.W, Polarity.OPEN),
    SetClass.HCG: (SetClass.H, SetClass.C_SET, Polarity.RAW),
    SetClass.HSTAR: (SetClass.H, SetClass.HCG, Polarity.OPEN),
    SetClass.G: (SetClass.OPEN, SetClass.OPEN, Polarity.OPEN),
    SetClass.GHSTAR: (SetClass.HSTAR, SetClass.HSTAR, Polarity.OPEN),
    SetClass.HSTARG: (SetClass.HSTAR, SetClass.OPEN, Polarity.OPEN),
    SetClass.SCSTAR: (SetClass.SEMI, SetClass.CSTAR, Polarity.OPEN),
    SetClass.ALPHACG: (SetClass.ALPHA, SetClass.C_SET, Polarity.RAW),
    SetClass.GALPHA: (SetClass.ALPHA, SetClass.ALPHA, Polarity.OPEN),
    SetClass.ALPHAG: (SetClass.ALPHA, SetClass.OPEN, Polarity.OPEN),
}

DEFINITIONS = {
    SetClass.OPEN: "A is a member of the topology",
    SetClass.SEMI: "open: A <= cl(int(A))",
    SetClass.PRE: "open: A <= int(cl(A))",
    SetClass.ALPHA: "open: A <= int(cl(int(A)))",
    SetClass.CSTAR: "open: int(cl(A)) <= A <= cl(int(A))",
    SetClass.ALPHA_STAR: "int(cl(int(A))) = int(A)",
    SetClass.C_SET: "A = U & V, U open, V an alpha*-set",
    SetClass.W: "closed: cl(A) <= U for every semi-open U >= A",
    SetClass.H: "closed: scl(A) <= U for every w-open U >= A",
    SetClass.HCG: "closed: h-cl(A) <= U for every C-set U >= A",
    SetClass.HSTAR: "closed: h-cl(A) <= U for every hCg-open U >= A",
    SetClass.G: "closed: cl(A) <= U for every open U >= A",
    SetClass.GHSTAR: "closed: H*-cl(A) <= U for every H*-open U >= A",
    SetClass.HSTARG: "closed: H*-cl(A) <= U for every open U >= A",
    SetClass.SCSTAR: "closed: scl(A) <= U for every c*-open U >= A",
    SetClass.ALPHACG: "closed: alpha-cl(A) <= U for every C-set U >= A",
    SetClass.GALPHA: "closed: alpha-cl(A) <= U for every alpha-open U >= A",
    SetClass.ALPHAG: "closed: alpha-cl(A) <= U for every open U >= A",
}


def check_polarity(set_class, polarity):
    if set_class in RAW_CLASSES:
        if polarity != Polarity.RAW:
            raise PolarityMismatch("{} is a raw set predicate, got polarity {}".format(
                set_class.name, polarity.value))
    elif polarity == Polarity.RAW:
        raise PolarityMismatch("{} needs an open or closed polarity".format(set_class.name))


class ClassFamily(object):
    """Members of one class on one space, as a sorted list of int masks."""

    def __init__(self, space, set_class, polarity, members):
        self.space = space
        self.set_class = set_class
        self.polarity = polarity
        self.members = sorted(members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask):
        return operator.index(mask) in self.members

    def __eq__(self, other):
        if not isinstance(other, ClassFamily):
            return NotImplemented
        return self.members == other.members and self.space == other.space

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __str__(self):
        return "{}-{}: {}".format(self.set_class.value, self.polarity.value,
                                  ", ".join(mask_names(m) for m in self.members))


class NotATopology(object):
    """Report that a class-open family violates the topology laws."""

    def __init__(self, set_class, reason, witness, family):
        self.set_class = set_class
        self.reason = reason
        self.witness = witness
        self.family = family

    def __str__(self):
        return "{}-open sets do not form a topology: {}".format(self.set_class.value, self.reason)


class ClassCalculator(object):
    """
    Lazily computes and memoizes every class family of one space. Families
    are computed in dependency order, each from its prerequisites.
    """

    def __init__(self, space, strict_hstarg=False):
        self._space = space
        self._strict_hstarg = strict_hstarg
        self._lock = threading.RLock()
        self._closed = {}
        self._raw = {}
        self._opened = {}
        self._closures = {}

    @property
    def space(self):
        return self._space

    @property
    def strict_hstarg(self):
        return self._strict_hstarg

    def _masks(self):
        return range(self._space.full + 1)

    def _open_by_formula(self, test):
        full = self._space.full
        return frozenset(full ^ a for a in self._masks() if test(a))

    def _build_closed(self, set_class):
        s = self._space
        full = s.full
        if set_class == SetClass.OPEN:
            return frozenset(full ^ u for u in s.opens)
        if set_class == SetClass.SEMI:
            return self._open_by_formula(lambda a: a & ~s.closure(s.interior(a)) == 0)
        if set_class == SetClass.PRE:
            return self._open_by_formula(lambda a: a & ~s.interior(s.closure(a)) == 0)
        if set_class == SetClass.ALPHA:
            return self._open_by_formula(lambda a: a & ~s.interior(s.closure(s.interior(a))) == 0)
        if set_class == SetClass.CSTAR:
            return self._open_by_formula(
                lambda a: s.interior(s.closure(a)) & ~a == 0 and a & ~s.closure(s.interior(a)) == 0)

        operator_class, test_class, test_polarity = GENERALIZED[set_class]
        closures = self.closure_table(operator_class)
        tests = self.family(test_class, test_polarity)
        strict = self._strict_hstarg and set_class == SetClass.HSTARG
        closed = []
        for a in self._masks():
            ca = closures[a]
            for u in tests:
                if a & ~u == 0 and ca & ~u != 0 and not (strict and u == a):
                    break
            else:
                closed.append(a)
        log.debug("%s-closed: %d sets", set_class.value, len(closed))
        return frozenset(closed)

    def _build_raw(self, set_class):
        s = self._space
        if set_class == SetClass.ALPHA_STAR:
            return frozenset(a for a in self._masks() if s.interior(s.closure(s.interior(a))) == s.interior(a))

        alpha_star = self.family(SetClass.ALPHA_STAR, Polarity.RAW)
        members = []
        for a in self._masks():
            for u in s.opens:
                if a & ~u:
                    continue
                if any((a | w) in alpha_star for w in submasks(s.full & ~u)):
                    members.append(a)
                    break
        return frozenset(members)

    def family(self, set_class, polarity):
        """Frozenset of the members of the class under the given polarity."""
        check_polarity(set_class, polarity)
        with self._lock:
            if polarity == Polarity.RAW:
                if set_class not in self._raw:
                    self._raw[set_class] = self._build_raw(set_class)
                return self._raw[set_class]

            if set_class not in self._closed:
                self._closed[set_class] = self._build_closed(set_class)
            if polarity == Polarity.CLOSED:
                return self._closed[set_class]
            if set_class not in self._opened:
                full = self._space.full
                self._opened[set_class] = frozenset(full ^ c for c in self._closed[set_class])
            return self._opened[set_class]

    def closure_table(self, set_class):
        """Class closure of every mask: the meet of the class-closed supersets."""
        check_polarity(set_class, Polarity.CLOSED)
        with self._lock:
            if set_class not in self._closures:
                closed = sorted(self.family(set_class, Polarity.CLOSED))
                full = self._space.full
                table = []
                for a in self._masks():
                    meet = full
                    for c in closed:
                        if a & ~c == 0:
                            meet &= c
                    table.append(meet)
                self._closures[set_class] = table
            return self._closures[set_class]

    def closure(self, set_class, mask):
        return self.closure_table(set_class)[mask]

    def interior(self, set_class, mask):
        inner = 0
        for u in self.family(set_class, Polarity.OPEN):
            if u & ~mask == 0:
                inner |= u
        return inner

    def kernel(self, set_class, point):
        meet = self._space.full
        bit = 1 << point
        for u in self.family(set_class, Polarity.OPEN):
            if u & bit:
                meet &= u
        return meet


def calculator(space, strict_hstarg=False):
    """The memoized ClassCalculator of space."""
    return space.memo(("classes", bool(strict_hstarg)),
                      lambda: ClassCalculator(space, strict_hstarg=bool(strict_hstarg)))


def _bits(space, mask):
    bits = operator.index(mask)
    if bits < 0 or bits > space.full:
        raise ValueError("Mask {:#x} does not fit a {}-point space".format(bits, space.n))
    return bits


def is_in_class(space, mask, set_class, polarity, strict_hstarg=False):
    return _bits(space, mask) in calculator(space, strict_hstarg).family(set_class, polarity)


def class_family(space, set_class, polarity, strict_hstarg=False):
    members = calculator(space, strict_hstarg).family(set_class, polarity)
    return ClassFamily(space, set_class, polarity, members)


def class_closure(space, mask, set_class, strict_hstarg=False):
    return calculator(space, strict_hstarg).closure(set_class, _bits(space, mask))


def class_interior(space, mask, set_class, strict_hstarg=False):
    check_polarity(set_class, Polarity.OPEN)
    return calculator(space, strict_hstarg).interior(set_class, _bits(space, mask))


def class_kernel(space, point, set_class, strict_hstarg=False):
    check_polarity(set_class, Polarity.OPEN)
    if not 0 <= point < space.n:
        raise ValueError("Point {} outside 0..{}".format(point, space.n - 1))
    return calculator(space, strict_hstarg).kernel(set_class, point)


def induced_space(space, set_class, strict_hstarg=False):
    """
    The space whose opens are the class-open sets, or a NotATopology report
    when that family is not closed under union and intersection.
    """
    if set_class == SetClass.OPEN:
        return space
    family = calculator(space, strict_hstarg).family(set_class, Polarity.OPEN)

    def build():
        try:
            return build_space(space.n, family)
        except TopologyError as e:
            log.debug("%s on %s: %s", set_class.value, space, e)
            return NotATopology(set_class, str(e), e.witness, sorted(family))

    return space.memo(("induced", set_class, bool(strict_hstarg)), build)
