"""claims.py: Machine-checkable claims about finite spaces and their verdicts."""

import logging
import time
from collections import OrderedDict
from enum import Enum

from topocheck import axioms
from topocheck.document import SpaceDocument
from topocheck.enumeration import MAX_ENUMERATION_POINTS, catalog, check_enumeration_size, spaces_up_to
from topocheck.fixtures import load_fixture
from topocheck.maps import (enumerate_maps, induced_map, inverse, is_closed_map, is_continuous, is_homeomorphism,
                            is_hstar_irresolute, is_open_map, is_pre_hstar_closed, is_pre_hstar_open)
from topocheck.set_classes import Polarity, SetClass, calculator
from topocheck.space import subspace
from topocheck.utils import mask_names

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


class UnknownClaim(KeyError):
    pass


class ClaimKind(Enum):
    IMPLICATION = "implication"
    EQUIVALENCE = "equivalence"
    FIXTURE = "fixture-assertion"
    INDEPENDENCE = "independence"
    MAP = "map-preservation"


class Status(Enum):
    CONFIRMED = "confirmed"
    REFUTED = "refuted"
    INAPPLICABLE = "inapplicable"
    ERROR = "error"


DEFAULT_N_MIN = 2


class Configuration(object):
    """
    Settings of a registry run.

    :param n_max: Largest ground set enumerated for implications and equivalences.
    :param n_min: Smallest ground set enumerated. Defaults to 2, or to n_max when that is smaller; 1 adds
        the one-point space, where every template axiom holds vacuously and the weakly ones fail.
    :param map_n_max: Largest ground set for map claims.
    :param strict_hstarg: Read H*g-closedness with a strict superset A < U.
    :param kinds: Optional collection of ClaimKind to run.
    :param ids: Optional collection of claim ids to run.
    :param workers: Number of worker threads.
    :param expect_stated: Treat divergence from the stated expectation as failure.
    """

    def __init__(self, n_max=4, map_n_max=3, strict_hstarg=False, kinds=None, ids=None, workers=1,
                 expect_stated=False, n_min=None):
        check_enumeration_size(n_max)
        self._n_min_setting = n_min
        if n_min is None:
            n_min = min(DEFAULT_N_MIN, n_max)
        if not 1 <= n_min <= n_max:
            raise ValueError("n_min {} outside 1..{}".format(n_min, n_max))
        self._n_min = n_min
        if not 1 <= map_n_max <= 4:
            raise ValueError("map_n_max {} outside 1..4".format(map_n_max))
        self._n_max = n_max
        self._map_n_max = map_n_max
        self._strict_hstarg = bool(strict_hstarg)
        self._kinds = frozenset(kinds) if kinds is not None else None
        self._ids = tuple(ids) if ids is not None else None
        self._workers = max(1, workers)
        self._expect_stated = expect_stated

    @property
    def n_max(self):
        return self._n_max

    @property
    def n_min(self):
        return self._n_min

    @property
    def map_n_max(self):
        return self._map_n_max

    @property
    def strict_hstarg(self):
        return self._strict_hstarg

    @property
    def kinds(self):
        return self._kinds

    @property
    def ids(self):
        return self._ids

    @property
    def workers(self):
        return self._workers

    @property
    def expect_stated(self):
        return self._expect_stated

    def replace(self, **changes):
        settings = dict(n_max=self._n_max, map_n_max=self._map_n_max, strict_hstarg=self._strict_hstarg,
                        kinds=self._kinds, ids=self._ids, workers=self._workers,
                        expect_stated=self._expect_stated, n_min=self._n_min_setting)
        settings.update(changes)
        return Configuration(**settings)


DEFAULT_CONFIGURATION = Configuration()


def _names_mask(names):
    mask = 0
    for p in names:
        mask |= 1 << (ord(p) - ord("a"))
    return mask


# Space statements: callables (space, configuration) -> bool

class Statement(object):

    def __call__(self, space, config):
        raise NotImplementedError

    def describe(self):
        raise NotImplementedError

    def __str__(self):
        return self.describe()


class Axiom(Statement):

    def __init__(self, name):
        if isinstance(name, axioms.AxiomId):
            self.axiom = name
        else:
            self.axiom = axioms.resolve_axiom(name)

    def __call__(self, space, config):
        return axioms.evaluate(space, self.axiom, config.strict_hstarg)

    def describe(self):
        return self.axiom.name


class Not(Statement):

    def __init__(self, statement):
        self.statement = statement

    def __call__(self, space, config):
        return not self.statement(space, config)

    def describe(self):
        return "not {}".format(self.statement.describe())


class And(Statement):

    def __init__(self, *statements):
        self.statements = statements

    def __call__(self, space, config):
        return all(s(space, config) for s in self.statements)

    def describe(self):
        return " and ".join(s.describe() for s in self.statements)


def _family(space, config, set_class, polarity):
    return calculator(space, config.strict_hstarg).family(set_class, polarity)


def _family_name(set_class, polarity):
    return "{}-{}".format(set_class.value, polarity.value)


class FamilySubset(Statement):

    def __init__(self, small, small_polarity, large, large_polarity):
        self.small = (small, small_polarity)
        self.large = (large, large_polarity)

    def __call__(self, space, config):
        return _family(space, config, *self.small) <= _family(space, config, *self.large)

    def describe(self):
        return "every {} set is {}".format(_family_name(*self.small), _family_name(*self.large))


class FamilyEqual(Statement):

    def __init__(self, left, left_polarity, right, right_polarity):
        self.left = (left, left_polarity)
        self.right = (right, right_polarity)

    def __call__(self, space, config):
        return _family(space, config, *self.left) == _family(space, config, *self.right)

    def describe(self):
        return "{} family equals {} family".format(_family_name(*self.left), _family_name(*self.right))


class FamilyMeet(Statement):
    """The open family of target is the intersection of the open families of parts."""

    def __init__(self, target, *parts):
        self.target = target
        self.parts = parts

    def __call__(self, space, config):
        meet = None
        for part in self.parts:
            family = _family(space, config, part, Polarity.OPEN)
            meet = family if meet is None else meet & family
        return _family(space, config, self.target, Polarity.OPEN) == meet

    def describe(self):
        return "{}-open = {}".format(self.target.value, " & ".join(p.value + "-open" for p in self.parts))


class AllSetsIn(Statement):

    def __init__(self, set_class, polarity):
        self.set_class = set_class
        self.polarity = polarity

    def __call__(self, space, config):
        return len(_family(space, config, self.set_class, self.polarity)) == space.full + 1

    def describe(self):
        return "every set is {}".format(_family_name(self.set_class, self.polarity))


class SetIn(Statement):
    """A named set of a fixture, points given by their one letter names."""

    def __init__(self, names, set_class, polarity):
        self.names = names
        self.set_class = set_class
        self.polarity = polarity

    def __call__(self, space, config):
        return _names_mask(self.names) in _family(space, config, self.set_class, self.polarity)

    def describe(self):
        return "{{{}}} is {}".format(",".join(self.names), _family_name(self.set_class, self.polarity))


class Subspace(Statement):

    def __init__(self, names, statement):
        self.names = names
        self.statement = statement

    def __call__(self, space, config):
        return self.statement(subspace(space, _names_mask(self.names)), config)

    def describe(self):
        return "subspace {{{}}}: {}".format(",".join(self.names), self.statement.describe())


_FORMULAS = {
    SetClass.SEMI: ("A | int(cl(A))", lambda s, a: a | s.interior(s.closure(a))),
    SetClass.PRE: ("A | cl(int(A))", lambda s, a: a | s.closure(s.interior(a))),
    SetClass.ALPHA: ("A | cl(int(cl(A)))", lambda s, a: a | s.closure(s.interior(s.closure(a)))),
}


class ClosureFormula(Statement):

    def __init__(self, set_class):
        self.set_class = set_class

    def __call__(self, space, config):
        table = calculator(space, config.strict_hstarg).closure_table(self.set_class)
        formula = _FORMULAS[self.set_class][1]
        return all(table[a] == formula(space, a) for a in range(space.full + 1))

    def describe(self):
        return "{}-closure of A is {}".format(self.set_class.value, _FORMULAS[self.set_class][0])


class ClosureResidue(Statement):
    """For every member-closed A, class-cl(A) - A contains no nonempty closed set."""

    def __init__(self, member, closure_class):
        self.member = member
        self.closure_class = closure_class

    def __call__(self, space, config):
        calc = calculator(space, config.strict_hstarg)
        table = calc.closure_table(self.closure_class)
        closed = [c for c in space.closed_sets if c]
        for a in calc.family(self.member, Polarity.CLOSED):
            residue = table[a] & ~a
            if any(c & ~residue == 0 for c in closed):
                return False
        return True

    def describe(self):
        return "{}-cl(A) - A holds no nonempty closed set when A is {}-closed".format(
            self.closure_class.value, self.member.value)


class InteriorCharacterization(Statement):
    """A is member-open iff every closed F inside A is inside the class interior of A."""

    def __init__(self, member, interior_class):
        self.member = member
        self.interior_class = interior_class

    def __call__(self, space, config):
        calc = calculator(space, config.strict_hstarg)
        opens = calc.family(self.member, Polarity.OPEN)
        closed = space.closed_sets
        for a in range(space.full + 1):
            inner = calc.interior(self.interior_class, a)
            characterized = all(f & ~inner == 0 for f in closed if f & ~a == 0)
            if (a in opens) != characterized:
                return False
        return True

    def describe(self):
        return "A is {}-open iff closed F <= A gives F <= {}-int(A)".format(
            self.member.value, self.interior_class.value)


# Point statements: (space, configuration, point) -> bool, used through EachPoint

class SingletonIn(object):

    def __init__(self, set_class, polarity):
        self.set_class = set_class
        self.polarity = polarity

    def holds(self, space, config, x):
        return 1 << x in _family(space, config, self.set_class, self.polarity)

    def describe(self):
        return "{{x}} is {}".format(_family_name(self.set_class, self.polarity))


class ComplementIn(SingletonIn):

    def holds(self, space, config, x):
        return space.full ^ (1 << x) in _family(space, config, self.set_class, self.polarity)

    def describe(self):
        return "X - {{x}} is {}".format(_family_name(self.set_class, self.polarity))


class KernelProper(object):

    def __init__(self, set_class):
        self.set_class = set_class

    def holds(self, space, config, x):
        return calculator(space, config.strict_hstarg).kernel(self.set_class, x) != space.full

    def describe(self):
        return "{}-ker(x) != X".format(self.set_class.value)


class InProperClosed(object):

    def __init__(self, set_class):
        self.set_class = set_class

    def holds(self, space, config, x):
        return any(c != space.full and c >> x & 1
                   for c in _family(space, config, self.set_class, Polarity.CLOSED))

    def describe(self):
        return "x lies in a proper {}-closed set".format(self.set_class.value)


class PointOr(object):

    def __init__(self, *options):
        self.options = options

    def holds(self, space, config, x):
        return any(o.holds(space, config, x) for o in self.options)

    def describe(self):
        return " or ".join(o.describe() for o in self.options)


class EachPoint(Statement):

    def __init__(self, point_statement):
        self.point_statement = point_statement

    def __call__(self, space, config):
        return all(self.point_statement.holds(space, config, x) for x in range(space.n))

    def describe(self):
        return "for each x: {}".format(self.point_statement.describe())


# Map statements: (map, configuration) -> True, False or None when inapplicable

class Preserves(object):

    def __init__(self, name):
        self.statement = Axiom(name)

    def __call__(self, f, config):
        return not self.statement(f.source, config) or self.statement(f.target, config)

    def describe(self):
        return "{} transfers from source to target".format(self.statement.describe())


_INDUCED = {
    "closed": (is_pre_hstar_closed, is_closed_map, "pre h*-closed iff the induced map is closed"),
    "open": (is_pre_hstar_open, is_open_map, "pre h*-open iff the induced map is open"),
    "continuous": (is_hstar_irresolute, is_continuous, "h*-irresolute iff the induced map is continuous"),
}


class InducedEquivalence(object):

    def __init__(self, which):
        self.which = which

    def __call__(self, f, config):
        induced = induced_map(f, SetClass.HSTAR, config.strict_hstarg)
        if induced is None:
            return None
        hstar_property, plain_property, _ = _INDUCED[self.which]
        return hstar_property(f, config.strict_hstarg) == plain_property(induced)

    def describe(self):
        return _INDUCED[self.which][2]


class HstarHomeomorphism(object):

    def __call__(self, f, config):
        strict = config.strict_hstarg
        return is_pre_hstar_closed(f, strict) and is_hstar_irresolute(f, strict) and \
            is_hstar_irresolute(inverse(f), strict)

    def describe(self):
        return "pre h*-closed, h*-irresolute with an h*-irresolute inverse"


class AxiomTableInvariant(object):

    def __call__(self, f, config):
        source = axioms.axiom_table(f.source, strict_hstarg=config.strict_hstarg)
        target = axioms.axiom_table(f.target, strict_hstarg=config.strict_hstarg)
        return list(source.values()) == list(target.values())

    def describe(self):
        return "every named axiom agrees on source and target"


class Assertion(object):
    """Expected truth value of a statement on a fixture space."""

    def __init__(self, fixture, statement, expected=True):
        self.fixture = fixture
        self.statement = statement
        self.expected = expected

    def describe(self):
        if self.expected:
            return "{}: {}".format(self.fixture, self.statement.describe())
        return "{}: not ({})".format(self.fixture, self.statement.describe())


class Claim(object):

    def __init__(self, cid, location, kind, premises=(), conclusion=None, left=None, right=None,
                 assertions=(), fixtures=(), map_statement=None, homeomorphisms_only=False, stated=True):
        self.cid = cid
        self.location = location
        self.kind = kind
        self.premises = tuple(premises)
        self.conclusion = conclusion
        self.left = left
        self.right = right
        self.assertions = tuple(assertions)
        self.fixtures = tuple(fixtures)
        self.map_statement = map_statement
        self.homeomorphisms_only = homeomorphisms_only
        self.stated = stated

    @property
    def expected(self):
        return Status.CONFIRMED

    def describe(self):
        if self.kind == ClaimKind.IMPLICATION:
            if not self.premises:
                return "always: {}".format(self.conclusion.describe())
            return "{} => {}".format(" and ".join(p.describe() for p in self.premises),
                                     self.conclusion.describe())
        if self.kind == ClaimKind.EQUIVALENCE:
            return "{} <=> {}".format(self.left.describe(), self.right.describe())
        if self.kind == ClaimKind.FIXTURE:
            return "; ".join(a.describe() for a in self.assertions)
        if self.kind == ClaimKind.INDEPENDENCE:
            return "{} and {} are independent".format(self.left.describe(), self.right.describe())
        scope = "homeomorphisms" if self.homeomorphisms_only else "maps"
        return "for all {}: {}".format(scope, self.map_statement.describe())


class Witness(object):
    """The space (or map) a refutation was found on."""

    def __init__(self, space=None, fixture=None, point_map=None, index=None):
        self.space = space if point_map is None else point_map.source
        self.fixture = fixture
        self.point_map = point_map
        self.index = index

    def to_dict(self):
        d = {}
        if self.fixture is not None:
            d["fixture"] = self.fixture
        if self.point_map is None:
            d["space"] = SpaceDocument.from_space(self.space).to_dict()
        else:
            d["source"] = SpaceDocument.from_space(self.point_map.source).to_dict()
            d["target"] = SpaceDocument.from_space(self.point_map.target).to_dict()
            d["map"] = list(self.point_map.assignment)
        if self.index is not None:
            d["index"] = self.index
        return d

    def __str__(self):
        if self.point_map is not None:
            return "{} -> {} by {}".format(SpaceDocument.from_space(self.point_map.source),
                                           SpaceDocument.from_space(self.point_map.target),
                                           list(self.point_map.assignment))
        text = str(SpaceDocument.from_space(self.space))
        if self.fixture is not None:
            return "{} ({})".format(self.fixture, text)
        return text


class ClaimVerdict(object):

    def __init__(self, claim, status, witness=None, bound=None, elapsed=0.0, detail="", applicable=None):
        self.cid = claim.cid
        self.location = claim.location
        self.kind = claim.kind
        self.expected = claim.expected
        self.stated = claim.stated
        self.status = status
        self.witness = witness
        self.bound = bound
        self.elapsed = elapsed
        self.detail = detail
        self.applicable = applicable
        self.witness_validated = None
        self.families = None

    @property
    def diverges(self):
        return self.status != self.expected

    def to_dict(self):
        return {
            "id": self.cid,
            "location": self.location,
            "kind": self.kind.value,
            "status": self.status.value,
            "expected": self.expected.value,
            "stated": self.stated,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "witness_validated": self.witness_validated,
            "bound": self.bound,
            "applicable": self.applicable,
            "time": round(self.elapsed, 4),
            "detail": self.detail,
            "families": self.families,
        }


def _axioms(*names):
    return [Axiom(name) for name in names]


def implication(cid, location, premises, conclusion, stated=True):
    return Claim(cid, location, ClaimKind.IMPLICATION, premises=premises, conclusion=conclusion, stated=stated)


def implies(cid, location, premise, conclusion):
    return implication(cid, location, _axioms(premise), Axiom(conclusion))


def always(cid, location, statement, stated=True):
    return implication(cid, location, (), statement, stated=stated)


def equivalence(cid, location, left, right):
    return Claim(cid, location, ClaimKind.EQUIVALENCE, left=left, right=right)


def fixture(cid, location, space_name, holds=(), fails=()):
    assertions = [Assertion(space_name, s, True) for s in holds] + \
                 [Assertion(space_name, s, False) for s in fails]
    return Claim(cid, location, ClaimKind.FIXTURE, assertions=assertions)


def independence(cid, location, left, right, left_only, right_only):
    return Claim(cid, location, ClaimKind.INDEPENDENCE, left=left, right=right,
                 fixtures=(left_only, right_only))


def map_claim(cid, location, statement, homeomorphisms_only=False, stated=True):
    return Claim(cid, location, ClaimKind.MAP, map_statement=statement,
                 homeomorphisms_only=homeomorphisms_only, stated=stated)


_O, _C = Polarity.OPEN, Polarity.CLOSED

REGISTRY = [
    implies("THM-2.5-1", "Theorem 2.5(1)", "c1", "c0"),
    implies("THM-2.5-1-semi", "Theorem 2.5(1), semi", "semi-c1", "semi-c0"),
    implies("THM-2.5-2", "Theorem 2.5(2)", "c0", "semi-c0"),
    implies("THM-2.5-2-c1", "Theorem 2.5(2), C1", "c1", "semi-c1"),
    implies("THM-2.5-3", "Theorem 2.5(3)", "r0", "weakly-r0"),
    implies("THM-2.5-4", "Theorem 2.5(4)", "weakly-r0", "weakly-semi-r0"),
    implies("THM-2.5-5", "Theorem 2.5(5)", "semi-c0", "semi-t0"),
    implies("THM-2.5-5-c1", "Theorem 2.5(5), C1", "semi-c1", "semi-t1"),

    fixture("RMK-2.4-A", "Remark 2.4, (X, sigma) read as (X, sigma1)", "sigma1",
            holds=_axioms("semi-c0"), fails=_axioms("c0")),
    fixture("RMK-2.4-A-Y", "Remark 2.4, (X, sigma) read as (Y, sigma)", "sigma",
            holds=_axioms("semi-c0"), fails=_axioms("c0")),
    fixture("RMK-2.4-B", "Remark 2.4, (X, tau2)", "tau2",
            holds=_axioms("semi-c1", "c0"), fails=_axioms("c1")),
    fixture("RMK-2.4-C", "Remark 2.4, (Y, sigma2)", "sigma2",
            holds=_axioms("semi-t0"), fails=_axioms("semi-c0")),
    fixture("RMK-2.4-D", "Remark 2.4, (Z, eta1)", "eta1",
            holds=_axioms("alpha-space"), fails=_axioms("alpha-c0")),

    implies("THM-3.2-1", "Theorem 3.2(1)", "sc*-c1", "sc*-c0"),
    implies("THM-3.2-2", "Theorem 3.2(2)", "sc*-c0", "semi-c0"),
    implies("THM-3.2-2-c1", "Theorem 3.2(2), C1", "sc*-c1", "semi-c1"),
    implies("THM-3.2-3", "Theorem 3.2(3), semi", "weakly-sc*-r0", "weakly-semi-r0"),
    implies("THM-3.2-3-pre", "Theorem 3.2(3), pre", "weakly-sc*-r0", "weakly-pre-r0"),
    implies("THM-3.2-4", "Theorem 3.2(4)", "w-c0", "weakly-sc*-c0"),
    implies("THM-3.2-5", "Theorem 3.2(5), semi", "weakly-sc*-c0", "weakly-semi-c0"),
    implies("THM-3.2-5-pre", "Theorem 3.2(5), pre", "weakly-sc*-c0", "weakly-pre-c0"),
    implies("THM-3.2-6", "Theorem 3.2(6)", "sc*-c0", "semi-t0"),
    implies("THM-3.2-6-c1", "Theorem 3.2(6), C1", "sc*-c1", "semi-t1"),
    implies("THM-3.2-7", "Theorem 3.2(7)", "weakly-r0", "weakly-sc*-r0"),
    independence("THM-3.2-8", "Theorem 3.2(8)", Axiom("weakly-sc*-r0"), Axiom("weakly-sc*-c0"),
                 left_only="tau1", right_only="tau2"),

    fixture("RMK-3.3-A", "Remark 3.3, (X, tau2) SC*-C0", "tau2",
            holds=_axioms("sc*-c0"), fails=_axioms("sc*-c1")),
    fixture("RMK-3.3-B", "Remark 3.3, (X, sigma1)", "sigma1",
            holds=_axioms("semi-c0", "semi-c1"), fails=_axioms("sc*-c0", "sc*-c1")),
    fixture("RMK-3.3-C", "Remark 3.3, (Y, sigma)", "sigma",
            holds=_axioms("weakly-semi-r0"), fails=_axioms("weakly-sc*-r0")),
    fixture("RMK-3.3-D", "Remark 3.3, (X, tau2) weakly SC*-C0", "tau2",
            holds=_axioms("weakly-sc*-c0"), fails=_axioms("weakly-sc*-r0")),
    fixture("RMK-3.3-E", "Remark 3.3, (X, tau1)", "tau1",
            holds=_axioms("weakly-sc*-r0"), fails=_axioms("weakly-sc*-c0")),

    equivalence("THM-3.4", "Theorem 3.4", Axiom("weakly-sc*-r0"), EachPoint(KernelProper(SetClass.SCSTAR))),
    equivalence("THM-3.5", "Theorem 3.5", Axiom("weakly-sc*-c0"), EachPoint(InProperClosed(SetClass.SCSTAR))),
    implies("THM-3.6", "Theorem 3.6", "sc*-c0", "weakly-sc*-c0"),
    implies("THM-3.6-c1", "Theorem 3.6, C1", "sc*-c1", "weakly-sc*-c0"),
    fixture("RMK-3.7-A", "Remark 3.7, (Z, eta1)", "eta1",
            holds=_axioms("weakly-sc*-c0"), fails=_axioms("sc*-c0")),
    fixture("RMK-3.7-B", "Remark 3.7, (Y, sigma)", "sigma",
            holds=_axioms("sc*-c0", "weakly-sc*-c0"), fails=_axioms("sc*-c1")),
    fixture("THM-3.8", "Theorem 3.8", "sigma",
            holds=[Axiom("sc*-c0")], fails=[Subspace("ac", Axiom("sc*-c0"))]),

    always("RMK-4.1", "Remark 4.1",
           And(FamilySubset(SetClass.ALPHA, _C, SetClass.HSTAR, _C),
               FamilySubset(SetClass.ALPHA, _O, SetClass.HSTAR, _O))),
    always("DIAG-4-EDGE-1", "Section 4 diagram, closed => alpha-closed",
           FamilySubset(SetClass.OPEN, _C, SetClass.ALPHA, _C)),
    always("DIAG-4-EDGE-2", "Section 4 diagram, alpha-closed => g-alpha-closed",
           FamilySubset(SetClass.ALPHA, _C, SetClass.GALPHA, _C)),
    always("DIAG-4-EDGE-3", "Section 4 diagram, g-alpha-closed => alpha-g-closed",
           FamilySubset(SetClass.GALPHA, _C, SetClass.ALPHAG, _C)),
    always("DIAG-4-EDGE-4", "Section 4 diagram, alpha-closed => H*-closed",
           FamilySubset(SetClass.ALPHA, _C, SetClass.HSTAR, _C)),
    always("DIAG-4-EDGE-5", "Section 4 diagram, g-alpha-closed => gH*-closed",
           FamilySubset(SetClass.GALPHA, _C, SetClass.GHSTAR, _C)),
    always("DIAG-4-EDGE-6", "Section 4 diagram, alpha-g-closed => H*g-closed",
           FamilySubset(SetClass.ALPHAG, _C, SetClass.HSTARG, _C)),
    always("DIAG-4-EDGE-7", "Section 4 diagram, H*-closed => gH*-closed",
           FamilySubset(SetClass.HSTAR, _C, SetClass.GHSTAR, _C)),
    always("DIAG-4-EDGE-8", "Section 4 diagram, gH*-closed => H*g-closed",
           FamilySubset(SetClass.GHSTAR, _C, SetClass.HSTARG, _C)),
    fixture("EX-4.1.1", "Example 4.1.1", "example4",
            holds=[SetIn("c", SetClass.ALPHA, _C), SetIn("c", SetClass.HSTAR, _C)],
            fails=[SetIn("c", SetClass.OPEN, _C)]),
    fixture("EX-4.1.2", "Example 4.1.2", "example4",
            holds=[SetIn("c", SetClass.ALPHA, _C), SetIn("c", SetClass.GHSTAR, _C)],
            fails=[SetIn("c", SetClass.OPEN, _C)]),
    always("RMK-4.2-i", "Remark 4.2(i)", InteriorCharacterization(SetClass.HSTARG, SetClass.HSTAR)),
    always("RMK-4.2-ii", "Remark 4.2(ii)", FamilyEqual(SetClass.GHSTAR, _C, SetClass.G, _C)),

    fixture("EX-5.1.1", "Example 5.1.1", "example4",
            holds=[FamilyEqual(SetClass.HSTARG, _C, SetClass.OPEN, _C), Axiom("h*-tb")],
            fails=[SetIn("ab", SetClass.HSTAR, _C), Axiom("h*-t1"), Axiom("t1")]),
    implies("DIAG-5-EDGE-1", "Section 5 diagram, T1 => T1/2", "t1", "t-half"),
    implies("DIAG-5-EDGE-2", "Section 5 diagram, H*-Tb => T1/2", "h*-tb", "t-half"),
    implies("DIAG-5-EDGE-3", "Section 5 diagram, H*-Tb => H*-Td", "h*-tb", "h*-td"),
    implies("DIAG-5-EDGE-4", "Section 5 diagram, T1 => H*-T1", "t1", "h*-t1"),
    implies("DIAG-5-EDGE-5", "Section 5 diagram, T1/2 => H*-T1/2", "t-half", "h*-t-half"),
    implies("DIAG-5-EDGE-6", "Section 5 diagram, H*-T1 => H*-T1/2", "h*-t1", "h*-t-half"),
    equivalence("THM-5.2-i", "Theorem 5.2(i)", Axiom("t-half"),
                EachPoint(PointOr(SingletonIn(SetClass.OPEN, _O), SingletonIn(SetClass.OPEN, _C)))),
    equivalence("THM-5.2-ii", "Theorem 5.2(ii)", Axiom("h*-t-half"),
                EachPoint(PointOr(SingletonIn(SetClass.HSTAR, _O), SingletonIn(SetClass.HSTAR, _C)))),
    always("THM-5.3-i", "Theorem 5.3(i)", ClosureResidue(SetClass.HSTARG, SetClass.HSTAR)),
    always("THM-5.3-ii", "Theorem 5.3(ii)",
           EachPoint(PointOr(SingletonIn(SetClass.OPEN, _C), ComplementIn(SetClass.HSTARG, _C)))),
    always("THM-5.3-iii", "Theorem 5.3(iii)",
           EachPoint(PointOr(SingletonIn(SetClass.HSTAR, _C), ComplementIn(SetClass.GHSTAR, _C)))),
    implies("THM-5.4-i", "Theorem 5.4(i), H*-Td", "h*-tb", "h*-td"),
    implies("THM-5.4-i-t-half", "Theorem 5.4(i), T1/2", "h*-tb", "t-half"),
    implies("THM-5.4-ii", "Theorem 5.4(ii), i = 1", "t1", "h*-t1"),
    implies("THM-5.4-ii-t-half", "Theorem 5.4(ii), i = 1/2", "t-half", "h*-t-half"),
    implies("THM-5.4-iii", "Theorem 5.4(iii)", "h*-t1", "h*-t-half"),
    implication("PROP-5.5-i", "Proposition 5.5(i)", _axioms("h*-tb"),
                EachPoint(PointOr(SingletonIn(SetClass.HSTAR, _C), SingletonIn(SetClass.OPEN, _O)))),
    implication("PROP-5.5-ii", "Proposition 5.5(ii)", _axioms("h*-td"),
                EachPoint(PointOr(SingletonIn(SetClass.HSTAR, _C), SingletonIn(SetClass.G, _O)))),

    map_claim("THM-6.2-i", "Theorem 6.2(i)", InducedEquivalence("closed")),
    map_claim("THM-6.2-i-open", "Theorem 6.2(i), pre H*-open", InducedEquivalence("open")),
    map_claim("THM-6.2-ii", "Theorem 6.2(ii)", InducedEquivalence("continuous")),
    map_claim("THM-6.3-i", "Theorem 6.3(i)", HstarHomeomorphism(), homeomorphisms_only=True),
    map_claim("THM-6.3-ii", "Theorem 6.3(ii), H*-Tb", Preserves("h*-tb"), homeomorphisms_only=True),
    map_claim("THM-6.3-ii-td", "Theorem 6.3(ii), H*-Td", Preserves("h*-td"), homeomorphisms_only=True),

    map_claim("SANITY-HOMEO", "axiom tables are homeomorphism invariant", AxiomTableInvariant(),
              homeomorphisms_only=True, stated=False),
    always("SET-HIER-1", "open => alpha-open", FamilySubset(SetClass.OPEN, _O, SetClass.ALPHA, _O), stated=False),
    always("SET-HIER-2", "alpha-open => semi-open", FamilySubset(SetClass.ALPHA, _O, SetClass.SEMI, _O),
           stated=False),
    always("SET-HIER-3", "alpha-open => pre-open", FamilySubset(SetClass.ALPHA, _O, SetClass.PRE, _O),
           stated=False),
    always("SET-HIER-4", "alpha-open = semi-open & pre-open", FamilyMeet(SetClass.ALPHA, SetClass.SEMI, SetClass.PRE),
           stated=False),
    always("SET-SCL", "semi-closure formula", ClosureFormula(SetClass.SEMI), stated=False),
    always("SET-PCL", "pre-closure formula", ClosureFormula(SetClass.PRE), stated=False),
    always("SET-ACL", "alpha-closure formula", ClosureFormula(SetClass.ALPHA), stated=False),
    always("SET-SCSTAR-ALL", "every set is SC*-closed", AllSetsIn(SetClass.SCSTAR, _C), stated=False),
]

_BY_ID = dict((claim.cid, claim) for claim in REGISTRY)


def lookup_claim(cid):
    claim = _BY_ID.get(cid)
    if claim is None:
        raise UnknownClaim("Unknown claim '{}'".format(cid))
    return claim


def search(premises, conclusion, n_max, config=DEFAULT_CONFIGURATION):
    """First enumerated space where every premise holds and the conclusion fails."""
    for space in spaces_up_to(n_max, config.n_min):
        if all(p(space, config) for p in premises) and not conclusion(space, config):
            return space
    return None


def search_counterexample(premises, conclusion, n_max, strict_hstarg=False, n_min=None):
    """
    :param premises: AxiomIds or axiom names that must hold.
    :param conclusion: AxiomId or axiom name that must fail.
    :param n_max: Largest ground set searched, at most 6.
    :param n_min: Smallest ground set searched, 2 (or n_max when smaller) by default.
    :return: The first such FiniteSpace or None.
    """
    check_enumeration_size(n_max, MAX_ENUMERATION_POINTS)
    config = DEFAULT_CONFIGURATION.replace(n_max=n_max, strict_hstarg=strict_hstarg, n_min=n_min)
    return search([Axiom(p) for p in premises], Axiom(conclusion), n_max, config)


def _check_implication(claim, config):
    witness = search(claim.premises, claim.conclusion, config.n_max, config)
    if witness is not None:
        return Status.REFUTED, Witness(space=witness), "premises hold and the conclusion fails", None
    return Status.CONFIRMED, None, "no counterexample", None


def _check_equivalence(claim, config):
    for space in spaces_up_to(config.n_max, config.n_min):
        left = claim.left(space, config)
        if left != claim.right(space, config):
            if left:
                detail = "left side holds, right side fails"
            else:
                detail = "right side holds, left side fails"
            return Status.REFUTED, Witness(space=space), detail, None
    return Status.CONFIRMED, None, "both directions hold", None


def _check_fixture(claim, config):
    failures = []
    witness = None
    for index, assertion in enumerate(claim.assertions):
        space = load_fixture(assertion.fixture)
        value = assertion.statement(space, config)
        if value != assertion.expected:
            failures.append("{} is {}".format(assertion.statement.describe(), value))
            if witness is None:
                witness = Witness(space=space, fixture=assertion.fixture, index=index)
    if failures:
        return Status.REFUTED, witness, "; ".join(failures), None
    return Status.CONFIRMED, None, "all assertions hold", None


def _separating(statement, other, fixture_name, config):
    """A space where statement holds and other fails, the named fixture first."""
    space = load_fixture(fixture_name)
    if statement(space, config) and not other(space, config):
        return fixture_name
    found = search([statement], other, config.n_max, config)
    if found is not None:
        return str(SpaceDocument.from_space(found))
    return None


def _check_independence(claim, config):
    directions = [(claim.left, claim.right, claim.fixtures[0]), (claim.right, claim.left, claim.fixtures[1])]
    found = []
    for index, (statement, other, fixture_name) in enumerate(directions):
        separating = _separating(statement, other, fixture_name, config)
        if separating is None:
            witness = Witness(space=load_fixture(fixture_name), fixture=fixture_name, index=index)
            detail = "no space up to {} points has {} without {}".format(
                config.n_max, statement.describe(), other.describe())
            return Status.REFUTED, witness, detail, None
        found.append("{} without {}: {}".format(statement.describe(), other.describe(), separating))
    return Status.CONFIRMED, None, "; ".join(found), None


def _maps_for(claim, config):
    for n in range(1, config.map_n_max + 1):
        for source in catalog(n):
            if claim.homeomorphisms_only:
                for target in catalog(n):
                    if len(source.opens) != len(target.opens):
                        continue
                    for f in enumerate_maps(source, target, bijective_only=True):
                        if is_homeomorphism(f):
                            yield f
            else:
                for m in range(1, config.map_n_max + 1):
                    for target in catalog(m):
                        for f in enumerate_maps(source, target):
                            yield f


def _check_map(claim, config):
    applicable = 0
    inapplicable = 0
    for f in _maps_for(claim, config):
        value = claim.map_statement(f, config)
        if value is None:
            inapplicable += 1
            continue
        applicable += 1
        if not value:
            return Status.REFUTED, Witness(point_map=f), "fails for this map", applicable
    detail = "{} maps checked, {} inapplicable".format(applicable, inapplicable)
    if applicable == 0:
        return Status.INAPPLICABLE, None, detail, 0
    return Status.CONFIRMED, None, detail, applicable


_CHECKS = {
    ClaimKind.IMPLICATION: _check_implication,
    ClaimKind.EQUIVALENCE: _check_equivalence,
    ClaimKind.FIXTURE: _check_fixture,
    ClaimKind.INDEPENDENCE: _check_independence,
    ClaimKind.MAP: _check_map,
}


def check_claim(cid, configuration=None):
    """
    Evaluate one registered claim.

    :param cid: Claim id, for example "EX-4.1.1".
    :param configuration: Configuration, defaults are used when None.
    :return: ClaimVerdict
    """
    config = configuration or DEFAULT_CONFIGURATION
    claim = lookup_claim(cid)
    start = time.time()
    status, witness, detail, applicable = _CHECKS[claim.kind](claim, config)
    if claim.kind == ClaimKind.MAP:
        bound = config.map_n_max
    elif claim.kind == ClaimKind.FIXTURE:
        bound = None
    else:
        bound = config.n_max
    verdict = ClaimVerdict(claim, status, witness, bound, time.time() - start, detail, applicable)
    if claim.kind == ClaimKind.FIXTURE and witness is not None:
        verdict.families = family_dump(witness.space, config)
    log.info("%s: %s", cid, status.value)
    return verdict


def recheck_witness(verdict, configuration=None):
    """Re-evaluate a refuted claim on its witness alone; True when the refutation reproduces."""
    config = configuration or DEFAULT_CONFIGURATION
    claim = lookup_claim(verdict.cid)
    witness = verdict.witness
    if verdict.status != Status.REFUTED or witness is None:
        return False
    space = witness.space
    if claim.kind == ClaimKind.IMPLICATION:
        return all(p(space, config) for p in claim.premises) and not claim.conclusion(space, config)
    if claim.kind == ClaimKind.EQUIVALENCE:
        return claim.left(space, config) != claim.right(space, config)
    if claim.kind == ClaimKind.FIXTURE:
        assertion = claim.assertions[witness.index]
        return assertion.statement(space, config) != assertion.expected
    if claim.kind == ClaimKind.INDEPENDENCE:
        statement, other = (claim.left, claim.right) if witness.index == 0 else (claim.right, claim.left)
        return not (statement(space, config) and not other(space, config))
    return claim.map_statement(witness.point_map, config) is False


def family_dump(space, config=DEFAULT_CONFIGURATION):
    """Every symmetric class family of space, open and closed, as lists of point names."""
    dump = OrderedDict()
    for set_class in SetClass:
        if not set_class.symmetric:
            continue
        for polarity in (Polarity.OPEN, Polarity.CLOSED):
            members = sorted(_family(space, config, set_class, polarity))
            dump[_family_name(set_class, polarity)] = [mask_names(m) for m in members]
    return dump
