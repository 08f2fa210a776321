"""axioms.py: Separation axioms of finite spaces, parameterized by set class."""

import logging
from collections import OrderedDict
from enum import Enum

from topocheck.set_classes import Polarity, SetClass, calculator, check_polarity
from topocheck.utils import split_in_two

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


class UnknownAxiomName(KeyError):
    pass


class Template(Enum):
    C0 = "c0"
    C1 = "c1"
    WEAKLY_C0 = "weakly-c0"
    R0 = "r0"
    WEAKLY_R0 = "weakly-r0"
    T0 = "t0"
    T1 = "t1"


class Bespoke(Enum):
    T_HALF = "t-half"
    HSTAR_T_HALF = "h*-t-half"
    HSTAR_TB = "h*-tb"
    HSTAR_TD = "h*-td"
    ALPHA_SPACE = "alpha-space"


class AxiomId(object):
    """Either a (template, set class) pair or one of the bespoke axioms."""
    __slots__ = ("_template", "_set_class", "_bespoke")

    def __init__(self, template=None, set_class=SetClass.OPEN, bespoke=None):
        if (template is None) == (bespoke is None):
            raise ValueError("An axiom is either a template or bespoke")
        if template is not None:
            check_polarity(set_class, Polarity.OPEN)
        self._template = template
        self._set_class = set_class if template is not None else None
        self._bespoke = bespoke

    @property
    def template(self):
        return self._template

    @property
    def set_class(self):
        return self._set_class

    @property
    def bespoke(self):
        return self._bespoke

    @property
    def key(self):
        if self._bespoke is not None:
            return self._bespoke.value
        return "{}@{}".format(self._template.value, self._set_class.value)

    @property
    def name(self):
        named = _BY_AXIOM.get(self)
        if named is not None:
            return named[1]
        return self.key

    def __eq__(self, other):
        if not isinstance(other, AxiomId):
            return NotImplemented
        return (self._template, self._set_class, self._bespoke) == \
               (other._template, other._set_class, other._bespoke)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._template, self._set_class, self._bespoke))

    def __repr__(self):
        return "AxiomId({})".format(self.key)

    def __str__(self):
        return self.name


def _pairs(n):
    for x in range(n):
        for y in range(x + 1, n):
            yield 1 << x, 1 << y


def _class_closures_of_opens(space, set_class, strict_hstarg):
    calc = calculator(space, strict_hstarg)
    table = calc.closure_table(set_class)
    return [table[g] for g in sorted(calc.family(set_class, Polarity.OPEN))]


def class_c0(space, set_class, strict_hstarg=False):
    """For x != y some class-open G has exactly one of them in its class closure."""
    closures = _class_closures_of_opens(space, set_class, strict_hstarg)
    for bx, by in _pairs(space.n):
        if not any(bool(c & bx) != bool(c & by) for c in closures):
            return False
    return True


def class_c1(space, set_class, strict_hstarg=False):
    """
    For x != y there are class-open G, H with x in cl(G) - cl(H) and y in
    cl(H) - cl(G). The two halves are independent, so this is the same as
    asking, for every ordered pair, for a G with x in cl(G) and y not in it.
    """
    closures = _class_closures_of_opens(space, set_class, strict_hstarg)
    for bx, by in _pairs(space.n):
        if not any(c & bx and not c & by for c in closures):
            return False
        if not any(c & by and not c & bx for c in closures):
            return False
    return True


def weakly_class_c0(space, set_class, strict_hstarg=False):
    calc = calculator(space, strict_hstarg)
    meet = space.full
    for x in range(space.n):
        meet &= calc.kernel(set_class, x)
    return meet == 0


def class_r0(space, set_class, strict_hstarg=False):
    calc = calculator(space, strict_hstarg)
    table = calc.closure_table(set_class)
    for g in calc.family(set_class, Polarity.OPEN):
        for x in range(space.n):
            if g >> x & 1 and table[1 << x] & ~g:
                return False
    return True


def weakly_class_r0(space, set_class, strict_hstarg=False):
    table = calculator(space, strict_hstarg).closure_table(set_class)
    meet = space.full
    for x in range(space.n):
        meet &= table[1 << x]
    return meet == 0


def class_t0(space, set_class, strict_hstarg=False):
    opens = calculator(space, strict_hstarg).family(set_class, Polarity.OPEN)
    for bx, by in _pairs(space.n):
        if not any(bool(g & bx) != bool(g & by) for g in opens):
            return False
    return True


def class_t1(space, set_class, strict_hstarg=False):
    opens = calculator(space, strict_hstarg).family(set_class, Polarity.OPEN)
    for bx, by in _pairs(space.n):
        if not any(g & bx and not g & by for g in opens):
            return False
        if not any(g & by and not g & bx for g in opens):
            return False
    return True


def _closed(space, set_class, strict_hstarg):
    return calculator(space, strict_hstarg).family(set_class, Polarity.CLOSED)


def bespoke_axiom(space, bespoke, strict_hstarg=False):
    if bespoke == Bespoke.T_HALF:
        return _closed(space, SetClass.G, strict_hstarg) <= _closed(space, SetClass.OPEN, strict_hstarg)
    if bespoke == Bespoke.HSTAR_T_HALF:
        return _closed(space, SetClass.GHSTAR, strict_hstarg) <= _closed(space, SetClass.HSTAR, strict_hstarg)
    if bespoke == Bespoke.HSTAR_TB:
        return _closed(space, SetClass.HSTARG, strict_hstarg) <= _closed(space, SetClass.OPEN, strict_hstarg)
    if bespoke == Bespoke.HSTAR_TD:
        return _closed(space, SetClass.HSTARG, strict_hstarg) <= _closed(space, SetClass.G, strict_hstarg)
    if bespoke == Bespoke.ALPHA_SPACE:
        alpha = calculator(space, strict_hstarg).family(SetClass.ALPHA, Polarity.OPEN)
        return alpha == frozenset(space.opens)
    raise ValueError("Unknown bespoke axiom {}".format(bespoke))


TEMPLATES = {
    Template.C0: class_c0,
    Template.C1: class_c1,
    Template.WEAKLY_C0: weakly_class_c0,
    Template.R0: class_r0,
    Template.WEAKLY_R0: weakly_class_r0,
    Template.T0: class_t0,
    Template.T1: class_t1,
}


def evaluate(space, axiom, strict_hstarg=False):
    """Decide one axiom on space, memoized per space."""
    def decide():
        if axiom.bespoke is not None:
            return bespoke_axiom(space, axiom.bespoke, strict_hstarg)
        return TEMPLATES[axiom.template](space, axiom.set_class, strict_hstarg)

    return space.memo(("axiom", axiom, bool(strict_hstarg)), decide)


def _t(template, set_class):
    return AxiomId(template=template, set_class=set_class)


def _b(bespoke):
    return AxiomId(bespoke=bespoke)


# (command line name, display name, axiom) for every axiom the claims name
NAMED_AXIOMS = [
    ("c0", "C0", _t(Template.C0, SetClass.OPEN)),
    ("c1", "C1", _t(Template.C1, SetClass.OPEN)),
    ("semi-c0", "semi-C0", _t(Template.C0, SetClass.SEMI)),
    ("semi-c1", "semi-C1", _t(Template.C1, SetClass.SEMI)),
    ("alpha-c0", "alpha-C0", _t(Template.C0, SetClass.ALPHA)),
    ("sc*-c0", "SC*-C0", _t(Template.C0, SetClass.SCSTAR)),
    ("sc*-c1", "SC*-C1", _t(Template.C1, SetClass.SCSTAR)),
    ("w-c0", "w-C0", _t(Template.WEAKLY_C0, SetClass.OPEN)),
    ("weakly-semi-c0", "weakly semi-C0", _t(Template.WEAKLY_C0, SetClass.SEMI)),
    ("weakly-pre-c0", "weakly pre-C0", _t(Template.WEAKLY_C0, SetClass.PRE)),
    ("weakly-sc*-c0", "weakly SC*-C0", _t(Template.WEAKLY_C0, SetClass.SCSTAR)),
    ("r0", "R0", _t(Template.R0, SetClass.OPEN)),
    ("semi-r0", "semi-R0", _t(Template.R0, SetClass.SEMI)),
    ("weakly-r0", "weakly R0", _t(Template.WEAKLY_R0, SetClass.OPEN)),
    ("weakly-semi-r0", "weakly semi-R0", _t(Template.WEAKLY_R0, SetClass.SEMI)),
    ("weakly-pre-r0", "weakly pre-R0", _t(Template.WEAKLY_R0, SetClass.PRE)),
    ("weakly-sc*-r0", "weakly SC*-R0", _t(Template.WEAKLY_R0, SetClass.SCSTAR)),
    ("t0", "T0", _t(Template.T0, SetClass.OPEN)),
    ("t1", "T1", _t(Template.T1, SetClass.OPEN)),
    ("semi-t0", "semi-T0", _t(Template.T0, SetClass.SEMI)),
    ("semi-t1", "semi-T1", _t(Template.T1, SetClass.SEMI)),
    ("h*-t1", "H*-T1", _t(Template.T1, SetClass.HSTAR)),
    ("t-half", "T1/2", _b(Bespoke.T_HALF)),
    ("h*-t-half", "H*-T1/2", _b(Bespoke.HSTAR_T_HALF)),
    ("h*-tb", "H*-Tb", _b(Bespoke.HSTAR_TB)),
    ("h*-td", "H*-Td", _b(Bespoke.HSTAR_TD)),
    ("alpha-space", "alpha-space", _b(Bespoke.ALPHA_SPACE)),
]

_BY_NAME = dict((name, axiom) for name, _, axiom in NAMED_AXIOMS)
_BY_AXIOM = dict((axiom, (name, display)) for name, display, axiom in NAMED_AXIOMS)


def resolve_axiom(name):
    """
    Look up an axiom by its command line name ("sc*-c0") or as
    template@class ("c0@alpha").
    """
    key = name.strip().lower()
    if key in _BY_NAME:
        return _BY_NAME[key]

    template_name, class_name = split_in_two(key, "@")
    if class_name:
        for template in Template:
            if template.value == template_name:
                try:
                    set_class = SetClass.lookup(class_name)
                except KeyError:
                    break
                if set_class.symmetric:
                    return AxiomId(template=template, set_class=set_class)
                break
    raise UnknownAxiomName("Unknown axiom '{}'".format(name))


def axiom_table(space, extra=(), strict_hstarg=False):
    """
    Every named axiom, then any extra AxiomIds, mapped to their truth value
    on space, in a fixed order.
    """
    table = OrderedDict()
    for _, _, axiom in NAMED_AXIOMS:
        table[axiom] = evaluate(space, axiom, strict_hstarg)
    for axiom in extra:
        if axiom not in table:
            table[axiom] = evaluate(space, axiom, strict_hstarg)
    return table
