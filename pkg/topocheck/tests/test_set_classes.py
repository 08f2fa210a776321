import random
from unittest import TestCase

from topocheck.enumeration import catalog, enumerate_topologies
from topocheck.fixtures import load_fixture
from topocheck.set_classes import (ClassFamily, NotATopology, Polarity, PolarityMismatch, SetClass, calculator,
                                   class_closure, class_family, class_interior, class_kernel, induced_space,
                                   is_in_class)
from topocheck.space import SubsetMask
from topocheck.utils import submasks

A, B, C, D = 1, 2, 4, 8
X = 15


class Example4Tester(TestCase):
    """{phi, a, b, ab, abc, X} on four points."""

    def setUp(self):
        self.space = load_fixture("example4")

    def family(self, set_class, polarity=Polarity.OPEN):
        return calculator(self.space).family(set_class, polarity)

    def test_semi_open(self):
        expected = {0, A, A | C, A | D, A | C | D, B, B | C, B | D, B | C | D, A | B, A | B | C, A | B | D, X}
        self.assertEqual(self.family(SetClass.SEMI), expected)

    def test_alpha_and_pre_open(self):
        expected = {0, A, B, A | B, A | B | C, A | B | D, X}
        self.assertEqual(self.family(SetClass.ALPHA), expected)
        self.assertEqual(self.family(SetClass.PRE), expected)
        self.assertEqual(self.family(SetClass.ALPHA, Polarity.CLOSED),
                         {X, B | C | D, A | C | D, C | D, D, C, 0})

    def test_cstar_open(self):
        expected = {0, X, A, A | C, A | D, A | C | D, B, B | C, B | D, B | C | D}
        self.assertEqual(self.family(SetClass.CSTAR), expected)

    def test_raw_classes(self):
        everything = set(range(16))
        self.assertEqual(self.family(SetClass.ALPHA_STAR, Polarity.RAW),
                         everything - {A | B, A | B | C, A | B | D})
        self.assertEqual(self.family(SetClass.C_SET, Polarity.RAW), everything - {A | B | D})

    def test_w_closed_are_closed(self):
        self.assertEqual(self.family(SetClass.W, Polarity.CLOSED), self.family(SetClass.OPEN, Polarity.CLOSED))

    def test_h_ladder(self):
        expected = set(range(16)) - {A | B, A | B | C}
        self.assertEqual(self.family(SetClass.H, Polarity.CLOSED), expected)
        self.assertEqual(self.family(SetClass.HCG, Polarity.CLOSED), expected)
        self.assertEqual(self.family(SetClass.HSTAR, Polarity.CLOSED), expected)
        self.assertEqual(self.family(SetClass.GHSTAR, Polarity.CLOSED), expected)
        self.assertEqual(self.family(SetClass.HSTARG, Polarity.CLOSED), expected)
        self.assertEqual(self.family(SetClass.HSTAR), set(range(16)) - {C | D, D})

    def test_h_closure(self):
        self.assertEqual(class_closure(self.space, A | B, SetClass.H), A | B | D)
        self.assertEqual(class_closure(self.space, A | B | C, SetClass.H), X)
        self.assertEqual(class_closure(self.space, C, SetClass.HSTAR), C)

    def test_single_point_c(self):
        self.assertTrue(is_in_class(self.space, C, SetClass.ALPHA, Polarity.CLOSED))
        self.assertTrue(is_in_class(self.space, C, SetClass.HSTAR, Polarity.CLOSED))
        self.assertTrue(is_in_class(self.space, C, SetClass.GHSTAR, Polarity.CLOSED))
        self.assertFalse(is_in_class(self.space, C, SetClass.OPEN, Polarity.CLOSED))
        self.assertFalse(is_in_class(self.space, C, SetClass.G, Polarity.CLOSED))
        self.assertFalse(is_in_class(self.space, A | B, SetClass.HSTAR, Polarity.CLOSED))

    def test_induced_hstar_space(self):
        result = induced_space(self.space, SetClass.HSTAR)
        self.assertIsInstance(result, NotATopology)
        self.assertIs(induced_space(self.space, SetClass.OPEN), self.space)
        self.assertEqual(induced_space(self.space, SetClass.ALPHA).opens, (0, A, B, A | B, A | B | C, A | B | D, X))

    def test_family_object(self):
        family = class_family(self.space, SetClass.ALPHA, Polarity.OPEN)
        self.assertIsInstance(family, ClassFamily)
        self.assertEqual(len(family), 7)
        self.assertIn(SubsetMask(A | B | D, 4), family)
        self.assertEqual(list(family)[:3], [0, A, B])

    def test_interior_and_kernel(self):
        self.assertEqual(class_interior(self.space, A | B, SetClass.SEMI), A | B)
        self.assertEqual(class_interior(self.space, C | D, SetClass.HSTAR), C)
        self.assertEqual(class_kernel(self.space, 2, SetClass.OPEN), A | B | C)
        self.assertEqual(class_kernel(self.space, 3, SetClass.OPEN), X)


class PolarityTester(TestCase):

    def test_raw_needs_raw(self):
        space = load_fixture("sigma")
        with self.assertRaises(PolarityMismatch):
            is_in_class(space, 0, SetClass.C_SET, Polarity.OPEN)
        with self.assertRaises(PolarityMismatch):
            is_in_class(space, 0, SetClass.SEMI, Polarity.RAW)
        with self.assertRaises(PolarityMismatch):
            class_interior(space, 0, SetClass.ALPHA_STAR)

    def test_lookup(self):
        self.assertEqual(SetClass.lookup("feebly"), SetClass.ALPHA)
        self.assertEqual(SetClass.lookup("H*g"), SetClass.HSTARG)
        self.assertEqual(SetClass.lookup("hstar"), SetClass.HSTAR)
        with self.assertRaises(KeyError):
            SetClass.lookup("nope")

    def test_mask_checked(self):
        with self.assertRaises(ValueError):
            is_in_class(load_fixture("sigma"), 8, SetClass.OPEN, Polarity.OPEN)
        with self.assertRaises(ValueError):
            class_kernel(load_fixture("sigma"), 3, SetClass.OPEN)


class LadderTester(TestCase):
    """Inclusions that hold in every space."""

    def test_inclusions(self):
        for n in range(1, 5):
            for space in catalog(n):
                calc = calculator(space)
                opens = calc.family(SetClass.OPEN, Polarity.OPEN)
                alpha = calc.family(SetClass.ALPHA, Polarity.OPEN)
                semi = calc.family(SetClass.SEMI, Polarity.OPEN)
                pre = calc.family(SetClass.PRE, Polarity.OPEN)
                self.assertTrue(opens <= alpha <= semi)
                self.assertTrue(alpha <= pre)
                self.assertEqual(alpha, semi & pre)
                closed = calc.family(SetClass.OPEN, Polarity.CLOSED)
                self.assertTrue(closed <= calc.family(SetClass.G, Polarity.CLOSED))
                self.assertTrue(calc.family(SetClass.ALPHA, Polarity.CLOSED) <=
                                calc.family(SetClass.HSTAR, Polarity.CLOSED))
                self.assertTrue(calc.family(SetClass.HSTAR, Polarity.CLOSED) <=
                                calc.family(SetClass.GHSTAR, Polarity.CLOSED))

    def test_closure_formulas(self):
        for n in range(1, 5):
            for space in catalog(n):
                calc = calculator(space)
                for a in range(space.full + 1):
                    self.assertEqual(calc.closure(SetClass.SEMI, a), a | space.interior(space.closure(a)))
                    self.assertEqual(calc.closure(SetClass.PRE, a), a | space.closure(space.interior(a)))
                    self.assertEqual(calc.closure(SetClass.ALPHA, a),
                                     a | space.closure(space.interior(space.closure(a))))

    def test_every_set_is_scstar_closed(self):
        for n in range(1, 5):
            for space in catalog(n):
                closed = calculator(space).family(SetClass.SCSTAR, Polarity.CLOSED)
                self.assertEqual(len(closed), space.full + 1)

    def test_closure_and_kernel_laws(self):
        symmetric = [c for c in SetClass if c.symmetric]
        for space in catalog(4):
            calc = calculator(space)
            for set_class in symmetric:
                table = calc.closure_table(set_class)
                for b in range(space.full + 1):
                    self.assertEqual(b & ~table[b], 0)
                    self.assertEqual(table[table[b]], table[b])
                    for a in submasks(b):
                        self.assertEqual(table[a] & ~table[b], 0)
                for x in range(space.n):
                    kernel = calc.kernel(set_class, x)
                    self.assertTrue(kernel >> x & 1)
                    self.assertEqual(class_kernel(space, x, set_class), kernel)

    def test_strict_reading_adds_hstarg_sets(self):
        for space in catalog(3):
            relaxed = calculator(space, False).family(SetClass.HSTARG, Polarity.CLOSED)
            strict = calculator(space, True).family(SetClass.HSTARG, Polarity.CLOSED)
            self.assertTrue(relaxed <= strict)


class Sigma1Tester(TestCase):
    """{phi, a, b, ab, X} on four points."""

    def test_semi_not_alpha(self):
        space = load_fixture("sigma1")
        self.assertTrue(is_in_class(space, A | C, SetClass.SEMI, Polarity.OPEN))
        self.assertFalse(is_in_class(space, A | C, SetClass.ALPHA, Polarity.OPEN))
        self.assertEqual(len(class_family(space, SetClass.SEMI, Polarity.OPEN)), 13)
        self.assertEqual(class_closure(space, A, SetClass.SEMI), A)
        self.assertEqual(class_kernel(space, 2, SetClass.OPEN), X)

    def test_indiscrete_semi(self):
        space = load_fixture("indiscrete2")
        self.assertIs(induced_space(space, SetClass.OPEN), space)
        self.assertEqual(induced_space(space, SetClass.SEMI).opens, (0, 3))


class SampledFivePointTester(TestCase):

    def test_sampled_laws(self):
        rng = random.Random(5)
        spaces = list(enumerate_topologies(5))
        for _ in range(1000):
            space = rng.choice(spaces)
            a = rng.randrange(space.full + 1)
            calc = calculator(space)
            semi = calc.family(SetClass.SEMI, Polarity.OPEN)
            pre = calc.family(SetClass.PRE, Polarity.OPEN)
            alpha = calc.family(SetClass.ALPHA, Polarity.OPEN)
            self.assertEqual(a in alpha, a in semi and a in pre)
            if space.is_open(a):
                self.assertIn(a, alpha)
            self.assertEqual(calc.closure(SetClass.SEMI, a), a | space.interior(space.closure(a)))
            self.assertEqual(calc.closure(SetClass.ALPHA, a), a | space.closure(space.interior(space.closure(a))))
            self.assertEqual(a in semi, space.full ^ a in calc.family(SetClass.SEMI, Polarity.CLOSED))
