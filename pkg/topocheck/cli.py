"""cli.py: The topocheck command line: analyze, enumerate, search, claims and classes."""
from __future__ import print_function

import argparse
import json
import logging
import os
import sys
from collections import OrderedDict

from topocheck import version
from topocheck.axioms import UnknownAxiomName, axiom_table, resolve_axiom
from topocheck.claims import ClaimKind, Configuration, UnknownClaim, search_counterexample
from topocheck.document import ParseError, SpaceDocument, from_inline, read_document, split_point_names
from topocheck.enumeration import GroundSetTooLarge, distinct_up_to_homeomorphism, enumerate_topologies
from topocheck.fixtures import FIXTURES, UnknownFixture, fixture_document
from topocheck.runner import STATUS_ERRORS, diff, run_registry
from topocheck.set_classes import DEFINITIONS, NotATopology, Polarity, SetClass, calculator, induced_space
from topocheck.space import TopologyError
from topocheck.utils import mask_names

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


EXIT_OK = 0
EXIT_DIVERGED = 1
EXIT_ERROR = 2

# n_max values that need --long
LONG_N_MAX = 6

COMMAND_ERRORS = (ParseError, TopologyError, UnknownAxiomName, GroundSetTooLarge, UnknownClaim, UnknownFixture,
                  KeyError, ValueError, IOError)


class CommandError(Exception):
    pass


def load_document(text):
    """A space argument is a file path, a fixture name or an inline space."""
    if os.path.isfile(text):
        return read_document(text)
    if text in FIXTURES:
        return fixture_document(text)
    if "|" in text:
        return from_inline(text)
    raise CommandError("'{}' is not a file, a fixture ({}) or an inline space".format(text, ", ".join(FIXTURES)))


def parse_subset(document, text):
    """Subset given as point names, "ab" or "a,b"; "-" is the empty set."""
    text = text.strip()
    if text in ("-", ""):
        return 0
    index = dict((p, i) for i, p in enumerate(document.names))
    names = split_point_names(text, index)
    mask = 0
    for p in names:
        if p not in index:
            raise CommandError("Unknown point '{}'".format(p))
        mask |= 1 << index[p]
    return mask


def _names(document, mask):
    return mask_names(mask, document.names)


def _polarities(set_class):
    if set_class.symmetric:
        return Polarity.OPEN, Polarity.CLOSED
    return Polarity.RAW,


def _family_lines(document, calc, set_class):
    lines = []
    for polarity in _polarities(set_class):
        members = sorted(calc.family(set_class, polarity))
        lines.append("{}-{} ({}): {}".format(set_class.value, polarity.value, len(members),
                                             " ".join(_names(document, m) for m in members)))
    return lines


def cmd_analyze(args, out):
    document = load_document(args.space)
    space = document.to_space()
    calc = calculator(space, args.strict_hstarg)
    classes = [SetClass.lookup(c) for c in args.set_class]

    families = OrderedDict()
    for set_class in classes:
        for polarity in _polarities(set_class):
            families["{}-{}".format(set_class.value, polarity.value)] = \
                [_names(document, m) for m in sorted(calc.family(set_class, polarity))]

    closures = OrderedDict()
    for text in args.closure:
        mask = parse_subset(document, text)
        for set_class in classes or [SetClass.OPEN]:
            if set_class.symmetric:
                key = "{}-cl({})".format(set_class.value, _names(document, mask))
                closures[key] = _names(document, calc.closure(set_class, mask))

    kernels = OrderedDict()
    for point in args.kernel:
        if point not in document.names:
            raise CommandError("Unknown point '{}'".format(point))
        x = document.names.index(point)
        for set_class in classes or [SetClass.OPEN]:
            if set_class.symmetric:
                kernels["{}-ker({})".format(set_class.value, point)] = _names(document, calc.kernel(set_class, x))

    induced = OrderedDict()
    for set_class in classes:
        if set_class.symmetric:
            result = induced_space(space, set_class, args.strict_hstarg)
            induced[set_class.value] = str(result) if isinstance(result, NotATopology) else "topology"

    table = axiom_table(space, extra=[resolve_axiom(a) for a in args.axiom], strict_hstarg=args.strict_hstarg)

    if args.json:
        payload = OrderedDict()
        payload["space"] = document.to_dict()
        payload["families"] = families
        payload["closures"] = closures
        payload["kernels"] = kernels
        payload["induced"] = induced
        payload["axioms"] = OrderedDict((a.name, v) for a, v in table.items())
        print(json.dumps(payload, indent=2), file=out)
        return EXIT_OK

    print("space: {}".format(document.to_inline()), file=out)
    for set_class in classes:
        for line in _family_lines(document, calc, set_class):
            print(line, file=out)
    for key, value in list(closures.items()) + list(kernels.items()):
        print("{} = {}".format(key, value), file=out)
    for key, value in induced.items():
        print("{}-open sets: {}".format(key, value), file=out)
    width = max(len(a.name) for a in table)
    for axiom, value in table.items():
        print("{}  {}".format(axiom.name.ljust(width), "true" if value else "false"), file=out)
    return EXIT_OK


def cmd_classes(args, out):
    if args.space is None:
        width = max(len(c.value) for c in SetClass)
        for set_class in SetClass:
            print("{}  {}".format(set_class.value.ljust(width), DEFINITIONS[set_class]), file=out)
        return EXIT_OK

    document = load_document(args.space)
    calc = calculator(document.to_space(), args.strict_hstarg)
    classes = [SetClass.lookup(c) for c in args.set_class] or list(SetClass)
    for set_class in classes:
        for line in _family_lines(document, calc, set_class):
            print(line, file=out)
    return EXIT_OK


def cmd_enumerate(args, out):
    spaces = enumerate_topologies(args.n, args.partition, args.partitions)
    if args.distinct:
        spaces = distinct_up_to_homeomorphism(spaces)
    if args.count:
        print(sum(1 for _ in spaces), file=out)
        return EXIT_OK
    for space in spaces:
        document = SpaceDocument.from_space(space)
        print(document.to_json() if args.json else document.to_inline(), file=out)
    return EXIT_OK


def cmd_search(args, out):
    premises = [resolve_axiom(a) for a in args.holds]
    conclusion = resolve_axiom(args.fails)
    if args.n_max == LONG_N_MAX and not args.long:
        raise CommandError("-n {} walks 209527 spaces, pass --long to confirm".format(LONG_N_MAX))
    witness = search_counterexample(premises, conclusion, args.n_max, args.strict_hstarg, args.n_min)
    if witness is None:
        print("none up to {}".format(args.n_max), file=out)
        return EXIT_OK
    document = SpaceDocument.from_space(witness)
    print(document.to_json() if args.json else document.to_inline(), file=out)
    return EXIT_OK


def cmd_claims(args, out):
    if args.n_max == LONG_N_MAX and not args.long:
        raise CommandError("--n-max {} walks 209527 spaces, pass --long to confirm".format(LONG_N_MAX))
    kinds = [ClaimKind(k) for k in args.kind] or None
    configuration = Configuration(n_max=args.n_max, map_n_max=args.map_n_max, strict_hstarg=args.strict_hstarg,
                                  kinds=kinds, ids=args.id or None, workers=args.workers,
                                  expect_stated=args.expect_stated, n_min=args.n_min)
    report = run_registry(configuration)
    reports = [report]
    changes = []
    if args.strict_hstarg:
        # The non-strict report is the baseline the strict one is compared against
        baseline = run_registry(configuration.replace(strict_hstarg=False))
        changes = diff(baseline, report)
        reports = [baseline, report]

    if args.output:
        with open(args.output, "w") as f:
            f.write(report.to_json())

    if args.json:
        if len(reports) == 1:
            print(report.to_json(), file=out)
        else:
            payload = OrderedDict()
            payload["reports"] = [r.to_dict() for r in reports]
            payload["diff"] = [{"id": cid, "relaxed": a.value, "strict": b.value} for cid, a, b in changes]
            print(json.dumps(payload, indent=2), file=out)
    else:
        print(report.to_table(), file=out)
        if args.strict_hstarg:
            print("", file=out)
            if changes:
                print("strict H*g-closedness changes:", file=out)
                for cid, relaxed, strict in changes:
                    print("  {}: {} -> {}".format(cid, relaxed.value, strict.value), file=out)
            else:
                print("strict H*g-closedness changes nothing", file=out)

    if report.status_code == STATUS_ERRORS:
        return EXIT_ERROR
    if configuration.expect_stated and report.divergences():
        for v in report.divergences():
            log.error("%s diverges: %s, recorded %s", v.cid, v.status.value, v.expected.value)
        return EXIT_DIVERGED
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(prog="topocheck", description="Finite topology engine and claim checker.")
    parser.add_argument("--version", action="version", version="%(prog)s " + version)
    parser.add_argument("--debug", action="store_true", help="Debug logging.")
    subparsers = parser.add_subparsers(dest="command")

    analyze = subparsers.add_parser("analyze", help="Class families, closures and axioms of a space.")
    analyze.add_argument("space", help="Space file, fixture name or inline space.")
    analyze.add_argument("--class", dest="set_class", action="append", default=[], help="Set class to list.")
    analyze.add_argument("--closure", action="append", default=[], help="Subset to close, e.g. ab.")
    analyze.add_argument("--kernel", action="append", default=[], help="Point whose kernel to print.")
    analyze.add_argument("--axiom", action="append", default=[], help="Extra axiom, e.g. c0@alpha.")
    analyze.add_argument("--json", action="store_true", help="Emit JSON.")
    analyze.add_argument("--strict-hstarg", action="store_true", help="Strict superset test for H*g-closed.")
    analyze.set_defaults(handler=cmd_analyze)

    classes = subparsers.add_parser("classes", help="Set class definitions, or every family of a space.")
    classes.add_argument("space", nargs="?", default=None, help="Space file, fixture name or inline space.")
    classes.add_argument("--class", dest="set_class", action="append", default=[], help="Set class to list.")
    classes.add_argument("--strict-hstarg", action="store_true", help="Strict superset test for H*g-closed.")
    classes.set_defaults(handler=cmd_classes)

    enumerate_ = subparsers.add_parser("enumerate", help="Every topology on n points.")
    enumerate_.add_argument("-n", type=int, required=True, help="Number of points, 1..6.")
    enumerate_.add_argument("--count", action="store_true", help="Print the count only.")
    enumerate_.add_argument("--distinct", action="store_true", help="One space per homeomorphism class.")
    enumerate_.add_argument("--partition", type=int, default=0, help="Part of the search tree to walk.")
    enumerate_.add_argument("--partitions", type=int, default=1, help="Number of parts.")
    enumerate_.add_argument("--json", action="store_true", help="JSON documents instead of inline spaces.")
    enumerate_.set_defaults(handler=cmd_enumerate)

    search = subparsers.add_parser("search", help="First space where the premises hold and the conclusion fails.")
    search.add_argument("--holds", action="append", default=[], help="Axiom that must hold.")
    search.add_argument("--fails", required=True, help="Axiom that must fail.")
    search.add_argument("-n", "--n-max", dest="n_max", type=int, default=4, help="Largest ground set.")
    search.add_argument("--long", action="store_true", help="Allow n = 6.")
    search.add_argument("--n-min", type=int, default=None,
                        help="Smallest ground set, 2 by default; 1 adds the one-point space.")
    search.add_argument("--json", action="store_true", help="Emit the witness as JSON.")
    search.add_argument("--strict-hstarg", action="store_true", help="Strict superset test for H*g-closed.")
    search.set_defaults(handler=cmd_search)

    claims = subparsers.add_parser("claims", help="Run the claim registry.")
    claims.add_argument("--id", action="append", default=[], help="Claim id or id prefix.")
    claims.add_argument("--kind", action="append", default=[], choices=[k.value for k in ClaimKind])
    claims.add_argument("--n-max", type=int, default=4, help="Enumeration bound.")
    claims.add_argument("--map-n-max", type=int, default=3, help="Enumeration bound for map claims.")
    claims.add_argument("--n-min", type=int, default=None,
                        help="Smallest ground set enumerated, 2 by default; 1 adds the one-point space.")
    claims.add_argument("--long", action="store_true", help="Allow --n-max 6.")
    claims.add_argument("--workers", type=int, default=1, help="Worker threads.")
    claims.add_argument("--json", action="store_true", help="Emit the structured report.")
    claims.add_argument("--output", default=None, help="Also write the structured report to this file.")
    claims.add_argument("--strict-hstarg", action="store_true",
                        help="Strict superset test for H*g-closed, diffed against the default reading.")
    claims.add_argument("--expect-paper", dest="expect_stated", action="store_true",
                        help="Fail when a verdict diverges from the recorded expectation.")
    claims.set_defaults(handler=cmd_claims)
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.debug else logging.WARNING,
                        format="%(asctime)s %(levelname)-5s %(name)s: %(message)s")
    if getattr(args, "handler", None) is None:
        parser.print_help(out)
        return EXIT_ERROR
    try:
        return args.handler(args, out)
    except (CommandError,) + COMMAND_ERRORS as e:
        log.debug("command failed", exc_info=True)
        print("error: {}".format(e), file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
