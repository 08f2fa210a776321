"""document.py: SpaceDocument, the JSON and inline text forms of a finite space."""

import json
import logging

from topocheck.space import build_space
from topocheck.utils import iter_bits, point_name, split_in_two

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


EMPTY_TOKEN = "-"
FULL_TOKEN = "*"


class ParseError(ValueError):

    def __init__(self, message, line=None, position=None):
        if line is not None:
            message = "line {} position {}: {}".format(line, position, message)
        super(ParseError, self).__init__(message)
        self.line = line
        self.position = position


class SpaceDocument(object):
    """
    Point names and open sets as lists of names. Names are bound to indexes
    in sorted order, so the document does not depend on listing order.
    """

    def __init__(self, points, opens, name=None):
        self.points = list(points)
        self.opens = [list(u) for u in opens]
        self.name = name
        if len(set(self.points)) != len(self.points):
            raise ParseError("Point names are not distinct: {}".format(self.points))
        known = set(self.points)
        for u in self.opens:
            for p in u:
                if p not in known:
                    raise ParseError("Open set {} names unknown point '{}'".format(u, p))

    @property
    def names(self):
        return sorted(self.points)

    def to_space(self):
        """Bind names to indexes and validate with build_space."""
        index = dict((p, i) for i, p in enumerate(self.names))
        opens = []
        for u in self.opens:
            mask = 0
            for p in u:
                mask |= 1 << index[p]
            opens.append(mask)
        return build_space(len(self.points), opens)

    @staticmethod
    def from_space(space, names=None, name=None):
        if names is None:
            names = [point_name(i) for i in range(space.n)]
        opens = [[names[i] for i in iter_bits(u)] for u in space.opens]
        return SpaceDocument(names, opens, name=name)

    def to_dict(self):
        d = {"points": self.points, "opens": self.opens}
        if self.name is not None:
            d["name"] = self.name
        return d

    def to_json(self, indent=None):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    def to_inline(self):
        names = self.names
        if any(len(p) != 1 for p in names):
            sep = ","
        else:
            sep = ""
        everything = set(self.points)
        tokens = []
        for u in self.opens:
            if not u:
                tokens.append(EMPTY_TOKEN)
            elif set(u) == everything:
                tokens.append(FULL_TOKEN)
            else:
                tokens.append(sep.join(p for p in names if p in u))
        return "{} | {}".format(",".join(self.points), "; ".join(tokens))

    def __str__(self):
        return self.to_inline()


def from_json(text):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise ParseError(str(e), getattr(e, "lineno", None), getattr(e, "colno", None))
    if not isinstance(data, dict) or "points" not in data or "opens" not in data:
        raise ParseError("A space document needs 'points' and 'opens'", 1, 1)
    points = [str(p) for p in data["points"]]
    opens = data["opens"]
    if not isinstance(opens, list) or not all(isinstance(u, list) for u in opens):
        raise ParseError("'opens' must be a list of lists of point names", 1, 1)
    return SpaceDocument(points, [[str(p) for p in u] for u in opens], name=data.get("name"))


def split_point_names(token, known):
    """Comma separated names, a single known name, or run together one character names."""
    if "," in token:
        return [p.strip() for p in token.split(",")]
    if token in known or any(len(p) > 1 for p in known):
        return [token]
    return list(token)


def from_inline(text, line=1):
    """
    Parse "a,b,c,d | -; a; b; ab; abc; *". Single character names may be
    run together; longer names are separated with commas.
    """
    head, tail = split_in_two(text.strip(), "|")
    if not tail.strip():
        raise ParseError("Expected 'points | opens'", line, len(head) + 1)
    points = [p.strip() for p in head.split(",") if p.strip()]
    if not points:
        raise ParseError("No points", line, 1)
    known = set(points)

    opens = []
    offset = len(head) + 1
    for token in tail.split(";"):
        position = offset + 1
        offset += len(token) + 1
        token = token.strip()
        if token == EMPTY_TOKEN:
            opens.append([])
        elif token == FULL_TOKEN:
            opens.append(list(points))
        elif not token:
            raise ParseError("Empty open set token", line, position)
        else:
            names = split_point_names(token, known)
            for p in names:
                if p not in known:
                    raise ParseError("Unknown point '{}'".format(p), line, position)
            opens.append(names)
    return SpaceDocument(points, opens)


def parse_document(text):
    if text.lstrip().startswith("{"):
        return from_json(text)
    return from_inline(text)


def read_document(path):
    with open(path) as f:
        return parse_document(f.read())
