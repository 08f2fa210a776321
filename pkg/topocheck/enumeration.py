"""enumeration.py: Exhaustive enumeration of labeled topologies on small ground sets."""

import itertools
import logging
import threading

from topocheck.space import FiniteSpace
from topocheck.utils import full_mask

log = logging.getLogger(__name__)


__author__ = "topocheck contributors"
__license__ = "MIT"


MAX_ENUMERATION_POINTS = 6

# Decisions taken before the search tree is split between partitions
SPLIT_DEPTH = 8


class GroundSetTooLarge(ValueError):
    pass


def check_enumeration_size(n, limit=MAX_ENUMERATION_POINTS):
    if not 1 <= n <= limit:
        raise GroundSetTooLarge("Ground set size {} outside 1..{}".format(n, limit))


def enumerate_topologies(n, partition=0, partitions=1):
    """
    Yield every labeled topology on n points exactly once.

    Masks are decided in increasing numeric order, so every intersection with
    an included mask is already decided and every union is still pending.
    Pending unions are forced and may not be excluded later.

    :param n: Ground set size, 1..6.
    :param partition: Which part of the search tree to walk.
    :param partitions: Number of disjoint parts the tree is split into.
    """
    check_enumeration_size(n)
    if not 0 <= partition < partitions:
        raise ValueError("Partition {} outside 0..{}".format(partition, partitions - 1))

    full = full_mask(n)
    candidates = list(range(1, full))
    split_depth = min(len(candidates), SPLIT_DEPTH)
    included = [0]
    members = {0}
    forced = {}
    nodes = [0]

    def descend(index):
        if index == split_depth and partitions > 1:
            node = nodes[0]
            nodes[0] += 1
            if node % partitions != partition:
                return

        if index == len(candidates):
            yield FiniteSpace(n, included + [full])
            return

        mask = candidates[index]

        if forced.get(mask, 0) == 0:
            for space in descend(index + 1):
                yield space

        for p in included:
            if p & mask not in members:
                return

        unions = []
        for p in included:
            u = p | mask
            if u != mask and u != full and u not in members:
                unions.append(u)
                forced[u] = forced.get(u, 0) + 1
        included.append(mask)
        members.add(mask)
        try:
            for space in descend(index + 1):
                yield space
        finally:
            included.pop()
            members.discard(mask)
            for u in unions:
                forced[u] -= 1

    for space in descend(0):
        yield space


def count_topologies(n):
    count = 0
    for _ in enumerate_topologies(n):
        count += 1
    log.debug("%d topologies on %d points", count, n)
    return count


def relabel(space, permutation):
    """Image of space under the point permutation i -> permutation[i]."""
    opens = []
    for u in space.opens:
        image = 0
        for i, j in enumerate(permutation):
            if u >> i & 1:
                image |= 1 << j
        opens.append(image)
    return FiniteSpace(space.n, sorted(opens))


def canonical_form(space):
    """Smallest relabeling of the opens; equal for homeomorphic spaces."""
    return min(relabel(space, p).opens for p in itertools.permutations(range(space.n)))


def distinct_up_to_homeomorphism(spaces):
    """Filter keeping the first space of every homeomorphism class."""
    seen = set()
    for space in spaces:
        key = (space.n, canonical_form(space))
        if key not in seen:
            seen.add(key)
            yield space


# Catalogs up to this size are kept, so per-space memos survive between claims
CATALOG_CACHE_LIMIT = 4

_catalogs = {}
_catalog_lock = threading.Lock()


def catalog(n):
    """All topologies on n points as a tuple, cached for small n."""
    check_enumeration_size(n)
    if n > CATALOG_CACHE_LIMIT:
        return tuple(enumerate_topologies(n))
    with _catalog_lock:
        if n not in _catalogs:
            _catalogs[n] = tuple(enumerate_topologies(n))
            log.debug("catalog of %d points: %d spaces", n, len(_catalogs[n]))
        return _catalogs[n]


def spaces_up_to(n_max, n_min=1):
    """Every topology on n_min..n_max points; n = 5 and 6 are walked without caching."""
    check_enumeration_size(n_max)
    for n in range(n_min, n_max + 1):
        if n > CATALOG_CACHE_LIMIT:
            for space in enumerate_topologies(n):
                yield space
        else:
            for space in catalog(n):
                yield space
