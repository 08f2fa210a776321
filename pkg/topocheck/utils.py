"""utils.py: Random utility functions for topocheck."""


__author__ = "topocheck contributors"
__license__ = "MIT"


MAX_POINTS = 16


def split_in_two(text, separator):
    parts = text.split(separator)
    if len(parts) == 1:
        return parts[0], ""
    return parts[0], parts[1]


def full_mask(n):
    return (1 << n) - 1


def iter_bits(mask):
    """Yield the indexes of the set bits of mask in increasing order."""
    index = 0
    while mask:
        if mask & 1:
            yield index
        mask >>= 1
        index += 1


def submasks(mask):
    """Yield every submask of mask, the empty mask included, in decreasing order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def point_name(index):
    return chr(ord("a") + index)


def mask_names(mask, names=None):
    """Render a mask as {a,b} using point names."""
    if names is None:
        return "{" + ",".join(point_name(i) for i in iter_bits(mask)) + "}"
    return "{" + ",".join(names[i] for i in iter_bits(mask)) + "}"
