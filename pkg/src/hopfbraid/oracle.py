"""Freyd-Yetter braid action on G^n and its fixed-point count.

This is a purely combinatorial cross-check of the braided dimensions of the
Schroedinger module of a group algebra; it uses no linear algebra.
"""

from __future__ import annotations

from itertools import product

from .errors import EnumerationTooLarge, LengthMismatch

__all__ = ["fy_apply", "fy_fixed_points", "ORACLE_LIMIT"]

ORACLE_LIMIT = 10 ** 7


def _letter(G, w, t):
    i = abs(w) - 1
    g, h = t[i], t[i + 1]
    if w > 0:
        # (g, h) -> (h, h^-1 g h)
        a, b = h, G.mul(G.mul(G.inv(h), g), h)
    else:
        # inverse: (g, h) -> (g h g^-1, g)
        a, b = G.mul(G.mul(g, h), G.inv(g)), g
    return t[:i] + (a, b) + t[i + 2:]


def fy_apply(G, word, elements):
    """Apply the braid word to a tuple of group element indices, first letter first."""
    t = tuple(elements)
    if len(t) != word.strands:
        raise LengthMismatch(f"tuple of length {len(t)} for a braid on {word.strands} strands")
    for w in word.letters:
        t = _letter(G, w, t)
    return t


def fy_fixed_points(G, word, limit=ORACLE_LIMIT):
    """Number of tuples in G^n fixed by the braid word."""
    total = G.order ** word.strands
    if total > limit:
        raise EnumerationTooLarge(f"|G|^n = {total} exceeds {limit}")
    return sum(1 for t in product(range(G.order), repeat=word.strands) if fy_apply(G, word, t) == t)
