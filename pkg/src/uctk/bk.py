"""Brouwer-Kleene comparison over finite sequences.

A sequence is below another iff it is a proper lengthening of it, or the
entries at the first differing index compare below.  Entry orders are
supplied by a comparator returning -1/0/1; ``entry_compare`` dispatches on
the entry kinds used throughout the kernel:

  * naturals (and the distinguished -1, which sits below every natural),
  * nodes, i.e. tuples of naturals, compared by Brouwer-Kleene recursively,
  * -1 against a node: -1 is below every node,
  * ordinal objects exposing ``compare``.
"""

from __future__ import annotations

from typing import Callable, Sequence, TypeVar

A = TypeVar("A")

LESS = -1
EQUAL = 0
GREATER = 1


def bk_compare(s: Sequence[A], t: Sequence[A],
               entry_cmp: Callable[[A, A], int]) -> int:
    """Compare two finite sequences in the Brouwer-Kleene order."""
    for a, b in zip(s, t):
        c = entry_cmp(a, b)
        if c != 0:
            return c
    if len(s) > len(t):
        return LESS        # proper lengthening comes first
    if len(s) < len(t):
        return GREATER
    return EQUAL


def entry_compare(a, b) -> int:
    """Comparator for the entry kinds occurring in representations."""
    if isinstance(a, tuple) and isinstance(b, tuple):
        return bk_compare(a, b, entry_compare)
    if isinstance(a, tuple):
        if b == -1:
            return GREATER
        raise TypeError(f"incomparable entries {a!r} and {b!r}")
    if isinstance(b, tuple):
        if a == -1:
            return LESS
        raise TypeError(f"incomparable entries {a!r} and {b!r}")
    if isinstance(a, int) and isinstance(b, int):
        return (a > b) - (a < b)
    ca = getattr(a, "compare", None)
    if ca is not None and isinstance(b, type(a)):
        return a.compare(b)
    raise TypeError(f"incomparable entries {a!r} and {b!r}")


def bk(s: Sequence, t: Sequence) -> int:
    """Brouwer-Kleene comparison with the standard entry dispatch."""
    return bk_compare(s, t, entry_compare)


def bk_key(seq: Sequence):
    """Sort key realizing the Brouwer-Kleene order via pairwise comparison."""
    import functools

    return functools.cmp_to_key(bk)(seq)


def bk_sorted(seqs):
    return sorted(seqs, key=bk_key)


def bk_min(seqs):
    return bk_sorted(seqs)[0]


def bk_max(seqs):
    return bk_sorted(seqs)[-1]
