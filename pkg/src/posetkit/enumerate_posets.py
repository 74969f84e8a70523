"""Exhaustive enumeration of small posets up to isomorphism.

Posets are generated in natural labellings (every element is maximal among
its predecessors), by inserting elements one at a time above an order ideal
of what is already built; every naturally labelled poset arises exactly once.
Isomorphism classes are deduplicated by a canonical form: the
lexicographically least adjacency matrix over all profile-preserving
relabellings.  Bounded posets are generated directly by pinning the first
element below and the last element above everything else.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from .errors import SizeLimit
from .poset import Poset, _bits

MAX_ELEMENTS = 7


def _ideals(down: list[int], k: int, require_zero: bool) -> Iterator[int]:
    """All down-closed subsets of the first k elements, as bitmasks."""
    for mask in range(1 << k):
        if require_zero and k > 0 and not mask & 1:
            continue
        ok = True
        for i in _bits(mask):
            if down[i] & ~mask:
                ok = False
                break
        if ok:
            yield mask


def _natural_posets(n: int, bounded: bool) -> Iterator[list[int]]:
    """Down-masks (self bit included) of naturally labelled posets on [n]."""
    down = [0] * n

    def place(j: int) -> Iterator[list[int]]:
        if j == n:
            yield list(down)
            return
        require_zero = bounded and j > 0
        if bounded and j == n - 1 and n > 1:
            choices = [(1 << (n - 1)) - 1]
        else:
            choices = _ideals(down, j, require_zero)
        for ideal in choices:
            below = 1 << j
            for i in _bits(ideal):
                below |= down[i]
            down[j] = below
            yield from place(j + 1)
        down[j] = 0

    yield from place(0)


def _canonical_key(down: list[int], n: int) -> int:
    """Least adjacency matrix over relabellings preserving order profiles."""
    up = [0] * n
    for i in range(n):
        for j in _bits(down[i]):
            up[j] |= 1 << i
    profile = {}
    for i in range(n):
        profile[i] = (bin(down[i]).count("1"), bin(up[i]).count("1"))
    classes: dict[tuple, list[int]] = {}
    for i in range(n):
        classes.setdefault(profile[i], []).append(i)
    groups = [classes[key] for key in sorted(classes)]

    best = None
    for parts in _group_permutations(groups):
        perm = [i for group in parts for i in group]
        key = 0
        bit = 1
        for a in perm:
            for b in perm:
                if (down[b] >> a) & 1:  # a <= b
                    key |= bit
                bit <<= 1
        if best is None or key < best:
            best = key
    assert best is not None
    return best


def _group_permutations(groups: list[list[int]]) -> Iterator[list[list[int]]]:
    if not groups:
        yield []
        return
    head, rest = groups[0], groups[1:]
    for head_perm in permutations(head):
        for tail in _group_permutations(rest):
            yield [list(head_perm)] + tail


def _poset_from_down(down: list[int], n: int) -> Poset:
    up = [0] * n
    for i in range(n):
        for j in _bits(down[i]):
            up[j] |= 1 << i
    covers = Poset._reduce(up, n, down)
    ids = [str(i) for i in range(n)]
    return Poset(ids, [(ids[i], ids[j]) for i, j in covers])


def _enumerate(max_elements: int, bounded: bool, graded_only: bool) -> Iterator[Poset]:
    for n in range(1, max_elements + 1):
        found: dict[int, list[int]] = {}
        for down in _natural_posets(n, bounded):
            key = _canonical_key(down, n)
            if key not in found:
                found[key] = down
        for key in sorted(found):
            p = _poset_from_down(found[key], n)
            if bounded and not p.is_bounded():
                continue
            if graded_only and p.graded_rank() is None:
                continue
            yield p


def enumerate_posets(max_elements: int) -> Iterator[Poset]:
    """Every poset with at most max_elements elements, up to isomorphism."""
    if max_elements > MAX_ELEMENTS:
        raise SizeLimit(f"poset enumeration is capped at {MAX_ELEMENTS} elements")
    return _enumerate(max_elements, bounded=False, graded_only=False)


def enumerate_bounded_posets(
    max_elements: int, graded_only: bool = False
) -> Iterator[Poset]:
    """Every bounded poset with at most max_elements elements, up to
    isomorphism, optionally restricted to graded ones.  Deterministic order:
    by size, then by canonical form."""
    if max_elements > MAX_ELEMENTS:
        raise SizeLimit(f"poset enumeration is capped at {MAX_ELEMENTS} elements")
    return _enumerate(max_elements, bounded=True, graded_only=graded_only)


def canonical_form(p: Poset) -> int:
    """Relabelling-invariant canonical key; equal keys on equal-sized posets
    mean isomorphic."""
    n = len(p)
    down = [p._down[i] for i in range(n)]
    return _canonical_key(down, n)


def are_isomorphic(p: Poset, q: Poset) -> bool:
    return len(p) == len(q) and canonical_form(p) == canonical_form(q)
