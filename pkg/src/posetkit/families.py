"""Generators for the classical lattice families and their edge labellings.

Set partitions of {1..n} are ordered by refinement.  The partition lattice
has covers that merge exactly two blocks, labelled by the larger of the two
block minima.  The non-crossing lattice restricts to non-crossing partitions
with the same labels.  The non-straddling lattice restricts to partitions
with no straddle (a < b < c < d with a, d in one block and b, c in another);
it is generally not graded, its covers can merge several blocks at once, and
a cover is labelled by the second smallest of the merged block minima.

The Tamari lattice is realized on full binary trees whose covers are single
right rotations, and the lattice of order ideals of a vertex-labelled poset
carries the labelling by the added vertex.

Domain objects are registered under their canonical string rendering, so the
poset machinery only ever sees opaque ids; `SetPartition.parse` inverts the
registry for partitions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .errors import NotLinearExtension, NotNonStraddling, SizeLimit
from .labelling import EdgeLabelling
from .poset import Chain, ElementId, Poset

FAMILY_SIZE_CAP = 8


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..n} into blocks, stored canonically: blocks sorted by
    their minima, elements ascending inside each block."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        canon = tuple(sorted((tuple(sorted(b)) for b in blocks), key=lambda b: b[0]))
        seen: set[int] = set()
        for b in canon:
            if not b:
                raise ValueError("empty block")
            for x in b:
                if x in seen:
                    raise ValueError(f"element {x} appears in two blocks")
                seen.add(x)
        if seen != set(range(1, n + 1)):
            raise ValueError(f"blocks do not partition 1..{n}: {sorted(seen)}")
        return cls(n, canon)

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls.from_blocks(n, ([x] for x in range(1, n + 1)))

    @classmethod
    def full(cls, n: int) -> "SetPartition":
        return cls.from_blocks(n, [range(1, n + 1)])

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        """Parse a partition literal: blocks separated by '/', elements by
        ',', braces optional ('1,4/2,5/3,6' or '{1,4}{2,5}{3,6}')."""
        s = text.strip()
        if "{" in s:
            parts = re.findall(r"\{([^{}]*)\}", s)
        else:
            parts = s.split("/")
        blocks = []
        for part in parts:
            items = [t for t in re.split(r"[,\s]+", part.strip()) if t]
            if items:
                blocks.append([int(t) for t in items])
        if not blocks:
            raise ValueError(f"empty partition literal: {text!r}")
        n = max(max(b) for b in blocks)
        return cls.from_blocks(n, blocks)

    def __str__(self) -> str:
        return "/".join(",".join(str(x) for x in b) for b in self.blocks)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    @property
    def block_minima(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)

    def block_containing(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"{x} is not in 1..{self.n}")

    def refines(self, other: "SetPartition") -> bool:
        """True iff every block of self lies inside a block of other."""
        if self.n != other.n:
            return False
        owner = {}
        for i, b in enumerate(other.blocks):
            for x in b:
                owner[x] = i
        return all(len({owner[x] for x in b}) == 1 for b in self.blocks)

    def merge_blocks_at(self, indices: Iterable[int]) -> "SetPartition":
        idx = set(indices)
        merged = sorted(x for i in idx for x in self.blocks[i])
        rest = [b for i, b in enumerate(self.blocks) if i not in idx]
        return SetPartition.from_blocks(self.n, rest + [merged])

    def merge_blocks_by_minima(self, minima: Iterable[int]) -> "SetPartition":
        wanted = set(minima)
        present = set(self.block_minima)
        if not wanted <= present:
            raise ValueError(f"{sorted(wanted - present)} are not block minima")
        return self.merge_blocks_at(
            i for i, b in enumerate(self.blocks) if b[0] in wanted
        )

    def pi_join(self, other: "SetPartition") -> "SetPartition":
        """Join in the full partition lattice: finest common coarsening."""
        if self.n != other.n:
            raise ValueError("ground sets differ")
        parent = list(range(self.n + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for part in (self, other):
            for b in part.blocks:
                for x in b[1:]:
                    parent[find(x)] = find(b[0])
        groups: dict[int, list[int]] = {}
        for x in range(1, self.n + 1):
            groups.setdefault(find(x), []).append(x)
        return SetPartition.from_blocks(self.n, groups.values())

    def pi_meet(self, other: "SetPartition") -> "SetPartition":
        """Meet in the full partition lattice: blockwise intersections."""
        if self.n != other.n:
            raise ValueError("ground sets differ")
        blocks = []
        for b in self.blocks:
            for c in other.blocks:
                inter = sorted(set(b) & set(c))
                if inter:
                    blocks.append(inter)
        return SetPartition.from_blocks(self.n, blocks)

    def straddle_witness(self) -> Optional[tuple[int, int]]:
        """Indices of two blocks forming a straddle, or None.

        Blocks B (outer) and C (inner) straddle when C has at least two
        elements strictly between min B and max B; the quadruple
        (min B, c1, c2, max B) is then a straddle.
        """
        for i, j in combinations(range(len(self.blocks)), 2):
            for outer, inner in ((i, j), (j, i)):
                lo, hi = self.blocks[outer][0], self.blocks[outer][-1]
                inside = sum(1 for x in self.blocks[inner] if lo < x < hi)
                if inside >= 2:
                    return (i, j)
        return None

    @property
    def is_straddling(self) -> bool:
        return self.straddle_witness() is not None

    @property
    def is_noncrossing(self) -> bool:
        """No a < b < c < d with a, c in one block and b, d in another.

        Two blocks cross exactly when their merged ownership sequence
        alternates at least four times.
        """
        for b, c in combinations(self.blocks, 2):
            tagged = sorted([(x, 0) for x in b] + [(x, 1) for x in c])
            runs = 1
            for (_, s), (_, t) in zip(tagged, tagged[1:]):
                if s != t:
                    runs += 1
            if runs >= 4:
                return False
        return True


def all_set_partitions(n: int) -> list[SetPartition]:
    """Every partition of {1..n}, in a deterministic insertion order."""
    shapes: list[list[list[int]]] = [[]]
    for x in range(1, n + 1):
        grown = []
        for shape in shapes:
            for i in range(len(shape)):
                grown.append([b + [x] if j == i else b for j, b in enumerate(shape)])
            grown.append(shape + [[x]])
        shapes = grown
    return [SetPartition.from_blocks(n, shape) for shape in shapes]


def is_straddling(x: SetPartition) -> bool:
    return x.is_straddling


def straddle_closure(x: SetPartition) -> SetPartition:
    """Merge straddling block pairs until no straddle remains."""
    while True:
        w = x.straddle_witness()
        if w is None:
            return x
        x = x.merge_blocks_at(w)


def ns_join_closure(y: SetPartition, z: SetPartition) -> SetPartition:
    """Join of two non-straddling partitions inside the non-straddling
    lattice: the full-lattice join followed by forced merges.

    Any non-straddling upper bound must merge every straddling pair, so the
    closure is below every upper bound and is itself non-straddling.
    """
    if y.is_straddling:
        raise NotNonStraddling(f"{y} is straddling")
    if z.is_straddling:
        raise NotNonStraddling(f"{z} is straddling")
    return straddle_closure(y.pi_join(z))


def ns_merge_closure(y: SetPartition, minima: Iterable[int]) -> SetPartition:
    """Least non-straddling coarsening of y with the designated blocks (named
    by their minima) in a single block."""
    if y.is_straddling:
        raise NotNonStraddling(f"{y} is straddling")
    return straddle_closure(y.merge_blocks_by_minima(minima))


def _merged_groups(y: SetPartition, z: SetPartition) -> list[list[tuple[int, ...]]]:
    """For y < z, the z-blocks seen as groups of >= 2 merged y-blocks."""
    owner = {}
    for i, b in enumerate(z.blocks):
        for x in b:
            owner[x] = i
    groups: dict[int, list[tuple[int, ...]]] = {}
    for b in y.blocks:
        groups.setdefault(owner[b[0]], []).append(b)
    return [g for g in groups.values() if len(g) >= 2]


def refinement_cover_label(y: SetPartition, z: SetPartition) -> int:
    """Label of a two-block merge: the larger of the two block minima."""
    groups = _merged_groups(y, z)
    if len(groups) != 1 or len(groups[0]) != 2:
        raise ValueError(f"{z} does not cover {y} by merging exactly two blocks")
    return max(b[0] for b in groups[0])


def nonstraddling_cover_label(y: SetPartition, z: SetPartition) -> int:
    """Label of a non-straddling cover: the second smallest of the minima of
    the blocks merged into the single new block."""
    groups = _merged_groups(y, z)
    if len(groups) != 1:
        raise ValueError(f"{z} does not cover {y} by merging a single group")
    minima = sorted(b[0] for b in groups[0])
    return minima[1]


def _check_family_size(n: int) -> None:
    if not 1 <= n <= FAMILY_SIZE_CAP:
        raise SizeLimit(f"family size {n} outside 1..{FAMILY_SIZE_CAP}")


def _partition_sort_key(x: SetPartition) -> tuple[int, str]:
    return (-x.num_blocks, str(x))


@lru_cache(maxsize=None)
def partition_lattice(n: int) -> tuple[Poset, EdgeLabelling]:
    """The lattice of partitions of {1..n} under refinement, with the cover
    labelling by the larger merged block minimum (label set {2..n})."""
    _check_family_size(n)
    parts = sorted(all_set_partitions(n), key=_partition_sort_key)
    covers = []
    labels = {}
    for y in parts:
        for i, j in combinations(range(y.num_blocks), 2):
            z = y.merge_blocks_at((i, j))
            edge = (str(y), str(z))
            covers.append(edge)
            labels[edge] = max(y.blocks[i][0], y.blocks[j][0])
    poset = Poset([str(x) for x in parts], covers)
    return poset, EdgeLabelling(poset, labels)


def _refinement_subposet(parts: Sequence[SetPartition]) -> Poset:
    """Poset on the given partitions under refinement, covers recomputed by
    transitive reduction of the restricted order."""
    parts = sorted(parts, key=_partition_sort_key)
    m = len(parts)
    up = [0] * m
    for i, y in enumerate(parts):
        for j, z in enumerate(parts):
            if y.refines(z):
                up[i] |= 1 << j
    covers = Poset._reduce(up, m)
    ids = [str(x) for x in parts]
    return Poset(ids, [(ids[i], ids[j]) for i, j in covers])


@lru_cache(maxsize=None)
def noncrossing_lattice(n: int) -> tuple[Poset, EdgeLabelling]:
    """The lattice of non-crossing partitions of {1..n} under refinement,
    carrying the restriction of the partition-lattice labelling."""
    _check_family_size(n)
    parts = [x for x in all_set_partitions(n) if x.is_noncrossing]
    poset = _refinement_subposet(parts)
    labels = {
        (a, b): refinement_cover_label(SetPartition.parse(a), SetPartition.parse(b))
        for a, b in poset.cover_pairs
    }
    return poset, EdgeLabelling(poset, labels)


@lru_cache(maxsize=None)
def nonstraddling_lattice(n: int) -> tuple[Poset, EdgeLabelling]:
    """The lattice of non-straddling partitions of {1..n} under refinement.

    Each cover edge merges a single group of blocks; its label is the second
    smallest merged block minimum.  Two equivalent descriptions of the label
    (the smallest lost block minimum, and the smallest two-block-merge label
    inside the full-lattice interval) are recomputed and must agree on every
    edge.
    """
    _check_family_size(n)
    parts = [x for x in all_set_partitions(n) if not x.is_straddling]
    poset = _refinement_subposet(parts)
    labels = {}
    for a, b in poset.cover_pairs:
        y, z = SetPartition.parse(a), SetPartition.parse(b)
        value = nonstraddling_cover_label(y, z)
        lost = sorted(set(y.block_minima) - set(z.block_minima))
        if not lost or lost[0] != value:
            raise AssertionError(
                f"lost-minimum label {lost[:1]} disagrees with {value} on {a} -> {b}"
            )
        if _least_interval_merge_label(y, z) != value:
            raise AssertionError(
                f"interval least-label disagrees with {value} on {a} -> {b}"
            )
        labels[(a, b)] = value
    return poset, EdgeLabelling(poset, labels)


def _least_interval_merge_label(y: SetPartition, z: SetPartition) -> int:
    """Smallest two-block-merge label occurring in the full-lattice interval
    [y, z], computed by enumerating the interval through the merged group."""
    groups = _merged_groups(y, z)
    if len(groups) != 1:
        raise ValueError(f"{z} does not cover {y} by merging a single group")
    minima = sorted(b[0] for b in groups[0])
    r = len(minima)
    best = None
    for mid in all_set_partitions(r):
        for i, j in combinations(range(mid.num_blocks), 2):
            lo = min(minima[k - 1] for k in mid.blocks[i])
            hi = min(minima[k - 1] for k in mid.blocks[j])
            value = max(lo, hi)
            if best is None or value < best:
                best = value
    assert best is not None
    return best


def prefix_merge_chain(poset: Poset, n: int) -> Chain:
    """The maximal chain whose i-th node has {1..i} as its only non-singleton
    block; it is the increasing maximal chain of the partition families."""
    nodes = []
    for i in range(1, n + 1):
        blocks = [list(range(1, i + 1))] + [[x] for x in range(i + 1, n + 1)]
        nodes.append(str(SetPartition.from_blocks(n, blocks)))
    return Chain(poset, tuple(nodes))


# -- binary trees and the Tamari lattice --------------------------------

Shape = Optional[tuple]  # None is a leaf; an internal node is (left, right)


@dataclass(frozen=True)
class BinaryTree:
    """Full binary tree; the shape is nested pairs with None leaves."""

    shape: Shape

    @property
    def internal_nodes(self) -> int:
        return _count_internal(self.shape)

    def __str__(self) -> str:
        return _shape_str(self.shape)


def _count_internal(shape: Shape) -> int:
    if shape is None:
        return 0
    return 1 + _count_internal(shape[0]) + _count_internal(shape[1])


def _shape_str(shape: Shape) -> str:
    if shape is None:
        return "o"
    return f"({_shape_str(shape[0])}{_shape_str(shape[1])})"


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple[Shape, ...]:
    if n == 0:
        return (None,)
    out = []
    for k in range(n):
        for left in _shapes(k):
            for right in _shapes(n - 1 - k):
                out.append((left, right))
    return tuple(out)


def all_binary_trees(n: int) -> list[BinaryTree]:
    return [BinaryTree(s) for s in _shapes(n)]


def _rotations(shape: Shape) -> list[Shape]:
    """All shapes reachable by one right rotation: ((A,B),C) -> (A,(B,C))."""
    if shape is None:
        return []
    left, right = shape
    out = []
    if left is not None:
        a, b = left
        out.append((a, (b, right)))
    out.extend((nl, right) for nl in _rotations(left))
    out.extend((left, nr) for nr in _rotations(right))
    return out


@lru_cache(maxsize=None)
def tamari_lattice(n: int) -> Poset:
    """Rotation order on full binary trees with n internal nodes: covers are
    single right rotations, the bottom is the left comb, the top the right
    comb."""
    _check_family_size(n)
    trees = _shapes(n)
    ids = [_shape_str(t) for t in trees]
    covers = []
    for t, a in zip(trees, ids):
        for r in _rotations(t):
            covers.append((a, _shape_str(r)))
    return Poset(ids, covers)


# -- lattices of order ideals --------------------------------------------


def ideal_lattice(
    q: Poset, omega: Mapping[ElementId, int]
) -> tuple[Poset, EdgeLabelling]:
    """The lattice of order ideals of q under inclusion, with each cover
    labelled by the vertex label of the element it adds.

    omega must be a linear extension: a bijection onto 1..len(q) with
    omega(a) < omega(b) whenever a < b in q.
    """
    n = len(q)
    if set(omega) != set(q.elements) or sorted(omega.values()) != list(range(1, n + 1)):
        raise NotLinearExtension("vertex labelling is not a bijection onto 1..n")
    for a, b in q.comparable_pairs():
        if omega[a] >= omega[b]:
            raise NotLinearExtension(
                f"omega({a!r}) = {omega[a]} is not below omega({b!r}) = {omega[b]}"
            )

    def ideal_id(ideal: frozenset) -> str:
        return "{" + ",".join(str(v) for v in sorted(omega[e] for e in ideal)) + "}"

    below = {e: frozenset(q.downset(e)) - {e} for e in q.elements}
    start: frozenset = frozenset()
    seen = {start}
    frontier = [start]
    covers = []
    labels = {}
    while frontier:
        ideal = frontier.pop()
        for e in q.elements:
            if e not in ideal and below[e] <= ideal:
                bigger = ideal | {e}
                edge = (ideal_id(ideal), ideal_id(bigger))
                covers.append(edge)
                labels[edge] = omega[e]
                if bigger not in seen:
                    seen.add(bigger)
                    frontier.append(bigger)
    def size_key(s: str) -> tuple[int, str]:
        return (0 if s == "{}" else s.count(",") + 1, s)

    ids = sorted({ideal_id(i) for i in seen}, key=size_key)
    poset = Poset(ids, covers)
    return poset, EdgeLabelling(poset, labels)
