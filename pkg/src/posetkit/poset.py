"""Finite bounded posets: construction, order queries, intervals, chains.

Element ids are opaque hashable tokens.  The order relation is cached densely
as one bitmask row per element, so every order query is a couple of integer
AND operations; everything is immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Hashable, Iterable, Iterator, Optional

from .errors import (
    CycleError,
    NotBounded,
    NotComparable,
    NotReducedError,
    UnknownElement,
)

ElementId = Hashable

_UNKNOWN_RANK = object()


def _bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _topological_order(succ: list[int], n: int) -> list[int]:
    indegree = [0] * n
    for i in range(n):
        for j in _bits(succ[i]):
            indegree[j] += 1
    ready = [i for i in range(n) if indegree[i] == 0]
    order: list[int] = []
    while ready:
        i = ready.pop()
        order.append(i)
        for j in _bits(succ[i]):
            indegree[j] -= 1
            if indegree[j] == 0:
                ready.append(j)
    if len(order) != n:
        raise CycleError("cover relation has a directed cycle")
    return order


@dataclass(frozen=True)
class CheckReport:
    """Outcome of a decision procedure.

    A false verdict always carries a witness that can be re-checked against
    the definitions without rerunning the procedure.
    """

    verdict: bool
    witness: Any = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.verdict


class Poset:
    """Immutable finite poset built from a cover relation.

    By default the constructor is strict: the input pairs must be acyclic and
    transitively reduced, anything else raises.  With ``auto_reduce=True`` an
    arbitrary (pre)order relation is accepted and reduced to its covers;
    cycles still raise.
    """

    __slots__ = (
        "_elements",
        "_index",
        "_up",
        "_down",
        "_children",
        "_parents",
        "_cover_pairs",
        "_sorted_positions",
        "_rank_cache",
    )

    def __init__(
        self,
        elements: Iterable[ElementId],
        cover_pairs: Iterable[tuple[ElementId, ElementId]],
        *,
        auto_reduce: bool = False,
    ):
        elems = tuple(elements)
        index: dict[ElementId, int] = {}
        for pos, e in enumerate(elems):
            if e in index:
                raise ValueError(f"duplicate element id: {e!r}")
            index[e] = pos
        n = len(elems)

        pairs: list[tuple[int, int]] = []
        for a, b in cover_pairs:
            if a not in index:
                raise UnknownElement(f"unknown element in cover pair: {a!r}")
            if b not in index:
                raise UnknownElement(f"unknown element in cover pair: {b!r}")
            pairs.append((index[a], index[b]))

        succ = [0] * n
        for i, j in pairs:
            if i == j:
                if auto_reduce:
                    continue
                raise CycleError(f"self-cover on {elems[i]!r}")
            succ[i] |= 1 << j
        order = _topological_order(succ, n)
        up = [0] * n
        for i in reversed(order):
            acc = 1 << i
            for j in _bits(succ[i]):
                acc |= up[j]
            up[i] = acc
        down = [0] * n
        for i in range(n):
            for j in _bits(up[i]):
                down[j] |= 1 << i

        if auto_reduce:
            cover_idx = self._reduce(up, n, down)
        else:
            cover_idx = sorted(set(pairs))
            for i, j in cover_idx:
                between = up[i] & down[j] & ~(1 << i) & ~(1 << j)
                if between:
                    k = next(_bits(between))
                    raise NotReducedError(
                        f"cover {elems[i]!r} -> {elems[j]!r} is implied via {elems[k]!r}"
                    )

        children = [0] * n
        parents = [0] * n
        for i, j in cover_idx:
            children[i] |= 1 << j
            parents[j] |= 1 << i

        self._elements = elems
        self._index = index
        self._up = up
        self._down = down
        self._children = children
        self._parents = parents
        skey = {i: (str(elems[i]), i) for i in range(n)}
        self._sorted_positions = sorted(range(n), key=skey.__getitem__)
        self._cover_pairs = tuple(
            (elems[i], elems[j])
            for i, j in sorted(cover_idx, key=lambda ij: (skey[ij[0]], skey[ij[1]]))
        )
        self._rank_cache = _UNKNOWN_RANK

    @staticmethod
    def _reduce(
        up: list[int], n: int, down: list[int] | None = None
    ) -> list[tuple[int, int]]:
        """Transitive reduction of a reflexive transitive relation."""
        if down is None:
            down = [0] * n
            for i in range(n):
                for j in _bits(up[i]):
                    down[j] |= 1 << i
        covers = []
        for i in range(n):
            strict_up = up[i] & ~(1 << i)
            for j in _bits(strict_up):
                if not strict_up & down[j] & ~(1 << j):
                    covers.append((i, j))
        return covers

    # -- basic queries -------------------------------------------------

    @property
    def elements(self) -> tuple[ElementId, ...]:
        return self._elements

    @property
    def cover_pairs(self) -> tuple[tuple[ElementId, ElementId], ...]:
        return self._cover_pairs

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[ElementId]:
        return iter(self._elements)

    def __contains__(self, e: ElementId) -> bool:
        return e in self._index

    def __repr__(self) -> str:
        return f"Poset({len(self)} elements, {len(self._cover_pairs)} covers)"

    def _index_of(self, e: ElementId) -> int:
        try:
            return self._index[e]
        except KeyError:
            raise UnknownElement(f"unknown element: {e!r}") from None

    def leq(self, a: ElementId, b: ElementId) -> bool:
        """True iff a <= b."""
        return (self._up[self._index_of(a)] >> self._index_of(b)) & 1 == 1

    def lt(self, a: ElementId, b: ElementId) -> bool:
        return a != b and self.leq(a, b)

    def comparable(self, a: ElementId, b: ElementId) -> bool:
        return self.leq(a, b) or self.leq(b, a)

    def upset(self, a: ElementId) -> tuple[ElementId, ...]:
        """All b with a <= b, in element order."""
        return tuple(self._elements[i] for i in _bits(self._up[self._index_of(a)]))

    def downset(self, a: ElementId) -> tuple[ElementId, ...]:
        return tuple(self._elements[i] for i in _bits(self._down[self._index_of(a)]))

    def upper_covers(self, a: ElementId) -> tuple[ElementId, ...]:
        i = self._index_of(a)
        return tuple(self._elements[j] for j in self._sorted_bits(self._children[i]))

    def lower_covers(self, a: ElementId) -> tuple[ElementId, ...]:
        i = self._index_of(a)
        return tuple(self._elements[j] for j in self._sorted_bits(self._parents[i]))

    def _sorted_bits(self, mask: int) -> list[int]:
        return sorted(_bits(mask), key=lambda i: (str(self._elements[i]), i))

    def minimal_elements(self) -> tuple[ElementId, ...]:
        return tuple(
            self._elements[i] for i in range(len(self)) if self._parents[i] == 0
        )

    def maximal_elements(self) -> tuple[ElementId, ...]:
        return tuple(
            self._elements[i] for i in range(len(self)) if self._children[i] == 0
        )

    def is_bounded(self) -> bool:
        return len(self) > 0 and len(self.minimal_elements()) == 1 and len(self.maximal_elements()) == 1

    def bottom(self) -> ElementId:
        mins = self.minimal_elements()
        if len(mins) != 1:
            raise NotBounded(f"poset has {len(mins)} minimal elements")
        return mins[0]

    def top(self) -> ElementId:
        maxs = self.maximal_elements()
        if len(maxs) != 1:
            raise NotBounded(f"poset has {len(maxs)} maximal elements")
        return maxs[0]

    def comparable_pairs(self) -> Iterator[tuple[ElementId, ElementId]]:
        """All ordered pairs (a, b) with a < b, in element order."""
        for i in range(len(self)):
            strict = self._up[i] & ~(1 << i)
            for j in _bits(strict):
                yield self._elements[i], self._elements[j]

    # -- subposets -----------------------------------------------------

    def subposet(self, keep: Iterable[ElementId]) -> "Poset":
        """Induced subposet on the given elements, covers recomputed.

        The covers of the result are the transitive reduction of the
        restricted order; they need not be covers of the parent.
        """
        keep_idx = sorted({self._index_of(e) for e in keep})
        mask = 0
        for i in keep_idx:
            mask |= 1 << i
        remap = {i: pos for pos, i in enumerate(keep_idx)}
        sub_up = []
        for i in keep_idx:
            acc = 0
            for j in _bits(self._up[i] & mask):
                acc |= 1 << remap[j]
            sub_up.append(acc)
        covers = Poset._reduce(sub_up, len(keep_idx))
        elems = [self._elements[i] for i in keep_idx]
        return Poset(elems, [(elems[i], elems[j]) for i, j in covers])

    def interval(self, y: ElementId, z: ElementId) -> "Poset":
        """The induced subposet on {u : y <= u <= z}."""
        yi, zi = self._index_of(y), self._index_of(z)
        if not (self._up[yi] >> zi) & 1:
            raise NotComparable(f"{y!r} is not below {z!r}")
        mask = self._up[yi] & self._down[zi]
        return self.subposet(self._elements[i] for i in _bits(mask))

    # -- chains ----------------------------------------------------------

    def chain(self, nodes: Iterable[ElementId]) -> "Chain":
        return Chain(self, tuple(nodes))

    def maximal_chains(
        self, y: Optional[ElementId] = None, z: Optional[ElementId] = None
    ) -> list["Chain"]:
        """Every unrefinable chain from y to z, each exactly once.

        Defaults to the bottom and top of a bounded poset.  Deterministic
        order: depth-first with cover successors sorted by element id.
        """
        if y is None:
            y = self.bottom()
        if z is None:
            z = self.top()
        yi, zi = self._index_of(y), self._index_of(z)
        if not (self._up[yi] >> zi) & 1:
            raise NotComparable(f"{y!r} is not below {z!r}")
        down_z = self._down[zi]
        out: list[Chain] = []
        path = [yi]

        def walk(u: int) -> None:
            if u == zi:
                out.append(Chain(self, tuple(self._elements[k] for k in path)))
                return
            for v in self._sorted_bits(self._children[u] & down_z):
                path.append(v)
                walk(v)
                path.pop()

        walk(yi)
        return out

    def all_chains(self, include_empty: bool = False) -> Iterator["Chain"]:
        """Every chain of the poset (totally ordered subset), each once."""
        if include_empty:
            yield Chain(self, ())
        order = self._sorted_positions
        path: list[int] = []

        def walk(last: int) -> Iterator[Chain]:
            yield Chain(self, tuple(self._elements[k] for k in path))
            strict_up = self._up[last] & ~(1 << last)
            for v in order:
                if (strict_up >> v) & 1:
                    path.append(v)
                    yield from walk(v)
                    path.pop()

        for start in order:
            path.append(start)
            yield from walk(start)
            path.pop()

    def graded_rank(self) -> Optional[int]:
        """Common length of all maximal chains, or None if they differ."""
        if self._rank_cache is _UNKNOWN_RANK:
            lengths = {ch.length for ch in self.maximal_chains()}
            self._rank_cache = lengths.pop() if len(lengths) == 1 else None
        return self._rank_cache

    def order_pairs(self) -> frozenset[tuple[ElementId, ElementId]]:
        """The full order relation as a set of (lower, upper) pairs."""
        return frozenset(
            (self._elements[i], self._elements[j])
            for i in range(len(self))
            for j in _bits(self._up[i])
        )


def build_poset(
    elements: Iterable[ElementId],
    cover_pairs: Iterable[tuple[ElementId, ElementId]],
    *,
    auto_reduce: bool = False,
) -> Poset:
    """Construct a poset from elements and cover pairs.

    Strict by default: rejects cyclic input (CycleError) and transitively
    implied pairs (NotReducedError).  With auto_reduce=True an arbitrary
    relation is transitively reduced instead.
    """
    return Poset(elements, cover_pairs, auto_reduce=auto_reduce)


@dataclass(frozen=True)
class Chain:
    """A strictly increasing sequence of elements of a poset.

    May be empty.  Unrefinable and maximal chains are recognized by the
    predicates below, not enforced at construction.
    """

    poset: Poset
    nodes: tuple[ElementId, ...]

    def __post_init__(self):
        nodes = tuple(self.nodes)
        object.__setattr__(self, "nodes", nodes)
        for a, b in zip(nodes, nodes[1:]):
            if not self.poset.lt(a, b):
                raise NotComparable(f"{a!r} is not strictly below {b!r}")
        for e in nodes:
            self.poset._index_of(e)

    @property
    def length(self) -> int:
        """Number of steps; the empty chain has length -1 by convention."""
        return len(self.nodes) - 1

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[ElementId]:
        return iter(self.nodes)

    def __contains__(self, e: ElementId) -> bool:
        return e in self.nodes

    def is_unrefinable(self) -> bool:
        p = self.poset
        return all(
            (p._children[p._index_of(a)] >> p._index_of(b)) & 1
            for a, b in zip(self.nodes, self.nodes[1:])
        )

    def is_maximal(self) -> bool:
        """Unrefinable and running from the bottom to the top of the poset."""
        if not self.nodes:
            return False
        p = self.poset
        return (
            self.nodes[0] == p.bottom()
            and self.nodes[-1] == p.top()
            and self.is_unrefinable()
        )
