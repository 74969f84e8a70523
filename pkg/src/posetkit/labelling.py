"""Edge labellings and their structure: EL, rank-permutation EL, and
interpolating labellings, basic replacements, and the labelling induced by
a left modular maximal chain.

Label words are compared in standard word order, where a proper prefix
precedes its extensions; Python tuple comparison implements exactly that.
Increasing chains are weakly increasing; the interpolating condition asks
for strictly increasing labels on the explaining chain.  The two notions
are kept separate throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    NotComparable,
    NotELLabelled,
    NotGraded,
    NotLeftModular,
    PreconditionViolated,
)
from .order_ops import _greatest, _least
from .poset import Chain, CheckReport, ElementId, Poset, _bits


@dataclass(frozen=True)
class LabelSet:
    """A strictly increasing tuple of integer labels l_1 < ... < l_n."""

    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        for a, b in zip(values, values[1:]):
            if a >= b:
                raise ValueError(f"label set is not strictly increasing: {values}")

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]


class EdgeLabelling:
    """An integer label on every cover edge of a poset."""

    __slots__ = ("poset", "_labels", "_by_index")

    def __init__(self, poset: Poset, labels: Mapping[tuple[ElementId, ElementId], int]):
        missing = set(poset.cover_pairs) - set(labels)
        if missing:
            raise ValueError(f"unlabelled cover edges: {sorted(map(str, missing))[:3]}")
        extra = set(labels) - set(poset.cover_pairs)
        if extra:
            raise ValueError(f"labels on non-edges: {sorted(map(str, extra))[:3]}")
        self.poset = poset
        self._labels = {edge: int(labels[edge]) for edge in poset.cover_pairs}
        self._by_index = {
            (poset._index_of(a), poset._index_of(b)): v
            for (a, b), v in self._labels.items()
        }

    def label(self, a: ElementId, b: ElementId) -> int:
        try:
            return self._labels[(a, b)]
        except KeyError:
            raise KeyError(f"{a!r} -> {b!r} is not a cover edge") from None

    def items(self) -> Iterable[tuple[tuple[ElementId, ElementId], int]]:
        return ((edge, self._labels[edge]) for edge in self.poset.cover_pairs)

    def word(self, chain: Chain) -> tuple[int, ...]:
        """Label word of an unrefinable chain, read bottom to top."""
        return tuple(
            self.label(a, b) for a, b in zip(chain.nodes, chain.nodes[1:])
        )

    def shifted(self, offset: int) -> "EdgeLabelling":
        """Same labelling with every label moved by a constant."""
        return EdgeLabelling(
            self.poset, {edge: v + offset for edge, v in self._labels.items()}
        )

    def restrict_to(self, sub: Poset) -> "EdgeLabelling":
        """Restriction to a subposet whose covers are all edges of this poset."""
        return EdgeLabelling(
            sub, {(a, b): self.label(a, b) for a, b in sub.cover_pairs}
        )

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, EdgeLabelling)
            and self.poset is other.poset
            and self._labels == other._labels
        )

    def __hash__(self):
        return hash((id(self.poset), tuple(sorted(self._by_index.items()))))


def increasing_chains(lab: EdgeLabelling, y: ElementId, z: ElementId) -> list[Chain]:
    """All weakly increasing unrefinable chains from y to z."""
    p = lab.poset
    yi, zi = p._index_of(y), p._index_of(z)
    if not (p._up[yi] >> zi) & 1:
        raise NotComparable(f"{y!r} is not below {z!r}")
    down_z = p._down[zi]
    out: list[Chain] = []
    path = [yi]

    def walk(u: int, last: Optional[int]) -> None:
        if u == zi:
            out.append(Chain(p, tuple(p.elements[k] for k in path)))
            return
        for v in p._sorted_bits(p._children[u] & down_z):
            lbl = lab._by_index[(u, v)]
            if last is None or lbl >= last:
                path.append(v)
                walk(v, lbl)
                path.pop()

    walk(yi, None)
    return out


def increasing_chain(lab: EdgeLabelling, y: ElementId, z: ElementId) -> Optional[Chain]:
    """The unique weakly increasing unrefinable chain from y to z, if exactly
    one exists; None collapses both the zero and the many case."""
    found = increasing_chains(lab, y, z)
    return found[0] if len(found) == 1 else None


def is_el_labelling(lab: EdgeLabelling) -> CheckReport:
    """Every interval has a unique weakly increasing unrefinable chain whose
    label word strictly lexicographically precedes every other chain's word."""
    p = lab.poset
    for y, z in p.comparable_pairs():
        chains = p.maximal_chains(y, z)
        words = [lab.word(ch) for ch in chains]
        incs = [k for k, w in enumerate(words) if all(a <= b for a, b in zip(w, w[1:]))]
        if len(incs) != 1:
            kind = "no-increasing-chain" if not incs else "ambiguous-increasing-chain"
            return CheckReport(
                False,
                {
                    "kind": kind,
                    "interval": (y, z),
                    "chains": [chains[k].nodes for k in incs],
                },
                f"interval [{y!r}, {z!r}] has {len(incs)} increasing chains",
            )
        k0 = incs[0]
        for k, w in enumerate(words):
            if k != k0 and not words[k0] < w:
                return CheckReport(
                    False,
                    {
                        "kind": "not-lex-least",
                        "interval": (y, z),
                        "chains": [chains[k0].nodes, chains[k].nodes],
                    },
                    f"increasing chain of [{y!r}, {z!r}] is not lexicographically least",
                )
    return CheckReport(True)


def is_sn_el_labelling(lab: EdgeLabelling) -> CheckReport:
    """EL-labelling of a graded poset of rank n whose every maximal chain is
    labelled by a permutation of 1..n.

    The lexicographic minimality condition is redundant here, so only the
    uniqueness of the increasing chain is checked per interval.
    """
    p = lab.poset
    rank = p.graded_rank()
    if rank is None:
        raise NotGraded("poset is not graded")
    target = list(range(1, rank + 1))
    for ch in p.maximal_chains():
        w = lab.word(ch)
        if sorted(w) != target:
            return CheckReport(
                False,
                {"kind": "not-permutation", "chain": ch.nodes, "word": w},
                f"maximal chain labelled {w}, not a permutation of 1..{rank}",
            )
    for y, z in p.comparable_pairs():
        incs = increasing_chains(lab, y, z)
        if len(incs) != 1:
            return CheckReport(
                False,
                {
                    "kind": "no-increasing-chain" if not incs else "ambiguous-increasing-chain",
                    "interval": (y, z),
                    "chains": [c.nodes for c in incs],
                },
                f"interval [{y!r}, {z!r}] has {len(incs)} increasing chains",
            )
    return CheckReport(True)


def is_interpolating(lab: EdgeLabelling) -> CheckReport:
    """EL-labelling in which every descent y < u < z is explained by the
    increasing chain of [y, z]: strictly increasing labels, first label equal
    to the upper edge's, last equal to the lower edge's."""
    el = is_el_labelling(lab)
    if not el:
        return CheckReport(False, el.witness, "not an EL-labelling: " + el.note)
    p = lab.poset
    for y, u in p.cover_pairs:
        lo = lab.label(y, u)
        for z in p.upper_covers(u):
            hi = lab.label(u, z)
            if lo < hi:
                continue
            inc = increasing_chain(lab, y, z)
            w = lab.word(inc)
            ok = (
                all(a < b for a, b in zip(w, w[1:]))
                and w[0] == hi
                and w[-1] == lo
            )
            if not ok:
                return CheckReport(
                    False,
                    {"kind": "descent-not-interpolated", "triple": (y, u, z), "word": w},
                    f"descent {y!r} < {u!r} < {z!r} not explained by the increasing chain",
                )
    return CheckReport(True)


def basic_replacement_reduce(lab: EdgeLabelling, ch: Chain) -> Chain:
    """Repeatedly replace the lowest descent of the chain by the increasing
    chain of its length-2 interval until the chain is increasing.

    Each replacement must strictly decrease the label word; that decrease is
    asserted as the termination guard.
    """
    if not ch.is_unrefinable():
        raise PreconditionViolated("chain is not unrefinable")
    nodes = list(ch.nodes)
    word = list(lab.word(ch))
    while True:
        pos = next(
            (i for i in range(1, len(word)) if word[i - 1] > word[i]), None
        )
        if pos is None:
            return Chain(lab.poset, tuple(nodes))
        inc = increasing_chain(lab, nodes[pos - 1], nodes[pos + 1])
        if inc is None:
            raise NotELLabelled(
                f"interval [{nodes[pos - 1]!r}, {nodes[pos + 1]!r}] has no unique increasing chain"
            )
        new_nodes = nodes[: pos - 1] + list(inc.nodes) + nodes[pos + 2 :]
        new_word = word[: pos - 1] + list(lab.word(inc)) + word[pos + 1 :]
        assert tuple(new_word) < tuple(word), "label word failed to decrease"
        nodes, word = new_nodes, new_word


def _join_index(p: Poset, xi: int, up_y: int) -> Optional[int]:
    return _least(p, p._up[xi] & up_y)


def induce_labelling(
    p: Poset,
    m_chain: Chain,
    label_set: Sequence[int] | LabelSet | None = None,
    *,
    check_chain: bool = False,
) -> EdgeLabelling:
    """Labelling induced by a left modular maximal chain x_0 < ... < x_n.

    A cover edge y < z receives the i-th label where i is the first index
    with (x_i v y) ^_y z = z.  Two equivalent index formulas (the least j
    with x_j v y >= z, and one plus the greatest j with x_j ^ z <= y) are
    recomputed per edge and must agree; disagreement, or any undefined join,
    meet, or relative expression along the way, raises NotLeftModular.
    """
    if not m_chain.is_maximal():
        raise PreconditionViolated("chain is not a maximal chain of the poset")
    n = m_chain.length
    if label_set is None:
        ls = LabelSet(tuple(range(1, n + 1)))
    elif isinstance(label_set, LabelSet):
        ls = label_set
    else:
        ls = LabelSet(tuple(label_set))
    if len(ls) != n:
        raise PreconditionViolated(
            f"label set has {len(ls)} values for a chain of length {n}"
        )
    if check_chain:
        from .order_ops import is_left_modular_element

        for x in m_chain.nodes:
            rep = is_left_modular_element(p, x)
            if not rep:
                raise NotLeftModular(f"chain element {x!r} is not left modular: {rep.note}")

    xs = [p._index_of(x) for x in m_chain.nodes]
    labels: dict[tuple[ElementId, ElementId], int] = {}
    for y, z in p.cover_pairs:
        labels[(y, z)] = ls[_edge_index(p, xs, y, z) - 1]
    return EdgeLabelling(p, labels)


def _edge_index(p: Poset, xs: list[int], y: ElementId, z: ElementId) -> int:
    """1-based chain index assigned to the cover edge y < z, cross-checked."""
    yi, zi = p._index_of(y), p._index_of(z)
    up_y, down_z = p._up[yi], p._down[zi]
    i_first = None
    for j, xj in enumerate(xs):
        jv = _join_index(p, xj, up_y)
        if jv is None:
            raise NotLeftModular(
                f"join of chain element {p.elements[xj]!r} and {y!r} is undefined"
            )
        a = _greatest(p, up_y & p._down[jv] & down_z)
        if a is None:
            raise NotLeftModular(
                f"relative meet for edge {y!r} -> {z!r} at chain index {j} is undefined"
            )
        if a == zi:
            i_first = j
            break
        if a != yi:
            raise NotLeftModular(
                f"relative meet for cover edge {y!r} -> {z!r} left the edge"
            )
    if i_first is None:
        raise NotLeftModular(f"no chain index covers the edge {y!r} -> {z!r}")
    i_from_meets = None
    for j in range(len(xs) - 1, -1, -1):
        mv = _greatest(p, p._down[xs[j]] & down_z)
        if mv is None:
            raise NotLeftModular(
                f"meet of chain element {p.elements[xs[j]]!r} and {z!r} is undefined"
            )
        if (p._up[mv] >> yi) & 1:
            i_from_meets = j + 1
            break
    if i_first != i_from_meets:
        raise NotLeftModular(
            f"index formulas disagree on edge {y!r} -> {z!r}: "
            f"{i_first} from joins, {i_from_meets} from meets"
        )
    return i_first


@dataclass(frozen=True)
class InducedChain:
    """The chain (x_i v y) ^_y z of an interval, with its jump indices.

    jump_indices[k] is the first chain index whose relative expression equals
    the (k+1)-th node; relabelling the interval with the original labels at
    those indices reproduces the global labelling there.
    """

    chain: Chain
    jump_indices: tuple[int, ...]


def induced_interval_chain(
    p: Poset, m_chain: Chain, y: ElementId, z: ElementId
) -> InducedChain:
    """Deduplicated sequence y = (x_0 v y) ^_y z <= ... <= (x_n v y) ^_y z = z."""
    if not m_chain.is_maximal():
        raise PreconditionViolated("chain is not a maximal chain of the poset")
    yi, zi = p._index_of(y), p._index_of(z)
    if not (p._up[yi] >> zi) & 1:
        raise NotComparable(f"{y!r} is not below {z!r}")
    up_y, down_z = p._up[yi], p._down[zi]
    seq = []
    for x in m_chain.nodes:
        jv = _join_index(p, p._index_of(x), up_y)
        if jv is None:
            raise NotLeftModular(f"join of {x!r} and {y!r} is undefined")
        a = _greatest(p, up_y & p._down[jv] & down_z)
        if a is None:
            raise NotLeftModular(
                f"relative meet of {x!r} v {y!r} with {z!r} is undefined"
            )
        seq.append(a)
    nodes = [seq[0]]
    jumps = []
    for j in range(1, len(seq)):
        if seq[j] != seq[j - 1]:
            if not (p._up[seq[j - 1]] >> seq[j]) & 1:
                raise NotLeftModular("induced interval sequence is not increasing")
            nodes.append(seq[j])
            jumps.append(j)
    return InducedChain(
        Chain(p, tuple(p.elements[i] for i in nodes)), tuple(jumps)
    )
