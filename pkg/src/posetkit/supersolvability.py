"""Chain closures, distributivity testing, and the supersolvability decision.

A bounded poset is supersolvable with M-chain M when M is a viable maximal
chain and the closure of M together with any chain c under the two relative
expressions is a distributive lattice.  The companion closure under taking
increasing chains gives the same element sets on supersolvable posets.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .errors import NotBounded, NotELLabelled, NotViable, SizeLimit
from .labelling import EdgeLabelling, increasing_chain
from .order_ops import _greatest, _least, viable_elements
from .poset import Chain, CheckReport, ElementId, Poset, _bits


@dataclass(frozen=True)
class ClosureResult:
    """Closed subposet together with its generators and iteration count."""

    subposet: Poset
    generators: tuple[Chain, ...]
    steps: int

    @property
    def element_set(self) -> frozenset[ElementId]:
        return frozenset(self.subposet.elements)


def r_closure(p: Poset, m_chain: Chain, c: Chain | None = None) -> ClosureResult:
    """Smallest element set containing the viable maximal chain and c that is
    closed under (x v y) ^_y z and (x ^ z) v^z y for x on the chain and
    comparable pairs y <= z inside the set."""
    if c is None:
        c = Chain(p, ())
    xs = [p._index_of(x) for x in m_chain.nodes]
    mask = 0
    for e in list(m_chain.nodes) + list(c.nodes):
        mask |= 1 << p._index_of(e)
    steps = 0
    while True:
        steps += 1
        new_mask = mask
        members = list(_bits(mask))
        for yi in members:
            up_y = p._up[yi]
            for zi in members:
                if not (up_y >> zi) & 1:
                    continue
                down_z = p._down[zi]
                for xj in xs:
                    jv = _least(p, p._up[xj] & up_y)
                    if jv is None:
                        raise NotViable(
                            f"join of {p.elements[xj]!r} and {p.elements[yi]!r} is undefined"
                        )
                    e1 = _greatest(p, up_y & p._down[jv] & down_z)
                    if e1 is None:
                        raise NotViable(
                            f"relative meet at ({p.elements[xj]!r}, {p.elements[yi]!r}, "
                            f"{p.elements[zi]!r}) is undefined"
                        )
                    mv = _greatest(p, p._down[xj] & down_z)
                    if mv is None:
                        raise NotViable(
                            f"meet of {p.elements[xj]!r} and {p.elements[zi]!r} is undefined"
                        )
                    e2 = _least(p, down_z & p._up[mv] & up_y)
                    if e2 is None:
                        raise NotViable(
                            f"relative join at ({p.elements[xj]!r}, {p.elements[yi]!r}, "
                            f"{p.elements[zi]!r}) is undefined"
                        )
                    new_mask |= (1 << e1) | (1 << e2)
        if new_mask == mask:
            break
        mask = new_mask
    sub = p.subposet(p.elements[i] for i in _bits(mask))
    return ClosureResult(sub, (m_chain, c), steps)


def q_closure(p: Poset, lab: EdgeLabelling, m_chain: Chain, m: Chain) -> ClosureResult:
    """Smallest element set containing both maximal chains that contains the
    increasing chain between every comparable pair of its members."""
    mask = 0
    for e in list(m_chain.nodes) + list(m.nodes):
        mask |= 1 << p._index_of(e)
    steps = 0
    while True:
        steps += 1
        new_mask = mask
        members = [p.elements[i] for i in _bits(mask)]
        for y in members:
            for z in members:
                if y != z and p.leq(y, z):
                    inc = increasing_chain(lab, y, z)
                    if inc is None:
                        raise NotELLabelled(
                            f"interval [{y!r}, {z!r}] has no unique increasing chain"
                        )
                    for u in inc.nodes:
                        new_mask |= 1 << p._index_of(u)
        if new_mask == mask:
            break
        mask = new_mask
    sub = p.subposet(p.elements[i] for i in _bits(mask))
    return ClosureResult(sub, (m_chain, m), steps)


def increasing_extension(lab: EdgeLabelling, c: Chain) -> Chain:
    """The maximal chain containing c with increasing labels between the
    successive elements of c extended by the bottom and top."""
    p = lab.poset
    anchors = [p.bottom()] + [e for e in c.nodes] + [p.top()]
    dedup = [anchors[0]]
    for e in anchors[1:]:
        if e != dedup[-1]:
            dedup.append(e)
    nodes = [dedup[0]]
    for u, v in zip(dedup, dedup[1:]):
        inc = increasing_chain(lab, u, v)
        if inc is None:
            raise NotELLabelled(f"interval [{u!r}, {v!r}] has no unique increasing chain")
        nodes.extend(inc.nodes[1:])
    return Chain(p, tuple(nodes))


def is_distributive_lattice(p: Poset) -> CheckReport:
    """Every pair has a meet and a join and meet distributes over join."""
    n = len(p)
    ids = p.elements
    meet_t = [[0] * n for _ in range(n)]
    join_t = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            mv = _greatest(p, p._down[i] & p._down[j])
            if mv is None:
                return CheckReport(
                    False,
                    {"kind": "meet-undefined", "pair": (ids[i], ids[j])},
                    f"{ids[i]!r} and {ids[j]!r} have no meet",
                )
            jv = _least(p, p._up[i] & p._up[j])
            if jv is None:
                return CheckReport(
                    False,
                    {"kind": "join-undefined", "pair": (ids[i], ids[j])},
                    f"{ids[i]!r} and {ids[j]!r} have no join",
                )
            meet_t[i][j] = meet_t[j][i] = mv
            join_t[i][j] = join_t[j][i] = jv
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = meet_t[x][join_t[y][z]]
                rhs = join_t[meet_t[x][y]][meet_t[x][z]]
                if lhs != rhs:
                    return CheckReport(
                        False,
                        {
                            "kind": "not-distributive",
                            "triple": (ids[x], ids[y], ids[z]),
                            "lhs": ids[lhs],
                            "rhs": ids[rhs],
                        },
                        f"x^(yvz) != (x^y)v(x^z) at ({ids[x]!r}, {ids[y]!r}, {ids[z]!r})",
                    )
    return CheckReport(True)


def _sampled_subchains(maximal: list[Chain], rng: random.Random, per_chain: int) -> list[Chain]:
    out = []
    for m in maximal:
        nodes = m.nodes
        for _ in range(per_chain):
            k = rng.randint(1, len(nodes))
            picked = sorted(rng.sample(range(len(nodes)), k))
            out.append(Chain(m.poset, tuple(nodes[i] for i in picked)))
    return out


def _chain_universe(p: Poset, scope: str, maximal: list[Chain]) -> list[Chain]:
    if scope == "auto":
        scope = "all" if len(p) <= 10 else "maximal"
    if scope == "all":
        return list(p.all_chains(include_empty=True))
    if scope == "maximal":
        # Closing over a subchain yields a subset of closing over its
        # extension, so maximal chains carry the load; short subchains and a
        # deterministic random sample double-check that reduction.
        chains: list[Chain] = [Chain(p, ())]
        singles = {(e,) for e in p}
        pairs = set()
        for m in maximal:
            for a, b in combinations(m.nodes, 2):
                pairs.add((a, b))
        chains += [Chain(p, t) for t in sorted(singles, key=str)]
        chains += [Chain(p, t) for t in sorted(pairs, key=str)]
        chains += maximal
        chains += _sampled_subchains(maximal, random.Random(0), per_chain=2)
        return chains
    raise ValueError(f"unknown chain scope: {scope}")


def is_supersolvable(
    p: Poset,
    *,
    chain_scope: str = "auto",
    max_maximal_chains: int = 5000,
) -> CheckReport:
    """Search for an M-chain: a viable maximal chain whose closure with every
    chain is a distributive lattice.

    Candidate chains are tried in deterministic order and the search
    short-circuits on the first witness.  chain_scope selects the tested
    chains: "all" enumerates every chain, "maximal" tests maximal chains
    plus their short and randomly sampled subchains, and "auto" picks "all"
    for small posets.
    """
    if not p.is_bounded():
        raise NotBounded("supersolvability is defined for bounded posets")
    maximal = p.maximal_chains()
    if len(maximal) > max_maximal_chains:
        raise SizeLimit(
            f"{len(maximal)} maximal chains exceed the cap of {max_maximal_chains}"
        )
    good = viable_elements(p)
    candidates = [m for m in maximal if all(u in good for u in m.nodes)]
    if not candidates:
        return CheckReport(False, {"kind": "no-viable-chain"}, "no viable maximal chain")
    universe = _chain_universe(p, chain_scope, maximal)
    last_failure = None
    for m_chain in candidates:
        ok = True
        for c in universe:
            closure = r_closure(p, m_chain, c)
            rep = is_distributive_lattice(closure.subposet)
            if not rep:
                last_failure = {
                    "kind": "closure-not-distributive",
                    "m_chain": m_chain.nodes,
                    "chain": c.nodes,
                    "closure": tuple(closure.subposet.elements),
                    "cause": rep.witness,
                }
                ok = False
                break
        if ok:
            return CheckReport(
                True, m_chain, f"M-chain found among {len(candidates)} viable candidates"
            )
    return CheckReport(False, last_failure, "no viable maximal chain is an M-chain")
