"""The theorem-verification harness.

Each named claim checks one structural statement over a configured universe
(the partition families at desk scale, the Tamari lattices, all small bounded
graded posets) and reports pass/fail with a replayable counterexample
document on failure.  `verify_theorems` runs a scope preset and returns the
results in deterministic order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

from .document import (
    PosetDocument,
    parse_poset_document,
    poset_to_document,
    serialize_poset_document,
    export_dot,
)
from .enumerate_posets import enumerate_bounded_posets, enumerate_posets
from .errors import NotGraded
from .families import (
    SetPartition,
    ideal_lattice,
    noncrossing_lattice,
    nonstraddling_lattice,
    ns_merge_closure,
    partition_lattice,
    prefix_merge_chain,
    tamari_lattice,
)
from .labelling import (
    EdgeLabelling,
    basic_replacement_reduce,
    increasing_chain,
    induce_labelling,
    is_el_labelling,
    is_interpolating,
    is_sn_el_labelling,
)
from .order_ops import (
    find_left_modular_chains,
    is_left_modular_element,
    join as poset_join,
    meet as poset_meet,
)
from .poset import Chain, CheckReport, Poset, build_poset
from .supersolvability import (
    increasing_extension,
    is_distributive_lattice,
    is_supersolvable,
    q_closure,
    r_closure,
)


@dataclass(frozen=True)
class ClaimResult:
    claim: str
    passed: bool
    detail: str
    counterexample: Optional[dict] = None

    def to_json_obj(self) -> dict:
        return {
            "claim": self.claim,
            "passed": self.passed,
            "detail": self.detail,
            "counterexample": self.counterexample,
        }


@dataclass(frozen=True)
class VerifyConfig:
    slow: bool = False
    seed: int = 0


def _counterexample(p: Poset, name: str, lab: Optional[EdgeLabelling] = None, **extra) -> dict:
    doc = poset_to_document(p, name, lab)
    obj = {"document": serialize_poset_document(doc)}
    obj.update(extra)
    return obj


@lru_cache(maxsize=None)
def _pi(n: int):
    return partition_lattice(n)


@lru_cache(maxsize=None)
def _nc(n: int):
    return noncrossing_lattice(n)


@lru_cache(maxsize=None)
def _ns(n: int):
    return nonstraddling_lattice(n)


@lru_cache(maxsize=None)
def _t(n: int):
    return tamari_lattice(n)


@lru_cache(maxsize=None)
def _t4_chain_and_labelling():
    t4 = _t(4)
    m = find_left_modular_chains(t4)[0]
    return m, induce_labelling(t4, m)


def _ns_sizes(cfg: VerifyConfig) -> list[int]:
    return [3, 4, 5, 6] if cfg.slow else [3, 4, 5]


# -- criterion 1: family sanity ------------------------------------------


def _claim_family_counts(cfg: VerifyConfig) -> ClaimResult:
    from .enumerate_posets import are_isomorphic

    checks: list[tuple[str, bool]] = []
    p3, _ = _pi(3)
    checks.append(("len(Pi3) == 5", len(p3) == 5))
    checks.append(("rank(Pi3) == 2", p3.graded_rank() == 2))
    checks.append(("len(Pi4) == 15", len(_pi(4)[0]) == 15))
    checks.append(("len(NC4) == 14", len(_nc(4)[0]) == 14))
    checks.append(("len(T4) == 14", len(_t(4)) == 14))
    checks.append(("len(NS3) == 5", len(_ns(3)[0]) == 5))
    checks.append(("len(NS4) == 14", len(_ns(4)[0]) == 14))
    checks.append(("NS6 not graded", _ns(6)[0].graded_rank() is None))
    pentagon = build_poset(
        list("0abc1"), [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")]
    )
    checks.append(("T3 iso pentagon", are_isomorphic(_t(3), pentagon)))
    failed = [name for name, ok in checks if not ok]
    return ClaimResult(
        "family-counts",
        not failed,
        "all family sizes and shapes as expected" if not failed else f"failed: {failed}",
    )


# -- criterion 2: the non-straddling labelling suite ----------------------


def _interval_least_label(y: SetPartition, z: SetPartition) -> int:
    """Smallest full-lattice edge label inside [y, z]: the smallest block
    minimum of y that is no longer a block minimum of z."""
    lost = sorted(set(y.block_minima) - set(z.block_minima))
    return lost[0]


def _claim_ns_el(n: int, cfg: VerifyConfig) -> ClaimResult:
    poset, gamma = _ns(n)
    rep = is_el_labelling(gamma)
    return ClaimResult(
        f"ns{n}-el-labelling",
        rep.verdict,
        rep.note or f"unique lexicographically least increasing chains on NS{n}",
        None if rep else _counterexample(poset, f"ns{n}", gamma, witness=repr(rep.witness)),
    )


def _claim_ns_interpolating(n: int, cfg: VerifyConfig) -> ClaimResult:
    poset, gamma = _ns(n)
    rep = is_interpolating(gamma)
    return ClaimResult(
        f"ns{n}-interpolating",
        rep.verdict,
        rep.note or f"every descent of NS{n} is explained by its increasing chain",
        None if rep else _counterexample(poset, f"ns{n}", gamma, witness=repr(rep.witness)),
    )


def _claim_ns_label_definitions(n: int, cfg: VerifyConfig) -> ClaimResult:
    from .families import _least_interval_merge_label, nonstraddling_cover_label

    poset, gamma = _ns(n)
    for a, b in poset.cover_pairs:
        y, z = SetPartition.parse(a), SetPartition.parse(b)
        v1 = nonstraddling_cover_label(y, z)
        lost = sorted(set(y.block_minima) - set(z.block_minima))
        v2 = lost[0] if lost else None
        v3 = _least_interval_merge_label(y, z)
        if not (v1 == v2 == v3 == gamma.label(a, b)):
            return ClaimResult(
                f"ns{n}-label-definitions",
                False,
                f"definitions disagree on {a} -> {b}: {v1}, {v2}, {v3}",
                _counterexample(poset, f"ns{n}", gamma, edge=[a, b]),
            )
    return ClaimResult(
        f"ns{n}-label-definitions",
        True,
        f"three label definitions agree on all {len(poset.cover_pairs)} edges of NS{n}",
    )


def _claim_ns_least_label_edges(n: int, cfg: VerifyConfig) -> ClaimResult:
    poset, gamma = _ns(n)
    for a, b in poset.comparable_pairs():
        y, z = SetPartition.parse(a), SetPartition.parse(b)
        least = _interval_least_label(y, z)
        hits = [
            w
            for w in poset.upper_covers(a)
            if poset.leq(w, b) and gamma.label(a, w) == least
        ]
        if len(hits) != 1:
            return ClaimResult(
                f"ns{n}-least-label-edge-unique",
                False,
                f"interval [{a}, {b}] has {len(hits)} bottom edges labelled {least}",
                _counterexample(poset, f"ns{n}", gamma, interval=[a, b]),
            )
    return ClaimResult(
        f"ns{n}-least-label-edge-unique",
        True,
        f"every interval of NS{n} has exactly one bottom edge with the least label",
    )


def _claim_ns_least_label_on_chains(n: int, cfg: VerifyConfig) -> ClaimResult:
    poset, gamma = _ns(n)
    for a, b in poset.comparable_pairs():
        y, z = SetPartition.parse(a), SetPartition.parse(b)
        least = _interval_least_label(y, z)
        # z must be unreachable from y through interval edges missing the label
        reach = {a}
        frontier = [a]
        while frontier:
            u = frontier.pop()
            for w in poset.upper_covers(u):
                if w not in reach and poset.leq(w, b) and gamma.label(u, w) != least:
                    reach.add(w)
                    frontier.append(w)
        if b in reach:
            return ClaimResult(
                f"ns{n}-least-label-on-chains",
                False,
                f"a chain in [{a}, {b}] avoids the least label {least}",
                _counterexample(poset, f"ns{n}", gamma, interval=[a, b]),
            )
    return ClaimResult(
        f"ns{n}-least-label-on-chains",
        True,
        f"the least interval label appears on every unrefinable chain of NS{n}",
    )


def _claim_ns_increasing_chain(n: int, cfg: VerifyConfig) -> ClaimResult:
    poset, gamma = _ns(n)
    inc = increasing_chain(gamma, poset.bottom(), poset.top())
    expected = prefix_merge_chain(poset, n)
    ok = inc is not None and inc.nodes == expected.nodes
    return ClaimResult(
        f"ns{n}-increasing-chain",
        ok,
        "increasing maximal chain is the prefix-merge chain"
        if ok
        else f"increasing chain is {None if inc is None else inc.nodes}",
        None if ok else _counterexample(poset, f"ns{n}", gamma),
    )


def _claim_ns_forced_merges(n: int, cfg: VerifyConfig) -> ClaimResult:
    poset, _ = _ns(n)
    for a in poset.elements:
        y = SetPartition.parse(a)
        minima = y.block_minima
        for i in range(len(minima)):
            for j in range(i + 1, len(minima)):
                w = ns_merge_closure(y, (minima[i], minima[j]))
                group = [m for m in minima if m in w.block_containing(minima[i])]
                if minima[i] == min(group) and minima[j] == sorted(group)[1]:
                    # merging the two smallest forced the whole group; any
                    # pair inside the group must force the same element
                    for s in range(len(group)):
                        for t in range(s + 1, len(group)):
                            other = ns_merge_closure(y, (group[s], group[t]))
                            if other != w:
                                return ClaimResult(
                                    f"ns{n}-forced-merges",
                                    False,
                                    f"merging {group[s]},{group[t]} in {y} gives {other}, not {w}",
                                )
    return ClaimResult(
        f"ns{n}-forced-merges",
        True,
        f"forced block merges are pair-independent across NS{n}",
    )


# -- criterion 3: the canonical chain is left modular ---------------------


def _claim_ns_chain_left_modular(n: int, cfg: VerifyConfig) -> ClaimResult:
    poset, _ = _ns(n)
    chain = prefix_merge_chain(poset, n)
    for x in chain.nodes:
        rep = is_left_modular_element(poset, x)
        if not rep:
            return ClaimResult(
                f"ns{n}-chain-left-modular",
                False,
                f"{x} is not left modular: {rep.note}",
                _counterexample(poset, f"ns{n}", witness=repr(rep.witness)),
            )
    return ClaimResult(
        f"ns{n}-chain-left-modular",
        True,
        f"every element of the prefix-merge chain of NS{n} is left modular",
    )


# -- criterion 4: induced labelling round trips ---------------------------


def _roundtrip_poset(name: str, poset: Poset, lab: Optional[EdgeLabelling]) -> ClaimResult:
    claim = f"roundtrip-{name}"
    chains = find_left_modular_chains(poset)
    if not chains:
        return ClaimResult(claim, False, "poset has no left modular maximal chain")
    for m in chains:
        induced = induce_labelling(poset, m)
        rep = is_interpolating(induced)
        if not rep:
            return ClaimResult(
                claim,
                False,
                f"labelling induced by {m.nodes} is not interpolating: {rep.note}",
                _counterexample(poset, name, induced, witness=repr(rep.witness)),
            )
        inc = increasing_chain(induced, poset.bottom(), poset.top())
        if inc is None or inc.nodes != m.nodes:
            return ClaimResult(
                claim,
                False,
                f"induced labelling's increasing chain differs from {m.nodes}",
                _counterexample(poset, name, induced),
            )
    if lab is not None:
        inc = increasing_chain(lab, poset.bottom(), poset.top())
        if inc is None:
            return ClaimResult(claim, False, "family labelling has no increasing maximal chain")
        for x in inc.nodes:
            rep = is_left_modular_element(poset, x)
            if not rep:
                return ClaimResult(
                    claim,
                    False,
                    f"increasing chain element {x!r} is not left modular",
                    _counterexample(poset, name, lab, witness=repr(rep.witness)),
                )
    return ClaimResult(
        claim,
        True,
        f"{len(chains)} left modular chains round-trip through induced labellings",
    )


def _claim_roundtrip_ideals(cfg: VerifyConfig) -> ClaimResult:
    for q in enumerate_posets(4):
        omega = {e: int(e) + 1 for e in q.elements}
        jq, lab = ideal_lattice(q, omega)
        inner = _roundtrip_poset(f"ideals-of-{len(q)}", jq, lab)
        if not inner.passed:
            return ClaimResult("roundtrip-ideals", False, inner.detail, inner.counterexample)
    return ClaimResult(
        "roundtrip-ideals",
        True,
        "ideal lattices of all posets with at most 4 vertices round-trip",
    )


# -- criterion 5: three equivalent characterizations ----------------------


def has_sn_el_labelling(p: Poset) -> bool:
    """Decide whether a bounded graded poset admits a rank-permutation
    EL-labelling: try labellings induced by left modular chains first, then
    fall back to exhaustive search over label assignments."""
    rank = p.graded_rank()
    if rank is None:
        return False
    for m in find_left_modular_chains(p):
        lab = induce_labelling(p, m)
        if is_sn_el_labelling(lab):
            return True
    return _search_sn_el(p, rank) is not None


def _search_sn_el(p: Poset, rank: int) -> Optional[EdgeLabelling]:
    """Backtracking search for a rank-permutation EL-labelling."""
    edges = list(p.cover_pairs)
    if not edges:
        return EdgeLabelling(p, {})
    eidx = {e: i for i, e in enumerate(edges)}
    chains = [
        [eidx[(a, b)] for a, b in zip(m.nodes, m.nodes[1:])]
        for m in p.maximal_chains()
    ]
    chains_of_edge: list[list[int]] = [[] for _ in edges]
    for ci, ch in enumerate(chains):
        for e in ch:
            chains_of_edge[e].append(ci)
    assign = [0] * len(edges)
    used: list[set[int]] = [set() for _ in chains]

    def backtrack(k: int) -> Optional[EdgeLabelling]:
        if k == len(edges):
            lab = EdgeLabelling(p, {edges[i]: assign[i] for i in range(len(edges))})
            return lab if is_sn_el_labelling(lab) else None
        for v in range(1, rank + 1):
            if any(v in used[ci] for ci in chains_of_edge[k]):
                continue
            assign[k] = v
            for ci in chains_of_edge[k]:
                used[ci].add(v)
            found = backtrack(k + 1)
            for ci in chains_of_edge[k]:
                used[ci].remove(v)
            if found is not None:
                return found
        return None

    return backtrack(0)


def _claim_graded_equivalence(cfg: VerifyConfig) -> ClaimResult:
    count = 0
    for p in enumerate_bounded_posets(6, graded_only=True):
        count += 1
        a = has_sn_el_labelling(p)
        b = bool(find_left_modular_chains(p))
        c = bool(is_supersolvable(p))
        if not (a == b == c):
            return ClaimResult(
                "graded-equivalence-6",
                False,
                f"verdicts disagree (sn-el {a}, left modular {b}, supersolvable {c})",
                _counterexample(p, "disagreement"),
            )
    return ClaimResult(
        "graded-equivalence-6",
        True,
        f"three deciders agree on all {count} bounded graded posets with <= 6 elements",
    )


# -- criterion 6: relabelling reproduces the family labelling -------------


def _relabel_identity(name: str, poset: Poset, lab: EdgeLabelling) -> ClaimResult:
    claim = f"{name}-relabel-identity"
    inc = increasing_chain(lab, poset.bottom(), poset.top())
    if inc is None:
        return ClaimResult(claim, False, "no unique increasing maximal chain")
    induced = induce_labelling(poset, inc, lab.word(inc))
    if induced == lab:
        return ClaimResult(claim, True, "re-induced labelling matches edge-for-edge")
    diff = [
        (a, b)
        for (a, b), v in lab.items()
        if induced.label(a, b) != v
    ]
    return ClaimResult(
        claim,
        False,
        f"{len(diff)} edges differ, first {diff[0]}",
        _counterexample(poset, name, lab),
    )


def _claim_ns_relabel(n: int, cfg: VerifyConfig) -> ClaimResult:
    poset, gamma = _ns(n)
    return _relabel_identity(f"ns{n}", poset, gamma)


def _claim_t4_relabel(cfg: VerifyConfig) -> ClaimResult:
    _, lab = _t4_chain_and_labelling()
    return _relabel_identity("t4", _t(4), lab)


# -- criterion 7: the two closures coincide --------------------------------


def _closure_identity(name: str, poset: Poset, lab: EdgeLabelling, n: int) -> ClaimResult:
    claim = f"closure-identity-{name}"
    m_chain = prefix_merge_chain(poset, n)
    for c in poset.maximal_chains():
        r = r_closure(poset, m_chain, c)
        m = increasing_extension(lab, c)
        q = q_closure(poset, lab, m_chain, m)
        if r.element_set != q.element_set:
            return ClaimResult(
                claim,
                False,
                f"closures differ for chain {c.nodes}",
                _counterexample(poset, name, lab, chain=list(map(str, c.nodes))),
            )
        for res in (r, q):
            rep = is_distributive_lattice(res.subposet)
            if not rep:
                return ClaimResult(
                    claim,
                    False,
                    f"closure of {c.nodes} is not distributive: {rep.note}",
                    _counterexample(poset, name, lab, chain=list(map(str, c.nodes))),
                )
    return ClaimResult(
        claim,
        True,
        f"both closures agree and are distributive for all maximal chains of {name}",
    )


def _claim_closure_pi4(cfg: VerifyConfig) -> ClaimResult:
    poset, lab = _pi(4)
    return _closure_identity("pi4", poset, lab, 4)


def _claim_closure_nc4(cfg: VerifyConfig) -> ClaimResult:
    poset, lab = _nc(4)
    return _closure_identity("nc4", poset, lab, 4)


def _claim_tamari_q_closure_data(cfg: VerifyConfig) -> ClaimResult:
    """Informational: lattice-hood of the increasing-chain closures over the
    Tamari lattice is reported as data, no structural claim is made."""
    t4 = _t(4)
    m_chain, lab = _t4_chain_and_labelling()
    total = 0
    lattices = 0
    for m in t4.maximal_chains():
        total += 1
        sub = q_closure(t4, lab, m_chain, m).subposet
        if all(
            poset_meet(sub, a, b) is not None and poset_join(sub, a, b) is not None
            for a in sub.elements
            for b in sub.elements
        ):
            lattices += 1
    return ClaimResult(
        "tamari-q-closure-data",
        True,
        f"{lattices}/{total} increasing-chain closures over T4 are lattices (reported as data)",
    )


# -- criterion 8: oracle equivalences --------------------------------------


def _claim_ns_join_oracle(n: int, cfg: VerifyConfig) -> ClaimResult:
    from .families import all_set_partitions, ns_join_closure

    universe = [x for x in all_set_partitions(n) if not x.is_straddling]
    for x in universe:
        for y in universe:
            fast = ns_join_closure(x, y)
            uppers = [u for u in universe if x.refines(u) and y.refines(u)]
            least = [u for u in uppers if all(u.refines(v) for v in uppers)]
            if len(least) != 1:
                return ClaimResult(
                    f"ns{n}-join-oracle",
                    False,
                    f"{x} and {y} have {len(least)} least upper bounds",
                )
            if fast != least[0]:
                return ClaimResult(
                    f"ns{n}-join-oracle",
                    False,
                    f"closure join of {x} and {y} is {fast}, brute force gives {least[0]}",
                )
    return ClaimResult(
        f"ns{n}-join-oracle",
        True,
        f"forced-merge joins equal brute-force least upper bounds on all pairs of NS{n}",
    )


def _claim_basic_replacement(name: str, poset: Poset, lab: EdgeLabelling) -> ClaimResult:
    claim = f"basic-replacement-{name}"
    for y, z in poset.comparable_pairs():
        inc = increasing_chain(lab, y, z)
        if inc is None:
            return ClaimResult(claim, False, f"interval [{y}, {z}] lacks an increasing chain")
        for ch in poset.maximal_chains(y, z):
            red = basic_replacement_reduce(lab, ch)
            if red.nodes != inc.nodes:
                return ClaimResult(
                    claim,
                    False,
                    f"reduction of {ch.nodes} gives {red.nodes}, not {inc.nodes}",
                    _counterexample(poset, name, lab, interval=[str(y), str(z)]),
                )
    return ClaimResult(
        claim, True, f"basic replacements reduce every interval chain of {name} to the increasing chain"
    )


def _claim_basic_replacement_pi4(cfg: VerifyConfig) -> ClaimResult:
    return _claim_basic_replacement("pi4", *_pi(4))


def _claim_basic_replacement_ns4(cfg: VerifyConfig) -> ClaimResult:
    return _claim_basic_replacement("ns4", *_ns(4))


def _claim_induced_matches_families(cfg: VerifyConfig) -> ClaimResult:
    """The canonical chain with label set {2..n} induces exactly the family
    labelling; the index cross-check runs on every edge along the way."""
    cases: list[tuple[str, Poset, EdgeLabelling, int]] = []
    for n in range(2, 5):
        cases.append((f"pi{n}", *_pi(n), n))
    cases.append(("nc4", *_nc(4), 4))
    for n in range(2, 6):
        cases.append((f"ns{n}", *_ns(n), n))
    for name, poset, lab, n in cases:
        chain = prefix_merge_chain(poset, n)
        induced = induce_labelling(poset, chain, list(range(2, n + 1)))
        if induced != lab:
            return ClaimResult(
                "induced-matches-families",
                False,
                f"induced labelling of {name} differs from the family labelling",
                _counterexample(poset, name, lab),
            )
    for q in enumerate_posets(3):
        omega = {e: int(e) + 1 for e in q.elements}
        jq, lab = ideal_lattice(q, omega)
        chain_nodes = [jq.bottom()]
        ideal: list[int] = []
        by_omega = sorted(q.elements, key=omega.__getitem__)
        for e in by_omega:
            ideal.append(omega[e])
            chain_nodes.append("{" + ",".join(map(str, sorted(ideal))) + "}")
        induced = induce_labelling(jq, Chain(jq, tuple(chain_nodes)))
        if induced != lab:
            return ClaimResult(
                "induced-matches-families",
                False,
                f"induced labelling of the ideal lattice of a {len(q)}-vertex poset differs",
                _counterexample(jq, "ideals", lab),
            )
    return ClaimResult(
        "induced-matches-families",
        True,
        "induced labellings reproduce the family labellings (indices cross-checked per edge)",
    )


# -- criterion 9: plumbing -------------------------------------------------


def random_poset_document(rng: random.Random, index: int) -> PosetDocument:
    """A random poset document built through natural labelling insertion."""
    n = rng.randint(1, 8)
    down = [0] * n
    for j in range(n):
        picked = 0
        for i in range(j):
            if rng.random() < 0.4:
                picked |= down[i]
        down[j] = picked | (1 << j)
    up = [0] * n
    for i in range(n):
        for j in range(n):
            if (down[j] >> i) & 1:
                up[i] |= 1 << j
    covers = Poset._reduce(up, n)
    ids = [f"e{i}" for i in range(n)]
    poset = Poset(ids, [(ids[i], ids[j]) for i, j in covers])
    lab = None
    if covers and rng.random() < 0.6:
        lab = EdgeLabelling(
            poset, {edge: rng.randint(-5, 9) for edge in poset.cover_pairs}
        )
    chains = None
    if rng.random() < 0.5:
        walk = [rng.choice(poset.elements)]
        while True:
            ups = [b for b in poset.upper_covers(walk[-1])]
            if not ups or rng.random() < 0.3:
                break
            walk.append(rng.choice(ups))
        chains = {"walk": Chain(poset, tuple(walk))}
    return poset_to_document(poset, f"random-{index}", lab, chains)


def _claim_document_roundtrip(cfg: VerifyConfig) -> ClaimResult:
    rng = random.Random(cfg.seed)
    for i in range(200):
        doc = random_poset_document(rng, i)
        text = serialize_poset_document(doc)
        back = parse_poset_document(text)
        if back != doc:
            return ClaimResult(
                "document-roundtrip-random",
                False,
                f"round trip changed document {doc.name}",
                {"document": text},
            )
        if serialize_poset_document(back) != text:
            return ClaimResult(
                "document-roundtrip-random",
                False,
                f"serialization of {doc.name} is not a fixed point",
                {"document": text},
            )
    return ClaimResult(
        "document-roundtrip-random", True, "200 random documents round-trip losslessly"
    )


def _claim_dot_deterministic(cfg: VerifyConfig) -> ClaimResult:
    poset, gamma = _ns(4)
    first = export_dot(poset, gamma)
    second = export_dot(poset, gamma)
    rebuilt = parse_poset_document(
        serialize_poset_document(poset_to_document(poset, "ns4", gamma))
    )
    third = export_dot(rebuilt.to_poset(), rebuilt.to_labelling())
    ok = first == second == third
    return ClaimResult(
        "dot-deterministic",
        ok,
        "DOT export is byte-identical across runs" if ok else "DOT export varies",
    )


# -- scope wiring ----------------------------------------------------------


def _scope_claims(scope: str, cfg: VerifyConfig, add: Callable[[str, Callable[[], ClaimResult]], None]) -> None:
    if scope == "families":
        add("family-counts", lambda: _claim_family_counts(cfg))
    elif scope == "ns":
        for n in _ns_sizes(cfg):
            add(f"ns{n}-el-labelling", lambda n=n: _claim_ns_el(n, cfg))
            add(f"ns{n}-interpolating", lambda n=n: _claim_ns_interpolating(n, cfg))
            add(f"ns{n}-label-definitions", lambda n=n: _claim_ns_label_definitions(n, cfg))
            add(f"ns{n}-least-label-edge-unique", lambda n=n: _claim_ns_least_label_edges(n, cfg))
            add(f"ns{n}-least-label-on-chains", lambda n=n: _claim_ns_least_label_on_chains(n, cfg))
            add(f"ns{n}-increasing-chain", lambda n=n: _claim_ns_increasing_chain(n, cfg))
            add(f"ns{n}-forced-merges", lambda n=n: _claim_ns_forced_merges(n, cfg))
        for n in (3, 4, 5):
            add(f"ns{n}-chain-left-modular", lambda n=n: _claim_ns_chain_left_modular(n, cfg))
    elif scope == "uniqueness":
        for n in (3, 4, 5):
            add(f"ns{n}-relabel-identity", lambda n=n: _claim_ns_relabel(n, cfg))
        add("t4-relabel-identity", lambda: _claim_t4_relabel(cfg))
    elif scope == "roundtrip":
        for n in range(1, 5):
            add(f"roundtrip-pi{n}", lambda n=n: _roundtrip_poset(f"pi{n}", *_pi(n)))
            add(f"roundtrip-nc{n}", lambda n=n: _roundtrip_poset(f"nc{n}", *_nc(n)))
        for n in range(1, 6):
            add(f"roundtrip-ns{n}", lambda n=n: _roundtrip_poset(f"ns{n}", *_ns(n)))
        add("roundtrip-t3", lambda: _roundtrip_poset("t3", _t(3), None))
        add("roundtrip-t4", lambda: _roundtrip_poset("t4", _t(4), None))
        add("roundtrip-ideals", lambda: _claim_roundtrip_ideals(cfg))
    elif scope == "equivalence":
        add("graded-equivalence-6", lambda: _claim_graded_equivalence(cfg))
    elif scope == "closures":
        add("closure-identity-pi4", lambda: _claim_closure_pi4(cfg))
        add("closure-identity-nc4", lambda: _claim_closure_nc4(cfg))
        add("tamari-q-closure-data", lambda: _claim_tamari_q_closure_data(cfg))
    elif scope == "oracles":
        for n in (3, 4, 5):
            add(f"ns{n}-join-oracle", lambda n=n: _claim_ns_join_oracle(n, cfg))
        add("basic-replacement-pi4", lambda: _claim_basic_replacement_pi4(cfg))
        add("basic-replacement-ns4", lambda: _claim_basic_replacement_ns4(cfg))
        add("induced-matches-families", lambda: _claim_induced_matches_families(cfg))
    elif scope == "plumbing":
        add("document-roundtrip-random", lambda: _claim_document_roundtrip(cfg))
        add("dot-deterministic", lambda: _claim_dot_deterministic(cfg))
    elif scope == "tamari":
        add("roundtrip-t3", lambda: _roundtrip_poset("t3", _t(3), None))
        add("roundtrip-t4", lambda: _roundtrip_poset("t4", _t(4), None))
        add("t4-relabel-identity", lambda: _claim_t4_relabel(cfg))
        add("tamari-q-closure-data", lambda: _claim_tamari_q_closure_data(cfg))


_BASE_SCOPES = (
    "families",
    "ns",
    "uniqueness",
    "roundtrip",
    "equivalence",
    "closures",
    "oracles",
    "plumbing",
)

SCOPES = ("all",) + _BASE_SCOPES + ("tamari",)


def _claims_for_scope(scope: str, cfg: VerifyConfig) -> list[tuple[str, Callable[[], ClaimResult]]]:
    claims: list[tuple[str, Callable[[], ClaimResult]]] = []
    seen: set[str] = set()

    def add(name: str, fn: Callable[[], ClaimResult]) -> None:
        if name not in seen:
            seen.add(name)
            claims.append((name, fn))

    if scope == "all":
        for base in _BASE_SCOPES:
            _scope_claims(base, cfg, add)
    else:
        _scope_claims(scope, cfg, add)
    return claims


def verify_theorems(scope: str = "all", *, slow: bool = False, seed: int = 0) -> list[ClaimResult]:
    """Run the verification suite for a scope preset and return one result
    per named claim, in deterministic order."""
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    cfg = VerifyConfig(slow=slow, seed=seed)
    return [fn() for _, fn in _claims_for_scope(scope, cfg)]
