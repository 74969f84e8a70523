import itertools

import pytest

from posetkit import (
    Chain,
    EdgeLabelling,
    LabelSet,
    NotGraded,
    NotLeftModular,
    basic_replacement_reduce,
    build_poset,
    enumerate_posets,
    find_left_modular_chains,
    ideal_lattice,
    increasing_chain,
    increasing_chains,
    induce_labelling,
    induced_interval_chain,
    is_el_labelling,
    is_interpolating,
    is_sn_el_labelling,
    noncrossing_lattice,
    nonstraddling_lattice,
    partition_lattice,
    prefix_merge_chain,
    tamari_lattice,
)


def diamond_labelling(diamond, w_a, w_b):
    (la1, la2), (lb1, lb2) = w_a, w_b
    return EdgeLabelling(
        diamond,
        {("0", "a"): la1, ("a", "1"): la2, ("0", "b"): lb1, ("b", "1"): lb2},
    )


def test_label_set_strictly_increasing():
    LabelSet((1, 3, 7))
    with pytest.raises(ValueError):
        LabelSet((1, 1, 2))


def test_labelling_totality(diamond):
    with pytest.raises(ValueError):
        EdgeLabelling(diamond, {("0", "a"): 1})
    with pytest.raises(ValueError):
        EdgeLabelling(
            diamond,
            {("0", "a"): 1, ("a", "1"): 2, ("0", "b"): 2, ("b", "1"): 1, ("0", "1"): 9},
        )


def test_increasing_chain_single_edge(diamond):
    lab = diamond_labelling(diamond, (1, 2), (2, 1))
    inc = increasing_chain(lab, "0", "a")
    assert inc.nodes == ("0", "a")


def test_increasing_chain_pi3():
    p3, d3 = partition_lattice(3)
    inc = increasing_chain(d3, p3.bottom(), p3.top())
    assert inc.nodes == ("1/2/3", "1,2/3", "1,2,3")
    assert d3.word(inc) == (2, 3)


def test_increasing_chain_ambiguous(diamond):
    lab = diamond_labelling(diamond, (1, 1), (1, 1))
    assert increasing_chain(lab, "0", "1") is None
    assert len(increasing_chains(lab, "0", "1")) == 2


def test_el_labelling_pi3():
    _, d3 = partition_lattice(3)
    assert is_el_labelling(d3)


def test_el_labelling_fails_on_double_increasing(diamond):
    lab = diamond_labelling(diamond, (1, 1), (1, 1))
    rep = is_el_labelling(lab)
    assert not rep
    assert rep.witness["kind"] == "ambiguous-increasing-chain"
    # the witness is replayable: both chains really are weakly increasing
    y, z = rep.witness["interval"]
    words = [lab.word(Chain(diamond, ch)) for ch in [("0", "a", "1"), ("0", "b", "1")]]
    assert all(w[0] <= w[1] for w in words)


def test_el_witness_not_lex_least(diamond):
    # the increasing chain exists and is unique but loses lexicographically
    lab = diamond_labelling(diamond, (2, 3), (1, 4))
    rep = is_el_labelling(lab)
    assert not rep and rep.witness["kind"] == "not-lex-least"


def test_sn_el_on_families():
    _, d4 = partition_lattice(4)
    assert is_sn_el_labelling(d4.shifted(-1))
    _, nc4 = noncrossing_lattice(4)
    assert is_sn_el_labelling(nc4.shifted(-1))


def test_sn_el_on_chain():
    ids = ["c0", "c1", "c2"]
    p = build_poset(ids, list(zip(ids, ids[1:])))
    lab = EdgeLabelling(p, {("c0", "c1"): 1, ("c1", "c2"): 2})
    assert is_sn_el_labelling(lab)
    bad = EdgeLabelling(p, {("c0", "c1"): 2, ("c1", "c2"): 2})
    assert not is_sn_el_labelling(bad)


def test_sn_el_requires_graded(pentagon):
    lab = EdgeLabelling(pentagon, {e: 1 for e in pentagon.cover_pairs})
    with pytest.raises(NotGraded):
        is_sn_el_labelling(lab)


def test_interpolating_diamond():
    # single descent explained by the increasing chain
    d = build_poset(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")])
    lab = EdgeLabelling(d, {("0", "a"): 1, ("a", "1"): 2, ("0", "b"): 2, ("b", "1"): 1})
    assert is_interpolating(lab)


def test_interpolating_needs_el(diamond):
    lab = diamond_labelling(diamond, (1, 1), (1, 1))
    assert not is_interpolating(lab)


def test_interpolating_rejects_unexplained_descent():
    # 3-chain plus a long way around: the descent's increasing chain has the
    # right ends but the direct edge labels break condition (ii)
    p = build_poset(
        ["0", "u", "v", "1"], [("0", "u"), ("u", "1"), ("0", "v"), ("v", "1")]
    )
    lab = EdgeLabelling(p, {("0", "u"): 2, ("u", "1"): 1, ("0", "v"): 1, ("v", "1"): 3})
    rep = is_interpolating(lab)
    assert not rep
    assert rep.witness["kind"] == "descent-not-interpolated"
    assert rep.witness["triple"] == ("0", "u", "1")


def test_gamma_interpolating_on_ns():
    for n in (3, 4, 5):
        _, gamma = nonstraddling_lattice(n)
        assert is_el_labelling(gamma)
        assert is_interpolating(gamma)


def test_basic_replacement_identity():
    p3, d3 = partition_lattice(3)
    inc = increasing_chain(d3, p3.bottom(), p3.top())
    assert basic_replacement_reduce(d3, inc).nodes == inc.nodes


def test_basic_replacement_pi3():
    p3, d3 = partition_lattice(3)
    ch = Chain(p3, ("1/2/3", "1,3/2", "1,2,3"))
    assert d3.word(ch) == (3, 2)
    red = basic_replacement_reduce(d3, ch)
    assert red.nodes == ("1/2/3", "1,2/3", "1,2,3")


def test_basic_replacement_ns4_all_maximal_chains():
    ns4, g4 = nonstraddling_lattice(4)
    target = prefix_merge_chain(ns4, 4).nodes
    for ch in ns4.maximal_chains():
        assert basic_replacement_reduce(g4, ch).nodes == target


def test_induce_on_chain_poset():
    ids = ["c0", "c1", "c2", "c3"]
    p = build_poset(ids, list(zip(ids, ids[1:])))
    lab = induce_labelling(p, Chain(p, tuple(ids)), [5, 7, 9])
    assert [lab.label(a, b) for a, b in zip(ids, ids[1:])] == [5, 7, 9]


def test_induce_requires_maximal_chain(diamond):
    with pytest.raises(Exception):
        induce_labelling(diamond, Chain(diamond, ("0", "1")))


def test_induce_rejects_non_left_modular_chain(pentagon):
    # the short side of the pentagon is maximal but not left modular: the
    # index formulas cannot agree everywhere
    with pytest.raises(NotLeftModular):
        induce_labelling(pentagon, Chain(pentagon, ("0", "c", "1")))


def test_induced_index_formulas_match_public_ops():
    from posetkit import join, meet

    p3, d3 = partition_lattice(3)
    m = prefix_merge_chain(p3, 3)
    for y, z in p3.cover_pairs:
        i_min = min(
            j for j, x in enumerate(m.nodes) if p3.leq(z, join(p3, x, y))
        )
        i_max = max(
            j for j, x in enumerate(m.nodes) if p3.leq(meet(p3, x, z), y)
        ) + 1
        assert i_min == i_max
        assert d3.label(y, z) == [2, 3][i_min - 1]


def test_induce_matches_ideal_labelling():
    # vertex labelling of a 3-element poset against the chain-induced one
    for q in enumerate_posets(3):
        omega = {e: int(e) + 1 for e in q.elements}
        jq, lab = ideal_lattice(q, omega)
        nodes = ["{}"]
        acc = []
        for e in sorted(q.elements, key=omega.__getitem__):
            acc.append(omega[e])
            nodes.append("{" + ",".join(map(str, sorted(acc))) + "}")
        induced = induce_labelling(jq, Chain(jq, tuple(nodes)))
        assert induced == lab


def test_induce_ns5_equals_gamma():
    ns5, g5 = nonstraddling_lattice(5)
    induced = induce_labelling(ns5, prefix_merge_chain(ns5, 5), [2, 3, 4, 5])
    assert induced == g5


def test_induced_interval_chain_trivial():
    p3, _ = partition_lattice(3)
    m = prefix_merge_chain(p3, 3)
    full = induced_interval_chain(p3, m, p3.bottom(), p3.top())
    assert full.chain.nodes == m.nodes
    point = induced_interval_chain(p3, m, "1,3/2", "1,3/2")
    assert point.chain.nodes == ("1,3/2",)
    upper = induced_interval_chain(p3, m, "1,3/2", "1,2,3")
    assert upper.chain.nodes == ("1,3/2", "1,2,3")
    assert upper.jump_indices == (1,)


def test_interval_relabelling_reproduces_global():
    # relabelling an interval through its induced chain and the jump labels
    for p, lab, n in (partition_lattice(3) + (3,), nonstraddling_lattice(4) + (4,)):
        m = prefix_merge_chain(p, n)
        label_set = list(range(2, n + 1))
        for y, z in p.comparable_pairs():
            ic = induced_interval_chain(p, m, y, z)
            sub = p.interval(y, z)
            sub_labels = [label_set[c - 1] for c in ic.jump_indices]
            sub_lab = induce_labelling(sub, sub.chain(ic.chain.nodes), sub_labels)
            for a, b in sub.cover_pairs:
                assert sub_lab.label(a, b) == lab.label(a, b)


def test_chain_labels_sit_inside_increasing_chain():
    # every interval chain of an interpolating labelling has distinct labels
    # drawn from the increasing chain's labels, which span its range
    ns4, g4 = nonstraddling_lattice(4)
    for y, z in ns4.comparable_pairs():
        inc = increasing_chain(g4, y, z)
        inc_labels = set(g4.word(inc))
        for ch in ns4.maximal_chains(y, z):
            w = g4.word(ch)
            assert len(set(w)) == len(w)
            assert set(w) <= inc_labels or ch.nodes == inc.nodes
            assert set(w) <= inc_labels
            assert all(min(w) <= l <= max(w) for l in inc_labels)


def test_prefix_labels_locate_chain_elements():
    # z sits below the i-th element of the increasing maximal chain exactly
    # when some bottom chain to z uses only the first i labels, and dually
    ns4, g4 = nonstraddling_lattice(4)
    m = increasing_chain(g4, ns4.bottom(), ns4.top())
    word = g4.word(m)
    for z in ns4:
        for i in range(len(m.nodes)):
            low = set(word[:i])
            below = ns4.leq(z, m.nodes[i])
            some_chain = any(
                set(g4.word(ch)) <= low
                for ch in ns4.maximal_chains(ns4.bottom(), z)
            )
            assert below == some_chain
            high = set(word[i:])
            above = ns4.leq(m.nodes[i], z)
            some_up = any(
                set(g4.word(ch)) <= high
                for ch in ns4.maximal_chains(z, ns4.top())
            )
            assert above == some_up


def test_meets_with_chain_give_increasing_chain():
    # deduplicated meets with the increasing maximal chain walk out the
    # increasing chain of the lower interval
    from posetkit import meet

    ns4, g4 = nonstraddling_lattice(4)
    m = increasing_chain(g4, ns4.bottom(), ns4.top())
    for z in ns4:
        seq = []
        for x in m.nodes:
            v = meet(ns4, x, z)
            assert v is not None
            if not seq or seq[-1] != v:
                seq.append(v)
        assert tuple(seq) == increasing_chain(g4, ns4.bottom(), z).nodes


def test_induced_labelling_from_lm_chain_is_interpolating():
    t4 = tamari_lattice(4)
    for m in find_left_modular_chains(t4):
        lab = induce_labelling(t4, m, check_chain=True)
        assert is_interpolating(lab)
        assert increasing_chain(lab, t4.bottom(), t4.top()).nodes == m.nodes


def test_increasing_chain_of_family_labelling_is_left_modular():
    from posetkit import is_left_modular_element

    ns4, g4 = nonstraddling_lattice(4)
    m = increasing_chain(g4, ns4.bottom(), ns4.top())
    for x in m.nodes:
        assert is_left_modular_element(ns4, x)
