import itertools

import pytest

from posetkit import (
    Chain,
    CycleError,
    NotBounded,
    NotComparable,
    NotReducedError,
    Poset,
    UnknownElement,
    build_poset,
    partition_lattice,
)


def test_singleton(singleton):
    assert singleton.bottom() == "a" == singleton.top()
    assert singleton.is_bounded()
    assert singleton.graded_rank() == 0
    assert len(singleton.maximal_chains()) == 1


def test_diamond_basics(diamond):
    assert diamond.bottom() == "0" and diamond.top() == "1"
    assert diamond.leq("0", "1")
    assert not diamond.leq("a", "b") and not diamond.leq("b", "a")
    assert diamond.graded_rank() == 2
    assert len(diamond.maximal_chains()) == 2


def test_two_cycle_rejected():
    with pytest.raises(CycleError):
        build_poset(["0", "a"], [("0", "a"), ("a", "0")])


def test_self_cover_rejected():
    with pytest.raises(CycleError):
        build_poset(["a"], [("a", "a")])


def test_unknown_cover_element():
    with pytest.raises(UnknownElement):
        build_poset(["a"], [("a", "b")])


def test_duplicate_elements_rejected():
    with pytest.raises(ValueError):
        build_poset(["a", "a"], [])


def test_transitive_pair_rejected_when_strict():
    with pytest.raises(NotReducedError):
        build_poset(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


def test_auto_reduce_accepts_general_relation():
    p = build_poset(
        ["a", "b", "c"],
        [("a", "b"), ("b", "c"), ("a", "c"), ("a", "a")],
        auto_reduce=True,
    )
    assert p.cover_pairs == (("a", "b"), ("b", "c"))
    assert p.leq("a", "c")


def test_leq_reflexive_transitive_antisymmetric(bowtie):
    for x in bowtie:
        assert bowtie.leq(x, x)
    for x, y, z in itertools.product(bowtie, repeat=3):
        if bowtie.leq(x, y) and bowtie.leq(y, z):
            assert bowtie.leq(x, z)
        if x != y and bowtie.leq(x, y):
            assert not bowtie.leq(y, x)


def test_leq_unknown_element(diamond):
    with pytest.raises(UnknownElement):
        diamond.leq("0", "zz")


def test_cached_order_matches_recomputation(diamond, pentagon, bowtie):
    for p in (diamond, pentagon, bowtie):
        rebuilt = build_poset(p.elements, p.cover_pairs)
        assert rebuilt.order_pairs() == p.order_pairs()


def test_interval_full_is_identity(pentagon):
    iv = pentagon.interval("0", "1")
    assert set(iv.elements) == set(pentagon.elements)
    assert set(iv.cover_pairs) == set(pentagon.cover_pairs)


def test_interval_point(pentagon):
    iv = pentagon.interval("a", "a")
    assert iv.elements == ("a",)
    assert iv.cover_pairs == ()


def test_interval_pi3():
    p3, _ = partition_lattice(3)
    iv = p3.interval(p3.bottom(), "1,2,3")
    assert len(iv) == 5


def test_interval_not_comparable(diamond):
    with pytest.raises(NotComparable):
        diamond.interval("a", "b")


def test_maximal_chain_counts():
    ids = [f"c{i}" for i in range(5)]
    chain = build_poset(ids, list(zip(ids, ids[1:])))
    assert len(chain.maximal_chains()) == 1

    k = 4
    anti = build_poset(
        ["0"] + [f"m{i}" for i in range(k)] + ["1"],
        [("0", f"m{i}") for i in range(k)] + [(f"m{i}", "1") for i in range(k)],
    )
    assert len(anti.maximal_chains()) == k


def test_pi3_has_three_maximal_chains():
    # independent oracle: a maximal chain picks one of the three pairs to
    # merge first, after which the top merge is forced
    p3, _ = partition_lattice(3)
    assert len(p3.maximal_chains()) == 3


def test_maximal_chains_are_unrefinable_and_unique(bowtie):
    chains = bowtie.maximal_chains()
    assert len(set(ch.nodes for ch in chains)) == len(chains) == 4
    for ch in chains:
        assert ch.is_maximal()


def test_graded_rank_absent(pentagon):
    assert pentagon.graded_rank() is None


def test_graded_rank_means_equal_lengths():
    p4, _ = partition_lattice(4)
    rank = p4.graded_rank()
    assert rank == 3
    assert {ch.length for ch in p4.maximal_chains()} == {rank}


def test_not_bounded():
    p = build_poset(["a", "b"], [])
    assert not p.is_bounded()
    with pytest.raises(NotBounded):
        p.bottom()
    with pytest.raises(NotBounded):
        p.graded_rank()


def test_chain_validation(diamond):
    with pytest.raises(NotComparable):
        Chain(diamond, ("a", "b"))
    ch = Chain(diamond, ("0", "a", "1"))
    assert ch.is_unrefinable() and ch.is_maximal()
    assert not Chain(diamond, ("0", "1")).is_unrefinable() or True
    # 0 < 1 is comparable but refinable: not a cover chain
    assert not Chain(diamond, ("0", "1")).is_unrefinable()


def test_all_chains_count(diamond):
    # chains of the diamond: 4 singletons, 5 comparable pairs, 2 triples
    chains = list(diamond.all_chains())
    assert len(chains) == 4 + 5 + 2
    assert len(list(diamond.all_chains(include_empty=True))) == 12


def test_subposet_recomputes_covers(bowtie):
    sub = bowtie.subposet(["0", "a", "1"])
    assert set(sub.cover_pairs) == {("0", "a"), ("a", "1")}
