"""Finite poset toolkit: edge labellings, left modularity, supersolvability,
and generators for the classical lattice families."""

__version__ = "0.1.0"

from .errors import (
    CycleError,
    NotBounded,
    NotComparable,
    NotELLabelled,
    NotGraded,
    NotLeftModular,
    NotLinearExtension,
    NotNonStraddling,
    NotReducedError,
    NotViable,
    ParseError,
    PosetError,
    PreconditionViolated,
    SizeLimit,
    UnknownElement,
    ValidationError,
)
from .poset import Chain, CheckReport, Poset, build_poset
from .order_ops import (
    LMWitness,
    find_left_modular_chains,
    find_viable_chains,
    is_left_modular_element,
    is_viable_element,
    join,
    left_modular_elements,
    meet,
    rel_join,
    rel_meet,
    viable_elements,
)
from .labelling import (
    EdgeLabelling,
    InducedChain,
    LabelSet,
    basic_replacement_reduce,
    increasing_chain,
    increasing_chains,
    induce_labelling,
    induced_interval_chain,
    is_el_labelling,
    is_interpolating,
    is_sn_el_labelling,
)
from .supersolvability import (
    ClosureResult,
    increasing_extension,
    is_distributive_lattice,
    is_supersolvable,
    q_closure,
    r_closure,
)
from .families import (
    BinaryTree,
    SetPartition,
    all_binary_trees,
    all_set_partitions,
    ideal_lattice,
    is_straddling,
    noncrossing_lattice,
    nonstraddling_lattice,
    ns_join_closure,
    ns_merge_closure,
    partition_lattice,
    prefix_merge_chain,
    straddle_closure,
    tamari_lattice,
)
from .document import (
    PosetDocument,
    export_dot,
    parse_poset_document,
    poset_to_document,
    serialize_poset_document,
)
from .enumerate_posets import (
    are_isomorphic,
    canonical_form,
    enumerate_bounded_posets,
    enumerate_posets,
)
from .verify import ClaimResult, has_sn_el_labelling, verify_theorems

__all__ = [name for name in dir() if not name.startswith("_")]
