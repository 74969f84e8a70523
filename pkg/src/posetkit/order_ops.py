"""Meets, joins, relative meets/joins, viability, and left modularity.

The relative operations generalize meet and join to posets that are not
lattices: the meet of w and z relative to y is the greatest element of
{u : y <= u <= w, u <= z}, and dually for the join below z.  An element x
is viable when (x v y) ^_y z and (x ^ z) v^z y are well-defined for every
pair y <= z, and left modular when in addition the two always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import PreconditionViolated
from .poset import Chain, CheckReport, ElementId, Poset, _bits


@dataclass(frozen=True)
class LMWitness:
    """Concrete failure of viability or left modularity at (x, y, z)."""

    x: ElementId
    y: ElementId
    z: ElementId
    lhs: Optional[ElementId]
    rhs: Optional[ElementId]
    failure_kind: str  # JoinUndefined | MeetUndefined | RelMeetUndefined | RelJoinUndefined | NotEqual


def _least(p: Poset, mask: int) -> Optional[int]:
    """Index of the least element of the subset, or None.

    In a finite poset a subset has a least element exactly when it has a
    unique minimal element.
    """
    found = None
    for i in _bits(mask):
        if mask & p._down[i] & ~(1 << i) == 0:
            if found is not None:
                return None
            found = i
    return found


def _greatest(p: Poset, mask: int) -> Optional[int]:
    found = None
    for i in _bits(mask):
        if mask & p._up[i] & ~(1 << i) == 0:
            if found is not None:
                return None
            found = i
    return found


def join(p: Poset, a: ElementId, b: ElementId) -> Optional[ElementId]:
    """Least common upper bound of a and b, or None if there is none."""
    ai, bi = p._index_of(a), p._index_of(b)
    r = _least(p, p._up[ai] & p._up[bi])
    return None if r is None else p.elements[r]


def meet(p: Poset, a: ElementId, b: ElementId) -> Optional[ElementId]:
    """Greatest common lower bound of a and b, or None if there is none."""
    ai, bi = p._index_of(a), p._index_of(b)
    r = _greatest(p, p._down[ai] & p._down[bi])
    return None if r is None else p.elements[r]


def rel_meet(p: Poset, y: ElementId, w: ElementId, z: ElementId) -> Optional[ElementId]:
    """The meet of w and z relative to y: greatest of {u : y<=u<=w, u<=z}."""
    yi, wi, zi = p._index_of(y), p._index_of(w), p._index_of(z)
    if not (p._up[yi] >> wi) & 1:
        raise PreconditionViolated(f"{y!r} is not below {w!r}")
    if not (p._up[yi] >> zi) & 1:
        raise PreconditionViolated(f"{y!r} is not below {z!r}")
    r = _greatest(p, p._up[yi] & p._down[wi] & p._down[zi])
    return None if r is None else p.elements[r]


def rel_join(p: Poset, z: ElementId, w: ElementId, y: ElementId) -> Optional[ElementId]:
    """The join of w and y relative to z: least of {u : u>=w, u>=y, u<=z}."""
    zi, wi, yi = p._index_of(z), p._index_of(w), p._index_of(y)
    if not (p._up[wi] >> zi) & 1:
        raise PreconditionViolated(f"{w!r} is not below {z!r}")
    if not (p._up[yi] >> zi) & 1:
        raise PreconditionViolated(f"{y!r} is not below {z!r}")
    r = _least(p, p._down[zi] & p._up[wi] & p._up[yi])
    return None if r is None else p.elements[r]


def _modularity_scan(p: Poset, x: ElementId, check_equal: bool) -> CheckReport:
    xi = p._index_of(x)
    up_x, down_x = p._up[xi], p._down[xi]
    ids = p.elements
    n = len(p)
    for yi in range(n):
        up_y = p._up[yi]
        for zi in _bits(up_y):
            down_z = p._down[zi]
            jv = _least(p, up_x & up_y)
            if jv is None:
                return CheckReport(
                    False,
                    LMWitness(x, ids[yi], ids[zi], None, None, "JoinUndefined"),
                    "join with y undefined",
                )
            lhs = _greatest(p, up_y & p._down[jv] & down_z)
            if lhs is None:
                return CheckReport(
                    False,
                    LMWitness(x, ids[yi], ids[zi], None, None, "RelMeetUndefined"),
                    "relative meet undefined",
                )
            mv = _greatest(p, down_x & down_z)
            if mv is None:
                return CheckReport(
                    False,
                    LMWitness(x, ids[yi], ids[zi], None, None, "MeetUndefined"),
                    "meet with z undefined",
                )
            rhs = _least(p, down_z & p._up[mv] & up_y)
            if rhs is None:
                return CheckReport(
                    False,
                    LMWitness(x, ids[yi], ids[zi], None, None, "RelJoinUndefined"),
                    "relative join undefined",
                )
            if check_equal and lhs != rhs:
                return CheckReport(
                    False,
                    LMWitness(x, ids[yi], ids[zi], ids[lhs], ids[rhs], "NotEqual"),
                    "relative expressions disagree",
                )
    return CheckReport(True)


def is_viable_element(p: Poset, x: ElementId) -> CheckReport:
    """Both relative expressions are well-defined for every pair y <= z."""
    return _modularity_scan(p, x, check_equal=False)


def is_left_modular_element(p: Poset, x: ElementId) -> CheckReport:
    """x is viable and (x v y) ^_y z = (x ^ z) v^z y for every y <= z."""
    return _modularity_scan(p, x, check_equal=True)


def viable_elements(p: Poset) -> frozenset[ElementId]:
    return frozenset(x for x in p if is_viable_element(p, x))


def left_modular_elements(p: Poset) -> frozenset[ElementId]:
    return frozenset(x for x in p if is_left_modular_element(p, x))


def find_viable_chains(p: Poset) -> list[Chain]:
    """All maximal chains every element of which is viable."""
    good = viable_elements(p)
    return [m for m in p.maximal_chains() if all(u in good for u in m.nodes)]


def find_left_modular_chains(p: Poset) -> list[Chain]:
    """All maximal chains every element of which is left modular.

    The returned list is empty exactly when the poset is not left modular.
    """
    good = left_modular_elements(p)
    return [m for m in p.maximal_chains() if all(u in good for u in m.nodes)]
