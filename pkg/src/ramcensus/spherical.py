"""Spherical generating systems, disjointness, and surface invariants.

A spherical system of generators is an ordered tuple of group elements
that generates the group and multiplies to the identity.  A ramification
structure is a disjoint pair of such systems whose branch data give
integral curve genera >= 2.  Genus arithmetic is exact rational; chi and
its derived invariants are exact integers by construction.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .groups import GroupContext, element_order, element_to_bits, span_rank


class InternalInvariantError(AssertionError):
    """Two formulas that must agree exactly disagreed; always a bug."""


class RejectionReason(enum.Enum):
    NOT_GENERATING = "not-generating"
    PRODUCT_NONZERO = "product-nonzero"
    NOT_DISJOINT = "not-disjoint"
    GENUS_NOT_INTEGRAL = "genus-not-integral"
    GENUS_BELOW_TWO = "genus-below-two"


class RamificationError(ValueError):
    def __init__(self, reason: RejectionReason, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason.value}" + (f": {detail}" if detail else ""))


def tuple_type(tup: tuple[int, ...]) -> tuple[int, ...]:
    """Unordered type: the sorted multiset of entry orders."""
    return tuple(sorted(element_order(v) for v in tup))


def format_type(tau: tuple[int, ...]) -> str:
    """Compact exponent form, e.g. (2,2,2) -> "2^3"."""
    parts = []
    i = 0
    while i < len(tau):
        j = i
        while j < len(tau) and tau[j] == tau[i]:
            j += 1
        parts.append(f"{tau[i]}^{j - i}" if j - i > 1 else f"{tau[i]}")
        i = j
    return ",".join(parts)


def _check_entries(tup: tuple[int, ...], ctx: GroupContext) -> None:
    if not tup:
        raise ValueError("empty tuple")
    for v in tup:
        ctx.check_element(v)
        if v == 0:
            raise ValueError("tuple entries must be nonzero (order >= 2)")


def is_spherical_system(tup: tuple[int, ...], ctx: GroupContext) -> bool:
    """True iff the entries generate the group and sum to zero."""
    _check_entries(tup, ctx)
    if span_rank(tup) != ctx.rank:
        return False
    acc = 0
    for v in tup:
        acc ^= v
    return acc == 0


def sigma_set(tup: tuple[int, ...], ctx: GroupContext) -> frozenset[int]:
    """Elements with fixed points: all conjugates of all powers of entries.

    Over (Z/2Z)^k conjugation is trivial and powers of an involution are
    {0, v}, so this collapses to {0} plus the distinct entries.  The
    literal union formula is kept alongside as a cross-check oracle.
    """
    _check_entries(tup, ctx)
    return frozenset({0, *tup})


def sigma_set_literal(tup: tuple[int, ...], ctx: GroupContext) -> frozenset[int]:
    """Literal evaluation of the union over conjugates of powers."""
    _check_entries(tup, ctx)
    out: set[int] = set()
    for g in ctx.elements():
        for v in tup:
            power = 0
            for _ in range(element_order(v)):
                out.add(ctx.add(ctx.add(g, power), ctx.inverse(g)))
                power = ctx.add(power, v)
    return frozenset(out)


def are_disjoint(t1: tuple[int, ...], t2: tuple[int, ...], ctx: GroupContext) -> bool:
    """Disjointness of systems: the sigma sets meet only in the identity."""
    return sigma_set(t1, ctx) & sigma_set(t2, ctx) == {0}


def genus_from_type(group_order: int, tau: tuple[int, ...]) -> Fraction:
    """Covering-curve genus: g = 1 + |G| (-2 + sum(1 - 1/m_i)) / 2, exact."""
    if group_order < 1:
        raise ValueError("group order must be positive")
    if any(m < 2 for m in tau):
        raise ValueError("branching orders must be >= 2")
    s = Fraction(-2) + sum(1 - Fraction(1, m) for m in tau)
    return 1 + Fraction(group_order) * s / 2


@dataclass(frozen=True)
class SurfaceInvariants:
    genus1: int
    genus2: int
    chi: int
    k2: int
    euler: int
    irregularity: int = 0


def surface_invariants(
    group_order: int, tau1: tuple[int, ...], tau2: tuple[int, ...]
) -> SurfaceInvariants:
    """Invariants of the quotient surface from group order and both types.

    chi is computed from the product formula and cross-checked against
    (g1-1)(g2-1)/|G|; e = 4 chi and K^2 = 8 chi.  Both curve quotients are
    rational here, so the irregularity is 0.
    """
    g1 = genus_from_type(group_order, tau1)
    g2 = genus_from_type(group_order, tau2)
    s1 = Fraction(-2) + sum(1 - Fraction(1, m) for m in tau1)
    s2 = Fraction(-2) + sum(1 - Fraction(1, m) for m in tau2)
    chi = Fraction(group_order) * s1 * s2 / 4
    chi_alt = (g1 - 1) * (g2 - 1) / Fraction(group_order)
    if chi != chi_alt:
        raise InternalInvariantError(f"chi formulas disagree: {chi} vs {chi_alt}")
    if chi.denominator != 1 or g1.denominator != 1 or g2.denominator != 1:
        raise InternalInvariantError(f"non-integral invariants: chi={chi} g1={g1} g2={g2}")
    c = int(chi)
    return SurfaceInvariants(
        genus1=int(g1), genus2=int(g2), chi=c, k2=8 * c, euler=4 * c
    )


@dataclass(frozen=True)
class RamificationStructure:
    rank: int
    t1: tuple[int, ...]
    t2: tuple[int, ...]
    tau1: tuple[int, ...]
    tau2: tuple[int, ...]
    invariants: SurfaceInvariants

    @property
    def ctx(self) -> GroupContext:
        return GroupContext(self.rank)

    def to_record(self) -> dict:
        """Serializable record with bit-string tuples and invariant block."""
        inv = self.invariants
        return {
            "k": self.rank,
            "T1": [element_to_bits(v, self.rank) for v in self.t1],
            "T2": [element_to_bits(v, self.rank) for v in self.t2],
            "tau1": format_type(self.tau1),
            "tau2": format_type(self.tau2),
            "invariants": {
                "g1": inv.genus1,
                "g2": inv.genus2,
                "chi": inv.chi,
                "K2": inv.k2,
                "euler": inv.euler,
                "q": inv.irregularity,
            },
        }


def _tuple_failure(
    tup: tuple[int, ...], ctx: GroupContext
) -> RejectionReason | None:
    """First failing check for one candidate system, or None."""
    if span_rank(tup) != ctx.rank:
        return RejectionReason.NOT_GENERATING
    acc = 0
    for v in tup:
        acc ^= v
    if acc != 0:
        return RejectionReason.PRODUCT_NONZERO
    g = genus_from_type(ctx.order, tuple_type(tup))
    if g.denominator != 1:
        return RejectionReason.GENUS_NOT_INTEGRAL
    if g < 2:
        return RejectionReason.GENUS_BELOW_TWO
    return None


def ramification_failure(
    t1: tuple[int, ...], t2: tuple[int, ...], ctx: GroupContext
) -> RejectionReason | None:
    """Why (t1, t2) fails to be a ramification structure, or None if valid.

    Checks run in a fixed order: all conditions on t1, then on t2, then
    disjointness of the pair.
    """
    for tup in (t1, t2):
        _check_entries(tup, ctx)
        if len(tup) < 3:
            raise ValueError(f"systems must have length > 2, got {len(tup)}")
    for tup in (t1, t2):
        reason = _tuple_failure(tup, ctx)
        if reason is not None:
            return reason
    if not are_disjoint(t1, t2, ctx):
        return RejectionReason.NOT_DISJOINT
    return None


def validate_ramification(
    t1: tuple[int, ...], t2: tuple[int, ...], ctx: GroupContext
) -> RamificationStructure:
    """Validate a candidate pair and return it with cached invariants.

    Raises RamificationError carrying the first failing check.
    """
    reason = ramification_failure(t1, t2, ctx)
    if reason is not None:
        raise RamificationError(reason)
    tau1, tau2 = tuple_type(t1), tuple_type(t2)
    inv = surface_invariants(ctx.order, tau1, tau2)
    return RamificationStructure(
        rank=ctx.rank, t1=tuple(t1), t2=tuple(t2), tau1=tau1, tau2=tau2, invariants=inv
    )
