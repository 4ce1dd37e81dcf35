"""Arithmetic in (Z/2Z)^k and its automorphism group GL(k,2).

Group elements are ints used as GF(2) bit vectors: coordinate 1 is the
least-significant bit.  The group law is XOR, every element is an
involution, and 0 is the identity.  Automorphisms are k x k invertible
matrices over GF(2), stored as tuples of k row bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

AUT_RANK_CAP = 5  # |GL(5,2)| = 9_999_360; anything larger is not enumerable here


class FeasibilityError(ValueError):
    """A requested computation exceeds a configured structural cap."""


@dataclass(frozen=True)
class GroupContext:
    """The ambient group (Z/2Z)^rank."""

    rank: int

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")

    @property
    def order(self) -> int:
        return 1 << self.rank

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    def check_element(self, v: int) -> int:
        if not 0 <= v < self.order:
            raise ValueError(f"element {v} not in (Z/2Z)^{self.rank}")
        return v

    def add(self, a: int, b: int) -> int:
        """Group law: coordinatewise sum mod 2."""
        self.check_element(a)
        self.check_element(b)
        return a ^ b

    def inverse(self, v: int) -> int:
        """Every element is its own inverse."""
        return self.check_element(v)


def element_order(v: int) -> int:
    return 1 if v == 0 else 2


def span_rank(elements: Iterable[int]) -> int:
    """GF(2) dimension of the span of the given bit vectors.

    Empty input has rank 0.
    """
    basis: list[int] = []
    for v in elements:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def element_to_bits(v: int, rank: int) -> str:
    """Serialize as "b1b2...bk" with coordinate 1 first."""
    if not 0 <= v < (1 << rank):
        raise ValueError(f"element {v} does not fit rank {rank}")
    return "".join("1" if (v >> i) & 1 else "0" for i in range(rank))


def element_from_bits(bits: str) -> int:
    if not bits or set(bits) - {"0", "1"}:
        raise ValueError(f"bad bit string {bits!r}")
    return sum(1 << i for i, c in enumerate(bits) if c == "1")


def element_from_coords(coords: Iterable[int]) -> int:
    """Build an element from a (c1, ..., ck) coordinate sequence."""
    return sum(1 << i for i, c in enumerate(coords) if c & 1)


# -- GF(2) matrices (rows as bitmasks over columns) --------------------------


def mat_identity(rank: int) -> tuple[int, ...]:
    return tuple(1 << i for i in range(rank))


def mat_apply(mat: tuple[int, ...], v: int) -> int:
    """Matrix-vector product over GF(2); bit i of the result is row_i . v."""
    out = 0
    for i, row in enumerate(mat):
        out |= ((row & v).bit_count() & 1) << i
    return out


def mat_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Matrix product a.b, so mat_apply(mat_mul(a, b), v) = a(b(v))."""
    rows = []
    for arow in a:
        acc = 0
        j = 0
        r = arow
        while r:
            if r & 1:
                acc ^= b[j]
            r >>= 1
            j += 1
        rows.append(acc)
    return tuple(rows)


def mat_is_invertible(mat: tuple[int, ...], rank: int) -> bool:
    if len(mat) != rank or any(row >> rank for row in mat):
        return False
    return span_rank(mat) == rank


def enumerate_aut(ctx: GroupContext, cap: int = AUT_RANK_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every matrix of GL(rank, 2) exactly once, deterministically.

    Matrices are produced by extending row prefixes with the smallest
    vectors outside the span of the rows chosen so far, so the stream
    order is fixed and restartable by index.
    """
    if ctx.rank > cap:
        raise FeasibilityError(
            f"Aut enumeration capped at rank {cap}; got rank {ctx.rank}"
        )
    k = ctx.rank
    order = 1 << k

    def extend(rows: tuple[int, ...], span: frozenset[int]) -> Iterator[tuple[int, ...]]:
        if len(rows) == k:
            yield rows
            return
        for v in range(1, order):
            if v in span:
                continue
            yield from extend(rows + (v,), span | frozenset(s ^ v for s in span))

    yield from extend((), frozenset({0}))


def apply_aut(phi: tuple[int, ...], tup: tuple[int, ...], ctx: GroupContext) -> tuple[int, ...]:
    """Apply an automorphism entrywise to a tuple of group elements."""
    if len(phi) != ctx.rank:
        raise ValueError(f"matrix has {len(phi)} rows, expected {ctx.rank}")
    for v in tup:
        ctx.check_element(v)
    return tuple(mat_apply(phi, v) for v in tup)


def aut_permutation_table(phi: tuple[int, ...], rank: int) -> tuple[int, ...]:
    """The automorphism as a lookup table over all 2^rank elements."""
    order = 1 << rank
    cols = [mat_apply(phi, 1 << j) for j in range(rank)]
    table = [0] * order
    for v in range(1, order):
        lsb = v & -v
        table[v] = table[v ^ lsb] ^ cols[lsb.bit_length() - 1]
    return tuple(table)


@lru_cache(maxsize=8)
def _cached_aut_tables(rank: int) -> tuple[tuple[int, ...], ...]:
    ctx = GroupContext(rank)
    return tuple(aut_permutation_table(m, rank) for m in enumerate_aut(ctx))


def iter_aut_tables(ctx: GroupContext, cap: int = AUT_RANK_CAP) -> Iterator[tuple[int, ...]]:
    """Stream permutation tables of all automorphisms; cached for rank <= 4."""
    if ctx.rank > cap:
        raise FeasibilityError(
            f"Aut enumeration capped at rank {cap}; got rank {ctx.rank}"
        )
    if ctx.rank <= 4:
        yield from _cached_aut_tables(ctx.rank)
    else:
        for m in enumerate_aut(ctx, cap=cap):
            yield aut_permutation_table(m, ctx.rank)


def gl_order(rank: int) -> int:
    """|GL(rank, 2)| = prod_{i<rank} (2^rank - 2^i)."""
    n = 1 << rank
    out = 1
    for i in range(rank):
        out *= n - (1 << i)
    return out
