"""Exact class-function arithmetic on S_n.

Class functions are integer vectors over the cycle-type classes in canonical
order.  All S_n characters are integer valued, so inner products reduce to
one exact division by n!; a division that does not come out exact means the
input was not a virtual character and is reported loudly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .character_table import CharacterTable
from .partitions import Partition, format_partition


@dataclass(frozen=True)
class ClassFunction:
    """Integer class function of S_n, indexed by cycle types in canonical order."""

    n: int
    values: tuple[int, ...]

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        if self.n != other.n:
            raise ValueError(f"size mismatch: S_{self.n} vs S_{other.n}")
        return ClassFunction(self.n, tuple(a * b for a, b in zip(self.values, other.values)))

    def power(self, k: int) -> "ClassFunction":
        if k < 1:
            raise ValueError("power must be positive")
        return ClassFunction(self.n, tuple(v**k for v in self.values))


@dataclass(frozen=True)
class Decomposition:
    """Multiplicities of the irreducible constituents of a character of S_n."""

    n: int
    mult: dict[Partition, int]

    def support(self) -> frozenset[Partition]:
        return frozenset(lam for lam, m in self.mult.items() if m > 0)

    def __getitem__(self, lam: Partition) -> int:
        return self.mult.get(lam, 0)

    def to_json_dict(self) -> dict:
        """JSON form with arbitrary-precision multiplicities as decimal strings."""
        return {
            "n": self.n,
            "mult": {format_partition(lam): str(m) for lam, m in self.mult.items() if m > 0},
        }


def irreducible(table: CharacterTable, lam: Partition) -> ClassFunction:
    return ClassFunction(table.n, table.row(lam))


def regular_character(table: CharacterTable) -> ClassFunction:
    """Character of the regular representation: |G| at the identity, 0 elsewhere."""
    vals = [0] * len(table.partitions)
    vals[table.identity_column] = table.group_order
    return ClassFunction(table.n, tuple(vals))


def inner_product(f: ClassFunction, g: ClassFunction, table: CharacterTable) -> int:
    """Exact inner product (1/n!) sum over classes of size * f * g."""
    if f.n != g.n or f.n != table.n:
        raise ValueError("inner_product arguments must share the same n")
    total = sum(s * a * b for s, a, b in zip(table.class_sizes, f.values, g.values))
    q, r = divmod(total, table.group_order)
    if r:
        raise ArithmeticError(
            f"inner product {total}/{table.group_order} is not an integer; "
            "input is not a virtual character"
        )
    return q


def pointwise_product(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    return f * g


def decompose(f: ClassFunction, table: CharacterTable) -> Decomposition:
    """Multiplicities of f against every irreducible, in canonical order.

    Raises if any multiplicity is negative: every caller here passes genuine
    characters, so negativity always means a bug upstream.
    """
    mult: dict[Partition, int] = {}
    for lam in table.partitions:
        m = inner_product(f, irreducible(table, lam), table)
        if m < 0:
            raise ValueError(f"negative multiplicity {m} at {lam}: input is not a character")
        if m:
            mult[lam] = m
    return Decomposition(f.n, mult)


def fixed_point_count(t: Partition) -> int:
    return sum(1 for c in t if c == 1)


def fixed_tuple_character(n: int, u: int, table: CharacterTable) -> ClassFunction:
    """Permutation character counting ordered u-tuples of distinct fixed points.

    Equals the character induced from the trivial character of the subgroup
    fixing u chosen points; u=0 gives the all-ones (trivial) character.
    Computed directly as a falling factorial of the fixed-point count, which
    keeps it an O(p(n)) construction independent of the Kronecker machinery.
    """
    if not 0 <= u <= n:
        raise ValueError(f"u must be in 0..{n}, got {u}")
    if table.n != n:
        raise ValueError("table does not match n")
    vals = []
    for t in table.partitions:
        fix = fixed_point_count(t)
        # Falling factorial; hits a zero factor whenever fix < u, so never negative.
        prod = 1
        for i in range(u):
            prod *= fix - i
        vals.append(prod)
    return ClassFunction(n, tuple(vals))


def power_exact(lam: Partition, k: int, table: CharacterTable) -> Decomposition:
    """Exact decomposition of the k-th pointwise power of the irreducible lam.

    This is the ground-truth oracle for the support-level dynamics; the
    multiplicities grow like degree**k, hence arbitrary-precision ints.
    """
    if k < 1:
        raise ValueError("k must be positive")
    chi = irreducible(table, lam)
    return decompose(chi.power(k), table)
