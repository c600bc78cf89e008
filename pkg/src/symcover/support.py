"""Support-level Kronecker dynamics.

Multiplicities of high tensor powers blow up like degree**k, but the
covering numbers only need the *sets* of constituents.  Because constituent
sets of products depend only on constituent sets of the factors, the map

    S  ->  union over mu in S of constituents(chi_mu * chi_lam)

acting on sets of partitions reproduces the constituent set of every power
of chi_lam while touching nothing bigger than pairwise products of
irreducibles.  Pairwise supports are memoized per unordered pair and only
computed for pairs a run actually visits.
"""

from __future__ import annotations

from .character_table import CharacterTable
from .class_functions import decompose, irreducible
from .partitions import Partition, partitions_of

SupportSet = frozenset[Partition]


def full_support(n: int) -> SupportSet:
    """The set of all irreducibles of S_n."""
    return frozenset(partitions_of(n))


class SupportCache:
    """Memoized constituent sets of pairwise products over one table.

    Insert-if-absent with values that are pure functions of the key, so
    concurrent duplicate computation is harmless.
    """

    def __init__(self, table: CharacterTable):
        self.table = table
        self._pairs: dict[tuple[Partition, Partition], SupportSet] = {}

    def pair_support(self, lam: Partition, mu: Partition) -> SupportSet:
        """Constituent set of the product of two irreducibles."""
        key = (lam, mu) if lam >= mu else (mu, lam)
        got = self._pairs.get(key)
        if got is None:
            product = irreducible(self.table, lam) * irreducible(self.table, mu)
            got = decompose(product, self.table).support()
            self._pairs[key] = got
        return got

    def support_step(self, supports: SupportSet, lam: Partition) -> SupportSet:
        """One step of the dynamics: union of pair supports against lam."""
        if not supports:
            raise ValueError("support set must be nonempty")
        out: set[Partition] = set()
        for mu in supports:
            out |= self.pair_support(mu, lam)
        return frozenset(out)

    def power_support_sequence(self, lam: Partition, k_max: int) -> list[SupportSet]:
        """Constituent sets of the first k_max powers of chi_lam, in order."""
        if k_max < 1:
            raise ValueError("k_max must be positive")
        seq = [frozenset([lam])]
        for _ in range(k_max - 1):
            seq.append(self.support_step(seq[-1], lam))
        return seq
