import pytest

from symcover.class_functions import power_exact
from symcover.partitions import conjugate, partitions_of
from symcover.support import full_support


def test_pair_support_against_exact_products(caches):
    # the support cache must agree with full decompositions
    for n in range(2, 7):
        cache = caches(n)
        table = cache.table
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                from symcover.class_functions import decompose, irreducible

                exact = decompose(
                    irreducible(table, lam) * irreducible(table, mu), table
                ).support()
                assert cache.pair_support(lam, mu) == exact


def test_power_sequence_matches_exact_powers(caches):
    # support dynamics vs the big-integer route, all shapes and exponents
    for n in range(2, 9):
        cache = caches(n)
        for lam in partitions_of(n):
            seq = cache.power_support_sequence(lam, max(n - 1, 1))
            for k, supports in enumerate(seq, start=1):
                assert supports == power_exact(lam, k, cache.table).support(), (lam, k)


def test_pair_support_identities(caches):
    cache = caches(6)
    for lam in partitions_of(6):
        # multiplying by the trivial or sign character permutes nothing or conjugates
        assert cache.pair_support((6,), lam) == frozenset({lam})
        assert cache.pair_support((1,) * 6, lam) == frozenset({conjugate(lam)})
        assert cache.pair_support(lam, (6,)) == cache.pair_support((6,), lam)


def test_support_step_requires_nonempty(caches):
    with pytest.raises(ValueError):
        caches(4).support_step(frozenset(), (3, 1))


def test_full_support(caches):
    assert full_support(4) == frozenset(partitions_of(4))


def test_stabilization_once_full_stays_full(caches):
    # once a power covers everything, the next power does too
    for n in range(5, 8):
        cache = caches(n)
        full = full_support(n)
        for lam in partitions_of(n):
            if cache.table.degree(lam) <= 1:
                continue
            seq = cache.power_support_sequence(lam, n)
            covered = [k for k, s in enumerate(seq, start=1) if s == full]
            if covered:
                first = covered[0]
                assert covered == list(range(first, n + 1))
