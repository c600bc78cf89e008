"""Covering numbers of tensor powers of S_n irreducibles, and the checks
built on them.

For a character chi, e is the least k with every irreducible appearing in
chi**k, and d is the least k with every irreducible appearing in some
chi**j, j <= k.  Both are found by walking the support dynamics from
{chi}; the walk is a deterministic map on a finite family of sets, so
revisiting a state proves the number does not exist, with no group-theoretic
precondition needed for termination.
"""

from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .character_table import CharacterTable, TableStore
from .class_functions import (
    decompose,
    fixed_tuple_character,
    irreducible,
    power_exact,
)
from .partitions import (
    Partition,
    add,
    add_conj,
    format_partition,
    is_rectangle,
    partitions_of,
    skew_outside_size,
)
from .support import SupportCache, full_support


@dataclass
class CharacterCovering:
    """Covering record for one irreducible character."""

    character: str
    degree: int
    e: int | None
    d: int | None
    e_witness_k: int | None
    d_witness_k: int | None
    faithful: bool
    center_order: int


@dataclass
class CoveringReport:
    group: str
    characters: list[CharacterCovering]
    e_max: int | None
    d_max: int | None


@dataclass
class VerifyReport:
    """Outcome of one verification run; failures name their counterexamples."""

    target: str
    scope: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def support_walk(seed, full: frozenset, step) -> tuple[int | None, int | None, int, int]:
    """Walk S_1={seed}, S_{k+1}=step(S_k) and return (e, d, e_k, d_k).

    e is the first k with S_k equal to full, d the first k with the running
    union equal to full; either is None when it does not exist.  A number
    that exists is its own witness step.  When the walk revisits a support
    set, the orbit is periodic from that point on and the cumulative union
    can no longer grow, so the step index of the revisit certifies
    nonexistence and is reported as the witness instead.
    """
    e = d = None
    e_k = d_k = 0
    seen: set[frozenset] = set()
    supports = frozenset([seed])
    union = supports
    k = 1
    while True:
        if e is None and supports == full:
            e = e_k = k
        if d is None and union == full:
            d = d_k = k
        if e is not None and d is not None:
            break
        if supports in seen:
            if e is None:
                e_k = k
            if d is None:
                d_k = k
            break
        seen.add(supports)
        supports = step(supports)
        union = union | supports
        k += 1
    return e, d, e_k, d_k


def covering_numbers(
    lam: Partition, cache: SupportCache
) -> tuple[int | None, int | None, int, int]:
    """(e, d, e_witness_k, d_witness_k) for the irreducible lam."""
    full = full_support(cache.table.n)
    return support_walk(lam, full, lambda s: cache.support_step(s, lam))


def e_of(lam: Partition, cache: SupportCache) -> int | None:
    return covering_numbers(lam, cache)[0]


def d_of(lam: Partition, cache: SupportCache) -> int | None:
    return covering_numbers(lam, cache)[1]


def kernel_order(table: CharacterTable, lam: Partition) -> int:
    deg = table.degree(lam)
    return sum(s for s, v in zip(table.class_sizes, table.row(lam)) if v == deg)


def character_center_order(table: CharacterTable, lam: Partition) -> int:
    deg = table.degree(lam)
    return sum(s for s, v in zip(table.class_sizes, table.row(lam)) if abs(v) == deg)


def covering_record(lam: Partition, cache: SupportCache) -> CharacterCovering:
    table = cache.table
    e, d, e_k, d_k = covering_numbers(lam, cache)
    return CharacterCovering(
        character=format_partition(lam),
        degree=table.degree(lam),
        e=e,
        d=d,
        e_witness_k=e_k,
        d_witness_k=d_k,
        faithful=kernel_order(table, lam) == 1,
        center_order=character_center_order(table, lam),
    )


def covering_survey(n: int, cache: SupportCache, threads: int = 1) -> CoveringReport:
    """Covering record for every irreducible of S_n.

    Linear characters appear in the records but are excluded from the e/d
    maxima, which range over the characters of degree > 1 only.  Records are
    assembled in canonical order whatever the thread count, so output bytes
    do not depend on scheduling.
    """
    if n < 2:
        raise ValueError("survey needs n >= 2")
    parts = partitions_of(n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(lambda lam: covering_record(lam, cache), parts))
    else:
        records = [covering_record(lam, cache) for lam in parts]
    nonlinear = [r for r in records if r.degree > 1]
    e_max = d_max = None
    if nonlinear and all(r.e is not None for r in nonlinear):
        e_max = max(r.e for r in nonlinear)
    if nonlinear and all(r.d is not None for r in nonlinear):
        d_max = max(r.d for r in nonlinear)
    return CoveringReport(group=f"S{n}", characters=records, e_max=e_max, d_max=d_max)


def _missing(n: int, supports: frozenset) -> list[Partition]:
    return sorted(full_support(n) - supports, reverse=True)


def verify_theorem1(n: int, cache: SupportCache) -> VerifyReport:
    """Both covering numbers equal n-1, in both directions, for S_n with n > 4.

    (a) every irreducible of degree > 1 covers by power n-1 and by the union
    of the first n-1 powers; (b) sharpness at lam=(n-1,1), k=n-2: the power
    misses something and the union misses exactly the single-column
    partition.
    """
    if n <= 4:
        raise ValueError("covering-number verification requires n > 4")
    report = VerifyReport("theorem1", f"n={n}")
    full = full_support(n)
    for lam in partitions_of(n):
        if cache.table.degree(lam) <= 1:
            continue
        seq = cache.power_support_sequence(lam, n - 1)
        report.checks += 1
        if seq[-1] != full:
            miss = _missing(n, seq[-1])[0]
            report.failures.append(
                f"power {n-1} of {format_partition(lam)} misses {format_partition(miss)}"
            )
        report.checks += 1
        union = frozenset().union(*seq)
        if union != full:
            miss = _missing(n, union)[0]
            report.failures.append(
                f"union through {n-1} for {format_partition(lam)} misses {format_partition(miss)}"
            )
    eps = (n - 1, 1)
    seq = cache.power_support_sequence(eps, n - 2)
    sign = (1,) * n
    report.checks += 1
    if seq[-1] == full:
        report.failures.append(f"power {n-2} of {format_partition(eps)} already covers")
    union = frozenset().union(*seq)
    report.checks += 1
    if _missing(n, union) != [sign]:
        missing = ",".join(format_partition(m) for m in _missing(n, union))
        report.failures.append(
            f"union through {n-2} for {format_partition(eps)} misses [{missing}], "
            f"expected exactly {format_partition(sign)}"
        )
    return report


# Reference multiplicities of the constituents of the square of the (6,2,2)
# character over the 19-member family {alpha +' (10-|alpha|) : |alpha| <= 5}.
# Frozen reference data; verify_table1 recomputes every entry from scratch.
SQUARE_622_MULTIPLICITIES: dict[Partition, int] = {
    (10,): 1,
    (9, 1): 1,
    (8, 2): 3,
    (8, 1, 1): 1,
    (7, 3): 3,
    (7, 2, 1): 5,
    (7, 1, 1, 1): 3,
    (6, 4): 4,
    (6, 3, 1): 7,
    (6, 2, 2): 7,
    (6, 2, 1, 1): 7,
    (6, 1, 1, 1, 1): 4,
    (5, 5): 1,
    (5, 4, 1): 7,
    (5, 3, 2): 8,
    (5, 3, 1, 1): 10,
    (5, 2, 2, 1): 8,
    (5, 2, 1, 1, 1): 7,
    (5, 1, 1, 1, 1, 1): 2,
}


def square_family_10() -> list[Partition]:
    """The family {alpha +' (10-|alpha|) : |alpha| <= 5} in canonical order."""
    members = set()
    for a in range(6):
        for alpha in partitions_of(a):
            members.add(add_conj(alpha, (10 - a,)))
    return sorted(members, reverse=True)


def verify_table1(store: TableStore) -> VerifyReport:
    """Reproduce all 19 reference multiplicities in the (6,2,2) square exactly."""
    report = VerifyReport("table1", "n=10")
    family = square_family_10()
    report.checks += 1
    if len(family) != 19 or set(family) != set(SQUARE_622_MULTIPLICITIES):
        report.failures.append(f"family has {len(family)} members, expected the 19 reference rows")
        return report
    table = store.table(10)
    square = power_exact((6, 2, 2), 2, table)
    for nu in family:
        report.checks += 1
        got = square[nu]
        want = SQUARE_622_MULTIPLICITIES[nu]
        if got != want:
            report.failures.append(f"multiplicity at {format_partition(nu)}: got {got}, want {want}")
    return report


def verify_non_rectangle(n: int, cache: SupportCache) -> VerifyReport:
    """Squares of non-rectangular irreducibles contain every constituent of
    the two-point fixing character."""
    if n < 3:
        raise ValueError("non-rectangle verification requires n >= 3")
    report = VerifyReport("non-rectangle", f"n={n}")
    table = cache.table
    theta2 = decompose(fixed_tuple_character(n, 2, table), table).support()
    for lam in partitions_of(n):
        if is_rectangle(lam):
            continue
        report.checks += 1
        missing = theta2 - cache.pair_support(lam, lam)
        if missing:
            miss = sorted(missing, reverse=True)[0]
            report.failures.append(
                f"square of {format_partition(lam)} misses {format_partition(miss)}"
            )
    return report


def verify_rectangle(n: int, cache: SupportCache) -> VerifyReport:
    """Fourth powers of nonlinear rectangular irreducibles contain every
    constituent of the five-point fixing character; for n >= 10 the two
    intermediate containments are checked as well."""
    if n <= 6:
        raise ValueError("rectangle verification requires n > 6")
    report = VerifyReport("rectangle", f"n={n}")
    table = cache.table
    theta5 = decompose(fixed_tuple_character(n, 5, table), table).support()
    rectangles = [
        lam for lam in partitions_of(n) if is_rectangle(lam) and table.degree(lam) > 1
    ]
    for lam in rectangles:
        seq = cache.power_support_sequence(lam, 4)
        report.checks += 1
        missing = theta5 - seq[3]
        if missing:
            miss = sorted(missing, reverse=True)[0]
            report.failures.append(
                f"4th power of {format_partition(lam)} misses {format_partition(miss)}"
            )
        if n >= 10:
            mu = (n - 4, 2, 2)
            report.checks += 1
            if mu not in seq[1]:
                report.failures.append(
                    f"square of {format_partition(lam)} misses {format_partition(mu)}"
                )
    if n >= 10:
        mu = (n - 4, 2, 2)
        report.checks += 1
        missing = theta5 - cache.pair_support(mu, mu)
        if missing:
            miss = sorted(missing, reverse=True)[0]
            report.failures.append(
                f"square of {format_partition(mu)} misses {format_partition(miss)}"
            )
    return report


def verify_theta_move(n: int, u: int, v: int, table: CharacterTable) -> VerifyReport:
    """Constituents of (u-tuple fixing character)**v * chi are exactly the
    shapes reachable by moving at most u*v boxes of lam, for every lam."""
    report = VerifyReport("theta-move", f"n={n} u={u} v={v}")
    theta_pow = fixed_tuple_character(n, u, table).power(v)
    for lam in partitions_of(n):
        report.checks += 1
        got = decompose(theta_pow * irreducible(table, lam), table).support()
        want = frozenset(
            mu for mu in partitions_of(n) if skew_outside_size(lam, mu) <= u * v
        )
        if got != want:
            extra = sorted(got - want, reverse=True)
            missing = sorted(want - got, reverse=True)
            detail = []
            if missing:
                detail.append(f"missing {format_partition(missing[0])}")
            if extra:
                detail.append(f"extra {format_partition(extra[0])}")
            report.failures.append(f"lam={format_partition(lam)}: " + ", ".join(detail))
    return report


def verify_semigroup(
    store: TableStore, samples: int = 200, seed: int = 0, max_total: int = 9
) -> VerifyReport:
    """Random spot-checks that constituent membership is preserved by both
    partition additions: nu+gamma appears in the product of the row-wise sums
    and in the product of the column-wise sums."""
    report = VerifyReport("semigroup", f"samples={samples} seed={seed} max={max_total}")
    rng = random.Random(seed)
    caches: dict[int, SupportCache] = {}

    def cache_for(n: int) -> SupportCache:
        if n not in caches:
            caches[n] = SupportCache(store.table(n))
        return caches[n]

    for _ in range(samples):
        a = rng.randint(1, max_total - 1)
        b = rng.randint(1, max_total - a)
        lam, mu = (rng.choice(partitions_of(a)) for _ in range(2))
        alpha, beta = (rng.choice(partitions_of(b)) for _ in range(2))
        nu = rng.choice(sorted(cache_for(a).pair_support(lam, mu)))
        gamma = rng.choice(sorted(cache_for(b).pair_support(alpha, beta)))
        target = add(nu, gamma)
        big = cache_for(a + b)
        report.checks += 1
        if target not in big.pair_support(add(lam, alpha), add(mu, beta)):
            report.failures.append(
                f"{format_partition(target)} not in product of row-sums for "
                f"({format_partition(lam)},{format_partition(mu)})+"
                f"({format_partition(alpha)},{format_partition(beta)})"
            )
        report.checks += 1
        if target not in big.pair_support(add_conj(lam, alpha), add_conj(mu, beta)):
            report.failures.append(
                f"{format_partition(target)} not in product of column-sums for "
                f"({format_partition(lam)},{format_partition(mu)})+'"
                f"({format_partition(alpha)},{format_partition(beta)})"
            )
    return report


def verify_brauer(n: int, cache: SupportCache) -> VerifyReport:
    """d is bounded by the number of distinct character values, for every
    irreducible of degree > 1.

    The bound constrains d where it exists; a character whose powers never
    accumulate everything (possible for n <= 4) satisfies it vacuously.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    report = VerifyReport("brauer", f"n={n}")
    table = cache.table
    for lam in partitions_of(n):
        if table.degree(lam) <= 1:
            continue
        report.checks += 1
        d = d_of(lam, cache)
        bound = len(set(table.row(lam)))
        if d is not None and d > bound:
            report.failures.append(
                f"{format_partition(lam)}: d={d} exceeds value-count bound {bound}"
            )
    return report
