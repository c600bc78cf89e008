"""Integer partitions: enumeration, conjugation and componentwise arithmetic.

A partition is stored as a tuple of weakly decreasing positive ints with no
trailing zeros; the empty tuple is the unique partition of 0.  Partitions
index both the irreducible characters and the conjugacy classes (cycle
types) of the symmetric group, and every canonical listing in this package
uses descending lexicographic order: (n) first, (1,...,1) last.
"""

from __future__ import annotations

from functools import cache

Partition = tuple[int, ...]

# Upper bound on the size of a partition accepted anywhere; desk-scale use
# never gets near it and it keeps arithmetic on parts trivially safe.
MAX_SIZE = 10_000


def validate(parts: Partition) -> Partition:
    """Check weak decrease and positivity, returning the partition unchanged."""
    total = 0
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"partition parts must be positive integers, got {parts!r}")
        if i > 0 and parts[i - 1] < p:
            raise ValueError(f"partition parts must be weakly decreasing, got {parts!r}")
        total += p
    if total > MAX_SIZE:
        raise ValueError(f"partition size {total} exceeds supported maximum {MAX_SIZE}")
    return tuple(parts)


def size(lam: Partition) -> int:
    return sum(lam)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order.

    (n) comes first and (1,...,1) last; the result is cached and must be
    treated as immutable.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > MAX_SIZE:
        raise ValueError(f"n={n} exceeds supported maximum {MAX_SIZE}")
    return tuple(_descending(n, n))


def _descending(n: int, cap: int):
    if n == 0:
        yield ()
        return
    for head in range(min(n, cap), 0, -1):
        for tail in _descending(n - head, head):
            yield (head,) + tail


def conjugate(lam: Partition) -> Partition:
    """Transpose of the diagram: part i of the result counts rows of length >= i."""
    if not lam:
        return ()
    out = []
    for i in range(1, lam[0] + 1):
        out.append(sum(1 for p in lam if p >= i))
    return tuple(out)


def add(lam: Partition, mu: Partition) -> Partition:
    """Componentwise sum, missing parts treated as 0."""
    k = max(len(lam), len(mu))
    return tuple(
        (lam[i] if i < len(lam) else 0) + (mu[i] if i < len(mu) else 0) for i in range(k)
    )


def add_conj(lam: Partition, mu: Partition) -> Partition:
    """Column-merging sum: conjugate of the componentwise sum of the conjugates."""
    return conjugate(add(conjugate(lam), conjugate(mu)))


def skew_outside_size(lam: Partition, mu: Partition) -> int:
    """Number of boxes of lam lying outside mu; 0 iff lam fits inside mu."""
    return sum(max(p - (mu[i] if i < len(mu) else 0), 0) for i, p in enumerate(lam))


def is_rectangle(lam: Partition) -> bool:
    """True iff all nonzero parts are equal; the empty partition counts."""
    return all(p == lam[0] for p in lam)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated partition syntax, e.g. "6,2,2"; "" is empty.

    Rejects zeros, non-integers and parts out of weakly decreasing order.
    """
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}: parts must be integers") from None
    return validate(parts)


def format_partition(lam: Partition) -> str:
    """Inverse of parse_partition."""
    return ",".join(str(p) for p in lam)
