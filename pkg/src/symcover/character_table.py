"""Exact character tables of the symmetric group.

Character values are computed with the Murnaghan-Nakayama border-strip
recursion over a beta-set encoding of shapes, entirely in Python ints, so
every entry, class size and inner product downstream is exact at any n.

Tables are expensive relative to everything built on top of them, so they
persist in a per-n cache file:

    SYMCOVER-TABLE v1 n=<n> p=<p(n)>
    <partitions, canonical order, space separated>
    <class sizes, decimal, canonical cycle-type order>
    ... p(n) rows of p(n) decimal integers (row = irreducible) ...
    SHA256:<hex of all preceding bytes>

A failed checksum is treated as corruption: the table is recomputed and the
file rewritten, with a warning on stderr.
"""

from __future__ import annotations

import hashlib
import os
import sys
import tempfile
from functools import cache
from math import factorial

from .partitions import Partition, format_partition, parse_partition, partitions_of

DEFAULT_MAX_N = 20

_CACHE_MAGIC = "SYMCOVER-TABLE v1"


class CacheError(Exception):
    """A table cache file is unreadable or fails its checksum."""


def class_size(n: int, t: Partition) -> int:
    """Number of permutations of cycle type t: n! over the centralizer order."""
    if sum(t) != n:
        raise ValueError(f"cycle type {t} is not a partition of {n}")
    z = 1
    mult: dict[int, int] = {}
    for c in t:
        mult[c] = mult.get(c, 0) + 1
    for length, m in mult.items():
        z *= length**m * factorial(m)
    return factorial(n) // z


def _strip_removals(shape: Partition, length: int):
    """Yield (sign, smaller shape) for every removable border strip of the
    given length.

    Beta-set encoding: with m rows, beta_i = shape_i + (m-1-i) is strictly
    decreasing; removing a strip of the given length means lowering one
    beta value by `length` without colliding, and the strip height is the
    number of beta values jumped over.
    """
    m = len(shape)
    beta = [shape[i] + (m - 1 - i) for i in range(m)]
    present = set(beta)
    for i, b in enumerate(beta):
        nb = b - length
        if nb < 0 or nb in present:
            continue
        height = sum(1 for c in beta if nb < c < b)
        new_beta = sorted((nb if j == i else c for j, c in enumerate(beta)), reverse=True)
        new_shape = tuple(v - (m - 1 - k) for k, v in enumerate(new_beta))
        yield (-1) ** height, tuple(p for p in new_shape if p > 0)


@cache
def _mn(shape: Partition, cycles: Partition) -> int:
    if not cycles:
        return 1
    head, rest = cycles[0], cycles[1:]
    total = 0
    for sign, smaller in _strip_removals(shape, head):
        total += sign * _mn(smaller, rest)
    return total


def mn_value(lam: Partition, t: Partition) -> int:
    """Character value of the irreducible indexed by lam at cycle type t.

    Cycles are consumed in decreasing length order; intermediate results are
    memoized on (remaining shape, remaining cycles) and shared process-wide.
    """
    if sum(lam) != sum(t):
        raise ValueError(f"size mismatch: |{lam}| != |{t}|")
    return _mn(lam, tuple(sorted(t, reverse=True)))


class CharacterTable:
    """Square table of exact character values of S_n.

    Rows (irreducibles) and columns (cycle types) both run over the
    partitions of n in canonical descending lexicographic order, so the
    identity class (1,...,1) is the last column.  Instances are immutable
    and safe to share.
    """

    def __init__(
        self,
        n: int,
        parts: tuple[Partition, ...],
        class_sizes: tuple[int, ...],
        values: tuple[tuple[int, ...], ...],
    ):
        self.n = n
        self.partitions = parts
        self.class_sizes = class_sizes
        self.values = values
        self.index = {lam: i for i, lam in enumerate(parts)}
        self.group_order = factorial(n)
        self.identity_column = len(parts) - 1

    def __repr__(self) -> str:
        return f"CharacterTable(n={self.n}, p={len(self.partitions)})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return (
            self.n == other.n
            and self.partitions == other.partitions
            and self.class_sizes == other.class_sizes
            and self.values == other.values
        )

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self.index[lam]]

    def degree(self, lam: Partition) -> int:
        return self.values[self.index[lam]][self.identity_column]

    def value(self, lam: Partition, t: Partition) -> int:
        return self.values[self.index[lam]][self.index[t]]


def compute_table(n: int) -> CharacterTable:
    parts = partitions_of(n)
    sizes = tuple(class_size(n, t) for t in parts)
    values = tuple(tuple(mn_value(lam, t) for t in parts) for lam in parts)
    return CharacterTable(n, parts, sizes, values)


def verify_orthogonality(table: CharacterTable) -> None:
    """Raise if either orthogonality relation fails anywhere in the table.

    Checked at build time so a recursion bug surfaces at the source rather
    than as a wrong covering number later.
    """
    order = table.group_order
    sizes = table.class_sizes
    vals = table.values
    p = len(vals)
    if sum(sizes) != order:
        raise AssertionError(f"class sizes of S_{table.n} do not sum to {table.n}!")
    for i in range(p):
        if vals[i][-1] <= 0:
            raise AssertionError(f"non-positive degree in row {table.partitions[i]}")
        for j in range(i, p):
            got = sum(s * a * b for s, a, b in zip(sizes, vals[i], vals[j]))
            want = order if i == j else 0
            if got != want:
                raise AssertionError(
                    f"row orthogonality fails for {table.partitions[i]}, {table.partitions[j]}"
                )
    for c in range(p):
        for c2 in range(c, p):
            got = sum(row[c] * row[c2] for row in vals)
            want = order // sizes[c] if c == c2 else 0
            if got != want:
                raise AssertionError(
                    f"column orthogonality fails for {table.partitions[c]}, {table.partitions[c2]}"
                )


def _table_payload(table: CharacterTable) -> str:
    lines = [
        f"{_CACHE_MAGIC} n={table.n} p={len(table.partitions)}",
        " ".join(format_partition(lam) for lam in table.partitions),
        " ".join(str(s) for s in table.class_sizes),
    ]
    lines.extend(" ".join(str(v) for v in row) for row in table.values)
    return "\n".join(lines) + "\n"


def cache_path(cache_dir: str, n: int) -> str:
    return os.path.join(cache_dir, "sn", f"{n}.tbl")


def write_table(table: CharacterTable, cache_dir: str) -> str:
    path = cache_path(cache_dir, table.n)
    os.makedirs(os.path.dirname(path), exist_ok=True)
    payload = _table_payload(table)
    digest = hashlib.sha256(payload.encode()).hexdigest()
    # Write-then-rename so a concurrent reader never sees a half-written file.
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
    with os.fdopen(fd, "w") as fh:
        fh.write(payload)
        fh.write(f"SHA256:{digest}\n")
    os.replace(tmp, path)
    return path


def read_table(cache_dir: str, n: int) -> CharacterTable:
    path = cache_path(cache_dir, n)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    lines = text.splitlines()
    if len(lines) < 4 or not lines[-1].startswith("SHA256:"):
        raise CacheError(f"{path}: truncated or missing checksum")
    payload = "\n".join(lines[:-1]) + "\n"
    digest = hashlib.sha256(payload.encode()).hexdigest()
    if lines[-1] != f"SHA256:{digest}":
        raise CacheError(f"{path}: checksum mismatch")
    head = lines[0].split()
    if (
        len(head) != 4
        or " ".join(head[:2]) != _CACHE_MAGIC
        or head[2] != f"n={n}"
    ):
        raise CacheError(f"{path}: bad header {lines[0]!r}")
    try:
        p = int(head[3].removeprefix("p="))
        parts = tuple(parse_partition(tok) for tok in lines[1].split())
        if len(parts) != p or len(lines) != 4 + p:
            raise CacheError(f"{path}: wrong shape")
        sizes = tuple(int(tok) for tok in lines[2].split())
        values = tuple(tuple(int(tok) for tok in line.split()) for line in lines[3 : 3 + p])
    except ValueError as exc:
        raise CacheError(f"{path}: unparsable content: {exc}") from None
    if any(len(r) != p for r in values) or len(sizes) != p:
        raise CacheError(f"{path}: wrong shape")
    return CharacterTable(n, parts, sizes, values)


def build_table(n: int, cache_dir: str | None = None, max_n: int = DEFAULT_MAX_N) -> CharacterTable:
    """Return the verified character table of S_n, using the cache when possible.

    A cached file with a valid checksum is trusted as-is; anything else is
    recomputed, verified against both orthogonality relations, and written
    back (corruption additionally warns on stderr).
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n must be in 1..{max_n}, got {n}")
    if cache_dir is not None and os.path.exists(cache_path(cache_dir, n)):
        try:
            return read_table(cache_dir, n)
        except CacheError as exc:
            print(f"warning: {exc}; recomputing", file=sys.stderr)
    table = compute_table(n)
    verify_orthogonality(table)
    if cache_dir is not None:
        write_table(table, cache_dir)
    return table


class TableStore:
    """Build-once access to character tables across a run."""

    def __init__(self, cache_dir: str | None = None, max_n: int = DEFAULT_MAX_N):
        self.cache_dir = cache_dir
        self.max_n = max_n
        self._tables: dict[int, CharacterTable] = {}

    def table(self, n: int) -> CharacterTable:
        if n not in self._tables:
            self._tables[n] = build_table(n, self.cache_dir, self.max_n)
        return self._tables[n]
