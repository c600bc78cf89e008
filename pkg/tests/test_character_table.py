import itertools
import math
import os

import pytest

from symcover.character_table import (
    CacheError,
    build_table,
    cache_path,
    class_size,
    compute_table,
    mn_value,
    read_table,
    verify_orthogonality,
    write_table,
)
from symcover.partitions import conjugate, partitions_of


def cycle_type(perm):
    n = len(perm)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def brute_table(n):
    """Character table without the border-strip recursion.

    Permutation characters on ordered set partitions (tabloids) decompose
    with a unitriangular multiplicity matrix in lexicographic order, so the
    irreducibles fall out by inner-product elimination.
    """
    perms = list(itertools.permutations(range(n)))
    classes = partitions_of(n)
    reps = {}
    sizes = dict.fromkeys(classes, 0)
    for p in perms:
        t = cycle_type(p)
        sizes[t] += 1
        reps.setdefault(t, p)

    def tabloids(lam):
        result = []

        def rec(rest, acc):
            if len(acc) == len(lam):
                result.append(tuple(acc))
                return
            k = lam[len(acc)]
            for block in itertools.combinations(sorted(rest), k):
                fs = frozenset(block)
                rec(rest - fs, acc + [fs])

        rec(frozenset(range(n)), [])
        return result

    def psi(lam):
        tabs = tabloids(lam)
        vals = []
        for t in classes:
            p = reps[t]
            fixed = sum(
                1
                for tab in tabs
                if all(frozenset(p[i] for i in block) == block for block in tab)
            )
            vals.append(fixed)
        return vals

    def inner(f, g):
        num = sum(sizes[t] * a * b for t, a, b in zip(classes, f, g))
        assert num % math.factorial(n) == 0
        return num // math.factorial(n)

    chis = {}
    for lam in classes:  # lexicographic order refines dominance
        row = psi(lam)
        for mu, chi in chis.items():
            m = inner(row, chi)
            row = [a - m * b for a, b in zip(row, chi)]
        chis[lam] = row
    return classes, sizes, chis


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_table_matches_tabloid_construction(n):
    classes, sizes, chis = brute_table(n)
    table = compute_table(n)
    assert table.partitions == classes
    for lam in classes:
        assert list(table.row(lam)) == chis[lam], lam
    for i, t in enumerate(classes):
        assert table.class_sizes[i] == sizes[t]


def test_s3_by_hand():
    table = compute_table(3)
    assert table.partitions == ((3,), (2, 1), (1, 1, 1))
    assert table.class_sizes == (2, 3, 1)
    assert table.row((3,)) == (1, 1, 1)
    assert table.row((2, 1)) == (-1, 0, 2)
    assert table.row((1, 1, 1)) == (1, -1, 1)


def test_class_sizes_by_enumeration():
    for n in range(1, 7):
        counts = {}
        for p in itertools.permutations(range(n)):
            t = cycle_type(p)
            counts[t] = counts.get(t, 0) + 1
        for t, c in counts.items():
            assert class_size(n, t) == c


def hook_degree(lam):
    n = sum(lam)
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= row - j + conj[j] - i - 1
    return math.factorial(n) // prod


def test_degrees_match_hook_lengths(store):
    for n in range(1, 11):
        table = store.table(n)
        for lam in table.partitions:
            assert table.degree(lam) == hook_degree(lam)


def test_degrees_square_sum_to_group_order(store):
    for n in range(1, 13):
        table = store.table(n)
        degs = [table.degree(lam) for lam in table.partitions]
        assert all(d > 0 for d in degs)
        assert sum(d * d for d in degs) == math.factorial(n)


def test_standard_character_counts_fixed_points(store):
    for n in range(2, 13):
        table = store.table(n)
        for t in table.partitions:
            fix = sum(1 for part in t if part == 1)
            assert table.value((n - 1, 1), t) == fix - 1


def test_conjugate_row_is_sign_twist(store):
    for n in range(2, 11):
        table = store.table(n)
        for lam in table.partitions:
            for t in table.partitions:
                sign = (-1) ** (n - len(t))
                assert table.value(conjugate(lam), t) == sign * table.value(lam, t)


def test_orthogonality_up_to_12(store):
    for n in range(1, 13):
        verify_orthogonality(store.table(n))


def test_mn_value_checks_sizes():
    assert mn_value((2, 1), (3,)) == -1
    with pytest.raises(ValueError):
        mn_value((2, 1), (2, 2))


def test_cache_round_trip(tmp_path):
    table = build_table(6, cache_dir=str(tmp_path))
    path = cache_path(str(tmp_path), 6)
    assert os.path.exists(path)
    again = read_table(str(tmp_path), 6)
    assert again == table
    # rewriting produces identical bytes
    before = open(path, "rb").read()
    write_table(table, str(tmp_path))
    assert open(path, "rb").read() == before


def test_cache_detects_corruption(tmp_path):
    build_table(5, cache_dir=str(tmp_path))
    path = cache_path(str(tmp_path), 5)
    data = open(path).read()
    open(path, "w").write(data.replace("SHA256:", "SHA256:0", 1))
    with pytest.raises(CacheError):
        read_table(str(tmp_path), 5)


def test_corrupt_cache_is_recomputed_and_repaired(tmp_path, capsys):
    build_table(5, cache_dir=str(tmp_path))
    path = cache_path(str(tmp_path), 5)
    with open(path, "a") as fh:
        fh.write("junk\n")
    table = build_table(5, cache_dir=str(tmp_path))
    assert "recomputing" in capsys.readouterr().err
    assert read_table(str(tmp_path), 5) == table


def test_build_table_rejects_out_of_range():
    with pytest.raises(ValueError):
        build_table(0)
    with pytest.raises(ValueError):
        build_table(21)
