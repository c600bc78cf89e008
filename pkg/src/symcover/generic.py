"""Covering numbers over an externally supplied character table.

The symmetric-group engine works in exact integers; here values are complex
floats (rational entries allowed in the input as "p/q" strings) and every
reported integer is certified by an explicit nearness check instead.  Inner
products further than `int_tol` from an integer, or rows further than
`ortho_tol` from orthonormal, reject the table rather than producing a
report built on noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .covering import CharacterCovering, CoveringReport, support_walk

DEFAULT_INT_TOL = 1e-6
DEFAULT_ORTHO_TOL = 1e-9


class SchemaError(ValueError):
    """The input does not have the shape of a character table."""


class CertificationError(ValueError):
    """The table is well-formed but numerically inconsistent."""


@dataclass(frozen=True)
class GenericCharTable:
    name: str
    class_names: tuple[str, ...]
    class_sizes: tuple[int, ...]
    char_names: tuple[str, ...]
    values: tuple[tuple[complex, ...], ...]

    @property
    def order(self) -> int:
        return sum(self.class_sizes)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "classes": [
                {"name": c, "size": s}
                for c, s in zip(self.class_names, self.class_sizes)
            ],
            "irreducibles": [
                {"name": c, "values": [[v.real, v.imag] for v in row]}
                for c, row in zip(self.char_names, self.values)
            ],
        }


def _component(x) -> float:
    if isinstance(x, str):
        try:
            return float(Fraction(x))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad rational entry {x!r}") from exc
    if isinstance(x, (int, float)) and not isinstance(x, bool):
        return float(x)
    raise SchemaError(f"value component must be a number or 'p/q' string, got {x!r}")


def _parse_value(entry) -> complex:
    if not isinstance(entry, (list, tuple)) or len(entry) != 2:
        raise SchemaError(f"each value must be a [re, im] pair, got {entry!r}")
    return complex(_component(entry[0]), _component(entry[1]))


def parse_generic_table(data) -> GenericCharTable:
    """Validate a decoded JSON object against the table schema.

    Shape errors raise SchemaError.  The identity class must come first,
    which is checked here through the requirement that every row starts
    with a real positive degree.
    """
    if not isinstance(data, dict):
        raise SchemaError("top level must be an object")
    name = data.get("name")
    if not isinstance(name, str) or not name:
        raise SchemaError("'name' must be a nonempty string")
    classes = data.get("classes")
    irreducibles = data.get("irreducibles")
    if not isinstance(classes, list) or not classes:
        raise SchemaError("'classes' must be a nonempty list")
    if not isinstance(irreducibles, list) or not irreducibles:
        raise SchemaError("'irreducibles' must be a nonempty list")
    class_names = []
    class_sizes = []
    for c in classes:
        if not isinstance(c, dict) or not isinstance(c.get("name"), str):
            raise SchemaError("each class needs a string 'name'")
        size = c.get("size")
        if not isinstance(size, int) or isinstance(size, bool) or size < 1:
            raise SchemaError(f"class {c['name']!r} needs a positive integer 'size'")
        class_names.append(c["name"])
        class_sizes.append(size)
    if len(irreducibles) != len(classes):
        raise SchemaError(
            f"{len(irreducibles)} irreducibles for {len(classes)} classes; "
            "the table must be square"
        )
    char_names = []
    rows = []
    for entry in irreducibles:
        if not isinstance(entry, dict) or not isinstance(entry.get("name"), str):
            raise SchemaError("each irreducible needs a string 'name'")
        vals = entry.get("values")
        if not isinstance(vals, list) or len(vals) != len(classes):
            raise SchemaError(
                f"irreducible {entry['name']!r} needs exactly {len(classes)} values"
            )
        row = tuple(_parse_value(v) for v in vals)
        deg = row[0]
        if abs(deg.imag) > 1e-9 or deg.real <= 0:
            raise SchemaError(
                f"irreducible {entry['name']!r} has degree {deg}; the identity "
                "class must be listed first"
            )
        char_names.append(entry["name"])
        rows.append(row)
    if len(set(class_names)) != len(class_names) or len(set(char_names)) != len(char_names):
        raise SchemaError("class and irreducible names must be unique")
    return GenericCharTable(
        name=name,
        class_names=tuple(class_names),
        class_sizes=tuple(class_sizes),
        char_names=tuple(char_names),
        values=tuple(rows),
    )


def certify_orthogonality(gt: GenericCharTable, ortho_tol: float = DEFAULT_ORTHO_TOL) -> None:
    order = gt.order
    for i, ri in enumerate(gt.values):
        for j in range(i, len(gt.values)):
            rj = gt.values[j]
            ip = sum(s * a * b.conjugate() for s, a, b in zip(gt.class_sizes, ri, rj))
            want = order if i == j else 0
            if abs(ip - want) > ortho_tol * order:
                raise CertificationError(
                    f"rows {gt.char_names[i]!r} and {gt.char_names[j]!r} are not "
                    f"orthonormal: <.,.> = {ip / order}"
                )


def _certified_int(x: complex, int_tol: float, what: str) -> int:
    near = round(x.real)
    if abs(x - near) > int_tol:
        raise CertificationError(f"{what} = {x} is not within {int_tol} of an integer")
    return near


class _GenericKron:
    """Pairwise product supports over the float table, pairs memoized."""

    def __init__(self, gt: GenericCharTable, int_tol: float):
        self.gt = gt
        self.int_tol = int_tol
        self._pairs: dict[tuple[int, int], frozenset[int]] = {}

    def pair_support(self, i: int, j: int) -> frozenset[int]:
        key = (i, j) if i <= j else (j, i)
        cached = self._pairs.get(key)
        if cached is not None:
            return cached
        gt = self.gt
        prod = [a * b for a, b in zip(gt.values[i], gt.values[j])]
        support = set()
        for k, row in enumerate(gt.values):
            ip = sum(
                s * p * v.conjugate()
                for s, p, v in zip(gt.class_sizes, prod, row)
            ) / gt.order
            mult = _certified_int(
                ip,
                self.int_tol,
                f"<{gt.char_names[i]} {gt.char_names[j]}, {gt.char_names[k]}>",
            )
            if mult < 0:
                raise CertificationError(
                    f"negative multiplicity {mult} of {gt.char_names[k]!r} in "
                    f"{gt.char_names[i]!r} * {gt.char_names[j]!r}"
                )
            if mult > 0:
                support.add(k)
        result = frozenset(support)
        self._pairs[key] = result
        return result

    def step(self, supports: frozenset[int], i: int) -> frozenset[int]:
        out: set[int] = set()
        for j in supports:
            out |= self.pair_support(i, j)
        return frozenset(out)


def generic_covering(
    gt: GenericCharTable,
    int_tol: float = DEFAULT_INT_TOL,
    ortho_tol: float = DEFAULT_ORTHO_TOL,
) -> CoveringReport:
    """Kernel, center, faithfulness and covering numbers for every row.

    Equality tests against the degree (kernel and center membership) reuse
    int_tol as the nearness tolerance.
    """
    certify_orthogonality(gt, ortho_tol)
    kron = _GenericKron(gt, int_tol)
    full = frozenset(range(len(gt.values)))
    records = []
    for i, row in enumerate(gt.values):
        deg = _certified_int(row[0], int_tol, f"degree of {gt.char_names[i]}")
        kernel = sum(
            s for s, v in zip(gt.class_sizes, row) if abs(v - row[0]) <= int_tol
        )
        center = sum(
            s for s, v in zip(gt.class_sizes, row) if abs(abs(v) - row[0].real) <= int_tol
        )
        e, d, e_k, d_k = support_walk(i, full, lambda s, i=i: kron.step(s, i))
        records.append(
            CharacterCovering(
                character=gt.char_names[i],
                degree=deg,
                e=e,
                d=d,
                e_witness_k=e_k,
                d_witness_k=d_k,
                faithful=kernel == 1,
                center_order=center,
            )
        )
    nonlinear = [r for r in records if r.degree > 1]
    e_max = d_max = None
    if nonlinear and all(r.e is not None for r in nonlinear):
        e_max = max(r.e for r in nonlinear)
    if nonlinear and all(r.d is not None for r in nonlinear):
        d_max = max(r.d for r in nonlinear)
    return CoveringReport(group=gt.name, characters=records, e_max=e_max, d_max=d_max)


def dihedral_table(m: int) -> GenericCharTable:
    """Character table of the dihedral group of order 2m, m odd.

    Classes: identity, one class per rotation pair r^k ~ r^-k, and the
    reflections.  Besides the two linear characters there are (m-1)/2
    two-dimensional ones with values 2cos(2 pi j k / m) on rotations and 0
    on reflections.
    """
    if m < 3 or m % 2 == 0:
        raise ValueError("m must be an odd integer >= 3")
    half = (m - 1) // 2
    class_names = ["1"] + [f"r{k}" for k in range(1, half + 1)] + ["s"]
    class_sizes = [1] + [2] * half + [m]
    char_names = ["triv", "det"] + [f"rho{j}" for j in range(1, half + 1)]
    rows = [
        tuple(complex(1, 0) for _ in class_names),
        tuple([complex(1, 0)] * (half + 1) + [complex(-1, 0)]),
    ]
    for j in range(1, half + 1):
        row = [complex(2, 0)]
        for k in range(1, half + 1):
            row.append(complex(2 * math.cos(2 * math.pi * j * k / m), 0))
        row.append(complex(0, 0))
        rows.append(tuple(row))
    return GenericCharTable(
        name=f"D{2 * m}",
        class_names=tuple(class_names),
        class_sizes=tuple(class_sizes),
        char_names=tuple(char_names),
        values=tuple(rows),
    )
