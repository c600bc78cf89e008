"""Exact constituents of powers of symmetric group characters.

Character tables come from the Murnaghan-Nakayama recursion in arbitrary
precision integers; covering numbers e and d come from support dynamics
with cycle detection; the same covering logic runs over externally supplied
character tables with tolerance-certified arithmetic.
"""

from .character_table import CharacterTable, TableStore, build_table, compute_table
from .class_functions import (
    ClassFunction,
    Decomposition,
    decompose,
    fixed_tuple_character,
    inner_product,
    irreducible,
    power_exact,
)
from .covering import (
    CharacterCovering,
    CoveringReport,
    VerifyReport,
    covering_numbers,
    covering_survey,
    d_of,
    e_of,
)
from .generic import GenericCharTable, dihedral_table, generic_covering, parse_generic_table
from .partitions import Partition, conjugate, parse_partition, partitions_of
from .support import SupportCache, full_support

__version__ = "0.1.0"
