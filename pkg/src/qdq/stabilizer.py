"""Stabilizer codes: validation, syndromes, error classification, degeneracy.

A code is held as its generator list plus logical operator representatives
and a per-generator passive mask (a passive generator is itself a corrected
error and needs no measurement).  Group membership for classification and
degeneracy is decided modulo phase: E_a E_b = -S acts on codewords exactly
like S up to a global phase.  :func:`group_element_phase` reports the exact
phase separately for auditing.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

from . import pauli
from .pauli import PauliString


class ErrorKind(str, enum.Enum):
    STABILIZER = "stabilizer"
    CORRECTABLE_IN_TABLE = "correctable-in-table"
    DETECTABLE = "detectable"
    LOGICAL = "logical"


@dataclass(frozen=True)
class ErrorClassification:
    kind: ErrorKind
    syndrome: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    failures: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class StabilizerCode:
    """[[n, k]] code: generators, logical representatives, passive mask."""

    name: str
    n: int
    k: int
    generators: tuple[PauliString, ...]
    logical_x: tuple[PauliString, ...]
    logical_z: tuple[PauliString, ...]
    passive_mask: tuple[bool, ...]

    def __post_init__(self) -> None:
        if len(self.passive_mask) != len(self.generators):
            raise ValueError("passive mask length must match generator count")

    def generator_strings(self) -> list[str]:
        return [str(g) for g in self.generators]


# ---------------------------------------------------------------------------
# GF(2) row spaces over packed (x | z) rows
# ---------------------------------------------------------------------------


def _row(p: PauliString) -> int:
    return (p.x << p.n) | p.z


class RowSpace:
    """Echelonized GF(2) span of symplectic rows, with combination tracking."""

    def __init__(self, rows: Iterable[int]):
        # Each basis entry is (pivot_bit, row, combo) where combo records
        # which input rows were folded in.
        self.basis: list[tuple[int, int, int]] = []
        self.n_rows = 0
        for row in rows:
            self.add(row)

    def add(self, row: int) -> bool:
        """Fold in one row; returns True if it enlarged the span."""
        combo = 1 << self.n_rows
        self.n_rows += 1
        row, combo = self._reduce(row, combo)
        if row == 0:
            return False
        self.basis.append((row.bit_length() - 1, row, combo))
        self.basis.sort(reverse=True)
        return True

    def _reduce(self, row: int, combo: int) -> tuple[int, int]:
        for pivot, brow, bcombo in self.basis:
            if (row >> pivot) & 1:
                row ^= brow
                combo ^= bcombo
        return row, combo

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, row: int) -> bool:
        reduced, _ = self._reduce(row, 0)
        return reduced == 0

    def decompose(self, row: int) -> Optional[int]:
        """Bit mask over input rows whose XOR equals ``row``, or None."""
        reduced, combo = self._reduce(row, 0)
        return combo if reduced == 0 else None


@functools.lru_cache(maxsize=None)
def _generator_space(generators: tuple[PauliString, ...]) -> RowSpace:
    return RowSpace(_row(g) for g in generators)


def in_stabilizer_group(code: StabilizerCode, error: PauliString) -> bool:
    """Membership in the generated group, modulo phase."""
    if error.n != code.n:
        raise ValueError(f"error acts on {error.n} qubits, code has {code.n}")
    return _generator_space(code.generators).contains(_row(error))


def group_element_phase(code: StabilizerCode, error: PauliString) -> Optional[int]:
    """Exact phase exponent of error relative to the matching group element.

    Returns e such that error = i**e * S where S is the product of
    generators with the same bit pattern, or None if the bits are not in
    the group.  e == 0 means the error literally is a stabilizer element.
    """
    combo = _generator_space(code.generators).decompose(_row(error))
    if combo is None:
        return None
    product = pauli.identity(code.n)
    for i, g in enumerate(code.generators):
        if (combo >> i) & 1:
            product = pauli.multiply(product, g)
    return (error.phase - product.phase) % 4


def stabilizer_group(code: StabilizerCode) -> tuple[PauliString, ...]:
    """All 2**len(generators) group elements with exact phases."""
    elements = [pauli.identity(code.n)]
    for g in code.generators:
        elements += [pauli.multiply(e, g) for e in elements]
    return tuple(elements)


# ---------------------------------------------------------------------------
# Core operations
# ---------------------------------------------------------------------------


def syndrome(code: StabilizerCode, error: PauliString) -> tuple[int, ...]:
    """Bit i is 1 iff the error anticommutes with generators[i]."""
    if error.n != code.n:
        raise ValueError(f"error acts on {error.n} qubits, code has {code.n}")
    return tuple(0 if pauli.commutes(g, error) else 1 for g in code.generators)


def classify(
    code: StabilizerCode,
    error: PauliString,
    table: Optional[dict[tuple[int, ...], PauliString]] = None,
) -> ErrorClassification:
    """Classify an error as stabilizer / logical / correctable / detectable.

    With a decoder table, a nonzero syndrome found in the table yields
    CORRECTABLE_IN_TABLE; otherwise nonzero syndromes are DETECTABLE.
    """
    syn = syndrome(code, error)
    if any(syn):
        if table is not None and syn in table:
            return ErrorClassification(ErrorKind.CORRECTABLE_IN_TABLE, syn)
        return ErrorClassification(ErrorKind.DETECTABLE, syn)
    if in_stabilizer_group(code, error):
        return ErrorClassification(ErrorKind.STABILIZER, syn)
    return ErrorClassification(ErrorKind.LOGICAL, syn)


def are_degenerate(code: StabilizerCode, a: PauliString, b: PauliString) -> bool:
    """True iff a*b lies in the stabilizer group (same action on codewords)."""
    return classify(code, pauli.multiply(a, b)).kind is ErrorKind.STABILIZER


def validate(code: StabilizerCode) -> ValidationReport:
    """Check every structural invariant; failures name the offending parts."""
    failures: list[str] = []
    gens = code.generators

    for (i, a), (j, b) in itertools.combinations(enumerate(gens), 2):
        if not pauli.commutes(a, b):
            failures.append(f"generators {i} and {j} anticommute: {a} vs {b}")

    space = _generator_space(gens)
    if space.rank != len(gens):
        failures.append(
            f"generators are dependent: rank {space.rank} < {len(gens)} rows"
        )
    if len(gens) != code.n - code.k:
        failures.append(
            f"generator count {len(gens)} does not equal n-k = {code.n - code.k}"
        )

    # -I in the group would show up as a nonzero phase on a bit-trivial
    # product; exhaustive over the group at desk scale.
    for element in stabilizer_group(code):
        if element.x == 0 and element.z == 0 and element.phase != 0:
            failures.append("-I (or +/-i I) lies in the generated group")
            break

    for label, ops in (("logical_x", code.logical_x), ("logical_z", code.logical_z)):
        if len(ops) != code.k:
            failures.append(f"{label} has {len(ops)} entries, expected k={code.k}")
        for i, op in enumerate(ops):
            for j, g in enumerate(gens):
                if not pauli.commutes(op, g):
                    failures.append(f"{label}[{i}] anticommutes with generator {j}")
            if space.contains(_row(op)):
                failures.append(f"{label}[{i}] lies in the stabilizer group")

    for i, lx in enumerate(code.logical_x):
        for j, lz in enumerate(code.logical_z):
            expected = i == j
            if pauli.commutes(lx, lz) == expected:
                rel = "must anticommute with" if expected else "must commute with"
                failures.append(f"logical_x[{i}] {rel} logical_z[{j}]")
    for i, a in enumerate(code.logical_x):
        for j, b in enumerate(code.logical_x):
            if i < j and not pauli.commutes(a, b):
                failures.append(f"logical_x[{i}] anticommutes with logical_x[{j}]")
    for i, a in enumerate(code.logical_z):
        for j, b in enumerate(code.logical_z):
            if i < j and not pauli.commutes(a, b):
                failures.append(f"logical_z[{i}] anticommutes with logical_z[{j}]")

    return ValidationReport(not failures, tuple(failures))


# ---------------------------------------------------------------------------
# Built-in codes
# ---------------------------------------------------------------------------


def _code(
    name: str,
    generators: list[str],
    logical_x: list[str],
    logical_z: list[str],
    passive: list[bool],
    k: int = 1,
) -> StabilizerCode:
    gens = tuple(pauli.parse(g) for g in generators)
    n = gens[0].n if gens else len(logical_x[0])
    return StabilizerCode(
        name=name,
        n=n,
        k=k,
        generators=gens,
        logical_x=tuple(pauli.parse(s) for s in logical_x),
        logical_z=tuple(pauli.parse(s) for s in logical_z),
        passive_mask=tuple(passive),
    )


_BUILTINS = {
    # Three-qubit bit-flip repetition code.
    "repetition-3": lambda: _code(
        "repetition-3", ["ZZI", "ZIZ"], ["XXX"], ["ZII"], [False, False]
    ),
    # Five-qubit code correcting an arbitrary single-qubit error.
    "knill-laflamme-5": lambda: _code(
        "knill-laflamme-5",
        ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        ["XXXXX"],
        ["ZZZZZ"],
        [False] * 4,
    ),
    # Two-qubit subspace immune to collective bit flips; its lone generator
    # is itself the corrected error, hence passive.
    "dfs-2": lambda: _code("dfs-2", ["XX"], ["XI"], ["ZZ"], [True]),
}


def builtin(name: str) -> StabilizerCode:
    try:
        builder = _BUILTINS[name]
    except KeyError:
        valid = ", ".join(sorted(_BUILTINS))
        raise ValueError(f"unknown code {name!r}; valid names: {valid}") from None
    return builder()


def builtin_names() -> list[str]:
    return sorted(_BUILTINS)


def logical_y(code: StabilizerCode, i: int = 0) -> PauliString:
    """Canonical logical Y representative, i * X_bar * Z_bar."""
    product = pauli.multiply(code.logical_x[i], code.logical_z[i])
    return PauliString(product.n, product.x, product.z, (product.phase + 1) % 4)
