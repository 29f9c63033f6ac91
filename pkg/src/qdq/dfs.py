"""Decoherence-free subspaces of Abelian Pauli error groups.

Supported groups are elementary Abelian 2-groups stored phase-free; every
sign lives in the characters.  Each sign character chi yields a projector
(1/|G|) sum_g chi(g) g whose range, when it hosts a whole number of qubits,
is exported as a stabilizer code with every generator marked passive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from . import pauli, statevec
from .pauli import PauliString
from .stabilizer import RowSpace, StabilizerCode, _row

MAX_PROJECTOR_QUBITS = 12


@dataclass(frozen=True)
class AbelianErrorGroup:
    """Mutually commuting, phase-free Pauli errors closed under products."""

    n: int
    elements: tuple[PauliString, ...]

    @staticmethod
    def from_strings(texts: Sequence[str]) -> "AbelianErrorGroup":
        elements = tuple(pauli.parse(t) for t in texts)
        group = AbelianErrorGroup(elements[0].n, elements)
        validate_group(group)
        return group


def validate_group(group: AbelianErrorGroup) -> None:
    """Raise ValueError on any structural violation."""
    elems = group.elements
    keys = {(e.x, e.z) for e in elems}
    if len(keys) != len(elems):
        raise ValueError("group elements are not distinct")
    if (0, 0) not in keys:
        raise ValueError("group must contain the identity")
    if len(elems) & (len(elems) - 1):
        raise ValueError(f"group order {len(elems)} is not a power of 2")
    for e in elems:
        if e.n != group.n:
            raise ValueError(f"element {e} does not act on {group.n} qubits")
        if e.phase != 0:
            raise ValueError(f"element {e} carries a phase; store elements sign-free")
    for a, b in itertools.combinations(elems, 2):
        if not pauli.commutes(a, b):
            raise ValueError(f"elements {a} and {b} anticommute")
        product = pauli.multiply(a, b)
        if (product.x, product.z) not in keys:
            raise ValueError(f"product {a}*{b} leaves the element set")
        if product.phase != 0:
            raise ValueError(
                f"product {a}*{b} = {product} picks up a phase; "
                "not a valid sign-free error group"
            )


@dataclass(frozen=True)
class Character:
    """Multiplicative sign character: a map from group elements to +/-1."""

    values: Mapping[tuple[int, int], int]

    def value(self, element: PauliString) -> int:
        return self.values[(element.x, element.z)]

    def signs(self, group: AbelianErrorGroup) -> tuple[int, ...]:
        return tuple(self.value(g) for g in group.elements)


def _generating_set(group: AbelianErrorGroup) -> list[PauliString]:
    space = RowSpace([])
    gens: list[PauliString] = []
    for e in group.elements:
        if e.x == 0 and e.z == 0:
            continue
        if space.add(_row(e)):
            gens.append(e)
    return gens


def characters(group: AbelianErrorGroup) -> list[Character]:
    """All sign characters, the trivial (all +1) one first."""
    validate_group(group)
    gens = _generating_set(group)
    space = RowSpace(_row(g) for g in gens)
    out: list[Character] = []
    for signs in itertools.product((1, -1), repeat=len(gens)):
        values: dict[tuple[int, int], int] = {}
        for e in group.elements:
            combo = space.decompose(_row(e))
            chi = 1
            for i in range(len(gens)):
                if (combo >> i) & 1:
                    chi *= signs[i]
            values[(e.x, e.z)] = chi
        out.append(Character(values))
    return out


def projector(group: AbelianErrorGroup, chi: Character) -> np.ndarray:
    """(1/|G|) sum_g chi(g) g as a dense matrix; idempotent and Hermitian."""
    if group.n > MAX_PROJECTOR_QUBITS:
        raise ValueError(
            f"dense projector capped at {MAX_PROJECTOR_QUBITS} qubits, got {group.n}"
        )
    dim = 1 << group.n
    total = np.zeros((dim, dim), dtype=np.complex128)
    for g in group.elements:
        total += chi.value(g) * statevec.pauli_matrix(g)
    return total / len(group.elements)


def df_basis(
    group: AbelianErrorGroup, chi: Character, tol: float = 1e-10
) -> list[np.ndarray]:
    """Orthonormal basis of the projector range.

    The projector is applied to computational basis states in ascending
    index order; zero images are discarded and the survivors orthonormalized,
    so the output ordering is reproducible.
    """
    proj = projector(group, chi)
    basis: list[np.ndarray] = []
    for index in range(proj.shape[0]):
        vec = proj[:, index].copy()
        for b in basis:
            vec -= np.vdot(b, vec) * b
        norm = np.linalg.norm(vec)
        if norm > tol:
            basis.append(vec / norm)
    return basis


def as_stabilizer_code(group: AbelianErrorGroup, chi: Character) -> StabilizerCode:
    """Export the subspace as a fully passive stabilizer code.

    Generators are chi(g)*g over a generating set; the range must hold at
    least one whole qubit (dimension 2^k, k >= 1).
    """
    gens = _generating_set(group)
    signed = tuple(
        PauliString(g.n, g.x, g.z, 0 if chi.value(g) == 1 else 2) for g in gens
    )
    k = group.n - len(gens)
    rank = int(round(np.trace(projector(group, chi)).real))
    if rank != (1 << k) or k < 1:
        raise ValueError(
            f"character range has dimension {rank}; cannot host whole qubits"
        )
    logical_x, logical_z = _complete_logicals(group.n, signed, k)
    return StabilizerCode(
        name=f"dfs-{group.n}" if len(gens) else f"trivial-{group.n}",
        n=group.n,
        k=k,
        generators=signed,
        logical_x=tuple(logical_x),
        logical_z=tuple(logical_z),
        passive_mask=(True,) * len(signed),
    )


def _complete_logicals(
    n: int, generators: tuple[PauliString, ...], k: int
) -> tuple[list[PauliString], list[PauliString]]:
    """Greedy symplectic completion of the generator set to k logical pairs.

    Pure-X candidates are scanned first for X_bar and pure-Z (then general)
    candidates for Z_bar, in qubit order, so conventional representatives
    like XI / ZZ come out for the two-qubit collective-flip group.
    """

    def candidates(letter: str):
        for size in range(1, n + 1):
            for qubits in itertools.combinations(range(n), size):
                p = pauli.identity(n)
                for q in qubits:
                    p = pauli.multiply(p, pauli.single(n, q, letter))
                yield p
        for x in range(1 << n):
            for z in range(1 << n):
                yield PauliString(n, x, z, 0)

    span = RowSpace(_row(g) for g in generators)
    logical_x: list[PauliString] = []
    logical_z: list[PauliString] = []
    for _ in range(k):
        chosen = logical_x + logical_z
        x_bar = next(
            (
                c
                for c in candidates("X")
                if all(pauli.commutes(c, g) for g in generators)
                and all(pauli.commutes(c, p) for p in chosen)
                and not span.contains(_row(c))
            ),
            None,
        )
        if x_bar is None:
            raise ValueError("failed to complete logical X operators")
        # Anticommuting with x_bar already guarantees independence from the
        # span of the generators and earlier logicals, which all commute.
        z_bar = next(
            (
                c
                for c in candidates("Z")
                if all(pauli.commutes(c, g) for g in generators)
                and all(pauli.commutes(c, p) for p in chosen)
                and not pauli.commutes(c, x_bar)
            ),
            None,
        )
        if z_bar is None:
            raise ValueError("failed to complete logical Z operators")
        span.add(_row(x_bar))
        span.add(_row(z_bar))
        logical_x.append(x_bar)
        logical_z.append(z_bar)
    return logical_x, logical_z
