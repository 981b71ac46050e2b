"""Entanglement negativity, TEN and logarithmic purity of stabilizer states.

For a stabilizer mixed state, the negativity with respect to a vertex
subset A is half the GF(2) rank of the anticommutation matrix of the
generators truncated to A.  Values are exact half-integers, returned as
``fractions.Fraction`` in log-base-2 units.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .f2core import BitMatrix, rank_of_ints
from .lattice import Region, TenComplex
from .pauli import PauliWord, StabilizerState


def truncate(g: PauliWord, r: Region) -> PauliWord:
    """Restrict a Pauli word to the region's vertices.

    Components on region vertices are kept in increasing-vertex order;
    the result acts on ``len(r)`` qubits.
    """
    if r.n_qubits != g.n:
        raise ValueError("region defined on a different qubit count")
    x = z = 0
    for i, v in enumerate(sorted(r.vertices)):
        x |= ((g.x >> v) & 1) << i
        z |= ((g.z >> v) & 1) << i
    return PauliWord(x, z, len(r.vertices))


def _truncated_anticommutation(a: PauliWord, b: PauliWord, mask: int) -> int:
    return ((a.x & b.z & mask).bit_count() + (a.z & b.x & mask).bit_count()) & 1


def k_matrix(s: StabilizerState, r: Region) -> BitMatrix:
    """Anticommutation matrix of the generators truncated to the region.

    Entry (l, l') is 1 iff truncated generators l and l' anticommute;
    the matrix is symmetric with zero diagonal, and its GF(2) rank is
    twice the negativity.
    """
    gens = s.generators
    mask = r.mask
    m = len(gens)
    rows = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if _truncated_anticommutation(gens[i], gens[j], mask):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return BitMatrix.from_ints(rows, m)


def _straddlers(gens: Sequence[PauliWord], mask: int, full: int) -> list[PauliWord]:
    out_mask = full & ~mask
    return [g for g in gens if (g.support & mask) and (g.support & out_mask)]


def negativity(s: StabilizerState, r: Region) -> Fraction:
    """Half the GF(2) rank of the truncated anticommutation matrix.

    Equals log2 of the trace norm of the partial transpose over the
    region.  Generators supported entirely inside or entirely outside
    the region commute with every truncated generator (their truncated
    overlaps reproduce full-operator commutators), so only
    boundary-straddling generators are assembled into the matrix; the
    rank — hence the value — is unchanged.
    """
    full = (1 << s.n_qubits) - 1
    gens = _straddlers(s.generators, r.mask, full)
    mask = r.mask
    m = len(gens)
    rows = [0] * m
    for i in range(m):
        gi = gens[i]
        for j in range(i + 1, m):
            if _truncated_anticommutation(gi, gens[j], mask):
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Fraction(rank_of_ints(rows), 2)


def ten(s: StabilizerState, c: TenComplex) -> Fraction:
    """Topological entanglement negativity of the three-region complex.

    The seven-term combination cancels boundary-law and corner
    contributions, leaving the universal constant: 2 for the color code,
    1 for the maximally decohered state (log-2 units).
    """
    n = lambda r: negativity(s, r)  # noqa: E731
    return (
        -n(c.a)
        - n(c.b)
        - n(c.c)
        - n(c.abc)
        + n(c.ab)
        + n(c.bc)
        + n(c.ac)
    )


def log_purity(s: StabilizerState) -> int:
    """S_e = -log2 tr rho^2 = qubit count minus independent generator count."""
    n_gi = rank_of_ints(g.symplectic_row() for g in s.generators)
    return s.n_qubits - n_gi
