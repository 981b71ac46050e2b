"""Sign-free Pauli operators in binary symplectic form.

A Pauli word on ``n`` qubits is a pair of n-bit integers (x_part, z_part);
bit ``v`` of x_part (z_part) means an X (Z) on vertex ``v``.  Signs and
phases are dropped throughout: negativity, purity and the commutation
structure do not depend on them, and the represented density matrix is the
uniform mixture over the joint +1 eigenspace of the generators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Iterable

from .f2core import rank_of_ints

if TYPE_CHECKING:  # pragma: no cover
    from .lattice import HoneycombTorus


@dataclass(frozen=True)
class PauliWord:
    """A sign-free Pauli operator on n qubits."""

    x: int
    z: int
    n: int

    def __post_init__(self):
        if self.x >> self.n or self.z >> self.n or self.x < 0 or self.z < 0:
            raise ValueError("Pauli components exceed the qubit count")

    @classmethod
    def identity(cls, n: int) -> "PauliWord":
        return cls(0, 0, n)

    @classmethod
    def from_string(cls, s: str) -> "PauliWord":
        x = z = 0
        for i, c in enumerate(s):
            if c in "XY":
                x |= 1 << i
            if c in "ZY":
                z |= 1 << i
            if c not in "IXYZ":
                raise ValueError(f"invalid Pauli letter {c!r}")
        return cls(x, z, len(s))

    def to_string(self) -> str:
        out = []
        for i in range(self.n):
            xb = (self.x >> i) & 1
            zb = (self.z >> i) & 1
            out.append("IXZY"[xb + 2 * zb] if xb + 2 * zb != 3 else "Y")
        return "".join(out)

    @property
    def support(self) -> int:
        return self.x | self.z

    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def __mul__(self, other: "PauliWord") -> "PauliWord":
        if self.n != other.n:
            raise ValueError("qubit count mismatch")
        return PauliWord(self.x ^ other.x, self.z ^ other.z, self.n)

    def commutes(self, other: "PauliWord") -> bool:
        return symplectic_product(self, other) == 0

    def symplectic_row(self) -> int:
        """The length-2n binary row (x | z << n) used for rank checks."""
        return self.x | (self.z << self.n)


def symplectic_product(a: PauliWord, b: PauliWord) -> int:
    """0 iff the two Pauli words commute, 1 iff they anticommute."""
    if a.n != b.n:
        raise ValueError("qubit count mismatch")
    return ((a.x & b.z).bit_count() + (a.z & b.x).bit_count()) & 1


@dataclass
class StabilizerState:
    """A (generally mixed) stabilizer density operator.

    ``generators`` is an ordered, pairwise-commuting, linearly independent
    list of sign-free Pauli words; the state is the uniform mixture over
    their joint +1 eigenspace.
    """

    n_qubits: int
    generators: list[PauliWord] = field(default_factory=list)

    def copy(self) -> "StabilizerState":
        return StabilizerState(self.n_qubits, list(self.generators))

    def validate(self) -> None:
        """Assert pairwise commutation and linear independence."""
        gens = self.generators
        for g in gens:
            if g.n != self.n_qubits:
                raise ValueError("generator qubit count mismatch")
        for i, a in enumerate(gens):
            for b in gens[i + 1 :]:
                if symplectic_product(a, b):
                    raise ValueError(
                        f"generators do not commute: {a.to_string()} vs {b.to_string()}"
                    )
        if rank_of_ints(g.symplectic_row() for g in gens) != len(gens):
            raise ValueError("generator list is linearly dependent")

    def tableau_text(self) -> str:
        """One generator per line as a string over {I, X, Y, Z}."""
        return "\n".join(g.to_string() for g in self.generators)


def plaquette_operator(t: "HoneycombTorus", kind: str, plaquette: int) -> PauliWord:
    """Weight-6 all-X or all-Z operator on a plaquette's vertex cycle."""
    if kind not in ("X", "Z"):
        raise ValueError(f"kind must be 'X' or 'Z', got {kind!r}")
    if not 0 <= plaquette < t.n_plaquettes:
        raise ValueError(f"plaquette index {plaquette} out of range")
    bits = 0
    for v in t.plaquette_vertices[plaquette]:
        bits |= 1 << v
    if kind == "X":
        return PauliWord(bits, 0, t.n_vertices)
    return PauliWord(0, bits, t.n_vertices)


def color_code_state(
    t: "HoneycombTorus", protected_zone: tuple[int, int] | None = None
) -> StabilizerState:
    """The fresh color code as N_v - 4 independent plaquette generators.

    One red and one green plaquette are dropped from each of the X and Z
    families (they are products of the kept ones via the torus identities).
    The dropped plaquettes are chosen at maximal torus distance from the
    ``protected_zone`` hexagon, which defaults to the lattice center where
    the named subsystem presets are placed, so every plaquette near a
    subsystem boundary is a genuine generator.
    """
    if protected_zone is None:
        protected_zone = (t.L_x // 2, t.L_y // 2)
    removed = {
        color: t.farthest_plaquette_of_color(color, protected_zone)
        for color in (0, 1)  # red, green
    }
    removed_set = set(removed.values())
    gens: list[PauliWord] = []
    for p in range(t.n_plaquettes):
        for kind in ("X", "Z"):
            if p in removed_set:
                continue
            gens.append(plaquette_operator(t, kind, p))
    return StabilizerState(t.n_vertices, gens)


def is_stabilized_by(s: StabilizerState, p: PauliWord) -> bool:
    """Group membership: true iff p is a product of the generators."""
    if p.n != s.n_qubits:
        raise ValueError("qubit count mismatch")
    rows = [g.symplectic_row() for g in s.generators]
    base = rank_of_ints(rows)
    return rank_of_ints(rows + [p.symplectic_row()]) == base


def commutes_with_all(s: StabilizerState, p: PauliWord) -> bool:
    """Weak-symmetry check: p commutes with every generator.

    For sign-free Pauli conjugation this is exactly invariance of the
    state under conjugation by p.
    """
    if p.n != s.n_qubits:
        raise ValueError("qubit count mismatch")
    return all(symplectic_product(p, g) == 0 for g in s.generators)


_LOOP_COLORS = {
    # loop kind -> (plaquette colors multiplied, Pauli kind)
    "rX": ((1, 2), "X"),
    "gX": ((0, 2), "X"),
    "gZ": ((0, 2), "Z"),
    "bZ": ((0, 1), "Z"),
}


def contractible_loop_operator(
    t: "HoneycombTorus", kind: str, plaquettes: Iterable[int]
) -> PauliWord:
    """1-form symmetry generator on the boundary of a plaquette set.

    The operator is the product of the plaquette operators of the two
    colors complementary to the loop's color label, over the given
    contractible region Sigma; the bulk cancels and a closed even-weight
    loop Pauli on the boundary of Sigma remains.
    """
    if kind not in _LOOP_COLORS:
        raise ValueError(f"loop kind must be one of {sorted(_LOOP_COLORS)}")
    plist = list(plaquettes)
    if not t.plaquette_set_is_contractible(plist):
        raise ValueError("plaquette set is not a contractible region")
    colors, pauli_kind = _LOOP_COLORS[kind]
    op = PauliWord.identity(t.n_vertices)
    for p in plist:
        if t.plaquette_color[p] in colors:
            op = op * plaquette_operator(t, pauli_kind, p)
    return op
