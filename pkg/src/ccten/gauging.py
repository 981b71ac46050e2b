"""The non-Abelian gauge group of the red-link channel and its center.

Decoherence by XX on every red link can be read as gauging: the Kraus
operators join the surviving plaquette stabilizers into a non-Abelian
Pauli group, and the decohered state's stabilizer group is exactly the
center of that group.  Everything is evaluated symplectically (signs and
the group's phase factor dropped).
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2core import (
    BitMatrix,
    kernel_f2,
    pivot_table,
    rank_of_ints,
    reduce_against,
)
from .channels import apply_maximal
from .lattice import GREEN, RED, HoneycombTorus, logical_loops
from .pauli import (
    PauliWord,
    StabilizerState,
    color_code_state,
    commutes_with_all,
    is_stabilized_by,
    plaquette_operator,
    symplectic_product,
)


@dataclass
class PauliGroupSpan:
    """A (generally non-Abelian) Pauli group given by a generator list.

    ``gram`` is the symmetric zero-diagonal matrix of pairwise symplectic
    products; its kernel picks out the central combinations.
    """

    n_qubits: int
    generators: list[PauliWord]
    gram: BitMatrix

    @classmethod
    def from_generators(
        cls, n_qubits: int, generators: list[PauliWord]
    ) -> "PauliGroupSpan":
        m = len(generators)
        rows = [0] * m
        for i in range(m):
            for j in range(i + 1, m):
                if symplectic_product(generators[i], generators[j]):
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return cls(n_qubits, list(generators), BitMatrix.from_ints(rows, m))


def gauge_group(
    t: HoneycombTorus, protected_zone: tuple[int, int] | None = None
) -> PauliGroupSpan:
    """Red-link XX operators joined with the surviving plaquette families.

    Generators: XX on every red link, the red X-plaquettes, and the red,
    green and blue Z-plaquettes — with the same one red and one green
    plaquette dropped from the primed families as in the fresh-code
    generator choice (green and blue X-plaquettes need not be listed:
    each is the product of the three red-link XX operators on its
    boundary, so they are already in the span).
    """
    if protected_zone is None:
        protected_zone = (t.L_x // 2, t.L_y // 2)
    removed = {
        color: t.farthest_plaquette_of_color(color, protected_zone)
        for color in (RED, GREEN)
    }
    gens: list[PauliWord] = []
    for l in t.red_links:
        link = t.links[l]
        gens.append(PauliWord((1 << link.v1) | (1 << link.v2), 0, t.n_vertices))
    for p in t.plaquettes_of_color(RED):
        if p != removed[RED]:
            gens.append(plaquette_operator(t, "X", p))
    for color in (RED, GREEN):
        for p in t.plaquettes_of_color(color):
            if p != removed[color]:
                gens.append(plaquette_operator(t, "Z", p))
    for p in t.plaquettes_of_color(2):  # blue
        gens.append(plaquette_operator(t, "Z", p))
    return PauliGroupSpan.from_generators(t.n_vertices, gens)


def center_of(g: PauliGroupSpan) -> StabilizerState:
    """Basis of the group elements commuting with every generator.

    A span element with coefficient vector c commutes with generator i
    iff (gram · c)_i = 0, so the center is the image of the Gram kernel
    under the product map.  The generators may be linearly dependent as
    symplectic vectors, so the mapped products are re-reduced to an
    independent basis.
    """
    gens = g.generators
    basis_rows: list[int] = []
    basis_words: list[PauliWord] = []
    pivots: dict[int, int] = {}
    for coeff in kernel_f2(g.gram).rows:
        word = PauliWord.identity(g.n_qubits)
        c = coeff.value
        while c:
            i = (c & -c).bit_length() - 1
            word = word * gens[i]
            c &= c - 1
        row = word.symplectic_row()
        if reduce_against(pivots, row):
            basis_rows.append(row)
            basis_words.append(word)
            pivots = pivot_table(basis_rows)
    return StabilizerState(g.n_qubits, basis_words)


def _group_leq(a: list[PauliWord], b: list[PauliWord]) -> list[PauliWord]:
    """Members of ``a`` outside the span of ``b``."""
    table = pivot_table(w.symplectic_row() for w in b)
    return [w for w in a if reduce_against(table, w.symplectic_row())]


def center_matches_decohered_state(
    t: HoneycombTorus, span: PauliGroupSpan | None = None
) -> tuple[bool, dict]:
    """Compare the gauge-group center with the maximally decohered state.

    Returns (equal, report); the report lists basis elements of either
    group missing from the other (as tableau strings) and both ranks.
    """
    if span is None:
        span = gauge_group(t)
    center = center_of(span)
    decohered = apply_maximal(color_code_state(t), t)
    missing_from_state = _group_leq(center.generators, decohered.generators)
    missing_from_center = _group_leq(decohered.generators, center.generators)
    equal = not missing_from_state and not missing_from_center
    report = {
        "center_rank": len(center.generators),
        "state_rank": rank_of_ints(
            g.symplectic_row() for g in decohered.generators
        ),
        "center_only": [w.to_string() for w in missing_from_state],
        "state_only": [w.to_string() for w in missing_from_center],
    }
    return equal, report


def logical_survival_report(t: HoneycombTorus, state: StabilizerState) -> dict:
    """Classify each logical loop against the state and list the pairing.

    Each of Z_1..Z_4, X_1..X_4 is labeled ``stabilizer`` (group member),
    ``weak`` (commutes with the group but is not a member) or
    ``annihilated`` (anticommutes with some group member, so the channel
    destroyed it).  ``anticommuting_pairs`` lists the indices b whose
    surviving pair {Z_b, X_b} still anticommutes.
    """
    loops = logical_loops(t)
    status: dict[str, str] = {}
    for name, op in loops.all_operators():
        if not commutes_with_all(state, op):
            status[name] = "annihilated"
        elif is_stabilized_by(state, op):
            status[name] = "stabilizer"
        else:
            status[name] = "weak"
    pairs = []
    for b in range(4):
        if status[f"Z{b + 1}"] == "annihilated":
            continue
        if status[f"X{b + 1}"] == "annihilated":
            continue
        if symplectic_product(loops.z[b], loops.x[b]):
            pairs.append(b + 1)
    return {"status": status, "anticommuting_pairs": pairs}
