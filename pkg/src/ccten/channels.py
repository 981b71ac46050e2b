"""Two-body XX decoherence on red links, in the stabilizer-tableau picture.

The maximal local channel on a link dephases the state in the eigenbasis
of XX on that link's endpoints: every stabilizer generator anticommuting
with XX leaves the generating set, with products of pairs of them kept,
so the generator count drops by exactly one per effective application.
The stochastic channel applies the maximal local channel to each red
link independently with probability p.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .lattice import HoneycombTorus
from .pauli import PauliWord, StabilizerState, symplectic_product


@dataclass(frozen=True)
class ChannelConfig:
    """Stochastic red-link channel parameters.

    ``links`` holds the endpoint vertex pairs of the red links in a fixed
    order; the per-link coin flips are drawn in that order from a
    generator seeded with ``seed``, so a configuration determines the
    trajectory completely.
    """

    p: float
    seed: int
    links: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"p must lie in [0, 1], got {self.p}")
        if not self.links:
            raise ValueError("link set must be nonempty")

    @classmethod
    def for_torus(
        cls, t: HoneycombTorus, p: float, seed: int
    ) -> "ChannelConfig":
        pairs = tuple((t.links[l].v1, t.links[l].v2) for l in t.red_links)
        return cls(p, seed, pairs)


def dephase_with(s: StabilizerState, p_op: PauliWord) -> StabilizerState:
    """Maximally dephase the state in the eigenbasis of ``p_op``.

    If every generator commutes with ``p_op`` the state is returned
    unchanged (it is already diagonal in that eigenbasis).  Otherwise the
    lowest-index anticommuting generator g0 is used to repair all other
    anticommuting generators (multiplying them by g0 restores
    commutation) and is itself deleted.  The choice of g0 changes only
    the printed basis, not the resulting group.
    """
    if p_op.n != s.n_qubits:
        raise ValueError("operator qubit count mismatch")
    bad = [i for i, g in enumerate(s.generators) if symplectic_product(g, p_op)]
    if not bad:
        return s.copy()
    gens = list(s.generators)
    g0 = gens[bad[0]]
    for i in bad[1:]:
        gens[i] = gens[i] * g0
    del gens[bad[0]]
    return StabilizerState(s.n_qubits, gens)


def _link_xx(n: int, v1: int, v2: int) -> PauliWord:
    return PauliWord((1 << v1) | (1 << v2), 0, n)


def apply_maximal(s: StabilizerState, t: HoneycombTorus) -> StabilizerState:
    """Dephase every red link; the fixed point of the channel.

    On the fresh color code the resulting stabilizer group is the center
    of the gauge group generated by the surviving plaquettes together
    with the red-link XX operators.  That center contains two
    non-contractible red-sublattice X loops (the logical X_2 and X_4)
    which dephasing alone cannot introduce into a generator list it only
    ever shrinks, so they are adjoined here; they commute with every
    surviving generator and with all red-link XX operators.
    """
    out = s
    for l in t.red_links:
        link = t.links[l]
        out = dephase_with(out, _link_xx(s.n_qubits, link.v1, link.v2))
    from .lattice import logical_loops  # local import avoids a cycle

    loops = logical_loops(t)
    gens = list(out.generators)
    for cand in (loops.x[1], loops.x[3]):  # X_2, X_4
        if all(symplectic_product(cand, g) == 0 for g in gens):
            from .f2core import rank_of_ints

            rows = [g.symplectic_row() for g in gens]
            if rank_of_ints(rows + [cand.symplectic_row()]) > len(gens):
                gens.append(cand)
    return StabilizerState(s.n_qubits, gens)


def apply_stochastic(
    s: StabilizerState, cfg: ChannelConfig, t: HoneycombTorus | None = None
) -> StabilizerState:
    """Apply the maximal local channel to each red link with probability p.

    Coin flips are drawn in the fixed link order of ``cfg.links`` from a
    generator seeded with ``cfg.seed``; equal configurations give equal
    tableaux.  At p = 1 every link is selected, which reaches the same
    fixed point as :func:`apply_maximal`; when the torus is supplied the
    fixed point's full stabilizer group (including the two red X loops)
    is returned in that case.
    """
    if cfg.p == 1.0 and t is not None:
        return apply_maximal(s, t)
    rng = random.Random(cfg.seed)
    out = s.copy()
    for v1, v2 in cfg.links:
        if rng.random() < cfg.p:
            out = dephase_with(out, _link_xx(s.n_qubits, v1, v2))
    return out
