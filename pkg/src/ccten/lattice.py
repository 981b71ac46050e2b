"""The 3-colored honeycomb lattice on a torus and its subsystem geometry.

Plaquette (hexagon) centers form a triangular lattice indexed by axial
coordinates (q, r) with q in [0, L_x), r in [0, L_y); the plaquette color
is (q + 2r) mod 3 with red = 0.  Honeycomb vertices are the up/down
triangles of that triangular lattice: the up triangle at (q, r) has corner
hexagons (q, r), (q+1, r), (q, r+1) and the down triangle has corners
(q+1, r), (q, r+1), (q+1, r+1).  Each vertex therefore touches exactly one
hexagon of each color, and each link joins the two triangles sharing an
edge; its color is the color of the two same-colored hexagons it
completes.

Lengths are measured in units of the distance between adjacent hexagon
centers; the emergent triangular lattice of red plaquettes has lattice
spacing sqrt(3) in those units and its own unit for |dA|_TC.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .pauli import PauliWord

RED, GREEN, BLUE = 0, 1, 2
COLOR_NAMES = {RED: "red", GREEN: "green", BLUE: "blue"}
COLOR_BY_NAME = {v: k for k, v in COLOR_NAMES.items()}

# Axial neighbor steps of the hexagon-center triangular lattice, in cyclic
# order (used by the ring walk).
_HEX_DIRS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))

# Steps between same-colored hexagons (the color sublattices).
_SUB_U = (1, 1)
_SUB_V = (2, -1)
_SUB_W = (-1, 2)


def _hex_norm(dq: int, dr: int) -> int:
    return (abs(dq) + abs(dr) + abs(dq + dr)) // 2


@dataclass(frozen=True)
class Link:
    index: int
    v1: int
    v2: int
    color: int
    hexes: tuple[int, int]  # the two same-colored plaquettes it joins


class HoneycombTorus:
    """Immutable honeycomb torus geometry."""

    def __init__(self, L_x: int, L_y: int):
        if L_x <= 0 or L_y <= 0:
            raise ValueError("torus dimensions must be positive")
        if L_x % 3 or L_y % 3:
            raise ValueError(
                f"L_x={L_x}, L_y={L_y}: a torus-consistent 3-coloring of the "
                "hexagons requires both dimensions divisible by 3"
            )
        self.L_x = L_x
        self.L_y = L_y
        self.n_plaquettes = L_x * L_y
        self.n_vertices = 2 * L_x * L_y

        self.plaquette_color = [
            (q + 2 * r) % 3 for q in range(L_x) for r in range(L_y)
        ]
        self.plaquette_vertices: list[tuple[int, ...]] = []
        for q in range(L_x):
            for r in range(L_y):
                self.plaquette_vertices.append(
                    (
                        self.v_up(q, r),
                        self.v_down(q - 1, r),
                        self.v_up(q - 1, r),
                        self.v_down(q - 1, r - 1),
                        self.v_up(q, r - 1),
                        self.v_down(q, r - 1),
                    )
                )

        self.links: list[Link] = []
        self._dir_link: dict[tuple[int, tuple[int, int]], int] = {}
        for q in range(L_x):
            for r in range(L_y):
                up = self.v_up(q, r)
                base = self.plaquette_color[self.hex_index(q, r)]
                self._add_link(up, self.v_down(q, r), base, (q, r), _SUB_U)
                self._add_link(
                    up, self.v_down(q - 1, r), (base + 1) % 3, (q + 1, r), (-2, 1)
                )
                self._add_link(
                    up, self.v_down(q, r - 1), (base + 2) % 3, (q, r + 1), (1, -2)
                )
        self.red_links = [l.index for l in self.links if l.color == RED]

        self.vertex_hexes: list[tuple[int, int, int]] = [(-1, -1, -1)] * self.n_vertices
        for q in range(L_x):
            for r in range(L_y):
                self.vertex_hexes[self.v_up(q, r)] = (
                    self.hex_index(q, r),
                    self.hex_index(q + 1, r),
                    self.hex_index(q, r + 1),
                )
                self.vertex_hexes[self.v_down(q, r)] = (
                    self.hex_index(q + 1, r),
                    self.hex_index(q, r + 1),
                    self.hex_index(q + 1, r + 1),
                )
        self.vertex_red_hex = [
            next(h for h in hexes if self.plaquette_color[h] == RED)
            for hexes in self.vertex_hexes
        ]

    # -- indexing -----------------------------------------------------
    def hex_index(self, q: int, r: int) -> int:
        return (q % self.L_x) * self.L_y + (r % self.L_y)

    def hex_coords(self, p: int) -> tuple[int, int]:
        return divmod(p, self.L_y)

    def v_up(self, q: int, r: int) -> int:
        return 2 * self.hex_index(q, r)

    def v_down(self, q: int, r: int) -> int:
        return 2 * self.hex_index(q, r) + 1

    def _add_link(
        self,
        v1: int,
        v2: int,
        color: int,
        from_hex: tuple[int, int],
        direction: tuple[int, int],
    ) -> None:
        q, r = from_hex
        to_hex = (q + direction[0], r + direction[1])
        idx = len(self.links)
        h1, h2 = self.hex_index(q, r), self.hex_index(*to_hex)
        self.links.append(Link(idx, v1, v2, color, (h1, h2)))
        neg = (-direction[0], -direction[1])
        self._dir_link[(h1, direction)] = idx
        self._dir_link[(h2, neg)] = idx

    def plaquettes_of_color(self, color: int) -> list[int]:
        return [p for p in range(self.n_plaquettes) if self.plaquette_color[p] == color]

    # -- metric helpers -----------------------------------------------
    def torus_hex_distance(self, a: tuple[int, int], b: tuple[int, int]) -> int:
        dq = (b[0] - a[0]) % self.L_x
        dr = (b[1] - a[1]) % self.L_y
        best = None
        for sq in (dq, dq - self.L_x):
            for sr in (dr, dr - self.L_y):
                d = _hex_norm(sq, sr)
                if best is None or d < best:
                    best = d
        return best

    def farthest_plaquette_of_color(self, color: int, zone: tuple[int, int]) -> int:
        best_p, best_d = -1, -1
        for p in self.plaquettes_of_color(color):
            d = self.torus_hex_distance(zone, self.hex_coords(p))
            if d > best_d:
                best_p, best_d = p, d
        return best_p

    def nearest_plaquette_of_color(self, color: int, zone: tuple[int, int]) -> int:
        best_p, best_d = -1, None
        for p in self.plaquettes_of_color(color):
            d = self.torus_hex_distance(zone, self.hex_coords(p))
            if best_d is None or d < best_d:
                best_p, best_d = p, d
        return best_p

    def hex_disk(self, center: tuple[int, int], radius: int) -> list[tuple[int, int]]:
        """Hexagons within the given triangular-lattice distance, unreduced."""
        q0, r0 = center
        out = []
        for dq in range(-radius, radius + 1):
            for dr in range(-radius, radius + 1):
                if _hex_norm(dq, dr) <= radius:
                    out.append((q0 + dq, r0 + dr))
        return out

    def hex_ring(self, center: tuple[int, int], radius: int) -> list[tuple[int, int]]:
        """Hexagons at exactly the given distance, in cyclic walk order."""
        if radius == 0:
            return [center]
        q, r = center[0], center[1] - radius  # start below the center
        out = []
        for dq, dr in _HEX_DIRS:
            for _ in range(radius):
                out.append((q, r))
                q, r = q + dq, r + dr
        return out

    def plaquette_set_is_contractible(self, plaquettes: Sequence[int]) -> bool:
        """True iff the plaquette set lifts to the plane without winding."""
        todo = set(plaquettes)
        lifted: dict[int, tuple[int, int]] = {}
        while todo:
            root = todo.pop()
            lifted[root] = self.hex_coords(root)
            stack = [root]
            while stack:
                p = stack.pop()
                q, r = lifted[p]
                for dq, dr in _HEX_DIRS:
                    nb = self.hex_index(q + dq, r + dr)
                    if nb not in set(plaquettes):
                        continue
                    coords = (q + dq, r + dr)
                    if nb in lifted:
                        if lifted[nb] != coords:
                            return False
                    else:
                        lifted[nb] = coords
                        todo.discard(nb)
                        stack.append(nb)
        return True


def build_honeycomb_torus(L_x: int, L_y: int) -> HoneycombTorus:
    """Build and return the colored honeycomb torus."""
    return HoneycombTorus(L_x, L_y)


# ---------------------------------------------------------------------
# Emergent triangular lattice
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class TriangularEmbedding:
    """The triangular lattice whose sites are the red plaquettes."""

    sites: tuple[int, ...]  # red plaquette indices
    edges: tuple[tuple[int, int], ...]  # one per red honeycomb link
    has_multi_edges: bool

    def degree(self, site: int) -> int:
        return sum(1 for e in self.edges if site in e) + sum(
            1 for e in self.edges if e[0] == e[1] == site
        )


def triangular_embedding(t: HoneycombTorus) -> TriangularEmbedding:
    sites = tuple(t.plaquettes_of_color(RED))
    edges = tuple(t.links[l].hexes for l in t.red_links)
    seen = set()
    multi = False
    for e in edges:
        key = frozenset(e)
        if key in seen or len(key) == 1:
            multi = True
        seen.add(key)
    return TriangularEmbedding(sites, edges, multi)


# ---------------------------------------------------------------------
# Logical loop operators
# ---------------------------------------------------------------------


@dataclass(frozen=True)
class LogicalLoops:
    """The eight non-contractible loop operators Z_1..Z_4, X_1..X_4."""

    z: tuple[PauliWord, PauliWord, PauliWord, PauliWord]
    x: tuple[PauliWord, PauliWord, PauliWord, PauliWord]

    def all_operators(self) -> list[tuple[str, PauliWord]]:
        out = [(f"Z{i + 1}", g) for i, g in enumerate(self.z)]
        out += [(f"X{i + 1}", g) for i, g in enumerate(self.x)]
        return out


def _sublattice_loop(
    t: HoneycombTorus, pauli_kind: str, anchor: tuple[int, int], direction: str
) -> PauliWord:
    """Closed zigzag path on one color sublattice, as a link-endpoint Pauli.

    The x loop alternates steps (2,-1), (1,1) for a net (3, 0) per pair;
    the y loop alternates (-1,2), (1,1) for a net (0, 3).  Each step
    crosses one link of the anchor's color; the operator acts on both
    endpoints of every crossed link.
    """
    if direction == "x":
        steps = [_SUB_V, _SUB_U] * (t.L_x // 3)
    elif direction == "y":
        steps = [_SUB_W, _SUB_U] * (t.L_y // 3)
    else:
        raise ValueError(direction)
    bits = 0
    q, r = anchor
    for dq, dr in steps:
        link = t.links[t._dir_link[(t.hex_index(q, r), (dq, dr))]]
        bits ^= (1 << link.v1) | (1 << link.v2)
        q, r = q + dq, r + dr
    if t.hex_index(q, r) != t.hex_index(*anchor):
        raise AssertionError("loop did not close")
    if pauli_kind == "X":
        return PauliWord(bits, 0, t.n_vertices)
    return PauliWord(0, bits, t.n_vertices)


def logical_loops(t: HoneycombTorus) -> LogicalLoops:
    """The four logical pairs of the torus color code.

    Z_1/Z_3 trace red links in the x/y direction, Z_2/Z_4 green links;
    X_1/X_3 trace green links in the y/x direction, X_2/X_4 red links.
    {Z_b, X_b} = 0 for each b and all other pairs commute; the pairing is
    a homological invariant of the (color, winding, Pauli type) triple,
    so the anchor choice below is immaterial to the algebra.
    """
    red_anchor = (0, 0)
    green_anchor = (1, 0)
    z = (
        _sublattice_loop(t, "Z", red_anchor, "x"),
        _sublattice_loop(t, "Z", green_anchor, "x"),
        _sublattice_loop(t, "Z", red_anchor, "y"),
        _sublattice_loop(t, "Z", green_anchor, "y"),
    )
    x = (
        _sublattice_loop(t, "X", green_anchor, "y"),
        _sublattice_loop(t, "X", red_anchor, "y"),
        _sublattice_loop(t, "X", green_anchor, "x"),
        _sublattice_loop(t, "X", red_anchor, "x"),
    )
    return LogicalLoops(z, x)


# ---------------------------------------------------------------------
# Regions
# ---------------------------------------------------------------------


@dataclass
class Region:
    """A vertex subset with its boundary bookkeeping."""

    vertices: frozenset[int]
    n_qubits: int
    boundary_honeycomb: Optional[int] = None
    boundary_triangular: Optional[int] = None
    commensurate: bool = False
    name: str = ""
    _mask: Optional[int] = field(default=None, repr=False, compare=False)

    @property
    def mask(self) -> int:
        if self._mask is None:
            m = 0
            for v in self.vertices:
                m |= 1 << v
            self._mask = m
        return self._mask

    def __len__(self) -> int:
        return len(self.vertices)

    def complement(self) -> "Region":
        comp = frozenset(range(self.n_qubits)) - self.vertices
        return Region(comp, self.n_qubits, name=f"~{self.name}" if self.name else "")

    def union(self, *others: "Region") -> "Region":
        verts = set(self.vertices)
        for o in others:
            verts |= o.vertices
        name = "".join([self.name] + [o.name for o in others])
        return Region(frozenset(verts), self.n_qubits, name=name)


def region_parallelogram(
    t: HoneycombTorus,
    anchor: tuple[int, int],
    extent: tuple[int, int],
    axes: tuple[tuple[int, int], tuple[int, int]] = ((1, 0), (0, 1)),
) -> Region:
    """All vertices inside an m x n parallelogram of hexagon centers.

    The boundary polygon runs through hexagon centers, starting at the
    anchor and taking ``extent`` steps along the two (unit-length) axes;
    the enclosed vertices are the 2*m*n triangles of the swept hexagons.
    The honeycomb boundary length is the polygon perimeter 2(m+n); the
    triangular value recorded alongside is the effective length
    2(m+n)-2 obeyed by the decohered scaling law (the shape itself is
    not commensurate with the emergent triangular lattice).
    """
    m, n = extent
    u, w = axes
    if m < 1 or n < 1:
        raise ValueError("extent must be positive")
    for ax in (u, w):
        if _hex_norm(*ax) != 1:
            raise ValueError(f"axis {ax} is not a unit hexagon-center step")
    if u[0] * w[1] - u[1] * w[0] == 0:
        raise ValueError("axes are collinear")
    if m >= t.L_x or n >= t.L_y:
        raise ValueError(
            f"extent {extent} wraps around the {t.L_x}x{t.L_y} torus"
        )
    q0, r0 = anchor
    verts = set()
    for i in range(m):
        for j in range(n):
            q = q0 + i * u[0] + j * w[0]
            r = r0 + i * u[1] + j * w[1]
            verts.add(t.v_up(q, r))
            verts.add(t.v_down(q, r))
    if len(verts) != 2 * m * n:
        raise ValueError(f"extent {extent} wraps around the torus")
    return Region(
        frozenset(verts),
        t.n_vertices,
        boundary_honeycomb=2 * (m + n),
        boundary_triangular=2 * (m + n) - 2,
        commensurate=False,
        name=f"par{m}x{n}",
    )


_COMMENSURATE_EXTENTS = {"A1": (1, 2), "A2": (2, 2), "A3": (2, 3), "A4": (3, 3)}


def region_triangular_commensurate(
    t: HoneycombTorus, spec: str, anchor: tuple[int, int] | None = None
) -> Region:
    """The commensurate subsystems A1..A4 on the red triangular lattice.

    The boundary is the parallelogram through red-plaquette centers
    spanned by k steps of the sublattice vector (1,1) and l steps of
    (2,-1) from a red anchor; the region holds every triangle whose
    center lies inside (or exactly on) that polygon.  Boundary lengths
    are |dA|_TC = 2(k+l) in triangular-lattice units and twice that in
    hexagon-center steps, since the honeycomb path between adjacent red
    centers takes two such steps.
    """
    if spec not in _COMMENSURATE_EXTENTS:
        raise ValueError(f"spec must be one of {sorted(_COMMENSURATE_EXTENTS)}")
    k, l = _COMMENSURATE_EXTENTS[spec]
    if anchor is None:
        p = t.nearest_plaquette_of_color(RED, (t.L_x // 2, t.L_y // 2))
        anchor = t.hex_coords(p)
    q0, r0 = anchor
    if t.plaquette_color[t.hex_index(q0, r0)] != RED:
        raise ValueError("anchor must be a red plaquette")
    if k + 2 * l + 2 > t.L_x or k + l + 2 > t.L_y:
        raise ValueError(f"torus too small for region {spec}")
    # A triangle center at axial offset (dq, dr) from the anchor has
    # parallelogram coordinates (alpha, beta) = ((dq + 2 dr + off) / 3,
    # (dq - dr) / 3) with off = 1 for up and 2 for down triangles; the
    # closed polygon is 0 <= alpha <= k, 0 <= beta <= l (triangles whose
    # center lies exactly on a side are included).
    verts: set[int] = set()
    for dq in range(-2, k + 2 * l + 3):
        for dr in range(-l - 2, k + l + 3):
            beta3 = dq - dr
            if not 0 <= beta3 <= 3 * l:
                continue
            for off, vf in ((1, t.v_up), (2, t.v_down)):
                alpha3 = dq + 2 * dr + off
                if 0 <= alpha3 <= 3 * k:
                    verts.add(vf(q0 + dq, r0 + dr))
    return Region(
        frozenset(verts),
        t.n_vertices,
        boundary_honeycomb=4 * (k + l),
        boundary_triangular=2 * (k + l),
        commensurate=True,
        name=spec,
    )


# ---------------------------------------------------------------------
# TEN complexes
# ---------------------------------------------------------------------


@dataclass
class TenComplex:
    """Three adjacent subsystems used for the TEN combination."""

    a: Region
    b: Region
    c: Region
    plaquettes_a: tuple[int, ...]
    plaquettes_b: tuple[int, ...]
    plaquettes_c: tuple[int, ...]
    center_color: int
    size: int

    @property
    def ab(self) -> Region:
        return self.a.union(self.b)

    @property
    def bc(self) -> Region:
        return self.b.union(self.c)

    @property
    def ac(self) -> Region:
        return self.a.union(self.c)

    @property
    def abc(self) -> Region:
        return self.a.union(self.b, self.c)


_TEN_RADII = {7: 1, 19: 2, 37: 3}


def _assign_ten_vertices(
    t: HoneycombTorus, hex_sets: dict[str, set[int]]
) -> dict[str, set[int]]:
    """Partition the complex's vertices among the three subsystems.

    A vertex goes to the subsystem holding the majority of its three
    hexagons.  A vertex whose hexagons meet all three subsystems (the
    interior triple point) goes to C; one split between two subsystems
    and the exterior goes to the alphabetically first of the two, so
    that the drawn boundary lines never share a site.  Finally, any red
    hexagon whose six vertices ended up spread over exactly {A, B, C}
    would hide the triple point inside a single cell of the emergent
    triangular lattice and wash out the decohered topological term, so
    its A-vertices are handed to B.
    """
    assign: dict[str, set[int]] = {"A": set(), "B": set(), "C": set()}
    for v in range(t.n_vertices):
        hexes = t.vertex_hexes[v]
        counts = {k: sum(h in s for h in hexes) for k, s in hex_sets.items()}
        best = max(counts.values())
        total = sum(counts.values())
        if best >= 2:
            key = next(k for k in "ABC" if counts[k] == best)
        elif total == 3:
            key = "C"
        elif total == 2:
            key = next(k for k in "ABC" if counts[k] == 1)
        else:
            continue
        assign[key].add(v)
    for p in t.plaquettes_of_color(RED):
        parts = {
            v: next((k for k in "ABC" if v in assign[k]), None)
            for v in t.plaquette_vertices[p]
        }
        if set(parts.values()) == {"A", "B", "C"}:
            for v, k in parts.items():
                if k == "A":
                    assign["A"].discard(v)
                    assign["B"].add(v)
    return assign


def ten_complex(
    t: HoneycombTorus,
    size: int,
    center_color: int | str = RED,
    anchor: tuple[int, int] | None = None,
) -> TenComplex:
    """Hexagonal subsystem A plus flanking arcs B and C.

    A is the hexagonal cluster of ``size`` plaquettes (radius 1, 2 or 3)
    around a central plaquette of the requested color.  B and C split the
    surrounding plaquette ring, leaving a one-plaquette gap (at a ring
    corner, so A reaches the exterior there) with B taking the next half
    ring and C the rest; for the 7-plaquette complex this gives the
    seven/six/five plaquette counts of the smallest configuration.  The
    three subsystems are pairwise adjacent with a single interior triple
    point, the arrangement whose seven-negativity combination cancels
    all boundary and corner terms.
    """
    if isinstance(center_color, str):
        center_color = COLOR_BY_NAME[center_color]
    if size not in _TEN_RADII:
        raise ValueError(f"size must be one of {sorted(_TEN_RADII)}; got {size}")
    rho = _TEN_RADII[size]
    if 2 * (rho + 1) + 1 > min(t.L_x, t.L_y):
        raise ValueError(f"torus too small for the {size}-plaquette complex")
    if anchor is None:
        p = t.nearest_plaquette_of_color(center_color, (t.L_x // 2, t.L_y // 2))
        anchor = t.hex_coords(p)
    if t.plaquette_color[t.hex_index(*anchor)] != center_color:
        raise ValueError("anchor color does not match center_color")

    disk = [t.hex_index(q, r) for q, r in t.hex_disk(anchor, rho)]
    ring = [t.hex_index(q, r) for q, r in t.hex_ring(anchor, rho + 1)]
    if len(set(disk) | set(ring)) != len(disk) + len(ring):
        raise ValueError("torus too small: complex wraps onto itself")
    n_b = 3 * (rho + 1)
    hex_a = tuple(disk)
    hex_b = tuple(ring[1 : 1 + n_b])
    hex_c = tuple(ring[1 + n_b :])
    assign = _assign_ten_vertices(
        t, {"A": set(hex_a), "B": set(hex_b), "C": set(hex_c)}
    )
    mk = lambda key: Region(  # noqa: E731
        frozenset(assign[key]), t.n_vertices, name=key
    )
    return TenComplex(
        a=mk("A"),
        b=mk("B"),
        c=mk("C"),
        plaquettes_a=hex_a,
        plaquettes_b=hex_b,
        plaquettes_c=hex_c,
        center_color=center_color,
        size=size,
    )


# ---------------------------------------------------------------------
# Named presets
# ---------------------------------------------------------------------

_STRIP_AXES = ((1, 0), (-1, 1))


def named_region(t: HoneycombTorus, name: str) -> Region:
    """Build one of the named subsystem presets near the lattice center.

    ``small-parallelogram`` (aliases ``fig2-parallelogram`` and
    ``fig3-parallelogram``) is the four-hexagon strip along the (-1, 1)
    direction with perimeter 10, anchored on a green plaquette; its
    negativity is 8 on the fresh code and 7 after maximal red-link
    decoherence.  ``A1``..``A4`` are the triangular-lattice-commensurate
    parallelograms.
    """
    if name in ("fig2-parallelogram", "fig3-parallelogram", "small-parallelogram"):
        p = t.nearest_plaquette_of_color(GREEN, (t.L_x // 2, t.L_y // 2))
        return region_parallelogram(
            t, t.hex_coords(p), (1, 4), axes=_STRIP_AXES
        )
    if name in _COMMENSURATE_EXTENTS:
        return region_triangular_commensurate(t, name)
    raise ValueError(f"unknown region preset {name!r}")
