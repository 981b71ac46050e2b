import pytest

from ccten import (
    build_honeycomb_torus,
    logical_loops,
    named_region,
    region_parallelogram,
    region_triangular_commensurate,
    ten_complex,
    triangular_embedding,
)
from ccten.lattice import BLUE, GREEN, RED
from ccten.pauli import symplectic_product


@pytest.fixture(scope="module")
def t6():
    return build_honeycomb_torus(6, 6)


@pytest.fixture(scope="module")
def t12():
    return build_honeycomb_torus(12, 12)


def test_counts(t6):
    assert t6.n_plaquettes == 36
    assert t6.n_vertices == 72
    assert len(t6.links) == 3 * t6.n_plaquettes
    assert len(t6.red_links) == t6.n_vertices // 2


def test_size_validation():
    with pytest.raises(ValueError):
        build_honeycomb_torus(4, 6)
    with pytest.raises(ValueError):
        build_honeycomb_torus(6, 0)


def test_three_coloring(t6):
    counts = {c: len(t6.plaquettes_of_color(c)) for c in (RED, GREEN, BLUE)}
    assert counts == {RED: 12, GREEN: 12, BLUE: 12}


def test_plaquettes_are_hexagons(t6):
    for p in range(t6.n_plaquettes):
        cyc = t6.plaquette_vertices[p]
        assert len(cyc) == 6
        assert len(set(cyc)) == 6


def test_each_vertex_on_three_plaquettes(t6):
    incidence = [0] * t6.n_vertices
    for p in range(t6.n_plaquettes):
        for v in t6.plaquette_vertices[p]:
            incidence[v] += 1
    assert set(incidence) == {3}
    for v in range(t6.n_vertices):
        colors = {t6.plaquette_color[h] for h in t6.vertex_hexes[v]}
        assert colors == {RED, GREEN, BLUE}


def test_link_colors(t6):
    # a link joins the two nearest same-colored plaquettes of its own color
    for link in t6.links:
        h1, h2 = link.hexes
        assert t6.plaquette_color[h1] == link.color
        assert t6.plaquette_color[h2] == link.color
        assert h1 != h2
    # every vertex touches exactly one red link
    touch = [0] * t6.n_vertices
    for l in t6.red_links:
        link = t6.links[l]
        touch[link.v1] += 1
        touch[link.v2] += 1
    assert set(touch) == {1}


def test_torus_distance(t6):
    assert t6.torus_hex_distance((0, 0), (0, 0)) == 0
    assert t6.torus_hex_distance((0, 0), (1, 0)) == 1
    assert t6.torus_hex_distance((0, 0), (5, 0)) == 1  # wraps
    assert t6.torus_hex_distance((0, 0), (3, 0)) == 3


def test_hex_disk_and_ring(t12):
    disk = t12.hex_disk((5, 5), 1)
    assert len(disk) == 7
    ring = t12.hex_ring((5, 5), 2)
    assert len(ring) == 12
    assert set(t12.hex_index(q, r) for q, r in disk).isdisjoint(
        t12.hex_index(q, r) for q, r in ring
    )
    # ring walk is cyclically adjacent
    for a, b in zip(ring, ring[1:] + ring[:1]):
        assert t12.torus_hex_distance(a, b) == 1


def test_contractibility(t12):
    assert t12.plaquette_set_is_contractible(
        [t12.hex_index(q, r) for q, r in t12.hex_disk((4, 4), 2)]
    )
    row = [t12.hex_index(q, 0) for q in range(12)]  # winds around the torus
    assert not t12.plaquette_set_is_contractible(row)


def test_triangular_embedding(t6, t12):
    emb = triangular_embedding(t12)
    assert len(emb.sites) == 48
    assert len(emb.edges) == t12.n_vertices // 2
    for h1, h2 in emb.edges:
        assert t12.plaquette_color[h1] == RED
        assert t12.plaquette_color[h2] == RED
    assert not emb.has_multi_edges
    # every red link joins two distinct red plaquettes at L = 6 too
    assert not triangular_embedding(t6).has_multi_edges


def test_logical_loop_algebra(t12):
    loops = logical_loops(t12)
    ops = loops.all_operators()
    assert len(ops) == 8
    anti = {
        (a, b)
        for a, ga in ops
        for b, gb in ops
        if a < b and symplectic_product(ga, gb)
    }
    assert anti == {(f"X{i}", f"Z{i}") for i in range(1, 5)}


def test_logical_loops_are_nontrivial(t6):
    loops = logical_loops(t6)
    for name, op in loops.all_operators():
        assert op.weight() > 0
        assert op.weight() % 2 == 0


def test_region_parallelogram_basics(t12):
    r = region_parallelogram(t12, (4, 4), (2, 3))
    assert len(r) == 2 * 2 * 3
    assert r.boundary_honeycomb == 2 * (2 + 3)
    assert not r.commensurate
    comp = r.complement()
    assert len(comp) == t12.n_vertices - len(r)
    assert r.union(comp).vertices == frozenset(range(t12.n_vertices))


def test_region_parallelogram_wrap_rejected(t6):
    with pytest.raises(ValueError):
        region_parallelogram(t6, (0, 0), (6, 2))


def test_named_strip_preset(t12):
    r = named_region(t12, "fig2-parallelogram")
    assert len(r) == 8
    assert r.boundary_honeycomb == 10
    assert r.boundary_triangular == 8
    assert not r.commensurate
    assert named_region(t12, "fig3-parallelogram").vertices == r.vertices


def test_commensurate_regions(t12):
    for name, (k, l) in {"A1": (1, 2), "A2": (2, 2), "A3": (2, 3), "A4": (3, 3)}.items():
        r = named_region(t12, name)
        assert r.commensurate
        assert r.boundary_triangular == 2 * (k + l)
        assert r.boundary_honeycomb == 4 * (k + l)
        assert region_triangular_commensurate(t12, name).vertices == r.vertices


def test_commensurate_too_small():
    t = build_honeycomb_torus(6, 6)
    with pytest.raises(ValueError):
        region_triangular_commensurate(t, "A4")
    with pytest.raises(ValueError):
        region_triangular_commensurate(t, "A9")


def test_named_region_unknown(t12):
    with pytest.raises(ValueError):
        named_region(t12, "no-such-region")


def test_ten_complex_structure(t12):
    cx = ten_complex(t12, 7)
    assert len(cx.plaquettes_a) == 7
    assert len(cx.plaquettes_b) == 6
    assert len(cx.plaquettes_c) == 5
    assert cx.a.vertices.isdisjoint(cx.b.vertices)
    assert cx.a.vertices.isdisjoint(cx.c.vertices)
    assert cx.b.vertices.isdisjoint(cx.c.vertices)
    assert cx.ab.vertices == cx.a.vertices | cx.b.vertices
    assert cx.abc.vertices == cx.a.vertices | cx.b.vertices | cx.c.vertices


def test_ten_complex_sizes_and_colors(t12):
    for size in (7, 19):
        for color in ("red", "green", "blue"):
            cx = ten_complex(t12, size, color)
            assert cx.size == size
            assert len(cx.plaquettes_a) == size
    with pytest.raises(ValueError):
        ten_complex(t12, 8)
    with pytest.raises(ValueError):
        ten_complex(build_honeycomb_torus(6, 6), 37)
