from fractions import Fraction

import pytest

from ccten import (
    BitMatrix,
    PauliWord,
    Region,
    StabilizerState,
    apply_maximal,
    build_honeycomb_torus,
    color_code_state,
    k_matrix,
    log_purity,
    named_region,
    negativity,
    rank_f2,
    ten,
    ten_complex,
    truncate,
)

# Golden anticommutation matrices for the four-hexagon strip subsystem:
# the Z-sector matrix of the fresh code (rank 8) and the Z-sector block of
# the maximally decohered state (rank 7).
GOLDEN_FRESH_Z = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 1],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 0, 0, 1, 1],
]

GOLDEN_DECOHERED_Z = [
    [0, 1, 0, 0, 0, 0, 1, 0],
    [1, 1, 0, 0, 0, 0, 0, 1],
    [0, 1, 0, 1, 0, 0, 0, 1],
    [0, 0, 1, 1, 0, 0, 0, 1],
    [0, 0, 1, 1, 0, 0, 0, 1],
    [0, 0, 0, 1, 1, 0, 0, 0],
    [0, 0, 0, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, 1, 1, 0, 1],
    [0, 0, 0, 0, 0, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 1, 1],
]


def test_golden_matrix_ranks():
    assert rank_f2(BitMatrix.from_rows(GOLDEN_FRESH_Z)) == 8
    assert rank_f2(BitMatrix.from_rows(GOLDEN_DECOHERED_Z)) == 7


def test_truncate():
    w = PauliWord.from_string("XYZI")
    r = Region(frozenset({1, 3}), 4)
    assert truncate(w, r).to_string() == "YI"
    with pytest.raises(ValueError):
        truncate(w, Region(frozenset({0}), 3))


def test_k_matrix_symmetric_zero_diagonal():
    s = StabilizerState(
        3,
        [
            PauliWord.from_string("XXI"),
            PauliWord.from_string("ZZI"),
            PauliWord.from_string("IIZ"),
        ],
    )
    r = Region(frozenset({0}), 3)
    k = k_matrix(s, r)
    assert k.n_rows == k.n_cols == 3
    lists = k.to_lists()
    for i in range(3):
        assert lists[i][i] == 0
        for j in range(3):
            assert lists[i][j] == lists[j][i]
    assert lists[0][1] == 1  # X vs Z on the kept qubit


def test_bell_pair_negativity():
    bell = StabilizerState(
        2, [PauliWord.from_string("XX"), PauliWord.from_string("ZZ")]
    )
    assert negativity(bell, Region(frozenset({0}), 2)) == 1


def test_classically_correlated_negativity_zero():
    s = StabilizerState(2, [PauliWord.from_string("ZZ")])
    assert negativity(s, Region(frozenset({0}), 2)) == 0


def test_negativity_complement_symmetry():
    ghz = StabilizerState(
        3,
        [
            PauliWord.from_string("XXX"),
            PauliWord.from_string("ZZI"),
            PauliWord.from_string("IZZ"),
        ],
    )
    for verts in ({0}, {1}, {0, 2}):
        r = Region(frozenset(verts), 3)
        assert negativity(ghz, r) == negativity(ghz, r.complement())


@pytest.fixture(scope="module")
def t():
    return build_honeycomb_torus(12, 12)


@pytest.fixture(scope="module")
def fresh(t):
    return color_code_state(t)


@pytest.fixture(scope="module")
def decohered(t, fresh):
    return apply_maximal(fresh, t)


def test_strip_negativities(t, fresh, decohered):
    r = named_region(t, "fig2-parallelogram")
    assert negativity(fresh, r) == 8
    assert negativity(decohered, r) == 7


def test_commensurate_scaling(t, fresh, decohered):
    expected = {"A1": (10, 5), "A2": (14, 7), "A3": (18, 9), "A4": (22, 11)}
    for name, (nf, nd) in expected.items():
        r = named_region(t, name)
        assert negativity(fresh, r) == nf == r.boundary_honeycomb - 2
        assert negativity(decohered, r) == nd == r.boundary_triangular - 1


def test_ten_endpoints(t, fresh, decohered):
    for size in (7, 19):
        cx = ten_complex(t, size)
        assert ten(fresh, cx) == 2
        assert ten(decohered, cx) == 1


def test_negativity_values_are_fractions(fresh, t):
    v = negativity(fresh, named_region(t, "A1"))
    assert isinstance(v, Fraction)


def test_log_purity(t, fresh, decohered):
    assert log_purity(fresh) == 4
    assert log_purity(decohered) == t.n_vertices // 6 + 1
    maximally_mixed = StabilizerState(5, [])
    assert log_purity(maximally_mixed) == 5
