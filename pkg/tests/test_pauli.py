import pytest

from ccten import (
    PauliWord,
    StabilizerState,
    build_honeycomb_torus,
    color_code_state,
    commutes_with_all,
    contractible_loop_operator,
    is_stabilized_by,
    plaquette_operator,
    symplectic_product,
)


def test_word_string_roundtrip():
    for s in ("IXYZ", "XXXX", "IIII", "ZYXI"):
        assert PauliWord.from_string(s).to_string() == s
    with pytest.raises(ValueError):
        PauliWord.from_string("IXQ")


def test_word_validation():
    with pytest.raises(ValueError):
        PauliWord(4, 0, 2)  # bit above qubit count


def test_word_product_and_weight():
    a = PauliWord.from_string("XXI")
    b = PauliWord.from_string("IXZ")
    assert (a * b).to_string() == "XIZ"
    assert a.weight() == 2
    assert PauliWord.identity(3).is_identity()
    with pytest.raises(ValueError):
        a * PauliWord.identity(2)


def test_symplectic_product():
    x = PauliWord.from_string("X")
    z = PauliWord.from_string("Z")
    y = PauliWord.from_string("Y")
    assert symplectic_product(x, z) == 1
    assert symplectic_product(x, y) == 1
    assert symplectic_product(y, y) == 0
    assert symplectic_product(
        PauliWord.from_string("XX"), PauliWord.from_string("ZZ")
    ) == 0


def test_symplectic_row():
    w = PauliWord.from_string("XZY")
    assert w.symplectic_row() == w.x | (w.z << 3)


def test_state_validate():
    good = StabilizerState(2, [PauliWord.from_string("XX"), PauliWord.from_string("ZZ")])
    good.validate()
    bad = StabilizerState(2, [PauliWord.from_string("XI"), PauliWord.from_string("ZI")])
    with pytest.raises(ValueError):
        bad.validate()
    dep = StabilizerState(
        2,
        [
            PauliWord.from_string("XX"),
            PauliWord.from_string("ZZ"),
            PauliWord.from_string("YY"),
        ],
    )
    with pytest.raises(ValueError):
        dep.validate()


def test_tableau_text():
    s = StabilizerState(2, [PauliWord.from_string("XY")])
    assert s.tableau_text() == "XY"


@pytest.fixture(scope="module")
def t():
    return build_honeycomb_torus(6, 6)


def test_plaquette_operator(t):
    op = plaquette_operator(t, "X", 0)
    assert op.weight() == 6
    assert op.z == 0
    with pytest.raises(ValueError):
        plaquette_operator(t, "Y", 0)
    with pytest.raises(ValueError):
        plaquette_operator(t, "X", t.n_plaquettes)


def test_color_code_state(t):
    s = color_code_state(t)
    s.validate()
    assert len(s.generators) == t.n_vertices - 4
    # every plaquette operator (including the dropped ones) is stabilized
    for p in range(t.n_plaquettes):
        for kind in ("X", "Z"):
            assert is_stabilized_by(s, plaquette_operator(t, kind, p))


def test_membership_vs_weak(t):
    s = color_code_state(t)
    from ccten import logical_loops

    loops = logical_loops(t)
    for _, op in loops.all_operators():
        assert commutes_with_all(s, op)
        assert not is_stabilized_by(s, op)


def test_contractible_loop_operators(t):
    s = color_code_state(t)
    disk = [t.hex_index(q, r) for q, r in t.hex_disk((3, 3), 1)]
    for kind in ("rX", "gX", "gZ", "bZ"):
        loop = contractible_loop_operator(t, kind, disk)
        assert loop.weight() > 0
        assert loop.weight() % 2 == 0
        assert is_stabilized_by(s, loop)
    with pytest.raises(ValueError):
        contractible_loop_operator(t, "qq", disk)
    winding = [t.hex_index(q, 0) for q in range(6)]
    with pytest.raises(ValueError):
        contractible_loop_operator(t, "rX", winding)
