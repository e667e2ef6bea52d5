import json
import random

import pytest

from littlewood.characters import (
    Character,
    CoordSystem,
    HalfInt,
    Weight,
    build_root_system,
    char_of_irrep,
    decompose_character,
    dim_irrep,
    schur_character,
    trivial_character,
    weight_multiplicities,
)
from littlewood.errors import NotCharacterError, ScaleError
from littlewood.partitions import Decomposition

EXPECTED_POSITIVE_ROOTS = [
    ("A", 1, 1),
    ("A", 4, 10),
    ("B", 2, 4),
    ("B", 6, 36),
    ("C", 3, 9),
    ("D", 2, 2),
    ("D", 4, 12),
    ("G", 2, 6),
    ("F", 4, 24),
    ("E", 6, 36),
    ("E", 7, 63),
    ("E", 8, 120),
]


@pytest.mark.parametrize("family,rank,count", EXPECTED_POSITIVE_ROOTS)
def test_positive_root_counts(family, rank, count):
    rs = build_root_system(family, rank)
    assert rs.num_positive_roots == count


def test_rho_is_sum_of_fundamental_weights():
    for family, rank, _ in EXPECTED_POSITIVE_ROOTS:
        rs = build_root_system(family, rank)
        total = [0] * rank
        for w in rs.fundamental_weights:
            for i, c in enumerate(w.fund_coords()):
                total[i] += c
        assert tuple(total) == rs.rho.fund_coords()


def test_invalid_type():
    with pytest.raises(ValueError):
        build_root_system("E", 5)
    with pytest.raises(ValueError):
        build_root_system("H", 3)


def test_halfint_arithmetic_and_parse():
    h = HalfInt.parse("3/2")
    assert h.twice == 3 and not h.is_integer
    assert str(h) == "3/2" and str(HalfInt(2)) == "2"
    assert h + h == 3
    assert h - HalfInt.parse("1/2") == 1
    assert -h == HalfInt.parse("-3/2")
    assert 2 * h == 3
    assert h < 2 and h > 1
    with pytest.raises(ValueError):
        int(h)
    with pytest.raises(ValueError):
        HalfInt.parse("1/3")


def test_weight_conversions_round_trip():
    cases = [
        ("B", 3, ("3/2", "1/2", "1/2")),
        ("C", 2, ("2", "1")),
        ("D", 4, ("1/2", "1/2", "1/2", "-1/2")),
        ("A", 2, ("2", "1", "0")),
    ]
    for family, rank, coords in cases:
        w = Weight.epsilon(family, rank, tuple(HalfInt.parse(c) for c in coords))
        back = w.to_fundamental().to_epsilon()
        assert back.coords == w.coords
        assert all(isinstance(m, int) for m in w.fund_coords())


def test_weight_off_lattice_rejected():
    w = Weight.epsilon("C", 2, (HalfInt.parse("1/2"), HalfInt(0)))
    with pytest.raises(ValueError):
        w.fund_coords()
    # D needs all-integer or all-half-integer coordinates
    w = Weight.epsilon("D", 2, (HalfInt.parse("1/2"), HalfInt(1)))
    with pytest.raises(ValueError):
        w.fund_coords()


def test_weight_json_and_str():
    w = Weight.epsilon("B", 2, (HalfInt.parse("3/2"), HalfInt.parse("1/2")))
    assert w.to_json() == {"system": "epsilon:B2", "coords": ["3/2", "1/2"]}
    assert str(w) == "eps:B2:3/2,1/2"
    assert CoordSystem.parse("fund:G2") == CoordSystem("fundamental", "G", 2)
    assert json.loads(json.dumps(w.to_json())) == w.to_json()


def test_dim_irrep_basics():
    g2 = build_root_system("G", 2)
    assert dim_irrep(g2, (0, 0)) == 1
    assert dim_irrep(g2, (1, 0)) == 7
    assert dim_irrep(g2, (0, 1)) == 14
    with pytest.raises(ValueError):
        dim_irrep(g2, (-1, 0))
    c2 = build_root_system("C", 2)
    assert dim_irrep(c2, Weight.epsilon("C", 2, (2, 2))) == 14


def test_weight_multiplicities_a1():
    a1 = build_root_system("A", 1)
    char = weight_multiplicities(a1, (2,))
    assert char.entries == {(2,): 1, (0,): 1, (-2,): 1}


def test_weight_multiplicities_g2():
    g2 = build_root_system("G", 2)
    seven = weight_multiplicities(g2, (1, 0))
    assert seven[(0, 0)] == 1
    assert seven.dimension() == 7
    assert sum(1 for fc, m in seven.entries.items() if fc != (0, 0)) == 6
    adjoint = weight_multiplicities(g2, (0, 1))
    assert adjoint[(0, 0)] == 2
    assert adjoint.dimension() == 14


def test_weight_multiplicities_bound():
    e6 = build_root_system("E", 6)
    with pytest.raises(ScaleError):
        weight_multiplicities(e6, (1, 0, 0, 0, 0, 0), bound=10)


def test_characters_weyl_invariant_exhaustive_small():
    for family, rank in (("G", 2), ("B", 2), ("C", 2), ("A", 2)):
        rs = build_root_system(family, rank)
        for a in range(3):
            for b in range(3):
                char = weight_multiplicities(rs, (a, b))
                assert char.is_weyl_invariant()


def test_decompose_character_examples():
    g2 = build_root_system("G", 2)
    seven = char_of_irrep(g2, (1, 0))
    assert decompose_character(g2, seven).to_json() == {"fund:G2:1,0": 1}

    wedge = seven.exterior_power(2)
    assert wedge.dimension() == 21
    assert decompose_character(g2, wedge).to_json() == {"fund:G2:0,1": 1, "fund:G2:1,0": 1}

    sym = seven.symmetric_power(2)
    assert sym.dimension() == 28
    assert decompose_character(g2, sym).to_json() == {"fund:G2:0,0": 1, "fund:G2:2,0": 1}


def test_decompose_rejects_non_characters():
    g2 = build_root_system("G", 2)
    bogus = Character(g2, {(1, 0): 1})  # a bare extreme weight, no orbit
    with pytest.raises(NotCharacterError):
        decompose_character(g2, bogus)
    minus = trivial_character(g2).scale(-1)
    with pytest.raises(NotCharacterError):
        decompose_character(g2, minus)


def test_decompose_picks_dominance_maximal_not_lex():
    # In A2 the 6-dimensional symmetric square of the dual vector rep has
    # highest weight (0,2) but also contains the lex-larger dominant (1,0).
    a2 = build_root_system("A", 2)
    char = char_of_irrep(a2, (0, 2))
    assert decompose_character(a2, char).to_json() == {"fund:A2:0,2": 1}


def test_decompose_round_trip_fuzz():
    rng = random.Random(7)
    systems = [("G", 2), ("C", 2), ("B", 3), ("A", 2)]
    for _ in range(12):
        family, rank = rng.choice(systems)
        rs = build_root_system(family, rank)
        target = Decomposition()
        total = Character(rs)
        for _ in range(rng.randint(1, 3)):
            fc = tuple(rng.randint(0, 2) for _ in range(rank))
            if dim_irrep(rs, fc) > 400:
                continue
            mult = rng.randint(1, 3)
            target.add(rs.weight(fc), mult)
            total = total + char_of_irrep(rs, fc).scale(mult)
        assert decompose_character(rs, total) == target


def test_schur_character_matches_powers():
    g2 = build_root_system("G", 2)
    base = char_of_irrep(g2, (1, 0))
    for k in (1, 2, 3):
        assert schur_character(g2, base, (1,) * k) == base.exterior_power(k)
        assert schur_character(g2, base, (k,)) == base.symmetric_power(k)
    assert schur_character(g2, base, (1,)) == base


def test_schur_character_sp4_example():
    c2 = build_root_system("C", 2)
    base = char_of_irrep(c2, Weight.epsilon("C", 2, (1, 0)))
    char = schur_character(c2, base, (2, 2))
    assert char.dimension() == 20
    dec = decompose_character(c2, char)
    labels = {w.to_epsilon().coords: m for w, m in dec.entries.items()}
    assert labels == {
        (HalfInt(2), HalfInt(2)): 1,
        (HalfInt(1), HalfInt(1)): 1,
        (HalfInt(0), HalfInt(0)): 1,
    }


def test_schur_character_bounds():
    g2 = build_root_system("G", 2)
    base = char_of_irrep(g2, (1, 0))
    with pytest.raises(ScaleError):
        schur_character(g2, base, (9,))
    e8 = build_root_system("E", 8)
    with pytest.raises(ScaleError):
        schur_character(e8, char_of_irrep(e8, (0,) * 7 + (1,)), (2,))


def test_character_tensor_and_json():
    g2 = build_root_system("G", 2)
    seven = char_of_irrep(g2, (1, 0))
    sq = seven * seven
    assert sq.dimension() == 49
    assert sq == seven.exterior_power(2) + seven.symmetric_power(2)
    data = seven.to_json()
    assert data["fund:G2:1,0"] == 1 and len(data) == 7


def test_dim_bound_env_var(monkeypatch):
    from littlewood.characters import dim_bound

    monkeypatch.setenv("LITTLEWOOD_DIM_BOUND", "50")
    assert dim_bound() == 50
    g2 = build_root_system("G", 2)
    with pytest.raises(ScaleError):
        weight_multiplicities(g2, (2, 1))  # 189-dimensional
    monkeypatch.delenv("LITTLEWOOD_DIM_BOUND")
    assert weight_multiplicities(g2, (2, 1)).dimension() == 189
