import itertools
import random

import pytest

from littlewood.bott import (
    BottOutcome,
    SpinLabel,
    b_spinor_twist_weight,
    bott,
    d_spinor_twist_weight,
    epsilon_singular,
    shifted_reflection,
    spin_cohomology_B,
    spin_cohomology_D,
)
from littlewood.characters import HalfInt, Weight, build_root_system
from littlewood.partitions import partitions_in_box


def test_shifted_reflection_a1():
    a1 = build_root_system("A", 1)
    w = shifted_reflection(a1, 1, Weight.fundamental("A", 1, (0,)))
    assert w.fund_coords() == (-2,)


def test_shifted_reflection_d_epsilon_rules():
    d4 = build_root_system("D", 4)
    w = Weight.epsilon("D", 4, (5, 3, 2, 1))
    # inner reflection swaps with a shift
    got = shifted_reflection(d4, 2, w).coords
    assert tuple(int(c) for c in got) == (5, 1, 4, 1)
    # the last node negates and swaps the final pair, shifted
    got = shifted_reflection(d4, 4, w).coords
    assert tuple(int(c) for c in got) == (5, 3, -2, -3)


def test_shifted_reflection_is_involution():
    rng = random.Random(1)
    for family, rank in (("B", 3), ("C", 2), ("D", 4), ("G", 2), ("F", 4)):
        rs = build_root_system(family, rank)
        for _ in range(10):
            fc = tuple(rng.randint(-4, 4) for _ in range(rank))
            w = Weight.fundamental(family, rank, fc)
            for i in range(1, rank + 1):
                assert shifted_reflection(rs, i, shifted_reflection(rs, i, w)).fund_coords() == fc


def test_bott_dominant_is_degree_zero():
    for family, rank in (("A", 3), ("C", 2), ("E", 6)):
        rs = build_root_system(family, rank)
        fc = tuple(1 if i % 2 else 2 for i in range(rank))
        out = bott(rs, Weight.fundamental(family, rank, fc))
        assert out == BottOutcome(False, 0, Weight.fundamental(family, rank, fc))


def _length(rs, word):
    """Inversion count of the product of the simple reflections in word."""
    neg = 0
    for root in rs._roots:
        fc = root.fund_coords
        for i in reversed(word):
            fc = rs.reflect(i - 1, fc)
        coeffs = rs.root_coords(fc)
        assert all(c.denominator == 1 for c in coeffs)
        if all(c <= 0 for c in coeffs):
            neg += 1
    return neg


def test_bott_recovers_word_length_up_to_4():
    for family, rank in (("A", 3), ("B", 2), ("C", 3), ("D", 4), ("G", 2)):
        rs = build_root_system(family, rank)
        lam = Weight.fundamental(family, rank, tuple(1 for _ in range(rank)))
        for length in range(1, 5):
            for word in itertools.product(range(1, rank + 1), repeat=length):
                twisted = lam
                for i in reversed(word):
                    twisted = shifted_reflection(rs, i, twisted)
                out = bott(rs, twisted)
                wl = _length(rs, list(word))
                if wl == length:  # reduced word
                    assert not out.vanishes
                    assert out.degree == length
                    assert out.weight.fund_coords() == lam.fund_coords()


def test_bott_vanishing_on_walls():
    c2 = build_root_system("C", 2)
    # lambda + rho = (0, 1) in epsilon coordinates: on the long wall
    w = Weight.epsilon("C", 2, (-2, 0))
    assert bott(c2, w).vanishes
    assert bott(c2, w, epsilon_shortcut=False).vanishes


def test_epsilon_shortcut_agrees_with_generic_walk():
    rng = random.Random(3)
    for family, rank in (("B", 3), ("C", 2), ("D", 4)):
        rs = build_root_system(family, rank)
        for _ in range(200):
            fc = tuple(rng.randint(-5, 5) for _ in range(rank))
            w = Weight.fundamental(family, rank, fc)
            assert bott(rs, w) == bott(rs, w, epsilon_shortcut=False)


def test_epsilon_singular_zero_coordinate_type_c():
    # zero coordinate on a long-root wall, no up-to-sign collision
    assert epsilon_singular("C", (HalfInt(0), HalfInt(1)))
    assert not epsilon_singular("D", (HalfInt(0), HalfInt(1)))


def test_spin_cohomology_d_examples():
    out = spin_cohomology_D(3, (1,), "plus")
    assert (out.vanishes, out.degree, out.label) == (False, 0, SpinLabel.DELTA_MINUS)
    out = spin_cohomology_D(3, (2, 1), "plus")
    assert (out.vanishes, out.degree, out.label) == (False, 1, SpinLabel.DELTA_MINUS)
    assert spin_cohomology_D(2, (2,), "plus").vanishes
    out = spin_cohomology_D(2, (2, 2), "plus")
    assert (out.degree, out.label) == (1, SpinLabel.DELTA_PLUS)
    out = spin_cohomology_D(2, (2, 2), "minus")
    assert (out.degree, out.label) == (1, SpinLabel.DELTA_MINUS)
    with pytest.raises(ValueError):
        spin_cohomology_D(2, (3,), "plus")


def test_spin_cohomology_b_examples():
    out = spin_cohomology_B(2, (2,))
    assert (out.vanishes, out.degree, out.label) == (False, 1, SpinLabel.DELTA)
    assert spin_cohomology_B(3, (1,)).vanishes
    out = spin_cohomology_B(3, ())
    assert (out.degree, out.label) == (0, SpinLabel.DELTA)
    with pytest.raises(ValueError):
        spin_cohomology_B(2, (3,))


def test_spin_closed_forms_match_bott_small():
    for n in (2, 3, 4):
        rs = build_root_system("D", n)
        for lam in partitions_in_box(n, n):
            for comp in ("plus", "minus"):
                closed = spin_cohomology_D(n, lam, comp)
                walked = bott(rs, d_spinor_twist_weight(n, lam, comp))
                assert closed.vanishes == walked.vanishes
                if not closed.vanishes:
                    assert walked.degree == closed.degree
    for n in (1, 2, 3):
        rs = build_root_system("B", n)
        for lam in partitions_in_box(n, n):
            closed = spin_cohomology_B(n, lam)
            walked = bott(rs, b_spinor_twist_weight(n, lam))
            assert closed.vanishes == walked.vanishes
            if not closed.vanishes:
                assert walked.degree == closed.degree


def test_bott_degree_bounded_by_positive_roots():
    rng = random.Random(5)
    for family, rank in (("G", 2), ("F", 4), ("B", 4)):
        rs = build_root_system(family, rank)
        for _ in range(100):
            fc = tuple(rng.randint(-6, 6) for _ in range(rank))
            out = bott(rs, Weight.fundamental(family, rank, fc), epsilon_shortcut=False)
            if not out.vanishes:
                assert 0 <= out.degree <= rs.num_positive_roots


def test_outcome_json():
    a1 = build_root_system("A", 1)
    assert bott(a1, Weight.fundamental("A", 1, (-1,))).to_json() == {"vanishes": True}
    out = bott(a1, Weight.fundamental("A", 1, (-2,)))
    assert out.to_json() == {"degree": 1, "weight": {"system": "fundamental:A1", "coords": [0]}}
