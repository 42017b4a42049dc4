"""Tests for the fixed-point surface model: localization sums, characters,
first-cohomology weights, blowups and config round trips."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nekwall.algebra import RatFn
from nekwall.toric import (
    EquivClass,
    FixedPoint,
    LocalizationError,
    ToricSurface,
    TwoVarCharacter,
    blowup,
    builtin,
    chi_character,
    from_config,
    h1_weights,
    intersection,
    intersection_matrix,
    localize,
    parse_class_combo,
    to_config,
    weight_form,
    xi_numbers,
)

# intersection pairings of the stock surfaces, kept here independently of
# the construction-time tables: {surface: (class pair -> number, class ->
# pairing with the canonical class)}
STOCK = {
    "P2": ({("H", "H"): 1}, {"H": -3}),
    "F1": ({("H", "H"): 1, ("H", "E"): 0, ("E", "E"): -1},
           {"H": -3, "E": -1}),
    "P1xP1": ({("F", "F"): 0, ("F", "G"): 1, ("G", "G"): 0},
              {"F": -2, "G": -2}),
}


def stock_numbers(surface_name, combo):
    pairs, kpairs = STOCK[surface_name]
    names = list(kpairs)
    sq = 0
    for a in names:
        for b in names:
            ab = pairs.get((a, b), pairs.get((b, a)))
            sq += combo.get(a, 0) * combo.get(b, 0) * ab
    k = sum(c * kpairs[n] for n, c in combo.items())
    return sq, k


# -- builtins ---------------------------------------------------------------


def test_builtin_p2():
    s = builtin("P2")
    assert s.point_ids() == ("p_z", "p_x", "p_y")
    assert [(p.wx, p.wy) for p in s.points] == [
        ((1, 0), (0, 1)),
        ((-1, 0), (-1, 1)),
        ((1, -1), (0, -1)),
    ]
    assert s.class_vectors("H") == ((0, 0), (1, 0), (0, 1))
    assert (s.chi, s.k_squared(), s.signature(), s.chi_o()) == (3, 9, 1, 1)
    assert intersection(s, "H", "H") == 1


def test_builtin_f1_is_the_blown_up_plane():
    s = builtin("F1")
    assert s.point_ids() == ("p_z1", "p_z2", "p_x", "p_y")
    assert [(p.wx, p.wy) for p in s.points] == [
        ((1, 0), (-1, 1)),
        ((1, -1), (0, 1)),
        ((-1, 0), (-1, 1)),
        ((1, -1), (0, -1)),
    ]
    assert s.class_vectors("H") == ((0, 0), (0, 0), (1, 0), (0, 1))
    assert s.class_vectors("E") == ((-1, 0), (0, -1), (0, 0), (0, 0))
    assert (s.chi, s.k_squared(), s.signature(), s.chi_o()) == (4, 8, 0, 1)
    assert intersection_matrix(s) == {
        ("H", "H"): 1, ("H", "E"): 0, ("E", "H"): 0, ("E", "E"): -1,
    }
    again = blowup(builtin("P2"), "p_z", "E", name="F1")
    assert again == s


def test_builtin_p1xp1():
    s = builtin("P1xP1")
    assert (s.chi, s.k_squared(), s.signature(), s.chi_o()) == (4, 8, 0, 1)
    assert intersection(s, "F", "F") == 0
    assert intersection(s, "G", "G") == 0
    assert intersection(s, "F", "G") == 1


def test_builtin_unknown_name():
    with pytest.raises(ValueError):
        builtin("P3")


# -- localization ------------------------------------------------------------


def test_localize_low_degree_sums_vanish():
    for name in ("P2", "F1", "P1xP1"):
        s = builtin(name)
        assert localize(s, 1).is_zero()
        assert localize(s, s.canonical_class()).is_zero()
        for cname in s.class_names():
            assert localize(s, s.class_values(cname)).is_zero()


def test_localize_closed_values():
    s = builtin("P2")
    h = s.class_values("H")
    e1 = weight_form((1, 0))
    e2 = weight_form((0, 1))
    assert localize(s, h * h * h) == e1 + e2
    assert localize(s, s.todd2_class()) == RatFn.one()
    third = RatFn.from_scalar(Fraction(1, 3))
    assert localize(s, h * s.todd2_class()) == (e1 + e2) * third
    twelfth = RatFn.from_scalar(Fraction(1, 12))
    expected = (e1 * e1 + e1 * e2 * RatFn.from_scalar(3) + e2 * e2) * twelfth
    assert localize(s, s.point_class("p_z") * s.todd2_class()) == expected


def test_localize_point_and_euler_classes():
    for name in ("P2", "F1", "P1xP1"):
        s = builtin(name)
        assert localize(s, s.euler_class()) == RatFn.from_scalar(s.chi)
        for pid in s.point_ids():
            assert localize(s, s.point_class(pid)) == RatFn.one()


def test_localize_rejects_inconsistent_restrictions():
    s = builtin("P2")
    sq = weight_form((1, 0)) * weight_form((1, 0))
    broken = EquivClass([sq, RatFn.zero(), RatFn.zero()])
    with pytest.raises(LocalizationError):
        localize(s, broken)


def test_localize_wrong_length():
    s = builtin("P2")
    with pytest.raises(ValueError):
        localize(s, EquivClass([RatFn.one()] * 4))


# -- construction-time validation ---------------------------------------------


def test_dependent_tangent_weights_rejected():
    with pytest.raises(ValueError):
        FixedPoint("q", (1, 0), (2, 0))


def test_duplicate_point_ids_rejected():
    pts = [FixedPoint("q", (1, 0), (0, 1)), FixedPoint("q", (-1, 0), (-1, 1))]
    with pytest.raises(ValueError):
        ToricSurface("bad", pts, {})


def test_bad_class_table_rejected():
    s = builtin("P2")
    pts = list(s.points)
    with pytest.raises(ValueError, match="localize"):
        ToricSurface("bad", pts, {"H": [(0, 0), (1, 0), (1, 1)]})


def test_bad_weight_system_rejected():
    pts = [
        FixedPoint("a", (1, 0), (0, 1)),
        FixedPoint("b", (-1, 0), (-1, 1)),
    ]
    with pytest.raises(ValueError):
        ToricSurface("open", pts, {})


# -- class combination parsing --------------------------------------------------


def test_parse_class_combo():
    assert parse_class_combo("H-2E") == {"H": 1, "E": -2}
    assert parse_class_combo("3H-4E") == {"H": 3, "E": -4}
    assert parse_class_combo("-H+2E") == {"H": -1, "E": 2}
    assert parse_class_combo("5H") == {"H": 5}
    assert parse_class_combo(" H - 2E ") == {"H": 1, "E": -2}


@pytest.mark.parametrize("text", ["", "2", "H*E", "H 2E", "H-2E+H", "+"])
def test_parse_class_combo_rejects(text):
    with pytest.raises(ValueError):
        parse_class_combo(text)


def test_unknown_class_rejected():
    s = builtin("P2")
    with pytest.raises(ValueError):
        intersection(s, "H", "E")


# -- intersection numbers -------------------------------------------------------


def test_wall_numbers_on_the_blown_up_plane():
    s = builtin("F1")
    assert xi_numbers(s, "H-2E") == (-3, -1)
    assert xi_numbers(s, "3H-4E") == (-7, -5)
    assert xi_numbers(s, "H-4E") == (-15, 1)
    assert intersection(s, "H-2E", "H-2E") == -3
    assert intersection(s, "H-2E", "3H-4E") == 3 - 8


# -- characters -------------------------------------------------------------------


def test_character_examples():
    p2 = builtin("P2")
    f1 = builtin("F1")
    assert chi_character(p2, {}) == TwoVarCharacter({(0, 0): 1})
    assert chi_character(p2, "H") == TwoVarCharacter(
        {(0, 0): 1, (1, 0): 1, (0, 1): 1}
    )
    assert chi_character(p2, "3H") == TwoVarCharacter(
        {(m, n): 1 for m in range(4) for n in range(4) if m + n <= 3}
    )
    assert chi_character(p2, "-H").is_zero()
    assert chi_character(f1, "E") == TwoVarCharacter({(0, 0): 1})
    assert chi_character(f1, "H").chi_number() == 3
    assert chi_character(f1, "H-2E").is_zero()
    assert chi_character(f1, "-H+2E") == TwoVarCharacter({(-1, -1): -1})


@settings(max_examples=20, deadline=None)
@given(
    name=st.sampled_from(["P2", "F1", "P1xP1"]),
    c1=st.integers(-3, 3),
    c2=st.integers(-3, 3),
)
def test_character_matches_riemann_roch(name, c1, c2):
    s = builtin(name)
    names = s.class_names()
    combo = {names[0]: c1}
    if len(names) > 1:
        combo[names[1]] = c2
    char = chi_character(s, combo)
    sq, k = stock_numbers(name, combo)
    assert char.chi_number() == 1 + (sq - k) // 2
    dual = chi_character(s, {n: -c for n, c in combo.items()})
    assert char.chi_number() + dual.chi_number() == sq + 2


def test_character_covariance_under_lift_shift():
    f1 = builtin("F1")
    shifted_h = [(m + 1, n + 1) for m, n in f1.class_vectors("H")]
    s = ToricSurface(
        "F1s",
        list(f1.points),
        {"H": shifted_h, "E": list(f1.class_vectors("E"))},
    )
    assert intersection_matrix(s) == intersection_matrix(f1)
    base = chi_character(f1, "H")
    moved = chi_character(s, "H")
    assert moved == TwoVarCharacter(
        {(m + 1, n + 1): c for (m, n), c in base.terms.items()}
    )


# -- first-cohomology weights ------------------------------------------------------


def test_h1_weights_frozen_tables():
    s = builtin("F1")
    assert h1_weights(s, "H-2E") == ([], [(-1, -1)])
    assert h1_weights(s, "3H-4E") == (
        [],
        [(-3, -1), (-2, -2), (-2, -1), (-1, -3), (-1, -2)],
    )
    alphas, primes = h1_weights(s, "H-4E")
    assert alphas == [(0, 2), (0, 3), (1, 1), (1, 2), (2, 0), (2, 1), (3, 0)]
    assert primes == [
        (-3, -1), (-2, -2), (-2, -1), (-1, -3), (-1, -2), (-1, -1),
    ]
    assert len(alphas) + len(primes) == -xi_numbers(s, "H-4E")[0] - 2


def test_h1_weights_rejects_walls_with_sections():
    f1 = builtin("F1")
    p2 = builtin("P2")
    for surface, xi in ((f1, "E"), (f1, {}), (p2, "H"), (p2, "3H")):
        with pytest.raises(ValueError, match="not good"):
            h1_weights(surface, xi)


# -- blowups -----------------------------------------------------------------------


def test_blowup_point_and_class_bookkeeping():
    s = blowup(builtin("F1"), "p_x", "E2")
    assert s.chi == 5
    assert s.k_squared() == 7
    assert s.signature() == -1
    assert intersection(s, "E2", "E2") == -1
    assert intersection(s, "E2", "E") == 0
    assert intersection(s, "E2", "H") == 0
    assert s.class_vectors("E2")[:2] == ((0, 0), (0, 0))


def test_blowup_rejects_bad_input():
    s = builtin("F1")
    with pytest.raises(ValueError):
        blowup(s, "p_q", "E2")
    with pytest.raises(ValueError):
        blowup(s, "p_x", "E")
    cfg = to_config(s)
    cfg["fixed_points"][2]["id"] = "p_z11"
    cfg["classes"] = {
        c: {("p_z11" if k == "p_x" else k): v for k, v in t.items()}
        for c, t in cfg["classes"].items()
    }
    renamed = from_config(cfg)
    with pytest.raises(ValueError, match="collide"):
        blowup(renamed, "p_z1", "E2")


@settings(max_examples=10, deadline=None)
@given(
    name=st.sampled_from(["P2", "F1", "P1xP1"]),
    pick1=st.integers(0, 10),
    pick2=st.integers(0, 10),
)
def test_blowup_chain_revalidates(name, pick1, pick2):
    s = builtin(name)
    first = s.point_ids()[pick1 % s.chi]
    once = blowup(s, first, "X1")
    second = once.point_ids()[pick2 % once.chi]
    twice = blowup(once, second, "X2")
    assert (twice.chi, twice.k_squared()) == (s.chi + 2, s.k_squared() - 2)
    assert twice.signature() == (twice.k_squared() - 2 * twice.chi) // 3
    assert intersection(twice, "X1", "X2") in (0, -1)
    assert intersection(twice, "X2", "X2") == -1


# -- config round trips --------------------------------------------------------------


def test_config_round_trip():
    for name in ("P2", "F1", "P1xP1"):
        s = builtin(name)
        assert from_config(to_config(s)) == s


def test_config_missing_class_entries_default_to_zero():
    cfg = to_config(builtin("P2"))
    del cfg["classes"]["H"]["p_z"]
    assert from_config(cfg) == builtin("P2")


def test_config_rejections():
    base = to_config(builtin("P2"))
    bad = dict(base)
    bad["extra"] = 1
    with pytest.raises(ValueError, match="unknown config"):
        from_config(bad)
    with pytest.raises(ValueError):
        from_config({"name": "x"})
    bad = to_config(builtin("P2"))
    bad["fixed_points"][0]["wx"] = [2, 0]
    bad["fixed_points"][0]["wy"] = [1, 0]
    with pytest.raises(ValueError, match="dependent"):
        from_config(bad)
    bad = to_config(builtin("P2"))
    bad["classes"]["H"]["p_q"] = [1, 0]
    with pytest.raises(ValueError, match="unknown points"):
        from_config(bad)
    bad = to_config(builtin("P2"))
    bad["classes"]["H"]["p_x"] = [1, 0.5]
    with pytest.raises(ValueError, match="integer"):
        from_config(bad)
    bad = to_config(builtin("P2"))
    bad["classes"]["H"]["p_x"] = [1, 1]
    with pytest.raises(ValueError, match="localize"):
        from_config(bad)
