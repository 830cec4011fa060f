import itertools
import math
import random
from fractions import Fraction

import pytest

from localp12.localization import local_invariant
from localp12.potentials import (
    classical_part,
    degree0_triple,
    extended_potential,
    g_series,
    gw_invariant,
    potential,
    quantum_part,
    quantum_sign,
    stacky_part,
)
from localp12.ratfun import RF_T1, RF_T2, RF_ZERO, RatFun, rf

_LEVEL = RF_T1 + RF_T2


def test_classical_explicit_terms():
    c = classical_part()
    got = {e: v for e, v in c.terms()}
    assert got == {
        (3, 0, 0): rf(1) / ((RF_T1 * RF_T2) * 18),
        (1, 2, 0): rf(Fraction(-1, 3)),
        (1, 0, 2): rf(Fraction(1, 4)),
        (0, 1, 2): RF_T1 * Fraction(-1, 4),
        (0, 3, 0): (RF_T1 + RF_T2 * 2) * Fraction(-1, 9),
    }


def test_classical_coefficients_are_weighted_triples():
    c = classical_part()
    names = ("1", "H", "S")
    seen = set()
    for picks in itertools.combinations_with_replacement(range(3), 3):
        counts = (picks.count(0), picks.count(1), picks.count(2))
        seen.add(counts)
        want = degree0_triple(names[i] for i in picks) * Fraction(
            1, math.prod(math.factorial(m) for m in counts)
        )
        assert c.coeff(counts) == want
    assert len(seen) == 10


def test_degree0_triple_selection_rule():
    assert degree0_triple(("S", "S", "S")) == RF_ZERO
    assert degree0_triple(("1", "1", "S")) == RF_ZERO
    assert degree0_triple(("1", "H", "S")) == RF_ZERO
    assert degree0_triple(("H", "H", "S")) == RF_ZERO
    assert degree0_triple(("1", "S", "S")) == rf(Fraction(1, 2))


def test_g_series_coefficients():
    g = g_series(10)
    for n in range(4):
        assert g.coeff((n,)).rational() == 0
    assert g.coeff((4,)).rational() == Fraction(1, 96)
    assert g.coeff((5,)).rational() == 0
    assert g.coeff((6,)).rational() == Fraction(1, 5760)
    assert g.coeff((8,)).rational() == Fraction(1, 161280)
    assert g.coeff((10,)).rational() == Fraction(17, 58060800)
    assert not g_series(3)


def test_g_series_is_odd_free():
    g = g_series(21)
    for e, _ in g.terms():
        assert e[0] % 2 == 0
        assert e[0] >= 4


def test_stacky_part_weight():
    s = stacky_part(6)
    assert s.coeff((4,)) == _LEVEL * Fraction(-1, 96)
    assert s.coeff((6,)) == _LEVEL * Fraction(-1, 5760)


def test_quantum_sign_period_four():
    assert [quantum_sign(d) for d in range(1, 9)] == [1, -1, -1, 1, 1, -1, -1, 1]
    assert quantum_sign(9) == quantum_sign(1)
    assert quantum_sign(10) == quantum_sign(2)


def test_potential_small_caps():
    p = potential(1, 1)
    assert {e: v for e, v in p.terms()} == {
        (0, 0, 1, 1): _LEVEL,
        (0, 1, 1, 1): _LEVEL,
    }
    cubic = potential(0, 3)
    assert len(list(cubic.terms())) == 5
    assert cubic.coeff((1, 0, 2, 0)) == rf(Fraction(1, 4))


def test_potential_coefficients_match_invariants():
    p = potential(4, 6)
    rng = random.Random(2061)
    for _ in range(30):
        d = rng.randrange(1, 5)
        a = rng.randrange(0, 7)
        b = rng.randrange(0, 7)
        got = p.coeff((0, a, b, d))
        if (b - d) % 2:
            assert got == RF_ZERO
            continue
        want = gw_invariant(a, b, d) * Fraction(
            1, math.factorial(a) * math.factorial(b)
        )
        assert got == want


def test_divisor_property():
    # d/dz1 multiplies the degree-d layer by d
    p = quantum_part(5, 5)
    dp = p.differentiate("z1")
    for e, v in p.terms():
        if e[1] == 0:
            continue
        down = (e[0], e[1] - 1, e[2], e[3])
        assert dp.coeff(down) == v * e[1]
    for e, v in dp.terms():
        d = e[3]
        if e[1] + 1 > 5:
            continue
        up = (e[0], e[1] + 1, e[2], e[3])
        assert p.coeff(up) * (e[1] + 1) == v
        assert p.coeff(e) * d == v


def test_extended_potential_binomial_reconstruction():
    zorder, uorder = 4, 3
    ext = extended_potential(2, zorder, uorder)
    base = potential(2, zorder + uorder)
    rng = random.Random(515)
    for _ in range(40):
        e0 = rng.randrange(0, 2)
        a = rng.randrange(0, zorder + 1)
        b = rng.randrange(0, uorder + 1)
        e1 = rng.randrange(0, 3)
        d = rng.randrange(0, 3)
        want = base.coeff((e0, e1, a + b, d)) * math.comb(a + b, b)
        assert ext.coeff((e0, e1, a, d, b)) == want


def test_extended_potential_caps_and_validation():
    ext = extended_potential(1, 2, 2)
    assert ext.vs.names == ("z0", "z1", "z2", "q", "u")
    assert ext.vs.caps == (2, 2, 2, 1, 2)
    assert ext.coeff((0, 0, 0, 1, 1)) == _LEVEL
    with pytest.raises(ValueError):
        extended_potential(1, 2, -1)
    with pytest.raises(ValueError):
        potential(-1, 2)


def test_gw_invariant_values():
    assert gw_invariant(0, 1, 1) == _LEVEL
    assert gw_invariant(0, 3, 1) == _LEVEL * Fraction(-1, 4)
    assert gw_invariant(0, 1, 3) == _LEVEL * Fraction(-1, 9)
    assert gw_invariant(0, 1, 5) == _LEVEL * Fraction(1, 25)
    assert gw_invariant(0, 0, 2) == _LEVEL * Fraction(-1, 4)
    assert gw_invariant(0, 2, 2) == _LEVEL * Fraction(1, 4)
    assert gw_invariant(0, 0, 4) == _LEVEL * Fraction(1, 32)
    assert gw_invariant(2, 1, 3) == _LEVEL * Fraction(-1, 1)
    assert gw_invariant(1, 0, 2) == _LEVEL * Fraction(-1, 2)


def test_gw_invariant_divisor_factors():
    rng = random.Random(88)
    for _ in range(20):
        d = rng.randrange(1, 8)
        n2 = 2 * rng.randrange(0, 4) + (1 if d % 2 else 0)
        n1 = rng.randrange(0, 5)
        assert gw_invariant(n1, n2, d) == gw_invariant(0, n2, d) * Fraction(d) ** n1
        assert gw_invariant(0, n2, d) == _LEVEL * local_invariant(d, n2)


def test_gw_invariant_validation():
    with pytest.raises(ValueError):
        gw_invariant(0, 0, 1)
    with pytest.raises(ValueError):
        gw_invariant(0, 1, 2)
    with pytest.raises(ValueError):
        gw_invariant(0, 0, 0)
    with pytest.raises(ValueError):
        gw_invariant(-1, 1, 1)
