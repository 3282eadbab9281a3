"""Tame character extensions, transfer character sums, sign identities."""

import pytest

from levelzero.dl import CharacterData
from levelzero.langlands import (AdmissiblePair, extend_tame,
                                 theta_on_D, jl_character, find_witness,
                                 elliptic_character_identity, harris_summary)
from levelzero.cyclotomic import CycInt


def _pair(q, f, k):
    theta = CharacterData(q, f, k)
    e_dummy = 1
    return AdmissiblePair(f=f, theta=extend_tame(theta, e_dummy))


def test_extension_value_at_uniformizer():
    # e odd: trivially extended; e even: theta(-1)
    th = CharacterData(3, 1, 1)
    assert extend_tame(th, 1).pi_value == 1
    assert extend_tame(th, 2).pi_value == -1
    assert extend_tame(CharacterData(3, 1, 0), 2).pi_value == 1
    assert extend_tame(CharacterData(2, 2, 1), 2).pi_value == 1


def test_admissible_pair_requires_primitive():
    with pytest.raises(AssertionError):
        AdmissiblePair(f=2, theta=extend_tame(CharacterData(2, 2, 0), 1))


def test_division_algebra_values():
    pair = _pair(2, 2, 1)
    for e in (1, 2):
        vals = theta_on_D(pair, e)
        n = pair.theta.residue.modulus
        assert vals["unit"] == CycInt.integer(n, 1)
        assert vals["pi_d_f"] == CycInt.integer(n, 1)


def test_transfer_sum_witness():
    pair = _pair(2, 2, 1)
    alpha = find_witness(pair)
    assert not jl_character(pair, alpha).is_zero()
    F = pair.theta.residue.field()
    assert F.degree_over(alpha, 2) == 2


def test_transfer_sum_rejects_rational_argument():
    pair = _pair(2, 2, 1)
    F = pair.theta.residue.field()
    with pytest.raises(ValueError):
        jl_character(pair, F.one())


def test_elliptic_identity_grid():
    checked = 0
    for d, q in [(2, 2), (2, 3), (3, 2), (4, 2), (6, 2)]:
        for f in [f for f in range(1, d + 1) if d % f == 0 and f > 1]:
            n = q ** f - 1
            for k in range(1, n):
                theta = CharacterData(q, f, k)
                if not theta.is_primitive():
                    continue
                e = d // f
                pair = AdmissiblePair(f=f, theta=extend_tame(theta, e))
                alpha = find_witness(pair)
                for i in range(e):
                    rep = elliptic_character_identity(d, f, i, pair, alpha)
                    assert rep.ok
                    checked += 1
    assert checked >= 30


def test_summary_rows():
    pair = _pair(2, 2, 1)
    rows = harris_summary(2, 2, pair)
    assert len(rows) == 1
    row = rows[0]
    assert row.i == 0 and row.degree == 1
    assert row.lj_sign == 1
    assert row.tag == "discrete series, JL match"
    assert str(row.weil.eigenvalue) == "-q^1"
    assert row.dim == 1

    pair3 = _pair(2, 3, 1)
    rows3 = harris_summary(3, 2, pair3)
    assert [r.degree for r in rows3] == [2]
    assert rows3[0].dim == 3


def test_summary_interval_options():
    theta = CharacterData(3, 1, 1)
    pair = AdmissiblePair(f=1, theta=extend_tame(theta, 2))
    rows = harris_summary(2, 3, pair)
    assert [r.i for r in rows] == [0, 1]
    assert [r.lj_sign for r in rows] == [1, -1]
    opts0 = rows[0].parameter.interval_options
    opts1 = rows[1].parameter.interval_options
    assert opts0 == ((),)
    assert all(len(I) == 1 for I in opts1)
