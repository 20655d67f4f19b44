import itertools

import pytest
from hypothesis import given, strategies as st

from cuspobs.errors import InputError, InvalidSurface, ParityError
from cuspobs.lattice import (ALMOST_COMPLEX, SurfaceData, arithmetic_genus, b2_plus, chi_divisor,
                             chi_sheaf, cp2, from_preset, h0, hirzebruch, inertia, pair,
                             require_valid, required_genus, signature, sub, validate_surface)

CP2 = cp2()


def findings(S):
    return {f.name: f.holds for f in validate_surface(S)}


def test_pairing():
    assert pair(CP2, (1,), (1,)) == 1
    assert pair(CP2, (3,), (-3,)) == -9
    assert pair(hirzebruch(2), (1, 0), (0, 1)) == 1
    assert pair(hirzebruch(2), (0, 1), (0, 1)) == -2
    with pytest.raises(InputError):
        pair(CP2, (1, 0), (1,))


@pytest.mark.parametrize("b1, pg, expected", [(0, 0, 1), (2, 0, 0), (0, 2, 3)])
def test_chi_sheaf(b1, pg, expected):
    S = SurfaceData(gram=((1,),), K=(-3,), b1=b1, pg=pg)
    assert chi_sheaf(S) == expected


def test_chi_sheaf_odd_b1():
    with pytest.raises(InputError):
        chi_sheaf(SurfaceData(gram=((1,),), K=(-3,), b1=1))


def test_chi_divisor_examples():
    assert chi_divisor(CP2, (2,)) == 6
    assert chi_divisor(CP2, (0,)) == chi_sheaf(CP2)
    assert chi_divisor(hirzebruch(0), (1, 1)) == 4
    for j in range(0, 12):
        assert chi_divisor(CP2, (j,)) == (j + 1) * (j + 2) // 2


def test_parity_violation():
    bad = SurfaceData(gram=((1,),), K=(-2,))
    with pytest.raises(ParityError):
        chi_divisor(bad, (1,))
    with pytest.raises(ParityError):
        arithmetic_genus(bad, (1,))


@pytest.mark.parametrize("d, genus", [(1, 0), (3, 1), (4, 3), (5, 6), (6, 10)])
def test_genus_formulas_on_cp2(d, genus):
    assert arithmetic_genus(CP2, (d,)) == genus
    assert required_genus(CP2, (d,)) == genus


@pytest.mark.parametrize("j, expected", [(1, 3), (-1, 0), (3, 10), (0, 1)])
def test_h0_cp2(j, expected):
    assert h0(CP2, (j,)) == expected


def test_h0_hirzebruch_lattice_points():
    # direct count of the polygon 0 <= y <= a, 0 <= x <= b - e y
    for e in range(4):
        S = hirzebruch(e)
        for b, a in itertools.product(range(-2, 7), range(-2, 5)):
            pts = sum(1 for y in range(max(a, 0) + 1) for x in range(b - e * y + 1)
                      if x >= 0) if a >= 0 else 0
            assert h0(S, (b, a)) == pts
    assert h0(hirzebruch(1), (0, 1)) == 1  # the negative section is rigid


def test_h0_table_and_unavailable():
    S = SurfaceData(gram=((1,),), K=(-3,), h0_table={(2,): 6})
    assert h0(S, (2,)) == 6
    assert h0(S, (5,)) is None


def test_h0_monotone_under_nef():
    for e in range(4):
        S = hirzebruch(e)
        nef = [(1, 0), (e, 1)]  # F and B + eF
        for b, a in itertools.product(range(0, 6), range(0, 4)):
            for n in nef:
                assert h0(S, (b + n[0], a + n[1])) >= h0(S, (b, a)) >= 0


def test_inertia_exact():
    assert inertia([[0, 1], [1, 0]]) == (1, 1, 0)
    assert inertia([[0, 1], [1, -3]]) == (1, 1, 0)
    assert inertia([[1, 0, 0], [0, -1, 0], [0, 0, -1]]) == (1, 2, 0)
    assert inertia([[1, 1], [1, 1]]) == (1, 0, 1)
    assert inertia([[0, 0], [0, 0]]) == (0, 0, 2)
    # E8-ish negative definite check: -2 on diagonal chain (A3)
    assert inertia([[-2, 1, 0], [1, -2, 1], [0, 1, -2]]) == (0, 3, 0)


def test_presets_validate():
    assert all(findings(CP2).values())
    for e in range(6):
        S = hirzebruch(e)
        assert all(findings(S).values())
        assert pair(S, S.K, S.K) == 8
        assert signature(S) == 0
        assert b2_plus(S) == 1


def test_corrupted_canonical_class():
    f = findings(SurfaceData(gram=((1,),), K=(-2,)))
    assert f["K-characteristic"] is False
    with pytest.raises(InvalidSurface) as exc:
        require_valid(SurfaceData(gram=((1,),), K=(-2,)))
    assert any(x.name == "K-characteristic" and not x.holds for x in exc.value.findings)


def test_blowup_of_cp2():
    # CP^2 # -CP^2 in basis (H, E): K = -3H + E
    S = SurfaceData(gram=((1, 0), (0, -1)), K=(-3, 1))
    assert all(findings(S).values())


def test_almost_complex_kind_requires_b2plus_one():
    S = SurfaceData(gram=((1, 0), (0, 1)), K=(1, 1), kind=ALMOST_COMPLEX)
    f = findings(S)
    assert f["b2plus"] is False


def test_asymmetric_and_misshapen():
    assert findings(SurfaceData(gram=((1, 2), (0, 1)), K=(1, 1)))["gram-symmetric"] is False
    assert findings(SurfaceData(gram=((1, 0),), K=(1,)))["dimensions"] is False


def test_from_preset():
    assert from_preset("cp2") == CP2
    assert from_preset("hirzebruch:3") == hirzebruch(3)
    for bad in ("p2", "hirzebruch:x", "hirzebruch:-1"):
        with pytest.raises(InputError):
            from_preset(bad)


@given(st.integers(0, 5), st.integers(-6, 6), st.integers(-6, 6))
def test_serre_symmetry_of_chi(e, b, a):
    S = hirzebruch(e)
    D = (b, a)
    assert chi_divisor(S, D) == chi_divisor(S, sub(S.K, D))


def test_comparison_lemma_scan():
    # chi(D) <= h0(D) when C.K < 0, C^2 > 0, C.D >= 0 and D - C is not effective
    cases = [(CP2, (d,)) for d in range(1, 7)]
    cases += [(hirzebruch(e), C) for e in range(3) for C in [(e + 1, 1), (e + 2, 2), (2 * e + 3, 2)]]
    for S, C in cases:
        assert pair(S, C, C) > 0 and pair(S, C, S.K) < 0
        rng = range(-3, 8)
        for D in itertools.product(rng, repeat=S.rank):
            if pair(S, C, D) >= 0 and h0(S, sub(D, C)) == 0:
                assert chi_divisor(S, D) <= h0(S, D), (S.label, C, D)
