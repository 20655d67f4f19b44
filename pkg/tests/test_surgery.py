from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cuspobs.catalog import cusp_catalog
from cuspobs.errors import InputError, LargenessError
from cuspobs.rfunction import Configuration
from cuspobs.semigroup import CuspDescriptor
from cuspobs.surgery import (SurgeryProblem, c1_squared, d_invariant, d_invariant_table,
                             os_bound, spinc_range)

from oracles import r_exhaustive

G = CuspDescriptor.generators
TREFOIL = Configuration.from_descriptors([G(2, 3)])
SMOOTH = Configuration.smooth()


@pytest.mark.parametrize("q, expected", [
    (1, [0]),
    (9, list(range(-4, 5))),
    (10, list(range(-5, 5))),
    (2, [-1, 0]),
])
def test_spinc_range(q, expected):
    assert spinc_range(q) == expected


@pytest.mark.parametrize("q", [0, -3])
def test_spinc_range_rejects_nonpositive(q):
    with pytest.raises(InputError):
        spinc_range(q)


def test_c1_squared():
    assert c1_squared(9, 0) == 9
    assert c1_squared(9, 4) == Fraction(1, 9)
    assert c1_squared(8, 4) == 0


def test_trefoil_d_invariants():
    prob = SurgeryProblem(TREFOIL, 9)
    assert d_invariant(prob, 0) == 0
    assert d_invariant(prob, 4) == Fraction(-2, 9)


def test_trefoil_full_table_against_oracle():
    prob = SurgeryProblem(TREFOIL, 9)
    for m, value in d_invariant_table(prob).items():
        R = r_exhaustive([[1]], m + 1)
        assert value == Fraction((9 - 2 * m) ** 2 - 9, 36) - 2 * (R - m)


@pytest.mark.parametrize("q", range(1, 26))
def test_smooth_lens_space_values(q):
    # nonnegative indices give the bare lens term; negative ones its conjugate
    prob = SurgeryProblem(SMOOTH, q)
    for m in spinc_range(q):
        lens = Fraction((q - 2 * abs(m)) ** 2 - q, 4 * q)
        assert d_invariant(prob, m) == lens
        if m >= 0:
            assert d_invariant(prob, m) == c1_squared(q, m) / 4 - Fraction(1, 4)


def test_largeness_enforced():
    with pytest.raises(LargenessError):
        SurgeryProblem(TREFOIL, 2)
    with pytest.raises(InputError):
        SurgeryProblem(SMOOTH, 0)


def test_out_of_range_index_is_an_error():
    prob = SurgeryProblem(TREFOIL, 9)
    with pytest.raises(InputError):
        d_invariant(prob, 5)
    with pytest.raises(InputError):
        d_invariant(prob, -5)


def test_os_bound():
    assert os_bound(0, 0, 0) == 0
    assert os_bound(9, -1, 1) == Fraction(10, 4)
    assert os_bound(Fraction(1, 9), 0, 2) == (Fraction(1, 9) - 4) / 4


CATALOG = cusp_catalog(10, 2)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.sampled_from(CATALOG), min_size=1, max_size=3), st.integers(0, 10))
def test_conjugation_symmetry_and_denominators(entries, r):
    cfg = Configuration.from_descriptors(e.descriptor for e in entries)
    q = 2 * cfg.g + 1 + r
    table = d_invariant_table(SurgeryProblem(cfg, q))
    for m, value in table.items():
        if -m in table:
            assert value == table[-m]
        assert (4 * q) % value.denominator == 0
