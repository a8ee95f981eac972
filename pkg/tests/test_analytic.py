import math

import pytest
from hypothesis import given, settings, strategies as st

from deltabound.analytic import (even_residual, odd_residual, odd_state_exists,
                                 single_bound_state, solve_double)
from deltabound.model import Parity, PhysicalSpec, ValidationError, energy_physical, to_natural

from conftest import B_EVEN_A1_L1, B_EVEN_A2_L1, B_ODD_A2_L1


def test_single_well():
    st_ = single_bound_state(2.0)
    assert st_.b == 1.0 and st_.energy == -0.5 and st_.parity is Parity.EVEN
    assert single_bound_state(-1.0) is None
    assert single_bound_state(0.0) is None


def test_single_well_physical_energy():
    spec = PhysicalSpec(1.0, 1.0, [(1.0, 0.0)])
    st_ = single_bound_state(to_natural(spec).strengths[0])
    assert energy_physical(st_, spec) == -0.5


def test_even_residual_values():
    assert even_residual(1e-14, 1.0, 1.0) == pytest.approx(2.0)
    assert abs(even_residual(B_EVEN_A1_L1, 1.0, 1.0)) < 1e-15
    assert abs(even_residual(1.0, 2.0, 400.0)) < 1e-15


def test_odd_residual_values():
    assert odd_residual(0.0, 3.0, 1.0) == 0.0
    assert abs(odd_residual(B_ODD_A2_L1, 2.0, 1.0)) < 1e-15


@pytest.mark.parametrize("f", [even_residual, odd_residual])
def test_residual_rejects_zero_strength(f):
    with pytest.raises(ValidationError):
        f(1.0, 0.0, 1.0)


def test_solve_double_cases():
    (even,) = solve_double(1.0, 1.0)
    assert even.b == pytest.approx(B_EVEN_A1_L1, abs=1e-12)

    states = solve_double(2.0, 1.0)
    assert [s.parity for s in states] == [Parity.EVEN, Parity.ODD]
    assert states[0].b == pytest.approx(B_EVEN_A2_L1, abs=1e-12)
    assert states[1].b == pytest.approx(B_ODD_A2_L1, abs=1e-12)
    assert states[0].coeffs == (1.0, 1.0) and states[1].coeffs == (-1.0, 1.0)
    assert states[0].energy < states[1].energy

    assert solve_double(-1.0, 1.0) == []


def test_solve_double_rejects_bad_tol():
    with pytest.raises(ValidationError):
        solve_double(1.0, 1.0, tol=0.0)


@pytest.mark.parametrize("a, L, expected", [(2, 1, True), (1, 1, False), (-3, 10, False)])
def test_odd_state_exists(a, L, expected):
    assert odd_state_exists(a, L) is expected
    assert (len(solve_double(a, L)) == 2) is expected


@settings(max_examples=200)
@given(a=st.floats(0.01, 20), L=st.floats(0.01, 20))
def test_even_root_bounds_and_ordering(a, L):
    states = solve_double(a, L)
    even = next(s for s in states if s.parity is Parity.EVEN)
    assert a / 2 < even.b < a
    assert even.energy < -a * a / 8
    assert abs(even_residual(even.b, a, L)) < 1e-10
    for s in states:
        if s.parity is Parity.ODD:
            assert s.b < even.b
            assert abs(odd_residual(s.b, a, L)) < 1e-10


@pytest.mark.parametrize("a", [0.3, 1.0, 2.0, 7.5])
def test_limits(a):
    far = solve_double(a, 20.0 / a)
    assert len(far) == 2
    for s in far:
        assert s.b == pytest.approx(a / 2, rel=1e-6)
    (near,) = solve_double(a, 1e-6)
    assert near.b == pytest.approx(a, rel=1e-4)
    assert math.isclose(near.b, a, rel_tol=1e-4)
