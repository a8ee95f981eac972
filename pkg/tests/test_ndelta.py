import math
import warnings

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st
from scipy import integrate

from deltabound.analytic import solve_double
from deltabound.model import BoundState, DeltaPotential, Parity, ValidationError
from deltabound.ndelta import (DegenerateRootWarning, char_residual, char_system, norm_squared,
                               normalize, parity_classify, reconstruct, scan_bound_states)

from conftest import B_EVEN_A1_L1, B_EVEN_A2_L1, B_ODD_A2_L1


def quad_norm(state, pot):
    """Independent norm: adaptive quadrature of phi^2 split at the wells."""
    cuts = [-np.inf, *pot.positions, np.inf]
    return sum(integrate.quad(lambda x: reconstruct(state, pot, x) ** 2, lo, hi,
                              epsabs=1e-13, epsrel=1e-13, limit=200)[0]
               for lo, hi in zip(cuts[:-1], cuts[1:]))


@st.composite
def potentials(draw, max_wells=4, attractive=True):
    n = draw(st.integers(1, max_wells))
    lo = 0.2 if attractive else -3.0
    strengths = draw(st.lists(st.floats(lo, 5.0), min_size=n, max_size=n))
    xs = draw(st.lists(st.floats(-4, 4), min_size=n, max_size=n, unique=True))
    xs = sorted(xs)
    assume(all(q - p > 0.05 for p, q in zip(xs, xs[1:])))
    return DeltaPotential(tuple(zip(strengths, xs)))


def test_char_matrix_diagonal(double_a2):
    system = char_system(double_a2, 0.7)
    assert np.allclose(np.diag(system.matrix), 2.0 / 1.4)


@pytest.mark.parametrize("pot, b", [
    (DeltaPotential(((2.0, 0.0),)), 1.0),
    (DeltaPotential(((1.0, -1.0), (1.0, 1.0))), B_EVEN_A1_L1),
    (DeltaPotential(((2.0, -1.0), (2.0, 1.0))), B_ODD_A2_L1),
])
def test_char_residual_vanishes(pot, b):
    assert abs(char_residual(pot, b)) < 1e-14


def test_scan_cases(single, double_a2):
    (s,) = scan_bound_states(single)
    assert s.b == pytest.approx(1.0, abs=1e-12)
    states = scan_bound_states(double_a2)
    assert [s.parity for s in states] == [Parity.EVEN, Parity.ODD]
    assert states[0].b == pytest.approx(B_EVEN_A2_L1, abs=1e-12)
    assert states[1].b == pytest.approx(B_ODD_A2_L1, abs=1e-12)
    assert scan_bound_states(DeltaPotential(((-1.0, -1.0), (-1.0, 1.0)))) == []


def test_scan_validation(single):
    with pytest.raises(ValidationError):
        scan_bound_states(single, b_max=1.0, step=1.0)
    with pytest.raises(ValidationError):
        scan_bound_states(single, b_max=0.5, step=0.01)  # cannot reach b = 1


def test_zero_strength_well_gets_value():
    pot = DeltaPotential(((2.0, 0.0), (0.0, 3.0)))
    (s,) = scan_bound_states(pot)
    assert s.b == pytest.approx(1.0, abs=1e-12)
    assert s.coeffs[1] == pytest.approx(s.coeffs[0] * math.exp(-3.0), rel=1e-10)


def test_reconstruct_examples(single, double_a2):
    s = BoundState(1.0, (1.0,))
    assert reconstruct(s, single, 0.0) == 1.0
    for t in (0.3, 1.0, 4.0):
        assert reconstruct(s, single, t) == reconstruct(s, single, -t) == pytest.approx(math.exp(-t))
    odd = scan_bound_states(double_a2)[1]
    assert abs(reconstruct(odd, double_a2, 0.0)) < 1e-15


def test_normalize_examples(single, double_a1):
    n = normalize(BoundState(1.0, (3.0,)), single)
    assert n.coeffs == pytest.approx((1.0,), abs=1e-15)
    assert normalize(n, single) == n
    (even,) = solve_double(1.0, 1.0)
    ne = normalize(even, double_a1)
    assert quad_norm(ne, double_a1) == pytest.approx(1.0, abs=1e-10)
    flipped = normalize(BoundState(even.b, (-2.0, -2.0)), double_a1)
    assert flipped.coeffs[0] > 0


def test_overlap_formula_against_quadrature():
    pot = DeltaPotential(((1.3, -0.3), (0.4, 1.1), (2.0, 2.0)))
    s = BoundState(0.7, (0.2, -1.0, 0.5))
    assert norm_squared(s, pot) == pytest.approx(quad_norm(s, pot), rel=1e-11)


def test_parity_classify(double_a2):
    even, odd = scan_bound_states(double_a2)
    assert parity_classify(even, double_a2) is Parity.EVEN
    assert parity_classify(odd, double_a2) is Parity.ODD
    asym = DeltaPotential(((1.0, 0.0), (1.0, 1.0), (1.0, 5.0)))
    for s in scan_bound_states(asym):
        assert parity_classify(s, asym) is Parity.NONE


@settings(max_examples=60, deadline=None)
@given(pot=potentials(), t=st.floats(-5, 5))
def test_translation_invariance(pot, t):
    moved = pot.shifted(t)
    base, shifted = scan_bound_states(pot), scan_bound_states(moved)
    assert len(base) == len(shifted)
    # near-degenerate pairs have ill-conditioned individual wavefunctions
    bs = [s.b for s in base]
    assume(all(p - q > 1e-6 for p, q in zip(bs, bs[1:])))
    xs = np.linspace(min(pot.positions) - 3, max(pot.positions) + 3, 41)
    for s0, s1 in zip(base, shifted):
        assert s1.b == pytest.approx(s0.b, abs=2e-12)
        np.testing.assert_allclose(reconstruct(s1, moved, xs + t), reconstruct(s0, pot, xs),
                                   rtol=0, atol=1e-12 * max(1.0, 10 * s0.b))


@settings(max_examples=100, deadline=None)
@given(a=st.floats(0.05, 5.0), L=st.floats(0.05, 5.0))
def test_scan_matches_solve_double(a, L):
    tol = 1e-12
    pot = DeltaPotential(((a, -L), (a, L)))
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateRootWarning)
        scanned = scan_bound_states(pot, tol=tol)
    exact = solve_double(a, L, tol=tol)
    assert len(scanned) == len(exact)
    for s, e in zip(scanned, exact):
        assert abs(s.b - e.b) <= 2 * tol
        assert s.parity is e.parity


@settings(max_examples=60, deadline=None)
@given(pot=potentials(max_wells=5, attractive=False))
def test_state_properties(pot):
    states = scan_bound_states(pot)
    assert len(states) <= len(pot)
    span = max(abs(x) for x in pot.positions)
    for s in states:
        c = np.asarray(s.coeffs)
        m = char_system(pot, s.b).matrix
        assert np.linalg.norm((m - np.eye(len(c))) @ c) <= 1e-8 * np.linalg.norm(c)
        assert norm_squared(s, pot) == pytest.approx(1.0, abs=1e-12)
        far = span + 20.0 / s.b
        for x in (far, -far):
            assert abs(reconstruct(s, pot, x)) < 1e-6 * np.max(np.abs(c))


def test_near_degenerate_pair_resolved():
    pot = DeltaPotential(((2.0, -12.0), (2.0, 12.0)))
    even, odd = scan_bound_states(pot)
    assert 0 < even.b - odd.b < 1e-9
    assert even.parity is Parity.EVEN and odd.parity is Parity.ODD


def test_unresolvable_pair_warns():
    pot = DeltaPotential(((2.0, -20.0), (2.0, 20.0)))
    with pytest.warns(DegenerateRootWarning):
        states = scan_bound_states(pot)
    assert len(states) == 2
    assert all(s.b == pytest.approx(1.0, abs=1e-12) for s in states)
