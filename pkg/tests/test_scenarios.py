import math

import numpy as np
import pytest

from interfere.engine import quantum_probability
from interfere.exceptions import DomainError
from interfere.linalg import fourier_unitary
from interfere.model import Statistics, enumerate_occupations, occupation_label
from interfere.scenarios import (
    FOURIER_INPUT_MODES,
    TransitionCurve,
    bjork_predictability,
    bjork_projection,
    bjork_scan,
    boson_fourier_scan,
    double_slit,
    double_slit_scan,
    fermion_fourier_scan,
    hom_scan,
    nonmonotonic_events,
)

GRID = np.linspace(0.0, 5.0, 201)
SINGLE_OCCUPANCY = [occ for occ in enumerate_occupations(9, 3) if max(occ) == 1]


def test_double_slit_limits():
    assert np.isclose(double_slit(0.0, 1.0), 1.0, atol=1e-12)
    assert np.isclose(double_slit(math.pi, 1.0), 0.0, atol=1e-12)
    for phi in (0.0, 1.0, 2.5):
        assert np.isclose(double_slit(phi, 0.0), 0.5, atol=1e-12)
    with pytest.raises(DomainError):
        double_slit(0.0, 1.5)


def test_double_slit_scan_fringes():
    curve = double_slit_scan(np.linspace(0, 2 * math.pi, 21), 0.7)
    values = curve.values("detector")
    assert np.isclose(values.max(), 0.85, atol=1e-12)
    assert np.isclose(values.min(), 0.15, atol=1e-12)


def test_hom_scan_matches_closed_form():
    lc = 1.3
    curve = hom_scan(lc, GRID * lc)
    values = curve.values(occupation_label((1, 1)))
    expected = (1.0 - np.exp(-((GRID * lc) ** 2) / lc**2)) / 2.0
    assert np.abs(values - expected).max() <= 1e-9


def test_hom_scan_endpoints():
    curve = hom_scan(1.0, [0.0, 1.0, 10.0])
    values = curve.values("1.1")
    assert values[0] <= 1e-12
    assert np.isclose(values[1], (1 - math.exp(-1)) / 2, atol=1e-9)
    assert np.isclose(values[2], 0.5, atol=1e-9)


def test_fermion_scan_pauli_suppression_at_zero_delay():
    events = list(enumerate_occupations(9, 3))
    curve = fermion_fourier_scan([0.0, 1.0], events=events)
    at_zero = {label: None for label in curve.event_labels()}
    for value, label, p in curve.samples:
        if value == 0.0:
            at_zero[label] = p
    multi = [p for occ in events if max(occ) > 1 for p in [at_zero[occupation_label(occ)]]]
    assert max(multi) <= 1e-12
    allowed = [at_zero[occupation_label(occ)] for occ in events if max(occ) == 1]
    assert np.isclose(sum(allowed), 1.0, atol=1e-9)


def test_fourier_scans_reach_combinatoric_limit():
    x_far = [20.0]
    for scan in (fermion_fourier_scan, boson_fourier_scan):
        curve = scan(x_far, events=SINGLE_OCCUPANCY)
        for _, _, p in curve.samples:
            assert abs(p - 6 / 729) <= 1e-9
        bunched = [(0, 0, 0, 3, 0, 0, 0, 0, 0)]
        curve = scan(x_far, events=bunched)
        assert abs(curve.samples[0][2] - 1 / 729) <= 1e-9


def test_fermion_scan_has_nonmonotonic_events():
    curve = fermion_fourier_scan(GRID)
    flagged = nonmonotonic_events(curve)
    assert len(flagged) >= 1


def test_fermion_scan_plain_gaussian_is_monotone():
    # the cyclic input (2,5,8) makes every Pauli-allowed event monotone when
    # the pair coherence decays without oscillating; this is why the default
    # fermionic scan uses the oscillatory coherence
    curve = fermion_fourier_scan(GRID, oscillation=0.0)
    assert nonmonotonic_events(curve) == []


def test_boson_scan_nonmonotonic_under_plain_gaussian():
    curve = boson_fourier_scan(GRID)
    assert len(nonmonotonic_events(curve)) >= 1


def test_boson_scan_bunched_event_monotone_and_enhanced():
    bunched = (3, 0, 0, 0, 0, 0, 0, 0, 0)
    curve = boson_fourier_scan(GRID, events=[bunched])
    values = curve.values(occupation_label(bunched))
    # probability only grows as the delay shrinks
    assert np.all(np.diff(values) <= 1e-12)
    expected_quantum = quantum_probability(
        fourier_unitary(9), FOURIER_INPUT_MODES, bunched, Statistics.BOSON
    )
    assert np.isclose(values[0], expected_quantum, atol=1e-10)


def test_fourier_scan_limits_are_statistics_independent():
    events = SINGLE_OCCUPANCY[:5] + [(2, 1, 0, 0, 0, 0, 0, 0, 0), (0, 3, 0, 0, 0, 0, 0, 0, 0)]
    fermion = fermion_fourier_scan([25.0], events=events)
    boson = boson_fourier_scan([25.0], events=events)
    for (_, label_f, p_f), (_, label_b, p_b) in zip(fermion.samples, boson.samples):
        assert label_f == label_b
        assert abs(p_f - p_b) <= 1e-9


def test_fermion_scan_rejects_bad_events():
    with pytest.raises(DomainError):
        fermion_fourier_scan([1.0], events=[(1, 1, 0, 0, 0, 0, 0, 0, 0)])
    with pytest.raises(DomainError):
        fermion_fourier_scan([1.0], events=[(1, 1, 1)])


def test_projection_probability_curve():
    gammas = np.linspace(0.0, math.pi / 2, 101)
    for g in gammas:
        result = bjork_projection(g)
        assert abs(result.probability - math.cos(3 * math.pi / 8 + g / 2) ** 2) <= 1e-12
        assert result.purity == 1.0
    assert np.isclose(bjork_projection(0.0).probability, 0.1464466094, atol=1e-9)
    assert bjork_projection(math.pi / 4).probability <= 1e-12
    assert np.isclose(bjork_projection(math.pi / 2).probability, 0.1464466094, atol=1e-9)


def test_projection_purity_matches_numerical_trace():
    # the reported purity is the exact rank-one value; the numerically
    # evaluated trace of rho^2 agrees to floating precision
    for g in np.linspace(0.0, math.pi / 2, 25):
        state = np.array([math.cos(math.pi / 4 + g / 2), math.sin(math.pi / 4 + g / 2)])
        state = state / np.linalg.norm(state)
        rho = np.outer(state, state)
        assert abs(float(np.trace(rho @ rho)) - bjork_projection(g).purity) <= 1e-12


def test_projection_is_nonmonotonic_with_single_interior_zero():
    gammas = np.linspace(0.0, math.pi / 2, 101)
    curve = bjork_scan(gammas)
    assert "projection" in nonmonotonic_events(curve)
    values = curve.values("projection")
    zeros = np.flatnonzero(values <= 1e-12)
    assert len(zeros) == 1 and 0 < zeros[0] < len(values) - 1


def test_predictability_monotone_while_projection_is_not():
    gammas = np.linspace(0.0, math.pi / 2, 101)
    curve = bjork_scan(gammas)
    predictability = curve.values("predictability")
    assert np.all(np.diff(predictability) >= -1e-12)
    assert "predictability" not in nonmonotonic_events(curve)
    assert np.all(curve.values("purity") == 1.0)


def test_predictability_values():
    assert abs(bjork_predictability(0.0)) <= 1e-12
    assert np.isclose(bjork_predictability(math.pi / 6), 0.5, atol=1e-12)
    assert np.isclose(bjork_predictability(math.pi / 2), 1.0, atol=1e-12)
    with pytest.raises(DomainError):
        bjork_predictability(-0.1)
    with pytest.raises(DomainError):
        bjork_projection(2.0)


def test_transition_curve_validation():
    with pytest.raises(DomainError):
        TransitionCurve("x", [(1.0, "a", 0.5), (0.5, "a", 0.5)])
    with pytest.raises(DomainError):
        TransitionCurve("x", [(0.0, "a", 1.5)])
    curve = TransitionCurve("x", [(0.0, "a", 0.1), (0.0, "b", 0.2), (1.0, "a", 0.3)])
    assert curve.event_labels() == ["a", "b"]
    assert np.allclose(curve.parameter_values(), [0.0, 1.0])
    assert np.allclose(curve.values("a"), [0.1, 0.3])
