import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from switchcap.capacity import (
    CapacityReport,
    Family,
    Trajectory,
    binary_entropy,
    bottleneck,
    capacity_classical_trajectory,
    capacity_from_transition,
    capacity_pauli,
    capacity_quantum_trajectory,
    capacity_quantum_trajectory_mixture,
    depolarizing_reference_curves,
    family_capacity,
    family_channels,
    gain_and_violation,
    quantum_bounds_bitphase,
    xlog2x,
)
from switchcap.pauli import PauliChannel

from conftest import random_channel_pairs

H_0625 = 0.954434002924965
CEQ_DEPOLARIZING_075 = 0.20443400292496516


class TestScalarHelpers:
    @pytest.mark.parametrize("x,expected", [(0.0, 0.0), (1.0, 0.0), (0.5, -0.5), (2.0, 2.0)])
    def test_xlog2x(self, x, expected):
        assert xlog2x(x) == pytest.approx(expected, abs=1e-15)

    def test_xlog2x_rejects_negative(self):
        with pytest.raises(ValueError):
            xlog2x(-1e-3)

    @pytest.mark.parametrize("a,expected", [(0.5, 1.0), (0.0, 0.0), (1.0, 0.0), (0.625, H_0625)])
    def test_binary_entropy(self, a, expected):
        assert binary_entropy(a) == pytest.approx(expected, abs=1e-15)

    def test_binary_entropy_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            binary_entropy(1.5)
        with pytest.raises(ValueError):
            binary_entropy(-0.1)

    @given(st.floats(min_value=0.0, max_value=1.0))
    def test_binary_entropy_bounds_and_symmetry(self, a):
        h = binary_entropy(a)
        assert 0.0 <= h <= 1.0 + 1e-15
        assert h == pytest.approx(binary_entropy(1.0 - a), abs=1e-12)


class TestCapacityFromTransition:
    def test_noiseless(self):
        assert capacity_from_transition(4, np.array([1.0, 0, 0, 0])) == 2.0

    def test_uniform_has_no_capacity(self):
        assert capacity_from_transition(4, np.full(4, 0.25)) == pytest.approx(0.0, abs=1e-15)

    def test_depolarizing_row_matches_reference_curve(self):
        for p in np.linspace(0, 1, 21):
            row = np.array([1 - p, p / 3, p / 3, p / 3])
            c_symbol, _, _ = depolarizing_reference_curves(p)
            assert capacity_from_transition(4, row) == pytest.approx(c_symbol, abs=1e-13)

    def test_invalid_distribution_rejected(self):
        with pytest.raises(ValueError):
            capacity_from_transition(4, np.array([0.5, 0.2, 0.2, 0.2]))


class TestCapacityPauli:
    def test_identity(self):
        assert capacity_pauli(PauliChannel.identity()) == 2.0

    def test_fully_depolarizing_is_useless(self):
        assert capacity_pauli(PauliChannel.depolarizing(0.75)) == pytest.approx(0.0, abs=1e-15)

    def test_even_xy_mixture(self):
        assert capacity_pauli(PauliChannel.xy_mixture(0.5)) == pytest.approx(1.0, abs=1e-15)


class TestTrajectoryCapacities:
    def test_noiseless_pair(self):
        i = PauliChannel.identity()
        assert capacity_classical_trajectory(i, i) == 2.0
        assert capacity_quantum_trajectory(i, i) == 2.0

    def test_fully_depolarizing_pair_classical_is_dead(self):
        d = PauliChannel.depolarizing(0.75)
        assert capacity_classical_trajectory(d, d) == 0.0

    def test_fully_depolarizing_pair_switch_is_alive(self):
        d = PauliChannel.depolarizing(0.75)
        assert capacity_quantum_trajectory(d, d) == pytest.approx(
            CEQ_DEPOLARIZING_075, abs=1e-14
        )

    def test_even_xy_mixture_pair_classical(self):
        d = PauliChannel.xy_mixture(0.5)
        assert capacity_classical_trajectory(d, d) == pytest.approx(1.0, abs=1e-14)

    def test_xy_mixture_switch_is_always_perfect(self, rng):
        for _ in range(25):
            p, q = rng.random(), rng.random()
            d, e = PauliChannel.xy_mixture(p), PauliChannel.xy_mixture(q)
            assert capacity_quantum_trajectory(d, e) == pytest.approx(2.0, abs=1e-12)

    def test_bit_phase_certain_errors_with_switch(self):
        d, e = PauliChannel.bit_flip(0.5), PauliChannel.phase_flip(1.0)
        assert capacity_quantum_trajectory(d, e) == pytest.approx(2.0, abs=1e-12)

    def test_direct_and_mixture_routes_agree(self):
        for d, e in random_channel_pairs(seed=31, n=200):
            direct = capacity_quantum_trajectory(d, e)
            mixture = capacity_quantum_trajectory_mixture(d, e)
            assert abs(direct - mixture) < 1e-12


class TestBottleneck:
    def test_minimum_of_individuals(self):
        d, e = PauliChannel.bit_flip(0.5), PauliChannel.phase_flip(1.0)
        assert bottleneck(d, e) == pytest.approx(1.0, abs=1e-15)
        assert bottleneck(e, d) == pytest.approx(1.0, abs=1e-15)

    def test_identity_passes_through_other_capacity(self, rng):
        other = PauliChannel(rng.dirichlet(np.ones(4)))
        assert bottleneck(PauliChannel.identity(), other) == capacity_pauli(other)

    def test_fully_depolarizing_pair(self):
        d = PauliChannel.depolarizing(0.75)
        assert bottleneck(d, d) == pytest.approx(0.0, abs=1e-15)


class TestGainAndViolation:
    @pytest.mark.parametrize("p,q", [(0.5, 1.0), (1.0, 0.5), (2 / 3, 0.75), (0.625, 0.8)])
    def test_bit_phase_gain_is_one_when_pq_is_half(self, p, q):
        rep = gain_and_violation(PauliChannel.bit_flip(p), PauliChannel.phase_flip(q))
        assert rep.gain == pytest.approx(1.0, abs=1e-9)

    @pytest.mark.parametrize("p,q", [(0.5, 1.0), (1.0, 0.5)])
    def test_bit_phase_max_violation(self, p, q):
        rep = gain_and_violation(PauliChannel.bit_flip(p), PauliChannel.phase_flip(q))
        assert rep.violation == pytest.approx(1.0, abs=1e-9)

    def test_strongest_depolarizing_pair(self):
        d = PauliChannel.depolarizing(1.0)
        rep = gain_and_violation(d, d)
        assert rep.gain == pytest.approx(0.9182958340544896, abs=1e-13)
        assert rep.violation == pytest.approx(0.5283208335737188, abs=1e-13)

    def test_quantum_fields_are_exact_halves(self):
        for d, e in random_channel_pairs(seed=32, n=50):
            rep = gain_and_violation(d, e)
            assert rep.q_ec == rep.c_ec / 2.0
            assert rep.q_eq == rep.c_eq / 2.0
            assert rep.q_eb == rep.c_eb / 2.0
            rep.validate()

    def test_report_validation_catches_bad_values(self):
        with pytest.raises(ValueError):
            CapacityReport(c_ec=2.5, c_eq=2.0, c_eb=2.0, gain=0.0, violation=0.0).validate()
        with pytest.raises(ValueError):
            CapacityReport(c_ec=1.0, c_eq=1.0, c_eb=1.0, gain=-0.1, violation=0.0).validate()


class TestOrderingProperties:
    def test_switch_never_below_definite_order(self):
        for d, e in random_channel_pairs(seed=33, n=1000):
            assert capacity_quantum_trajectory(d, e) >= capacity_classical_trajectory(d, e) - 1e-12

    def test_definite_order_never_beats_bottleneck(self):
        for d, e in random_channel_pairs(seed=34, n=1000):
            assert capacity_classical_trajectory(d, e) <= bottleneck(d, e) + 1e-12

    def test_equality_when_minus_branch_is_empty(self, rng):
        for axis in (1, 2, 3):
            for _ in range(50):
                v, w = np.zeros(4), np.zeros(4)
                v[0], v[axis] = rng.random(), rng.random()
                w[0], w[axis] = rng.random(), rng.random()
                d = PauliChannel(v / v.sum())
                e = PauliChannel(w / w.sum())
                gap = capacity_quantum_trajectory(d, e) - capacity_classical_trajectory(d, e)
                assert abs(gap) < 1e-12

    @given(
        st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=4, max_size=4).filter(
            lambda raw: sum(raw) > 1e-6
        ),
        st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=4, max_size=4).filter(
            lambda raw: sum(raw) > 1e-6
        ),
    )
    def test_capacities_stay_in_range(self, raw_d, raw_e):
        d = PauliChannel(np.array(raw_d) / sum(raw_d))
        e = PauliChannel(np.array(raw_e) / sum(raw_e))
        c_ec = capacity_classical_trajectory(d, e)
        c_eq = capacity_quantum_trajectory(d, e)
        assert -1e-12 <= c_ec <= 2.0 + 1e-12
        assert -1e-12 <= c_eq <= 2.0 + 1e-12
        assert c_eq >= c_ec - 1e-12


class TestFamilies:
    def test_parse_aliases(self):
        assert Family.parse("bitphase") is Family.BIT_PHASE_FLIP
        assert Family.parse("entanglement-breaking") is Family.ENTANGLEMENT_BREAKING
        assert Family.parse("DEPOL") is Family.DEPOLARIZING
        with pytest.raises(ValueError):
            Family.parse("amplitude-damping")

    def test_out_of_range_parameters_rejected(self):
        with pytest.raises(ValueError):
            family_channels(Family.DEPOLARIZING, 1.2, 0.5)
        with pytest.raises(ValueError):
            family_capacity(Family.DEPOLARIZING, 0.5, -0.1, Trajectory.CLASSICAL)

    def test_bit_phase_quantum_adds_entropy_of_survival(self):
        p, q = 0.4, 0.7
        gap = family_capacity(Family.BIT_PHASE_FLIP, p, q, Trajectory.QUANTUM) - family_capacity(
            Family.BIT_PHASE_FLIP, p, q, Trajectory.CLASSICAL
        )
        assert gap == pytest.approx(binary_entropy(1 - p * q), abs=1e-13)

    def test_entanglement_breaking_quantum_is_always_two(self, rng):
        for _ in range(20):
            p, q = rng.random(), rng.random()
            assert family_capacity(Family.ENTANGLEMENT_BREAKING, p, q, Trajectory.QUANTUM) == 2.0

    def test_depolarizing_quantum_at_causal_activation_point(self):
        assert family_capacity(
            Family.DEPOLARIZING, 0.75, 0.75, Trajectory.QUANTUM
        ) == pytest.approx(CEQ_DEPOLARIZING_075, abs=1e-13)

    def test_closed_family_forms_match_general_route(self):
        grid = np.linspace(0.0, 1.0, 101)
        for family in Family:
            for p in grid:
                for q in grid:
                    d, e = family_channels(family, float(p), float(q))
                    assert (
                        abs(
                            family_capacity(family, float(p), float(q), Trajectory.CLASSICAL)
                            - capacity_classical_trajectory(d, e)
                        )
                        < 1e-12
                    )
                    assert (
                        abs(
                            family_capacity(family, float(p), float(q), Trajectory.QUANTUM)
                            - capacity_quantum_trajectory(d, e)
                        )
                        < 1e-12
                    )


class TestDepolarizingReferenceCurves:
    def test_noiseless_endpoint(self):
        assert depolarizing_reference_curves(0.0) == (2.0, 2.0, 1.0)

    def test_all_vanish_at_fully_depolarizing(self):
        c_symbol, c_bit, c_unassisted = depolarizing_reference_curves(0.75)
        assert abs(c_symbol) < 1e-12
        assert abs(c_bit) < 1e-12
        assert abs(c_unassisted) < 1e-12

    def test_unassisted_is_exactly_half_of_bit_based(self):
        for p in np.linspace(0, 1, 1001):
            _, c_bit, c_unassisted = depolarizing_reference_curves(float(p))
            assert c_unassisted == c_bit / 2.0

    def test_symbol_based_dominates_bit_based(self):
        for p in np.linspace(0, 1, 1001):
            c_symbol, c_bit, _ = depolarizing_reference_curves(float(p))
            assert c_symbol >= c_bit - 1e-12

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            depolarizing_reference_curves(1.01)


class TestQuantumBounds:
    @pytest.mark.parametrize("p", [0.0, 1.0])
    def test_clean_endpoints(self, p):
        q_lb, q_ub, q_eb, q_eq = quantum_bounds_bitphase(p)
        assert (q_lb, q_ub, q_eb, q_eq) == (1.0, 1.0, 1.0, 1.0)

    def test_even_flip_bottleneck(self):
        _, _, q_eb, _ = quantum_bounds_bitphase(0.5)
        assert q_eb == 0.5

    def test_rate_is_half_the_classical_family_form(self):
        for p in np.linspace(0, 1, 101):
            *_, q_eq = quantum_bounds_bitphase(float(p))
            c_eq = family_capacity(Family.BIT_PHASE_FLIP, float(p), float(p), Trajectory.QUANTUM)
            assert q_eq == c_eq / 2.0

    def test_sandwich_on_interior_grid(self):
        for p in np.linspace(0.0, 1.0, 1001)[1:-1]:
            q_lb, q_ub, _, q_eq = quantum_bounds_bitphase(float(p))
            assert q_lb <= q_eq + 1e-9
            assert q_eq <= q_ub + 1e-9

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError):
            quantum_bounds_bitphase(math.nextafter(1.0, 2.0))
