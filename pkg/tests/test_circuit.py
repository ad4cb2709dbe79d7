import dataclasses

import pytest

from rootsynth.circuit import (
    Circuit,
    GateCensus,
    GateKind,
    controlled_root,
    feynman,
    not_gate,
)
from rootsynth.synth import synth_barenco_toffoli, synth_peres, synth_toffoli


class TestConstruction:
    def test_empty_circuit(self):
        c = Circuit(2)
        assert c.width == 3
        assert c.n_controls == 2
        assert c.target_line == 3
        assert len(c) == 0
        assert c.quantum_cost == 0

    @pytest.mark.parametrize("n,width", [(1, 2), (2, 3), (4, 5)])
    def test_width(self, n, width):
        assert Circuit(n).width == width

    @pytest.mark.parametrize("n", [0, -1])
    def test_rejects_bad_control_count(self, n):
        with pytest.raises(ValueError):
            Circuit(n)

    def test_gates_normalized_to_tuple(self):
        c = Circuit(2, [feynman(1, 2)])
        assert isinstance(c.gates, tuple)
        assert c == Circuit(2, (feynman(1, 2),))


class TestGateValidation:
    def test_control_equals_target(self):
        with pytest.raises(ValueError):
            feynman(2, 2)

    @pytest.mark.parametrize("kappa", [0, 3, 6, -2])
    def test_root_kappa_power_of_two(self, kappa):
        with pytest.raises(ValueError):
            controlled_root(kappa, 1, 1, 2)

    @pytest.mark.parametrize("direction", [0, 2, -2])
    def test_root_direction(self, direction):
        with pytest.raises(ValueError):
            controlled_root(2, direction, 1, 2)

    def test_gates_are_frozen(self):
        g = feynman(1, 2)
        with pytest.raises(dataclasses.FrozenInstanceError):
            g.target = 3

    def test_not_gate_single_line(self):
        g = not_gate(3)
        assert g.lines == (3,)
        assert g.adjoint() == g


class TestAppend:
    def test_append_feynman(self):
        c = Circuit(2).append(feynman(1, 2))
        assert len(c) == 1

    def test_append_root(self):
        c = Circuit(2).append(controlled_root(2, 1, 2, 3))
        assert c.gates[0].kappa == 2

    def test_append_is_persistent(self):
        base = Circuit(2)
        base.append(feynman(1, 2))
        assert len(base) == 0

    def test_append_out_of_range(self):
        with pytest.raises(ValueError):
            Circuit(2).append(feynman(1, 4))

    def test_construct_out_of_range(self):
        with pytest.raises(ValueError):
            Circuit(2, (feynman(1, 4),))


class TestQuantumCost:
    def test_peres_two_controls_costs_four(self):
        assert synth_peres(2).quantum_cost == 4

    def test_empty_costs_zero(self):
        assert Circuit(3).quantum_cost == 0

    def test_barenco_three_controls_costs_thirteen(self):
        assert synth_barenco_toffoli(3).quantum_cost == 13

    def test_cost_counts_every_gate_once(self):
        c = Circuit(2, (feynman(1, 2), not_gate(3), controlled_root(2, -1, 1, 3)))
        assert c.quantum_cost == 3


class TestAdjoint:
    def test_single_root(self):
        c = Circuit(2, (controlled_root(2, 1, 1, 3),))
        assert c.adjoint().gates == (controlled_root(2, -1, 1, 3),)

    def test_reverses_order(self):
        c = Circuit(2, (feynman(1, 2), controlled_root(2, 1, 2, 3)))
        assert c.adjoint().gates == (controlled_root(2, -1, 2, 3), feynman(1, 2))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_involution(self, n):
        c = synth_peres(n)
        assert c.adjoint().adjoint() == c

    def test_cost_invariant(self):
        c = synth_toffoli(3)
        assert c.adjoint().quantum_cost == c.quantum_cost


class TestCompose:
    def test_empty_is_identity_element(self):
        c = synth_peres(2)
        assert c.compose(Circuit(2)) == c

    def test_cost_additive(self):
        c1, c2 = synth_peres(3), synth_peres(3, (1, 0, 1))
        assert c1.compose(c2).quantum_cost == c1.quantum_cost + c2.quantum_cost

    def test_width_mismatch(self):
        with pytest.raises(ValueError):
            synth_peres(2).compose(synth_peres(3))

    def test_toffoli_cost_via_composition(self):
        from rootsynth.synth import converter_peres_to_toffoli

        c = synth_peres(3).compose(converter_peres_to_toffoli(3))
        assert c.quantum_cost == 13


class TestCensus:
    def test_empty(self):
        assert Circuit(2).census() == GateCensus()

    def test_peres_two_controls(self):
        census = synth_peres(2).census()
        assert census.controlled_count == 3
        assert census.feynman_count == 1
        assert census.not_count == 0

    def test_peres_three_controls(self):
        census = synth_peres(3).census()
        assert census.root_count + census.adjoint_count == 7
        assert census.feynman_count == 4

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_counts_sum_to_cost(self, n):
        for c in (synth_peres(n), synth_toffoli(n), synth_barenco_toffoli(n)):
            assert c.census().total == c.quantum_cost

    def test_target_gates_are_the_controlled_slots(self):
        c = synth_peres(3)
        slots = c.target_gates()
        assert len(slots) == 7
        assert all(g.kind is GateKind.ROOT for g in slots)

    def test_target_gates_degenerate_single_control(self):
        # At n = 1 the kappa = 1 root is a plain Feynman but still one slot.
        slots = synth_peres(1).target_gates()
        assert len(slots) == 1
        assert slots[0].kind is GateKind.FEYNMAN


def test_circuits_are_frozen():
    c = synth_peres(2)
    with pytest.raises(dataclasses.FrozenInstanceError):
        c.n_controls = 3


def test_label_excluded_from_equality():
    a = Circuit(2, (feynman(1, 2),), label="x")
    b = Circuit(2, (feynman(1, 2),), label="y")
    assert a == b
