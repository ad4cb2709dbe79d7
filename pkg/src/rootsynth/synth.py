"""Generators for multi-control Peres and Toffoli circuits without ancilla lines.

All constructions share one scheme. A gate with n controls uses the
kappa-th root of NOT with kappa = 2^(n-1) as its elementary controlled
operation. Every nonzero coefficient vector alpha = (a1..an) names a driving
function a1*c1 xor ... xor an*cn; the circuit prepares each driving function
on a control line with Feynman gates and lets it condition one root (or
adjoint root) on the target line. Choosing the root direction per alpha
makes the net power of the root equal kappa exactly on one activation
vector, i.e. the target is negated only there.

The main generator orders the driving functions by the bit-reversal coding
of 1..2^n-1 (alpha_i = bit i-1 of k), which groups them into blocks sharing
a highest control line and leaves prefix parities c1 xor ... xor ci on the
control lines. The baseline generator orders them by a binary-reflected
Gray code, which restores the control lines instead. Converter circuits of
n-1 Feynman gates translate between the two output conventions.

Activation vectors: a circuit "fires on a" when its target flips exactly
for control input a. Direct synthesis requires a nonzero a; the all-zero
case is served by synth_zero_polarity, which forces every controlled gate
to the plain root so the target output becomes t xor OR(c1..cn), plus an
optional inverter to fire on the all-zero vector only.
"""
from __future__ import annotations

from dataclasses import replace
from typing import Iterable, Literal, Sequence

from .bits import Bits, as_bits, format_bits, trailing_zeros
from .circuit import Circuit, Gate, GateKind, controlled_root, feynman, not_gate

AlphaVector = Bits
ActivationVector = Bits
PolarityVector = Bits

ZeroPolarityMode = Literal["or-gate", "and-complemented"]


class ZeroActivationError(ValueError):
    """Raised when direct synthesis is asked to fire on the all-zero vector."""


def bit_reversal_alpha(k: int, n: int) -> AlphaVector:
    """Coefficient vector of the k-th driving function, LSB-first.

    alpha_i is bit i-1 of k, so k = 1, 2, 3 read as (1,0..), (0,1,0..),
    (1,1,0..): the natural numbers in bit-reversal order over n positions.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 1 <= k <= (1 << n) - 1:
        raise ValueError(f"k must be in 1..{(1 << n) - 1}, got {k}")
    return tuple((k >> i) & 1 for i in range(n))


def alpha_table(n: int) -> list[AlphaVector]:
    """All 2^n - 1 coefficient vectors in bit-reversal order.

    This is exactly the per-gate assignment of synth_peres: entry k-1 drives
    the k-th controlled gate. Row i is 0 on the first half and 1 on the
    second half of its block structure; in particular row n is 1 exactly for
    k >= 2^(n-1).
    """
    return [bit_reversal_alpha(k, n) for k in range(1, 1 << n)]


def gate_direction(alpha: Sequence[int], activation: Sequence[int]) -> int:
    """+1 (root) when the driving function is 1 on the activation vector, else -1.

    For the all-ones activation this is the parity rule: odd Hamming weight
    of alpha gives the root, even weight its adjoint.
    """
    a = as_bits(alpha)
    act = as_bits(activation, length=len(a))
    return 1 if sum(x * y for x, y in zip(a, act)) % 2 == 1 else -1


def all_ones(n: int) -> ActivationVector:
    return (1,) * n


def polarity_from_activation(activation: Iterable[int]) -> PolarityVector:
    """Bitwise complement: the gate fires where every control equals a_i = p_i xor 1."""
    return tuple(1 - b for b in as_bits(activation))


def activation_from_polarity(polarity: Iterable[int]) -> ActivationVector:
    return tuple(1 - b for b in as_bits(polarity))


def _resolve_activation(n: int, activation: Sequence[int] | None) -> ActivationVector:
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if activation is None:
        return all_ones(n)
    act = as_bits(activation, length=n)
    if not any(act):
        raise ZeroActivationError(
            "direct synthesis cannot fire on the all-zero vector; "
            "use synth_zero_polarity instead"
        )
    return act


def _target_gate(kappa: int, direction: int, control: int, target: int) -> Gate:
    # kappa = 1 only for n = 1, where the root of NOT is NOT itself.
    if kappa == 1:
        return feynman(control, target)
    return controlled_root(kappa, direction, control, target)


def synth_peres(n: int, activation: Sequence[int] | None = None) -> Circuit:
    """Peres circuit over n + 1 lines firing on `activation` (default all-ones).

    Control output i is the prefix parity c1 xor ... xor ci; the target
    output is t xor [c = activation]. The k-th controlled gate (k = 1..2^n-1)
    sits on control line b = highest set bit of k and is driven by the
    bit-reversal coefficients of k; within block b, one Feynman gate per step
    folds the prefix parity of a lower line into line b, stepping the driving
    function through the block in bit-reversal order. Quantum cost is
    2^(n+1) - n - 2: 2^n - 1 controlled gates, n of them driven directly,
    plus one Feynman gate for each of the other 2^n - 1 - n.
    """
    act = _resolve_activation(n, activation)
    kappa = 1 << (n - 1)
    gates: list[Gate] = []
    for k in range(1, 1 << n):
        b = k.bit_length()
        j = k - (1 << (b - 1))
        if j > 0:
            gates.append(feynman(trailing_zeros(j) + 1, b))
        direction = gate_direction(bit_reversal_alpha(k, n), act)
        gates.append(_target_gate(kappa, direction, b, n + 1))
    return Circuit(n, tuple(gates), label=f"peres n={n} a={format_bits(act)}")


def converter_toffoli_to_peres(n: int) -> Circuit:
    """Feynman ladder mapping raw controls (c1..cn) to prefix parities; cost n - 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    gates = tuple(feynman(i, i + 1) for i in range(1, n))
    return Circuit(n, gates, label=f"toffoli-to-peres n={n}")


def converter_peres_to_toffoli(n: int) -> Circuit:
    """The reversed ladder: prefix parities back to raw controls; cost n - 1."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    gates = tuple(feynman(i, i + 1) for i in range(n - 1, 0, -1))
    return Circuit(n, gates, label=f"peres-to-toffoli n={n}")


def synth_toffoli(n: int, activation: Sequence[int] | None = None) -> Circuit:
    """Toffoli circuit: synth_peres followed by the reversed converter.

    All control outputs equal the control inputs; the target output is
    t xor [c = activation]. Quantum cost (2^(n+1) - n - 2) + (n - 1)
    = 2^(n+1) - 3.
    """
    act = _resolve_activation(n, activation)
    c = synth_peres(n, act).compose(converter_peres_to_toffoli(n))
    return replace(c, label=f"toffoli n={n} a={format_bits(act)}")


def synth_barenco_toffoli(n: int, activation: Sequence[int] | None = None) -> Circuit:
    """Baseline Toffoli generator ordering the driving functions by Gray code.

    Nonempty control subsets are visited as g_k = k xor (k >> 1),
    k = 1..2^n-1, so consecutive driving functions differ in one variable
    (control 1 is the Gray LSB). The running subset parity is held on the
    line of the subset's largest element; each transition costs one Feynman
    gate, and each subset conditions one root gate on the target. The control
    lines end restored to c1..cn. Quantum cost 2^(n+1) - 3.
    """
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    act = _resolve_activation(n, activation)
    kappa = 1 << (n - 1)
    gates: list[Gate] = []
    prev = 0
    for k in range(1, 1 << n):
        g = k ^ (k >> 1)
        if k > 1:
            top, prev_top = g.bit_length(), prev.bit_length()
            if top > prev_top:
                gates.append(feynman(prev_top, top))
            else:
                gates.append(feynman((g ^ prev).bit_length(), top))
        direction = gate_direction(bit_reversal_alpha(g, n), act)
        gates.append(controlled_root(kappa, direction, g.bit_length(), n + 1))
        prev = g
    return Circuit(n, tuple(gates), label=f"barenco-toffoli n={n} a={format_bits(act)}")


def barenco_alpha_table(n: int) -> list[AlphaVector]:
    """Per-gate coefficient vectors of synth_barenco_toffoli, in circuit order."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return [bit_reversal_alpha(k ^ (k >> 1), n) for k in range(1, 1 << n)]


def synth_zero_polarity(n: int, mode: ZeroPolarityMode = "or-gate") -> Circuit:
    """Peres structure with every controlled gate forced to the plain root.

    mode "or-gate": the target output is t xor (c1 or ... or cn), i.e. the
    target flips on every nonzero control vector. mode "and-complemented"
    adds one inverter on the target line, so the circuit fires exactly on
    the all-zero control vector. Control outputs are prefix parities in
    both modes.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if mode not in ("or-gate", "and-complemented"):
        raise ValueError(f"unknown mode {mode!r}")
    kappa = 1 << (n - 1)
    gates: list[Gate] = []
    for k in range(1, 1 << n):
        b = k.bit_length()
        j = k - (1 << (b - 1))
        if j > 0:
            gates.append(feynman(trailing_zeros(j) + 1, b))
        gates.append(_target_gate(kappa, 1, b, n + 1))
    if mode == "and-complemented":
        gates.append(not_gate(n + 1))
    return Circuit(n, tuple(gates), label=f"{mode} n={n}")


def iterative_polarity_flip(circuit: Circuit, alphas: Sequence[AlphaVector], i: int) -> Circuit:
    """Complement control i of a synthesized circuit by swapping gate directions.

    `alphas` is the per-gate coefficient assignment of the generator that
    produced `circuit` (alpha_table for synth_peres and synth_zero_polarity,
    barenco_alpha_table for the baseline), aligned with the conditional
    target-line gates in circuit order. Every root whose coefficient vector
    has alpha_i = 1 is replaced by its adjoint and vice versa; the result
    equals synthesizing with bit i of the activation vector complemented.
    Flipping the same i twice restores the circuit.
    """
    n = circuit.n_controls
    if not 1 <= i <= n:
        raise ValueError(f"control index {i} out of range 1..{n}")
    slots = circuit.target_gates()
    if len(alphas) != len(slots):
        raise ValueError(
            f"alpha assignment has {len(alphas)} entries "
            f"for {len(slots)} conditional target gates"
        )
    table = [as_bits(a, length=n) for a in alphas]
    flipped = iter(
        g.adjoint() if a[i - 1] == 1 else g for g, a in zip(slots, table)
    )
    gates = tuple(
        next(flipped) if g.target == circuit.target_line and g.kind is not GateKind.NOT else g
        for g in circuit.gates
    )
    return replace(circuit, gates=gates)
