"""Reversible NOT/CNOT/Toffoli netlists with classical basis-state execution.

Every gate supported here flips a single target bit when all of its controls
match their polarity, so a netlist is a permutation of computational basis
states.  That is the only semantics this package needs: the image circuits
are basis permutations, and superposed inputs follow by linearity without
ever materialising amplitudes.

Cost accounting uses CNOT-equivalents: NOT and CNOT count 1, a Toffoli counts
6, and each control-on-0 polarity adds 2 (one basis flip before and one
after).  Gates may be tagged ``overhead`` at construction time; the audit
module reports core and overhead totals separately.
"""
from __future__ import annotations

import dataclasses
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Iterator

NOT = "NOT"
CNOT = "CNOT"
TOFFOLI = "TOFFOLI"

_ARITY = {NOT: 0, CNOT: 1, TOFFOLI: 2}
_BASE_COST = {NOT: 1, CNOT: 1, TOFFOLI: 6}
POLARITY_SURCHARGE = 2


class CircuitStructureError(ValueError):
    """A netlist, gate, or basis state is structurally malformed."""


@dataclass(frozen=True)
class Wire:
    """A single wire: an opaque index plus a human-readable label."""

    id: int
    label: str


@dataclass(frozen=True)
class Gate:
    """One reversible primitive.

    ``controls`` holds ``(wire_id, polarity)`` pairs; polarity 1 fires on
    \\|1>, polarity 0 on \\|0>.  ``overhead`` marks plumbing (dispatch
    controls, masking, uncomputation) excluded from core cost accounting.
    """

    kind: str
    target: int
    controls: tuple[tuple[int, int], ...] = ()
    overhead: bool = False

    def __post_init__(self) -> None:
        if self.kind not in _ARITY:
            raise CircuitStructureError(f"unknown gate kind {self.kind!r}")
        if len(self.controls) != _ARITY[self.kind]:
            raise CircuitStructureError(
                f"{self.kind} takes {_ARITY[self.kind]} controls, "
                f"got {len(self.controls)}"
            )
        for wire, polarity in self.controls:
            if polarity not in (0, 1):
                raise CircuitStructureError(f"bad control polarity {polarity!r}")
            if wire == self.target:
                raise CircuitStructureError(
                    f"wire {wire} is both control and target"
                )

    @property
    def base_cost(self) -> int:
        return _BASE_COST[self.kind]

    @property
    def cnot_equivalents(self) -> int:
        surcharge = sum(POLARITY_SURCHARGE for _, on in self.controls if on == 0)
        return self.base_cost + surcharge


@dataclass(frozen=True)
class GateCost:
    cnot_equivalents: int


@dataclass(frozen=True)
class BasisState:
    """A total bit assignment over a netlist's wires, packed into an int.

    Wire ``i`` holds bit ``(bits >> i) & 1``.
    """

    bits: int
    width: int

    def bit(self, wire: int) -> int:
        if not 0 <= wire < self.width:
            raise CircuitStructureError(f"wire {wire} outside state of width {self.width}")
        return (self.bits >> wire) & 1


class Netlist:
    """An ordered gate list over a wire table, with named registers.

    Immutable after construction.  Register wire lists are least significant
    bit first.  ``ancillas`` names registers that must enter and leave every
    execution at zero; builders uphold that contract and tests verify it.
    """

    def __init__(
        self,
        wires: tuple[Wire, ...],
        gates: tuple[Gate, ...],
        registers: dict[str, tuple[int, ...]],
        ancillas: frozenset[str] = frozenset(),
    ) -> None:
        self.wires = tuple(wires)
        self.gates = tuple(gates)
        self.registers = dict(registers)
        self.ancillas = frozenset(ancillas)
        self._compiled: list[tuple[int, int, int]] | None = None
        self._validate()

    def _validate(self) -> None:
        for i, wire in enumerate(self.wires):
            if wire.id != i:
                raise CircuitStructureError("wire ids must match table positions")
        n = len(self.wires)
        for gate in self.gates:
            if not 0 <= gate.target < n:
                raise CircuitStructureError(f"gate target {gate.target} outside wire table")
            for wire, _ in gate.controls:
                if not 0 <= wire < n:
                    raise CircuitStructureError(f"gate control {wire} outside wire table")
        for name, ids in self.registers.items():
            for wire in ids:
                if not 0 <= wire < n:
                    raise CircuitStructureError(f"register {name!r} references wire {wire}")
        for name in self.ancillas:
            if name not in self.registers:
                raise CircuitStructureError(f"ancilla register {name!r} not in table")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Netlist):
            return NotImplemented
        return (
            self.wires == other.wires
            and self.gates == other.gates
            and self.registers == other.registers
            and self.ancillas == other.ancillas
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f"Netlist({len(self.wires)} wires, {len(self.gates)} gates, "
            f"registers={list(self.registers)})"
        )

    @property
    def num_wires(self) -> int:
        return len(self.wires)

    @property
    def compiled(self) -> list[tuple[int, int, int]]:
        """Per gate: (mask of on-1 controls, mask of on-0 controls, target flip mask)."""
        if self._compiled is None:
            comp = []
            for gate in self.gates:
                m1 = m0 = 0
                for wire, on in gate.controls:
                    if on:
                        m1 |= 1 << wire
                    else:
                        m0 |= 1 << wire
                comp.append((m1, m0, 1 << gate.target))
            self._compiled = comp
        return self._compiled

    def state(self, **register_values: int) -> BasisState:
        """Build a basis state from register values; unnamed registers are zero."""
        bits = 0
        for name, value in register_values.items():
            ids = self.registers.get(name)
            if ids is None:
                raise CircuitStructureError(f"no register named {name!r}")
            if not 0 <= value < (1 << len(ids)):
                raise ValueError(
                    f"value {value} does not fit register {name!r} of width {len(ids)}"
                )
            for k, wire in enumerate(ids):
                bits |= ((value >> k) & 1) << wire
        return BasisState(bits, self.num_wires)

    def register_value(self, state: BasisState, name: str) -> int:
        ids = self.registers[name]
        value = 0
        for k, wire in enumerate(ids):
            value |= ((state.bits >> wire) & 1) << k
        return value

    def signed_register_value(self, state: BasisState, name: str) -> int:
        """Register value read as two's complement."""
        ids = self.registers[name]
        value = self.register_value(state, name)
        if value >= 1 << (len(ids) - 1):
            value -= 1 << len(ids)
        return value


def execute(netlist: Netlist, state: BasisState) -> BasisState:
    """Apply the gate sequence to a basis state and return the image state."""
    if state.width != netlist.num_wires:
        raise CircuitStructureError(
            f"state width {state.width} != netlist width {netlist.num_wires}"
        )
    bits = state.bits
    for m1, m0, flip in netlist.compiled:
        if bits & m1 == m1 and not bits & m0:
            bits ^= flip
    return BasisState(bits, state.width)


def invert(netlist: Netlist) -> Netlist:
    """Reverse the gate order.  Every primitive is self-inverse, so the
    result undoes the original: execute(invert(N), execute(N, s)) == s."""
    return Netlist(
        netlist.wires,
        tuple(reversed(netlist.gates)),
        netlist.registers,
        netlist.ancillas,
    )


def cost(netlist: Netlist) -> GateCost:
    """Total CNOT-equivalent count, polarity surcharges included."""
    return GateCost(sum(g.cnot_equivalents for g in netlist.gates))


def core_and_overhead_cost(netlist: Netlist) -> tuple[int, int]:
    """Split the total cost into (core, overhead).

    Core counts non-overhead gates at their base kind cost.  Overhead counts
    overhead-tagged gates plus every polarity surcharge, i.e. all the control
    and uncomputation plumbing the closed-form core counts exclude.
    """
    core = 0
    overhead = 0
    for gate in netlist.gates:
        if gate.overhead:
            overhead += gate.base_cost
        else:
            core += gate.base_cost
        overhead += sum(POLARITY_SURCHARGE for _, on in gate.controls if on == 0)
    return core, overhead


def concat(first: Netlist, second: Netlist) -> Netlist:
    """Concatenate two netlists over the same wire table."""
    if first.wires != second.wires or first.registers != second.registers:
        raise CircuitStructureError("can only concatenate netlists over the same wires")
    return Netlist(
        first.wires,
        first.gates + second.gates,
        first.registers,
        first.ancillas | second.ancillas,
    )


def dump_netlist(netlist: Netlist) -> str:
    """Textual dump, one gate per line: KIND target controls.

    Controls carry a ``!`` prefix when they fire on \\|0>.
    """
    labels = [w.label for w in netlist.wires]
    lines = []
    for gate in netlist.gates:
        parts = [gate.kind, labels[gate.target]]
        for wire, on in gate.controls:
            parts.append(("" if on else "!") + labels[wire])
        lines.append(" ".join(parts))
    return "\n".join(lines)


def run(netlist: Netlist, **inputs: int) -> dict[str, int]:
    """Execute on register-valued inputs and return all register values."""
    out = execute(netlist, netlist.state(**inputs))
    return {name: netlist.register_value(out, name) for name in netlist.registers}


class NetlistBuilder:
    """Incremental netlist construction with named, contiguous registers."""

    def __init__(self) -> None:
        self._wires: list[Wire] = []
        self._gates: list[Gate] = []
        self._registers: dict[str, tuple[int, ...]] = {}
        self._ancillas: set[str] = set()
        self._overhead_depth = 0

    def register(self, name: str, width: int, ancilla: bool = False) -> list[int]:
        if name in self._registers:
            raise CircuitStructureError(f"register {name!r} already declared")
        if width < 1:
            raise ValueError(f"register width must be positive, got {width}")
        start = len(self._wires)
        ids = list(range(start, start + width))
        for k, wire in enumerate(ids):
            self._wires.append(Wire(wire, f"{name}[{k}]"))
        self._registers[name] = tuple(ids)
        if ancilla:
            self._ancillas.add(name)
        return ids

    @contextmanager
    def overhead(self) -> Iterator[None]:
        """Emit gates tagged as overhead while the context is active."""
        self._overhead_depth += 1
        try:
            yield
        finally:
            self._overhead_depth -= 1

    def _emit(self, kind: str, target: int, controls: tuple[tuple[int, int], ...]) -> None:
        self._gates.append(
            Gate(kind, target, controls, overhead=self._overhead_depth > 0)
        )

    def x(self, target: int) -> None:
        self._emit(NOT, target, ())

    def cx(self, control: int, target: int, on: int = 1) -> None:
        self._emit(CNOT, target, ((control, on),))

    def ccx(self, c1: int, c2: int, target: int, on1: int = 1, on2: int = 1) -> None:
        self._emit(TOFFOLI, target, ((c1, on1), (c2, on2)))

    def mark(self) -> int:
        """Checkpoint into the gate list, for reverse_tail/append_inverse_of."""
        return len(self._gates)

    def reverse_tail(self, mark: int) -> None:
        """Reverse the gates emitted since ``mark`` in place.

        Reversing a freshly emitted block turns it into its inverse, which is
        how subtractors are derived from adders.
        """
        self._gates[mark:] = reversed(self._gates[mark:])

    def append_inverse_of(self, start: int, stop: int) -> None:
        """Append the inverse of gates[start:stop], tagged as overhead.

        Used for uncomputation passes: they restore working registers but are
        not part of any core gate count.
        """
        for gate in reversed(self._gates[start:stop]):
            self._gates.append(dataclasses.replace(gate, overhead=True))

    def build(self) -> Netlist:
        return Netlist(
            tuple(self._wires),
            tuple(self._gates),
            dict(self._registers),
            frozenset(self._ancillas),
        )
