"""Gate-level intermediate representation, dense simulator and QASM export.

Conventions:
  * qubit 0 is the most significant bit of basis-state indices,
  * RZ(t) = diag(exp(-i t/2), exp(i t/2)), RY/RX analogous,
  * U1Q(a, b, c, phi) = exp(i phi) * RZ(a) RY(b) RZ(c),
  * ``Circuit.gates`` is in application (time) order; the circuit unitary is
    the reversed matrix product of its gates times exp(i global_phase).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SIMULATOR_MAX_QUBITS = 12

ONE_QUBIT_KINDS = ("RZ", "RY", "RX", "H", "U1Q")
TWO_QUBIT_KINDS = ("CNOT", "CZ", "SWAP")
GATE_KINDS = ONE_QUBIT_KINDS + TWO_QUBIT_KINDS

_PARAM_COUNT = {"RZ": 1, "RY": 1, "RX": 1, "H": 0, "U1Q": 4, "CNOT": 0, "CZ": 0, "SWAP": 0}


class ResourceError(RuntimeError):
    """A simulation register exceeds the supported size."""


@dataclass(frozen=True, slots=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]
    params: tuple[float, ...] = ()

    def __post_init__(self):
        if self.kind not in _PARAM_COUNT:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        want_q = 1 if self.kind in ONE_QUBIT_KINDS else 2
        if len(self.qubits) != want_q:
            raise ValueError(f"{self.kind} expects {want_q} qubit(s), got {self.qubits}")
        if want_q == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError(f"{self.kind} qubits must differ, got {self.qubits}")
        if len(self.params) != _PARAM_COUNT[self.kind]:
            raise ValueError(
                f"{self.kind} expects {_PARAM_COUNT[self.kind]} parameter(s), got {self.params}"
            )


@dataclass
class Circuit:
    num_qubits: int
    gates: list[Gate] = field(default_factory=list)
    global_phase: float = 0.0

    def append(self, gate: Gate) -> None:
        for q in gate.qubits:
            if not 0 <= q < self.num_qubits:
                raise ValueError(f"qubit {q} out of range for {self.num_qubits}-qubit circuit")
        self.gates.append(gate)

    # convenience constructors used heavily by the decomposer
    def rz(self, q, theta):
        self.append(Gate("RZ", (q,), (float(theta),)))

    def ry(self, q, theta):
        self.append(Gate("RY", (q,), (float(theta),)))

    def rx(self, q, theta):
        self.append(Gate("RX", (q,), (float(theta),)))

    def h(self, q):
        self.append(Gate("H", (q,)))

    def u1q(self, q, alpha, beta, gamma, phi=0.0):
        self.append(Gate("U1Q", (q,), (float(alpha), float(beta), float(gamma), float(phi))))

    def cnot(self, control, target):
        self.append(Gate("CNOT", (control, target)))

    def cz(self, a, b):
        self.append(Gate("CZ", (a, b)))

    def swap(self, a, b):
        self.append(Gate("SWAP", (a, b)))

    def depth(self) -> int:
        frontier = [0] * self.num_qubits
        for g in self.gates:
            level = 1 + max(frontier[q] for q in g.qubits)
            for q in g.qubits:
                frontier[q] = level
        return max(frontier, default=0)


def rz_matrix(theta: float) -> np.ndarray:
    return np.diag([np.exp(-0.5j * theta), np.exp(0.5j * theta)])


def ry_matrix(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


def rx_matrix(theta: float) -> np.ndarray:
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


H_MATRIX = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)


def u1q_matrix(alpha: float, beta: float, gamma: float, phi: float) -> np.ndarray:
    return np.exp(1j * phi) * (rz_matrix(alpha) @ ry_matrix(beta) @ rz_matrix(gamma))


def gate_1q_matrix(gate: Gate) -> np.ndarray:
    if gate.kind == "RZ":
        return rz_matrix(gate.params[0])
    if gate.kind == "RY":
        return ry_matrix(gate.params[0])
    if gate.kind == "RX":
        return rx_matrix(gate.params[0])
    if gate.kind == "H":
        return H_MATRIX
    if gate.kind == "U1Q":
        return u1q_matrix(*gate.params)
    raise ValueError(f"{gate.kind} is not a one-qubit gate")


def _apply_1q(acc: np.ndarray, mat: np.ndarray, axis: int) -> np.ndarray:
    moved = np.tensordot(mat, acc, axes=([1], [axis]))
    return np.moveaxis(moved, 0, axis)


def circuit_to_unitary(circuit: Circuit, restrict_to=None) -> np.ndarray:
    """Dense unitary of ``circuit``.

    ``restrict_to`` is an ordered list of qubit indices; the returned matrix
    is over that register (first listed qubit = most significant bit).  Every
    gate must act within the register.
    """
    if restrict_to is None:
        restrict_to = list(range(circuit.num_qubits))
    restrict_to = list(restrict_to)
    if len(set(restrict_to)) != len(restrict_to):
        raise ValueError("restrict_to contains duplicate qubits")
    k = len(restrict_to)
    if k > SIMULATOR_MAX_QUBITS:
        raise ResourceError(
            f"simulation register of {k} qubits exceeds the cap of {SIMULATOR_MAX_QUBITS}"
        )
    pos = {q: i for i, q in enumerate(restrict_to)}
    dim = 2**k
    acc = np.eye(dim, dtype=complex).reshape((2,) * k + (dim,))
    for g in circuit.gates:
        try:
            axes = tuple(pos[q] for q in g.qubits)
        except KeyError as exc:
            raise ValueError(f"gate {g} acts outside restrict_to register") from exc
        if g.kind in ONE_QUBIT_KINDS:
            acc = _apply_1q(acc, gate_1q_matrix(g), axes[0])
        elif g.kind == "CNOT":
            c, t = axes
            idx1 = [slice(None)] * (k + 1)
            idx1[c] = 1
            sub = acc[tuple(idx1)]
            acc[tuple(idx1)] = np.flip(sub, axis=t if t < c else t - 1)
        elif g.kind == "CZ":
            a, b = axes
            idx = [slice(None)] * (k + 1)
            idx[a] = 1
            idx[b] = 1
            acc[tuple(idx)] *= -1.0
        elif g.kind == "SWAP":
            a, b = axes
            acc = np.swapaxes(acc, a, b)
        else:  # pragma: no cover
            raise ValueError(f"unsupported gate kind {g.kind}")
    out = acc.reshape(dim, dim)
    if circuit.global_phase:
        out = np.exp(1j * circuit.global_phase) * out
    return out


@dataclass
class GateCounts:
    by_kind: dict
    cnot_total: int


def count_gates(circuit: Circuit, expand_swaps: bool = True) -> GateCounts:
    """Histogram of gate kinds plus the effective CNOT total.

    With ``expand_swaps`` each SWAP counts as 3 CNOTs (its standard lowering).
    """
    by_kind: dict[str, int] = {}
    for g in circuit.gates:
        by_kind[g.kind] = by_kind.get(g.kind, 0) + 1
    cnot_total = by_kind.get("CNOT", 0)
    if expand_swaps:
        cnot_total += 3 * by_kind.get("SWAP", 0)
    return GateCounts(by_kind=by_kind, cnot_total=cnot_total)


def validate_connectivity(circuit: Circuit, coupling_map) -> list:
    """Return [(gate_index, gate)] for two-qubit gates not on coupling edges."""
    bad = []
    for i, g in enumerate(circuit.gates):
        if g.kind in TWO_QUBIT_KINDS and not coupling_map.has_edge(*g.qubits):
            bad.append((i, g))
    return bad


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def export_qasm(circuit: Circuit, header_comments=()) -> str:
    """OpenQASM 2.0 text for ``circuit``.

    SWAP gates are lowered to 3 CNOTs.  U1Q becomes u3 with its phase factor
    dropped; all dropped phase (including the circuit global phase) is noted
    in a leading comment so the text stays exact up to that stated phase.
    """
    lines = []
    dropped = circuit.global_phase
    for g in circuit.gates:
        if g.kind == "U1Q":
            dropped += g.params[3]
    for comment in header_comments:
        lines.append(f"// {comment}")
    if abs(dropped) > 0:
        lines.append(f"// global phase: {_fmt(dropped)}")
    lines.append("OPENQASM 2.0;")
    lines.append('include "qelib1.inc";')
    lines.append(f"qreg q[{circuit.num_qubits}];")
    for g in circuit.gates:
        if g.kind in ("RZ", "RY", "RX"):
            lines.append(f"{g.kind.lower()}({_fmt(g.params[0])}) q[{g.qubits[0]}];")
        elif g.kind == "H":
            lines.append(f"h q[{g.qubits[0]}];")
        elif g.kind == "U1Q":
            a, b, c, _ = g.params
            lines.append(f"u3({_fmt(b)},{_fmt(a)},{_fmt(c)}) q[{g.qubits[0]}];")
        elif g.kind == "CNOT":
            lines.append(f"cx q[{g.qubits[0]}],q[{g.qubits[1]}];")
        elif g.kind == "CZ":
            lines.append(f"cz q[{g.qubits[0]}],q[{g.qubits[1]}];")
        elif g.kind == "SWAP":
            a, b = g.qubits
            lines.append(f"cx q[{a}],q[{b}];")
            lines.append(f"cx q[{b}],q[{a}];")
            lines.append(f"cx q[{a}],q[{b}];")
    return "\n".join(lines) + "\n"


def parse_qasm(text: str):
    """Minimal reader for QASM produced by :func:`export_qasm`.

    Returns ``(circuit, comments)``.  Only the gate subset this package emits
    is understood; u3 comes back as a U1Q with zero phase.
    """
    circuit = None
    comments = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("//"):
            comments.append(line[2:].strip())
            continue
        if line.startswith("OPENQASM") or line.startswith("include"):
            continue
        if line.startswith("qreg"):
            n = int(line[line.index("[") + 1 : line.index("]")])
            circuit = Circuit(num_qubits=n)
            continue
        if circuit is None:
            raise ValueError("gate statement before qreg declaration")
        if not line.endswith(";"):
            raise ValueError(f"unterminated statement: {line!r}")
        stmt = line[:-1]
        name, _, rest = stmt.partition(" ")
        params = ()
        if "(" in name:
            name, _, par = name.partition("(")
            params = tuple(float(x) for x in par.rstrip(")").split(","))
        qubits = tuple(
            int(tok[tok.index("[") + 1 : tok.index("]")]) for tok in rest.split(",")
        )
        if name in ("rz", "ry", "rx"):
            circuit.append(Gate(name.upper(), qubits, params))
        elif name == "h":
            circuit.append(Gate("H", qubits))
        elif name == "u3":
            b, a, c = params
            circuit.append(Gate("U1Q", qubits, (a, b, c, 0.0)))
        elif name == "cx":
            circuit.append(Gate("CNOT", qubits))
        elif name == "cz":
            circuit.append(Gate("CZ", qubits))
        else:
            raise ValueError(f"unsupported QASM statement: {line!r}")
    if circuit is None:
        raise ValueError("no qreg declaration found")
    return circuit, comments
