"""Architecture-aware exact unitary synthesis.

Decomposes arbitrary n-qubit unitaries into CNOT + single-qubit rotations
while respecting a hardware coupling map.
"""
from .linalg import haar_random_unitary, load_unitary, save_unitary
from .circuit import Circuit, Gate, circuit_to_unitary, count_gates, export_qasm
from .topology import CouplingMap
from .decompose import synthesize

__all__ = [
    "Circuit",
    "Gate",
    "CouplingMap",
    "circuit_to_unitary",
    "count_gates",
    "export_qasm",
    "haar_random_unitary",
    "load_unitary",
    "save_unitary",
    "synthesize",
]
