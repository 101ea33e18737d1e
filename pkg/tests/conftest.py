import pytest
from hypothesis import HealthCheck, settings

from sabre_mapper.models.circuit import Circuit
from sabre_mapper.models.devices import ibm_q20_tokyo, line, ring4
from sabre_mapper.models.gate import cnot
from sabre_mapper.models.mapping import Mapping
from sabre_mapper.validate.schemas import RouterParams

settings.register_profile(
    "default", settings(suppress_health_check=[HealthCheck.too_slow], max_examples=50, deadline=None)
)
settings.load_profile("default")


def build_cnots(num_qubits, pairs):
    return Circuit.from_gates(num_qubits, [cnot(0, a, b) for a, b in pairs])


@pytest.fixture
def ring():
    """4-qubit ring Q0-Q1-Q3-Q2-Q0."""
    return ring4()


@pytest.fixture
def line5():
    return line(5)


@pytest.fixture
def tokyo():
    return ibm_q20_tokyo()


@pytest.fixture
def worked_example():
    """
    Six CNOTs on four qubits. Under the identity mapping on the ring, the
    4th and 6th gates act on uncoupled pairs; the rest are executable.
    """
    return build_cnots(4, [(0, 1), (2, 3), (0, 2), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def identity4():
    return Mapping.identity(4, 4)


@pytest.fixture
def single_pass():
    """One forward traversal, one restart."""
    return RouterParams(restarts=1, traversals=1)
