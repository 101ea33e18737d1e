import pytest
from hypothesis import given

from sabre_mapper.constants import EmitForm, GateKind
from sabre_mapper.models.circuit import Circuit, gate_count
from sabre_mapper.models.gate import cnot, swap
from sabre_mapper.utils.qasm import load_qasm, parse_qasm, save_qasm, write_qasm
from sabre_mapper.validate.exceptions import QasmParseError
from tests.strategies import mixed_circuits

HEADER = 'OPENQASM 2.0;\ninclude "qelib1.inc";\n'

TOFFOLI = HEADER + """
qreg q[3];
h q[2];
cx q[1],q[2];
tdg q[2];
cx q[0],q[2];
t q[2];
cx q[1],q[2];
tdg q[2];
cx q[0],q[2];
t q[1];
t q[2];
h q[2];
cx q[0],q[1];
t q[0];
tdg q[1];
cx q[0],q[1];
"""


def _names(circuit):
    return [g.name for g in circuit.gates]


# --- Reading ---

def test_toffoli_decomposition():
    """Three qubits, six CNOTs and the T/Tdg/H gates around them."""
    circuit = parse_qasm(TOFFOLI)
    assert circuit.num_qubits == 3
    counts = gate_count(circuit)
    assert counts.cnot == 6
    assert counts.single == 9
    assert _names(circuit).count("tdg") == 3
    assert _names(circuit).count("t") == 4
    assert circuit.gates[1].qubits == (1, 2)


def test_parameters_are_kept_as_text():
    circuit = parse_qasm(HEADER + "qreg q[1];\nrz( pi / 4 ) q[0];\nu3(0.1,pi,-pi/2) q[0];\n")
    assert circuit.gates[0].params == ("pi/4",)
    assert circuit.gates[1].params == ("0.1", "pi", "-pi/2")


def test_register_broadcast_and_measure():
    circuit = parse_qasm(HEADER + "qreg q[3];\ncreg c[3];\nh q;\nbarrier q;\nmeasure q -> c;\n")
    counts = gate_count(circuit)
    assert counts.single == 3
    assert counts.measure == 3
    assert circuit.gates[-1].clbit == ("c", 2)
    assert circuit.cregs == (("c", 3),)


def test_uppercase_cx_and_comments():
    circuit = parse_qasm(HEADER + "// a comment\nqreg q[2];\nCX q[0],q[1]; // trailing\n")
    assert [g.kind for g in circuit.gates] == [GateKind.CNOT]


def test_include_path_may_contain_slashes():
    circuit = parse_qasm('OPENQASM 2.0;\ninclude "lib//qelib1.inc";\nqreg q[2];\ncx q[0],q[1];\n')
    assert [g.kind for g in circuit.gates] == [GateKind.CNOT]


def test_comments_may_hold_statement_text():
    circuit = parse_qasm(HEADER + "qreg q[2]; // h q[0]; cx q[1],q[0];\nh q[1];\n")
    assert _names(circuit) == ["h"]


def test_several_statements_on_one_line():
    circuit = parse_qasm(HEADER + "qreg q[2]; h q[0]; cx q[0],q[1];\n")
    assert _names(circuit) == ["h", "cx"]


def test_source_swap_becomes_three_cnots():
    circuit = parse_qasm(HEADER + "qreg q[2];\nswap q[0],q[1];\n")
    assert [g.qubits for g in circuit.gates] == [(0, 1), (1, 0), (0, 1)]


def test_routed_swap_is_kept():
    circuit = parse_qasm(HEADER + "qreg q[2];\nswap q[0],q[1];\n", routed=True)
    assert [g.kind for g in circuit.gates] == [GateKind.SWAP]


def test_annotated_triple_folds_only_when_routed():
    text = HEADER + "qreg q[3];\n// @swap q[2],q[0]\ncx q[2],q[0];\ncx q[0],q[2];\ncx q[2],q[0];\n"
    assert gate_count(parse_qasm(text)).cnot == 3
    routed = parse_qasm(text, routed=True)
    assert [(g.kind, g.qubits) for g in routed.gates] == [(GateKind.SWAP, (2, 0))]


# --- Errors ---

def test_index_out_of_range_reports_position():
    with pytest.raises(QasmParseError) as excinfo:
        parse_qasm(HEADER + "qreg q[2];\ncx q[0],q[5];\n")
    assert excinfo.value.line == 4
    assert excinfo.value.column == 1


def test_column_skips_indentation():
    with pytest.raises(QasmParseError) as excinfo:
        parse_qasm(HEADER + "qreg q[2];\n  h q[7];\n")
    assert (excinfo.value.line, excinfo.value.column) == (4, 3)


@pytest.mark.parametrize(
    "body",
    [
        "qreg q[2];\nqreg r[2];\n",
        "qreg q[3];\nccx q[0],q[1],q[2];\n",
        "qreg q[2];\ngate foo a { x a; }\n",
        "qreg q[2];\nreset q[0];\n",
        "qreg q[2];\ncreg c[2];\nif(c==1) x q[0];\n",
        "qreg q[2];\nU(0,0,0) q[0];\n",
        "qreg q[2];\ncx q[0],q[0];\n",
        "qreg q[2];\nrz q[0];\n",
        "qreg q[2];\nh r[0];\n",
        "qreg q[2];\ncreg c[1];\nmeasure q -> c;\n",
        "qreg q[2];\nh q[0]\n",
        "h q[0];\n",
        "",
    ],
)
def test_rejected_programs(body):
    with pytest.raises(QasmParseError):
        parse_qasm(HEADER + body)


def test_syntax_error_reports_position():
    with pytest.raises(QasmParseError) as excinfo:
        parse_qasm(HEADER + "qreg q[2];\ncx q[0] q[1];\n")
    assert (excinfo.value.line, excinfo.value.column) == (4, 9)


def test_unsupported_version():
    with pytest.raises(QasmParseError):
        parse_qasm('OPENQASM 3.0;\nqreg q[1];\n')


def test_broken_annotation_is_rejected():
    text = HEADER + "qreg q[3];\n// @swap q[0],q[1]\ncx q[0],q[2];\n"
    with pytest.raises(QasmParseError):
        parse_qasm(text, routed=True)
    with pytest.raises(QasmParseError):
        parse_qasm(HEADER + "qreg q[2];\n// @swap q[0],q[1]\ncx q[0],q[1];\n", routed=True)


# --- Writing ---

def test_empty_circuit_writes_only_the_header():
    assert write_qasm(Circuit(3)) == HEADER + "qreg q[3];\n"


def test_decomposed_swaps_add_three_cx_lines_each():
    circuit = Circuit.from_gates(3, [cnot(0, 0, 1), swap(0, 1, 2), swap(0, 0, 1)])
    swap_text = write_qasm(circuit, EmitForm.SWAP)
    decomposed = write_qasm(circuit)
    assert swap_text.count("swap q[") == 2
    assert decomposed.count("// @swap") == 2
    assert decomposed.count("cx q[") == swap_text.count("cx q[") + 6


@given(mixed_circuits())
def test_written_circuits_read_back(circuit):
    assert parse_qasm(write_qasm(circuit)).structurally_equal(circuit)


def test_swaps_survive_both_forms():
    circuit = Circuit.from_gates(3, [cnot(0, 0, 1), swap(0, 2, 1), cnot(0, 0, 2)])
    for form in EmitForm:
        assert parse_qasm(write_qasm(circuit, form), routed=True).structurally_equal(circuit)


def test_save_and_load(tmp_path):
    path = tmp_path / "toffoli.qasm"
    path.write_text(TOFFOLI)
    circuit = load_qasm(path)
    out = tmp_path / "copy.qasm"
    save_qasm(circuit, out)
    assert load_qasm(out).structurally_equal(circuit)
