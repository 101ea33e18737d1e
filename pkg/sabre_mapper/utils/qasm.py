"""
OpenQASM 2.0 subset reader and writer.

Accepted: `OPENQASM 2.0;`, `include "...";`, one `qreg`, any number of
`creg`, `cx`, `swap`, the single-qubit gates of SINGLE_QUBIT_GATES,
`measure a -> c;` and `barrier` (dropped). Single-qubit gates and measure
broadcast over whole registers. `//` starts a comment.

Routed files mark each decomposed routing SWAP with `// @swap q[a],q[b]`
followed by its three `cx` lines; `parse_qasm(..., routed=True)` folds
them back into SWAP gates.
"""
import logging
import re
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from lark import Lark, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedInput, UnexpectedToken

from sabre_mapper.constants import EmitForm, GateKind, SINGLE_QUBIT_GATES
from sabre_mapper.models.circuit import Circuit
from sabre_mapper.models.gate import Gate, cnot, measure, single, swap
from sabre_mapper.validate.exceptions import CircuitError, QasmParseError

logger = logging.getLogger(__name__)

_GRAMMAR = r"""
start: header _statement*

header: "OPENQASM" NUMBER ";"

_statement: include
          | qreg
          | creg
          | barrier
          | measure
          | gate_call
          | swap_mark

include: "include" STRING ";"
qreg: "qreg" CNAME "[" INT "]" ";"
creg: "creg" CNAME "[" INT "]" ";"
barrier: "barrier" arguments ";"
measure: "measure" argument "->" argument ";"
gate_call: CNAME params? arguments ";"
swap_mark: SWAP_MARK argument "," argument

params: "(" [param ("," param)*] ")"
param: expr
arguments: argument ("," argument)*
argument: CNAME ["[" INT "]"]

?expr: expr ("+" | "-") term
     | term
?term: term ("*" | "/") factor
     | factor
?factor: ("+" | "-") factor
       | power
?power: atom "^" factor
      | atom
?atom: NUMBER
     | CNAME
     | CNAME "(" expr ")"
     | "(" expr ")"

STRING: /"[^"\n]*"/
SWAP_MARK.2: /\/\/[ \t]*@swap\b/
COMMENT: /\/\/[^\n]*/

%import common.CNAME
%import common.INT
%import common.NUMBER
%import common.WS
%ignore WS
%ignore COMMENT
"""

_UNSUPPORTED = ("gate", "opaque", "if", "reset", "U")

Argument = Tuple[str, Optional[int]]


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(_GRAMMAR, parser="lalr", propagate_positions=True, maybe_placeholders=True)


def _syntax_error(error: UnexpectedInput) -> QasmParseError:
    if isinstance(error, UnexpectedToken):
        if error.token.type == "$END":
            message = "unexpected end of input; missing ';'?"
        else:
            message = f"unexpected '{error.token}'"
    elif isinstance(error, UnexpectedCharacters):
        message = f"unexpected character '{error.char}'"
    else:
        message = "syntax error"
    line = error.line if isinstance(error.line, int) and error.line > 0 else 1
    column = error.column if isinstance(error.column, int) and error.column > 0 else 1
    return QasmParseError(message, line, column)


class _QasmBuilder:
    """Walks the parse tree, accumulating gates while checking registers and indices."""

    def __init__(self, text: str, routed: bool):
        self.text = text
        self.routed = routed
        self.qreg: Optional[Tuple[str, int]] = None
        self.cregs: Dict[str, int] = {}
        self.gates: List[Gate] = []
        # (a, b, expected cx operand pairs still to see, line of the annotation)
        self.pending_swap: Optional[Tuple[int, int, List[Tuple[int, int]], int]] = None

    # --- Arguments ---
    @staticmethod
    def _argument(node: Tree) -> Argument:
        name, index = node.children
        return str(name), (int(index) if index is not None else None)

    def _qubits(self, node: Tree, line: int, column: int) -> List[int]:
        if self.qreg is None:
            raise QasmParseError("gate used before any qreg declaration", line, column)
        name, index = self._argument(node)
        qname, size = self.qreg
        if name != qname:
            raise QasmParseError(f"unknown quantum register '{name}'", line, column)
        if index is None:
            return list(range(size))
        if index >= size:
            raise QasmParseError(f"index {index} out of range for {qname}[{size}]", line, column)
        return [index]

    def _clbits(self, node: Tree, line: int, column: int) -> List[Tuple[str, int]]:
        name, index = self._argument(node)
        if name not in self.cregs:
            raise QasmParseError(f"unknown classical register '{name}'", line, column)
        size = self.cregs[name]
        if index is None:
            return [(name, i) for i in range(size)]
        if index >= size:
            raise QasmParseError(f"index {index} out of range for {name}[{size}]", line, column)
        return [(name, index)]

    # --- Gates ---
    def _add(self, gate: Gate, line: int, column: int) -> None:
        if self.pending_swap is not None:
            a, b, expected, _ = self.pending_swap
            if gate.kind is not GateKind.CNOT or gate.qubits != expected[0]:
                raise QasmParseError(f"annotated swap q[{a}],q[{b}] is not followed by its three cx", line, column)
            expected.pop(0)
            if not expected:
                self.gates.append(swap(len(self.gates), a, b))
                self.pending_swap = None
            return
        self.gates.append(gate.renumbered(len(self.gates)))

    # --- Statements ---
    def statement(self, node: Tree) -> None:
        handler = getattr(self, f"_{node.data}")
        handler(node, node.meta.line, node.meta.column)

    def _header(self, node: Tree, line: int, column: int) -> None:
        version = str(node.children[0])
        if version != "2.0":
            raise QasmParseError(f"unsupported OPENQASM version {version}", line, column)

    def _include(self, node: Tree, line: int, column: int) -> None:
        pass

    def _barrier(self, node: Tree, line: int, column: int) -> None:
        for argument in node.children[0].children:
            self._qubits(argument, line, column)

    def _qreg(self, node: Tree, line: int, column: int) -> None:
        name, size = str(node.children[0]), int(node.children[1])
        if size < 1:
            raise QasmParseError(f"register {name} must have positive size", line, column)
        if self.qreg is not None:
            raise QasmParseError("multiple quantum registers are not supported", line, column)
        self.qreg = (name, size)

    def _creg(self, node: Tree, line: int, column: int) -> None:
        name, size = str(node.children[0]), int(node.children[1])
        if size < 1:
            raise QasmParseError(f"register {name} must have positive size", line, column)
        if name in self.cregs:
            raise QasmParseError(f"classical register '{name}' declared twice", line, column)
        self.cregs[name] = size

    def _swap_mark(self, node: Tree, line: int, column: int) -> None:
        if not self.routed:
            return
        if self.pending_swap is not None:
            raise QasmParseError("nested swap annotation", line, column)
        a = self._qubits(node.children[1], line, column)
        b = self._qubits(node.children[2], line, column)
        if len(a) != 1 or len(b) != 1:
            raise QasmParseError("swap annotation needs indexed qubits", line, column)
        if a[0] == b[0]:
            raise QasmParseError("swap annotation names one qubit twice", line, column)
        self.pending_swap = (a[0], b[0], [(a[0], b[0]), (b[0], a[0]), (a[0], b[0])], line)

    def _measure(self, node: Tree, line: int, column: int) -> None:
        qubits = self._qubits(node.children[0], line, column)
        clbits = self._clbits(node.children[1], line, column)
        if len(qubits) != len(clbits):
            raise QasmParseError("measure register sizes differ", line, column)
        for q, (creg, index) in zip(qubits, clbits):
            self._add(measure(0, q, creg, index), line, column)

    def _param_text(self, node: Tree) -> str:
        return re.sub(r"\s+", "", self.text[node.meta.start_pos:node.meta.end_pos])

    def _gate_call(self, node: Tree, line: int, column: int) -> None:
        name = "cx" if node.children[0] == "CX" else str(node.children[0])
        if name in _UNSUPPORTED:
            raise QasmParseError(f"'{name}' statements are not supported", line, column)
        params: Tuple[str, ...] = ()
        arguments = node.children[-1].children
        if len(node.children) == 3:
            params = tuple(self._param_text(p) for p in node.children[1].children if p is not None)

        if name in ("cx", "swap"):
            if params or len(arguments) != 2:
                raise QasmParseError(f"'{name}' takes two qubit arguments", line, column)
            a = self._qubits(arguments[0], line, column)
            b = self._qubits(arguments[1], line, column)
            if len(a) != 1 or len(b) != 1:
                raise QasmParseError(f"'{name}' needs indexed qubits", line, column)
            if a[0] == b[0]:
                raise QasmParseError(f"'{name}' uses q[{a[0]}] twice", line, column)
            if name == "cx":
                self._add(cnot(0, a[0], b[0]), line, column)
            elif self.routed:
                self._add(swap(0, a[0], b[0]), line, column)
            else:
                for c, t in ((a[0], b[0]), (b[0], a[0]), (a[0], b[0])):
                    self._add(cnot(0, c, t), line, column)
            return

        if name not in SINGLE_QUBIT_GATES:
            raise QasmParseError(f"unknown gate '{name}'", line, column)
        if len(arguments) != 1:
            raise QasmParseError(f"'{name}' takes one qubit argument", line, column)
        for q in self._qubits(arguments[0], line, column):
            try:
                gate = single(0, name, q, params)
            except CircuitError as e:
                raise QasmParseError(str(e), line, column) from e
            self._add(gate, line, column)

    def build(self, last_line: int) -> Circuit:
        if self.pending_swap is not None:
            a, b, _, at = self.pending_swap
            raise QasmParseError(f"annotated swap q[{a}],q[{b}] is incomplete", at, 1)
        if self.qreg is None:
            raise QasmParseError("no qreg declared", last_line, 1)
        qname, size = self.qreg
        return Circuit(size, tuple(self.gates), qname, tuple(self.cregs.items()))


def parse_qasm(text: str, routed: bool = False) -> Circuit:
    """
    Parses the QASM subset into a Circuit with logical indices in register order.

    Args:
        text: Program text.
        routed: Keep `swap` statements as SWAP gates and fold annotated
            cx triples back into SWAPs. When False, `swap` is a source gate
            and is decomposed into three `cx`.

    Raises:
        QasmParseError: with the line and column of the offending statement.
    """
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as e:
        raise _syntax_error(e) from e
    builder = _QasmBuilder(text, routed)
    for node in tree.children:
        builder.statement(node)
    return builder.build(tree.children[-1].meta.end_line)


def load_qasm(path: Union[str, Path], routed: bool = False) -> Circuit:
    path = Path(path)
    circuit = parse_qasm(path.read_text(), routed=routed)
    logger.info(f"📄 Loaded '{path.name}': {circuit.num_qubits} qubits, {len(circuit)} gates.")
    return circuit


def _format_gate(gate: Gate, qreg: str) -> str:
    operands = ",".join(f"{qreg}[{q}]" for q in gate.qubits)
    if gate.kind is GateKind.MEASURE:
        creg, index = gate.clbit
        return f"measure {operands} -> {creg}[{index}];"
    params = f"({','.join(gate.params)})" if gate.params else ""
    return f"{gate.name}{params} {operands};"


def write_qasm(circuit: Circuit, form: EmitForm = EmitForm.DECOMPOSED) -> str:
    """Renders `circuit`; in decomposed form every SWAP becomes an annotated cx triple."""
    qreg = circuit.qreg
    lines = ["OPENQASM 2.0;", 'include "qelib1.inc";', f"qreg {qreg}[{circuit.num_qubits}];"]
    lines.extend(f"creg {name}[{size}];" for name, size in circuit.cregs)
    for gate in circuit.gates:
        if gate.kind is GateKind.SWAP and form is EmitForm.DECOMPOSED:
            a, b = gate.qubits
            lines.append(f"// @swap {qreg}[{a}],{qreg}[{b}]")
            lines.extend(f"cx {qreg}[{c}],{qreg}[{t}];" for c, t in ((a, b), (b, a), (a, b)))
        else:
            lines.append(_format_gate(gate, qreg))
    return "\n".join(lines) + "\n"


def save_qasm(circuit: Circuit, path: Union[str, Path], form: EmitForm = EmitForm.DECOMPOSED) -> None:
    path = Path(path)
    path.write_text(write_qasm(circuit, form))
    logger.info(f"💾 Wrote routed circuit to '{path}'.")
