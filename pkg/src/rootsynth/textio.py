"""Line-oriented circuit files and ASCII rendering.

Text format, one directive or gate per line, `#` starts a comment:

    circuit v1
    width 3
    controls 2
    label peres n=2 a=11
    croot 2 +1 1 3
    cnot 1 2
    not 3

Gate lines are `cnot <control> <target>`, `croot <kappa> <+1|-1> <control>
<target>` and `not <line>`. A JSON mirror of the same schema is accepted on
input for files ending in .json.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Sequence

from .bits import format_bits
from .circuit import Circuit, Gate, GateKind, controlled_root, feynman, not_gate

FORMAT_HEADER = "circuit v1"


class ParseError(ValueError):
    """Malformed circuit document; carries the 1-based line number if known."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


def _gate_line(g: Gate) -> str:
    if g.kind is GateKind.FEYNMAN:
        return f"cnot {g.control} {g.target}"
    if g.kind is GateKind.ROOT:
        sign = "+1" if g.direction == 1 else "-1"
        return f"croot {g.kappa} {sign} {g.control} {g.target}"
    return f"not {g.target}"


def serialize(circuit: Circuit, alphas: Sequence[Sequence[int]] | None = None) -> str:
    """Render a circuit document; deterministic, ends with a newline.

    When `alphas` is given (the per-gate coefficient assignment, aligned with
    the conditional target-line gates) each such gate line gets an
    informational `# alpha <bits>` comment; comments are ignored on parse.
    """
    notes: dict[int, str] = {}
    if alphas is not None:
        if len(alphas) != len(circuit.target_gates()):
            raise ValueError(
                f"alpha assignment has {len(alphas)} entries "
                f"for {len(circuit.target_gates())} target gates"
            )
        slot = iter(alphas)
        for i, g in enumerate(circuit.gates):
            if g.target == circuit.target_line and g.kind is not GateKind.NOT:
                notes[i] = format_bits(next(slot))
    lines = [FORMAT_HEADER, f"width {circuit.width}", f"controls {circuit.n_controls}"]
    if circuit.label:
        lines.append(f"label {circuit.label}")
    for i, g in enumerate(circuit.gates):
        line = _gate_line(g)
        if i in notes:
            line += f"  # alpha {notes[i]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def _int_field(word: str, what: str, line_no: int) -> int:
    try:
        return int(word)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {word!r}", line_no) from None


def _parse_gate(fields: list[str], width: int, line_no: int) -> Gate:
    name = fields[0]
    try:
        if name == "cnot":
            if len(fields) != 3:
                raise ParseError("cnot takes <control> <target>", line_no)
            g = feynman(
                _int_field(fields[1], "control", line_no),
                _int_field(fields[2], "target", line_no),
            )
        elif name == "croot":
            if len(fields) != 5:
                raise ParseError("croot takes <kappa> <+1|-1> <control> <target>", line_no)
            if fields[2] not in ("+1", "-1", "1"):
                raise ParseError(f"direction must be +1 or -1, got {fields[2]!r}", line_no)
            g = controlled_root(
                _int_field(fields[1], "kappa", line_no),
                1 if fields[2] in ("+1", "1") else -1,
                _int_field(fields[3], "control", line_no),
                _int_field(fields[4], "target", line_no),
            )
        else:
            if len(fields) != 2:
                raise ParseError("not takes <line>", line_no)
            g = not_gate(_int_field(fields[1], "line", line_no))
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc), line_no) from None
    for line in g.lines:
        if not 1 <= line <= width:
            raise ParseError(f"line {line} out of range for width {width}", line_no)
    return g


def parse(text: str) -> Circuit:
    """Parse a text circuit document back into a Circuit."""
    width: int | None = None
    controls: int | None = None
    label = ""
    gates: list[Gate] = []
    saw_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("label "):
            if not saw_header:
                raise ParseError(f"expected {FORMAT_HEADER!r} before directives", line_no)
            label = stripped[len("label "):].strip()
            continue
        if "#" in stripped:
            stripped = stripped[: stripped.index("#")].strip()
        if not stripped:
            continue
        if not saw_header:
            if stripped != FORMAT_HEADER:
                raise ParseError(f"expected header {FORMAT_HEADER!r}, got {stripped!r}", line_no)
            saw_header = True
            continue
        fields = stripped.split()
        word = fields[0]
        if word in ("width", "controls"):
            if len(fields) != 2:
                raise ParseError(f"{word} takes one integer", line_no)
            value = _int_field(fields[1], word, line_no)
            if word == "width":
                if width is not None:
                    raise ParseError("duplicate width directive", line_no)
                width = value
            else:
                if controls is not None:
                    raise ParseError("duplicate controls directive", line_no)
                controls = value
        elif word in ("cnot", "croot", "not"):
            if width is None or controls is None:
                raise ParseError("gate line before width/controls directives", line_no)
            gates.append(_parse_gate(fields, width, line_no))
        else:
            raise ParseError(f"unknown directive {word!r}", line_no)
    if not saw_header:
        raise ParseError("empty document: missing header")
    if width is None:
        raise ParseError("missing width directive")
    if controls is None:
        raise ParseError("missing controls directive")
    if width != controls + 1:
        raise ParseError(f"width {width} does not match controls {controls} + 1")
    try:
        return Circuit(controls, tuple(gates), label=label)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def serialize_json(circuit: Circuit) -> str:
    """JSON mirror of the text schema."""
    gates: list[dict] = []
    for g in circuit.gates:
        if g.kind is GateKind.FEYNMAN:
            gates.append({"gate": "cnot", "control": g.control, "target": g.target})
        elif g.kind is GateKind.ROOT:
            gates.append(
                {
                    "gate": "croot",
                    "kappa": g.kappa,
                    "direction": g.direction,
                    "control": g.control,
                    "target": g.target,
                }
            )
        else:
            gates.append({"gate": "not", "line": g.target})
    doc = {
        "format": FORMAT_HEADER,
        "width": circuit.width,
        "controls": circuit.n_controls,
        "label": circuit.label,
        "gates": gates,
    }
    return json.dumps(doc, indent=2) + "\n"


def parse_json(text: str) -> Circuit:
    """Parse the JSON mirror format."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_HEADER:
        raise ParseError(f"expected a document with format {FORMAT_HEADER!r}")
    try:
        controls = int(doc["controls"])
        width = int(doc["width"])
    except (KeyError, TypeError, ValueError):
        raise ParseError("missing or malformed width/controls") from None
    if width != controls + 1:
        raise ParseError(f"width {width} does not match controls {controls} + 1")
    gates: list[Gate] = []
    try:
        for entry in doc.get("gates", []):
            name = entry.get("gate")
            if name == "cnot":
                gates.append(feynman(int(entry["control"]), int(entry["target"])))
            elif name == "croot":
                gates.append(
                    controlled_root(
                        int(entry["kappa"]),
                        int(entry["direction"]),
                        int(entry["control"]),
                        int(entry["target"]),
                    )
                )
            elif name == "not":
                gates.append(not_gate(int(entry["line"])))
            else:
                raise ParseError(f"unknown gate {name!r}")
    except (KeyError, TypeError, AttributeError):
        raise ParseError("malformed gate entry") from None
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(str(exc)) from None
    try:
        return Circuit(controls, tuple(gates), label=str(doc.get("label", "")))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def load_circuit(path: str | Path) -> Circuit:
    """Read a circuit file, dispatching on the .json extension."""
    p = Path(path)
    text = p.read_text()
    if p.suffix == ".json":
        return parse_json(text)
    return parse(text)


def render_ascii(circuit: Circuit) -> str:
    """Wire diagram, one row per line and one column per gate.

    Controls draw a dot, Feynman targets an xor circle, roots a [V<kappa>]
    box (dagger for the adjoint) and inverters an [X] box; wires crossed by
    a control span show a vertical bar.
    """
    if circuit.width > 26:
        raise ValueError(f"rendering supports at most 26 lines, got {circuit.width}")
    labels = [f"c{i}" for i in range(1, circuit.n_controls + 1)] + ["t"]
    pad = max(len(s) for s in labels)
    columns: list[dict[int, str]] = []
    for g in circuit.gates:
        col: dict[int, str] = {}
        if g.kind is GateKind.FEYNMAN:
            col[g.control] = "●"
            col[g.target] = "⊕"
        elif g.kind is GateKind.ROOT:
            col[g.control] = "●"
            col[g.target] = f"[V{g.kappa}]" if g.direction == 1 else f"[V{g.kappa}†]"
        else:
            col[g.target] = "[X]"
        lo, hi = min(g.lines), max(g.lines)
        for row in range(lo + 1, hi):
            col[row] = "│"
        columns.append(col)
    widths = [max(len(cell) for cell in col.values()) for col in columns]
    rows = []
    for row in range(1, circuit.width + 1):
        parts = [f"{labels[row - 1]:>{pad}} ─"]
        for col, cw in zip(columns, widths):
            cell = col.get(row, "")
            extra = cw - len(cell)
            parts.append("─" * (extra // 2) + cell + "─" * (extra - extra // 2) + "─")
        rows.append("".join(parts))
    return "\n".join(rows)
