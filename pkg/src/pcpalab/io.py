"""JSON machine files for PCPA, multi-head PDA and register-machine programs."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .mhpda import MhpdaSpec, MhTransition
from .pcpa import ComponentSpec, PcpaSpec, Transition
from .regmachine import Accept, DivMod, Mul, Read, Reject, RmProgram

Machine = Union[PcpaSpec, MhpdaSpec, RmProgram]

_MOVES = {"stay": 0, "advance": 1}


class MachineFileError(ValueError):
    pass


def pcpa_to_dict(spec: PcpaSpec) -> dict:
    return {
        "kind": "pcpa",
        "name": spec.name,
        "degree": spec.degree,
        "input_alphabet": sorted(spec.input_alphabet),
        "stack_alphabet": sorted(spec.stack_alphabet),
        "query_symbols": list(spec.query_symbols),
        "components": [
            {
                "states": sorted(c.states),
                "initial": c.initial,
                "bottom": c.bottom,
                "finals": sorted(c.finals),
                "transitions": [
                    {"from": t.source, "read": t.read, "top": t.top, "to": t.target, "push": list(t.push)}
                    for t in c.transitions
                ],
            }
            for c in spec.components
        ],
    }


def pcpa_from_dict(d: dict) -> PcpaSpec:
    comps = []
    for c in d["components"]:
        rows = tuple(
            Transition(t["from"], t.get("read"), t["top"], t["to"], tuple(t.get("push", ())))
            for t in c["transitions"]
        )
        comps.append(ComponentSpec(frozenset(c["states"]), rows, c["initial"], c["bottom"], frozenset(c["finals"])))
    if "degree" in d and d["degree"] != len(comps):
        raise MachineFileError(f"degree {d['degree']} does not match {len(comps)} components")
    return PcpaSpec(
        frozenset(d["input_alphabet"]),
        frozenset(d["stack_alphabet"]),
        tuple(comps),
        tuple(d["query_symbols"]),
        name=d.get("name", ""),
    )


def mhpda_to_dict(spec: MhpdaSpec) -> dict:
    return {
        "kind": "mhpda",
        "name": spec.name,
        "states": sorted(spec.states),
        "input_alphabet": sorted(spec.input_alphabet),
        "end_marker": spec.end_marker,
        "stack_alphabet": sorted(spec.stack_alphabet),
        "heads": spec.heads,
        "sensing": spec.sensing,
        "initial": spec.initial,
        "bottom": spec.bottom,
        "finals": sorted(spec.finals),
        "transitions": [
            {
                "from": t.source,
                "scanned": list(t.scanned),
                "guard": [{"heads": [i, j], "relation": rel} for i, j, rel in sorted(t.guard)],
                "top": t.top,
                "to": t.target,
                "moves": ["advance" if m else "stay" for m in t.moves],
                "push": list(t.push),
            }
            for t in spec.transitions
        ],
    }


def mhpda_from_dict(d: dict) -> MhpdaSpec:
    rows = []
    for t in d["transitions"]:
        try:
            moves = tuple(_MOVES[m] if isinstance(m, str) else int(m) for m in t["moves"])
        except KeyError as exc:
            raise MachineFileError(f"unknown head move {exc}") from None
        guard = frozenset((g["heads"][0], g["heads"][1], g["relation"]) for g in t.get("guard", ()))
        rows.append(MhTransition(t["from"], tuple(t["scanned"]), t["top"], t["to"], moves,
                                 tuple(t.get("push", ())), guard))
    return MhpdaSpec(
        frozenset(d["states"]),
        frozenset(d["input_alphabet"]),
        d["end_marker"],
        frozenset(d["stack_alphabet"]),
        int(d["heads"]),
        bool(d.get("sensing", False)),
        tuple(rows),
        d["initial"],
        d["bottom"],
        frozenset(d["finals"]),
        name=d.get("name", ""),
    )


def rm_to_dict(prog: RmProgram) -> dict:
    out = {}
    for label, ins in prog.instructions.items():
        if isinstance(ins, Read):
            out[label] = {"op": "READ", "branch": dict(ins.branch), "at_end": ins.at_end}
        elif isinstance(ins, Mul):
            out[label] = {"op": "MUL", "c": ins.c, "next": ins.next}
        elif isinstance(ins, DivMod):
            out[label] = {"op": "DIVMOD", "c": ins.c, "branch": list(ins.branch)}
        elif isinstance(ins, Accept):
            out[label] = {"op": "ACCEPT"}
        else:
            out[label] = {"op": "REJECT"}
    return {"kind": "rm", "name": prog.name, "entry": prog.entry,
            "input_alphabet": sorted(prog.input_alphabet), "instructions": out}


def rm_from_dict(d: dict) -> RmProgram:
    instructions = {}
    for label, ins in d["instructions"].items():
        op = str(ins.get("op", "")).upper()
        if op == "READ":
            instructions[label] = Read(dict(ins["branch"]), ins["at_end"])
        elif op == "MUL":
            instructions[label] = Mul(int(ins["c"]), ins["next"])
        elif op == "DIVMOD":
            instructions[label] = DivMod(int(ins["c"]), tuple(ins["branch"]))
        elif op == "ACCEPT":
            instructions[label] = Accept()
        elif op == "REJECT":
            instructions[label] = Reject()
        else:
            raise MachineFileError(f"{label}: unknown op {ins.get('op')!r}")
    return RmProgram(instructions, d["entry"], frozenset(d["input_alphabet"]), name=d.get("name", ""))


def machine_kind(d: dict) -> str:
    if "kind" in d:
        return d["kind"]
    if "components" in d:
        return "pcpa"
    if "heads" in d:
        return "mhpda"
    if "instructions" in d:
        return "rm"
    raise MachineFileError("cannot tell which kind of machine this file describes")


def to_dict(machine: Machine, annotations=None) -> dict:
    if isinstance(machine, PcpaSpec):
        d = pcpa_to_dict(machine)
    elif isinstance(machine, MhpdaSpec):
        d = mhpda_to_dict(machine)
    else:
        d = rm_to_dict(machine)
    if annotations is not None:
        d["annotations"] = annotations
    return d


def from_dict(d: dict) -> Machine:
    kind = machine_kind(d)
    try:
        if kind == "pcpa":
            return pcpa_from_dict(d)
        if kind == "mhpda":
            return mhpda_from_dict(d)
        if kind == "rm":
            return rm_from_dict(d)
    except (KeyError, TypeError, IndexError) as exc:
        raise MachineFileError(f"malformed {kind} description: {exc!r}") from None
    raise MachineFileError(f"unknown machine kind {kind!r}")


def dumps(machine: Machine, annotations=None) -> str:
    return json.dumps(to_dict(machine, annotations), indent=2, ensure_ascii=False) + "\n"


def load(path) -> Machine:
    try:
        d = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise MachineFileError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(d, dict):
        raise MachineFileError(f"{path}: expected a JSON object")
    return from_dict(d)


def save(machine: Machine, path, annotations=None) -> None:
    Path(path).write_text(dumps(machine, annotations), encoding="utf-8")
