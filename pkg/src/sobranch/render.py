"""Serialization helpers: canonical JSON, DOT graphs, and text layouts.

JSON output is canonical (sorted keys, compact separators) so that
parsing and re-rendering any emitted document is byte-identical.
Rationals and scalars are rendered as strings in the exact textual
format understood by the scalar parser.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .branching import BranchingGraph, node_id
from .gross_prasad import GpResolution, VoganPacket
from .irreps import IrrepRho, ThetaParam
from .multiplicity import MultiplicityResult
from .scalars import ScalarParam, Sign, format_scalar


def canonical_json(obj) -> str:
    """Dump with sorted keys and fixed separators; stable under re-parse."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def fraction_str(x: Fraction) -> str:
    return str(x)


def scalar_json(s: ScalarParam) -> str:
    return format_scalar(s)


def irrep_json(r: IrrepRho) -> dict:
    return {"n": r.n, "ell": r.ell, "sign": str(r.sign)}


def theta_json(p: ThetaParam) -> dict:
    return {
        "head": [fraction_str(e) for e in p.head],
        "char": {"k": p.char_k, "sign": str(p.char_sign)},
    }


def infchar_json(entries) -> list[str]:
    return [fraction_str(e) for e in entries]


def mult_json(result: MultiplicityResult, inputs: dict) -> dict:
    return {"value": result.value, "case": result.case_label, "inputs": inputs}


def graph_json(graph: BranchingGraph) -> dict:
    return {
        "n": graph.n,
        "nodes_big": [node_id(b) for b in graph.nodes_big],
        "nodes_small": [node_id(s, small=True) for s in graph.nodes_small],
        "edges": [
            [node_id(b), node_id(s, small=True)] for b, s in graph.edges
        ],
    }


def graph_dot(graph: BranchingGraph) -> str:
    """Directed graph in the restricted grammar
    ``digraph { "id"; "id" -> "id"; }``."""
    lines = ["digraph {"]
    for b in graph.nodes_big:
        lines.append(f'  "{node_id(b)}";')
    for s in graph.nodes_small:
        lines.append(f'  "{node_id(s, small=True)}";')
    for b, s in graph.edges:
        lines.append(f'  "{node_id(b)}" -> "{node_id(s, small=True)}";')
    lines.append("}")
    return "\n".join(lines)


def packet_json(packet: VoganPacket) -> dict:
    return {
        "kind": packet.kind,
        "m": packet.m,
        "rank": packet.character_group_rank,
        "total": packet.total,
        "members": [
            {"form": [mem.form.p, mem.form.q], "count": mem.count}
            for mem in packet.members
        ],
    }


def resolution_json(res: GpResolution) -> dict:
    doc = {
        "conjecture": res.conjecture,
        "m": res.m,
        "profile": res.profile,
        "chi_first": [str(s) for s in res.chi_first],
        "chi_second": [str(s) for s in res.chi_second],
        "p": res.p,
        "q": res.q,
        "forms": [[f.p, f.q] for f in res.forms],
    }
    if res.warning is not None:
        doc["warning"] = res.warning
    return doc


def format_theta_arrow(pair: tuple[ThetaParam, ThetaParam]) -> str:
    big, small = pair
    return f"{big} => {small}"
