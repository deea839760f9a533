"""Graphviz DOT rendering of automata and of single tree states."""

from __future__ import annotations

from .core import (ACC_SINK, REJ_SINK, TOP, DetParityAutomaton, DetRabinAutomaton, OnePairRabinNPA,
                   ParityNPA, state_payload_name)
from .trees import LabelledTree, format_node, format_states


def _esc(s) -> str:
    return str(s).replace("\\", "\\\\").replace('"', '\\"')


def _sets(xs) -> str:
    return "{" + ",".join(map(str, sorted(xs))) + "}"


def export_dot(obj, name: str = "A") -> str:
    """DOT text for an automaton or a :class:`LabelledTree` state."""
    if isinstance(obj, LabelledTree):
        return _tree_dot(obj, name)
    if isinstance(obj, (ParityNPA, OnePairRabinNPA)):
        return _nondet_dot(obj, name)
    if isinstance(obj, (DetRabinAutomaton, DetParityAutomaton)):
        return _det_dot(obj, name)
    raise TypeError(f"cannot render {type(obj).__name__}")


def _tree_dot(tree: LabelledTree, name: str) -> str:
    lines = [f'digraph "{_esc(name)}" {{', "  node [shape=box];",
             f'  label="{_esc(tree.describe())}";']
    ids = {v: f"n{i}" for i, v in enumerate(tree.nodes())}
    for v, i in ids.items():
        lines.append(f'  {i} [label="{_esc(format_node(v))}:{_esc(format_states(tree[v]))}"];')
    for v, i in ids.items():
        for w in tree.children(v):
            lines.append(f"  {i} -> {ids[w]};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _nondet_dot(aut, name: str) -> str:
    lines = [f'digraph "{_esc(name)}" {{', "  rankdir=LR;", "  node [shape=circle];"]
    for q in range(aut.n):
        lines.append(f'  q{q} [label="{q}"];')
    lines.append('  init [shape=point];')
    for q in sorted(aut.initial):
        lines.append(f"  init -> q{q};")
    has_top = False
    rows = []
    if isinstance(aut, ParityNPA):
        for (q, a, r), k in aut.pri.items():
            rows.append((q, str(a), r, str(k)))
    else:
        for t in aut.transitions:
            kind = "A" if t in aut.accepting else "R" if t in aut.rejecting else "N"
            rows.append((t[0], str(t[1]), t[2], kind))
    for q, a, r, mark in sorted(rows):
        tgt = "top" if r is TOP else f"q{r}"
        has_top |= r is TOP
        lines.append(f'  q{q} -> {tgt} [label="{_esc(a)} : {mark}"];')
    if has_top:
        lines.insert(3, '  top [label="TOP", shape=doublecircle];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _det_dot(aut, name: str) -> str:
    lines = [f'digraph "{_esc(name)}" {{', "  rankdir=LR;", "  node [shape=box];"]
    for s, payload in enumerate(aut.states):
        shape = ""
        if payload is ACC_SINK:
            shape = ", shape=doublecircle"
        elif payload is REJ_SINK:
            shape = ", shape=circle"
        lines.append(f'  s{s} [label="{_esc(state_payload_name(payload))}"{shape}];')
    lines.append("  init [shape=point];")
    lines.append(f"  init -> s{aut.initial};")
    for s, a, t in aut.transitions():
        if isinstance(aut, DetRabinAutomaton):
            acc = aut.acc[s, a]
            rej = set(range(aut.num_pairs)) - set(aut.stable[s, a])
            mark = f"A{_sets(acc)} R{_sets(rej)}"
        else:
            mark = str(aut.copri[s, a])
        lines.append(f'  s{s} -> s{t} [label="{_esc(a)} : {mark}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
