"""Root history trees and determinisation of one-pair Rabin automata.

The root of a root history tree (RHT) tracks the subset construction and
its label is exactly the union of its children's labels; every other node
strictly contains the union of its children's labels.  Each node name is a
Rabin pair of the deterministic automaton: accepting when the node reaches
a breakpoint and rejecting whenever it is not stable.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .construction import DEFAULT_MAX_STATES, explore, rabin_from_steps
from .core import (ACC_SINK, REJ_SINK, TOP, AutomatonError, DetRabinAutomaton,
                   OnePairRabinNPA)
from .trees import LabelledTree, StepResult, Verdict, format_node, structural_problems

ROOT = ()


def _children(labels, v):
    k = len(v)
    return [w for w in labels if len(w) == k + 1 and w[:k] == v]


def validate_history_tree(tree: LabelledTree | Mapping) -> Verdict:
    """Check the three history-tree conditions (all nodes strict)."""
    return _validate(tree, root_equal=False)


def validate_rht(tree: LabelledTree | Mapping) -> Verdict:
    """Check the RHT conditions; never raises."""
    return _validate(tree, root_equal=True)


def _validate(tree, root_equal: bool) -> Verdict:
    try:
        labels = {tuple(v): frozenset(s) for v, s in dict(
            tree.items() if isinstance(tree, LabelledTree) else tree.items()).items()}
    except (TypeError, ValueError, AttributeError) as exc:
        return Verdict(False, f"not a labelled tree: {exc}")
    if ROOT not in labels:
        return Verdict(False, "tree has no root")
    problem = structural_problems(labels, allow_step=False)
    if problem:
        return Verdict(False, problem)
    for v, s in sorted(labels.items()):
        kids = _children(labels, v)
        if v and not s <= labels[v[:-1]]:
            return Verdict(False, f"condition 1: label of {format_node(v)} not contained in its parent's")
        seen: set = set()
        for w in kids:
            if seen & labels[w]:
                return Verdict(False, f"condition 2: children of {format_node(v)} are not disjoint")
            seen |= labels[w]
        if v == ROOT and root_equal:
            if seen != s:
                return Verdict(False, "root label is not the union of its children's labels")
        elif not seen < s:
            return Verdict(False, f"condition 3: children of {format_node(v)} do not strictly "
                                  f"cover less than its label")
    return Verdict(True)


def initial_rht(initial: Iterable[int]) -> LabelledTree:
    states = frozenset(initial)
    if not states:
        raise AutomatonError("initial state set must be non-empty")
    return LabelledTree({ROOT: states, (0,): states})


def _post(r1: OnePairRabinNPA, states, letter, kinds: str) -> frozenset:
    succ = r1.successors
    return frozenset(r for q in states for r, kind in succ.get((q, letter), ()) if kind in kinds)


def rht_step(d: LabelledTree, letter, r1: OnePairRabinNPA) -> StepResult:
    """One transition of the deterministic Rabin automaton."""
    labels = d.as_dict()

    # 1. subset constructions: all transitions at the root, T \ R elsewhere
    reach = _post(r1, labels[ROOT], letter, "ANR")
    if TOP in reach:
        return StepResult(ACC_SINK, frozenset(), frozenset())
    if not reach:
        return StepResult(REJ_SINK, frozenset(), frozenset())
    l1 = {ROOT: reach}
    for v, s in labels.items():
        if v != ROOT:
            l1[v] = _post(r1, s, letter, "AN") - {TOP}

    # 2. spawn a youngest child everywhere
    for v, s in labels.items():
        new = v + (len(_children(labels, v)),)
        l1[new] = reach if v == ROOT else _post(r1, s, letter, "A") - {TOP}

    # 3. horizontal pruning, parents before children, older siblings first
    l2 = {}
    for v in sorted(l1):
        if v == ROOT:
            l2[v] = l1[v]
            continue
        older = set()
        for i in range(v[-1]):
            older |= l1.get(v[:-1] + (i,), frozenset())
        l2[v] = (l1[v] & l2[v[:-1]]) - older

    # 4. breakpoints
    breakpoints = set()
    for v, s in l2.items():
        if v != ROOT and s:
            union = frozenset().union(*(l2[w] for w in _children(l2, v)))
            if union == s:
                breakpoints.add(v)
    kept = {v for v in l2 if not any(v[:k] in breakpoints for k in range(len(v)))}
    accepting = frozenset(breakpoints & kept)

    # 5. drop empty nodes
    kept = {v for v in kept if l2[v]}

    # 6. rename to restore order closure
    rename = _renaming(kept)
    new_labels = {rename[v]: l2[v] for v in kept}
    stable = frozenset(v for v in kept if v in labels and rename[v] == v)
    assert ROOT not in accepting
    return StepResult(LabelledTree(new_labels), accepting, stable)


def _renaming(nodes) -> dict:
    rank = {}
    by_parent: dict = {}
    for v in nodes:
        if v:
            by_parent.setdefault(v[:-1], []).append(v[-1])
    for p, idx in by_parent.items():
        for r, i in enumerate(sorted(idx)):
            rank[p + (i,)] = r
    out = {}
    for v in sorted(nodes, key=len):
        out[v] = out[v[:-1]] + (rank[v],) if v else ()
    return out


def determinise_one_pair_rabin(r1: OnePairRabinNPA, max_states: int = DEFAULT_MAX_STATES) -> DetRabinAutomaton:
    """Deterministic Rabin automaton over the reachable RHTs of ``r1``."""
    start = initial_rht(r1.initial)

    def step(d, a):
        res = rht_step(d, a, r1)
        return res.target, res

    states, delta, info = explore(start, r1.alphabet, step, max_states)
    return rabin_from_steps(states, r1.alphabet, delta, info)
