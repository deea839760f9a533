"""Nested history trees and determinisation of parity automata to Rabin.

Levels are never stored: the level of a node is ``e - 2 * (#STEP in path)``.
A node is a *Rabin root* when its path ends in ``STEP`` (or it is the root
and ``c`` is odd); a *base node* is a non-Rabin-root at level 2.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .construction import DEFAULT_MAX_STATES, explore, rabin_from_steps
from .core import ACC_SINK, REJ_SINK, TOP, AutomatonError, DetRabinAutomaton, ParityNPA
from .trees import STEP, LabelledTree, StepResult, Verdict, format_node, step_count, structural_problems

ROOT = ()


def root_level(c: int) -> int:
    return 2 * (max(c, 2) // 2)


def level(v, c: int) -> int:
    return root_level(c) - 2 * step_count(v)


def is_rabin_root(v, c: int) -> bool:
    if v:
        return v[-1] == STEP
    return c > root_level(c)


def is_base(v, c: int) -> bool:
    return not is_rabin_root(v, c) and level(v, c) == 2


def _children(labels, v):
    k = len(v)
    return [w for w in labels if len(w) == k + 1 and w[:k] == v]


def validate_nht(tree: LabelledTree | Mapping, c: int) -> Verdict:
    """Check every nested-history-tree condition for maximal priority ``c``."""
    try:
        labels = {tuple(v): frozenset(s) for v, s in dict(tree.items()).items()}
    except (TypeError, ValueError, AttributeError) as exc:
        return Verdict(False, f"not a labelled tree: {exc}")
    if ROOT not in labels:
        return Verdict(False, "tree has no root")
    problem = structural_problems(labels)
    if problem:
        return Verdict(False, problem)
    for v, s in sorted(labels.items()):
        name = format_node(v)
        if level(v, c) < 2:
            return Verdict(False, f"node {name} has level {level(v, c)} below 2")
        if v and not s <= labels[v[:-1]]:
            return Verdict(False, f"label of {name} not contained in its parent's")
        kids = _children(labels, v)
        seen: set = set()
        for w in kids:
            if seen & labels[w]:
                return Verdict(False, f"children of {name} are not disjoint")
            seen |= labels[w]
        has_step = v + (STEP,) in labels
        rabin, base = is_rabin_root(v, c), is_base(v, c)
        if has_step == (base or rabin):
            return Verdict(False, f"node {name} {'has' if has_step else 'lacks'} a stepchild")
        if base:
            if not seen < s:
                return Verdict(False, f"base node {name}: children do not strictly cover less than its label")
        elif seen != s:
            return Verdict(False, f"non-base node {name}: label is not the union of its children's labels")
    return Verdict(True)


def repair(labels: dict, c: int) -> dict:
    """Add the missing child of every childless Rabin root / inner node."""
    todo = sorted(labels)
    while todo:
        v = todo.pop()
        if _children(labels, v):
            continue
        if is_rabin_root(v, c):
            w = v + (0,)
        elif not is_base(v, c):
            w = v + (STEP,)
        else:
            continue
        labels[w] = labels[v]
        todo.append(w)
    return labels


def initial_nht(initial: Iterable[int], p: ParityNPA | int) -> LabelledTree:
    states = frozenset(initial)
    if not states:
        raise AutomatonError("initial state set must be non-empty")
    c = p.c if isinstance(p, ParityNPA) else max(p, 2)
    return LabelledTree(repair({ROOT: states}, c))


def nht_step(d: LabelledTree, letter, p: ParityNPA) -> StepResult:
    """One transition of the deterministic Rabin automaton for ``p``."""
    c = p.c
    labels = d.as_dict()

    # 1. subset constructions
    reach = p.post(labels[ROOT], letter)
    if TOP in reach:
        return StepResult(ACC_SINK, frozenset(), frozenset())
    if not reach:
        return StepResult(REJ_SINK, frozenset(), frozenset())
    l1 = {ROOT: reach}
    for v, s in labels.items():
        if v == ROOT:
            continue
        # Rabin roots use the neutral set of their parent's level
        a = level(v, c) + (2 if is_rabin_root(v, c) else 0)
        l1[v] = p.post(s, letter, max_odd_ok=a)

    # 2. spawn a new youngest natural child at every node
    for v, s in labels.items():
        k = sum(1 for w in _children(labels, v) if w[-1] != STEP)
        if is_rabin_root(v, c):
            l1[v + (k,)] = l1[v]
        else:
            l1[v + (k,)] = p.post(s, letter, min_even=level(v, c)) - {TOP}

    # 3. horizontal pruning; STEP sorts last so stepchildren are youngest
    l2 = {}
    for v in sorted(l1):
        if v == ROOT:
            l2[v] = l1[v]
            continue
        older = set()
        for w in _children(l1, v[:-1]):
            if w[-1] < v[-1]:
                older |= l1[w]
        l2[v] = (l1[v] & l2[v[:-1]]) - older

    # 4. breakpoints over natural children; Rabin roots never accept
    breakpoints = set()
    for v, s in l2.items():
        if s and not is_rabin_root(v, c):
            union = frozenset().union(*(l2[w] for w in _children(l2, v) if w[-1] != STEP))
            if union == s:
                breakpoints.add(v)
    kept = {v for v in l2 if not any(v[:k] in breakpoints for k in range(len(v)))}
    accepting = frozenset(breakpoints & kept)

    # 5. drop empty nodes
    kept = {v for v in kept if l2[v]}

    # 6. rename natural indices; stability is judged before repair
    rename = _renaming_natural(kept)
    new_labels = {rename[v]: l2[v] for v in kept}
    stable = frozenset(v for v in kept if v in labels and rename[v] == v)

    # 7. repair nestedness
    return StepResult(LabelledTree(repair(new_labels, c)), accepting, stable)


def _renaming_natural(nodes) -> dict:
    rank = {}
    by_parent: dict = {}
    for v in nodes:
        if v and v[-1] != STEP:
            by_parent.setdefault(v[:-1], []).append(v[-1])
    for par, idx in by_parent.items():
        for r, i in enumerate(sorted(idx)):
            rank[par + (i,)] = r
    out = {}
    for v in sorted(nodes, key=len):
        if not v:
            out[v] = ()
        else:
            out[v] = out[v[:-1]] + (STEP if v[-1] == STEP else rank[v],)
    return out


def determinise_parity_to_rabin(p: ParityNPA, max_states: int = DEFAULT_MAX_STATES) -> DetRabinAutomaton:
    """Deterministic Rabin automaton over the reachable NHTs of ``p``."""
    start = initial_nht(p.initial, p)

    def step(d, a):
        res = nht_step(d, a, p)
        return res.target, res

    states, delta, info = explore(start, p.alphabet, step, max_states)
    return rabin_from_steps(states, p.alphabet, delta, info)

