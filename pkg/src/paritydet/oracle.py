"""Ground-truth lasso membership and the equivalence harness.

Acceptance of ``u v^ω`` by a nondeterministic automaton is decided on the
finite product of the automaton with the lasso's positions.  A run accepts
iff it reaches TOP, or the cycle part of the product has a reachable
strongly connected component whose dominating priority is even.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .core import (TOP, AutomatonError, DetParityAutomaton, DetRabinAutomaton, LassoWord,
                   OnePairRabinNPA, ParityNPA, det_run_on_lasso)


def _product(aut, w: LassoWord, label):
    """Reachable product graph of ``aut`` and the positions of ``w``.

    Nodes are ``(state, phase)`` with phase in ``[0, |u| + |v|)``.  Returns
    ``(graph, top_reached)``; edges carry ``label(transition)``.
    """
    letters = set(aut.alphabet)
    for a in w.u + w.v:
        if a not in letters:
            raise AutomatonError(f"letter {a!r} not in the automaton's alphabet")
    word = w.u + w.v
    nu, total = len(w.u), len(w.u) + len(w.v)
    succ = aut.successors
    graph = nx.DiGraph()
    frontier = [(q, 0) for q in sorted(aut.initial)]
    graph.add_nodes_from(frontier)
    while frontier:
        q, i = frontier.pop()
        a = word[i]
        j = i + 1 if i + 1 < total else nu
        for r, info in succ.get((q, a), ()):
            if r is TOP:
                return graph, True
            node = (r, j)
            if node not in graph:
                graph.add_node(node)
                frontier.append(node)
            graph.add_edge((q, i), node, label=label((q, a, r), info))
    return graph, False


def _cycle_part(graph, nu):
    return graph.subgraph([x for x in graph if x[1] >= nu])


def npa_accepts_lasso(p: ParityNPA, w: LassoWord) -> bool:
    """Exact membership of ``u v^ω`` via one SCC sweep per even priority."""
    graph, top = _product(p, w, lambda t, k: k)
    if top:
        return True
    cyc = _cycle_part(graph, len(w.u))
    for d in range(2, p.c + 1, 2):
        low = nx.DiGraph()
        low.add_nodes_from(cyc)
        low.add_edges_from((x, y, k) for x, y, k in cyc.edges(data=True) if k["label"] <= d)
        for comp in nx.strongly_connected_components(low):
            if any(k["label"] == d and y in comp for x in comp for y, k in low[x].items()):
                return True
    return False


def npa_accepts_lasso_bruteforce(p: ParityNPA, w: LassoWord) -> bool:
    """Reference decision by enumerating simple cycles of the product.

    A closed walk dominated by an even priority exists iff some simple
    cycle is, so checking simple cycles is exact.  Exponential; only meant
    for products of a dozen nodes.
    """
    graph, top = _product(p, w, lambda t, k: k)
    if top:
        return True
    cyc = _cycle_part(graph, len(w.u))
    for cycle in nx.simple_cycles(cyc):
        pairs = zip(cycle, cycle[1:] + cycle[:1])
        if max(cyc[x][y]["label"] for x, y in pairs) % 2 == 0:
            return True
    return False


def rabin1_accepts_lasso(r1: OnePairRabinNPA, w: LassoWord) -> bool:
    """Exact membership for one-pair Rabin: an R-free SCC containing an A edge."""
    graph, top = _product(r1, w, lambda t, kind: kind)
    if top:
        return True
    cyc = _cycle_part(graph, len(w.u))
    free = nx.DiGraph()
    free.add_nodes_from(cyc)
    free.add_edges_from((x, y, k) for x, y, k in cyc.edges(data=True) if k["label"] != "R")
    for comp in nx.strongly_connected_components(free):
        if any(k["label"] == "A" and y in comp for x in comp for y, k in free[x].items()):
            return True
    return False


def accepts_lasso(aut, w: LassoWord) -> bool:
    """Dispatch membership on the automaton type."""
    if isinstance(aut, ParityNPA):
        return npa_accepts_lasso(aut, w)
    if isinstance(aut, OnePairRabinNPA):
        return rabin1_accepts_lasso(aut, w)
    if isinstance(aut, (DetRabinAutomaton, DetParityAutomaton)):
        return det_run_on_lasso(aut, w)
    raise TypeError(f"unsupported automaton type {type(aut).__name__}")


@dataclass(frozen=True)
class GenConfig:
    """Parameters of the random automaton generator; ``seed`` fixes the output."""

    n: int = 3
    c: int = 3
    letters: int = 2
    density: float = 0.35
    top_probability: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.n < 1 or self.c < 1 or self.letters < 1:
            raise AutomatonError(f"degenerate generator configuration {self}")
        if not 0.0 <= self.density <= 1.0 or not 0.0 <= self.top_probability <= 1.0:
            raise AutomatonError("densities must lie in [0, 1]")


def _letters(k: int) -> tuple:
    return tuple("abcdefghijklmnopqrstuvwxyz"[i] if k <= 26 else f"a{i}" for i in range(k))


def random_npa(cfg: GenConfig) -> ParityNPA:
    """Seeded random parity automaton over letters ``a, b, ...``.

    Each ``(q, a, q')`` is present with probability ``density`` and gets a
    uniform priority in ``[1, c]``; each ``(q, a)`` gets a TOP transition
    with probability ``top_probability``.  State 0 is always initial.
    """
    rng = random.Random(cfg.seed)
    alphabet = _letters(cfg.letters)
    initial = {0} | {q for q in range(1, cfg.n) if rng.random() < 0.3}
    pri = {}
    for q in range(cfg.n):
        for a in alphabet:
            for r in range(cfg.n):
                if rng.random() < cfg.density:
                    pri[q, a, r] = rng.randint(1, cfg.c)
            if rng.random() < cfg.top_probability:
                pri[q, a, TOP] = rng.randint(1, cfg.c)
    return ParityNPA(cfg.n, alphabet, initial, pri, c=cfg.c)


def random_one_pair_rabin(cfg: GenConfig) -> OnePairRabinNPA:
    """Seeded random one-pair Rabin automaton; ``c`` is ignored.

    Present transitions are accepting, rejecting or neutral with equal
    probability.
    """
    rng = random.Random(cfg.seed)
    alphabet = _letters(cfg.letters)
    initial = {0} | {q for q in range(1, cfg.n) if rng.random() < 0.3}
    trans, acc, rej = set(), set(), set()
    for q in range(cfg.n):
        for a in alphabet:
            targets = [r for r in range(cfg.n) if rng.random() < cfg.density]
            if rng.random() < cfg.top_probability:
                targets.append(TOP)
            for r in targets:
                t = (q, a, r)
                trans.add(t)
                kind = rng.randrange(3)
                if kind == 0:
                    acc.add(t)
                elif kind == 1:
                    rej.add(t)
    return OnePairRabinNPA(cfg.n, alphabet, initial, trans, acc, rej)


def iter_lassos(alphabet, max_u: int, max_v: int) -> Iterator[LassoWord]:
    """All lassos with ``|u| <= max_u`` and ``1 <= |v| <= max_v``, canonical order."""
    letters = tuple(alphabet)
    for lu in range(max_u + 1):
        for u in itertools.product(letters, repeat=lu):
            for lv in range(1, max_v + 1):
                for v in itertools.product(letters, repeat=lv):
                    yield LassoWord(u, v)


def sample_lassos(alphabet, k: int, max_u: int, max_v: int, seed: int) -> Iterator[LassoWord]:
    """``k`` seeded lassos: uniform letters, geometric lengths capped at the bounds."""
    rng = random.Random(seed)
    letters = tuple(alphabet)

    def length(lo, hi):
        x = lo
        while x < hi and rng.random() < 0.5:
            x += 1
        return x

    for _ in range(k):
        u = tuple(rng.choice(letters) for _ in range(length(0, max_u)))
        v = tuple(rng.choice(letters) for _ in range(length(1, max_v)))
        yield LassoWord(u, v)


@dataclass(frozen=True)
class EquivalenceReport:
    """Outcome of :func:`check_equivalence`; truthy when no counterexample was found."""

    mode: str
    checked: int
    counterexample: LassoWord | None = None
    expected: bool | None = None
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def __bool__(self):
        return self.passed


def check_equivalence(nondet, det, exhaustive: tuple | None = None, sample: tuple | None = None,
                      seed: int = 0) -> EquivalenceReport:
    """Compare ``nondet`` and ``det`` on bounded lassos.

    ``exhaustive=(max_u, max_v)`` tests all lassos in canonical order;
    ``sample=(k, max_u, max_v)`` tests ``k`` seeded random ones.  The first
    disagreement is reported.  Agreement refutes nothing beyond the tested
    words; it is not a proof of language equivalence.
    """
    if set(nondet.alphabet) != set(det.alphabet):
        raise AutomatonError("automata have different alphabets")
    if (exhaustive is None) == (sample is None):
        raise AutomatonError("choose exactly one of exhaustive or sample mode")
    if exhaustive is not None:
        words, mode = iter_lassos(nondet.alphabet, *exhaustive), "exhaustive"
    else:
        k, mu, mv = sample
        words, mode = sample_lassos(nondet.alphabet, k, mu, mv, seed), "sampled"
    checked = 0
    for w in words:
        checked += 1
        want = accepts_lasso(nondet, w)
        if det_run_on_lasso(det, w) != want:
            return EquivalenceReport(mode, checked, w, want, seed if sample else None)
    return EquivalenceReport(mode, checked, None, None, seed if sample else None)
