"""Breadth-first exploration shared by the determinisation procedures."""

from __future__ import annotations

from collections import deque
from typing import Callable, Hashable

from .core import ACC_SINK, REJ_SINK, CapacityError, DetRabinAutomaton

DEFAULT_MAX_STATES = 10 ** 6


def explore(initial: Hashable, alphabet: tuple, step: Callable, max_states: int = DEFAULT_MAX_STATES):
    """Close ``initial`` under ``step(state, letter) -> (target, info)``.

    Sinks are completed with self-loops; ``step`` is never called on them.
    Returns ``(states, delta, info)`` with states indexed in discovery order
    and ``info[s, a]`` the second component returned by ``step``.
    """
    index = {initial: 0}
    states = [initial]
    delta: dict = {}
    info: dict = {}
    queue = deque([0])
    while queue:
        s = queue.popleft()
        payload = states[s]
        for a in alphabet:
            if payload is ACC_SINK or payload is REJ_SINK:
                target, extra = payload, None
            else:
                target, extra = step(payload, a)
            t = index.get(target)
            if t is None:
                if len(states) >= max_states:
                    raise CapacityError(max_states)
                t = index[target] = len(states)
                states.append(target)
                queue.append(t)
            delta[s, a] = t
            info[s, a] = extra
    return states, delta, info


def rabin_from_steps(states, alphabet, delta, info) -> DetRabinAutomaton:
    """Assemble a Rabin automaton from per-transition ``StepResult`` data.

    A pair is allocated for every node name that is accepting in some
    reachable transition; names that are never accepting cannot satisfy
    their pair and are dropped.  Sink loops are accepting (resp. rejecting)
    for every pair; if the accepting sink is reachable but no pair exists,
    a dedicated ``TOP`` pair is added for it.
    """
    names = sorted({v for res in info.values() if res is not None for v in res.accepting})
    if not names and any(p is ACC_SINK for p in states):
        names = ["TOP"]
    index = {v: j for j, v in enumerate(names)}
    everything = frozenset(range(len(names)))
    acc, stable = {}, {}
    for key, res in info.items():
        target = states[delta[key]]
        if target is ACC_SINK:
            acc[key], stable[key] = everything, everything
        elif target is REJ_SINK:
            acc[key], stable[key] = frozenset(), frozenset()
        else:
            acc[key] = frozenset(index[v] for v in res.accepting)
            stable[key] = frozenset(index[v] for v in res.stable if v in index)
    return DetRabinAutomaton(list(states), 0, tuple(alphabet), dict(delta), acc, stable, names)
