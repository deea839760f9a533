"""The full parity automaton over priority-set-valued letters.

A letter assigns to every pair ``(q, q')`` with ``q'`` a state or TOP a set
of priorities; absent pairs mean the empty set.  The alphabet is never
materialised: every function here takes the letters it needs explicitly.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .core import TOP, AutomatonError, LassoWord, ParityNPA
from .oracle import npa_accepts_lasso


def opt(priorities: Iterable[int]) -> int:
    """Highest even priority of the set, or the lowest odd one if none is even."""
    s = set(priorities)
    if not s:
        raise ValueError("opt is undefined on the empty set")
    even = [k for k in s if k % 2 == 0]
    return max(even) if even else min(s)


def _target_key(t):
    return "TOP" if t is TOP else t


@dataclass(frozen=True, order=True)
class FullLetter:
    """Sparse letter: ``cells`` holds ``(source, target, priorities)`` with non-empty priorities."""

    cells: tuple = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        norm = {}
        for src, tgt, pris in self.cells:
            tgt = TOP if tgt == "TOP" or tgt is TOP else tgt
            pris = tuple(sorted(set(pris)))
            if pris:
                key = (src, tgt)
                norm[key] = tuple(sorted(set(norm.get(key, ())) | set(pris)))
        cells = tuple(sorted((s, t, p) for (s, t), p in norm.items()))
        object.__setattr__(self, "cells", cells)

    def __call__(self, q, q2) -> frozenset:
        for s, t, p in self.cells:
            if s == q and t == q2:
                return frozenset(p)
        return frozenset()

    def __str__(self):
        if self.name:
            return self.name
        body = ",".join(f"{s}>{_target_key(t)}:{'/'.join(map(str, p))}" for s, t, p in self.cells)
        return "[" + body + "]"

    def check(self, n: int, c: int):
        for s, t, p in self.cells:
            if not (isinstance(s, int) and 0 <= s < n):
                raise AutomatonError(f"letter {self}: source {s!r} outside [0, {n})")
            if t is not TOP and not (isinstance(t, int) and 0 <= t < n):
                raise AutomatonError(f"letter {self}: target {t!r} outside [0, {n}) and not TOP")
            if any(not 1 <= k <= c for k in p):
                raise AutomatonError(f"letter {self}: priorities must lie in [1, {c}]")
        return self

    def to_json(self) -> list:
        return [[s, _target_key(t), list(p)] for s, t, p in self.cells]


def letter(cells: Iterable, name: str = "") -> FullLetter:
    return FullLetter(tuple(tuple(x) for x in cells), name)


def sigma_empty() -> FullLetter:
    return FullLetter((), "sigma_empty")


def sigma_single(q: int, priority: int = 2) -> FullLetter:
    """The letter whose only cell is ``(q, q) -> {priority}``."""
    return FullLetter(((q, q, (priority,)),), f"sigma_{q}" if priority == 2 else f"sigma_{q}_{priority}")


def letter_transitions(sigma: FullLetter, n: int, c: int) -> dict:
    """``(q, q') -> opt(sigma(q, q'))`` over the non-empty cells."""
    sigma.check(n, c)
    return {(s, t): opt(p) for s, t, p in sigma.cells}


def full_automaton(letters: Sequence[FullLetter], n: int, c: int) -> ParityNPA:
    """The full automaton restricted to ``letters``; every state is initial."""
    if not letters:
        raise AutomatonError("at least one letter is required")
    pri = {}
    for sigma in letters:
        for (s, t), k in letter_transitions(sigma, n, c).items():
            pri[s, sigma, t] = k
    return ParityNPA(n, tuple(letters), frozenset(range(n)), pri, c=c)


def reach_step(states: frozenset, sigma: FullLetter) -> frozenset:
    """One letter of the reachability recursion; TOP, once reached, stays."""
    out = {t for s, t, _ in sigma.cells if s in states}
    if TOP in states:
        out.add(TOP)
    return frozenset(out)


def reach(word: Sequence[FullLetter], n: int, c: int | None = None) -> frozenset:
    """States reachable on ``word`` from all of ``Q`` (may contain TOP)."""
    s = frozenset(range(n))
    for sigma in word:
        if c is not None:
            sigma.check(n, c)
        s = reach_step(s, sigma)
    return s


def full_accepts(word: LassoWord, n: int, c: int) -> bool:
    """Membership of a lasso over full letters, via the letters that occur in it."""
    letters = sorted(word.letters())
    return npa_accepts_lasso(full_automaton(letters, n, c), word)


def fixed_letters(n: int, c: int) -> list:
    """Six letters used by the spot checks for two-state full automata.

    ``sigma_empty``, ``sigma_0`` and ``sigma_1`` are the letters that
    separate different reach sets; ``swap``, ``spread`` and ``to_top`` mix
    the states, use every priority up to ``min(c, 3)`` and reach TOP.
    """
    if n != 2:
        raise ValueError("the fixed letter set is defined for two states")
    back = (3,) if c >= 3 else (1,)
    return [
        sigma_empty(),
        sigma_single(0),
        sigma_single(1),
        FullLetter(((0, 1, (1,)), (1, 0, (1,)), (1, 1, (2,))), "swap"),
        FullLetter(((0, 0, (1,)), (0, 1, (2,)), (1, 1, (c,)), (1, 0, back)), "spread"),
        FullLetter(((0, 0, (1,)), (1, TOP, (1,))), "to_top"),
    ]


def reach_collisions(det, n: int) -> list:
    """Check that runs meeting in one deterministic state had equal reach sets.

    Explores the product of ``det`` (any deterministic automaton over full
    letters) with the reachability sets.  Returns the list of states that
    are reached together with two reach sets that are neither equal nor
    both contain TOP; the list is empty when the property holds.
    """
    start = (det.initial, frozenset(range(n)))
    seen = {start}
    queue = deque([start])
    by_state: dict = {}
    while queue:
        s, r = queue.popleft()
        by_state.setdefault(s, set()).add(r)
        for sigma in det.alphabet:
            nxt = (det.delta[s, sigma], reach_step(r, sigma))
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    bad = []
    for s, sets in sorted(by_state.items()):
        sets = list(sets)
        first = sets[0]
        if any(x != first and not (TOP in x and TOP in first) for x in sets[1:]):
            bad.append(s)
    return bad


def load_letters(text: str) -> list:
    """Letters from JSON: a list of letters, each a list of ``[src, tgt, [pri...]]``
    triples or an object ``{"name": ..., "cells": [...]}``; ``"TOP"`` names TOP."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AutomatonError(f"letters file is not valid JSON: {exc}") from exc
    if not isinstance(raw, list):
        raise AutomatonError("letters file must hold a JSON list")
    out = []
    for i, item in enumerate(raw):
        name = f"l{i}"
        if isinstance(item, dict):
            name = str(item.get("name", name))
            item = item.get("cells", [])
        try:
            out.append(letter(item, name))
        except (TypeError, ValueError) as exc:
            raise AutomatonError(f"letter {i} is malformed: {exc}") from exc
    return out
