"""Automaton data model shared by every construction.

All automata use transition-based acceptance.  Nondeterministic parity
automata carry max-even priorities in ``[1, c]``; deterministic parity
automata produced by the LIR construction carry min-even co-priorities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import Any, Hashable, Iterable, Mapping, Sequence, Union


class AutomatonError(ValueError):
    """Raised for malformed automata or inconsistent arguments."""


class CapacityError(RuntimeError):
    """Raised when a construction exceeds its configured state budget."""

    def __init__(self, budget: int, what: str = "states"):
        super().__init__(f"state budget exceeded: more than {budget} {what} (max_states={budget})")
        self.budget = budget


@total_ordering
class _Top:
    """The immediate-acceptance pseudo state.  Sorts after every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "TOP"

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __hash__(self):
        return hash("paritydet.TOP")

    def __reduce__(self):
        return (_Top, ())


TOP = _Top()

Letter = Hashable
Target = Union[int, _Top]
Transition = tuple  # (source, letter, target)


class _Sink:
    def __init__(self, name: str):
        self.name = name

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.name

    def __reduce__(self):
        return (_sink_by_name, (self.name,))


def _sink_by_name(name):
    return ACC_SINK if name == "ACC-SINK" else REJ_SINK


ACC_SINK = _Sink("ACC-SINK")
REJ_SINK = _Sink("REJ-SINK")


def _sorted_alphabet(alphabet: Iterable[Letter]) -> tuple:
    letters = set(alphabet)
    try:
        return tuple(sorted(letters))
    except TypeError:
        return tuple(sorted(letters, key=repr))


def _check_states(n: int, initial: Iterable[int]) -> frozenset:
    if n < 1:
        raise AutomatonError(f"automaton needs at least one state, got n={n}")
    init = frozenset(initial)
    if not init:
        raise AutomatonError("initial state set must be non-empty")
    bad = [q for q in init if not (isinstance(q, int) and 0 <= q < n)]
    if bad:
        raise AutomatonError(f"initial states {bad} outside [0, {n})")
    return init


def _check_transition(t, n: int, alphabet: frozenset):
    if len(t) != 3:
        raise AutomatonError(f"transition {t!r} is not a (source, letter, target) triple")
    q, a, r = t
    if q is TOP:
        raise AutomatonError("no transition may leave TOP")
    if not (isinstance(q, int) and 0 <= q < n):
        raise AutomatonError(f"transition source {q!r} outside [0, {n})")
    if r is not TOP and not (isinstance(r, int) and 0 <= r < n):
        raise AutomatonError(f"transition target {r!r} outside [0, {n}) and not TOP")
    if a not in alphabet:
        raise AutomatonError(f"transition letter {a!r} not in the alphabet")


@dataclass(frozen=True, eq=False)
class ParityNPA:
    """Nondeterministic parity automaton with priorities on transitions.

    ``pri`` maps ``(source, letter, target)`` to a priority in ``[1, c]``;
    the target may be :data:`TOP`.  A run accepts when the highest priority
    seen infinitely often is even, or when it reaches TOP.  ``c`` defaults
    to the largest priority used and is raised to 2 when smaller, so that
    the root level ``e`` is always at least 2.
    """

    n: int
    alphabet: tuple
    initial: frozenset
    pri: Mapping[Transition, int]
    c: int = 0

    def __post_init__(self):
        init = _check_states(self.n, self.initial)
        alphabet = _sorted_alphabet(self.alphabet)
        letters = frozenset(alphabet)
        pri = dict(self.pri)
        for t, k in pri.items():
            _check_transition(t, self.n, letters)
            if not isinstance(k, int) or k < 1:
                raise AutomatonError(f"priority {k!r} of {t!r} must be a positive integer")
        c = self.c or max(pri.values(), default=2)
        if any(k > c for k in pri.values()):
            raise AutomatonError(f"priority above declared maximum c={c}")
        object.__setattr__(self, "initial", init)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "pri", pri)
        object.__setattr__(self, "c", max(c, 2))

    @property
    def e(self) -> int:
        """Root level of the nested history trees: ``2 * floor(c / 2)``."""
        return 2 * (self.c // 2)

    @property
    def transitions(self) -> frozenset:
        return frozenset(self.pri)

    @cached_property
    def successors(self) -> dict:
        """``(state, letter) -> ((target, priority), ...)`` in canonical order."""
        table: dict = {}
        for (q, a, r), k in self.pri.items():
            table.setdefault((q, a), []).append((r, k))
        return {key: tuple(sorted(val)) for key, val in table.items()}

    def post(self, states: Iterable[int], letter, max_odd_ok: int | None = None,
             min_even: int | None = None) -> frozenset:
        """Successors of ``states`` on ``letter``.

        With ``max_odd_ok=a`` only the neutral transitions ``N_a`` are used
        (no odd priority above ``a``); with ``min_even=a`` only the accepting
        transitions ``A_a`` (even priority at least ``a``).
        """
        out = set()
        succ = self.successors
        for q in states:
            for r, k in succ.get((q, letter), ()):
                if max_odd_ok is not None and k % 2 == 1 and k > max_odd_ok:
                    continue
                if min_even is not None and (k % 2 == 1 or k < min_even):
                    continue
                out.add(r)
        return frozenset(out)

    def __eq__(self, other):
        if not isinstance(other, ParityNPA):
            return NotImplemented
        return (self.n, self.alphabet, self.initial, self.pri, self.c) == (
            other.n, other.alphabet, other.initial, other.pri, other.c)

    def __repr__(self):
        return (f"ParityNPA(n={self.n}, c={self.c}, alphabet={list(self.alphabet)}, "
                f"initial={sorted(self.initial)}, transitions={len(self.pri)})")


@dataclass(frozen=True, eq=False)
class OnePairRabinNPA:
    """Nondeterministic one-pair Rabin automaton ``(A, R)`` on transitions.

    A run accepts when it takes ``accepting`` transitions infinitely often
    and ``rejecting`` ones only finitely often.  The two sets must be
    disjoint so that the parity embedding is well defined.
    """

    n: int
    alphabet: tuple
    initial: frozenset
    transitions: frozenset
    accepting: frozenset = frozenset()
    rejecting: frozenset = frozenset()

    def __post_init__(self):
        init = _check_states(self.n, self.initial)
        alphabet = _sorted_alphabet(self.alphabet)
        letters = frozenset(alphabet)
        trans = frozenset(tuple(t) for t in self.transitions)
        for t in trans:
            _check_transition(t, self.n, letters)
        acc = frozenset(tuple(t) for t in self.accepting)
        rej = frozenset(tuple(t) for t in self.rejecting)
        unknown = (acc | rej) - trans
        if unknown:
            raise AutomatonError(f"acceptance refers to unknown transitions {sorted(unknown, key=repr)}")
        if acc & rej:
            raise AutomatonError("accepting and rejecting transitions must be disjoint")
        object.__setattr__(self, "initial", init)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", trans)
        object.__setattr__(self, "accepting", acc)
        object.__setattr__(self, "rejecting", rej)

    @cached_property
    def successors(self) -> dict:
        table: dict = {}
        for q, a, r in self.transitions:
            kind = "A" if (q, a, r) in self.accepting else "R" if (q, a, r) in self.rejecting else "N"
            table.setdefault((q, a), []).append((r, kind))
        return {key: tuple(sorted(val)) for key, val in table.items()}

    def __eq__(self, other):
        if not isinstance(other, OnePairRabinNPA):
            return NotImplemented
        return (self.n, self.alphabet, self.initial, self.transitions, self.accepting,
                self.rejecting) == (other.n, other.alphabet, other.initial, other.transitions,
                                    other.accepting, other.rejecting)

    def __repr__(self):
        return (f"OnePairRabinNPA(n={self.n}, alphabet={list(self.alphabet)}, "
                f"initial={sorted(self.initial)}, transitions={len(self.transitions)}, "
                f"|A|={len(self.accepting)}, |R|={len(self.rejecting)})")


@dataclass(frozen=True)
class LassoWord:
    """The ultimately periodic word ``u v v v ...``."""

    u: tuple
    v: tuple

    def __post_init__(self):
        object.__setattr__(self, "u", tuple(self.u))
        object.__setattr__(self, "v", tuple(self.v))
        if not self.v:
            raise AutomatonError("the periodic part of a lasso word must be non-empty")

    def letters(self) -> set:
        return set(self.u) | set(self.v)


@dataclass(eq=False)
class DetRabinAutomaton:
    """Deterministic Rabin automaton with transition-based pairs.

    For every transition ``(s, a)`` the automaton stores the pair indices
    it is accepting for (``acc``) and the pair indices it is *stable* for.
    Transition ``(s, a)`` belongs to ``R_j`` exactly when ``j`` is not in
    ``stable[s, a]``; this keeps transitions small when most pairs are
    rejecting.  ``states`` holds a payload per state (a tree, a sink marker,
    or a name string after parsing).
    """

    states: list
    initial: int
    alphabet: tuple
    delta: dict
    acc: dict
    stable: dict
    pair_names: list = field(default_factory=list)

    @property
    def num_pairs(self) -> int:
        return len(self.pair_names)

    def transitions(self):
        """``(source, letter, target)`` in canonical order."""
        for s in range(len(self.states)):
            for a in self.alphabet:
                if (s, a) in self.delta:
                    yield s, a, self.delta[s, a]

    @property
    def pairs(self) -> dict:
        """Materialised ``j -> (A_j, R_j)`` over ``(source, letter)`` keys."""
        out = {}
        for j in range(self.num_pairs):
            a_j = {k for k, v in self.acc.items() if j in v}
            r_j = {k for k in self.delta if j not in self.stable[k]}
            out[j] = (frozenset(a_j), frozenset(r_j))
        return out

    def structure(self):
        """Hashable structural summary; state and pair payloads are dropped."""
        return (len(self.states), self.initial, self.alphabet,
                tuple(sorted((s, repr(a), t, tuple(sorted(self.acc[s, a])),
                              tuple(sorted(self.stable[s, a])))
                             for s, a, t in self.transitions())),
                self.num_pairs)


@dataclass(eq=False)
class DetParityAutomaton:
    """Deterministic parity automaton with co-priorities on transitions.

    Acceptance is min-even: a run accepts when the least co-priority seen
    infinitely often is even.  ``max_copri`` is the declared bound
    (``n * e + 1`` for the LIR construction).  With ``convention='max even'``
    the numbers are ordinary max-even priorities instead (export only).
    """

    states: list
    initial: int
    alphabet: tuple
    delta: dict
    copri: dict
    max_copri: int
    convention: str = "min even"

    def transitions(self):
        for s in range(len(self.states)):
            for a in self.alphabet:
                if (s, a) in self.delta:
                    yield s, a, self.delta[s, a]

    def structure(self):
        return (len(self.states), self.initial, self.alphabet,
                tuple(sorted((s, repr(a), t, self.copri[s, a]) for s, a, t in self.transitions())),
                self.max_copri, self.convention)


def buchi_to_one_pair_rabin(accepting_transitions: Iterable[Transition], base) -> OnePairRabinNPA:
    """Embed a Büchi automaton as the one-pair Rabin automaton ``(A, ∅)``.

    ``base`` is either a :class:`OnePairRabinNPA` (whose acceptance is
    replaced) or any object with ``n``, ``alphabet``, ``initial`` and
    ``transitions`` attributes.
    """
    acc = frozenset(tuple(t) for t in accepting_transitions)
    trans = frozenset(base.transitions)
    unknown = acc - trans
    if unknown:
        raise AutomatonError(f"unknown accepting transitions {sorted(unknown, key=repr)}")
    return OnePairRabinNPA(base.n, base.alphabet, base.initial, trans, acc, frozenset())


def one_pair_rabin_to_parity(r1: OnePairRabinNPA) -> ParityNPA:
    """Priorities 2 on ``A``, 3 on ``R`` and 1 elsewhere; ``c`` is 3 iff ``R`` is non-empty."""
    if r1.accepting & r1.rejecting:
        raise AutomatonError("accepting and rejecting transitions must be disjoint")
    pri = {}
    for t in r1.transitions:
        pri[t] = 2 if t in r1.accepting else 3 if t in r1.rejecting else 1
    return ParityNPA(r1.n, r1.alphabet, r1.initial, pri, c=3 if r1.rejecting else 2)


def parity_to_one_pair_rabin(p: ParityNPA) -> OnePairRabinNPA:
    """Inverse of :func:`one_pair_rabin_to_parity` for automata with ``c <= 3``."""
    if p.c > 3:
        raise AutomatonError(f"only automata with c <= 3 are one-pair Rabin, got c={p.c}")
    acc = {t for t, k in p.pri.items() if k == 2}
    rej = {t for t, k in p.pri.items() if k == 3}
    return OnePairRabinNPA(p.n, p.alphabet, p.initial, frozenset(p.pri), acc, rej)


def acceptance_sets(p: ParityNPA, a: int):
    """Return ``(R_a, A_a, N_a)`` for the even level ``a`` in ``[2, e]``."""
    if not isinstance(a, int) or a % 2 or not 2 <= a <= p.e:
        raise AutomatonError(f"level must be even and within [2, {p.e}], got {a!r}")
    rejecting = frozenset(t for t, k in p.pri.items() if k > a and k % 2 == 1)
    accepting = frozenset(t for t, k in p.pri.items() if k >= a and k % 2 == 0)
    return rejecting, accepting, frozenset(p.pri) - rejecting


def _check_word(alphabet: Sequence, w: LassoWord):
    letters = set(alphabet)
    for a in w.u + w.v:
        if a not in letters:
            raise AutomatonError(f"letter {a!r} not in the automaton's alphabet")


def det_cycle(aut, w: LassoWord) -> list:
    """Keys ``(state, letter)`` of the transitions repeated forever on ``w``."""
    _check_word(aut.alphabet, w)
    s = aut.initial
    delta = aut.delta
    for a in w.u:
        s = delta[s, a]
    seen: dict = {}
    trace = []
    offset = 0
    while (s, offset) not in seen:
        seen[s, offset] = len(trace)
        a = w.v[offset]
        trace.append((s, a))
        s = delta[s, a]
        offset = (offset + 1) % len(w.v)
    return trace[seen[s, offset]:]


def det_run_on_lasso(aut: DetRabinAutomaton | DetParityAutomaton, w: LassoWord) -> bool:
    """Decide acceptance of ``w`` by simulating the unique run until it cycles."""
    cycle = det_cycle(aut, w)
    if isinstance(aut, DetParityAutomaton):
        values = [aut.copri[k] for k in cycle]
        if aut.convention == "min even":
            return min(values) % 2 == 0
        return max(values) % 2 == 0
    hit = set().union(*(aut.acc[k] for k in cycle))
    if not hit:
        return False
    stable = set(aut.stable[cycle[0]])
    for k in cycle[1:]:
        stable &= aut.stable[k]
    return bool(hit & stable)


def state_payload_name(payload: Any) -> str:
    """Printable name of a deterministic state payload."""
    describe = getattr(payload, "describe", None)
    if describe is not None:
        return describe()
    if isinstance(payload, tuple) and payload and hasattr(payload[0], "hosted"):
        return "".join(repr(t) for t in payload)
    return str(payload)
