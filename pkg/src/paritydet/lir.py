"""Later introduction records: determinisation to min-even parity automata.

A state is a sequence of triples ``(label, level, hosted)``, one per
non-Rabin-root node of a nested history tree, listed in the order in which
the nodes were introduced.  ``hosted`` is the set of states that the node
hosts at its own level, i.e. its label minus its natural children's labels.
Rabin roots are omitted; they are recovered from the hosted sets.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .construction import DEFAULT_MAX_STATES, explore
from .core import ACC_SINK, REJ_SINK, DetParityAutomaton, ParityNPA
from .nht import initial_nht, is_rabin_root, level, nht_step, root_level
from .trees import STEP, LabelledTree, Verdict, format_states


class LirTriple(NamedTuple):
    label: frozenset
    level: int
    hosted: frozenset

    def __repr__(self):
        return f"({format_states(self.label)},{self.level},{format_states(self.hosted)})"


LirState = tuple  # tuple[LirTriple, ...]


def make_state(triples) -> LirState:
    """Normalise ``[(S, c, P), ...]`` into a hashable LIR state."""
    return tuple(LirTriple(frozenset(s), int(c), frozenset(p)) for s, c, p in triples)


def describe(state: LirState) -> str:
    return "".join(repr(t) for t in state)


def _partitions(blocks, whole) -> bool:
    seen = set()
    for b in blocks:
        if not b or seen & b:
            return False
        seen |= b
    return seen == whole


def _maximal(sets):
    return [s for s in sets if not any(s < t for t in sets)]


def validate_lir(seq: Sequence, p: ParityNPA | int, n: int | None = None) -> Verdict:
    """Check the five LIR-NHT conditions for an automaton's ``n`` and ``c``.

    ``p`` may be the automaton itself or just its maximal priority ``c``
    (then pass ``n``).  "Partitions" is read over the inclusion-maximal
    later sets, so that grandchildren do not count twice, and partition
    blocks must be non-empty.
    """
    if isinstance(p, ParityNPA):
        n, c = p.n, p.c
    else:
        c = max(p, 2)
    e = root_level(c)
    try:
        seq = make_state(seq)
    except (TypeError, ValueError) as exc:
        return Verdict(False, f"not a sequence of triples: {exc}")
    if not seq:
        return Verdict(False, "empty sequence")
    universe = frozenset(range(n)) if n is not None else None
    for i, (s, lvl, hosted) in enumerate(seq, 1):
        if not s:
            return Verdict(False, f"position {i}: empty label")
        if universe is not None and not s <= universe:
            return Verdict(False, f"position {i}: label outside the state set")
        if lvl % 2 or not 2 <= lvl <= e:
            return Verdict(False, f"position {i}: level {lvl} not an even number in [2, {e}]")
        if not hosted <= s:
            return Verdict(False, f"condition 1 fails at position {i}")
        later = [t.label for t in seq[i:] if t.level == lvl and t.label & s]
        if any(not x <= s for x in later) or not _partitions([hosted] + _maximal(later), s):
            return Verdict(False, f"condition 2 fails at position {i}")
        if lvl > 2:
            below = [t.label for t in seq[i:] if t.level == lvl - 2 and t.label & hosted]
            if any(not x <= hosted for x in below) or not _partitions(_maximal(below), hosted):
                return Verdict(False, f"condition 3 fails at position {i}")
        if c % 2 == 0 and lvl == e and not s <= seq[0].label:
            return Verdict(False, f"condition 4 fails at position {i}")
        if lvl < e and not any(t.level == lvl + 2 and s <= t.hosted for t in seq[:i - 1]):
            return Verdict(False, f"condition 5 fails at position {i}")
    return Verdict(True)


def lir_of_nht(tree: LabelledTree, order: Sequence, c: int) -> LirState:
    """Triples for the non-Rabin-root nodes of ``tree`` listed in ``order``."""
    out = []
    for v in order:
        s = tree[v]
        natural = [w for w in tree.children(v) if w[-1] != STEP]
        hosted = s.difference(*(tree[w] for w in natural))
        out.append(LirTriple(s, level(v, c), hosted))
    return tuple(out)


def default_order(tree: LabelledTree, c: int) -> list:
    """Non-Rabin-root nodes in tree-lexicographic order."""
    return [v for v in tree.nodes() if not is_rabin_root(v, c)]


def nht_of_lir(state: LirState, c: int):
    """Rebuild the nested history tree of a valid LIR state.

    Returns ``(tree, nodes)`` where ``nodes[i]`` is the tree node of
    position ``i``.  Sibling order is the order of appearance; Rabin roots
    are re-inserted with the parent's hosted set (or, for the root of an
    odd-``c`` tree, the union of the top-level labels).
    """
    c = max(c, 2)
    e = root_level(c)
    labels: dict = {}
    nodes = []
    kids: dict = {}

    def child_of(par):
        k = kids.get(par, 0)
        kids[par] = k + 1
        return par + (k,)

    for i, (s, lvl, hosted) in enumerate(state):
        same = [j for j in range(i) if state[j].level == lvl and s <= state[j].label]
        if same:
            j = min(same, key=lambda j: len(state[j].label))
            v = child_of(nodes[j])
        elif lvl < e:
            owners = [j for j in range(i) if state[j].level == lvl + 2 and s <= state[j].hosted]
            if len(owners) != 1:
                raise ValueError(f"position {i + 1} has no unique hosting node one level up")
            rabin = nodes[owners[0]] + (STEP,)
            labels[rabin] = state[owners[0]].hosted
            v = child_of(rabin)
        elif c > e:
            labels[()] = labels.get((), frozenset()) | s
            v = child_of(())
        else:
            if i != 0:
                raise ValueError("only the first position may sit at the root of an even-c tree")
            v = ()
        labels[v] = s
        nodes.append(v)
    return LabelledTree(labels), nodes


def initial_lir(p: ParityNPA) -> LirState:
    tree = initial_nht(p.initial, p)
    return lir_of_nht(tree, default_order(tree, p.c), p.c)


def lir_step(state: LirState, letter, p: ParityNPA):
    """Return ``(successor, co_priority)`` for one letter.

    Positions whose node stays stable keep their relative order and move
    left; all other non-Rabin-root nodes of the new tree follow in tree
    order.  The co-priority is ``2i - 1`` if the first affected position
    ``i`` is rejecting, ``2i`` if it is accepting, and ``n * e + 1`` when
    nothing happens.
    """
    c = p.c
    tree, nodes = nht_of_lir(state, c)
    res = nht_step(tree, letter, p)
    if res.target is ACC_SINK:
        return ACC_SINK, 2
    if res.target is REJ_SINK:
        return REJ_SINK, 1
    co = p.n * p.e + 1
    for i, v in enumerate(nodes, 1):
        if v not in res.stable:
            co = 2 * i - 1
            break
        if v in res.accepting:
            co = 2 * i
            break
    kept = [v for v in nodes if v in res.stable]
    survivors = set(kept)
    fresh = [v for v in default_order(res.target, c) if v not in survivors]
    return lir_of_nht(res.target, kept + fresh, c), co


def is_spiked(state: LirState) -> bool:
    """True iff the last triple has the form ``({q}, 2, {q})``."""
    s, lvl, hosted = state[-1]
    return lvl == 2 and len(s) == 1 and s == hosted


def determinise_parity_to_dpa(p: ParityNPA, max_states: int = DEFAULT_MAX_STATES) -> DetParityAutomaton:
    """Deterministic min-even parity automaton with ``n * e + 1`` co-priorities."""
    states, delta, copri = explore(initial_lir(p), p.alphabet, lambda s, a: lir_step(s, a, p), max_states)
    for key in copri:
        if copri[key] is None:
            copri[key] = 2 if states[key[0]] is ACC_SINK else 1
    return DetParityAutomaton(states, 0, p.alphabet, delta, copri, p.n * p.e + 1)


def to_max_parity(dpa: DetParityAutomaton) -> DetParityAutomaton:
    """Export as max-even priorities: co-priority ``q`` becomes ``n*e + 2 - q``."""
    if dpa.convention != "min even":
        raise ValueError("automaton is already in max-even form")
    top = dpa.max_copri + 1
    return DetParityAutomaton(list(dpa.states), dpa.initial, dpa.alphabet, dict(dpa.delta),
                              {k: top - q for k, q in dpa.copri.items()}, dpa.max_copri, "max even")
