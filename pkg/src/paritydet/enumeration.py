"""Exhaustive enumeration and counting of tree-shaped determinisation states.

Two independent routes are kept on purpose: generators below build
structures recursively from their shape, while the validators of the
``rht``, ``nht`` and ``lir`` modules check them condition by condition.
Counts of history trees and root history trees additionally have a
closed recursion, which the enumerators cross-check for small ``n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb, factorial
from typing import Iterator

from .core import CapacityError
from .lir import LirTriple, is_spiked, lir_of_nht, make_state, validate_lir
from .nht import is_rabin_root, root_level
from .trees import STEP, LabelledTree

DESK_BOUND = 7  # largest n the explicit enumerators accept by default


def _check_n(n: int, bound: int):
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    if n > bound:
        raise CapacityError(bound, "states for exhaustive enumeration")


# ---------------------------------------------------------------------------
# set helpers

def nonempty_subsets(s) -> Iterator[frozenset]:
    items = sorted(s)
    for k in range(1, len(items) + 1):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def proper_subsets(s) -> Iterator[frozenset]:
    """All subsets of ``s`` except ``s`` itself, including the empty set."""
    items = sorted(s)
    for k in range(len(items)):
        for combo in itertools.combinations(items, k):
            yield frozenset(combo)


def ordered_partitions(s) -> Iterator[tuple]:
    """Sequences of non-empty, pairwise disjoint blocks whose union is ``s``."""
    s = frozenset(s)
    if not s:
        yield ()
        return
    for first in nonempty_subsets(s):
        for rest in ordered_partitions(s - first):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# history trees and RHTs

def _strict_subtrees(s: frozenset) -> Iterator[dict]:
    """History trees (relative node names) whose root label is ``s``."""
    for covered in proper_subsets(s):
        yield from _forests(covered, s)


def _forests(covered, label) -> Iterator[dict]:
    for blocks in ordered_partitions(covered):
        for subs in itertools.product(*(list(_strict_subtrees(b)) for b in blocks)):
            tree = {(): label}
            for i, sub in enumerate(subs):
                for v, lab in sub.items():
                    tree[(i,) + v] = lab
            yield tree


def iter_history_trees(n: int, bound: int = DESK_BOUND) -> Iterator[LabelledTree]:
    """Every history tree whose labels are drawn from ``{0, ..., n-1}``."""
    _check_n(n, bound)
    for root in nonempty_subsets(range(n)):
        for tree in _strict_subtrees(root):
            yield LabelledTree(tree)


def iter_rhts(n: int, bound: int = DESK_BOUND) -> Iterator[LabelledTree]:
    """Every RHT over ``n`` states (root label equals its children's union)."""
    _check_n(n, bound)
    for root in nonempty_subsets(range(n)):
        for tree in _forests(root, root):
            yield LabelledTree(tree)


@lru_cache(maxsize=None)
def _h(k: int) -> int:
    """History trees with a fixed root label of size ``k``."""
    return sum(comb(k, j) * _f(j) for j in range(k))


@lru_cache(maxsize=None)
def _f(j: int) -> int:
    """Ordered forests of history trees that partition a fixed ``j``-set."""
    if j == 0:
        return 1
    return sum(comb(j, i) * _h(i) * _f(j - i) for i in range(1, j + 1))


def count_history_trees(n: int) -> int:
    """#ht(n), by the recursion over root-label sizes (exact integers)."""
    _check_n(n, 10 ** 4)
    return sum(comb(n, k) * _h(k) for k in range(1, n + 1))


def count_rhts(n: int) -> int:
    """#rht(n), by the same recursion."""
    _check_n(n, 10 ** 4)
    return sum(comb(n, k) * _f(k) for k in range(1, n + 1))


def count_rhts_via_dummy_state(n: int, bound: int = DESK_BOUND - 1) -> int:
    """Count history trees over ``n + 1`` states whose root hosts exactly the extra state.

    Dropping the extra state from such a tree leaves an RHT over the other
    ``n`` states and every RHT arises this way exactly once, so the result
    must equal :func:`count_rhts`.
    """
    _check_n(n, bound)
    dummy = n
    total = 0
    for tree in iter_history_trees(n + 1, bound + 1):
        root = tree[()]
        if dummy not in root or root == {dummy}:
            continue
        covered = frozenset().union(*(tree[w] for w in tree.children(())))
        if root - covered == {dummy}:
            total += 1
    return total


# ---------------------------------------------------------------------------
# nested history trees and LIR states

def _non_rabin(s, lvl) -> Iterator[dict]:
    """Subtrees rooted at a non-Rabin-root node of level ``lvl`` labelled ``s``."""
    for covered in proper_subsets(s):
        rest = s - covered if lvl > 2 else None
        for blocks in ordered_partitions(covered):
            kid_options = [list(_non_rabin(b, lvl)) for b in blocks]
            step_options = list(_rabin(rest, lvl - 2)) if rest is not None else [None]
            for subs in itertools.product(*kid_options):
                for step in step_options:
                    tree = {(): s}
                    for i, sub in enumerate(subs):
                        for v, lab in sub.items():
                            tree[(i,) + v] = lab
                    if step is not None:
                        for v, lab in step.items():
                            tree[(STEP,) + v] = lab
                    yield tree


def _rabin(s, lvl) -> Iterator[dict]:
    """Subtrees rooted at a Rabin root whose children have level ``lvl``."""
    for blocks in ordered_partitions(s):
        for subs in itertools.product(*(list(_non_rabin(b, lvl)) for b in blocks)):
            tree = {(): s}
            for i, sub in enumerate(subs):
                for v, lab in sub.items():
                    tree[(i,) + v] = lab
            yield tree


def iter_nhts(n: int, c: int, bound: int = DESK_BOUND) -> Iterator[LabelledTree]:
    """Every nested history tree over ``n`` states for maximal priority ``c``."""
    _check_n(n, bound)
    c = max(c, 2)
    e = root_level(c)
    for root in nonempty_subsets(range(n)):
        gen = _rabin(root, e) if c > e else _non_rabin(root, e)
        for tree in gen:
            yield LabelledTree(tree)


def _lir_constraints(tree: LabelledTree, c: int):
    """Nodes to order and, per node, the nodes that must precede it.

    A node comes after its nearest non-Rabin-root ancestor and after its
    next older natural sibling.
    """
    nodes = [v for v in tree.nodes() if not is_rabin_root(v, c)]
    need = {}
    for v in nodes:
        before = set()
        u = v[:-1] if v else None
        while u is not None and is_rabin_root(u, c):
            u = u[:-1] if u else None
        if u is not None:
            before.add(u)
        if v and v[-1] > 0:
            before.add(v[:-1] + (v[-1] - 1,))
        need[v] = before
    return nodes, need


def linear_extensions(nodes, need) -> Iterator[list]:
    """All orderings of ``nodes`` that list every node after its prerequisites."""
    placed: list = []
    done: set = set()

    def rec():
        if len(placed) == len(nodes):
            yield list(placed)
            return
        for v in nodes:
            if v not in done and need[v] <= done:
                placed.append(v)
                done.add(v)
                yield from rec()
                placed.pop()
                done.discard(v)

    return rec()


def iter_lir_states(n: int, c: int, bound: int = DESK_BOUND) -> Iterator[tuple]:
    """Every LIR state over ``n`` states and maximal priority ``c``."""
    for tree in iter_nhts(n, c, bound):
        nodes, need = _lir_constraints(tree, c)
        for order in linear_extensions(nodes, need):
            yield lir_of_nht(tree, order, c)


def iter_lir_states_bruteforce(n: int, c: int) -> Iterator[tuple]:
    """Filter every short triple sequence through :func:`validate_lir`.

    Independent of the tree generators; exponential, only for tiny ``n``.
    Each non-Rabin-root node hosts at least one state at its own level,
    which bounds the length by ``n * e / 2``.
    """
    e = root_level(c)
    triples = [LirTriple(s, lvl, p)
               for s in nonempty_subsets(range(n))
               for p in itertools.chain([frozenset()], nonempty_subsets(s))
               for lvl in range(2, e + 1, 2)]
    for length in range(1, n * e // 2 + 1):
        for seq in itertools.product(triples, repeat=length):
            if validate_lir(seq, c, n):
                yield tuple(seq)


def lir_root_label(state, c: int) -> frozenset:
    """Label of the root of the underlying tree (the reachable set)."""
    e = root_level(c)
    if c == e:
        return state[0].label
    return frozenset().union(*(t.label for t in state if t.level == e))


# ---------------------------------------------------------------------------
# reports

@dataclass
class CountReport:
    """Exact counts for one parameter choice; serialised by :mod:`paritydet.reports`."""

    kind: str
    n: int
    c: int | None = None
    counts: dict = field(default_factory=dict)
    breakdown: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def as_record(self) -> dict:
        rec = {"kind": self.kind, "n": self.n}
        if self.c is not None:
            rec["c"] = self.c
        rec["counts"] = dict(self.counts)
        if self.breakdown:
            rec["breakdown"] = {str(k): v for k, v in self.breakdown.items()}
        if self.notes:
            rec["notes"] = list(self.notes)
        return rec


def lir_pair_table(n: int, bound: int = DESK_BOUND) -> dict:
    """``(m, root_full) -> count`` of RHT/LIR pairs over ``n`` states.

    RHT/LIR pairs are the LIR states of the one-pair Rabin (``c = 3``)
    construction: the root is an omitted Rabin root, so ``m`` is the LIR
    length plus one.
    """
    _check_n(n, bound)
    full = frozenset(range(n))
    table: dict = {}
    for state in iter_lir_states(n, 3, bound):
        key = (len(state) + 1, lir_root_label(state, 3) == full)
        table[key] = table.get(key, 0) + 1
    return table


def count_lir_pairs(n: int, m: int, root_full: bool, bound: int = DESK_BOUND) -> int:
    """t(n, m) when ``root_full`` else t'(n, m)."""
    if not 1 <= m <= n + 1:
        raise ValueError(f"m must lie in [1, {n + 1}], got {m}")
    return lir_pair_table(n, bound).get((m, bool(root_full)), 0)


def spike(state, q) -> tuple:
    """Split state ``q`` off the last triple ``(P, 2, P)`` as a new youngest child."""
    s, lvl, p = state[-1]
    if lvl != 2 or s != p or q not in p or len(p) < 2:
        raise ValueError("only a final (P, 2, P) triple with |P| >= 2 can be spiked")
    return state[:-1] + make_state([(s, 2, p - {q}), ({q}, 2, {q})])


def count_lir_nht_states(n: int, c: int, bound: int = 4, check_injective: bool = True) -> CountReport:
    """Count LIR states and split them into spiked and unspiked ones.

    With ``check_injective`` the spiking map of every unspiked state is
    applied and its images are checked to be distinct, valid and spiked.
    """
    _check_n(n, bound)
    spiked, unspiked = set(), []
    by_len: dict = {}
    for state in iter_lir_states(n, c, bound):
        by_len[len(state)] = by_len.get(len(state), 0) + 1
        if is_spiked(state):
            spiked.add(state)
        else:
            unspiked.append(state)
    report = CountReport("lir", n, c, {"total": len(spiked) + len(unspiked),
                                       "spiked": len(spiked), "unspiked": len(unspiked)},
                         {"by_length": dict(sorted(by_len.items()))})
    if check_injective:
        images: set = set()
        ok = True
        for state in unspiked:
            for q in sorted(state[-1].hosted):
                img = spike(state, q)
                if img in images or img not in spiked:
                    ok = False
                images.add(img)
        report.counts["spike_images"] = len(images)
        report.breakdown["spike_map_injective"] = ok
    return report


def growth_report(max_n: int) -> list:
    """Rows ``(n, #ht(n), #ht(n) ** (1/n) / n)``; monotonicity is flagged, not enforced."""
    _check_n(max_n, 60)
    rows = []
    for n in range(1, max_n + 1):
        ht = count_history_trees(n)
        rows.append({"n": n, "ht": ht, "rht": count_rhts(n), "ratio": ht ** (1.0 / n) / n})
    for prev, row in zip(rows, rows[1:]):
        row["monotone"] = row["ratio"] >= prev["ratio"]
    if rows:
        rows[0]["monotone"] = True
    return rows


def factorial_identities(n: int) -> dict:
    """The closed forms the pair counts are compared against."""
    return {"t_full": factorial(n) ** 2, "t_proper": factorial(n - 1) * factorial(n)}
