"""Ordered labelled trees used as deterministic states.

A node is a tuple of child indices; ``()`` is the root.  Nested history
trees also use :data:`STEP` as a component for stepchildren.  ``STEP`` is a
plain integer larger than any real child index, so the ordinary tuple order
is depth-first lexicographic with stepchildren after their natural siblings.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, NamedTuple

STEP = 1 << 40

Node = tuple


def parent(v: Node) -> Node:
    return v[:-1]


def is_step(v: Node) -> bool:
    return bool(v) and v[-1] == STEP


def step_count(v: Node) -> int:
    return sum(1 for x in v if x == STEP)


def format_node(v: Node) -> str:
    """``()`` -> ``ε``; ``(0, STEP, 1)`` -> ``0s1``."""
    if not v:
        return "ε"
    parts = ["s" if x == STEP else str(x) for x in v]
    sep = "." if any(len(p) > 1 for p in parts) else ""
    return sep.join(parts)


def format_states(states: Iterable[int]) -> str:
    return "{" + ",".join(str(q) for q in sorted(states)) + "}"


class LabelledTree:
    """Immutable ordered tree mapping nodes to non-empty state sets.

    Equality and hashing are canonical: two trees are equal when they have
    the same nodes with the same labels.
    """

    __slots__ = ("_items", "_labels", "_hash")

    def __init__(self, labels: Mapping[Node, Iterable[int]]):
        items = tuple(sorted((tuple(v), frozenset(s)) for v, s in labels.items()))
        self._items = items
        self._labels = dict(items)
        self._hash = hash(items)

    def items(self):
        return self._items

    def nodes(self) -> list:
        return [v for v, _ in self._items]

    def label(self, v: Node) -> frozenset:
        return self._labels[v]

    def __getitem__(self, v: Node) -> frozenset:
        return self._labels[v]

    def __contains__(self, v) -> bool:
        return v in self._labels

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[Node]:
        return (v for v, _ in self._items)

    def as_dict(self) -> dict:
        return dict(self._labels)

    def children(self, v: Node) -> list:
        """Children of ``v`` in sibling order (stepchild last)."""
        k = len(v)
        return [w for w in self._labels if len(w) == k + 1 and w[:k] == v]

    def __eq__(self, other):
        if not isinstance(other, LabelledTree):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._items < other._items

    def describe(self) -> str:
        """Compact caption such as ``ε:{0,1} 0:{0,1} 00:{1}``."""
        return " ".join(f"{format_node(v)}:{format_states(s)}" for v, s in self._items)

    __str__ = describe

    def __repr__(self):
        return f"LabelledTree({self.describe()})"


def structural_problems(labels: Mapping[Node, frozenset], allow_step: bool = True) -> str | None:
    """Check prefix closure, sibling order closure and non-empty labels.

    Returns a diagnostic for the first problem found, or ``None``.
    Order closure is only required among natural children; ``STEP``
    components never need older siblings.
    """
    for v, s in sorted(labels.items()):
        if not s:
            return f"node {format_node(v)} has an empty label"
        if v and v[:-1] not in labels:
            return f"node {format_node(v)} has no parent in the tree"
        if v and v[-1] != STEP:
            for i in range(v[-1]):
                if v[:-1] + (i,) not in labels:
                    return f"node {format_node(v)} is missing its older sibling {format_node(v[:-1] + (i,))}"
        elif v and not allow_step:
            return f"node {format_node(v)} uses the stepchild symbol"
    return None


class Verdict(NamedTuple):
    """Validation outcome; falsy when a condition is violated."""

    ok: bool
    reason: str | None = None

    def __bool__(self):
        return self.ok


class StepResult(NamedTuple):
    """One deterministic transition of a tree construction.

    ``target`` is the successor tree or a sink.  ``accepting`` holds the
    node names that reach a breakpoint; ``stable`` the node names that keep
    their name.  Every node name outside ``stable`` is rejecting.
    """

    target: object
    accepting: frozenset
    stable: frozenset
