"""Reading and writing automata in the HOA v1 text format.

Letters are encoded as minterms over ``ceil(log2 |Σ|)`` atomic
propositions; the letter names travel in the ``alphabet:`` extension
header (minterm ``i`` is the ``i``-th name).  TOP is encoded as an extra,
last state with an accepting self-loop, flagged by the ``top-state:``
extension header, so that tools ignoring the extension still read an
equivalent automaton.

Acceptance conventions of the printer:

* parity automata with ``c = 2`` are written as Büchi, larger ``c`` as
  ``parity max even (c-1)`` with colour ``priority - 2`` and priority 1
  left unmarked;
* one-pair Rabin automata as ``Rabin 1`` with ``R`` marked 0 and ``A`` 1;
* deterministic Rabin automata as ``Rabin k`` (``R_j`` marked ``2j``,
  ``A_j`` marked ``2j + 1``), pair names in ``rabin-pairs:``;
* deterministic min-even parity automata as ``parity min even m`` where
  ``m`` is the largest co-priority; colour = co-priority, and the largest
  (odd, least significant) co-priority is left unmarked.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import (TOP, AutomatonError, DetParityAutomaton, DetRabinAutomaton, OnePairRabinNPA,
                   ParityNPA, state_payload_name)
from .trees import format_node

MAX_MINTERMS = 2 ** 8


class HoaParseError(AutomatonError):
    """Malformed HOA text; carries the 1-based line and column."""

    def __init__(self, message: str, line: int = 0, col: int = 0):
        where = f"line {line}, column {col}: " if line else ""
        super().__init__(where + message)
        self.line = line
        self.col = col


class UnsupportedFeatureError(HoaParseError):
    """Well-formed HOA that uses a feature outside the supported fragment."""


# ---------------------------------------------------------------------------
# lexer

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>/\*(?:.|\n)*?\*/)
  | (?P<body>--BODY--|--END--|--ABORT--)
  | (?P<header>[A-Za-z_][A-Za-z0-9_-]*:)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<int>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_-]*)
  | (?P<alias>@[A-Za-z0-9_-]+)
  | (?P<punct>[\[\]{}()!&|])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str
    text: str
    line: int
    col: int

    @property
    def value(self):
        if self.kind == "int":
            return int(self.text)
        if self.kind == "string":
            return re.sub(r"\\(.)", r"\1", self.text[1:-1])
        return self.text


def tokenize(text: str) -> list:
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise HoaParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        newlines = chunk.count("\n")
        if newlines:
            line += newlines
            line_start = pos + chunk.rfind("\n") + 1
        pos = m.end()
    return tokens


class _Stream:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.i = 0
        self.end_line = text.count("\n") + 1

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is None:
            raise HoaParseError("unexpected end of input", self.end_line, 1)
        self.i += 1
        return tok

    def expect(self, kind, text=None):
        tok = self.next()
        if tok.kind != kind or (text is not None and tok.text != text):
            want = text or kind
            raise HoaParseError(f"expected {want}, found {tok.text!r}", tok.line, tok.col)
        return tok

    def accept(self, kind, text=None):
        tok = self.peek()
        if tok is not None and tok.kind == kind and (text is None or tok.text == text):
            self.i += 1
            return tok
        return None


# ---------------------------------------------------------------------------
# label and acceptance expressions

def _label_expr(st: _Stream):
    """Parse a label expression into a predicate over minterm indices."""
    left = _label_conj(st)
    while st.accept("punct", "|"):
        right = _label_conj(st)
        left = (lambda a, b: lambda m: a(m) or b(m))(left, right)
    return left


def _label_conj(st):
    left = _label_atom(st)
    while st.accept("punct", "&"):
        right = _label_atom(st)
        left = (lambda a, b: lambda m: a(m) and b(m))(left, right)
    return left


def _label_atom(st):
    tok = st.next()
    if tok.kind == "punct" and tok.text == "!":
        inner = _label_atom(st)
        return lambda m: not inner(m)
    if tok.kind == "punct" and tok.text == "(":
        inner = _label_expr(st)
        st.expect("punct", ")")
        return inner
    if tok.kind == "ident" and tok.text in ("t", "f"):
        const = tok.text == "t"
        return lambda m: const
    if tok.kind == "int":
        k = tok.value
        if k >= st.num_aps:
            raise HoaParseError(f"atomic proposition {k} not declared", tok.line, tok.col)
        return lambda m: bool(m >> k & 1)
    if tok.kind == "alias":
        raise UnsupportedFeatureError("aliases are not supported", tok.line, tok.col)
    raise HoaParseError(f"unexpected {tok.text!r} in label", tok.line, tok.col)


def _acc_expr(st):
    terms = [_acc_conj(st)]
    while st.accept("punct", "|"):
        terms.append(_acc_conj(st))
    return ("or", terms) if len(terms) > 1 else terms[0]


def _acc_conj(st):
    terms = [_acc_atom(st)]
    while st.accept("punct", "&"):
        terms.append(_acc_atom(st))
    return ("and", terms) if len(terms) > 1 else terms[0]


def _acc_atom(st):
    tok = st.next()
    if tok.kind == "punct" and tok.text == "(":
        inner = _acc_expr(st)
        st.expect("punct", ")")
        return inner
    if tok.kind == "ident" and tok.text in ("t", "f"):
        return (tok.text,)
    if tok.kind == "ident" and tok.text in ("Fin", "Inf"):
        st.expect("punct", "(")
        if st.accept("punct", "!"):
            raise UnsupportedFeatureError("complemented acceptance sets are not supported", tok.line, tok.col)
        k = st.expect("int").value
        st.expect("punct", ")")
        return (tok.text, k)
    raise HoaParseError(f"unexpected {tok.text!r} in acceptance condition", tok.line, tok.col)


def _flatten(node, op):
    if node[0] == op:
        out = []
        for x in node[1]:
            out.extend(_flatten(x, op))
        return out
    return [node]


def _rabin_pairs(formula, where):
    """``[(fin, inf), ...]`` of a disjunction of ``Fin(x) & Inf(y)`` terms."""
    if formula == ("f",):
        return []
    pairs = []
    for term in _flatten(formula, "or"):
        parts = _flatten(term, "and")
        fin = [p[1] for p in parts if p[0] == "Fin"]
        inf = [p[1] for p in parts if p[0] == "Inf"]
        if len(parts) != 2 or len(fin) != 1 or len(inf) != 1:
            raise HoaParseError("Rabin acceptance must be a disjunction of Fin(x) & Inf(y) terms", *where)
        pairs.append((fin[0], inf[0]))
    return pairs


# ---------------------------------------------------------------------------
# parser

def _headers(st: _Stream):
    headers = []
    while True:
        tok = st.peek()
        if tok is None:
            raise HoaParseError("missing --BODY--", st.end_line, 1)
        if tok.kind == "body":
            if tok.text != "--BODY--":
                raise HoaParseError(f"unexpected {tok.text}", tok.line, tok.col)
            st.next()
            return headers
        name = st.expect("header")
        start = st.i
        while st.peek() is not None and st.peek().kind not in ("header", "body"):
            st.next()
        headers.append((name, start, st.i))


def parse_hoa(text: str):
    """Parse HOA text into one of the automaton types of :mod:`paritydet.core`."""
    st = _Stream(tokenize(text), text)
    first = st.peek()
    if first is None or first.text != "HOA:":
        tok = first or Token("", "", 1, 1)
        raise HoaParseError("document must start with 'HOA: v1'", tok.line, tok.col)
    headers = _headers(st)
    info: dict = {}
    starts = []
    for name, a, b in headers:
        key = name.text[:-1]
        toks = st.tokens[a:b]
        if key == "Start":
            if len(toks) != 1 or toks[0].kind != "int":
                raise UnsupportedFeatureError("only single start states per Start: line are supported",
                                              name.line, name.col)
            starts.append(toks[0].value)
        elif key in info and key not in ("properties",):
            raise HoaParseError(f"duplicate header {key}:", name.line, name.col)
        else:
            info.setdefault(key, []).extend(toks)
            info.setdefault("_pos_" + key, (name.line, name.col))
    if "HOA" not in info or [t.text for t in info["HOA"]] != ["v1"]:
        raise HoaParseError("unsupported HOA version", *info.get("_pos_HOA", (1, 1)))
    for name in ("States", "AP", "Acceptance"):
        if name not in info:
            raise HoaParseError(f"missing {name}: header", 1, 1)
        if name == "States":
            n_total = _single_int(info, "States")
    ap = info["AP"]
    num_aps = ap[0].value if ap and ap[0].kind == "int" else None
    if num_aps is None or len(ap) != num_aps + 1:
        raise HoaParseError("malformed AP: header", *info["_pos_AP"])
    if 2 ** num_aps > MAX_MINTERMS:
        raise UnsupportedFeatureError(f"at most 8 atomic propositions are supported, got {num_aps}",
                                      *info["_pos_AP"])
    st.num_aps = num_aps
    if "alphabet" in info:
        toks = info["alphabet"]
        if not toks or toks[0].kind != "int" or len(toks) != toks[0].value + 1:
            raise HoaParseError("malformed alphabet: header", *info["_pos_alphabet"])
        letters = [t.value for t in toks[1:]]
        if len(letters) > 2 ** num_aps or len(set(letters)) != len(letters):
            raise HoaParseError("alphabet: names do not fit the declared propositions", *info["_pos_alphabet"])
    else:
        letters = [str(m) for m in range(2 ** num_aps)]
    top_state = None
    if "top-state" in info:
        top_state = _single_int(info, "top-state")
        if top_state != n_total - 1:
            raise HoaParseError("top-state: must be the last state", *info["_pos_top-state"])
    n = n_total - (top_state is not None)
    acc_toks = info["Acceptance"]
    if not acc_toks or acc_toks[0].kind != "int":
        raise HoaParseError("malformed Acceptance: header", *info["_pos_Acceptance"])
    num_sets = acc_toks[0].value
    sub = _Stream(acc_toks[1:], text)
    sub.end_line = acc_toks[0].line
    formula = _acc_expr(sub)
    if sub.peek() is not None:
        tok = sub.peek()
        raise HoaParseError(f"trailing {tok.text!r} in acceptance condition", tok.line, tok.col)
    acc_name = [t.value for t in info.get("acc-name", [])]
    props = {t.text for t in info.get("properties", [])}
    deterministic = "deterministic" in props
    kind = _classify(acc_name, formula, num_sets, info.get("_pos_acc-name", info["_pos_Acceptance"]))

    states, edges = _body(st, n_total, num_aps, len(letters))
    state_names = [states.get(q, (None, None))[0] for q in range(n_total)]
    if not starts:
        raise HoaParseError("no Start: state", 1, 1)
    for q in starts:
        if not 0 <= q < n:
            raise HoaParseError(f"start state {q} out of range", *info.get("_pos_Start", (1, 1)))

    def target(r):
        return TOP if r == top_state else r

    # state-based marks apply to every outgoing edge
    expanded = []
    for q, m, r, marks, pos in edges:
        if q == top_state:
            continue
        for s in marks:
            if s >= num_sets:
                raise HoaParseError(f"acceptance set {s} not declared", *pos)
        expanded.append((q, letters[m], target(r), marks | states[q][1], pos))

    if deterministic and kind[0] in ("parity", "rabin"):
        if top_state is not None:
            raise UnsupportedFeatureError("top-state: is only supported for nondeterministic automata", 1, 1)
        return _build_det(kind, n, starts, letters, expanded, state_names, info)
    return _build_nondet(kind, n, starts, letters, expanded)


def _single_int(info, key):
    toks = info[key]
    if len(toks) != 1 or toks[0].kind != "int":
        raise HoaParseError(f"malformed {key}: header", *info["_pos_" + key])
    return toks[0].value


def _classify(acc_name, formula, num_sets, pos):
    name = acc_name[0] if acc_name else None
    if name in ("Streett", "generalized-Buchi", "generalized-co-Buchi", "co-Buchi", "generalized-Rabin", "all",
                "none"):
        raise UnsupportedFeatureError(f"{name} acceptance is not supported", *pos)
    if name == "Buchi" or (name is None and formula == ("Inf", 0) and num_sets == 1):
        if formula != ("Inf", 0) or num_sets != 1:
            raise HoaParseError("Buchi acceptance must be 'Acceptance: 1 Inf(0)'", *pos)
        return ("buchi",)
    if name == "parity":
        if len(acc_name) != 4 or acc_name[1] not in ("min", "max") or acc_name[2] not in ("even", "odd") \
                or not isinstance(acc_name[3], int):
            raise HoaParseError("malformed parity acc-name", *pos)
        if acc_name[3] != num_sets:
            raise HoaParseError("parity acc-name and Acceptance disagree on the number of sets", *pos)
        return ("parity", acc_name[1], acc_name[2], num_sets)
    if name == "Rabin":
        if len(acc_name) != 2 or acc_name[1] * 2 != num_sets:
            raise HoaParseError("Rabin acc-name and Acceptance disagree on the number of sets", *pos)
        return ("rabin", _rabin_pairs(formula, pos))
    if name is not None:
        raise UnsupportedFeatureError(f"{name} acceptance is not supported", *pos)
    raise UnsupportedFeatureError("acceptance without a supported acc-name", *pos)


def _body(st, n_total, num_aps, num_letters):
    states: dict = {}
    edges = []
    current = None
    while True:
        tok = st.next()
        if tok.kind == "body":
            if tok.text == "--END--":
                break
            raise HoaParseError(f"unexpected {tok.text}", tok.line, tok.col)
        if tok.kind == "header" and tok.text == "State:":
            if st.accept("punct", "["):
                raise UnsupportedFeatureError("state labels are not supported", tok.line, tok.col)
            q = st.expect("int").value
            if not 0 <= q < n_total or q in states:
                raise HoaParseError(f"state {q} out of range or repeated", tok.line, tok.col)
            name = st.accept("string")
            marks = _marks(st)
            states[q] = (name.value if name else None, marks)
            current = q
            continue
        if tok.kind == "punct" and tok.text == "[":
            if current is None:
                raise HoaParseError("edge before any State:", tok.line, tok.col)
            pred = _label_expr(st)
            st.expect("punct", "]")
            r_tok = st.expect("int")
            r = r_tok.value
            if st.peek() is not None and st.peek().kind == "punct" and st.peek().text == "&":
                raise UnsupportedFeatureError("alternating (conjunctive) targets are not supported",
                                              r_tok.line, r_tok.col)
            if not 0 <= r < n_total:
                raise HoaParseError(f"target state {r} out of range", r_tok.line, r_tok.col)
            marks = _marks(st)
            for m in range(num_letters):
                if pred(m):
                    edges.append((current, m, r, marks, (tok.line, tok.col)))
            continue
        if tok.kind == "int" and current is not None:
            raise UnsupportedFeatureError("implicit edge labels are not supported", tok.line, tok.col)
        raise HoaParseError(f"unexpected {tok.text!r} in body", tok.line, tok.col)
    if st.peek() is not None:
        tok = st.peek()
        raise HoaParseError(f"trailing {tok.text!r} after --END--", tok.line, tok.col)
    for q in range(n_total):
        states.setdefault(q, (None, frozenset()))
    return states, edges


def _marks(st) -> frozenset:
    if not st.accept("punct", "{"):
        return frozenset()
    out = set()
    while not st.accept("punct", "}"):
        out.add(st.expect("int").value)
    return frozenset(out)


def _parity_value(kind, marks, pos):
    """The single colour of an edge, or ``None`` for unmarked edges."""
    if len(marks) > 1:
        raise UnsupportedFeatureError("parity edges may carry at most one colour", *pos)
    return next(iter(marks)) if marks else None


def _min_even_value(kind, colour) -> int:
    """Rank under a min-even reading; unmarked edges rank like colour ``k``."""
    _, _, parity, k = kind
    return (k if colour is None else colour) + (0 if parity == "even" else 1)


def _max_even_value(kind, colour) -> int:
    """Rank under a max-even reading, at least 1; unmarked edges rank like colour -1."""
    _, _, parity, k = kind
    return (-1 if colour is None else colour) + (2 if parity == "even" else 3)


def _npa_priority(kind, colour):
    """Colour of a parity condition to a max-even priority in ``[1, c]``; returns (priority, c)."""
    _, minmax, parity, k = kind
    if minmax == "max":
        return _max_even_value(kind, colour), _max_even_value(kind, k - 1)
    top = _min_even_value(kind, None) + 1
    top += top % 2
    return top - _min_even_value(kind, colour), top


def _build_nondet(kind, n, starts, letters, edges):
    if kind[0] == "rabin":
        pairs = kind[1]
        if len(pairs) != 1:
            raise UnsupportedFeatureError("nondeterministic Rabin automata must have exactly one pair", 1, 1)
        fin, inf = pairs[0]
        trans, acc, rej = set(), set(), set()
        for q, a, r, marks, pos in edges:
            t = (q, a, r)
            trans.add(t)
            if inf in marks and fin not in marks:
                acc.add(t)
            elif fin in marks:
                rej.add(t)
        return OnePairRabinNPA(n, letters, starts, trans, acc, rej)
    pri = {}
    c = 2
    for q, a, r, marks, pos in edges:
        if kind[0] == "buchi":
            k = 2 if 0 in marks else 1
        else:
            k, c = _npa_priority(kind, _parity_value(kind, marks, pos))
        if (q, a, r) in pri and pri[q, a, r] != k:
            raise UnsupportedFeatureError("parallel edges with different priorities", *pos)
        pri[q, a, r] = k
    if kind[0] == "parity":
        c = _npa_priority(kind, None)[1]
    return ParityNPA(n, letters, starts, pri, c=c)


def _build_det(kind, n, starts, letters, edges, names, info):
    if len(starts) != 1:
        raise HoaParseError("a deterministic automaton needs exactly one start state", 1, 1)
    delta = {}
    marks_of = {}
    for q, a, r, marks, pos in edges:
        if (q, a) in delta:
            raise HoaParseError(f"state {q} has two edges on letter {a!r}", *pos)
        delta[q, a] = r
        marks_of[q, a] = (marks, pos)
    missing = [(q, a) for q in range(n) for a in letters if (q, a) not in delta]
    if missing:
        q, a = missing[0]
        raise HoaParseError(f"deterministic automaton is incomplete: state {q}, letter {a!r}", 1, 1)
    payloads = [names[q] if names[q] is not None else str(q) for q in range(n)]
    if kind[0] == "rabin":
        pairs = kind[1]
        pair_names = [t.value for t in info.get("rabin-pairs", [])][1:] or [str(j) for j in range(len(pairs))]
        if len(pair_names) != len(pairs):
            raise HoaParseError("rabin-pairs: does not match the number of pairs", *info["_pos_rabin-pairs"])
        acc, stable = {}, {}
        for key, (marks, _) in marks_of.items():
            acc[key] = frozenset(j for j, (fin, inf) in enumerate(pairs) if inf in marks)
            stable[key] = frozenset(j for j, (fin, inf) in enumerate(pairs) if fin not in marks)
        return DetRabinAutomaton(payloads, starts[0], tuple(letters), delta, acc, stable, pair_names)
    _, minmax, parity, k = kind
    copri = {}
    for key, (marks, pos) in marks_of.items():
        colour = _parity_value(kind, marks, pos)
        if minmax == "min":
            copri[key] = _min_even_value(kind, colour)
        else:
            copri[key] = _max_even_value(kind, colour)
    if minmax == "min":
        return DetParityAutomaton(payloads, starts[0], tuple(letters), delta, copri, _min_even_value(kind, None))
    return DetParityAutomaton(payloads, starts[0], tuple(letters), delta, copri,
                              _max_even_value(kind, k - 1), "max even")


# ---------------------------------------------------------------------------
# printer

def _quote(s) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _minterm_labels(k: int):
    m = max(0, (k - 1).bit_length())
    labels = []
    for i in range(k):
        if m == 0:
            labels.append("t")
        else:
            labels.append(" & ".join(str(j) if i >> j & 1 else f"!{j}" for j in range(m)))
    return m, labels


def _letter_order(alphabet) -> list:
    """Letters in the order of their printed names, so output is canonical for any letter type."""
    return sorted(alphabet, key=str)


def _letter_header(alphabet):
    m, labels = _minterm_labels(len(alphabet))
    lines = ["AP: " + " ".join([str(m)] + [_quote(f"p{j}") for j in range(m)]),
             "alphabet: " + " ".join([str(len(alphabet))] + [_quote(a) for a in alphabet])]
    return lines, labels


def _marks_text(marks) -> str:
    return " {" + " ".join(map(str, sorted(marks))) + "}" if marks else ""


def _parity_formula(k: int, minmax: str, parity: str) -> str:
    """Canonical HOA formula for ``parity minmax parity k``."""
    if k == 0:
        return "t" if (minmax == "min") == (parity == "odd") else "f"
    if minmax == "max":
        order = list(range(k - 1, -1, -1))
    else:
        order = list(range(k))

    def good(i):
        return (i % 2 == 0) == (parity == "even")

    out = None
    for i in reversed(order):
        atom = f"Inf({i})" if good(i) else f"Fin({i})"
        if out is None:
            out = atom
        else:
            op = " | " if good(i) else " & "
            inner = f"({out})" if (" | " in out or " & " in out) else out
            out = atom + op + inner
    return out


def print_hoa(aut) -> str:
    """Render an automaton as HOA v1 text with deterministic byte output."""
    if isinstance(aut, ParityNPA):
        return _print_npa(aut)
    if isinstance(aut, OnePairRabinNPA):
        return _print_rabin1(aut)
    if isinstance(aut, DetRabinAutomaton):
        return _print_dra(aut)
    if isinstance(aut, DetParityAutomaton):
        return _print_dpa(aut)
    raise TypeError(f"cannot print {type(aut).__name__} as HOA")


def _nondet_common(n, initial, alphabet, has_top, acc_lines, rows, top_marks):
    total = n + (1 if has_top else 0)
    lines = ["HOA: v1", f"States: {total}"]
    lines += [f"Start: {q}" for q in sorted(initial)]
    alphabet = _letter_order(alphabet)
    letter_lines, labels = _letter_header(alphabet)
    lines += letter_lines
    if has_top:
        lines.append(f"top-state: {n}")
    lines += acc_lines
    lines.append("properties: trans-labels explicit-labels trans-acc")
    lines.append("--BODY--")
    index = {a: i for i, a in enumerate(alphabet)}
    for q in range(n):
        lines.append(f"State: {q}")
        for a, r, marks in sorted(rows.get(q, ()), key=lambda x: (index[x[0]], x[1])):
            tgt = n if r is TOP else r
            lines.append(f"[{labels[index[a]]}] {tgt}{_marks_text(marks)}")
    if has_top:
        lines.append(f'State: {n} "TOP"')
        for i in range(len(alphabet)):
            lines.append(f"[{labels[i]}] {n}{_marks_text(top_marks)}")
    lines.append("--END--")
    return "\n".join(lines) + "\n"


def _print_npa(p: ParityNPA) -> str:
    rows: dict = {}
    has_top = False
    for (q, a, r), k in p.pri.items():
        has_top |= r is TOP
        if p.c == 2:
            marks = {0} if k == 2 else set()
        else:
            marks = {k - 2} if k >= 2 else set()
        rows.setdefault(q, []).append((a, r, marks))
    if p.c == 2:
        acc = ["acc-name: Buchi", "Acceptance: 1 Inf(0)"]
    else:
        k = p.c - 1
        acc = [f"acc-name: parity max even {k}", f"Acceptance: {k} {_parity_formula(k, 'max', 'even')}"]
    return _nondet_common(p.n, p.initial, p.alphabet, has_top, acc, rows, {0})


def _print_rabin1(r1: OnePairRabinNPA) -> str:
    rows: dict = {}
    has_top = False
    for t in r1.transitions:
        q, a, r = t
        has_top |= r is TOP
        marks = {1} if t in r1.accepting else {0} if t in r1.rejecting else set()
        rows.setdefault(q, []).append((a, r, marks))
    acc = ["acc-name: Rabin 1", "Acceptance: 2 Fin(0) & Inf(1)"]
    return _nondet_common(r1.n, r1.initial, r1.alphabet, has_top, acc, rows, {1})


def _det_common(aut, acc_lines, extra_headers, mark_fn):
    alphabet = _letter_order(aut.alphabet)
    letter_lines, labels = _letter_header(alphabet)
    lines = ["HOA: v1", f"States: {len(aut.states)}", f"Start: {aut.initial}"]
    lines += letter_lines + extra_headers + acc_lines
    lines.append("properties: trans-labels explicit-labels trans-acc deterministic complete")
    lines.append("--BODY--")
    for s, payload in enumerate(aut.states):
        lines.append(f"State: {s} {_quote(state_payload_name(payload))}")
        for i, a in enumerate(alphabet):
            lines.append(f"[{labels[i]}] {aut.delta[s, a]}{_marks_text(mark_fn((s, a)))}")
    lines.append("--END--")
    return "\n".join(lines) + "\n"


def _pair_name(v) -> str:
    return v if isinstance(v, str) else format_node(v)


def _print_dra(d: DetRabinAutomaton) -> str:
    k = d.num_pairs
    formula = " | ".join(f"(Fin({2 * j}) & Inf({2 * j + 1}))" for j in range(k)) or "f"
    if k == 1:
        formula = "Fin(0) & Inf(1)"
    acc = [f"acc-name: Rabin {k}", f"Acceptance: {2 * k} {formula}"]
    extra = ["rabin-pairs: " + " ".join([str(k)] + [_quote(_pair_name(v)) for v in d.pair_names])]

    def marks(key):
        out = {2 * j for j in range(k) if j not in d.stable[key]}
        return out | {2 * j + 1 for j in d.acc[key]}

    return _det_common(d, acc, extra, marks)


def _print_dpa(d: DetParityAutomaton) -> str:
    if d.convention == "min even":
        k = d.max_copri
        acc = [f"acc-name: parity min even {k}", f"Acceptance: {k} {_parity_formula(k, 'min', 'even')}"]

        def marks(key):
            q = d.copri[key]
            return set() if q == k else {q}
    else:
        k = d.max_copri - 1
        acc = [f"acc-name: parity max even {k}", f"Acceptance: {k} {_parity_formula(k, 'max', 'even')}"]

        def marks(key):
            q = d.copri[key]
            return set() if q == 1 else {q - 2}

    return _det_common(d, acc, [], marks)
