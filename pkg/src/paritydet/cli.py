"""Command line front end.

Exit codes: 0 success, 1 counterexample found, 2 usage or input error,
3 state budget exceeded.
"""

from __future__ import annotations

import argparse
import sys

from .construction import DEFAULT_MAX_STATES
from .core import (AutomatonError, CapacityError, DetParityAutomaton, DetRabinAutomaton, OnePairRabinNPA,
                   ParityNPA, one_pair_rabin_to_parity)
from .dot import export_dot
from .enumeration import count_history_trees, count_lir_nht_states, count_rhts
from .fullauto import full_automaton, load_letters
from .hoa import parse_hoa, print_hoa
from .lir import determinise_parity_to_dpa, to_max_parity
from .nht import determinise_parity_to_rabin
from .oracle import GenConfig, check_equivalence, random_npa, random_one_pair_rabin
from .reports import count_record, equivalence_record, record, text_table, to_jsonl
from .rht import determinise_one_pair_rabin

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _read(path) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text: str):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="paritydet", description="Determinise parity, Büchi and one-pair Rabin automata.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    det = sub.add_parser("determinise", help="determinise a HOA automaton")
    det.add_argument("--to", choices=["rabin", "parity"], required=True)
    det.add_argument("--in", dest="inp", default=None, help="input HOA file (default: stdin)")
    det.add_argument("--out", default=None, help="output file (default: stdout)")
    det.add_argument("--max-states", type=int, default=DEFAULT_MAX_STATES)
    det.add_argument("--max-parity", action="store_true", help="emit max-even priorities instead of co-priorities")

    cnt = sub.add_parser("count", help="count tree structures")
    cnt.add_argument("what", choices=["ht", "rht", "lir"])
    cnt.add_argument("--n", type=int, required=True)
    cnt.add_argument("--c", type=int, default=2)
    cnt.add_argument("--format", choices=["text", "json"], default="text")

    gen = sub.add_parser("gen", help="generate automata")
    mode = gen.add_mutually_exclusive_group(required=True)
    mode.add_argument("--random", action="store_true")
    mode.add_argument("--full", action="store_true")
    gen.add_argument("--kind", choices=["parity", "rabin1"], default="parity")
    gen.add_argument("--n", type=int, default=3)
    gen.add_argument("--c", type=int, default=3)
    gen.add_argument("--letters", default="2", help="alphabet size (--random) or letters JSON file (--full)")
    gen.add_argument("--density", type=float, default=0.35)
    gen.add_argument("--top-probability", type=float, default=0.0)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", default=None)

    chk = sub.add_parser("check", help="compare an automaton with a deterministic one on lassos")
    chk.add_argument("--nd", required=True)
    chk.add_argument("--det", required=True)
    how = chk.add_mutually_exclusive_group()
    how.add_argument("--exhaustive", nargs=2, type=int, metavar=("U", "V"))
    how.add_argument("--sample", nargs=3, type=int, metavar=("K", "U", "V"))
    chk.add_argument("--seed", type=int, default=0)
    chk.add_argument("--format", choices=["text", "json"], default="text")

    dot = sub.add_parser("dot", help="render a HOA automaton as DOT")
    dot.add_argument("--in", dest="inp", default=None)
    dot.add_argument("--out", default=None)
    return parser


def _determinise(args) -> int:
    aut = parse_hoa(_read(args.inp))
    if not isinstance(aut, (ParityNPA, OnePairRabinNPA)):
        raise AutomatonError("input must be a nondeterministic parity, Büchi or one-pair Rabin automaton")
    if args.to == "rabin":
        if isinstance(aut, OnePairRabinNPA):
            out = determinise_one_pair_rabin(aut, args.max_states)
        else:
            out = determinise_parity_to_rabin(aut, args.max_states)
    else:
        p = one_pair_rabin_to_parity(aut) if isinstance(aut, OnePairRabinNPA) else aut
        out = determinise_parity_to_dpa(p, args.max_states)
        if args.max_parity:
            out = to_max_parity(out)
    _write(args.out, print_hoa(out))
    return EXIT_OK


def _count(args) -> int:
    if args.what == "ht":
        rows = [{"n": args.n, "ht": count_history_trees(args.n)}]
        recs = [record("count/ht", n=args.n, counts={"ht": rows[0]["ht"]})]
    elif args.what == "rht":
        rows = [{"n": args.n, "rht": count_rhts(args.n)}]
        recs = [record("count/rht", n=args.n, counts={"rht": rows[0]["rht"]})]
    else:
        rep = count_lir_nht_states(args.n, args.c)
        rows = [{"n": args.n, "c": args.c, **rep.counts}]
        recs = [count_record(rep)]
    if args.format == "json":
        sys.stdout.write(to_jsonl(recs))
    elif args.what == "lir":
        sys.stdout.write(text_table(rows))
    else:
        sys.stdout.write(f"{rows[0][args.what]}\n")
    return EXIT_OK


def _gen(args) -> int:
    if args.random:
        try:
            letters = int(args.letters)
        except ValueError:
            raise _UsageError("--letters must be an integer with --random")
        cfg = GenConfig(args.n, args.c, letters, args.density, args.top_probability, args.seed)
        aut = random_one_pair_rabin(cfg) if args.kind == "rabin1" else random_npa(cfg)
    else:
        aut = full_automaton(load_letters(_read(args.letters)), args.n, args.c)
    _write(args.out, print_hoa(aut))
    return EXIT_OK


def _check(args) -> int:
    nd = parse_hoa(_read(args.nd))
    det = parse_hoa(_read(args.det))
    if not isinstance(det, (DetRabinAutomaton, DetParityAutomaton)):
        raise AutomatonError("--det must be a deterministic Rabin or parity automaton")
    if args.sample:
        rep = check_equivalence(nd, det, sample=tuple(args.sample), seed=args.seed)
    else:
        rep = check_equivalence(nd, det, exhaustive=tuple(args.exhaustive or (2, 3)))
    if args.format == "json":
        sys.stdout.write(to_jsonl([equivalence_record(rep)]))
    elif rep.passed:
        sys.stdout.write(f"pass: {rep.checked} lassos ({rep.mode})\n")
    else:
        w = rep.counterexample
        sys.stdout.write(f"counterexample after {rep.checked} lassos: u={list(w.u)} v={list(w.v)} "
                         f"(nondeterministic automaton {'accepts' if rep.expected else 'rejects'})\n")
    return EXIT_OK if rep.passed else EXIT_COUNTEREXAMPLE


def _dot(args) -> int:
    _write(args.out, export_dot(parse_hoa(_read(args.inp))))
    return EXIT_OK


_COMMANDS = {"determinise": _determinise, "count": _count, "gen": _gen, "check": _check, "dot": _dot}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"paritydet: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"paritydet: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (AutomatonError, ValueError, OSError) as exc:
        print(f"paritydet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
