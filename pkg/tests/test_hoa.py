import pytest

from golden_recipes import GOLDEN, recipes
from paritydet.core import (DetParityAutomaton, DetRabinAutomaton, LassoWord, OnePairRabinNPA, ParityNPA,
                            det_run_on_lasso)
from paritydet.hoa import HoaParseError, UnsupportedFeatureError, parse_hoa, print_hoa
from paritydet.oracle import accepts_lasso, iter_lassos

RECIPES = recipes()


def test_corpus_has_twenty_files():
    assert len(RECIPES) == 20
    assert sorted(p.stem for p in GOLDEN.glob("*.hoa")) == sorted(RECIPES)


@pytest.mark.parametrize("name", sorted(RECIPES))
def test_golden_file_is_printed_recipe(name):
    text = (GOLDEN / f"{name}.hoa").read_text(encoding="utf-8")
    assert print_hoa(RECIPES[name]) == text
    assert print_hoa(parse_hoa(text)) == text


@pytest.mark.parametrize("name", sorted(RECIPES))
def test_parsed_automaton_keeps_language(name):
    orig = RECIPES[name]
    back = parse_hoa(print_hoa(orig))
    assert type(back) is type(orig)
    alphabet = [str(a) for a in orig.alphabet]
    letter_of = dict(zip(alphabet, orig.alphabet))
    for w in iter_lassos(alphabet, 1, 2):
        ow = LassoWord(tuple(letter_of[a] for a in w.u), tuple(letter_of[a] for a in w.v))
        assert accepts_lasso(back, w) == accepts_lasso(orig, ow)


ONE_STATE_BUCHI = """HOA: v1
States: 1
Start: 0
AP: 1 "x"
acc-name: Buchi
Acceptance: 1 Inf(0)
--BODY--
State: 0
[0] 0 {0}
[!0] 0
--END--
"""


def test_one_state_buchi_is_c2_parity():
    p = parse_hoa(ONE_STATE_BUCHI)
    assert isinstance(p, ParityNPA) and p.c == 2 and p.n == 1
    assert sorted(p.pri.values()) == [1, 2]


def test_state_based_acceptance_is_moved_to_transitions():
    text = ONE_STATE_BUCHI.replace("State: 0\n[0] 0 {0}", "State: 0 {0}\n[0] 0")
    p = parse_hoa(text)
    assert sorted(p.pri.values()) == [2, 2]


def test_streett_is_unsupported():
    text = ONE_STATE_BUCHI.replace("acc-name: Buchi\nAcceptance: 1 Inf(0)",
                                   "acc-name: Streett 1\nAcceptance: 2 Fin(0) | Inf(1)")
    with pytest.raises(UnsupportedFeatureError, match="Streett"):
        parse_hoa(text)


def test_generalised_buchi_is_unsupported():
    text = ONE_STATE_BUCHI.replace("acc-name: Buchi\nAcceptance: 1 Inf(0)",
                                   "acc-name: generalized-Buchi 2\nAcceptance: 2 Inf(0) & Inf(1)")
    with pytest.raises(UnsupportedFeatureError):
        parse_hoa(text)


def test_parse_error_position():
    text = ONE_STATE_BUCHI.replace("[!0] 0", "[!0] @")
    with pytest.raises(HoaParseError) as info:
        parse_hoa(text)
    assert info.value.line == 10 and info.value.col == 6


@pytest.mark.parametrize("text", ["", "HOA: v2\n--BODY--\n--END--\n", ONE_STATE_BUCHI.replace("--END--", "")])
def test_malformed_inputs(text):
    with pytest.raises(HoaParseError):
        parse_hoa(text)


def test_deterministic_types_survive():
    for name, aut in RECIPES.items():
        if isinstance(aut, (DetRabinAutomaton, DetParityAutomaton)):
            back = parse_hoa(print_hoa(aut))
            assert len(back.states) == len(aut.states)
            for w in iter_lassos([str(a) for a in aut.alphabet], 1, 2):
                ow = LassoWord(tuple(aut.alphabet[[str(a) for a in aut.alphabet].index(x)] for x in w.u),
                               tuple(aut.alphabet[[str(a) for a in aut.alphabet].index(x)] for x in w.v))
                assert det_run_on_lasso(back, w) == det_run_on_lasso(aut, ow)


def test_one_pair_rabin_kept():
    assert isinstance(parse_hoa(print_hoa(RECIPES["rabin1"])), OnePairRabinNPA)
