from hypothesis import given, settings
from hypothesis import strategies as st

from paritydet.core import ACC_SINK, REJ_SINK, TOP, OnePairRabinNPA, ParityNPA, det_run_on_lasso
from paritydet.hoa import parse_hoa, print_hoa
from paritydet.lir import determinise_parity_to_dpa, lir_of_nht, nht_of_lir, validate_lir
from paritydet.nht import determinise_parity_to_rabin, validate_nht
from paritydet.oracle import accepts_lasso, iter_lassos
from paritydet.rht import determinise_one_pair_rabin, validate_rht
from paritydet.trees import LabelledTree

LETTERS = ("a", "b")


@st.composite
def npas(draw):
    n = draw(st.integers(1, 3))
    c = draw(st.integers(1, 5))
    targets = st.sampled_from(list(range(n)) + [TOP])
    keys = st.tuples(st.integers(0, n - 1), st.sampled_from(LETTERS), targets)
    pri = draw(st.dictionaries(keys, st.integers(1, c), max_size=3 * n * 2))
    initial = draw(st.sets(st.integers(0, n - 1), min_size=1))
    return ParityNPA(n, LETTERS, initial, pri, c=c)


@st.composite
def rabin1s(draw):
    n = draw(st.integers(1, 3))
    keys = st.tuples(st.integers(0, n - 1), st.sampled_from(LETTERS), st.integers(0, n - 1))
    kinds = draw(st.dictionaries(keys, st.sampled_from("ARN"), max_size=3 * n * 2))
    initial = draw(st.sets(st.integers(0, n - 1), min_size=1))
    acc = {t for t, k in kinds.items() if k == "A"}
    rej = {t for t, k in kinds.items() if k == "R"}
    return OnePairRabinNPA(n, LETTERS, initial, set(kinds), acc, rej)


def _trees(d):
    return [s for s in d.states if s not in (ACC_SINK, REJ_SINK)]


@settings(max_examples=60, deadline=None)
@given(npas())
def test_parity_determinisations_agree_with_oracle(p):
    dra, dpa = determinise_parity_to_rabin(p), determinise_parity_to_dpa(p)
    for w in iter_lassos(LETTERS, 2, 2):
        want = accepts_lasso(p, w)
        assert det_run_on_lasso(dra, w) == want
        assert det_run_on_lasso(dpa, w) == want
    assert all(1 <= q <= p.n * p.e + 1 for q in dpa.copri.values())
    for t in _trees(dra):
        assert validate_nht(t, p.c)
    for s in _trees(dpa):
        assert validate_lir(s, p.c, n=p.n)
        tree, nodes = nht_of_lir(s, p.c)
        assert lir_of_nht(tree, nodes, p.c) == s


@settings(max_examples=60, deadline=None)
@given(rabin1s())
def test_one_pair_rabin_determinisation(r):
    d = determinise_one_pair_rabin(r)
    for w in iter_lassos(LETTERS, 2, 2):
        assert det_run_on_lasso(d, w) == accepts_lasso(r, w)
    for t in _trees(d):
        assert isinstance(t, LabelledTree) and validate_rht(t)


@settings(max_examples=40, deadline=None)
@given(npas())
def test_hoa_round_trip(p):
    text = print_hoa(p)
    assert print_hoa(parse_hoa(text)) == text
    dpa = determinise_parity_to_dpa(p)
    text = print_hoa(dpa)
    assert print_hoa(parse_hoa(text)) == text
