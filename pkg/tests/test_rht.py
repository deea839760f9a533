import pytest

from paritydet.core import REJ_SINK, AutomatonError, LassoWord, OnePairRabinNPA
from paritydet.oracle import GenConfig, check_equivalence, random_one_pair_rabin
from paritydet.rht import (determinise_one_pair_rabin, initial_rht, rht_step, validate_history_tree,
                           validate_rht)
from paritydet.trees import LabelledTree

P, Q = 0, 1


def two_state_buchi():
    trans = {(P, "a", P), (P, "a", Q), (Q, "a", Q)}
    return OnePairRabinNPA(2, ["a", "b"], {P}, trans, {(P, "a", Q), (Q, "a", Q)}, set())


def test_validate_rht_examples():
    assert validate_rht({(): {Q}, (0,): {Q}})
    v = validate_rht({(): {Q}})
    assert not v and "root" in v.reason
    assert not validate_rht({(): {P, Q}, (0,): {P}, (1,): {P}})


def test_validate_rht_diagnostics():
    assert not validate_rht({(): {P}, (0,): {P}, (0, 0): {P}})  # strictness below the root
    assert not validate_rht({(): {P}, (1,): {P}})  # order closure
    assert not validate_rht({(): {P}, (0,): {Q}})
    assert not validate_rht("nonsense")
    assert validate_history_tree({(): {P, Q}, (0,): {Q}})
    assert not validate_history_tree({(): {P, Q}, (0,): {P, Q}})


def test_initial_rht():
    assert initial_rht({P}) == LabelledTree({(): {P}, (0,): {P}})
    assert initial_rht({P, Q}) == LabelledTree({(): {P, Q}, (0,): {P, Q}})
    with pytest.raises(AutomatonError):
        initial_rht(set())


def test_rht_step_example():
    r1 = two_state_buchi()
    res = rht_step(initial_rht({P}), "a", r1)
    assert res.target == LabelledTree({(): {P, Q}, (0,): {P, Q}, (0, 0): {Q}})
    assert res.accepting == frozenset()
    # continuation: 00 keeps {q}; node 0 is not yet covered by its children
    res2 = rht_step(res.target, "a", r1)
    assert res2.target[(0, 0)] == {Q}
    assert (0,) not in res2.accepting and (0, 0) in res2.accepting


def test_rht_step_blocked_letter():
    res = rht_step(initial_rht({P}), "b", two_state_buchi())
    assert res.target is REJ_SINK


def test_one_state_buchi():
    r1 = OnePairRabinNPA(1, ["a"], {0}, {(0, "a", 0)}, {(0, "a", 0)}, set())
    d = determinise_one_pair_rabin(r1)
    assert len(d.states) == 1
    assert d.pair_names == [(0,)] and d.acc[0, "a"] == {0} and d.stable[0, "a"] == {0}


def test_two_state_buchi_language():
    r1 = two_state_buchi()
    d = determinise_one_pair_rabin(r1)
    assert check_equivalence(r1, d, exhaustive=(3, 4))


def test_buchi_collapse_and_closure():
    for seed in range(60):
        cfg = GenConfig(n=1 + seed % 4, letters=2, density=0.45, seed=seed)
        r = random_one_pair_rabin(cfg)
        b = OnePairRabinNPA(r.n, r.alphabet, r.initial, r.transitions, r.accepting, set())
        d = determinise_one_pair_rabin(b)
        for s in d.states:
            if isinstance(s, LabelledTree):
                assert validate_rht(s)
                assert s[(0,)] == s[()]
                assert (1,) not in s
                assert len(s) <= b.n + 1


def test_root_is_subset_construction():
    r1 = random_one_pair_rabin(GenConfig(n=4, letters=2, density=0.4, seed=3))
    tree = initial_rht(r1.initial)
    reach = set(r1.initial)
    for a in "abbaab":
        res = rht_step(tree, a, r1)
        reach = {t for (q, x, t) in r1.transitions if q in reach and x == a}
        if res.target is REJ_SINK:
            assert not reach
            break
        assert res.target[()] == reach
        tree = res.target


def test_capacity_error_names_budget():
    from paritydet.core import CapacityError
    r1 = random_one_pair_rabin(GenConfig(n=4, letters=2, density=0.5, seed=1))
    with pytest.raises(CapacityError) as info:
        determinise_one_pair_rabin(r1, max_states=2)
    assert info.value.budget == 2 and "2" in str(info.value)


def test_lasso_counterexample_free_small():
    r1 = two_state_buchi()
    d = determinise_one_pair_rabin(r1)
    from paritydet.core import det_run_on_lasso
    assert det_run_on_lasso(d, LassoWord((), ("a",)))
    assert not det_run_on_lasso(d, LassoWord(("a",), ("b",)))
