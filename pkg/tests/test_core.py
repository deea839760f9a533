import pytest

from paritydet.core import (ACC_SINK, TOP, AutomatonError, DetParityAutomaton, DetRabinAutomaton, LassoWord,
                            OnePairRabinNPA, ParityNPA, acceptance_sets, buchi_to_one_pair_rabin,
                            det_run_on_lasso, one_pair_rabin_to_parity, parity_to_one_pair_rabin)


def two_state():
    return OnePairRabinNPA(2, ["a"], {0}, {(0, "a", 0), (0, "a", 1), (1, "a", 1)})


def test_top_sorts_after_integers():
    assert sorted([TOP, 3, 0]) == [0, 3, TOP]
    assert TOP != 3 and TOP == TOP


def test_priority_one_is_normalised_to_two():
    p = ParityNPA(1, ["a"], {0}, {(0, "a", 0): 1})
    assert p.c == 2 and p.e == 2


def test_parity_npa_rejects_bad_input():
    with pytest.raises(AutomatonError):
        ParityNPA(1, ["a"], set(), {})
    with pytest.raises(AutomatonError):
        ParityNPA(1, ["a"], {0}, {(0, "b", 0): 1})
    with pytest.raises(AutomatonError):
        ParityNPA(1, ["a"], {0}, {(0, "a", 0): 3}, c=2)
    with pytest.raises(AutomatonError):
        ParityNPA(1, ["a"], {0}, {(TOP, "a", 0): 1})


def test_buchi_embedding():
    base = two_state()
    r1 = buchi_to_one_pair_rabin(base.transitions, base)
    assert r1.accepting == base.transitions and not r1.rejecting
    r0 = buchi_to_one_pair_rabin(set(), base)
    assert not r0.accepting
    r = buchi_to_one_pair_rabin({(0, "a", 1)}, base)
    assert (r.accepting, r.rejecting) == ({(0, "a", 1)}, frozenset())
    with pytest.raises(AutomatonError):
        buchi_to_one_pair_rabin({(1, "a", 0)}, base)


def test_one_pair_rabin_to_parity():
    t1, t2 = (0, "a", 0), (0, "a", 1)
    r = OnePairRabinNPA(2, ["a"], {0}, {t1, t2, (1, "a", 1)}, {t1}, set())
    p = one_pair_rabin_to_parity(r)
    assert p.c == 2 and p.pri[t1] == 2 and p.pri[t2] == 1
    r = OnePairRabinNPA(2, ["a"], {0}, {t1, t2}, {t1}, {t2})
    p = one_pair_rabin_to_parity(r)
    assert (p.c, p.pri[t1], p.pri[t2]) == (3, 2, 3)
    assert parity_to_one_pair_rabin(p) == r
    with pytest.raises(AutomatonError):
        OnePairRabinNPA(2, ["a"], {0}, {t1}, {t1}, {t1})


def test_acceptance_sets_examples():
    pri = {(0, "a", 0): 1, (0, "a", 1): 2, (1, "a", 1): 3, (1, "a", 0): 4, (1, "b", 1): 5}
    p3 = ParityNPA(2, ["a", "b"], {0}, {k: v for k, v in pri.items() if v <= 3})
    r, a, n = acceptance_sets(p3, 2)
    assert r == {(1, "a", 1)} and a == {(0, "a", 1)} and n == {(0, "a", 0), (0, "a", 1)}
    p2 = ParityNPA(2, ["a"], {0}, {(0, "a", 0): 1, (0, "a", 1): 2})
    r, a, n = acceptance_sets(p2, 2)
    assert r == set() and n == p2.transitions
    p5 = ParityNPA(2, ["a", "b"], {0}, pri)
    r4, a4, _ = acceptance_sets(p5, 4)
    assert r4 == {(1, "b", 1)} and a4 == {(1, "a", 0)}
    assert acceptance_sets(p5, 2)[1] == {(0, "a", 1), (1, "a", 0)}
    with pytest.raises(AutomatonError):
        acceptance_sets(p5, 3)
    with pytest.raises(AutomatonError):
        acceptance_sets(p5, 6)


def test_acceptance_sets_partition():
    pri = {(0, "a", 0): 1, (0, "a", 1): 2, (1, "a", 1): 3, (1, "a", 0): 4, (1, "b", 1): 5, (0, "b", 0): 6}
    p = ParityNPA(2, ["a", "b"], {0}, pri)
    for a in range(2, p.e + 1, 2):
        r, acc, n = acceptance_sets(p, a)
        assert acc <= n and not (r & n) and r | n == p.transitions
    assert acceptance_sets(p, p.e)[0] == set()


def single_state_dpa(copri):
    return DetParityAutomaton(["s"], 0, ("a",), {(0, "a"): 0}, {(0, "a"): copri}, 3)


def test_det_run_on_parity():
    w = LassoWord((), ("a",))
    assert det_run_on_lasso(single_state_dpa(2), w)
    assert not det_run_on_lasso(single_state_dpa(1), w)
    with pytest.raises(AutomatonError):
        det_run_on_lasso(single_state_dpa(2), LassoWord((), ("b",)))


def test_det_run_on_rabin():
    d = DetRabinAutomaton(["s", ACC_SINK], 0, ("a", "b"), {(0, "a"): 0, (0, "b"): 1, (1, "a"): 1, (1, "b"): 1},
                          {(0, "a"): frozenset({0}), (0, "b"): frozenset({0}), (1, "a"): frozenset({0}),
                           (1, "b"): frozenset({0})},
                          {k: frozenset({0}) for k in [(0, "a"), (0, "b"), (1, "a"), (1, "b")]}, ["0"])
    assert det_run_on_lasso(d, LassoWord((), ("a",)))
    d.stable[0, "a"] = frozenset()
    assert not det_run_on_lasso(d, LassoWord((), ("a",)))
    assert det_run_on_lasso(d, LassoWord(("a", "b"), ("a",)))


def test_lasso_needs_cycle():
    with pytest.raises(AutomatonError):
        LassoWord(("a",), ())
