"""Automata behind the golden HOA files.

Run this module as a script to rewrite ``tests/golden`` after an
intentional change of the printer.
"""

import pathlib

from paritydet.core import TOP, OnePairRabinNPA, ParityNPA, one_pair_rabin_to_parity
from paritydet.fullauto import fixed_letters, full_automaton
from paritydet.lir import determinise_parity_to_dpa, to_max_parity
from paritydet.nht import determinise_parity_to_rabin
from paritydet.oracle import GenConfig, random_npa, random_one_pair_rabin
from paritydet.rht import determinise_one_pair_rabin

GOLDEN = pathlib.Path(__file__).parent / "golden"


def two_state_buchi():
    trans = {(0, "a", 0), (0, "a", 1), (1, "a", 1)}
    acc = {(0, "a", 1), (1, "a", 1)}
    return OnePairRabinNPA(2, ["a"], {0}, trans, acc, set())


def recipes():
    npa3 = random_npa(GenConfig(n=3, c=3, letters=2, density=0.4, seed=7))
    npa4 = random_npa(GenConfig(n=3, c=4, letters=2, density=0.4, seed=11))
    npa5 = random_npa(GenConfig(n=2, c=5, letters=3, density=0.5, seed=3))
    npa_top = random_npa(GenConfig(n=2, c=3, letters=2, density=0.4, top_probability=0.3, seed=5))
    buchi = ParityNPA(2, ["a", "b"], {0}, {(0, "a", 0): 1, (0, "b", 1): 2, (1, "b", 1): 2, (1, "a", 0): 1})
    r1 = random_one_pair_rabin(GenConfig(n=3, letters=2, density=0.4, seed=2))
    r1_top = random_one_pair_rabin(GenConfig(n=2, letters=2, density=0.5, top_probability=0.2, seed=9))
    loop = ParityNPA(1, ["a"], {0}, {(0, "a", 0): 2, (0, "a", TOP): 1})
    full = full_automaton(fixed_letters(2, 3), 2, 3)
    buchi2 = two_state_buchi()
    return {
        "npa_c3": npa3,
        "npa_c4": npa4,
        "npa_c5_three_letters": npa5,
        "npa_top": npa_top,
        "buchi_npa": buchi,
        "rabin1": r1,
        "rabin1_top": r1_top,
        "buchi_two_state": buchi2,
        "dra_npa_c3": determinise_parity_to_rabin(npa3),
        "dra_npa_c4": determinise_parity_to_rabin(npa4),
        "dra_npa_c5": determinise_parity_to_rabin(npa5),
        "dra_buchi": determinise_parity_to_rabin(buchi),
        "dra_rabin1": determinise_one_pair_rabin(r1),
        "dra_buchi_two_state": determinise_one_pair_rabin(buchi2),
        "dpa_npa_c3": determinise_parity_to_dpa(npa3),
        "dpa_npa_c4": determinise_parity_to_dpa(npa4),
        "dpa_rabin1": determinise_parity_to_dpa(one_pair_rabin_to_parity(r1)),
        "dpa_max_npa_c4": to_max_parity(determinise_parity_to_dpa(npa4)),
        "dpa_top_loop": determinise_parity_to_dpa(loop),
        "full_p2_3": full,
    }


if __name__ == "__main__":
    from paritydet.hoa import print_hoa

    GOLDEN.mkdir(exist_ok=True)
    for name, aut in recipes().items():
        (GOLDEN / f"{name}.hoa").write_text(print_hoa(aut), encoding="utf-8")
        print("wrote", name)
