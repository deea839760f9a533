"""Determinise a small parity automaton twice and compare the results on lassos.

The Rabin output is built from nested history trees, the parity output from
later introduction records; both are checked against the nondeterministic
automaton on every lasso with |u| <= 2 and |v| <= 3.

Run:  python demos/parity_to_dpa.py [seed]
"""

import sys

from paritydet import (GenConfig, check_equivalence, determinise_parity_to_dpa, determinise_parity_to_rabin,
                       random_npa)
from paritydet.core import ACC_SINK, REJ_SINK
from paritydet.lir import describe


def main(seed=3):
    p = random_npa(GenConfig(n=3, c=4, letters=2, density=0.4, seed=seed))
    print(p)
    for (q, a, r), k in sorted(p.pri.items(), key=str):
        print(f"  {q} -{a}-> {r}  priority {k}")

    dra = determinise_parity_to_rabin(p)
    dpa = determinise_parity_to_dpa(p)
    print(f"\nRabin: {len(dra.states)} states, {dra.num_pairs} pairs")
    print(f"parity: {len(dpa.states)} states, co-priorities in [1, {dpa.max_copri}]\n")
    for i, s in enumerate(dpa.states):
        name = "ACC" if s is ACC_SINK else "REJ" if s is REJ_SINK else describe(s)
        moves = ", ".join(f"{a}->{dpa.delta[i, a]} ({dpa.copri[i, a]})" for a in dpa.alphabet)
        print(f"  s{i}: {name}\n       {moves}")

    for name, det in (("Rabin", dra), ("parity", dpa)):
        rep = check_equivalence(p, det, exhaustive=(2, 3))
        print(f"\n{name}: {'agrees' if rep else 'DISAGREES'} on {rep.checked} lassos")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 3)
