"""Follow a two-state Büchi automaton through the root-history-tree construction.

Run:  python demos/buchi_walkthrough.py
"""

from paritydet import OnePairRabinNPA, determinise_one_pair_rabin, initial_rht, print_hoa, rht_step
from paritydet.dot import export_dot


def main():
    # q0 -a-> q0, q0 -a-> q1 (accepting), q1 -a-> q1 (accepting)
    trans = {(0, "a", 0), (0, "a", 1), (1, "a", 1)}
    acc = {(0, "a", 1), (1, "a", 1)}
    buchi = OnePairRabinNPA(2, ["a"], {0}, trans, acc, set())

    tree = initial_rht(buchi.initial)
    print("initial tree:      ", tree.describe())
    for i in range(1, 4):
        res = rht_step(tree, "a", buchi)
        print(f"after {i} letter(s):  {res.target.describe():<30} accepting={sorted(res.accepting)}")
        tree = res.target

    dra = determinise_one_pair_rabin(buchi)
    print(f"\ndeterministic Rabin automaton: {len(dra.states)} states, {dra.num_pairs} pair(s)\n")
    print(print_hoa(dra))
    print("DOT rendering of the last tree state:\n")
    print(export_dot(tree, "tree"))


if __name__ == "__main__":
    main()
