"""Print the exact structure counts the state-space bounds are built on.

Run:  python demos/counting.py
"""

from math import factorial

from paritydet.enumeration import count_lir_nht_states, count_lir_pairs, growth_report
from paritydet.reports import text_table


def main():
    print("history trees and root history trees")
    print(text_table(growth_report(8), ["n", "ht", "rht", "ratio", "monotone"]))

    rows = []
    for n in (2, 3, 4):
        rows.append({"n": n, "t(n,n+1)": count_lir_pairs(n, n + 1, True), "n!^2": factorial(n) ** 2,
                     "t'(n,n)": count_lir_pairs(n, n, False), "(n-1)!n!": factorial(n - 1) * factorial(n)})
    print("tree/record pairs of the one-pair Rabin construction")
    print(text_table(rows))

    rows = []
    for n in (1, 2, 3, 4):
        for c in (2, 3, 4):
            rep = count_lir_nht_states(n, c, check_injective=False)
            rows.append({"n": n, "c": c, **rep.counts})
    print("parity states, spiked vs unspiked")
    print(text_table(rows))


if __name__ == "__main__":
    main()
