#!/usr/bin/env python3
"""Classify middle terms of short exact sequences two independent ways.

The fast route enumerates candidate groups prime by prime and tests
subgroup/quotient realizability with Littlewood-Richardson tableaux;
the oracle realizes each candidate as explicit tuples and searches its
subgroup lattice exhaustively.  The demo runs both on every pair of
abelian groups with |A| * |B| <= 32 and prints the classification.
"""

from cpsums.extensions import (
    all_abelian_groups_of_order,
    brute_force_middle_terms,
    middle_candidates_between,
)

BOUND = 32

print(f"middle terms of 0 -> A -> G -> B -> 0 for |A|*|B| <= {BOUND}")
print("(every line is checked against the exhaustive subgroup oracle)")
print()
shown = 0
for na in range(2, BOUND + 1):
    for nb in range(2, BOUND // na + 1):
        for a in all_abelian_groups_of_order(na):
            for b in all_abelian_groups_of_order(nb):
                smart = middle_candidates_between(a, b)
                oracle = brute_force_middle_terms(a, b)
                assert smart == oracle, (a, b)
                if len(smart) > 1:
                    shown += 1
                    names = ", ".join(str(g) for g in smart)
                    print(f"  A = {str(a):<12} B = {str(b):<12} G in {{{names}}}")

print()
print(f"{shown} genuinely ambiguous sequences found; every classification")
print("agreed with the brute-force oracle.")
