#!/usr/bin/env python3
"""Apply braid words to free-group generators through a local action."""

from braidact import (
    ARTIN_CORE,
    AutF2,
    constant_rep,
    endo_of_braid,
    local_endo,
    parse_braid,
    verify_braid_relations,
)

artin = constant_rep(ARTIN_CORE, 3)

print("== single crossings ==")
print("s1  :", local_endo(artin, 1, +1))
print("s1^-:", local_endo(artin, 1, -1))
print("s2  :", local_endo(artin, 2, +1))

print()
print("== a full braid word ==")
braid = parse_braid("1 2 -1", 3)
print("braid 1 2 -1 acts as:", endo_of_braid(artin, braid))

print()
print("== the trefoil braid on two strands ==")
artin2 = constant_rep(ARTIN_CORE, 2)
print("s1^3 acts as:", endo_of_braid(artin2, parse_braid("1 1 1", 2)))

print()
print("== defining relations ==")
for core_text in ("abA,a", "B,a", "ABa,bba"):
    rep = constant_rep(AutF2.parse(core_text), 4)
    print(f"core ({core_text}) on 4 strands satisfies the braid relations:",
          verify_braid_relations(rep))
