"""Walk through the headline examples: one multiset, four different fates.

The four pretzel knots P(5,-5,7,-7,4), P(7,5,-5,-7,4), P(7,-5,-7,5,4) and
P(5,7,-5,-7,2) only differ by reordering (mutation) or by swapping the even
parameter.  Mutants share their branched double covers, so every obstruction
computed from the cover agrees on them; fiberedness, by contrast, depends on
the ordering.  This script shows how the analyzer reports each case.
"""

from pretzel import analyze

EXAMPLES = [
    ((5, -5, 7, -7, 4), "ribbon and fibered"),
    ((7, 5, -5, -7, 4), "ribbon, not fibered"),
    ((7, -5, -7, 5, 4), "fibered per the literature (see KNOWN-TENSION note)"),
    ((5, 7, -5, -7, 2), "this ordering is neither fibered nor (conjecturally)"
     " ribbon; its class still holds a ribbon knot"),
    ((1, 1, 1, 1, -3, -3, -3), "the knot 10_75: the unique Type 1 case"),
    ((1, 5, -3, -4), "fibered Type 3B with a unitary entry: never slice"),
    ((3, 5, -3, -5, 7), "all obstructions vanish, sliceness open"),
]


def show(params, note):
    v = analyze(params)
    rep = v.obstructions
    don = rep.donaldson.status.value if rep.donaldson else "skipped"
    fam = v.family.tag if v.family else "-"
    print("P%s  (%s)" % (str(params), note))
    print("   fibered=%s subcase=%s  det=%d sigma=%d donaldson=%s"
          % (v.fibered.status.value, v.fibered.subcase.value,
             rep.det_value, rep.signature, don))
    print("   family=%s detectably_ribbon=%s  ->  %s"
          % (fam, v.detectably_ribbon, v.status.value))
    print()


if __name__ == "__main__":
    for params, note in EXAMPLES:
        show(params, note)
