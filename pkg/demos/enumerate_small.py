"""Desk-scale reproduction of the fibered-ribbon classification.

Enumerate every pretzel-knot mutation class with up to 5 strands and
parameters of absolute value up to 5, then check the classification claim:
each class that is fiberable (some ordering fibered), passes all slice
obstructions and is not exceptional belongs to one of the four ribbon
families.  Larger bounds are exercised by the acceptance suite.
"""

from collections import Counter

from pretzel import enumerate_classes


def run(max_strands=5, max_param=5):
    records = list(enumerate_classes(max_strands, max_param))
    counts = Counter(r.status.value for r in records)
    print("bounds: %d strands, |p| <= %d -> %d classes"
          % (max_strands, max_param, len(records)))
    for status, count in sorted(counts.items()):
        print("  %-20s %d" % (status, count))

    survivors = [r for r in records
                 if r.fiberable and not r.exceptional
                 and r.det_square and r.sigma == 0
                 and r.donaldson == "embeddable"]
    print("\nfiberable classes passing every obstruction:")
    for r in survivors:
        print("  %-22s family=%-3s subcase=%s"
              % (",".join(map(str, r.class_key)), r.family or "-",
                 r.subcase.value))
    missing = [r for r in survivors if not r.family]
    print("\nclasses outside the four families:", len(missing))


if __name__ == "__main__":
    run()
