"""Tour of the fiberedness decision, one knot per subcase.

Type 1 knots are decided by a parameter pattern alone.  Types 2 and 3 go
through the auxiliary ±2-link L', and in the balanced subcases (2B, 3B)
the answer genuinely depends on the order of the parameters, not just on
their multiset: reordering is a mutation, and mutants can disagree about
fiberedness while sharing every invariant of the double cover.
"""

from pretzel import Kind, aux_link, fiber_subcase, is_fibered
from pretzel.fibered import even_last_orientations
from pretzel.core import normalize, unitary_count_and_sign

TOUR = [
    (1, 1, 1, 1, -3, -3, -3),   # T1, fibered (10_75)
    (-3, -3, -3),               # T1, not fibered: no unitary entry
    (1, 1, 1, 3, -3, -3, 2),    # T2A, fibered: counts differ by 2, even = 2
    (3, -7, 5, -5, 8),          # T2B, fibered: L' alternates onto the tail
    (3, 5, -7, -5, 8),          # T2B, same multiset, wrong order
    (1, -3, 2),                 # T2C: isotopic to a Type 3 pretzel
    (1, 2, 3, -5),              # T3A, fibered
    (1, 5, -3, -4),             # T3B, fibered
    (-3, 3, -3, 2),             # T3C, fibered: unique minimal parameter
    (-3, 3, -3, 4),             # T3C, tie among minimal parameters
]


def show(params):
    v = is_fibered(params)
    p = normalize(params)
    aux = ""
    if fiber_subcase_safe(p) not in ("T1",):
        kind = Kind.TYPE2 if len(p) % 2 == 1 else Kind.TYPE3
        d, sign = unitary_count_and_sign(p)
        seq = (sign,) * d + even_last_orientations(p)[0]
        aux = "  L' = %s" % (aux_link(seq, kind),)
    print("P%-24s %-4s %s%s"
          % (str(params), v.subcase.value, v.status.value, aux))


def fiber_subcase_safe(p):
    try:
        return fiber_subcase(p).value
    except Exception:
        return "?"


if __name__ == "__main__":
    for params in TOUR:
        show(params)
