"""
Pretzel parameter lists.

A pretzel link P(p_1, ..., p_n) is encoded by an ordered tuple of nonzero
integers, each the signed crossing count of one pair of strands.  This module
owns the bookkeeping on those tuples: validation, the knot/link parity test,
the standard diagram simplifications for unitary (= ±1) parameters, mirrors,
and a canonical key for mutation classes (reorderings of the parameters).

Everything here is a pure function on immutable tuples and safe to call
concurrently.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum


class ZeroParameterError(ValueError):
    """A parameter is zero: the link is a connected sum of 2-bridge links
    and is handled by the known classifications, not by this package."""


class NotAKnotError(ValueError):
    """The parameter list describes a link with more than one component."""


class Kind(Enum):
    TYPE1 = "type1"   # n odd, every parameter odd
    TYPE2 = "type2"   # n odd, exactly one even parameter
    TYPE3 = "type3"   # n even, exactly one even parameter
    LINK = "link"     # anything else: two or three components

    def is_knot(self):
        return self is not Kind.LINK


def as_params(params) -> tuple[int, ...]:
    """Validate and freeze a parameter sequence."""
    p = tuple(int(x) for x in params)
    if len(p) == 0:
        raise ValueError("parameter list must have at least one entry")
    if any(x == 0 for x in p):
        raise ZeroParameterError(
            "zero parameter: connected sum; see 2-bridge classifications")
    return p


_BRACKET = re.compile(r"\[\s*(-?\d+)\s*\^\s*(-?\d+)\s*\]")


def parse_params(text: str) -> tuple[int, ...]:
    """Parse a comma-separated parameter string.

    Whitespace is tolerated and the bracketed shorthand ``[b^k]`` expands to
    k copies of b, so "[1^4],-3,-3,-3" means (1,1,1,1,-3,-3,-3).
    """
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            raise ValueError("empty entry in parameter string %r" % text)
        m = _BRACKET.fullmatch(tok)
        if m:
            base, count = int(m.group(1)), int(m.group(2))
            if count < 1:
                raise ValueError("repeat count must be positive in %r" % tok)
            out.extend([base] * count)
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise ValueError("bad parameter %r" % tok) from None
    return as_params(out)


def classify_type(params) -> Kind:
    """Knot/link trichotomy from the parities of the parameters.

    The diagram closes to a knot exactly when n and every p_i are odd
    (Type 1), or exactly one p_i is even (Type 2 for n odd, Type 3 for n
    even).  Any other parity pattern gives a link.
    """
    p = as_params(params)
    evens = sum(1 for x in p if x % 2 == 0)
    if evens == 0:
        return Kind.TYPE1 if len(p) % 2 == 1 else Kind.LINK
    if evens == 1:
        return Kind.TYPE2 if len(p) % 2 == 1 else Kind.TYPE3
    return Kind.LINK


def mirror(params) -> tuple[int, ...]:
    """Mirror image: negate every parameter."""
    return tuple(-x for x in as_params(params))


def normalize(params) -> tuple[int, ...]:
    """Simplify unitary parameters by the standard diagram moves.

    Repeatedly (a) delete one +1 together with one -1, and (b) when some
    p_i = ±1 coexists with some p_j = ∓2, delete p_i and replace p_j by ±2
    (the sign of the deleted unitary; a flype absorbs the unitary into the
    2-twist region).  The result has no opposite-sign unitary pair and no
    (±1, ∓2) coexistence; knot/link status is unchanged.  Deletions are
    leftmost-first and the order of the surviving entries is preserved.

    The two rules are confluent (checked by test on random inputs); rule (a)
    is exhausted before rule (b).
    """
    p = list(as_params(params))
    changed = True
    while changed:
        changed = False
        while 1 in p and -1 in p:
            p.remove(1)
            p.remove(-1)
            changed = True
        for unit, two in ((1, -2), (-1, 2)):
            if unit in p and two in p:
                p.remove(unit)
                p[p.index(two)] = -two
                changed = True
                break
    if not p:
        raise ValueError("parameters cancel completely (unlink); "
                         "no normalized form exists")
    return tuple(p)


@dataclass(frozen=True)
class MutationClass:
    """Canonical key for the mutation class of a parameter list.

    Mutants are reorderings of the parameters and share their branched
    double covers, so every obstruction computed from the cover is constant
    on `multiset`.  `mirror_normalized` additionally quotients by the mirror:
    it is the lexicographically smaller of the sorted multiset and the sorted
    negated multiset.
    """
    multiset: tuple[int, ...]
    mirror_normalized: tuple[int, ...]


def mutation_class(params) -> MutationClass:
    p = as_params(params)
    ms = tuple(sorted(p))
    neg = tuple(sorted(-x for x in p))
    return MutationClass(multiset=ms, mirror_normalized=min(ms, neg))


# Small helpers shared by the other modules.

def unitary_count_and_sign(params) -> tuple[int, int]:
    """Return (d, sign) for the unitary entries of a normalized list.

    Normalization guarantees all unitaries share one sign; sign is 0 when
    there are none.
    """
    units = [x for x in params if abs(x) == 1]
    if not units:
        return 0, 0
    if len(set(units)) > 1:
        raise ValueError("mixed-sign unitaries: list is not normalized")
    return len(units), units[0]


def nonunitary(params) -> tuple[int, ...]:
    """The non-unitary parameters, in order."""
    return tuple(x for x in params if abs(x) != 1)
