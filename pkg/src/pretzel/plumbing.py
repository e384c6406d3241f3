"""
Plumbing graphs for branched double covers of pretzel knots.

The double cover of S^3 branched over P([1^{±d}], p_{d+1}, ..., p_n) is the
Seifert fibered space bounding the plumbed 4-manifold of a star-shaped graph:
a central vertex of weight ∓d joined to one vertex of weight p_i for every
non-unitary parameter.  Its intersection form is the incidence matrix of the
graph (diagonal = weights, off-diagonal = 1 per edge).

The cover bounds a negative definite plumbing exactly when the Euler number

    e(Y) = ∓d - sum(1/p_i)

is negative; when it is positive we pass to the mirror knot first.  The
negative definite form is reached by trading every leg of positive weight
q >= 2 for a chain of (q-1) vertices of weight -2 and lowering the central
weight by 1 per substitution (a sequence of blow-ups and blow-downs; see
Neumann-Raymond for the normal form).  The text of the construction only
mentions q > 2, but a +2 leg must be converted as well: the chain-length
formula is consistent at q = 2 and the final graph needs all leg weights
at most -2.

All arithmetic is exact (big integers and fractions); nothing here touches
floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import NotAKnotError, as_params, classify_type, mirror, \
    nonunitary, unitary_count_and_sign


class PlumbingError(RuntimeError):
    """The construction reached a state the theory rules out (corrupt
    input or an implementation bug); never raised for genuine knots."""


@dataclass(frozen=True)
class StarGraph:
    """Star-shaped weighted graph with chain legs.

    legs[i] is the chain of weights of leg i, first entry adjacent to the
    center, consecutive entries adjacent.  `mirrored` records whether the
    input parameters were replaced by their mirror to reach e(Y) < 0.
    """
    center_weight: int
    legs: tuple[tuple[int, ...], ...]
    mirrored: bool = False

    @property
    def rank(self) -> int:
        return 1 + sum(len(leg) for leg in self.legs)


def _require_knot(params):
    """Validate a knot parameter list for the plumbing recipe.

    Only opposite-sign unitary pairs are removed (the star graph needs all
    unitaries on one side to form the central weight); a (±1, ∓2) pair is
    left alone, matching the construction on the presented diagram.  The
    recipe is presentation-robust anyway: the Euler number, the determinant
    and the reduced negative definite graph agree with those of the fully
    normalized list, since both present the same Seifert fibered cover.
    """
    p = list(as_params(params))
    if not classify_type(p).is_knot():
        raise NotAKnotError("operation defined for pretzel knots only")
    while 1 in p and -1 in p:
        p.remove(1)
        p.remove(-1)
    return tuple(p)


def star_graph(params) -> StarGraph:
    """The star plumbing graph of a pretzel knot: center ∓d for d unitaries
    of sign ±, one single-vertex leg per non-unitary parameter."""
    p = _require_knot(params)
    d, sign = unitary_count_and_sign(p)
    center = -sign * d
    return StarGraph(center, tuple((w,) for w in nonunitary(p)))


def euler_number(params) -> Fraction:
    """Exact Euler number e(Y) = ∓d - sum over non-unitary 1/p_i."""
    p = _require_knot(params)
    d, sign = unitary_count_and_sign(p)
    return Fraction(-sign * d) - sum(Fraction(1, w) for w in nonunitary(p))


def negative_definite_graph(params) -> StarGraph:
    """The canonical negative definite plumbing graph of the knot (mirroring
    first when e(Y) > 0).  The result is verified negative definite."""
    p = _require_knot(params)
    e = euler_number(p)
    mirrored = False
    if e == 0:
        # |H_1| = |e| * |product of p_i| is odd and nonzero for a knot.
        raise PlumbingError("Euler number zero: impossible for a knot")
    if e > 0:
        p = mirror(p)
        mirrored = True
    d, sign = unitary_count_and_sign(p)
    center = -sign * d
    legs = []
    for w in nonunitary(p):
        if w >= 2:
            legs.append((-2,) * (w - 1))
            center -= 1
        else:
            legs.append((w,))
    g = StarGraph(center, tuple(legs), mirrored)
    if not is_negative_definite(incidence_matrix(g)):
        raise PlumbingError("reduction failed to produce a negative definite "
                            "graph for %r" % (params,))
    return g


def incidence_matrix(g: StarGraph) -> list[list[int]]:
    """Symmetric incidence matrix: diagonal weights, 1 per edge.

    Vertex order: center first, then each leg in order, chains listed from
    the center outward.
    """
    k = g.rank
    m = [[0] * k for _ in range(k)]
    m[0][0] = g.center_weight
    idx = 1
    for leg in g.legs:
        prev = 0
        for w in leg:
            m[idx][idx] = w
            m[idx][prev] = m[prev][idx] = 1
            prev = idx
            idx += 1
    return m


def bareiss_determinant(matrix) -> int:
    """Exact determinant of an integer matrix by fraction-free Bareiss
    elimination with row pivoting."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for c in range(n - 1):
        if a[c][c] == 0:
            for r in range(c + 1, n):
                if a[r][c] != 0:
                    a[c], a[r] = a[r], a[c]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                a[r][j] = (a[r][j] * a[c][c] - a[r][c] * a[c][j]) // prev
            a[r][c] = 0
        prev = a[c][c]
    return sign * a[n - 1][n - 1]


def determinant(params) -> int:
    """Knot determinant |det Q| of the star graph's incidence matrix,
    in exact integer arithmetic.  Always odd for a knot."""
    return abs(bareiss_determinant(incidence_matrix(star_graph(params))))


def is_negative_definite(matrix) -> bool:
    """Leading-principal-minor test: minors must alternate in sign starting
    negative.  Exact; a zero minor fails.

    Bareiss pivots are the leading principal minors, so one swap-free
    elimination yields the whole sequence.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    prev = 1
    for c in range(n):
        minor = a[c][c]  # leading principal minor of size c+1
        if minor == 0 or (minor > 0) != (c % 2 == 1):
            return False
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                a[r][j] = (a[r][j] * minor - a[r][c] * a[c][j]) // prev
            a[r][c] = 0
        prev = minor
    return True


def to_dot(g: StarGraph, wu_vertices=()) -> str:
    """DOT rendering of a star graph.  The center is marked and the Wu-set
    vertices carry a highlight attribute."""
    wu = set(wu_vertices)
    lines = ["graph pretzel {"]
    for i, w in enumerate(_weights(g)):
        attrs = ['label="%d"' % w]
        if i == 0:
            attrs.append("shape=doublecircle")
            attrs.append('center="true"')
        if i in wu:
            attrs.append('color="red"')
            attrs.append('style="filled"')
            attrs.append('fillcolor="lightpink"')
            attrs.append('wu="true"')
        lines.append("  v%d [%s];" % (i, ", ".join(attrs)))
    idx = 1
    for leg in g.legs:
        prev = 0
        for _ in leg:
            lines.append("  v%d -- v%d;" % (prev, idx))
            prev = idx
            idx += 1
    lines.append("}")
    return "\n".join(lines)


def _weights(g: StarGraph):
    out = [g.center_weight]
    for leg in g.legs:
        out.extend(leg)
    return out
