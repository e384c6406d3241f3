"""
Wu classes, knot signatures, and the Donaldson lattice-embedding obstruction.

For a knot K whose branched double cover bounds the negative definite
plumbing X of a graph with intersection form Q of rank k, sliceness of K
forces a lattice embedding of (Z^k, Q) into the standard negative diagonal
lattice (Z^k, -Id): an integer matrix M, one row per vertex, with
-M M^T = Q.  Donaldson's diagonalization theorem supplies the obstruction;
`find_embedding` decides existence by a complete backtracking search whose
negative answers are exhaustion certificates.

The Wu class w is the unique 0/1 vertex vector with Q(w, x) = Q(x, x) mod 2
for all x; it exists and is unique whenever det Q is odd, i.e. for knots.
Saveliev's formula (Sav00, Theorem 5) computes the knot signature from it:

    sigma(K) = sign(Q) - Q(w, w),

evaluated on the negative definite graph, where sign(Q) = -rank; the result
is negated if the graph was built from the mirror.

Search pruning.  The basis symmetry of the diagonal lattice (signed column
permutations) is broken in two layers, both disabled in oracle mode:

* first-use gauge: a row may only introduce fresh columns as the next
  unused indices, in one contiguous block with positive entries;
* column-orbit canonicalization: columns whose entries agree in every
  placed row are interchangeable, so within each such group a candidate's
  entries must be non-increasing (by column index).  Groups refine as rows
  are placed.  Given any embedding, sorting each row within the groups of
  its moment, in placement order, produces exactly one canonical image:
  the permutations used act trivially on all earlier rows, so completeness
  is preserved.  The fresh-block rule is the special case for the
  untouched-column group.

When sigma = 0 an extra Wu prune applies: the embedded Wu class is
characteristic in the diagonal lattice (the sublattice has odd index), so
all its coordinates are odd, and Q(w,w) = -k then forces them to be exactly
±1.  If moreover no two Wu vertices are adjacent, the Wu rows must have
pairwise disjoint supports partitioning all k columns with entries ±1, so
placing them first (see _search_order) pins them completely and the
remaining rows decompose along the blocks.  Consistency with the oracle is
checked by test on every small corpus graph and on random samples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import as_params
from .plumbing import (StarGraph, bareiss_determinant, incidence_matrix,
                       negative_definite_graph)


class SingularMod2Error(ArithmeticError):
    """Incidence matrix is singular mod 2 (even determinant): the input was
    a link and should have been rejected upstream."""


# ---------------------------------------------------------------------------
# Wu class and signature

def wu_class(g_or_matrix) -> tuple[int, ...]:
    """The unique 0/1 solution of Q(w, x) = Q(x, x) mod 2, by elimination
    over GF(2).  Raises SingularMod2Error when det Q is even."""
    q = _matrix_of(g_or_matrix)
    k = len(q)
    # rows as bitmasks, bit k holds the right-hand side (diagonal parity)
    rows = []
    for i in range(k):
        bits = 0
        for j in range(k):
            if q[i][j] % 2:
                bits |= 1 << j
        if q[i][i] % 2:
            bits |= 1 << k
        rows.append(bits)
    pivots = {}
    for row in rows:
        for col in range(k):
            if not (row >> col) & 1:
                continue
            if col in pivots:
                row ^= pivots[col]
            else:
                pivots[col] = row
                break
        else:
            if (row >> k) & 1:
                raise SingularMod2Error("characteristic congruence unsolvable")
    if len(pivots) < k:
        raise SingularMod2Error("incidence matrix singular mod 2")
    w = [0] * k
    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        val = (row >> k) & 1
        for j in range(col + 1, k):
            if (row >> j) & 1:
                val ^= w[j]
        w[col] = val
    return tuple(w)


def wu_vertices(g_or_matrix) -> tuple[int, ...]:
    """Indices of the Wu-set vertices in incidence-matrix order."""
    w = wu_class(g_or_matrix)
    return tuple(i for i, b in enumerate(w) if b)


def quadratic_form(q, v, w=None) -> int:
    """Q(v, w) for integer coordinate vectors."""
    if w is None:
        w = v
    return sum(q[i][j] * v[i] * w[j]
               for i in range(len(q)) for j in range(len(q)) if v[i] and w[j])


def graph_signature(g: StarGraph) -> int:
    """sign(Q) - Q(w,w) for a negative definite graph (no mirror fixup)."""
    q = incidence_matrix(g)
    w = wu_class(q)
    return -len(q) - quadratic_form(q, w)


def signature(params) -> int:
    """Knot signature via Saveliev's formula on the negative definite graph,
    negated when the graph came from the mirror."""
    g = negative_definite_graph(as_params(params))
    s = graph_signature(g)
    return -s if g.mirrored else s


# ---------------------------------------------------------------------------
# embedding search

class DonaldsonStatus(Enum):
    EMBEDDABLE = "embeddable"
    NOT_EMBEDDABLE = "not_embeddable"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class EmbeddingResult:
    status: DonaldsonStatus
    witness: tuple[tuple[int, ...], ...] | None
    nodes: int

    def __bool__(self):
        return self.status is DonaldsonStatus.EMBEDDABLE


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for find_embedding.

    exhaustive turns on oracle mode: no symmetry breaking, no Wu pruning,
    candidate rows are every integer vector of the right norm.  node_limit
    caps the number of row placements before giving up (INCONCLUSIVE).
    """
    wu_pruning: bool = True
    node_limit: int | None = None
    exhaustive: bool = False

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")


class _LimitHit(Exception):
    pass


def _matrix_of(g_or_matrix):
    if isinstance(g_or_matrix, StarGraph):
        return incidence_matrix(g_or_matrix)
    return [list(r) for r in g_or_matrix]


def _chains_of(q):
    """Chain decomposition of the non-center vertices; incidence order lists
    each chain contiguously from the center out."""
    k = len(q)
    chains = []
    seen = {0}
    for start in range(1, k):
        if start in seen:
            continue
        chain = [start]
        seen.add(start)
        v = start
        while v + 1 < k and q[v][v + 1] == 1:
            v += 1
            chain.append(v)
            seen.add(v)
        chains.append(chain)
    return chains


def _search_order(q, wu):
    """Vertex order: Wu-set vertices first (center among them leading), then
    the center, then chains by decreasing length, walked outward.

    Wu-first matters: with the sigma = 0 pruning the Wu rows are forced to
    single candidates (disjoint +1 blocks), so placing them first turns the
    counting arguments about the Wu set into immediate dead ends instead of
    late contradictions behind a large branching factor.
    """
    order = [v for v in sorted(wu)]
    if 0 not in wu:
        order.append(0)
    placed = set(order)
    for chain in sorted(_chains_of(q), key=lambda c: (-len(c), c[0])):
        order.extend(v for v in chain if v not in placed)
    return order


def find_embedding(g_or_matrix, config: SearchConfig | None = None) -> EmbeddingResult:
    """Complete search for a lattice embedding -M M^T = Q.

    Returns EMBEDDABLE with the first witness in the canonical enumeration
    order (deterministic), NOT_EMBEDDABLE only after exhausting the search
    space, or INCONCLUSIVE when node_limit was hit.  Every positive answer
    is checked with verify_embedding, and |det Q| is asserted to be a
    perfect square (the index identity for a finite-index sublattice of a
    unimodular lattice).
    """
    cfg = config or SearchConfig()
    q = _matrix_of(g_or_matrix)
    k = len(q)
    norms = [-q[i][i] for i in range(k)]
    if any(n <= 0 for n in norms):
        raise ValueError("graph is not negative definite")

    try:
        wu = wu_vertices(q)
    except SingularMod2Error:
        wu = None

    sigma_zero = wu is not None and quadratic_form(q, [1 if i in wu else 0
                                                       for i in range(k)]) == -k
    wu_active = (cfg.wu_pruning and not cfg.exhaustive
                 and wu is not None and len(wu) > 0 and sigma_zero)
    wu_set = set(wu) if wu_active else set()
    wu_independent = wu_active and all(
        q[a][b] == 0 for a in wu for b in wu if a < b)

    order = _search_order(q, wu_set) if not cfg.exhaustive else \
        _search_order(q, set())
    req = [[-q[order[s]][order[t]] for t in range(k)] for s in range(k)]
    is_wu_step = [order[s] in wu_set for s in range(k)]
    last_wu_step = max((s for s in range(k) if is_wu_step[s]), default=-1)
    rows: list[tuple[int, ...]] = []
    state = {"nodes": 0, "used": 0, "wu_covered": 0, "wu_norm_placed": 0,
             "group": [0] * k}

    def limit_hit():
        return cfg.node_limit is not None and state["nodes"] >= cfg.node_limit

    def candidates(s):
        n = norms[order[s]]
        u = k if cfg.exhaustive else state["used"]
        wu_special = wu_independent and is_wu_step[s]
        bound = 1 if wu_special else math.isqrt(n)
        forbidden = state["wu_covered"] if wu_special else 0
        if wu_special and state["wu_norm_placed"] + n > k:
            return
        nprev = s
        prev_rows = [rows[t] for t in range(s)]
        needs = [req[s][t] for t in range(s)]
        # Columns with identical entries in every placed row are
        # interchangeable; canonicalize candidates by requiring entries to
        # be non-increasing along each such group (iterated, so later rows
        # see the refinement).  Off in oracle mode.
        if cfg.exhaustive:
            prev_in_group = [-1] * k
        else:
            group = state["group"]
            last_seen: dict = {}
            prev_in_group = [-1] * k
            for c in range(u):
                gid = group[c]
                if gid in last_seen:
                    prev_in_group[c] = last_seen[gid]
                last_seen[gid] = c
        # suffix norms of previous rows over the used region, for the
        # Cauchy-Schwarz cut (need - partial)^2 <= remaining * suffix
        suffix = []
        for row in prev_rows:
            sfx = [0] * (u + 1)
            for c in range(u - 1, -1, -1):
                sfx[c] = sfx[c + 1] + row[c] * row[c]
            suffix.append(sfx)

        vec = [0] * k
        partials = [0] * nprev

        def fill_fresh(remaining, cap, col):
            # contiguous block of fresh columns, positive non-increasing
            if remaining == 0:
                yield tuple(vec)
                return
            if col >= k:
                return
            top = min(cap, math.isqrt(remaining))
            for a in range(1, top + 1):
                vec[col] = a
                yield from fill_fresh(remaining - a * a, a, col + 1)
                vec[col] = 0

        def fill_used(c, remaining):
            if limit_hit():
                raise _LimitHit
            if c == u:
                for t in range(nprev):
                    if partials[t] != needs[t]:
                        return
                if remaining == 0:
                    yield tuple(vec)
                elif not cfg.exhaustive:
                    yield from fill_fresh(remaining, bound, u)
                return
            top = min(math.isqrt(remaining), bound)
            lo = 0 if (forbidden >> c) & 1 else -top
            hi = 0 if (forbidden >> c) & 1 else top
            p = prev_in_group[c]
            if p >= 0 and vec[p] < hi:
                hi = vec[p]
            for a in range(lo, hi + 1):
                rem = remaining - a * a
                ok = True
                for t in range(nprev):
                    pd = partials[t] + a * prev_rows[t][c]
                    gap = needs[t] - pd
                    if gap * gap > rem * suffix[t][c + 1]:
                        ok = False
                        break
                if not ok:
                    continue
                vec[c] = a
                for t in range(nprev):
                    partials[t] += a * prev_rows[t][c]
                yield from fill_used(c + 1, rem)
                for t in range(nprev):
                    partials[t] -= a * prev_rows[t][c]
                vec[c] = 0

        yield from fill_used(0, n)

    def place(s):
        if s == k:
            return tuple(rows)
        for cand in candidates(s):
            state["nodes"] += 1
            if limit_hit():
                raise _LimitHit
            saved = (state["used"], state["wu_covered"],
                     state["wu_norm_placed"], state["group"])
            support_top = max((c for c in range(k) if cand[c]), default=-1)
            state["used"] = max(state["used"], support_top + 1)
            if wu_independent and is_wu_step[s]:
                mask = 0
                for c in range(k):
                    if cand[c]:
                        mask |= 1 << c
                state["wu_covered"] |= mask
                state["wu_norm_placed"] += norms[order[s]]
            # refine the column-history partition by this row's entries
            old_group = state["group"]
            renumber: dict = {}
            new_group = [0] * k
            for c in range(k):
                key = (old_group[c], cand[c])
                new_group[c] = renumber.setdefault(key, len(renumber))
            state["group"] = new_group
            rows.append(cand)
            ok = True
            if wu_active and s == last_wu_step:
                ok = _wu_completion_ok(rows, [t for t in range(s + 1)
                                              if is_wu_step[t]],
                                       state["used"], k)
            if ok:
                result = place(s + 1)
                if result is not None:
                    return result
            rows.pop()
            (state["used"], state["wu_covered"], state["wu_norm_placed"],
             state["group"]) = saved
        return None

    try:
        found = place(0)
    except _LimitHit:
        return EmbeddingResult(DonaldsonStatus.INCONCLUSIVE, None,
                               state["nodes"])

    if found is None:
        return EmbeddingResult(DonaldsonStatus.NOT_EMBEDDABLE, None,
                               state["nodes"])

    # undo the search reordering: row i of the witness is vertex i
    witness = [None] * k
    for s, v in enumerate(order):
        witness[v] = found[s]
    witness = tuple(witness)
    if not verify_embedding(q, witness):
        raise AssertionError("search produced an invalid embedding")
    det = abs(bareiss_determinant(q))
    if math.isqrt(det) ** 2 != det:
        raise AssertionError("embedding found but |det Q| = %d is not a "
                             "perfect square" % det)
    return EmbeddingResult(DonaldsonStatus.EMBEDDABLE, witness, state["nodes"])


def _wu_completion_ok(rows, wu_steps, used, k):
    if used != k:
        return False
    total = [0] * k
    for s in wu_steps:
        for c in range(k):
            total[c] += rows[s][c]
    return all(abs(x) == 1 for x in total)


def verify_embedding(g_or_matrix, witness) -> bool:
    """True iff -M M^T equals Q entrywise."""
    q = _matrix_of(g_or_matrix)
    k = len(q)
    if len(witness) != k:
        return False
    for i in range(k):
        for j in range(k):
            dot = sum(a * b for a, b in zip(witness[i], witness[j]))
            if -dot != q[i][j]:
                return False
    return True


@dataclass(frozen=True)
class ProjectedLattice:
    """Result of restricting an embedding to a subset of basis columns:
    the vertices with nonzero restricted rows, their rows, and the pairing
    matrix -M M^T they span.  Not in general a subgraph of the original."""
    matrix: tuple[tuple[int, ...], ...]
    rows: tuple[tuple[int, ...], ...]
    vertices: tuple[int, ...]


def project_embedding(witness, basis_subset) -> ProjectedLattice:
    """Restrict embedding rows to the chosen basis columns (0-based) and
    rebuild the pairings among the vertices that survive."""
    cols = sorted(set(basis_subset))
    if not cols:
        raise ValueError("basis subset must be nonempty")
    restricted = []
    vertices = []
    for i, row in enumerate(witness):
        r = tuple(row[c] for c in cols)
        if any(r):
            restricted.append(r)
            vertices.append(i)
    matrix = tuple(
        tuple(-sum(a * b for a, b in zip(r1, r2)) for r2 in restricted)
        for r1 in restricted)
    return ProjectedLattice(matrix, tuple(restricted), tuple(vertices))
