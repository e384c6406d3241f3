"""
Acceptance suite: every criterion as one test, each printing a PASS line.

The two enumeration-driven criteria share one bounded enumeration run
(session fixture) so the expensive Donaldson certificates are computed once.
Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import random
import subprocess
import sys
import time

import pytest

from pretzel import (DonaldsonStatus, FiberStatus, SearchConfig, Status,
                     Subcase, analyze, determinant, enumerate_classes,
                     find_embedding, graph_signature, is_fibered, mirror,
                     negative_definite_graph, signature, verify_embedding)

from conftest import random_knot_params
from goeritz_oracle import goeritz_signature
from test_lattice import (KNOWN_1075_ROWS, matches_up_to_canonical_symmetry,
                          rank5_corpus_graphs)


def _ok(n, msg):
    print("ACCEPTANCE %d: PASS %s" % (n, msg))


# ---------------------------------------------------------------------------
# shared enumeration at the widest required bounds

@pytest.fixture(scope="module")
def big_enumeration():
    cache = {}
    t0 = time.monotonic()
    records = list(enumerate_classes(8, 7, cache=cache))
    elapsed = time.monotonic() - t0
    return records, cache, elapsed


def has_unitary(ms):
    return 1 in ms or -1 in ms


# ---------------------------------------------------------------------------

def test_criterion_1_1075_pipeline():
    t0 = time.monotonic()
    v = analyze((1, 1, 1, 1, -3, -3, -3))
    elapsed = time.monotonic() - t0
    assert v.kind.value == "type1"
    assert v.fibered.status is FiberStatus.FIBERED
    assert v.obstructions.signature == 0
    assert v.obstructions.det_value == 81 == 9 ** 2
    assert v.obstructions.det_is_square
    don = v.obstructions.donaldson
    assert don.status is DonaldsonStatus.EMBEDDABLE
    g = negative_definite_graph((1, 1, 1, 1, -3, -3, -3))
    assert verify_embedding(g, don.witness)
    assert matches_up_to_canonical_symmetry(don.witness, KNOWN_1075_ROWS)
    assert v.family.tag == "F1"
    assert v.status is Status.RIBBON_KNOWN
    assert elapsed < 1.0
    _ok(1, "10_75 pipeline verdict complete in %.3fs" % elapsed)


def test_criterion_2_type1_uniqueness():
    t0 = time.monotonic()
    for m in range(1, 7):
        params = (1,) * (m + 1) + (-3,) * m
        res = find_embedding(negative_definite_graph(params))
        if m == 3:
            assert res.status is DonaldsonStatus.EMBEDDABLE, m
        else:
            # a NOT_EMBEDDABLE answer is only produced on full exhaustion
            assert res.status is DonaldsonStatus.NOT_EMBEDDABLE, m
            assert res.nodes > 0
    elapsed = time.monotonic() - t0
    assert elapsed < 60.0
    _ok(2, "Type 1 family embeds exactly at m=3 (m=1..6, %.1fs)" % elapsed)


def test_criterion_3_fiberedness_vectors():
    expected = {
        (5, -5, 7, -7, 4): FiberStatus.FIBERED,
        (7, 5, -5, -7, 4): FiberStatus.NOT_FIBERED,
        (5, 7, -5, -7, 2): FiberStatus.NOT_FIBERED,
        (3, -7, 5, -5, 8): FiberStatus.FIBERED,
        (3, 5, -7, -5, 8): FiberStatus.NOT_FIBERED,
        (-3, 3, -3, 2): FiberStatus.FIBERED,
        (-3, 3, -3, 4): FiberStatus.NOT_FIBERED,
    }
    for p, want in expected.items():
        assert is_fibered(p).status is want, p
    # (7,-5,-7,5,4) is KNOWN-TENSION: claimed fibered by the source, but its
    # auxiliary link matches no model form under the declared comparison
    # moves; excluded from pass/fail (see test_fibered for the pin).
    _ok(3, "7 fiberedness vectors (KNOWN-TENSION vector excluded)")


def test_criterion_4_non_slice_propositions(big_enumeration):
    records, _, elapsed = big_enumeration
    assert analyze((1, 5, -3, -4)).status is Status.NOT_SLICE

    t2a = [r for r in records
           if r.fiberable and r.subcase is Subcase.T2A
           and has_unitary(r.class_key)]
    assert len(t2a) >= 3
    for r in t2a:
        assert r.status is Status.NOT_SLICE, r.class_key

    t3b = [r for r in records
           if r.fiberable and r.subcase is Subcase.T3B
           and has_unitary(r.class_key)]
    for r in t3b:
        assert r.status is Status.NOT_SLICE, r.class_key

    for r in records:
        if r.fiberable and has_unitary(r.class_key):
            assert r.subcase not in (Subcase.T2B, Subcase.T3C), r.class_key

    # Type 1 uniqueness at class level: among fibered Type 1 classes only
    # 10_75 survives the obstructions
    type1_alive = [r.class_key for r in records
                   if r.fiberable and r.subcase is Subcase.T1
                   and r.status is not Status.NOT_SLICE]
    assert type1_alive == [(-3, -3, -3, 1, 1, 1, 1)]

    # family instances are ribbon, so every obstruction must vanish on them
    for r in records:
        if r.family:
            assert r.det_square and r.sigma == 0, r.class_key
            assert r.donaldson == "embeddable", r.class_key

    assert elapsed < 600.0
    _ok(4, "non-slice propositions on %d classes: %d Type-2A and %d Type-3B "
           "fibered unitary classes all NotSlice, no 2B/3C (%.0fs)"
        % (len(records), len(t2a), len(t3b), elapsed))


# Composite (non-prime) classes may be whitelisted here per the enumeration
# design; the run at these bounds needed none.
COMPOSITE_WHITELIST: set = set()


def test_criterion_5_main_classification_regression(big_enumeration):
    records, cache, elapsed87 = big_enumeration
    t0 = time.monotonic()
    records77 = list(enumerate_classes(7, 7, cache=cache))
    elapsed = time.monotonic() - t0 + elapsed87
    violations = []
    for r in records77:
        if not r.fiberable or r.exceptional:
            continue
        if not (r.det_square and r.sigma == 0 and r.donaldson == "embeddable"):
            continue
        if r.family == "" and r.class_key not in COMPOSITE_WHITELIST:
            violations.append(r.class_key)
    assert violations == []
    assert elapsed < 1800.0
    _ok(5, "fibered-ribbon regression over %d classes, zero violations "
           "(%.0fs)" % (len(records77), elapsed))


def random_family_instance(rng, max_rank=12):
    """A random F2/F3/F4 multiset whose reduced graph has rank <= max_rank."""
    while True:
        tag = rng.choice(("F2", "F3", "F4"))
        if tag == "F2":
            r = rng.randint(1, 3)
            qs = [rng.choice((3, 5, 7)) for _ in range(r)]
            k = rng.choice((2, 4, 6, -2, -4, -6))
            ms = [q for q in qs] + [-q for q in qs] + [k]
        elif tag == "F3":
            t = rng.randint(0, 4)
            r = rng.randint(0, 2)
            qs = [rng.choice((3, 5, 7)) for _ in range(r)]
            ms = [1, 3, t + 1, -4 - t] + qs + [-q for q in qs]
        else:
            k = rng.randint(2, 5)
            r = rng.randint(0, 2)
            qs = [rng.choice([q for q in (3, 5, 7) if q > k])
                  for _ in range(r)]
            ms = [k, -k - 1] + qs + [-q for q in qs]
        if rng.random() < 0.5:
            ms = [-x for x in ms]
        p = tuple(sorted(ms))
        if negative_definite_graph(p).rank <= max_rank:
            return p


def test_criterion_6_family_soundness():
    rng = random.Random(190286)
    t0 = time.monotonic()
    for i in range(200):
        p = random_family_instance(rng)
        assert signature(p) == 0, p
        d = determinant(p)
        import math
        assert math.isqrt(d) ** 2 == d, p
        res = find_embedding(negative_definite_graph(p))
        assert res.status is DonaldsonStatus.EMBEDDABLE, p
    _ok(6, "200 random F2/F3/F4 instances: sigma=0, square det, embeddable "
           "(%.0fs)" % (time.monotonic() - t0))


def test_criterion_7_oracle_equivalence():
    graphs = rank5_corpus_graphs()
    assert graphs
    for p, g in graphs:
        default = find_embedding(g)
        oracle = find_embedding(g, SearchConfig(exhaustive=True))
        assert bool(default) == bool(oracle), p
        if graph_signature(g) == 0:
            on = find_embedding(g, SearchConfig(wu_pruning=True))
            off = find_embedding(g, SearchConfig(wu_pruning=False))
            assert bool(on) == bool(off), p
    _ok(7, "default == exhaustive on %d rank<=5 corpus graphs; Wu pruning "
           "consistent at sigma=0" % len(graphs))


def test_criterion_8_signature_cross_check():
    rng = random.Random(55221)
    seen = 0
    while seen < 50:
        p = random_knot_params(rng, max_strands=6, max_abs=7, min_strands=2)
        assert signature(p) == goeritz_signature(p), p
        assert signature(mirror(p)) == -signature(p), p
        seen += 1
    _ok(8, "plumbing signature == Goeritz/Gordon-Litherland oracle on 50 "
           "random knots, with mirror antisymmetry")


def test_criterion_9_enumeration_determinism(tmp_path):
    outputs = []
    for jobs in (1, 4, 8):
        out = tmp_path / ("report_j%d.csv" % jobs)
        r = subprocess.run(
            [sys.executable, "-m", "pretzel.cli", "enumerate",
             "--max-strands", "5", "--max-param", "4",
             "--jobs", str(jobs), "--out", str(out)],
            capture_output=True, text=True)
        assert r.returncode == 0, r.stderr
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1] == outputs[2]
    _ok(9, "enumeration reports byte-identical across --jobs 1/4/8")
