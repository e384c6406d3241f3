"""
pretzelc: command-line front end.

Subcommands:
  analyze    full verdict for one parameter list (human text or --json)
  embed      Donaldson embedding witness or exhaustion certificate
  graph      negative definite plumbing graph as DOT, Wu set highlighted
  enumerate  bounded enumeration of mutation classes with a CSV/JSONL report

Exit codes: 0 = verdict produced, 2 = input error (malformed, zero
parameter, link where a knot is required, unwritable output), 3 = search
gave up at the node limit.  PRETZELC_NODE_LIMIT provides a default for
--node-limit.  Searches on graphs of rank > 12 require an explicit limit.

JSON schema of an analysis record (all keys always present):
  input str, params [int], kind str, fibered str, subcase str,
  det int, det_square bool, sigma int,
  donaldson str (embeddable|not_embeddable|inconclusive|skipped),
  witness [[int]]|null, nodes int,
  family str|null, family_pairs [int]|null, family_k int|null,
  family_t int|null, family_mirrored bool|null, all_families [str],
  exceptional bool, detectably_ribbon bool,
  status str, reason str|null, ms int
Enumeration rows use the fixed CSV header
  class_key,kind,subcase,fibered,det,det_square,sigma,donaldson,family,
  exceptional,status,nodes,ms
with ms pinned to 0 so that reports are byte-identical for fixed inputs
regardless of --jobs.
"""

from __future__ import annotations

import argparse
import json
import multiprocessing
import os
import re
import sys
import time

from .core import NotAKnotError, ZeroParameterError, parse_params
from .classify import Status, analyze, class_record, knot_classes
from .lattice import (DonaldsonStatus, EmbeddingResult, SearchConfig,
                      find_embedding, wu_vertices)
from .plumbing import negative_definite_graph, to_dot

RANK_LIMIT_WITHOUT_CAP = 12

CSV_HEADER = ("class_key,kind,subcase,fibered,det,det_square,sigma,"
              "donaldson,family,exceptional,status,nodes,ms")


def _node_limit_from(args):
    if getattr(args, "node_limit", None) is not None:
        return args.node_limit
    env = os.environ.get("PRETZELC_NODE_LIMIT")
    return int(env) if env else None


def _parse_or_die(text):
    try:
        return parse_params(text)
    except (ZeroParameterError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        raise SystemExit(2)


def record_to_json(verdict, ms_elapsed) -> dict:
    rep = verdict.obstructions
    fam = verdict.family
    don = rep.donaldson if rep else None
    return {
        "input": ",".join(str(x) for x in verdict.params),
        "params": list(verdict.normalized),
        "kind": verdict.kind.value,
        "fibered": verdict.fibered.status.value,
        "subcase": verdict.fibered.subcase.value,
        "det": rep.det_value if rep else None,
        "det_square": rep.det_is_square if rep else None,
        "sigma": rep.signature if rep else None,
        "donaldson": don.status.value if don else "skipped",
        "witness": [list(r) for r in don.witness]
        if don and don.witness else None,
        "nodes": don.nodes if don else 0,
        "family": fam.tag if fam else None,
        "family_pairs": list(fam.pairs) if fam else None,
        "family_k": fam.k if fam else None,
        "family_t": fam.t if fam else None,
        "family_mirrored": fam.mirrored if fam else None,
        "all_families": [f.tag for f in verdict.all_families],
        "exceptional": verdict.exceptional,
        "detectably_ribbon": verdict.detectably_ribbon,
        "status": verdict.status.value,
        "reason": verdict.reason,
        "ms": ms_elapsed,
    }


def _family_text(fam):
    if fam is None:
        return "none"
    bits = [fam.tag]
    if fam.pairs:
        bits.append("pairs " + ",".join(str(q) for q in fam.pairs))
    if fam.k is not None:
        bits.append("k=%d" % fam.k)
    if fam.t is not None:
        bits.append("t=%d" % fam.t)
    if fam.mirrored:
        bits.append("mirrored")
    return " ".join(bits)


def cmd_analyze(args):
    params = _parse_or_die(args.params)
    start = time.monotonic()
    try:
        verdict = analyze(params, node_limit=_node_limit_from(args))
    except ZeroParameterError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    ms = int((time.monotonic() - start) * 1000)
    if verdict.status is Status.NOT_APPLICABLE:
        print("error: %s is a pretzel link, not a knot" % (args.params,),
              file=sys.stderr)
        return 2
    if args.json:
        print(json.dumps(record_to_json(verdict, ms), sort_keys=True))
    else:
        rep = verdict.obstructions
        print("P(%s)" % ",".join(str(x) for x in verdict.normalized))
        print("  kind:       %s" % verdict.kind.value)
        print("  fibered:    %s (%s)" % (verdict.fibered.status.value,
                                         verdict.fibered.subcase.value))
        print("  det:        %d (%ssquare)"
              % (rep.det_value, "" if rep.det_is_square else "non-"))
        print("  signature:  %d" % rep.signature)
        don = rep.donaldson
        print("  donaldson:  %s" % (don.status.value if don else "skipped"))
        print("  family:     %s" % _family_text(verdict.family))
        print("  exceptional: %s" % verdict.exceptional)
        print("  detectably ribbon: %s" % verdict.detectably_ribbon)
        tail = " (%s)" % verdict.reason if verdict.reason else ""
        print("  status:     %s%s" % (verdict.status.value, tail))
    return 0 if verdict.status is not Status.INCONCLUSIVE else 3


def cmd_embed(args):
    params = _parse_or_die(args.params)
    try:
        g = negative_definite_graph(params)
    except (NotAKnotError, ZeroParameterError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    limit = _node_limit_from(args)
    if g.rank > RANK_LIMIT_WITHOUT_CAP and limit is None:
        print("error: graph rank %d exceeds %d; pass --node-limit (or set "
              "PRETZELC_NODE_LIMIT) to search anyway"
              % (g.rank, RANK_LIMIT_WITHOUT_CAP), file=sys.stderr)
        return 2
    cfg = SearchConfig(node_limit=limit, exhaustive=args.exhaustive)
    res = find_embedding(g, cfg)
    if args.json:
        print(json.dumps({
            "status": res.status.value,
            "witness": [list(r) for r in res.witness] if res.witness else None,
            "nodes": res.nodes,
        }, sort_keys=True))
    elif res.status is DonaldsonStatus.EMBEDDABLE:
        for row in res.witness:
            print(" ".join("%3d" % x for x in row))
    elif res.status is DonaldsonStatus.NOT_EMBEDDABLE:
        print("NO EMBEDDING (%d nodes searched)" % res.nodes)
    if res.status is DonaldsonStatus.INCONCLUSIVE:
        if not args.json:
            print("INCONCLUSIVE (%d nodes searched, limit %d)"
                  % (res.nodes, limit))
        return 3
    return 0


def cmd_graph(args):
    params = _parse_or_die(args.params)
    try:
        g = negative_definite_graph(params)
    except (NotAKnotError, ZeroParameterError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    print(to_dot(g, wu_vertices(g)))
    return 0


# ---------------------------------------------------------------------------
# enumeration with report files and a result cache

def _csv_row(rec) -> str:
    key = " ".join(str(x) for x in rec.class_key)
    return ",".join([
        key, rec.kind.value, rec.subcase.value,
        "true" if rec.fiberable else "false",
        str(rec.det), "true" if rec.det_square else "false", str(rec.sigma),
        rec.donaldson, rec.family,
        "true" if rec.exceptional else "false",
        rec.status.value, str(rec.nodes), "0",
    ])


def _jsonl_row(rec) -> str:
    return json.dumps({
        "class_key": list(rec.class_key), "kind": rec.kind.value,
        "subcase": rec.subcase.value, "fibered": rec.fiberable,
        "det": rec.det, "det_square": rec.det_square, "sigma": rec.sigma,
        "donaldson": rec.donaldson, "family": rec.family,
        "exceptional": rec.exceptional, "status": rec.status.value,
        "nodes": rec.nodes, "ms": 0,
    }, sort_keys=True)


def _cache_path(directory):
    return os.path.join(directory, "donaldson-cache.jsonl")


def _load_cache(directory):
    cache = {}
    path = _cache_path(directory)
    if not os.path.exists(path):
        return cache
    with open(path) as fh:
        for line in fh:
            obj = json.loads(line)
            key = (obj["center"], tuple(tuple(leg) for leg in obj["legs"]))
            witness = tuple(tuple(r) for r in obj["witness"]) \
                if obj["witness"] else None
            cache[key] = EmbeddingResult(
                DonaldsonStatus(obj["status"]), witness, obj["nodes"])
    return cache


def _save_cache(directory, cache, preloaded):
    os.makedirs(directory, exist_ok=True)
    with open(_cache_path(directory), "a") as fh:
        for key, res in sorted(cache.items()):
            if key in preloaded:
                continue
            fh.write(json.dumps({
                "center": key[0], "legs": [list(leg) for leg in key[1]],
                "status": res.status.value,
                "witness": [list(r) for r in res.witness]
                if res.witness else None,
                "nodes": res.nodes,
            }, sort_keys=True) + "\n")


_WORKER_CACHE: dict | None = None


def _init_worker(preloaded):
    global _WORKER_CACHE
    _WORKER_CACHE = dict(preloaded)


def _worker(task):
    ms, node_limit = task
    before = len(_WORKER_CACHE)
    rec = class_record(ms, node_limit=node_limit, cache=_WORKER_CACHE)
    new = {} if len(_WORKER_CACHE) == before else dict(_WORKER_CACHE)
    return rec, new


def cmd_enumerate(args):
    node_limit = _node_limit_from(args)
    classes = sorted(knot_classes(args.max_strands, args.max_param))
    cache = _load_cache(args.cache) if args.cache else {}
    preloaded = set(cache)

    records = []
    if args.jobs > 1:
        todo = [(ms, node_limit) for ms in classes]
        with multiprocessing.Pool(args.jobs, initializer=_init_worker,
                                  initargs=(cache,)) as pool:
            for rec, new in pool.imap(_worker, todo, chunksize=16):
                records.append(rec)
                cache.update(new)
    else:
        for ms in classes:
            records.append(class_record(ms, node_limit=node_limit,
                                        cache=cache))
    records.sort(key=lambda r: r.class_key)

    lines = [CSV_HEADER] if args.format == "csv" else []
    for rec in records:
        lines.append(_csv_row(rec) if args.format == "csv"
                     else _jsonl_row(rec))
    text = "\n".join(lines) + "\n"

    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(text)
        except OSError as exc:
            print("error: cannot write %s: %s" % (args.out, exc),
                  file=sys.stderr)
            return 2
    else:
        sys.stdout.write(text)

    if args.cache:
        _save_cache(args.cache, cache, preloaded)

    counts = {}
    for rec in records:
        counts[rec.status.value] = counts.get(rec.status.value, 0) + 1
    summary = " ".join("%s=%d" % kv for kv in sorted(counts.items()))
    print("enumerated %d classes: %s" % (len(records), summary),
          file=sys.stderr)
    return 0


def _allow_leading_minus(parser):
    # parameter strings like "-1,-1,2,3,-5" are positionals, not flags
    parser._negative_number_matcher = re.compile(r"^-\d")
    return parser


def build_parser():
    ap = argparse.ArgumentParser(
        prog="pretzelc",
        description="pretzel knots: type, fiberedness, slice obstructions")
    sub = ap.add_subparsers(dest="command", required=True)

    a = _allow_leading_minus(sub.add_parser("analyze", help="full verdict for one knot"))
    a.add_argument("params")
    a.add_argument("--json", action="store_true")
    a.add_argument("--node-limit", type=int, default=None)
    a.set_defaults(func=cmd_analyze)

    e = _allow_leading_minus(sub.add_parser("embed", help="Donaldson embedding witness"))
    e.add_argument("params")
    e.add_argument("--exhaustive", action="store_true",
                   help="oracle mode: no symmetry breaking or Wu pruning")
    e.add_argument("--node-limit", type=int, default=None)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_embed)

    g = _allow_leading_minus(sub.add_parser("graph", help="negative definite graph as DOT"))
    g.add_argument("params")
    g.add_argument("--dot", action="store_true", default=True,
                   help="emit DOT (default)")
    g.set_defaults(func=cmd_graph)

    n = _allow_leading_minus(sub.add_parser("enumerate", help="bounded enumeration report"))
    n.add_argument("--max-strands", type=int, required=True)
    n.add_argument("--max-param", type=int, required=True)
    n.add_argument("--out", default=None)
    n.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    n.add_argument("--jobs", type=int, default=1)
    n.add_argument("--cache", default=None)
    n.add_argument("--node-limit", type=int, default=None)
    n.set_defaults(func=cmd_enumerate)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
