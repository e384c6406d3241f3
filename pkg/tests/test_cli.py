import json
import re
import subprocess
import sys

from pretzel.cli import CSV_HEADER, main, record_to_json
from pretzel import analyze


def run_cli(*args, env=None):
    cmd = [sys.executable, "-m", "pretzel.cli", *args]
    return subprocess.run(cmd, capture_output=True, text=True, env=env)


# ---------------------------------------------------------------------------
# analyze

def test_analyze_json_1075(capsys):
    rc = main(["analyze", "1,1,1,1,-3,-3,-3", "--json"])
    out = capsys.readouterr().out
    assert rc == 0
    rec = json.loads(out)
    assert rec["status"] == "ribbon_known"
    assert rec["family"] == "F1"
    assert rec["det"] == 81 and rec["det_square"] is True
    assert rec["sigma"] == 0
    assert rec["donaldson"] == "embeddable"
    assert rec["fibered"] == "fibered" and rec["subcase"] == "T1"


def test_analyze_human_text(capsys):
    rc = main(["analyze", "[1^4],-3,-3,-3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "ribbon_known" in out and "F1" in out


def test_analyze_rejects_zero():
    r = run_cli("analyze", "0,3,5")
    assert r.returncode == 2
    assert "connected sum" in r.stderr


def test_analyze_rejects_links(capsys):
    rc = main(["analyze", "2,2,3"])
    capsys.readouterr()
    assert rc == 2


def test_analyze_not_slice(capsys):
    rc = main(["analyze", "1,5,-3,-4", "--json"])
    rec = json.loads(capsys.readouterr().out)
    assert rc == 0
    assert rec["status"] == "not_slice"


SCHEMA = {
    "input": (str,), "params": (list,), "kind": (str,), "fibered": (str,),
    "subcase": (str,), "det": (int,), "det_square": (bool,), "sigma": (int,),
    "donaldson": (str,), "witness": (list, type(None)), "nodes": (int,),
    "family": (str, type(None)), "family_pairs": (list, type(None)),
    "family_k": (int, type(None)), "family_t": (int, type(None)),
    "family_mirrored": (bool, type(None)), "all_families": (list,),
    "exceptional": (bool,), "detectably_ribbon": (bool,), "status": (str,),
    "reason": (str, type(None)), "ms": (int,),
}


def validate_schema(rec):
    assert set(rec) == set(SCHEMA)
    for key, types in SCHEMA.items():
        assert isinstance(rec[key], types), (key, rec[key])
    if rec["witness"] is not None:
        assert all(isinstance(x, int) for row in rec["witness"] for x in row)


def test_json_round_trip():
    v = analyze((1, 1, 1, 1, -3, -3, -3))
    rec = record_to_json(v, 7)
    blob = json.dumps(rec, sort_keys=True)
    assert json.loads(blob) == rec
    validate_schema(rec)


def test_json_schema_on_corpus():
    from conftest import CORPUS
    from pretzel import classify_type
    for p in CORPUS:
        if not classify_type(p).is_knot():
            continue
        rec = record_to_json(analyze(p), 0)
        validate_schema(rec)
        assert json.loads(json.dumps(rec, sort_keys=True)) == rec


# ---------------------------------------------------------------------------
# embed

def test_embed_witness(capsys):
    rc = main(["embed", "1,1,1,1,-3,-3,-3"])
    out = capsys.readouterr().out
    assert rc == 0
    rows = [line.split() for line in out.strip().splitlines()]
    assert len(rows) == 4 and all(len(r) == 4 for r in rows)


def test_embed_no_embedding(capsys):
    rc = main(["embed", "1,1,-3"])
    out = capsys.readouterr().out
    assert rc == 0
    assert re.match(r"NO EMBEDDING \(\d+ nodes searched\)", out.strip())


def test_embed_exhaustive_agrees(capsys):
    rc = main(["embed", "1,1,3,-4", "--exhaustive", "--json"])
    rec = json.loads(capsys.readouterr().out)
    assert rc == 0 and rec["status"] == "embeddable"


def test_embed_node_limit_exit_3(capsys):
    rc = main(["embed", "[1^6],-3,-3,-3,-3,-3", "--node-limit", "5"])
    out = capsys.readouterr().out
    assert rc == 3
    assert "INCONCLUSIVE" in out


def test_embed_env_node_limit(monkeypatch, capsys):
    monkeypatch.setenv("PRETZELC_NODE_LIMIT", "5")
    rc = main(["embed", "[1^6],-3,-3,-3,-3,-3"])
    capsys.readouterr()
    assert rc == 3


def test_embed_rank_cap_requires_limit(capsys):
    rc = main(["embed", "7,-7,5,-5,4"])  # rank 16 > 12
    err_out = capsys.readouterr()
    assert rc == 2
    rc = main(["embed", "7,-7,5,-5,4", "--node-limit", "100000"])
    capsys.readouterr()
    assert rc == 0


def test_embed_link_rejected(capsys):
    rc = main(["embed", "2,2,3"])
    capsys.readouterr()
    assert rc == 2


# ---------------------------------------------------------------------------
# graph

DOT_NODE = re.compile(r'^  v\d+ \[.*label="-?\d+".*\];$')
DOT_EDGE = re.compile(r"^  v\d+ -- v\d+;$")


def _check_dot(text):
    lines = text.strip().splitlines()
    assert lines[0] == "graph pretzel {"
    assert lines[-1] == "}"
    for line in lines[1:-1]:
        assert DOT_NODE.match(line) or DOT_EDGE.match(line), line


def test_graph_dot_1075(capsys):
    rc = main(["graph", "1,1,1,1,-3,-3,-3"])
    out = capsys.readouterr().out
    assert rc == 0
    _check_dot(out)
    # center -4 is the Wu vertex
    assert re.search(r'v0 \[label="-4".*center="true".*wu="true"', out)


def test_graph_dot_mirrored_example(capsys):
    rc = main(["graph", "-1,-1,2,3,-5"])
    out = capsys.readouterr().out
    assert rc == 0
    _check_dot(out)
    assert 'label="-3"' in out   # reduced center


def test_graph_parse_validated(capsys):
    rc = main(["graph", "3,-3,2"])
    out = capsys.readouterr().out
    assert rc == 0
    _check_dot(out)


def test_graph_link_exit_2(capsys):
    rc = main(["graph", "2,2,3"])
    capsys.readouterr()
    assert rc == 2


# ---------------------------------------------------------------------------
# enumerate

def test_enumerate_csv_and_golden(tmp_path):
    out = tmp_path / "r.csv"
    r = run_cli("enumerate", "--max-strands", "3", "--max-param", "3",
                "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == CSV_HEADER
    import pathlib
    golden = pathlib.Path(__file__).parent / "data" / "golden_enum_3_3.csv"
    assert out.read_text() == golden.read_text()
    assert "enumerated" in r.stderr


def test_enumerate_jsonl(tmp_path):
    out = tmp_path / "r.jsonl"
    r = run_cli("enumerate", "--max-strands", "3", "--max-param", "2",
                "--format", "jsonl", "--out", str(out))
    assert r.returncode == 0
    for line in out.read_text().strip().splitlines():
        rec = json.loads(line)
        assert rec["ms"] == 0
        assert "class_key" in rec and "status" in rec


def test_enumerate_cache_rerun_identical(tmp_path):
    out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
    cache = tmp_path / "cache"
    r = run_cli("enumerate", "--max-strands", "4", "--max-param", "3",
                "--cache", str(cache), "--out", str(out1))
    assert r.returncode == 0
    assert (cache / "donaldson-cache.jsonl").exists()
    r = run_cli("enumerate", "--max-strands", "4", "--max-param", "3",
                "--cache", str(cache), "--out", str(out2))
    assert r.returncode == 0
    assert out1.read_bytes() == out2.read_bytes()


def test_enumerate_unwritable_output(tmp_path):
    r = run_cli("enumerate", "--max-strands", "3", "--max-param", "2",
                "--out", str(tmp_path / "nope" / "r.csv"))
    assert r.returncode == 2
