import json

from blockfuse.cli import CorpusEntry, main, run_entry


def _run(capsys, argv):
    code = main(argv)
    return code, capsys.readouterr().out


def test_blocks_command_d24(capsys):
    code, out = _run(capsys, ["blocks", "--group", "builtin:d24", "--p", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["group"] == "D24" and report["order"] == 24
    non_principal = [b for b in report["blocks"] if not b["principal"]]
    assert len(non_principal) == 1
    blk = non_principal[0]
    assert blk["defect_order"] == 4
    assert sorted(blk["support"].values()) == [[1], [1]]
    assert blk["k_rational"]


def test_blocks_command_c3_tower(capsys):
    code, out = _run(capsys, ["blocks", "--group", "builtin:c3", "--p", "2", "--n", "2"])
    assert code == 0
    report = json.loads(out)
    assert len(report["blocks"]) == 3
    assert sorted(len(o) for o in report["orbits"]) == [1, 2]
    assert len(report["k_blocks"]) == 2


def test_blocks_command_trivial_group(tmp_path, capsys):
    path = tmp_path / "triv.json"
    path.write_text(json.dumps({"kind": "table", "name": "1", "table": [[0]]}))
    code, out = _run(capsys, ["blocks", "--group", str(path), "--p", "2"])
    assert code == 0
    report = json.loads(out)
    assert len(report["blocks"]) == 1
    assert report["blocks"][0]["support"] == {"0": [1]}


def test_fusion_command_d24(capsys):
    code, out = _run(capsys, ["fusion", "--group", "builtin:d24", "--p", "2"])
    assert code == 0
    report = json.loads(out)
    non_principal = next(s for s in report["systems"] if s["sylow_index"] == 2)
    assert non_principal["saturated"] is False
    assert non_principal["witness"] == {"kind": "sylow_index", "index": 2}
    assert non_principal["aut_order"] == 2
    principal = next(s for s in report["systems"] if s is not non_principal)
    assert principal["saturated"] is True


def test_fusion_command_p_group(capsys):
    code, out = _run(capsys, ["fusion", "--group", "builtin:c4", "--p", "2"])
    assert code == 0
    report = json.loads(out)
    system = report["systems"][0]
    assert system["saturated"] and system["aut_order"] == 1
    assert system["defect_order"] == 4


def test_descent_command_flagship(capsys):
    code, out = _run(capsys, ["descent", "--group", "builtin:d24", "--p", "2",
                              "--m", "1", "--n", "2"])
    assert code == 0
    report = json.loads(out)
    assert report["all_ok"]
    flagship = next(d for d in report["descents"] if d["index"] == 2)
    assert flagship["saturated"] == {"l": True, "k": False}
    assert all(flagship["verdicts"].values())


def test_descent_degenerate_and_defect_zero(capsys):
    code, out = _run(capsys, ["descent", "--group", "builtin:d24", "--p", "2"])
    assert code == 0
    assert json.loads(out)["all_ok"]
    code, out = _run(capsys, ["descent", "--group", "builtin:c3", "--p", "2",
                              "--n", "2", "--block", "1"])
    assert code == 0
    report = json.loads(out)
    assert report["all_ok"]
    assert report["descents"][0]["defect_order"] == 1


def test_verify_small_corpus(tmp_path, capsys):
    corpus = {"entries": [
        {"group": "builtin:c3", "p": 2, "m": 1, "n": 2, "label": "c3"},
        {"group": "builtin:s3", "p": 3, "m": 1, "n": 1, "label": "s3"},
    ]}
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(corpus))
    code, out = _run(capsys, ["verify", "--corpus", str(path)])
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and len(report["entries"]) == 2


def test_verify_empty_corpus(tmp_path, capsys):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps({"entries": []}))
    code, out = _run(capsys, ["verify", "--corpus", str(path)])
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and report["entries"] == []


def test_verify_corrupted_table(tmp_path, capsys):
    loop = [[0, 1, 2, 3, 4],
            [1, 0, 3, 4, 2],
            [2, 4, 0, 1, 3],
            [3, 2, 4, 0, 1],
            [4, 3, 1, 2, 0]]
    gpath = tmp_path / "loop.json"
    gpath.write_text(json.dumps({"kind": "table", "name": "loop", "table": loop}))
    cpath = tmp_path / "corpus.json"
    cpath.write_text(json.dumps({"entries": [
        {"group": "loop.json", "p": 2, "label": "bad"}]}))
    code, out = _run(capsys, ["verify", "--corpus", str(cpath)])
    assert code == 1
    report = json.loads(out)
    assert not report["ok"]
    assert "associative" in report["entries"][0]["error"]


def test_report_determinism(capsys):
    _, out1 = _run(capsys, ["blocks", "--group", "builtin:d24", "--p", "2", "--n", "2"])
    _, out2 = _run(capsys, ["blocks", "--group", "builtin:d24", "--p", "2", "--n", "2"])
    assert out1 == out2
    _, t1 = _run(capsys, ["descent", "--group", "builtin:c3sc4", "--p", "3", "--n", "2"])
    _, t2 = _run(capsys, ["descent", "--group", "builtin:c3sc4", "--p", "3", "--n", "2"])
    assert t1 == t2


def test_jobs_output_matches_serial(tmp_path, capsys):
    corpus = {"entries": [
        {"group": "builtin:c3", "p": 2, "m": 1, "n": 2, "label": "a"},
        {"group": "builtin:c6", "p": 2, "m": 1, "n": 2, "label": "b"},
    ]}
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(corpus))
    code1, out1 = _run(capsys, ["verify", "--corpus", str(path), "--jobs", "1"])
    code2, out2 = _run(capsys, ["verify", "--corpus", str(path), "--jobs", "2"])
    assert code1 == code2 == 0
    assert out1 == out2


def test_seed_does_not_change_results(capsys, monkeypatch):
    # each invocation loads a fresh group, so block caches do not carry over
    # and the seeded splitting really runs
    _, base = _run(capsys, ["descent", "--group", "builtin:c3", "--p", "2", "--n", "2"])
    monkeypatch.setenv("BLOCKFUSE_SEED", "7")
    _, seeded = _run(capsys, ["descent", "--group", "builtin:c3", "--p", "2", "--n", "2"])
    assert seeded == base


def test_table_format(capsys):
    code, out = _run(capsys, ["blocks", "--group", "builtin:c3", "--p", "3",
                              "--format", "table"])
    assert code == 0
    assert "group = C3" in out
    assert "blocks[0]" in out


def test_full_corpus_exit_zero(corpus_run):
    assert corpus_run["ok"]
    assert len(corpus_run["entries"]) >= 29
    for entry in corpus_run["entries"]:
        assert entry.get("ok"), entry.get("label")


def test_checks_filter(tmp_path, capsys):
    corpus = {"entries": [{"group": "builtin:c3", "p": 3, "label": "c3"}]}
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(corpus))
    code, out = _run(capsys, ["verify", "--corpus", str(path), "--checks", "blocks"])
    assert code == 0
    report = json.loads(out)
    assert "descent" not in report["entries"][0]
    assert "blocks" in report["entries"][0]


def test_run_entry_keep_objects():
    entry = CorpusEntry(group="builtin:d24", p=2, m=1, n=2, label="flag")
    report = run_entry(entry, keep_objects=True)
    assert report["ok"]
    assert "_objects" in report
    assert report["_objects"]["contexts"]
