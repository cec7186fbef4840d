import json


from symhyp.cli import CommandConfig, main, parse_config


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_field(capsys):
    code, out, _ = run(capsys, "field", "--field", "2,3")
    assert code == 0
    rep = json.loads(out)
    assert rep["field"] == {"p": 2, "m": 3, "modulus": [1, 1, 0, 1]}
    assert len(rep["elements"]) == 8 and rep["elements"][3]["digits"] == [1, 1, 0]


def test_count_distinct(capsys):
    code, out, _ = run(capsys, "count", "--field", "5,1", "--k", "3", "--coeffs", "0,1", "--distinct")
    assert code == 0
    rep = json.loads(out)
    assert rep["N_star"] == 12 and rep["coeffs"] == [0, 1] and rep["k"] == 3
    assert rep["field"]["p"] == 5 and "tool_version" in rep


def test_count_total(capsys):
    code, out, _ = run(capsys, "count", "--field", "5", "--k", "2", "--coeffs", "0,0,1")
    assert json.loads(out)["N"] == 1


def test_vander_and_rs(capsys):
    code, out, _ = run(capsys, "vander", "count", "--field", "5,1", "--k", "3", "--poly", "0,0,0,1")
    rep = json.loads(out)
    assert rep["N_star_Df"] == 12 and rep["subsets_vanishing"] == 2
    code, out, _ = run(capsys, "vander", "count", "--field", "5,1", "--k", "3", "--poly", "0,0,0,1",
                       "--subset", "1,2,3,4")
    assert json.loads(out)["N_star_Df"] == 0
    code, out, _ = run(capsys, "vander", "det", "--field", "5", "--k", "2", "--poly", "0,0,1", "--alphas", "1,2")
    assert json.loads(out)["det"] == 3
    code, out, _ = run(capsys, "rs", "deephole", "--field", "5,1", "--k", "3", "--poly", "0,0,1")
    rep = json.loads(out)
    assert rep["deep_hole"] is True and rep["degree"] == 2 and rep["sr_form"] is True and rep["witness"] is None


def test_verify_exit_codes(capsys, tmp_path):
    out_file = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "thm-main", "--field", "5,1", "--k", "3", "--m-range", "1..2",
                       "--out", str(out_file))
    assert code == 0
    rep = json.loads(out_file.read_text())
    assert rep["verdict"] == "verified" and rep["field"]["modulus"] == [0, 1]
    assert "verified" in out
    code, _, err = run(capsys, "verify", "thm-main", "--field", "5,1", "--k", "2")
    assert code == 1 and "error" in err
    code, _, _ = run(capsys, "count", "--field", "4,1", "--k", "2", "--coeffs", "1")
    assert code == 1
    code, _, _ = run(capsys, "frobnicate")
    assert code == 1


def test_verify_violation_exit_code(capsys, monkeypatch):
    import symhyp.cli as cli
    from symhyp.verify import ExperimentReport

    def fake(F, k, **kw):
        r = ExperimentReport("fake", F.descriptor(), {"k": k})
        r.violations.append({"kind": "x"})
        return r.finish(0.0)

    monkeypatch.setitem(cli.EXPERIMENTS, "deep-holes", fake)
    code, _, _ = run(capsys, "verify", "deep-holes", "--field", "5", "--k", "3")
    assert code == 2


def test_csv_grid(capsys):
    code, out, _ = run(capsys, "verify", "subset-escape", "--field", "7", "--k", "2,3,4", "--format", "csv")
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[0].startswith("experiment_id,p,m,k")
    assert all(",verified," in line for line in lines[1:])


def test_json_reports_are_byte_identical_modulo_elapsed(capsys):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "verify", "deep-holes", "--field", "7", "--k", "3")
        d = json.loads(out)
        d.pop("elapsed")
        outs.append(json.dumps(d))
    assert outs[0] == outs[1]


def test_config_round_trip():
    cfg = parse_config(["verify", "thm-main", "--field", "7,1", "--k", "3", "--m-range", "1..4",
                        "--budget", "1000", "--seed", "2", "--threads", "4"])
    assert cfg.m_range == (1, 4) and cfg.k == [3] and cfg.threads == 4
    assert CommandConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))) == cfg
    cfg = parse_config(["count", "--field", "5", "--k", "3", "--coeffs", "0,1", "--distinct"])
    assert CommandConfig.from_dict(cfg.to_dict()) == cfg


def test_threads_env(monkeypatch):
    from symhyp.verify import default_threads
    monkeypatch.setenv("SYMHYP_THREADS", "3")
    assert default_threads() == 3
    monkeypatch.delenv("SYMHYP_THREADS")
    assert default_threads() == 1
