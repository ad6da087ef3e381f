from pathlib import Path

from timegp.cli import CSV_HEADER, main


def run_args(tmp_path, **kv):
    base = {"bits": "3", "pop": "16", "gens": "4", "runs": "2", "seed": "9",
            "timer": "cost"}
    base.update({k: str(v) for k, v in kv.items()})
    args = ["run"]
    for k, v in base.items():
        args.extend([f"--{k.replace('_', '-')}", v])
    return args


def test_run_row_count(tmp_path, capsys):
    out = tmp_path / "r.csv"
    assert main(run_args(tmp_path, gens=30, out=out)) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == CSV_HEADER
    assert len(lines) == 1 + 31  # header + generations 0..30


def test_run_missing_bits_is_usage_error(capsys):
    assert main(["run", "--pop", "16"]) == 2
    assert "bits" in capsys.readouterr().err


def test_run_idempotent_bytes(tmp_path):
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    main(run_args(tmp_path, out=out1))
    main(run_args(tmp_path, out=out2))
    assert out1.read_bytes() == out2.read_bytes()


def test_run_stdout_when_no_out(capsys):
    assert main(["run", "--bits", "3", "--pop", "8", "--gens", "2",
                 "--runs", "1"]) == 0
    out = capsys.readouterr().out
    assert out.startswith(CSV_HEADER)
    assert len(out.splitlines()) == 4


def test_config_file_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text("bits = 3\npop = 8\ngens = 2\nruns = 1\nseed = 4\n")
    out1 = tmp_path / "a.csv"
    assert main(["run", "--config", str(cfg), "--out", str(out1)]) == 0
    # flag overrides the file's gens
    out2 = tmp_path / "b.csv"
    assert main(["run", "--config", str(cfg), "--gens", "5",
                 "--out", str(out2)]) == 0
    assert len(out2.read_text().splitlines()) == 1 + 6


def test_config_file_unknown_key(tmp_path, capsys):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("bogus_key = 3\n")
    assert main(["run", "--config", str(cfg)]) == 2
    assert "bogus_key" in capsys.readouterr().err


def test_sweep_file_set(tmp_path):
    assert main(["sweep", "--bits", "3", "--pop", "16", "--gens", "3",
                 "--runs", "2", "--groups", "1,2,4,8", "--seed", "1",
                 "--out", str(tmp_path), "--prefix", "par"]) == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["par_all.csv", "par_g1.csv", "par_g2.csv", "par_g4.csv",
                     "par_g8.csv"]
    combined = (tmp_path / "par_all.csv").read_text().splitlines()
    assert combined[0] == CSV_HEADER + ",groups"
    assert len(combined) == 1 + 4 * (3 + 1)


def test_sweep_duplicate_groups_rejected(tmp_path, capsys):
    assert main(["sweep", "--bits", "3", "--groups", "2,2",
                 "--out", str(tmp_path)]) == 2


def test_plot_two_series(tmp_path):
    main(["sweep", "--bits", "3", "--pop", "16", "--gens", "3", "--runs", "1",
          "--groups", "1,2", "--seed", "2", "--out", str(tmp_path),
          "--prefix", "s"])
    svg_path = tmp_path / "out.svg"
    assert main(["plot", str(tmp_path / "s_all.csv"), "--metric", "avg_size",
                 "--out", str(svg_path)]) == 0
    svg = svg_path.read_text()
    assert svg.count("<polyline") == 2
    assert "generation" in svg and "avg_size" in svg


def test_plot_accepts_run_output(tmp_path):
    out = tmp_path / "r.csv"
    main(run_args(tmp_path, out=out))
    assert main(["plot", str(out), "--metric", "best_fitness",
                 "--out", str(tmp_path / "r.svg")]) == 0


def test_plot_unknown_metric(tmp_path, capsys):
    out = tmp_path / "r.csv"
    main(run_args(tmp_path, out=out))
    assert main(["plot", str(out), "--metric", "nope"]) == 2
    err = capsys.readouterr().err
    assert "avg_size" in err and "best_fitness" in err


def test_plot_empty_csv(tmp_path, capsys):
    empty = tmp_path / "empty.csv"
    empty.write_text(CSV_HEADER + "\n")
    target = tmp_path / "empty.svg"
    assert main(["plot", str(empty), "--out", str(target)]) == 1
    assert not target.exists()


def test_version(capsys):
    assert main(["version"]) == 0
    assert capsys.readouterr().out.startswith("timegp ")


def test_no_command_is_usage_error(capsys):
    assert main([]) == 2


def test_sweep_accepts_full_group_ladder(tmp_path):
    assert main(["sweep", "--bits", "3", "--pop", "128", "--gens", "1",
                 "--runs", "1", "--groups", "1,2,4,8,16,32,64,128",
                 "--out", str(tmp_path), "--prefix", "ladder"]) == 0
    assert (tmp_path / "ladder_g128.csv").exists()


def test_large_config_prints_note(tmp_path, capsys):
    out = tmp_path / "big.csv"
    assert main(["run", "--bits", "12", "--pop", "4", "--gens", "1",
                 "--runs", "1", "--out", str(out)]) == 0
    assert "may take a long time" in capsys.readouterr().err
