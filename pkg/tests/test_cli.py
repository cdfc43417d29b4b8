
from mbfts import cli
from mbfts.dataio import bundled_path


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_evaluate_summary(capsys, tmp_path):
    code, out, _ = run(capsys, "evaluate", "--config", str(bundled_path("paper_preset.conf")),
                       "--input", str(bundled_path("belgium_accidents.csv")),
                       "--output", str(tmp_path / "e.csv"))
    assert code == 0
    assert "MSE = 275.77" in out
    assert "AFER = 0.6586%" in out
    assert (tmp_path / "e.csv").read_text().endswith("MSE,275.77\nAFER_percent,0.6586\n")


def test_missing_input(capsys):
    code, _, err = run(capsys, "evaluate", "--input", "/no/such/file.csv")
    assert code == 2
    assert "/no/such/file.csv" in err and "evaluate" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 1
    assert run(capsys)[0] == 1
    assert run(capsys, "evaluate", "--set", "novalue")[0] == 1
    assert run(capsys, "evaluate", "--set", "nokey=1")[0] == 1
    assert run(capsys, "plot", "--format", "png")[0] == 1


def test_domain_error_exit(capsys, tmp_path):
    data = tmp_path / "big.csv"
    data.write_text("year,value\n2000,5000\n2001,6000\n2002,7000\n2003,8000\n")
    code, _, err = run(capsys, "evaluate", "--input", str(data))
    assert code == 2 and "outside universe" in err


def test_compare_summary(capsys, tmp_path):
    code, out, _ = run(capsys, "compare",
                       "--reference", f"Jilani={bundled_path('reference_jilani.csv')}",
                       "--reference", f"Lee={bundled_path('reference_lee.csv')}",
                       "--output", str(tmp_path / "c.csv"))
    assert code == 0
    assert "Jilani: MSE = 6908.61" in out
    assert "Lee: MSE = 6850.39" in out
    assert "proposed: MSE = 275.77" in out
    assert "best by MSE = proposed, best by AFER = proposed" in out


def test_overrides_beat_config(capsys, tmp_path):
    conf = tmp_path / "c.conf"
    conf.write_text("order_k = 2\n")
    code, out, _ = run(capsys, "model", "--config", str(conf), "--set", "order_k=4",
                       "--output", str(tmp_path / "m.txt"))
    assert code == 0 and "order = 4" in out
    assert "relationships = 27" in out


def test_stdout_artifact(capsys):
    code, out, err = run(capsys, "partition")
    assert code == 0
    assert out.splitlines()[0] == "index,lo,hi,midpoint"
    assert len(out.splitlines()) == 30
    assert "intervals = 29" in err


def _stage_chain(capsys, d):
    p = lambda name: str(d / name)
    assert cli.run(["partition", "--output", p("partition.csv")]) == 0
    assert cli.run(["fuzzify", "--partition", p("partition.csv"), "--output", p("fuzzified.csv")]) == 0
    assert cli.run(["model", "--input", p("fuzzified.csv"), "--partition", p("partition.csv"),
                    "--output", p("model.txt")]) == 0
    assert cli.run(["evaluate", "--input", p("fuzzified.csv"), "--partition", p("partition.csv"),
                    "--output", p("evaluation.csv")]) == 0
    assert cli.run(["compare", "--input", p("evaluation.csv"), "--output", p("comparison.csv")]) == 0
    assert cli.run(["plot", "--input", p("comparison.csv"), "--output", p("plot.svg")]) == 0
    capsys.readouterr()


def test_stage_isolation(capsys, tmp_path):
    staged, whole = tmp_path / "staged", tmp_path / "all"
    staged.mkdir()
    _stage_chain(capsys, staged)
    code, out, _ = run(capsys, "all", "--output", str(whole))
    assert code == 0
    assert "intervals = 29" in out and "groups = 28" in out
    for name in cli.ALL_OUTPUTS.values():
        assert (staged / name).read_bytes() == (whole / name).read_bytes(), name


def test_all_is_repeatable(capsys, tmp_path):
    assert run(capsys, "all", "--output", str(tmp_path / "a"))[0] == 0
    assert run(capsys, "all", "--output", str(tmp_path / "b"))[0] == 0
    for name in cli.ALL_OUTPUTS.values():
        assert (tmp_path / "a" / name).read_bytes() == (tmp_path / "b" / name).read_bytes()


def test_plot_tsv_stdout(capsys):
    code, out, _ = run(capsys, "plot", "--format", "tsv")
    assert code == 0
    assert len(out.splitlines()) == 32


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "mbfts", "evaluate", "--output", "-"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1] == "AFER_percent,0.6586"
