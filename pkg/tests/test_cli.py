import json

import numpy as np
import pytest

from tlmkit import BaselineStore, GridSpec, random_bandlimited, write_binary, write_csv
from tlmkit.cli import main

SMALL = ["--grid-points", "64", "--jmax", "4"]


def run(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_morrey_norm_demo_deterministic(capsys):
    code, out, _ = run(["morrey-norm"], capsys)
    assert code == 0
    assert out.startswith("morrey-norm p=4 q=2")
    code2, out2, _ = run(["morrey-norm"], capsys)
    assert out2 == out


def test_morrey_norm_demo_near_oracle(capsys):
    code, out, _ = run(["morrey-norm", "--windows", "ball"], capsys)
    assert code == 0
    value = float(out.split(":")[1])
    assert value == pytest.approx(2.0 ** 0.25, rel=0.05)


def test_tlm_norm_demo(capsys):
    code, out, _ = run(["tlm-norm"] + SMALL, capsys)
    assert code == 0
    value = float(out.split(":")[1])
    assert np.isfinite(value) and value > 0


def test_tlm_norm_rejects_bad_exponents(capsys):
    code, _, err = run(["tlm-norm", "-p", "2", "-q", "4"] + SMALL, capsys)
    assert code == 2
    assert "error:" in err


def test_tlm_norm_inf_r(capsys):
    code, out, _ = run(["tlm-norm", "-r", "inf"] + SMALL, capsys)
    assert code == 0
    assert "r=inf" in out


def test_missing_input_is_io_error(capsys, tmp_path):
    code, _, err = run(["morrey-norm", "--input", str(tmp_path / "nope.bin")],
                       capsys)
    assert code == 3
    assert "error:" in err


def test_binary_and_csv_input_agree(capsys, tmp_path):
    spec = GridSpec(1, 64, 2.0 * np.pi)
    f = random_bandlimited(spec, 3, seed=99)
    bin_path = tmp_path / "f.bin"
    csv_path = tmp_path / "f.csv"
    write_binary(f, str(bin_path))
    write_csv(f, str(csv_path))
    code_b, out_b, _ = run(["morrey-norm", "--input", str(bin_path)] + SMALL,
                           capsys)
    code_c, out_c, _ = run(["morrey-norm", "--input", str(csv_path)] + SMALL,
                           capsys)
    assert code_b == code_c == 0
    assert out_b.split(":")[1] == out_c.split(":")[1]


def test_diamond_check_expectations(capsys):
    code, out, _ = run(["diamond-check", "--expect", "pass"] + SMALL, capsys)
    assert code == 0
    assert "[pass]" in out

    code, out, _ = run(["diamond-check", "--profile", "persistent",
                        "--expect", "not-decided"] + SMALL, capsys)
    assert code == 0
    assert "[not-decided]" in out

    code, _, err = run(["diamond-check", "--profile", "persistent",
                        "--expect", "pass"] + SMALL, capsys)
    assert code == 1
    assert "expected verdict" in err


def test_calibrate_writes_then_refuses(capsys, tmp_path, small_cfg, small_store):
    out_path = tmp_path / "base.json"
    args = ["calibrate", "--grid-points", str(small_cfg.points),
            "--jmax", str(small_cfg.j_max), "--out", str(out_path)]
    # pre-seed the target: the command must refuse before calibrating
    small_store.save(str(out_path))
    code, _, err = run(args, capsys)
    assert code == 3
    assert "force" in err

    code, out, _ = run(args + ["--force"], capsys)
    assert code == 0
    assert "calibrated" in out
    reloaded = BaselineStore.load(str(out_path))
    assert len(reloaded.constants) >= 20


def test_scalar_suite_with_fresh_baseline(capsys, tmp_path, small_cfg, small_store):
    path = tmp_path / "base.json"
    small_store.save(str(path))
    code, out, _ = run(["scalar-suite", "--grid-points", str(small_cfg.points),
                        "--jmax", str(small_cfg.j_max),
                        "--baseline", str(path)], capsys)
    assert code == 0
    assert "0 failed" in out


def test_report_json_schema(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, _ = run(["scalar-suite", "--baseline", "none",
                      "--out", str(out_path)] + SMALL, capsys)
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["schema_version"] == 1
    assert doc["n_checks"] == len(doc["checks"])
    assert all("check" in r and "verdict" in r for r in doc["checks"])


def test_interp_demo_runs(capsys):
    code, out, _ = run(["interp-demo"] + SMALL, capsys)
    assert code == 0
    assert "reconstruction" in out
    assert "0 failed" in out


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
    assert "tlmkit" in capsys.readouterr().out
