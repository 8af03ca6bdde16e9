import json

import pytest

from bremsdec.cli import main
from bremsdec.scenarios import ScenarioError, ScenarioSpec, run_scenario


def test_unknown_scenario_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["run", "not_a_scenario"])
    assert info.value.code == 2


def test_domain_error_exit_code(capsys):
    rc = main(["run", "nparticle", "--d-target", "1.5", "--out", "."])
    assert rc == 1
    assert "d_target" in capsys.readouterr().err


def test_missing_config_file(tmp_path, capsys):
    rc = main(["run", "free_packet", "--config",
               str(tmp_path / "nope.cfg"), "--out", str(tmp_path)])
    assert rc == 1


def test_kernels_dump_golden_rerun(tmp_path, capsys):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    for out in (out1, out2):
        rc = main(["run", "kernels_dump", "--temperature", "1.0",
                   "--points", "41", "--out", str(out)])
        assert rc == 0
    # byte-identical across reruns
    assert (out1 / "kernels.csv").read_bytes() \
        == (out2 / "kernels.csv").read_bytes()
    lines = (out1 / "kernels.csv").read_text().splitlines()
    assert lines[0] == "t_seconds,D_per_s2,D1_per_s2"
    assert len(lines) == 42


def test_summary_json_on_stdout(tmp_path, capsys):
    rc = main(["run", "nparticle", "--out", str(tmp_path)])
    assert rc == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["scenario"] == "nparticle"
    assert summary["v_max_m_per_s"] > 0
    assert (tmp_path / "nparticle.json").exists()
    on_disk = json.loads((tmp_path / "nparticle.json").read_text())
    assert on_disk["v_max_m_per_s"] == summary["v_max_m_per_s"]


def test_flag_overrides_config(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("d_target = 0.5\nn_particles = 1e6\n")
    rc = main(["run", "nparticle", "--config", str(cfg),
               "--d-target", "0.9", "--out", str(tmp_path)])
    assert rc == 0
    summary = json.loads(capsys.readouterr().out)
    assert summary["d_target"] == 0.9          # flag wins
    assert summary["n_particles"] == 1e6       # config survives


def test_output_dir_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("BREMSDEC_OUT", str(tmp_path / "envdir"))
    rc = main(["run", "free_packet", "--points", "5"])
    assert rc == 0
    assert (tmp_path / "envdir" / "free_packet.csv").exists()


def test_fig1_alias_and_csv_columns(tmp_path, capsys):
    rc = main(["run", "fig1", "--points", "11", "--out", str(tmp_path)])
    assert rc == 0
    lines = (tmp_path / "fig1_crossover.csv").read_text().splitlines()
    assert lines[0] == "t_f_over_tauB,gamma_vac,gamma_th,L_m,D"
    assert len(lines) == 12


def test_run_scenario_api_unknown_name():
    with pytest.raises(ScenarioError, match="unknown scenario"):
        run_scenario(ScenarioSpec(name="bogus"))


def test_abraham_lorentz_scenario(tmp_path, capsys):
    rc = main(["run", "abraham_lorentz", "--out", str(tmp_path)])
    assert rc == 0
    summary = json.loads(capsys.readouterr().out)
    fitted = summary["damping_gamma_fitted"]
    expected = summary["damping_gamma_expected"]
    assert abs(fitted / expected - 1.0) < 0.02
