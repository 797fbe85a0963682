import pytest

from swmhd import cli


def test_config_file_and_overrides(tmp_path, capsys):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# riemann setup\nscenario = riemann\nflux = es2\ncells = 30\ntfinal = 0.05\n")
    args = cli.build_parser().parse_args([str(cfg), "--cells", "20", "--flux", "es1"])
    spec = cli.spec_from_settings(cli.resolve_settings(args))
    assert spec.cells == 20 and spec.flux.value == "es1" and spec.t_final == 0.05
    assert spec.scenario == "riemann"


def test_run_writes_outputs(tmp_path, capsys):
    out = tmp_path / "out"
    code = cli.main(["--scenario", "riemann", "--cells", "20", "--tfinal", "0.02", "--out", str(out)])
    assert code == cli.EXIT_OK
    assert (out / "snapshot.csv").exists() and (out / "diagnostics.csv").exists()
    assert "delta entropy" in capsys.readouterr().out


def test_convergence_mode(tmp_path, capsys):
    code = cli.main(["--scenario", "manufactured", "--convergence", "16,32", "--tfinal", "0.05",
                     "--out", str(tmp_path)])
    assert code == 0
    assert "avg EOC" in capsys.readouterr().out
    assert (tmp_path / "convergence.csv").exists()


@pytest.mark.parametrize("argv", [
    ["--scenario", "vortex"],
    ["--cells", "many"],
    ["--cells", "1"],
    ["--cfl", "3"],
    ["--bc", "wall"],
    ["--scenario", "manufactured", "--convergence", "10,15"],
    ["does_not_exist.cfg"],
])
def test_config_errors_exit_1(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        raise SystemExit(cli.main(argv))
    assert exc.value.code == cli.EXIT_CONFIG


def test_bad_config_lines(tmp_path):
    bad = tmp_path / "bad.cfg"
    bad.write_text("scenario riemann\n")
    assert cli.main([str(bad)]) == cli.EXIT_CONFIG
    bad.write_text("colour = blue\n")
    assert cli.main([str(bad)]) == cli.EXIT_CONFIG


def test_solver_failure_exits_2(monkeypatch, capsys):
    from swmhd.errors import NonPositiveDepth

    def boom(spec):
        raise NonPositiveDepth("h < 0 in cell 3")

    monkeypatch.setattr(cli, "run", boom)
    assert cli.main(["--scenario", "riemann", "--cells", "10"]) == cli.EXIT_SOLVER
    assert "solver failure" in capsys.readouterr().err
