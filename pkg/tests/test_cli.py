import json
import math

import numpy as np
import pytest

from corrbound.cli import (
    RunConfig,
    _json17,
    _parse_tgrid,
    cmd_check,
    cmd_figure2,
    cmd_figure3,
    cmd_response,
    cmd_stress,
    main,
)
from corrbound.errors import CorrboundError

FIG2_JSON = '{"n": 2, "rates": [[0, 1], [0, 0]], "p0": [0, 1], "S": [-1, 1]}'


def read_csv(path):
    meta, header, rows = {}, None, []
    for line in path.read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            meta[key.strip()] = value.strip()
        elif header is None:
            header = line.split(",")
        else:
            rows.append(line.split(","))
    return meta, header, rows


class TestTgridParsing:
    def test_linear(self):
        grid = _parse_tgrid("0:10:11:lin")
        assert np.allclose(grid, np.linspace(0, 10, 11))

    def test_log(self):
        grid = _parse_tgrid("1e-2:10:20:log")
        assert grid[0] == pytest.approx(1e-2) and grid[-1] == pytest.approx(10.0)
        assert grid.size == 20

    def test_bad_specs(self):
        for spec in ("1:2:3", "a:b:c:lin", "0:10:5:log", "5:1:3:lin", "1:2:0:lin"):
            with pytest.raises(CorrboundError):
                _parse_tgrid(spec)


class TestJson17:
    def test_deterministic_and_parseable(self):
        payload = {"b": [1.0 / 3.0, 2], "a": {"x": True, "y": None}}
        text = _json17(payload)
        assert text == _json17(payload)
        parsed = json.loads(text)
        assert parsed["b"][0] == 1.0 / 3.0  # 17 digits round-trip


class TestCmdCheck:
    def test_model_file_passes(self, tmp_path):
        model = tmp_path / "model.json"
        model.write_text(FIG2_JSON)
        config = RunConfig(
            t_grid=_parse_tgrid("1e-2:10:10:log"),
            bounds=("ZERO_T_EQ6", "ETA_EQ8", "DERIV_EQ7"),
            model_path=str(model),
            output_path=str(tmp_path / "out.csv"),
        )
        assert cmd_check(config) == 0
        meta, header, rows = read_csv(tmp_path / "out.csv")
        assert header == "bound_id,t1,t2,lhs,rhs,ratio,in_domain,cmax_mode".split(",")
        assert len(rows) == 30
        assert "artifact" in meta and "ratio_slack" in meta

    def test_malformed_json_exits_two(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text('{"n": 2, "rates": [[0, 1')
        code = main(["check", "--model", str(bad)])
        assert code == 2

    def test_corrupted_rhs_hook_exits_one(self, tmp_path):
        model = tmp_path / "model.json"
        model.write_text(FIG2_JSON)
        code = main(
            [
                "check",
                "--model",
                str(model),
                "--rhs-scale",
                "0.5",
                "--out",
                str(tmp_path / "out.csv"),
            ]
        )
        assert code == 1

    def test_json_output(self, tmp_path):
        model = tmp_path / "model.json"
        model.write_text(FIG2_JSON)
        out = tmp_path / "out.json"
        config = RunConfig(
            t_grid=np.array([0.5, 1.0]),
            bounds=("ETA_EQ8",),
            model_path=str(model),
            output_path=str(out),
            output_format="json",
        )
        assert cmd_check(config) == 0
        payload = json.loads(out.read_text())
        assert len(payload["rows"]) == 2
        assert payload["rows"][0]["bound_id"] == "ETA_EQ8"

    def test_generated_model(self, tmp_path):
        config = RunConfig(
            t_grid=np.array([0.5, 2.0]),
            bounds=("ZERO_T_EQ6", "ONEPOINT_ACTIVITY_S45"),
            gen_states=3,
            seed=99,
            output_path=str(tmp_path / "out.csv"),
        )
        assert cmd_check(config) == 0

    def test_unknown_bound_id_exits_two(self, tmp_path):
        model = tmp_path / "model.json"
        model.write_text(FIG2_JSON)
        assert main(["check", "--model", str(model), "--bounds", "NOPE"]) == 2

    def test_missing_model_and_states_exits_two(self):
        assert main(["check"]) == 2

    def test_tight_mode_passes(self, tmp_path):
        model = tmp_path / "model.json"
        model.write_text(FIG2_JSON)
        assert (
            main(
                [
                    "check",
                    "--model",
                    str(model),
                    "--cmax",
                    "tight",
                    "--out",
                    str(tmp_path / "o.csv"),
                ]
            )
            == 0
        )


@pytest.fixture(scope="module")
def fig2_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("fig2")
    assert cmd_figure2(str(out), n_random=8, seed=4_321) == 0
    return out


@pytest.fixture(scope="module")
def fig3_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("fig3")
    assert cmd_figure3(str(out)) == 0
    return out


class TestCmdFigure2:
    def test_files_written(self, fig2_dir):
        for name in ("fig2a.csv", "fig2b.csv", "fig2c.csv", "fig2d.csv"):
            assert (fig2_dir / name).exists()
        sidecar = json.loads((fig2_dir / "fig2_models.json").read_text())
        assert len(sidecar["model_seeds"]) == 8
        assert sidecar["model_states"] == [2, 3, 4, 2, 3, 4, 2, 3]

    def test_fig2a_unit_time_closed_form(self, fig2_dir):
        _, _, rows = read_csv(fig2_dir / "fig2a.csv")
        row = min(rows, key=lambda r: abs(float(r[0]) - 1.0))
        t = float(row[0])
        assert float(row[1]) == pytest.approx(2.0 * (1.0 - math.exp(-t)), abs=1e-12)

    def test_fig2a_zero_row_vacuous(self, fig2_dir):
        _, _, rows = read_csv(fig2_dir / "fig2a.csv")
        assert float(rows[0][0]) == 0.0
        assert float(rows[0][1]) == 0.0

    def test_curves_below_bounds(self, fig2_dir):
        _, _, rows = read_csv(fig2_dir / "fig2a.csv")
        for r in rows:
            assert float(r[1]) <= min(float(r[2]), float(r[3])) + 1e-9
        _, _, rows = read_csv(fig2_dir / "fig2b.csv")
        for r in rows:
            assert float(r[1]) <= float(r[2]) + 1e-9

    def test_ratios_at_most_one(self, fig2_dir):
        for name in ("fig2c.csv", "fig2d.csv"):
            _, _, rows = read_csv(fig2_dir / name)
            assert rows, name
            for r in rows:
                assert float(r[2]) <= 1.0 + 1e-9


class TestCmdFigure3:
    def test_pulse_values_at_unit_time(self, fig3_dir):
        _, _, rows = read_csv(fig3_dir / "fig3a.csv")
        row = min(rows, key=lambda r: abs(float(r[0]) - 1.0))
        assert abs(float(row[1])) == pytest.approx(0.02 * math.exp(-2.0), abs=1e-12)
        assert float(row[2]) == pytest.approx(0.01, abs=1e-12)

    def test_step_domain_switch(self, fig3_dir):
        _, _, rows = read_csv(fig3_dir / "fig3b.csv")
        edge = (math.pi / 2.0) ** 2
        for r in rows:
            t, rhs, flag = float(r[0]), float(r[2]), r[4] == "true"
            assert flag == (math.sqrt(t) <= math.pi / 2.0 + 1e-12)
            if t > edge + 0.05:
                assert rhs == pytest.approx(0.02, abs=1e-15)

    def test_step_early_rows_vanish(self, fig3_dir):
        _, _, rows = read_csv(fig3_dir / "fig3b.csv")
        assert float(rows[0][0]) == 0.0
        assert float(rows[0][1]) == 0.0
        assert float(rows[0][2]) == 0.0
        assert abs(float(rows[1][1])) < 2e-3 and float(rows[1][2]) < 5e-3


class TestCmdStress:
    def test_small_sweep_no_violations(self, tmp_path):
        out = tmp_path / "tally.json"
        code, tally = cmd_stress(
            n_models=12,
            seed=777,
            t_grid=np.geomspace(1e-2, 10.0, 6),
            output_path=str(out),
        )
        assert code == 0
        assert set(tally) == {
            "MAIN_EQ5",
            "ZERO_T_EQ6",
            "DERIV_EQ7",
            "ETA_EQ8",
            "TANGENT_S29",
            "MULTI_SIN_S40",
            "MULTI_ETA_S39",
            "ONEPOINT_SIN_S42",
            "ONEPOINT_ETA_S41",
            "ONEPOINT_ACTIVITY_S45",
            "PULSE_EQ11",
            "STEP_EQ12",
        }
        for cell in tally.values():
            assert cell["violations"] == 0
            assert cell["evaluations"] > 0
            assert cell["max_ratio"] <= 1.0 + 1e-9

    def test_zero_models_empty_tally(self, tmp_path):
        code, tally = cmd_stress(
            n_models=0, t_grid=np.array([1.0]), output_path=str(tmp_path / "t.json")
        )
        assert code == 0
        assert all(c["evaluations"] == 0 for c in tally.values())

    def test_identical_seeds_byte_identical(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        grid = np.geomspace(1e-2, 10.0, 4)
        cmd_stress(n_models=6, seed=2_024, t_grid=grid, output_path=str(a))
        cmd_stress(n_models=6, seed=2_024, t_grid=grid, output_path=str(b))
        assert a.read_bytes() == b.read_bytes()

    def test_negative_model_count_exits_two(self):
        assert main(["stress", "--models", "-3"]) == 2

    def test_default_scale_sweep_has_no_violations(self, tmp_path):
        # the full randomized validity protocol: 500 models, 20-point
        # log grid, every implemented bound (~15 s single-threaded)
        out = tmp_path / "tally.json"
        code, tally = cmd_stress(n_models=500, seed=31_415, output_path=str(out))
        assert code == 0
        for bid, cell in tally.items():
            assert cell["violations"] == 0, bid
            assert cell["max_ratio"] <= 1.0 + 1e-9
            assert cell["evaluations"] >= 9_500  # pulse skips t = 0 rows only


class TestCmdResponse:
    def test_pulse_sweep(self, tmp_path):
        out = tmp_path / "resp.csv"
        assert cmd_response("pulse", output_path=str(out)) == 0
        _, header, rows = read_csv(out)
        assert header == ["t", "shift", "bound_rhs", "ratio", "in_domain"]
        for r in rows:
            assert float(r[3]) <= 1.0 + 1e-9

    def test_step_sweep_json(self, tmp_path):
        out = tmp_path / "resp.json"
        assert cmd_response("step", output_path=str(out), output_format="json") == 0
        payload = json.loads(out.read_text())
        assert payload["rows"][0]["t"] == 0.0

    def test_model_file(self, tmp_path):
        model = tmp_path / "model.json"
        model.write_text(FIG2_JSON)
        out = tmp_path / "resp.csv"
        assert (
            main(["response", "--drive", "step", "--model", str(model), "--out", str(out)])
            == 0
        )


class TestMainEntry:
    def test_requires_subcommand(self):
        with pytest.raises(SystemExit):
            main([])

    def test_threads_env_respected(self, tmp_path, monkeypatch):
        monkeypatch.setenv("CORRBOUND_THREADS", "2")
        out = tmp_path / "t.json"
        code, _ = cmd_stress(n_models=4, t_grid=np.array([0.5, 2.0]), output_path=str(out))
        assert code == 0
        monkeypatch.setenv("CORRBOUND_THREADS", "bogus")
        code, _ = cmd_stress(n_models=2, t_grid=np.array([0.5]), output_path=str(out))
        assert code == 0
