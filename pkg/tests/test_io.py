"""JSON loaders: accepted shapes and rejected malformations."""
import json
import math
from pathlib import Path

import pytest

from ircbounds.errors import SchemaError
from ircbounds.io import (
    load_channel,
    load_det_input,
    load_det_spec,
    load_gauss_config,
    load_imrc_input,
    load_json,
    load_sweep,
)

FIXTURES = Path(__file__).parent / "fixtures"


def rewrite(tmp_path, name, mutate):
    doc = json.loads((FIXTURES / name).read_text())
    mutate(doc)
    target = tmp_path / name
    target.write_text(json.dumps(doc))
    return str(target)


class TestLoadJson:
    def test_malformed_text_is_a_schema_error(self, tmp_path):
        bad = tmp_path / "broken.json"
        bad.write_text("{not json")
        with pytest.raises(SchemaError):
            load_json(str(bad))


class TestChannelLoader:
    def test_fixture_roundtrip(self):
        channel = load_channel(str(FIXTURES / "copy_channel.json"))
        assert channel.relays == 1
        assert channel.x3_sizes == (2,) and channel.y4_size == 2

    def test_missing_variable(self, tmp_path):
        path = rewrite(
            tmp_path, "copy_channel.json",
            lambda d: d["variables"].remove(["Y5", 2]),
        )
        with pytest.raises(SchemaError):
            load_channel(path)

    def test_unknown_variable(self, tmp_path):
        path = rewrite(
            tmp_path, "copy_channel.json",
            lambda d: d["variables"].append(["Z9", 2]),
        )
        with pytest.raises(SchemaError):
            load_channel(path)

    def test_relay_numbering_must_be_contiguous(self, tmp_path):
        def mutate(d):
            d["variables"] = [
                [n.replace("_1", "_2"), s] if n.startswith(("X3", "Y3")) else [n, s]
                for n, s in d["variables"]
            ]
            d["law"]["given"] = ["X1", "X2", "X3_2"]
            d["law"]["output"] = ["Y3_2", "Y4", "Y5"]

        with pytest.raises(SchemaError):
            load_channel(rewrite(tmp_path, "copy_channel.json", mutate))

    def test_law_scope_checked(self, tmp_path):
        path = rewrite(
            tmp_path, "copy_channel.json",
            lambda d: d["law"].__setitem__("given", ["X2", "X1", "X3_1"]),
        )
        with pytest.raises(SchemaError):
            load_channel(path)

    def test_table_shape_checked(self, tmp_path):
        path = rewrite(
            tmp_path, "copy_channel.json",
            lambda d: d["law"].__setitem__("table", [[0.5, 0.5]]),
        )
        with pytest.raises(SchemaError):
            load_channel(path)


class TestInputLoader:
    def channel(self):
        return load_channel(str(FIXTURES / "copy_channel.json"))

    def test_fixture_roundtrip(self):
        inputs = load_imrc_input(str(FIXTURES / "copy_input.json"), self.channel())
        assert inputs.q_size == 1
        assert inputs.p_u1x1.shape == (1, 1, 2)

    def test_factor_order_is_the_contract(self, tmp_path):
        def mutate(d):
            d["factors"][1], d["factors"][2] = d["factors"][2], d["factors"][1]

        path = rewrite(tmp_path, "copy_input.json", mutate)
        with pytest.raises(SchemaError, match="factoriz"):
            load_imrc_input(path, self.channel())

    def test_alphabet_clash_with_channel(self, tmp_path):
        def mutate(d):
            d["variables"].append(["X1", 3])

        path = rewrite(tmp_path, "copy_input.json", mutate)
        with pytest.raises(SchemaError, match="X1"):
            load_imrc_input(path, self.channel())

    def test_missing_time_sharing_variable(self, tmp_path):
        def mutate(d):
            d["variables"] = [v for v in d["variables"] if v[0] != "Q"]

        path = rewrite(tmp_path, "copy_input.json", mutate)
        with pytest.raises(SchemaError, match="Q"):
            load_imrc_input(path, self.channel())


class TestDetLoaders:
    def test_fixture_roundtrip(self):
        spec = load_det_spec(str(FIXTURES / "mod2_det.json"))
        assert spec.x1_size == 2 and spec.x3_size == 2 and spec.r0 == 1.0
        inputs = load_det_input(str(FIXTURES / "uniform_det_input.json"), spec)
        assert inputs.p_x1.shape == (1, 2)

    def test_bad_x3_size(self, tmp_path):
        path = rewrite(tmp_path, "mod2_det.json", lambda d: d.__setitem__("x3_size", 0))
        with pytest.raises(SchemaError):
            load_det_spec(path)

    def test_map_shape_mismatch(self, tmp_path):
        path = rewrite(tmp_path, "mod2_det.json", lambda d: d.__setitem__("y4", [[0, 1]]))
        with pytest.raises(SchemaError):
            load_det_spec(path)

    def test_input_wrong_width(self, tmp_path):
        spec = load_det_spec(str(FIXTURES / "mod2_det.json"))
        path = rewrite(
            tmp_path, "uniform_det_input.json",
            lambda d: d.__setitem__("x1", [[0.2, 0.3, 0.5]]),
        )
        with pytest.raises(SchemaError):
            load_det_input(path, spec)


class TestGaussLoader:
    def test_fixture_roundtrip(self):
        config, params = load_gauss_config(str(FIXTURES / "gauss_point.json"))
        assert config.P == 10.0 and config.R0 == 1.0
        assert params.sigma2 == 5.0

    def test_missing_gain(self, tmp_path):
        path = rewrite(tmp_path, "gauss_point.json", lambda d: d.pop("g32"))
        with pytest.raises(SchemaError, match="g32"):
            load_gauss_config(path)

    def test_nonnumeric_field(self, tmp_path):
        path = rewrite(tmp_path, "gauss_point.json", lambda d: d.__setitem__("P", "ten"))
        with pytest.raises(SchemaError):
            load_gauss_config(path)


class TestSweepLoader:
    def test_fixture_roundtrip(self):
        sweep = load_sweep(str(FIXTURES / "small_sweep.json"))
        assert sweep.x == "P"
        assert sweep.grid == (1.0, 10.0, 100.0)
        assert sweep.sigma_grid == (5.0,)
        config = sweep.config_at(10.0)
        assert config.P == 10.0 and config.R0 == 1.0

    def test_log_grid_expansion(self, tmp_path):
        path = rewrite(
            tmp_path, "small_sweep.json",
            lambda d: d.__setitem__(
                "grid", {"start": 0.1, "stop": 100.0, "points": 16, "spacing": "log"}
            ),
        )
        sweep = load_sweep(path)
        assert len(sweep.grid) == 16
        assert sweep.grid[0] == pytest.approx(0.1)
        assert sweep.grid[-1] == pytest.approx(100.0)
        ratios = [b / a for a, b in zip(sweep.grid, sweep.grid[1:])]
        assert ratios == pytest.approx([ratios[0]] * 15, rel=1e-9)

    def test_linear_grid_expansion(self, tmp_path):
        path = rewrite(
            tmp_path, "small_sweep.json",
            lambda d: (d.__setitem__("x", "R0"),
                       d.__setitem__("grid", {"start": 0.0, "stop": 2.0, "points": 5})),
        )
        sweep = load_sweep(path)
        assert sweep.grid == (0.0, 0.5, 1.0, 1.5, 2.0)
        assert sweep.config_at(1.5).R0 == 1.5
        assert sweep.config_at(1.5).P == 10.0

    def test_sigma_grid_form(self, tmp_path):
        path = rewrite(
            tmp_path, "small_sweep.json",
            lambda d: d.__setitem__("sigma2", {"grid": [1.0, 5.0, 25.0]}),
        )
        assert load_sweep(path).sigma_grid == (1.0, 5.0, 25.0)

    def test_rejects_unknown_axis(self, tmp_path):
        path = rewrite(tmp_path, "small_sweep.json", lambda d: d.__setitem__("x", "Q"))
        with pytest.raises(SchemaError):
            load_sweep(path)

    def test_rejects_nonpositive_power(self, tmp_path):
        path = rewrite(
            tmp_path, "small_sweep.json", lambda d: d.__setitem__("grid", [0.0, 1.0])
        )
        with pytest.raises(SchemaError):
            load_sweep(path)

    def test_rejects_bad_spacing(self, tmp_path):
        path = rewrite(
            tmp_path, "small_sweep.json",
            lambda d: d.__setitem__(
                "grid", {"start": 1, "stop": 2, "points": 3, "spacing": "cubic"}
            ),
        )
        with pytest.raises(SchemaError):
            load_sweep(path)

    def test_rejects_log_grid_through_zero(self, tmp_path):
        path = rewrite(
            tmp_path, "small_sweep.json",
            lambda d: (d.__setitem__("x", "R0"),
                       d.__setitem__(
                           "grid", {"start": 0.0, "stop": 2.0, "points": 4, "spacing": "log"}
                       )),
        )
        with pytest.raises(SchemaError):
            load_sweep(path)

    def test_default_bundled_sweep_loads(self):
        import ircbounds

        data = Path(ircbounds.__file__).parent / "data" / "default_sweep.json"
        sweep = load_sweep(str(data))
        assert sweep.x == "P"
        assert len(sweep.grid) == 21
        assert math.isclose(sweep.grid[0], 0.1) and math.isclose(sweep.grid[-1], 100.0)
