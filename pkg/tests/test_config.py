"""Config parsing and validation."""
import math

import pytest

from qcorr.config import config_from_mapping, load_config, parse_key_values
from qcorr.errors import ConfigError


class TestParseKeyValues:
    def test_basic_lines_and_comments(self):
        text = """
        # full-line comment
        kind = lattice
        thetas = 0.0:3.14:5   # trailing comment
        cases=square:A
        """
        mapping = parse_key_values(text)
        assert mapping == {"kind": "lattice", "thetas": "0.0:3.14:5", "cases": "square:A"}

    def test_missing_equals(self):
        with pytest.raises(ConfigError, match="key = value"):
            parse_key_values("kind lattice")

    def test_duplicate_key(self):
        with pytest.raises(ConfigError, match="duplicate"):
            parse_key_values("kind = lattice\nkind = lattice")

    def test_empty_value(self):
        with pytest.raises(ConfigError, match="empty"):
            parse_key_values("kind =")


class TestConfigValidation:
    def test_unknown_kind(self):
        with pytest.raises(ConfigError, match="unknown experiment kind"):
            config_from_mapping({"kind": "banana"})

    def test_kind_mismatch(self):
        with pytest.raises(ConfigError, match="does not match"):
            config_from_mapping({"kind": "lattice"}, kind="random-states")

    def test_unknown_key_rejected(self):
        with pytest.raises(ConfigError, match="unknown keys"):
            config_from_mapping({"kind": "random-states", "samples": "5", "smaples": "5"})

    def test_random_states_defaults(self):
        cfg = config_from_mapping({"kind": "random-states", "samples": "10"})
        assert cfg.num_qubits == 5
        assert cfg.seed == 0
        assert cfg.discord_settings.n_alpha == 64
        assert cfg.discord_settings.n_beta == 128

    def test_samples_required_and_positive(self):
        with pytest.raises(ConfigError, match="samples"):
            config_from_mapping({"kind": "random-states"})
        with pytest.raises(ConfigError, match="samples"):
            config_from_mapping({"kind": "random-states", "samples": "0"})

    def test_theta_range_inclusive_endpoints(self):
        cfg = config_from_mapping(
            {"kind": "fully-connected", "ns": "3", "thetas": "0.0:2.0:5"}
        )
        assert cfg.thetas == (0.0, 0.5, 1.0, 1.5, 2.0)

    def test_theta_list(self):
        cfg = config_from_mapping(
            {"kind": "lattice", "cases": "square:A", "thetas": "0.1, 0.2,0.3"}
        )
        assert cfg.thetas == (0.1, 0.2, 0.3)

    def test_empty_grid_rejected(self):
        with pytest.raises(ConfigError):
            config_from_mapping({"kind": "lattice", "cases": "square:A", "thetas": ","})

    def test_bad_range_count(self):
        with pytest.raises(ConfigError, match="count"):
            config_from_mapping({"kind": "lattice", "cases": "square:A", "thetas": "0:1:0"})

    def test_hexagonal_c_rejected(self):
        with pytest.raises(ConfigError, match="hexagonal"):
            config_from_mapping({"kind": "lattice", "cases": "hexagonal:C", "thetas": "0.5"})

    def test_fixed_edge_bounds(self):
        with pytest.raises(ConfigError, match="fixed_edge"):
            config_from_mapping(
                {"kind": "random-weighted", "samples": "1", "num_qubits": "4", "fixed_edge": "0,9,1.0"}
            )

    def test_random_weighted_defaults(self):
        cfg = config_from_mapping({"kind": "random-weighted", "samples": "2"})
        assert cfg.num_qubits == 10
        assert cfg.fixed_edge == (0, 1, math.pi)

    def test_kicked_top_requires_drive_keys(self):
        with pytest.raises(ConfigError, match="require"):
            config_from_mapping({"kind": "kicked-top", "num_qubits": "4", "steps": "3"})

    def test_kicked_top_roundtrip(self):
        cfg = config_from_mapping(
            {
                "kind": "kicked-top",
                "num_qubits": "6",
                "steps": "10",
                "kick": "7.0",
                "rotation": "1.5707963267948966",
                "theta0": "2.25",
                "phi0": "1.1",
            }
        )
        assert cfg.kicked.kick == 7.0
        assert cfg.kicked.smoothing_half_width == 4

    def test_seed_override(self):
        cfg = config_from_mapping({"kind": "random-states", "samples": "3", "seed": "9"}, seed_override=42)
        assert cfg.seed == 42

    def test_shipped_configs_load(self, pytestconfig):
        root = pytestconfig.rootpath
        for name, kind in [
            ("random_states.cfg", "random-states"),
            ("kicked_top_fig2like.cfg", "kicked-top"),
            ("lattice.cfg", "lattice"),
            ("fully_connected.cfg", "fully-connected"),
            ("random_weighted.cfg", "random-weighted"),
        ]:
            cfg = load_config(root / "configs" / name, kind=kind)
            assert cfg.kind == kind

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(tmp_path / "nope.cfg")
