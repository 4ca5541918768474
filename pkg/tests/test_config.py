import pytest

from schubfock.config import Limits, PoolConfig, load_config, parse_range


def test_parse_range():
    assert parse_range("-2..4") == (-2, 4)
    assert parse_range("3..3") == (3, 3)
    for bad in ("1-4", "5..2", "a..b"):
        with pytest.raises(ValueError):
            parse_range(bad)


def test_defaults_match_the_acceptance_pools():
    cfg = load_config()
    assert cfg == PoolConfig()
    assert (cfg.window, cfg.max_len) == ((-2, 4), 5)
    assert (cfg.bs_window, cfg.bs_max_len) == ((-2, 3), 4)
    assert cfg.k_values == (-1, 0, 1, 2) and cfg.n_values == (1, 2, 3)


def test_overrides_and_none_are_ignored():
    cfg = load_config(max_len=3, window=None, jobs=2)
    assert (cfg.max_len, cfg.window, cfg.jobs) == (3, (-2, 4), 2)


def test_toml_file(tmp_path):
    path = tmp_path / "c.toml"
    path.write_text('window = "0..3"\nn-values = "1,2"\nnvars = 2\n[limits]\nmax_length = 7\n')
    cfg = load_config(path, nvars=4)
    assert cfg.window == (0, 3)
    assert cfg.n_values == (1, 2)
    assert cfg.nvars == 4  # explicit override beats the file
    assert cfg.limits == Limits(max_length=7)


def test_unknown_key(tmp_path):
    with pytest.raises(ValueError):
        load_config(colour="blue")
