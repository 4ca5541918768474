"""Desk-scale bounds and verification pool parameters.

Every enumeration cap and every sweep default lives here so that the CLI,
the verification sweeps and the test-suite read one source of truth.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path

try:  # Python >= 3.11
    import tomllib
except ModuleNotFoundError:  # pragma: no cover - exercised on 3.10
    import tomli as tomllib


@dataclass(frozen=True)
class Limits:
    """Enumeration caps."""

    max_length: int = 10  # reduced-word enumeration
    max_width: int = 12  # window width of generated pools


@dataclass(frozen=True)
class PoolConfig:
    """Parameters of a verification sweep."""

    window: tuple[int, int] = (-2, 4)
    max_len: int = 5
    k_values: tuple[int, ...] = (-1, 0, 1, 2)
    n_values: tuple[int, ...] = (1, 2, 3)
    nvars: int = 3
    jobs: int = 1
    # back-stable sweeps use a smaller pool
    bs_window: tuple[int, int] = (-2, 3)
    bs_max_len: int = 4
    bs_N: int = 3
    bs_M: int = 3
    # ribbon lemmas
    ribbon_max_len: int = 6
    uddu_max_len: int = 4
    uddu_r_values: tuple[int, ...] = (1, 2, 3)
    # classical correspondence
    classical_max_size: int = 6
    limits: Limits = field(default_factory=Limits)


LIMITS = Limits()


def _coerce(name: str, value, default):
    if isinstance(default, tuple):
        if isinstance(value, str):
            return parse_range(value) if ".." in value else tuple(int(v) for v in value.split(","))
        return tuple(int(v) for v in value)
    if isinstance(default, Limits):
        return replace(default, **{k: int(v) for k, v in value.items()})
    return type(default)(value)


def parse_range(text: str) -> tuple[int, int]:
    """Parse ``A..B`` into an inclusive integer pair."""
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError(f"expected A..B, got {text!r}")
    a, b = int(lo), int(hi)
    if a > b:
        raise ValueError(f"empty range {text!r}")
    return a, b


def load_config(path: str | Path | None = None, **overrides) -> PoolConfig:
    """Build a :class:`PoolConfig` from an optional TOML file plus overrides.

    Keys in the file use the field names of :class:`PoolConfig`; a
    ``[limits]`` table sets the enumeration caps.  Overrides whose value is
    ``None`` are ignored.
    """
    cfg = PoolConfig()
    known = {f.name: f for f in fields(PoolConfig)}
    data: dict = {}
    if path is not None:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
    data.update({k: v for k, v in overrides.items() if v is not None})
    changes = {}
    for key, value in data.items():
        key = key.replace("-", "_")
        if key not in known:
            raise ValueError(f"unknown config key {key!r}")
        changes[key] = _coerce(key, value, getattr(cfg, key))
    return replace(cfg, **changes)
