from __future__ import annotations

"""
Configuration handling for the toolkit.

Environment variables (optionally from a `.env` file), CLI overrides and
defaults are resolved in one place so the algebra modules stay stateless.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional
import os

from dotenv import load_dotenv


def _coerce_path(value: Optional[str], default: Path) -> Path:
    """Convert the provided path string to a resolved Path with fallback."""
    if not value:
        return default
    return Path(value).expanduser().resolve()


def _env_int(key: str, default: int) -> int:
    raw = os.getenv(key)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"{key} must be an integer, got {raw!r}.") from exc


@dataclass
class ToolkitConfig:
    """Strongly typed configuration for checks and corpus runs."""

    output_dir: Path
    workers: int = 1
    random_seed: int = 0
    random_samples: int = 20
    random_bound: int = 5

    @staticmethod
    def load(
        output_dir: Optional[str] = None,
        *,
        workers: Optional[int] = None,
        random_seed: Optional[int] = None,
        random_samples: Optional[int] = None,
        create_dirs: bool = False,
    ) -> "ToolkitConfig":
        """
        Construct a ToolkitConfig, loading environment defaults first and
        allowing CLI overrides to take precedence.
        """
        load_dotenv()

        default_output_dir = _coerce_path(
            os.getenv("TDPAIRS_OUTPUT_DIR"), Path.cwd() / "output"
        )

        cfg = ToolkitConfig(
            output_dir=_coerce_path(output_dir, default_output_dir),
            workers=workers if workers is not None else _env_int("TDPAIRS_WORKERS", 1),
            random_seed=(
                random_seed
                if random_seed is not None
                else _env_int("TDPAIRS_RANDOM_SEED", 0)
            ),
            random_samples=(
                random_samples
                if random_samples is not None
                else _env_int("TDPAIRS_RANDOM_SAMPLES", 20)
            ),
            random_bound=_env_int("TDPAIRS_RANDOM_BOUND", 5),
        )
        _validate(cfg)

        if create_dirs:
            cfg.output_dir.mkdir(parents=True, exist_ok=True)

        return cfg


def _validate(cfg: ToolkitConfig) -> None:
    if cfg.workers < 1:
        raise ValueError("TDPAIRS_WORKERS / --workers must be >= 1.")
    if cfg.random_samples < 0:
        raise ValueError("TDPAIRS_RANDOM_SAMPLES must be >= 0.")
    if cfg.random_bound < 1:
        raise ValueError("TDPAIRS_RANDOM_BOUND must be >= 1.")


__all__ = ["ToolkitConfig"]
