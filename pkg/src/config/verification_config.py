import os
import multiprocessing as mp
from dataclasses import dataclass, replace
from typing import Optional, Tuple

from ..errors import ConfigError

SEED_ENV_VAR = "TOOL_SEED"


@dataclass
class VerificationConfig:
    """Budget and execution settings for verification campaigns"""
    max_n: int = 6
    transit_samples: int = 2000
    sample_sizes: Tuple[int, ...] = (5, 6)
    seed: int = 0
    workers: int = 1
    chunk_size: int = 4096
    show_progress: bool = False
    corpus_max_shared: int = 3
    corpus_max_order: int = 6
    graph_stream: Optional[str] = None

    def __post_init__(self):
        if not 1 <= self.max_n <= 7:
            raise ConfigError(f"max_n must be between 1 and 7, got {self.max_n}")
        if self.transit_samples < 0:
            raise ConfigError("transit_samples must be non-negative")
        if any(n not in (4, 5, 6) for n in self.sample_sizes):
            raise ConfigError(f"sample_sizes must be drawn from 4, 5, 6, got {self.sample_sizes}")
        if self.seed < 0:
            raise ConfigError("seed must be non-negative")
        if self.chunk_size <= 0:
            raise ConfigError("chunk_size must be positive")
        if not 5 <= self.corpus_max_order <= 7:
            raise ConfigError(f"corpus_max_order must be between 5 and 7, got {self.corpus_max_order}")

    @property
    def num_workers(self) -> int:
        """Worker processes to use; 0 means one per CPU"""
        if self.workers <= 0:
            return mp.cpu_count()
        return self.workers

    @property
    def parallel(self) -> bool:
        return self.num_workers > 1

    def universe(self) -> dict:
        """Budget description embedded in campaign reports"""
        universe = {
            "max_n": self.max_n,
            "seed": self.seed,
            "transit_samples": self.transit_samples,
            "sample_sizes": list(self.sample_sizes),
        }
        if self.graph_stream is not None:
            universe["graph_stream"] = os.path.basename(self.graph_stream)
        return universe

    def with_overrides(self, **changes) -> "VerificationConfig":
        """Copy with the non-None keyword arguments applied"""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})

    @classmethod
    def from_env(cls, seed: Optional[int] = None, **kwargs) -> "VerificationConfig":
        """Build a config, falling back to TOOL_SEED when no seed is given"""
        if seed is None:
            raw = os.environ.get(SEED_ENV_VAR)
            if raw is not None and raw.strip():
                try:
                    seed = int(raw)
                except ValueError:
                    raise ConfigError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}")
        if seed is not None:
            kwargs["seed"] = seed
        return cls(**kwargs)

    @classmethod
    def acceptance(cls, seed: int = 0) -> "VerificationConfig":
        """Full acceptance budget: every graph up to 7 vertices, a million samples per size"""
        return cls(max_n=7, transit_samples=1_000_000, seed=seed, workers=0, show_progress=True)
