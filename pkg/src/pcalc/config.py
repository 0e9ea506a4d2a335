"""Environment-driven settings for pcalc."""

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import List, Optional

DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_W1_BOUND = 10
DEFAULT_SEED = 0
DEFAULT_CASES = 25
DEFAULT_WORKERS = 4
DEFAULT_SUBSET_LIMIT = 64

_ENV_PATH = Path(__file__).resolve().parents[2] / ".env"
ENV_PREFIX = "PCALC_"

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    log_level: str = DEFAULT_LOG_LEVEL
    w1_bound: int = DEFAULT_W1_BOUND
    seed: int = DEFAULT_SEED
    cases: int = DEFAULT_CASES
    workers: int = DEFAULT_WORKERS
    subset_limit: int = DEFAULT_SUBSET_LIMIT

    def override(self, **changes: Optional[object]) -> "Settings":
        """Return a copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_env_file(path: Path = _ENV_PATH) -> List[str]:
    """Merge the PCALC_* assignments of ``path`` into the environment.

    Variables that are already set win. Returns the names that were merged.
    """
    if not path.is_file():
        return []

    merged = []
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        key, sep, value = stripped.partition("=")
        key = key.strip()
        if not sep or not key.startswith(ENV_PREFIX):
            logger.debug("%s:%d: not a %s* assignment, skipped", path, number, ENV_PREFIX)
            continue
        if key in os.environ:
            continue
        os.environ[key] = value.strip().strip('"').strip("'")
        merged.append(key)
    logger.debug("Merged %s from %s", merged or "nothing", path)
    return merged


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        logger.warning("Ignoring non-integer %s=%r; using %s", name, raw, default)
        return default


def get_settings() -> Settings:
    """Read settings from the environment (after merging the .env file)."""
    load_env_file()
    return Settings(
        log_level=os.getenv("PCALC_LOG_LEVEL", DEFAULT_LOG_LEVEL).upper(),
        w1_bound=_int_env("PCALC_W1_BOUND", DEFAULT_W1_BOUND),
        seed=_int_env("PCALC_SEED", DEFAULT_SEED),
        cases=_int_env("PCALC_CASES", DEFAULT_CASES),
        workers=_int_env("PCALC_WORKERS", DEFAULT_WORKERS),
        subset_limit=_int_env("PCALC_SUBSET_LIMIT", DEFAULT_SUBSET_LIMIT),
    )
