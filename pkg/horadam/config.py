"""
Defaults for grid verification and fuzzing.

Environment Variables (all optional):
    HORADAM_MAX_TUPLES - cap on checked assignments per identity (default 20000)
    HORADAM_WORKERS - process pool size for `verify` (default: CPU count)
    HORADAM_QUIET - set to 1 to silence progress logging
"""
import os
from dataclasses import dataclass

# Grid defaults
CLOSED_RANGE = (-6, 6)  # per symbol, identities without sums
SUM_OFFSET_RANGE = (-4, 4)  # a..e and m in sum identities
GEOMETRIC_K_RANGE = (-5, 10)
BINOMIAL_K_RANGE = (0, 10)
MAX_TUPLES = 20000
WORKERS = os.cpu_count() or 1

# Fuzz defaults
FUZZ_COUNT = 1000
FUZZ_COEFF_BOUND = 5
FUZZ_INDEX_BOUND = 8


@dataclass(frozen=True)
class Settings:
    max_tuples: int = MAX_TUPLES
    workers: int = WORKERS
    quiet: bool = False


def _positive_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == '':
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f'{name} must be an integer, got {raw!r}') from None
    if value < 1:
        raise ValueError(f'{name} must be >= 1, got {value}')
    return value


def load_settings() -> Settings:
    """Read the HORADAM_* environment variables over the module defaults."""
    return Settings(
        max_tuples=_positive_int('HORADAM_MAX_TUPLES', MAX_TUPLES),
        workers=_positive_int('HORADAM_WORKERS', WORKERS),
        quiet=os.environ.get('HORADAM_QUIET', '').strip().lower() in ('1', 'true', 'yes'),
    )
