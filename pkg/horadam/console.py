"""Progress output. Reports own stdout, so log lines go to stderr."""
import sys
from datetime import datetime

_quiet = False


def set_quiet(quiet: bool) -> None:
    global _quiet
    _quiet = quiet


def log(message: str) -> None:
    """Print timestamped log message"""
    if _quiet:
        return
    timestamp = datetime.now().strftime('%Y-%m-%d %H:%M:%S')
    print(f'[{timestamp}] {message}', file=sys.stderr, flush=True)
