import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from clutterkit.bitset import mask_of  # noqa: E402

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def s(*ids):
    """Bitmask for a literal set of vertex ids."""
    return mask_of(ids)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS, key=lambda k: int(k.split()[0])):
        ok, detail = ACCEPTANCE_RESULTS[name]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
