import time
from contextlib import contextmanager

import pytest

ACCEPTANCE: dict[int, str] = {}


class Criterion:
    def __init__(self, num: int, title: str, limit: float | None):
        self.num, self.title, self.limit = num, title, limit
        self.detail = ""
        self.elapsed = 0.0

    def line(self, ok: bool) -> str:
        status = "PASS" if ok else "FAIL"
        limit = f" (limit {self.limit:g}s)" if self.limit else ""
        detail = f" - {self.detail}" if self.detail else ""
        return f"[{self.num:2d}] {status} {self.title}{detail} [{self.elapsed:.2f}s{limit}]"


@pytest.fixture
def criterion():
    """Time a block, record its pass/fail line, fail on assertion or overtime."""

    @contextmanager
    def run(num: int, title: str, limit: float | None = None):
        c = Criterion(num, title, limit)
        start = time.perf_counter()
        try:
            yield c
        except BaseException as e:
            c.elapsed = time.perf_counter() - start
            if not c.detail:
                c.detail = str(e).splitlines()[0] if str(e) else type(e).__name__
            ACCEPTANCE[num] = c.line(False)
            raise
        c.elapsed = time.perf_counter() - start
        ok = c.limit is None or c.elapsed < c.limit
        if not ok:
            c.detail = (c.detail + "; " if c.detail else "") + "over the time limit"
        ACCEPTANCE[num] = c.line(ok)
        assert ok, ACCEPTANCE[num]

    return run


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[num])
