from __future__ import annotations

import gc


def pytest_sessionfinish(session, exitstatus):
    # the enumeration caches hold millions of objects; skip collecting them at exit
    gc.freeze()
