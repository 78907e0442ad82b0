from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor

log = logging.getLogger(__name__)


def _call(args):
    fn, item = args
    return fn(*item)


def parallel_map(fn, items, jobs: int = 1, label: str = "work") -> list:
    """Apply ``fn(*item)`` to every item; output order always matches input order."""
    items = list(items)
    total = len(items)
    out = []
    step = max(1, total // 10)
    if jobs <= 1 or total <= 1:
        results = map(_call, ((fn, it) for it in items))
        for i, r in enumerate(results, 1):
            out.append(r)
            if i % step == 0:
                log.info("%s: %d/%d", label, i, total)
        return out
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        chunk = max(1, total // (4 * jobs))
        for i, r in enumerate(ex.map(_call, ((fn, it) for it in items), chunksize=chunk), 1):
            out.append(r)
            if i % step == 0:
                log.info("%s: %d/%d", label, i, total)
    return out
