import os
from concurrent.futures import ProcessPoolExecutor


def worker_count():
    """Worker cap from MARKEDORD_THREADS (default 1, i.e. serial)."""
    raw = os.environ.get("MARKEDORD_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def pmap(func, items):
    """Order-preserving map; results come back in input order either way."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(func, items))
