"""Deterministic map with optional process-level parallelism.

Results always come back in input order, so every consumer produces identical
output regardless of the worker count.
"""

JOBS = 1


def pmap(fn, items):
    items = list(items)
    if JOBS <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    import multiprocessing

    with multiprocessing.Pool(min(JOBS, len(items))) as pool:
        return pool.map(fn, items)
