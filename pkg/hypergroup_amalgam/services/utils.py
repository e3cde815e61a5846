# utils.py
import math
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, Tuple

import numpy as np
from dotenv import load_dotenv

from hypergroup_amalgam.log.logger_singleton import getLogger

ENV_THREADS = "HYPERGROUP_THREADS"


def get_job_count() -> int:
    load_dotenv()
    override = os.getenv(ENV_THREADS)
    if override:
        return max(1, int(override))
    cores = os.cpu_count() or 1
    if cores <= 4:
        return cores
    else:
        return min(8, cores)


# ------------------------- Generic parallel runner -------------------------
def run_parallel(fn: Callable, items: Sequence, max_workers=None) -> Tuple[list, list]:
    """
    Apply fn to every item in a thread pool.

    Returns (results, errors): results of the successful calls in input order,
    errors as (item, exception) pairs, also in input order.
    """
    results, errors = [], []
    logger = getLogger()
    workers = int(max(1, max_workers or get_job_count()))
    with ThreadPoolExecutor(max_workers=workers) as executor:
        futures = [executor.submit(fn, item) for item in items]
        for item, fut in zip(items, futures):
            try:
                res = fut.result()
                if res is not None:
                    results.append(res)
            except Exception as e:
                logger.logMessage(f"[run_parallel] {e}")
                errors.append((item, e))
    return results, errors


def parse_range(text: str) -> List[float]:
    """
    'a:b:step' -> the inclusive grid a, a+step, ..., b with round((b-a)/step)+1
    points; 'a,b,c' -> the listed values; a single number -> [number].
    """
    text = text.strip()
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ValueError(f"range must look like a:b:step, got '{text}'")
        a, b, step = (float(p) for p in parts)
        if step <= 0 or b < a or not all(math.isfinite(v) for v in (a, b, step)):
            raise ValueError(f"invalid range '{text}'")
        count = int(round((b - a) / step)) + 1
        return [float(v) for v in a + step * np.arange(count)]
    values = [float(p) for p in text.split(",") if p.strip()]
    if not values:
        raise ValueError("empty value list")
    return values
