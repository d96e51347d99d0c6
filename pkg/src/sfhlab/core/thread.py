# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import logging
import queue
import threading

LOG = logging.getLogger(__name__)

_STOP = object()


class Future:
    def __init__(self, func, args, kwargs):
        self._call = (func, args, kwargs)
        self._done = threading.Event()
        self._value = None
        self._error = None

    def execute(self):
        func, args, kwargs = self._call
        try:
            self._value = func(*args, **kwargs)
        except Exception as e:
            LOG.error("Task %s failed: %s", getattr(func, "__name__", func), e)
            self._error = e
        finally:
            self._done.set()

    def result(self):
        self._done.wait()
        if self._error is not None:
            raise self._error
        return self._value


def _worker(tasks):
    for task in iter(tasks.get, _STOP):
        task.execute()


class SoftThreadPool:
    """Daemon threads started on the first ``submit`` and stopped on exit."""

    def __init__(self, nthreads=4):
        self._nthreads = nthreads
        self._tasks = queue.Queue()
        self._threads = []
        self._lock = threading.Lock()

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.shutdown()

    def _ensure_started(self):
        with self._lock:
            if self._threads:
                return
            for _ in range(self._nthreads):
                thread = threading.Thread(target=_worker, args=(self._tasks,), daemon=True)
                thread.start()
                self._threads.append(thread)

    def shutdown(self):
        with self._lock:
            threads, self._threads = self._threads, []
        for _ in threads:
            self._tasks.put(_STOP)

    def submit(self, func, *args, **kwargs):
        self._ensure_started()
        future = Future(func, args, kwargs)
        self._tasks.put(future)
        return future


def map_ordered(func, items, jobs=1):
    """``[func(x) for x in items]``, spread over ``jobs`` threads when jobs > 1."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with SoftThreadPool(nthreads=min(jobs, len(items))) as pool:
        futures = [pool.submit(func, x) for x in items]
        return [f.result() for f in futures]
