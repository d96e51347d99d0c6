#!/usr/bin/env python3

# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

import time
from datetime import datetime
from datetime import timedelta

import pytest

from sfhlab.core.thread import SoftThreadPool
from sfhlab.core.thread import map_ordered


def test_thread():
    def square_after(x, seconds):
        time.sleep(seconds)
        return x * x

    with SoftThreadPool() as pool:
        start = datetime.now()
        futures = [pool.submit(square_after, x, t) for x, t in [(0, 2), (1, 2), (2, 2), (3, 1)]]
        assert datetime.now() - start < timedelta(seconds=0.5)

        # four threads: the short task finishes first
        assert futures[3].result() == 9
        assert timedelta(seconds=0.5) < datetime.now() - start < timedelta(seconds=1.5)

        assert [f.result() for f in futures] == [0, 1, 4, 9]
        assert timedelta(seconds=1.5) < datetime.now() - start < timedelta(seconds=2.5)


def test_errors_are_raised_by_result():
    def fail():
        raise ValueError("boom")

    with SoftThreadPool(nthreads=1) as pool:
        future = pool.submit(fail)
        with pytest.raises(ValueError):
            future.result()


def test_map_ordered():
    def slow_square(x):
        time.sleep(0.05 * (5 - x))
        return x * x

    assert map_ordered(slow_square, range(5), jobs=3) == [0, 1, 4, 9, 16]
    assert map_ordered(slow_square, range(5)) == [0, 1, 4, 9, 16]


if __name__ == "__main__":
    from sfhlab.testing import main

    main(__file__)
