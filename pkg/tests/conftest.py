import time

import pytest

from q1dhydrogen.information import entropy_table


@pytest.fixture(scope="session")
def table_rows_and_runtime():
    """The 10-row entropy table, computed once, with its wall-clock time."""
    start = time.perf_counter()
    rows = entropy_table(10, abs_tol=1e-6)
    elapsed = time.perf_counter() - start
    return rows, elapsed
