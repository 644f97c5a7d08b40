import logging

import pytest

from polylb import polylb_workers
from polylb.polylb_workers import WORKERS_ENV, default_workers, run_tasks


def square(x: int) -> int:
    return x * x


def test_sequential():
    assert run_tasks(square, range(5)) == [0, 1, 4, 9, 16]
    assert run_tasks(square, []) == []


def test_processes_keep_order():
    offset = 3
    assert run_tasks(lambda x: x + offset, range(20), workers=2) == list(range(3, 23))


def test_single_item_runs_in_process(monkeypatch):
    def boom(*args, **kwargs):
        raise AssertionError("no pool for a single item")

    monkeypatch.setattr(polylb_workers, "ProcessPoolExecutor", boom)
    assert run_tasks(square, [7], workers=4) == [49]


@pytest.mark.parametrize("raw,expected", [("", 1), ("4", 4), ("0", 1), ("-2", 1)])
def test_default_workers(monkeypatch, raw, expected):
    monkeypatch.setenv(WORKERS_ENV, raw)
    assert default_workers() == expected


def test_default_workers_ignores_garbage(monkeypatch, caplog):
    monkeypatch.setenv(WORKERS_ENV, "many")
    with caplog.at_level(logging.WARNING, logger="polylb.polylb_workers"):
        assert default_workers() == 1
    assert "not an integer" in caplog.text
