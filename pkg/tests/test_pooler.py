"""
Tests for the homology pooler.
"""

import operator

import pytest

from algebra import cyclic_group, group_algebra
from morita import homology_job
from pooler import HomologyPooler


def jobs():
    return {
        'pow': (pow, (2, 10)),
        'add': (operator.add, (3, 4)),
        'neg': (operator.neg, (5,)),
    }


async def test_inline_run_keeps_submission_order():
    result = await HomologyPooler(1).run(jobs())
    assert list(result) == ['pow', 'add', 'neg']
    assert result == {'pow': 1024, 'add': 7, 'neg': -5}


async def test_process_pool_matches_inline():
    inline = await HomologyPooler(1).run(jobs())
    pooled = await HomologyPooler(2).run(jobs())
    assert list(pooled) == list(inline)
    assert pooled == inline


def test_run_sync_with_homology_jobs():
    algebras = {f"C{n}": group_algebra(cyclic_group(n)) for n in (1, 2, 3)}
    job_map = {name: (homology_job, (a, 2)) for name, a in algebras.items()}
    result = HomologyPooler(2).run_sync(job_map)
    assert [r.certified for r in result.values()] == [[1, 0], [2, 0], [3, 0]]


def test_worker_count_is_at_least_one():
    assert HomologyPooler(0).workers == 1


async def test_job_errors_propagate():
    with pytest.raises(ZeroDivisionError):
        await HomologyPooler(1).run({'bad': (operator.truediv, (1, 0))})
