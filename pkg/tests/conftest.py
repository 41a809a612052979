"""
Shared fixtures for the test suite.

Adds src/ to the import path the same way run.py does and exposes the
bundled instances as ready-built Rees semigroups.
"""

import os
import sys
from pathlib import Path

root_path = os.path.abspath(os.path.join(os.path.dirname(__file__), '..'))
src_path = os.path.join(root_path, 'src')
sys.path.insert(0, src_path)

import pytest

from instance import build_semigroup, load_config

INSTANCES = Path(root_path) / 'instances'


def instance_path(name: str) -> str:
    """Path of a bundled instance by stem; .conf first, then .json."""
    for suffix in ('.conf', '.json'):
        path = INSTANCES / f"{name}{suffix}"
        if path.exists():
            return str(path)
    raise FileNotFoundError(name)


def load_instance(name: str):
    return build_semigroup(load_config(instance_path(name)))


@pytest.fixture(scope='session')
def matrix_units():
    """2x2 matrix units with zero over the trivial group."""
    return load_instance('example2-matrix-units')


@pytest.fixture(scope='session')
def gzero():
    """C3 with a zero adjoined."""
    return load_instance('example1-gzero')


@pytest.fixture(scope='session')
def rectangular_band():
    return load_instance('rectangular-band')


@pytest.fixture(scope='session')
def c2_sparse():
    return load_instance('c2-sparse-sandwich')


@pytest.fixture(scope='session')
def c3_sparse():
    return load_instance('c3-sparse-sandwich')


@pytest.fixture(scope='session')
def s3_sandwich():
    return load_instance('s3-sandwich')


@pytest.fixture(scope='session')
def groupoid_derived():
    return load_instance('groupoid-derived')


@pytest.fixture(scope='session')
def klein_table():
    return load_instance('klein-table')
