from __future__ import annotations

import functools

import pytest

from hopfcross.groups import builtin_group, group_algebra, sweedler_fixture
from hopfcross.suites import canonical_modules, group_fixture, sweedler_fixture_set


@functools.lru_cache(maxsize=None)
def gfix(name: str):
    return group_fixture(name)


@functools.lru_cache(maxsize=None)
def sweedler():
    return sweedler_fixture_set()


@functools.lru_cache(maxsize=None)
def mods(which: str):
    fx = sweedler() if which == "sweedler" else gfix(which)
    return tuple(canonical_modules(fx.H, fx.pairs))


def pair_by_perms(fx, alpha, beta):
    """The pair in ``fx`` whose automorphisms act on group indices as ``alpha``, ``beta``."""
    from hopfcross.groups import gpair_perms

    for g in fx.pairs:
        if gpair_perms(fx.group, g) == (tuple(alpha), tuple(beta)):
            return g
    raise LookupError((alpha, beta))


@pytest.fixture
def Z3():
    return gfix("Z3")


@pytest.fixture
def S3():
    return gfix("S3")


@pytest.fixture
def SW():
    return sweedler()


@pytest.fixture
def kZ4():
    return group_algebra(builtin_group("Z4"))


@pytest.fixture
def H4():
    return sweedler_fixture()
