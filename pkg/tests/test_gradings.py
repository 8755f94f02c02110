from __future__ import annotations

import random
from collections import Counter

import pytest

from hopfcross.groups import GradingError, GroupOracle, degree_of, gpair_perms, yd_grading
from hopfcross.suites import Fixture, canonical_modules, suite_gradings
from hopfcross.tensor import ExactArray
from hopfcross.yd import left_dual

from conftest import gfix


@pytest.fixture(scope="module")
def s3_subset():
    fx = gfix("S3")
    pairs = random.Random(3).sample(fx.pairs, 6)
    return fx, canonical_modules(fx.H, pairs)


def test_grading_laws_z3():
    fx = gfix("Z3")
    rep = suite_gradings(fx)
    assert rep.ok, rep.first_failure()


def test_grading_laws_s3(s3_subset):
    fx, ms = s3_subset
    rep = suite_gradings(fx, ms)
    assert rep.ok, rep.first_failure()
    counts = Counter(r.axiom for r in rep)
    assert counts["tensor grading"] == sum(M.dim * N.dim for M in ms for N in ms)
    assert counts["braiding grading"] == counts["tensor grading"]


def test_displayed_dual_grading_law_fails_on_s3(s3_subset):
    # M* = (+)_a (M_{beta^-1 alpha^-1 (a)})* read literally: the functional dual
    # to m in M_a would have degree alpha beta (a); the generic left dual
    # disagrees, it gives beta^-1 alpha^-1 (a^-1)
    fx, ms = s3_subset
    G = fx.group
    inv, comp = GroupOracle.inv, GroupOracle.comp
    literal = engine = total = 0
    for M in ms:
        a_, b_ = gpair_perms(G, M.label)
        D = left_dual(M)
        for i in range(M.dim):
            e = ExactArray.basis_vector(M.dim, i, M.field)
            a = degree_of(M.coaction, e, G)
            d = degree_of(D.coaction, e, G)
            total += 1
            literal += d == comp(a_, b_)[a]
            engine += d == inv(b_)[inv(a_)[G.inv(a)]]
    assert engine == total
    assert literal < total


def test_yd_grading_decomposes_canonical_module():
    fx = gfix("S3")
    M = canonical_modules(fx.H, fx.pairs[7:8])[0]
    parts = yd_grading(M.coaction, fx.group)
    assert sum(v.shape[1] for v in parts.values()) == M.dim


def test_non_homogeneous_vector_has_no_degree():
    fx = gfix("Z3")
    M = canonical_modules(fx.H, fx.pairs[1:2])[0]
    degs = [degree_of(M.coaction, ExactArray.basis_vector(3, i), fx.group) for i in range(3)]
    i, j = next((i, j) for i in range(3) for j in range(i) if degs[i] != degs[j])
    v = ExactArray.basis_vector(3, i) + ExactArray.basis_vector(3, j)
    assert degree_of(M.coaction, v, fx.group) is None


def test_grading_requires_a_group():
    from hopfcross.suites import sweedler_fixture_set

    with pytest.raises(ValueError):
        suite_gradings(sweedler_fixture_set())
