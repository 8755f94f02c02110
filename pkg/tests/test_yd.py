from __future__ import annotations

import itertools

import pytest

from hopfcross.field import GF
from hopfcross.groups import sweedler_fixture, sweedler_scaling
from hopfcross.hopf import GPair, g_conj, g_inv, g_mul, g_unit
from hopfcross.suites import canonical_modules
from hopfcross.tensor import DimensionError, ExactArray, compose, einsum
from hopfcross.yd import (
    Comodule,
    LabelError,
    YDModule,
    braiding,
    braiding_inverse,
    canonical_yd,
    conjugate_yd,
    from_comodule,
    left_dual,
    morphism_checks,
    right_dual,
    rigidity_maps,
    tensor_yd,
    to_comodule,
    trivial_yd,
    verify_braiding,
    verify_comodule_axioms,
    verify_hexagons,
    verify_rigidity,
    verify_yd,
)

from conftest import gfix, mods, pair_by_perms, sweedler


def _swap_grades(M: YDModule, i: int, j: int) -> YDModule:
    """Exchange the coaction values of H-basis elements ``i`` and ``j``."""
    perm = list(range(M.H.dim))
    perm[i], perm[j] = j, i
    co = M.coaction.scalars()
    co = [[[row[perm[k]] for k in range(M.H.dim)] for row in plane] for plane in co]
    return YDModule(M.H, M.label, M.action, ExactArray.from_scalars(co, M.field), name=f"{M.name}~")


@pytest.mark.parametrize("which", ["Z3", "sweedler"])
def test_canonical_modules_are_yd(which):
    for M in mods(which):
        assert verify_yd(M).ok, M.name


def test_canonical_yd_over_prime_field():
    H = sweedler_fixture(GF(7))
    g = GPair(H, sweedler_scaling(3, GF(7)), sweedler_scaling(2, GF(7)))
    assert verify_yd(canonical_yd(H, g)).ok


def test_swapped_grading_labels_fail_with_witness():
    fx = gfix("Z3")
    M = canonical_yd(fx.H, pair_by_perms(fx, (0, 2, 1), (0, 1, 2)), name="M")
    bad = _swap_grades(M, 1, 2)
    rep = verify_yd(bad)
    assert rep.passed("coassociativity") or not rep.get("coassociativity")
    failure = rep.first_failure()
    assert failure.axiom == "YD compatibility"
    assert failure.witness.startswith("basis (")
    assert failure.lhs != failure.rhs


def test_tensor_and_conjugate_labels_s3_sample():
    fx = gfix("S3")
    ps = [fx.pairs[i] for i in (0, 7, 19, 30)]
    M, N = (canonical_yd(fx.H, g, name=f"H{g.name}") for g in ps[1:3])
    T = tensor_yd(M, N)
    assert T.label == g_mul(M.label, N.label)
    assert verify_yd(T).ok
    for P in ps:
        C = conjugate_yd(P, N)
        assert C.label == g_conj(P, N.label)
        assert verify_yd(C).ok


def test_braiding_frozen_on_z3():
    # m (x) n -> alpha^-1(m_1) . n (x) m_0; for the canonical module of (inv, id)
    # on k(Z3), m = g has degree g alpha(g)^-1 = g2 and alpha^-1(g2) = g,
    # so g (x) e goes to g (x) g
    fx = gfix("Z3")
    g = pair_by_perms(fx, (0, 2, 1), (0, 1, 2))
    M = canonical_yd(fx.H, g)
    c = braiding(M, M)
    col = c[:, 1 * 3 + 0]
    assert col.nonzero() == [(1 * 3 + 1,)]


@pytest.mark.parametrize("which", ["Z3", "sweedler"])
def test_braiding_axioms(which):
    ms = mods(which)
    pairs = gfix("Z3").pairs if which == "Z3" else sweedler().pairs
    for M, N in itertools.product(ms[:3], repeat=2):
        rep = verify_braiding(M, N, pairs)
        assert rep.ok, rep.first_failure()
        assert len(rep.get("braiding conjugation invariance")) == len(pairs)


def test_hexagons_sweedler():
    ms = mods("sweedler")
    for U, V, W in itertools.product(ms[:2], ms[1:3], ms[2:4]):
        assert verify_hexagons(U, V, W).ok


def test_identity_is_not_a_braiding_morphism():
    # the plain flip is not colinear once the labels are nontrivial
    fx = gfix("Z3")
    M = canonical_yd(fx.H, pair_by_perms(fx, (0, 2, 1), (0, 1, 2)))
    N = canonical_yd(fx.H, pair_by_perms(fx, (0, 1, 2), (0, 2, 1)))
    flip = einsum("mn,pq->mpqn", ExactArray.identity(3), ExactArray.identity(3)).reshape(9, 9)
    src, dst = tensor_yd(M, N), tensor_yd(conjugate_yd(M.label, N), M)
    assert not all(r.ok for r in morphism_checks(flip, src, dst, "flip"))
    assert all(r.ok for r in morphism_checks(braiding(M, N), src, dst, "c"))


def test_braiding_inverse_is_two_sided():
    for M, N in itertools.product(mods("sweedler")[:3], repeat=2):
        c, ci = braiding(M, N), braiding_inverse(M, N)
        assert compose(c, ci) == ExactArray.identity(c.shape[0])


# -- duals ------------------------------------------------------------------------

@pytest.mark.parametrize("which", ["Z3", "sweedler"])
def test_duals_and_zigzags(which):
    for M in mods(which):
        for side, D in (("left", left_dual(M)), ("right", right_dual(M))):
            assert D.label == g_inv(M.label)
            assert verify_yd(D).ok
            rep = verify_rigidity(M, D, side)
            assert rep.ok, rep.first_failure()
            assert len(rep.get("zigzag on M")) == 1


def test_left_and_right_duals_differ_on_sweedler():
    M = mods("sweedler")[1]
    assert left_dual(M).action != right_dual(M).action


def test_corrupted_dual_coaction_breaks_evaluation_colinearity():
    fx = gfix("Z3")
    M = canonical_yd(fx.H, pair_by_perms(fx, (0, 2, 1), (0, 1, 2)), name="M")
    D = left_dual(M)
    # drop the beta^-1 alpha^-1 twist from the dual coaction
    co = einsum("jic,kc->ijk", M.coaction, fx.H.antipode)
    bad = YDModule(fx.H, D.label, D.action, co, name="M*~")
    rep = verify_rigidity(M, bad, "left")
    failed = [r for r in rep.failures() if r.axiom == "H-colinear"]
    assert any(r.location.endswith(" d") for r in failed)
    assert failed[0].witness.startswith("basis ")


def test_rigidity_maps_are_identity_tensors():
    M = mods("Z3")[0]
    b, d = rigidity_maps(M)
    assert b.shape == (M.dim ** 2, 1) and d.shape == (1, M.dim ** 2)
    assert sum(1 for _ in b.nonzero()) == M.dim


# -- comodules over the crossed coproduct ----------------------------------------------

@pytest.mark.parametrize("which", ["Z3", "sweedler"])
def test_comodule_round_trip(which):
    for M in mods(which):
        X = to_comodule(M)
        assert verify_comodule_axioms(X).ok
        back = from_comodule(X, M.H, M.label, M.name)
        assert back.action == M.action and back.coaction == M.coaction


def test_comodule_rejects_mismatched_coalgebra():
    M = mods("Z3")[0]
    other = to_comodule(mods("sweedler")[0])
    with pytest.raises(LabelError):
        from_comodule(other, M.H, M.label)
    with pytest.raises(DimensionError):
        Comodule(other.coalgebra, M.coaction)


def test_trivial_module_is_the_unit():
    fx = gfix("Z3")
    k = trivial_yd(fx.H)
    M = mods("Z3")[1]
    T = tensor_yd(k, M)
    assert T.label == M.label
    assert T.action == M.action and T.coaction == M.coaction
    assert k.label == g_unit(fx.H)


def test_module_shape_validation():
    fx = gfix("Z3")
    M = mods("Z3")[0]
    with pytest.raises(DimensionError):
        YDModule(fx.H, M.label, M.action, M.coaction[:, :, :2])
