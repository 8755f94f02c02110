from __future__ import annotations

import itertools
from collections import Counter

import pytest

from hopfcross.groups import GroupOracle, gpair_perms
from hopfcross.hopf import g_conj, g_inv, g_mul
from hopfcross.suites import group_fixture
from hopfcross.tensor import ExactArray, compose, einsum
from hopfcross.turaev import (
    CTElement,
    TuraevFamily,
    basis_element,
    ct_antipode,
    ct_counit,
    ct_crossing,
    ct_sigma,
    ct_unit,
    sigma_braiding,
    sigma_braiding_plain,
    sigma_inverse,
    sigma_inverse_candidate,
    verify_correspondence_shadow,
    verify_turaev_axioms,
)
from hopfcross.yd import braiding, to_comodule

from conftest import gfix, mods, pair_by_perms, sweedler

INV3, ID3 = (0, 2, 1), (0, 1, 2)
E, G, G2 = 0, 1, 2


@pytest.fixture(scope="module")
def z3():
    fx = gfix("Z3")
    fam = TuraevFamily(fx.H)
    fam.register(fx.pairs)
    x = pair_by_perms(fx, INV3, ID3)
    y = pair_by_perms(fx, ID3, INV3)
    return fx, fam, x, y


# -- frozen values on k(Z3), x = (inv, id), y = (id, inv) ------------------------------

def test_frozen_multiplication(z3):
    fx, fam, x, y = z3
    # (p_c|a)(p_d|b) = delta_{c,d} p_c | delta(a) delta alpha delta^-1 (b); here g^-1 g^-1 = g
    prod = basis_element(fam, x, G, G) * basis_element(fam, y, G, G)
    assert prod.label == g_mul(x, y)
    assert prod.terms() == [("p_g|g", "1")]
    assert (basis_element(fam, x, G, E) * basis_element(fam, y, E, E)).terms() == []


def test_frozen_sigma(z3):
    fx, fam, x, y = z3
    # sigma(p_c|a, p_d|b) = [b = delta(c)] [d = e]
    assert ct_sigma(basis_element(fam, x, G, E), basis_element(fam, y, E, G2)) == 1
    assert ct_sigma(basis_element(fam, x, G, E), basis_element(fam, y, E, G)) == 0
    assert ct_sigma(basis_element(fam, x, G, E), basis_element(fam, y, G, G2)) == 0


def test_frozen_antipode_and_crossing(z3):
    fx, fam, x, y = z3
    s = ct_antipode(basis_element(fam, x, G, E))
    assert s.label == g_inv(x) and s.terms() == [("p_g2|g2", "1")]
    psi = ct_crossing(x, basis_element(fam, y, G, G))
    assert psi.label == g_conj(x, y) and psi.terms() == [("p_g2|g2", "1")]


def test_unit_and_counit(z3):
    fx, fam, x, y = z3
    one = ct_unit(fam)
    assert one.terms() == [("p_e|e", "1"), ("p_g|e", "1"), ("p_g2|e", "1")]
    for a, c in itertools.product(range(3), repeat=2):
        b = basis_element(fam, y, a, c)
        assert one * b == b == b * one
        assert ct_counit(b) == (1 if a == E else 0)


@pytest.mark.parametrize("name", ["Z2", "Z3", "S3"])
def test_structure_maps_match_oracle(name):
    fx = gfix(name)
    fam = TuraevFamily(fx.H)
    fam.register(fx.pairs)
    O = GroupOracle(fx.group)
    P = {g.key(): gpair_perms(fx.group, g) for g in fx.pairs}
    sel = fx.pairs if len(fx.pairs) <= 4 else fx.pairs[::5]
    for x, y in itertools.product(sel, repeat=2):
        X, Y = P[x.key()], P[y.key()]
        assert fam.mult_tensor(x, y) == O.mult_tensor(X, Y)
        assert fam.crossing_matrix(x, y) == O.crossing_matrix(X, Y)
        assert fam.sigma_matrix(x, y) == O.sigma_matrix(X, Y)
        assert sigma_inverse(fam, x, y) == O.sigma_matrix(X, Y, inverse=True)
    for x in sel:
        assert fam.antipode_matrix(x) == O.antipode_matrix(P[x.key()])


def test_sigma_inverse_matches_candidate_on_sweedler():
    fx = sweedler()
    fam = TuraevFamily(fx.H)
    fam.register(fx.pairs)
    for x, y in itertools.product(fx.pairs, repeat=2):
        assert sigma_inverse(fam, x, y) == sigma_inverse_candidate(fam, x, y)


def test_textbook_inverse_through_s_fails_on_sweedler():
    # sigma(S(a), b) is the inverse for k(G) but not once S^2 != id
    fx = sweedler()
    fam = TuraevFamily(fx.H)
    fam.register(fx.pairs)
    hits = 0
    for x, y in itertools.product(fx.pairs, repeat=2):
        naive = einsum("ki,kj->ij", fam.antipode_matrix(x), fam.sigma_matrix(fam.inv(x), y))
        hits += naive == sigma_inverse(fam, x, y)
    assert hits == 0


def test_memoization_builds_each_component_once(z3):
    fx, fam, x, y = z3
    fam.component(x)
    fam.component(g_mul(x, y))
    before = fam.build_count
    for _ in range(3):
        fam.component(x)
        fam.component(g_mul(x, y))
    assert fam.build_count == before


def test_element_dimension_guard(z3):
    from hopfcross.tensor import DimensionError

    fx, fam, x, y = z3
    with pytest.raises(DimensionError):
        CTElement(fam, x, ExactArray.zeros((4,)))
    with pytest.raises(DimensionError):
        basis_element(fam, x, 0, 0) + basis_element(fam, y, 0, 0)


# -- axiom sweeps -------------------------------------------------------------------------

@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4"])
def test_turaev_axioms_exhaustive(name):
    fx = gfix(name)
    rep = verify_turaev_axioms(TuraevFamily(fx.H), fx.pairs)
    assert rep.ok, rep.first_failure()
    assert rep.header["mode"] == "exhaustive"
    n = len(fx.pairs)
    assert rep.header["coverage"]["triples"] == f"{n ** 3}/{n ** 3}"
    assert rep.passed("unit component is a coquasitriangular Hopf algebra")


def test_turaev_axioms_sweedler():
    fx = sweedler()
    rep = verify_turaev_axioms(TuraevFamily(fx.H), fx.pairs)
    assert rep.ok, rep.first_failure()


def test_sampled_sweep_records_seed_and_is_reproducible():
    fx = gfix("S3")
    pairs = fx.pairs
    a = verify_turaev_axioms(TuraevFamily(fx.H), pairs, sample=40, seed=11, solve_sigma=False)
    b = verify_turaev_axioms(TuraevFamily(fx.H), pairs, sample=40, seed=11, solve_sigma=False, jobs=3)
    assert a.ok
    assert a.header["seed"] == 11 and a.header["coverage"]["triples"] == "40/46656"
    assert a.to_jsonl() == b.to_jsonl()
    c = verify_turaev_axioms(TuraevFamily(fx.H), pairs, sample=40, seed=12, solve_sigma=False)
    assert c.to_jsonl() != a.to_jsonl()


def test_open_pair_set_is_reported():
    fx = gfix("S3")
    rep = verify_turaev_axioms(TuraevFamily(fx.H), fx.pairs[1:3], sample=1, solve_sigma=False)
    assert rep.get("pair set closed under the group law")[0].status == "fail"


# -- corruption of the crossing -------------------------------------------------------

class _FamilyWithoutPrecomposition(TuraevFamily):
    """psi_g(p |><| h) = p |><| L(h): the alpha^-1 beta precomposition on p is dropped."""

    def crossing_matrix(self, g, x):
        def build():
            L = compose(g.beta_inv, x.beta, g.alpha, x.beta_inv)
            return einsum("ar,kh->rkah", self.H.identity_map(), L).reshape(self.N, self.N)

        return self._memo(("crossing", g.key(), x.key()), build)


class _FamilyWithoutInnerTwist(TuraevFamily):
    """psi_g(p |><| h) = p o alpha^-1 beta |><| beta^-1 alpha(h): the delta-conjugation is dropped."""

    def crossing_matrix(self, g, x):
        def build():
            F = compose(g.alpha_inv, g.beta)
            L = compose(g.beta_inv, g.alpha)
            return einsum("ar,kh->rkah", F, L).reshape(self.N, self.N)

        return self._memo(("crossing", g.key(), x.key()), build)


def test_dropping_the_precomposition_is_detected():
    fx = gfix("Z3")
    rep = verify_turaev_axioms(_FamilyWithoutPrecomposition(fx.H), fx.pairs)
    failed = Counter(r.axiom for r in rep.failures())
    assert failed["crossing is comultiplicative"] > 0
    assert failed["TCT4"] > 0 and failed["TCT2"] > 0
    # convolution on the p-part commutes with the identity, so psi stays multiplicative
    assert failed["crossing (ii) compatible with m"] == 0
    assert rep.first_failure().witness.startswith("basis (")


def test_dropping_the_inner_twist_breaks_crossing_ii():
    fx = gfix("S3")
    rep = verify_turaev_axioms(_FamilyWithoutInnerTwist(fx.H), fx.pairs, sample=150, seed=1, solve_sigma=False)
    ii = [r for r in rep.failures() if r.axiom == "crossing (ii) compatible with m"]
    assert ii and ii[0].witness.startswith("basis (")
    assert ii[0].lhs != ii[0].rhs


# -- the sigma braiding ------------------------------------------------------------------

@pytest.mark.parametrize("which", ["Z3", "sweedler"])
def test_sigma_braiding_equals_yd_braiding(which):
    fx = sweedler() if which == "sweedler" else gfix(which)
    fam = TuraevFamily(fx.H)
    fam.register(fx.pairs)
    ms = mods(which)
    for M, N in itertools.product(ms, repeat=2):
        X = to_comodule(M, fam.component(M.label).coalgebra)
        Y = to_comodule(N, fam.component(N.label).coalgebra)
        assert sigma_braiding(fam, X, M.label, Y, N.label) == braiding(M, N)


def test_braiding_without_crossing_disagrees():
    fx = gfix("Z3")
    fam = TuraevFamily(fx.H)
    fam.register(fx.pairs)
    ms = mods("Z3")
    bad = 0
    for M, N in itertools.product(ms, repeat=2):
        X = to_comodule(M, fam.component(M.label).coalgebra)
        Y = to_comodule(N, fam.component(N.label).coalgebra)
        bad += sigma_braiding_plain(fam, X, M.label, Y, N.label) != braiding(M, N)
    assert bad == 8


def test_correspondence_shadow_report():
    fx = gfix("Z3")
    rep = verify_correspondence_shadow(TuraevFamily(fx.H), mods("Z3"), fx.pairs)
    assert rep.ok
    assert len(rep.get("braiding equals the sigma braiding")) == len(mods("Z3")) ** 2
