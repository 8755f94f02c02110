from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfcross.field import GF, QQ
from hopfcross.sparse import SparseOverflowError, SparseTensor, compare_sparse, sparse_einsum
from hopfcross.tensor import ExactArray, einsum

SPECS = [
    ("ij,jk->ik", [(3, 4), (4, 2)]),
    ("iab,acd->icdb", [(2, 3, 3), (3, 2, 3)]),
    ("abm,mc->abc", [(2, 2, 3), (3, 2)]),
    ("aij,ib,kj,kc->abc", [(2, 3, 3), (3, 2), (3, 3), (3, 2)]),
    ("ii->i", [(3, 3)]),
    ("ij,ij->", [(2, 3), (2, 3)]),
    ("ka,a->k", [(3, 4), (4,)]),
]


def arrays(shape, field=QQ):
    n = int(np.prod(shape))
    vals = st.lists(st.sampled_from([0, 0, 0, 1, -1, 2, Fraction(1, 2), Fraction(-2, 3)]), min_size=n, max_size=n)
    return vals.map(lambda v: ExactArray.from_scalars(np.array(v, dtype=object).reshape(shape).tolist(), field))


@pytest.mark.parametrize("spec,shapes", SPECS)
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_sparse_einsum_matches_dense(spec, shapes, data):
    ops = [data.draw(arrays(s)) for s in shapes]
    dense = einsum(spec, *ops)
    sparse = sparse_einsum(spec, *[SparseTensor.from_dense(o) for o in ops])
    assert sparse.to_dense() == dense
    assert sparse == SparseTensor.from_dense(dense)


@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_sparse_einsum_over_prime_field(data):
    F = GF(5)
    a = data.draw(st.lists(st.integers(0, 4), min_size=9, max_size=9))
    b = data.draw(st.lists(st.integers(0, 4), min_size=9, max_size=9))
    A = ExactArray.from_scalars(np.array(a).reshape(3, 3).tolist(), F)
    B = ExactArray.from_scalars(np.array(b).reshape(3, 3).tolist(), F)
    got = sparse_einsum("ij,jk->ik", SparseTensor.from_dense(A), SparseTensor.from_dense(B))
    assert got.to_dense() == A @ B


def test_duplicates_are_summed_and_zeros_dropped():
    t = SparseTensor((2, 2), [[0, 0, 1], [1, 1, 0]], [2, -2, 3])
    assert t.nnz == 1
    assert t.to_dense() == ExactArray.from_scalars([[0, 0], [3, 0]])


def test_identity_and_scalar():
    eye = SparseTensor.identity(3)
    assert eye.to_dense() == ExactArray.identity(3)
    s = SparseTensor.from_dense(ExactArray.from_scalars(Fraction(3, 4)))
    assert s.shape == () and s.to_dense().item() == Fraction(3, 4)


def test_overflow_guard():
    big = SparseTensor((1, 1), [[0], [0]], [2**62])
    with pytest.raises(SparseOverflowError):
        sparse_einsum("ij,jk->ik", big, big)


def test_malformed_specs():
    a = SparseTensor.identity(2)
    with pytest.raises(ValueError):
        sparse_einsum("ij,jk", a, a)
    with pytest.raises(ValueError):
        sparse_einsum("ij->ik", a)


def test_compare_sparse_witness_is_first_differing_input():
    lhs = SparseTensor.from_dense(ExactArray.from_scalars([[1, 0], [0, 1]]))
    rhs = SparseTensor.from_dense(ExactArray.from_scalars([[1, 0], [1, 1]]))
    r = compare_sparse("demo", "here", lhs, rhs, 1, [["u", "v"]])
    assert r.status == "fail"
    assert r.witness == "basis 'v'"
    assert r.lhs == [[[1], "1"]] and r.rhs == [[[0], "1"], [[1], "1"]]
    assert compare_sparse("demo", "here", lhs, lhs, 1).status == "pass"
