"""Exact sparse tensors and a sparse ``einsum`` for the Turaev-algebra sweeps.

Structure tensors of crossed coproducts over group algebras have a handful of
nonzeros per slice, while the axiom checks live on ``N**3``-dimensional
sources.  :class:`SparseTensor` stores coordinates with int64 numerators and
one common denominator (like :class:`~hopfcross.tensor.ExactArray`); the
pairwise contraction is a sort-merge join in numpy.  Any step whose integer
bound could leave int64 raises :class:`SparseOverflowError` instead of
wrapping.
"""

from __future__ import annotations

import math
import re
from typing import Sequence

import numpy as np

from .field import QQ, Field, FieldError, PrimeField
from .report import MAX_WITNESS_TERMS, CheckResult, _label
from .tensor import INT_SAFE, DimensionError, ExactArray


class SparseOverflowError(ArithmeticError):
    """An exact sparse contraction would overflow int64."""


def _maxabs(a: np.ndarray) -> int:
    return int(np.abs(a).max()) if a.size else 0


class SparseTensor:
    """``data / den`` at integer ``coords`` (one row per axis), sorted and deduplicated."""

    __slots__ = ("shape", "coords", "data", "den", "field")

    def __init__(self, shape, coords, data, den: int = 1, field: Field = QQ, _canonical: bool = False):
        self.shape = tuple(int(s) for s in shape)
        self.field = field
        data = np.asarray(data, dtype=np.int64).reshape(-1)
        coords = np.asarray(coords, dtype=np.int64).reshape(len(self.shape), data.size)
        if _canonical:
            self.coords, self.data, self.den = coords, data, int(den)
        else:
            self.coords, self.data, self.den = _canonicalize(self.shape, coords, data, int(den), field)

    # -- conversion -------------------------------------------------------
    @classmethod
    def from_dense(cls, A: ExactArray) -> SparseTensor:
        if A.num.dtype == object:
            raise SparseOverflowError("entries exceed int64")
        if A.ndim == 0:
            return cls((), np.zeros((0, 1)), [A.num.item()], A.den, A.field)
        nz = np.nonzero(A.num)
        coords = np.array(nz, dtype=np.int64).reshape(A.ndim, -1)
        return cls(A.shape, coords, A.num[nz], A.den, A.field)

    def to_dense(self) -> ExactArray:
        out = np.zeros(self.shape, dtype=np.int64)
        if self.ndim == 0:
            out[()] = int(self.data.sum())
        else:
            out[tuple(self.coords)] = self.data
        return ExactArray(out, self.den, self.field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> SparseTensor:
        r = np.arange(n, dtype=np.int64)
        return cls((n, n), np.stack([r, r]), np.ones(n, dtype=np.int64), 1, field, _canonical=True)

    @property
    def ndim(self) -> int:
        return len(self.shape)

    @property
    def nnz(self) -> int:
        return int(self.data.size)

    def flat(self) -> np.ndarray:
        if not self.ndim:
            return np.zeros(self.nnz, dtype=np.int64)
        return np.ravel_multi_index(tuple(self.coords), self.shape)

    def value(self, v: int):
        F = self.field
        return F(v) if isinstance(F, PrimeField) else F(v) / self.den

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseTensor):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.den == other.den
            and np.array_equal(self.coords, other.coords)
            and np.array_equal(self.data, other.data)
        )

    __hash__ = None

    def __repr__(self):
        return f"SparseTensor(shape={self.shape}, nnz={self.nnz}, den={self.den})"


def _canonicalize(shape, coords, data, den, field):
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    ndim = len(shape)
    if isinstance(field, PrimeField):
        p = field.p
        if den != 1:
            data = (data % p) * pow(den % p, -1, p)
            den = 1
        data = data % p
    elif den < 0:
        data, den = -data, -den
    if data.size:
        flat = np.ravel_multi_index(tuple(coords), shape) if ndim else np.zeros(data.size, dtype=np.int64)
        order = np.argsort(flat, kind="stable")
        flat, data = flat[order], data[order]
        starts = np.flatnonzero(np.r_[True, flat[1:] != flat[:-1]])
        if starts.size != flat.size:
            counts = np.diff(np.r_[starts, flat.size])
            if _maxabs(data) * int(counts.max()) >= INT_SAFE:
                raise SparseOverflowError("sum of terms exceeds int64")
            data = np.add.reduceat(data, starts)
            flat = flat[starts]
            if isinstance(field, PrimeField):
                data = data % field.p
        keep = data != 0
        flat, data = flat[keep], data[keep]
        coords = np.array(np.unravel_index(flat, shape), dtype=np.int64).reshape(ndim, -1) if ndim else np.zeros((0, data.size), dtype=np.int64)
    else:
        coords = np.zeros((ndim, 0), dtype=np.int64)
    if not isinstance(field, PrimeField):
        if not data.size:
            den = 1
        else:
            g = math.gcd(int(np.gcd.reduce(np.abs(data))), den)
            if g > 1:
                data = data // g
                den //= g
    return coords, data, den


_SPEC = re.compile(r"^([a-zA-Z,]*)->([a-zA-Z]*)$")


def _diagonal(t: SparseTensor, labels: str) -> tuple[SparseTensor, str]:
    """Resolve repeated labels inside one operand."""
    seen: dict[str, int] = {}
    keep = np.ones(t.nnz, dtype=bool)
    axes = []
    for ax, c in enumerate(labels):
        if c in seen:
            keep &= t.coords[ax] == t.coords[seen[c]]
        else:
            seen[c] = ax
            axes.append(ax)
    if len(axes) == len(labels):
        return t, labels
    shape = tuple(t.shape[a] for a in axes)
    out = SparseTensor(shape, t.coords[axes][:, keep], t.data[keep], t.den, t.field)
    return out, "".join(labels[a] for a in axes)


def _pair(a: SparseTensor, la: str, b: SparseTensor, lb: str, keep: set) -> tuple[SparseTensor, str]:
    """Contract two operands over shared labels not in ``keep``."""
    shared = [c for c in la if c in lb]
    out_labels = [c for c in la if c not in lb or c in keep] + [c for c in lb if c not in la]
    dims = {c: a.shape[i] for i, c in enumerate(la)}
    for i, c in enumerate(lb):
        if c in dims and dims[c] != b.shape[i]:
            raise DimensionError(f"label {c!r}: {dims[c]} vs {b.shape[i]}")
        dims[c] = b.shape[i]
    if a.field != b.field:
        raise FieldError(f"field mismatch: {a.field} vs {b.field}")
    F = a.field
    if isinstance(F, PrimeField):
        bound = (F.p - 1) ** 2
    else:
        bound = _maxabs(a.data) * _maxabs(b.data)
    if bound >= INT_SAFE:
        raise SparseOverflowError(f"product bound {bound} exceeds int64")
    sdims = tuple(dims[c] for c in shared)
    if shared:
        ka = np.ravel_multi_index(tuple(a.coords[la.index(c)] for c in shared), sdims)
        kb = np.ravel_multi_index(tuple(b.coords[lb.index(c)] for c in shared), sdims)
    else:
        ka = np.zeros(a.nnz, dtype=np.int64)
        kb = np.zeros(b.nnz, dtype=np.int64)
    ob = np.argsort(kb, kind="stable")
    kb_sorted = kb[ob]
    lo = np.searchsorted(kb_sorted, ka, side="left")
    hi = np.searchsorted(kb_sorted, ka, side="right")
    cnt = hi - lo
    ia = np.repeat(np.arange(a.nnz), cnt)
    offs = np.arange(ia.size) - np.repeat(np.cumsum(cnt) - cnt, cnt)
    ib = ob[np.repeat(lo, cnt) + offs]
    data = a.data[ia] * b.data[ib]
    if isinstance(F, PrimeField):
        data = data % F.p
    rows = []
    for c in out_labels:
        rows.append(a.coords[la.index(c)][ia] if c in la else b.coords[lb.index(c)][ib])
    shape = tuple(dims[c] for c in out_labels)
    coords = np.array(rows, dtype=np.int64).reshape(len(out_labels), data.size)
    return SparseTensor(shape, coords, data, a.den * b.den, F), "".join(out_labels)


def sparse_einsum(spec: str, *ops: SparseTensor) -> SparseTensor:
    """Exact einsum over sparse tensors; operands are contracted left to right."""
    spec = spec.replace(" ", "")
    m = _SPEC.match(spec)
    if not m:
        raise ValueError(f"einsum spec needs explicit '->': {spec!r}")
    ins = m.group(1).split(",")
    out = m.group(2)
    if len(ins) != len(ops):
        raise ValueError(f"spec has {len(ins)} operands, got {len(ops)}")
    for t, l in zip(ops, ins):
        if t.ndim != len(l):
            raise DimensionError(f"operand {l!r} has shape {t.shape}")
    cur, lc = _diagonal(ops[0], ins[0])
    for k in range(1, len(ops)):
        nxt, ln = _diagonal(ops[k], ins[k])
        later = set(out).union(*ins[k + 1 :]) if k + 1 < len(ins) else set(out)
        cur, lc = _pair(cur, lc, nxt, ln, later)
    # sum out labels absent from the output, then order axes
    extra = [c for c in lc if c not in out]
    if extra:
        idx = [lc.index(c) for c in lc if c in out]
        cur = SparseTensor(tuple(cur.shape[i] for i in idx), cur.coords[idx], cur.data, cur.den, cur.field)
        lc = "".join(c for c in lc if c in out)
    if sorted(lc) != sorted(out):
        raise ValueError(f"output labels {out!r} not produced by {spec!r}")
    perm = [lc.index(c) for c in out]
    if perm == list(range(len(perm))):
        return cur
    return SparseTensor(tuple(cur.shape[i] for i in perm), cur.coords[perm], cur.data, cur.den, cur.field)


def _terms(t: SparseTensor, mask: np.ndarray, n_inputs: int) -> list:
    out = []
    for j in np.flatnonzero(mask)[:MAX_WITNESS_TERMS]:
        out.append([t.coords[n_inputs:, j].tolist(), t.field.format(t.value(int(t.data[j])))])
    return out


def compare_sparse(
    axiom: str,
    location: str,
    lhs: SparseTensor,
    rhs: SparseTensor,
    n_inputs: int,
    names: Sequence[Sequence[str]] | None = None,
) -> CheckResult:
    """Exact equality; the witness is the first input tuple where the sides differ."""
    if lhs.shape != rhs.shape:
        return CheckResult(axiom, location, "fail", witness=f"shape {lhs.shape} != {rhs.shape}")
    if lhs == rhs:
        return CheckResult(axiom, location, "pass")
    # bring both sides to a common denominator and find the first difference
    l = lhs.den * rhs.den // math.gcd(lhs.den, rhs.den)
    diff = SparseTensor(
        lhs.shape,
        np.concatenate([lhs.coords, rhs.coords], axis=1),
        np.concatenate([lhs.data * (l // lhs.den), -rhs.data * (l // rhs.den)]),
        l,
        lhs.field,
    )
    first = tuple(int(i) for i in diff.coords[:n_inputs, 0]) if diff.nnz else ()
    if n_inputs:
        witness = "basis " + _label(first, names or None)
    else:
        witness = "scalar identity"

    def at(t):
        mask = np.all(t.coords[:n_inputs] == np.array(first, dtype=np.int64).reshape(-1, 1), axis=0) if n_inputs else np.ones(t.nnz, bool)
        return _terms(t, mask, n_inputs)

    return CheckResult(axiom, location, "fail", witness=witness, lhs=at(lhs), rhs=at(rhs))
