"""Dense exact tensors over Q or GF(p).

An :class:`ExactArray` is an integer numpy array together with one common
denominator.  Contractions run on machine integers (or float64 through BLAS
when the integer results provably stay below 2**53) and fall back to Python
integers in ``object`` arrays once an overflow bound is exceeded, so every
result is exact.

Layout conventions used across the package:

* a vector is 1-d, a linear map ``f`` is a ``dst x src`` matrix whose column
  ``j`` is ``f(e_j)``;
* a ``Tensor2to1`` (multiplication, action) has axes ``[i, j, k]`` with
  ``e_i (x) e_j -> sum_k t[i, j, k] e_k``;
* a ``Tensor1to2`` (comultiplication, coaction) has axes ``[i, j, k]`` with
  ``e_i -> sum_{j,k} d[i, j, k] e_j (x) e_k``.
"""

from __future__ import annotations

import heapq
import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .field import QQ, Field, FieldError, PrimeField, Residue, Scalar

FLOAT_EXACT = 2**53
INT_SAFE = 2**62


class DimensionError(ValueError):
    """Shapes of operands do not fit together."""


class SingularMatrixError(ArithmeticError):
    """Raised by :func:`invert`; ``kernel`` is a nonzero vector with ``A @ kernel == 0``."""

    def __init__(self, message: str, kernel: "ExactArray | None" = None, defect: int = 0):
        super().__init__(message)
        self.kernel = kernel
        self.defect = defect


def _maxabs(num: np.ndarray) -> int:
    if num.size == 0:
        return 0
    if num.dtype == object:
        return max(abs(int(x)) for x in num.flat)
    return int(np.abs(num).max())


def _gcd_all(num: np.ndarray) -> int:
    if num.size == 0:
        return 0
    if num.dtype == object:
        return reduce(math.gcd, (int(x) for x in num.flat), 0)
    return int(np.gcd.reduce(num.ravel()))


def _narrow(num: np.ndarray) -> np.ndarray:
    """Return an int64 copy when every entry fits, else keep Python ints."""
    if num.dtype == object and _maxabs(num) < INT_SAFE:
        return num.astype(np.int64)
    return num


class ExactArray:
    """Immutable exact array: ``num / den`` with entries in ``field``."""

    __slots__ = ("num", "den", "field")

    def __init__(self, num, den: int = 1, field: Field = QQ, _canonical: bool = False):
        num = np.asarray(num)
        if num.dtype != object and not np.issubdtype(num.dtype, np.integer):
            raise TypeError(f"numerators must be integers, got dtype {num.dtype}")
        if num.dtype != object and num.dtype != np.int64:
            num = num.astype(np.int64)
        self.field = field
        if _canonical:
            self.num, self.den = num, int(den)
        else:
            self.num, self.den = self._canonicalize(num, int(den), field)
        self.num.setflags(write=False)

    @staticmethod
    def _canonicalize(num: np.ndarray, den: int, field: Field):
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if isinstance(field, PrimeField):
            p = field.p
            if den != 1:
                inv = pow(den % p, -1, p)
                num = num * inv if num.dtype == object else (num % p) * inv
            num = num % p
            return _narrow(num) if num.dtype == object else num, 1
        if den < 0:
            num, den = -num, -den
        g = math.gcd(_gcd_all(num), den)
        if g == 0:
            return num, 1
        if g > 1:
            num = num // g
            den //= g
        if not num.any():
            den = 1
        return _narrow(num), den

    # -- construction ---------------------------------------------------
    @classmethod
    def zeros(cls, shape, field: Field = QQ) -> ExactArray:
        return cls(np.zeros(shape, dtype=np.int64), 1, field, _canonical=True)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> ExactArray:
        return cls(np.eye(n, dtype=np.int64), 1, field, _canonical=True)

    @classmethod
    def basis_vector(cls, n: int, i: int, field: Field = QQ) -> ExactArray:
        v = np.zeros(n, dtype=np.int64)
        v[i] = 1
        return cls(v, 1, field, _canonical=True)

    @classmethod
    def from_scalars(cls, data, field: Field = QQ) -> ExactArray:
        """Build from a nested sequence of scalars (ints, Fractions, Residues or strings)."""
        arr = np.array(data, dtype=object)
        flat = [field(x) for x in arr.flat]
        if isinstance(field, PrimeField):
            num = np.array([x.value for x in flat], dtype=object).reshape(arr.shape)
            return cls(_narrow(num), 1, field)
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (x.denominator for x in flat), 1)
        num = np.array([x.numerator * (den // x.denominator) for x in flat], dtype=object)
        return cls(num.reshape(arr.shape), den, field)

    @classmethod
    def from_fn(cls, shape, fn, field: Field = QQ) -> ExactArray:
        data = np.empty(shape, dtype=object)
        for idx in np.ndindex(*shape):
            data[idx] = fn(*idx)
        return cls.from_scalars(data.tolist() if data.ndim else data.item(), field)

    # -- basic properties -----------------------------------------------
    @property
    def shape(self) -> tuple:
        return self.num.shape

    @property
    def ndim(self) -> int:
        return self.num.ndim

    def __len__(self):
        return self.shape[0]

    def _scalar(self, n) -> Scalar:
        if isinstance(self.field, PrimeField):
            return Residue(int(n), self.field.p)
        return Fraction(int(n), self.den)

    def item(self, *idx) -> Scalar:
        return self._scalar(self.num[idx])

    def scalars(self) -> list:
        """Entries as a nested list of field scalars."""
        out = np.empty(self.shape, dtype=object)
        for idx in np.ndindex(*self.shape):
            out[idx] = self._scalar(self.num[idx])
        return out.tolist() if self.ndim else out.item()

    def format(self) -> list:
        """Entries as nested lists of canonical scalar strings."""
        out = np.empty(self.shape, dtype=object)
        for idx in np.ndindex(*self.shape):
            out[idx] = self.field.format(self._scalar(self.num[idx]))
        return out.tolist() if self.ndim else out.item()

    def nonzero(self) -> list[tuple]:
        return [tuple(int(i) for i in idx) for idx in zip(*np.nonzero(self.num))]

    def is_zero(self) -> bool:
        return not self.num.any()

    def is_integral(self) -> bool:
        return self.den == 1

    # -- reshaping ------------------------------------------------------
    def _wrap(self, num) -> ExactArray:
        return ExactArray(num, self.den, self.field, _canonical=True)

    def reshape(self, *shape) -> ExactArray:
        return self._wrap(self.num.reshape(*shape))

    def transpose(self, *axes) -> ExactArray:
        return self._wrap(self.num.transpose(*axes) if axes else self.num.T)

    @property
    def T(self) -> ExactArray:
        return self.transpose()

    def __getitem__(self, key) -> ExactArray:
        sub = self.num[key]
        if np.ndim(sub) == 0:
            sub = np.asarray(sub).reshape(())
        return ExactArray(np.array(sub), self.den, self.field)

    # -- arithmetic -----------------------------------------------------
    def _check_field(self, other: ExactArray):
        if self.field != other.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: ExactArray) -> ExactArray:
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionError(f"cannot add shapes {self.shape} and {other.shape}")
        l = self.den * other.den // math.gcd(self.den, other.den)
        a, b = l // self.den, l // other.den
        bound = _maxabs(self.num) * a + _maxabs(other.num) * b
        n1, n2 = self.num, other.num
        if bound >= INT_SAFE:
            n1, n2 = n1.astype(object), n2.astype(object)
        return ExactArray(n1 * a + n2 * b, l, self.field)

    def __neg__(self) -> ExactArray:
        return ExactArray(-self.num, self.den, self.field)

    def __sub__(self, other: ExactArray) -> ExactArray:
        return self + (-other)

    def scale(self, c) -> ExactArray:
        c = self.field(c)
        if isinstance(self.field, PrimeField):
            num = self.num.astype(object) * c.value
            return ExactArray(num, 1, self.field)
        c = Fraction(c)
        num = self.num.astype(object) * c.numerator
        return ExactArray(num, self.den * c.denominator, self.field)

    def __mul__(self, c) -> ExactArray:
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: ExactArray) -> ExactArray:
        if self.ndim == 2 and other.ndim == 2:
            return einsum("ij,jk->ik", self, other)
        if self.ndim == 2 and other.ndim == 1:
            return einsum("ij,j->i", self, other)
        raise DimensionError("@ expects a matrix on the left")

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactArray):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and self.den == other.den
            and np.array_equal(self.num, other.num)
        )

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def key(self) -> tuple:
        """Hashable canonical serialization (used to key automorphism pairs)."""
        return (self.shape, self.den, tuple(int(x) for x in self.num.flat))

    def __repr__(self):
        return f"ExactArray({self.format()!r}, field={self.field})"


def einsum(subscripts: str, *operands: ExactArray) -> ExactArray:
    """Exact ``numpy.einsum`` over ExactArrays (explicit ``->`` output required)."""
    if "->" not in subscripts:
        raise ValueError("einsum needs an explicit output: 'ij,jk->ik'")
    field = operands[0].field
    for op in operands[1:]:
        if op.field != field:
            raise FieldError(f"field mismatch: {field} vs {op.field}")
    inputs, output = subscripts.replace(" ", "").split("->")
    terms = inputs.split(",")
    if len(terms) != len(operands):
        raise DimensionError(f"{subscripts!r} names {len(terms)} operands, got {len(operands)}")
    sizes: dict[str, int] = {}
    for term, op in zip(terms, operands):
        if len(term) != op.ndim:
            raise DimensionError(f"operand of shape {op.shape} does not match {term!r}")
        for ch, n in zip(term, op.shape):
            if sizes.setdefault(ch, n) != n:
                raise DimensionError(f"index {ch!r} has sizes {sizes[ch]} and {n}")
    contracted = 1
    for ch, n in sizes.items():
        if ch not in output:
            contracted *= n
    bound = contracted
    for op in operands:
        bound *= _maxabs(op.num)
    nums = [op.num for op in operands]
    if bound < FLOAT_EXACT:
        res = np.einsum(subscripts, *(n.astype(np.float64) for n in nums), optimize=True)
        res = np.rint(res).astype(np.int64)
    elif bound < INT_SAFE and all(n.dtype != object for n in nums):
        res = np.einsum(subscripts, *nums, optimize=True)
    else:
        res = np.einsum(subscripts, *(n.astype(object) for n in nums), optimize=True)
        res = np.asarray(res, dtype=object)
    den = 1
    for op in operands:
        den *= op.den
    return ExactArray(res, den, field)


def contract(t: ExactArray, u: ExactArray, v: ExactArray) -> ExactArray:
    """Evaluate a Tensor2to1 on ``u (x) v``."""
    if t.ndim != 3 or u.shape != (t.shape[0],) or v.shape != (t.shape[1],):
        raise DimensionError(f"cannot contract {t.shape} with {u.shape}, {v.shape}")
    return einsum("ijk,i,j->k", t, u, v)


def cocontract(d: ExactArray, u: ExactArray) -> ExactArray:
    """Evaluate a Tensor1to2 on ``u``; result has shape ``(dim_left, dim_right)``."""
    if d.ndim != 3 or u.shape != (d.shape[0],):
        raise DimensionError(f"cannot cocontract {d.shape} with {u.shape}")
    return einsum("ijk,i->jk", d, u)


def map_tensor(f: ExactArray, g: ExactArray) -> ExactArray:
    """Kronecker product ``f (x) g`` acting on ``V (x) W`` with row-major basis order."""
    (a, b), (c, d) = f.shape, g.shape
    return einsum("ij,kl->ikjl", f, g).reshape(a * c, b * d)


def compose(*maps: ExactArray) -> ExactArray:
    """``compose(f, g, h) = f o g o h``."""
    out = maps[-1]
    for f in reversed(maps[:-1]):
        if f.shape[1] != out.shape[0]:
            raise DimensionError(f"cannot compose {f.shape} after {out.shape}")
        out = einsum("ij,jk->ik", f, out)
    return out


def transpose(f: ExactArray) -> ExactArray:
    """Matrix of ``p -> p o f`` on dual coordinates."""
    return f.T


def flip(m: int, n: int, field: Field = QQ) -> ExactArray:
    """The swap ``V (x) W -> W (x) V`` for dim V = m, dim W = n."""
    P = np.zeros((n * m, m * n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            P[j * m + i, i * n + j] = 1
    return ExactArray(P, 1, field, _canonical=True)


def power(f: ExactArray, k: int) -> ExactArray:
    out = ExactArray.identity(f.shape[0], f.field)
    for _ in range(k):
        out = compose(f, out)
    return out


# -- exact elimination ----------------------------------------------------

def _rows_as_scalars(A: ExactArray) -> list[list]:
    return A.scalars()


def rref(A: ExactArray) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over the field; returns (rows, pivot columns)."""
    rows = _rows_as_scalars(A)
    field = A.field
    nrows = len(rows)
    ncols = A.shape[1] if A.ndim == 2 else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def rank(A: ExactArray) -> int:
    return len(rref(A)[1])


def kernel(A: ExactArray) -> list[ExactArray]:
    """Basis of the right null space of ``A``."""
    rows, pivots = rref(A)
    n = A.shape[1]
    free = [c for c in range(n) if c not in pivots]
    field = A.field
    basis = []
    for fcol in free:
        v = [field.zero() for _ in range(n)]
        v[fcol] = field.one()
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fcol]
        basis.append(ExactArray.from_scalars(v, field))
    return basis


def column_space(A: ExactArray) -> ExactArray:
    """Columns of ``A`` at pivot positions: a basis of the image (as a matrix)."""
    _, pivots = rref(A)
    return A[:, pivots] if pivots else ExactArray.zeros((A.shape[0], 0), A.field)


def invert(A: ExactArray) -> ExactArray:
    """Exact inverse; raises :class:`SingularMatrixError` carrying a kernel witness."""
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionError(f"invert needs a square matrix, got {A.shape}")
    n = A.shape[0]
    field = A.field
    rows = _rows_as_scalars(A)
    aug = [row + [field.one() if i == j else field.zero() for j in range(n)] for i, row in enumerate(rows)]
    for c in range(n):
        piv = next((i for i in range(c, n) if aug[i][c]), None)
        if piv is None:
            ker = kernel(A)
            raise SingularMatrixError(f"matrix is singular (rank {n - len(ker)} < {n})", ker[0], len(ker))
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = field.inv(aug[c][c])
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return ExactArray.from_scalars([row[n:] for row in aug], field)


def solve_sparse(rows: Sequence[dict], rhs: Sequence, nvars: int, field: Field = QQ):
    """Solve a sparse linear system exactly.

    ``rows[i]`` maps column -> coefficient (field scalars; plain ints are
    fine over Q), ``rhs[i]`` is a scalar.  Returns ``(solution list, defect)`` where ``defect`` is the
    dimension of the solution space of the homogeneous system, or
    ``(None, defect)`` if inconsistent.  Free variables are set to zero.
    """
    zero = field.zero()
    # pivot row c has leading column c and only larger columns otherwise
    pivots: dict[int, tuple[dict, Scalar]] = {}
    inconsistent = False
    modular = isinstance(field, PrimeField)
    for r, b in zip(rows, rhs):
        row = {c: field(v) if modular else v for c, v in r.items() if v}
        if modular:
            row = {c: v for c, v in row.items() if v}
            b = field(b)
        heap = [c for c in row if c in pivots]
        heapq.heapify(heap)
        while heap:
            c = heapq.heappop(heap)
            f = row.pop(c, None)
            if not f:
                continue
            prow, pb = pivots[c]
            for cc, vv in prow.items():
                if cc == c:
                    continue
                old = row.get(cc)
                nv = (old if old is not None else zero) - f * vv
                if nv:
                    if old is None and cc in pivots:
                        heapq.heappush(heap, cc)
                    row[cc] = nv
                elif old is not None:
                    del row[cc]
            b = b - f * pb
        if not row:
            inconsistent = inconsistent or bool(b)
            continue
        b = field(b)
        c = min(row)
        if row[c] == 1:
            pivots[c] = (row, b)
        else:
            inv = field.inv(field(row[c]))
            pivots[c] = ({cc: vv * inv for cc, vv in row.items()}, b * inv)
    defect = nvars - len(pivots)
    if inconsistent:
        return None, defect
    sol = [zero] * nvars
    for c in sorted(pivots, reverse=True):
        prow, b = pivots[c]
        for cc, vv in prow.items():
            if cc != c:
                b = b - vv * sol[cc]
        sol[c] = b
    return sol, defect


_SCALAR_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_scalar_array(data, field: Field) -> ExactArray:
    """Parse nested lists of scalar strings (or ints) into an ExactArray."""
    def conv(x):
        if isinstance(x, str) and not _SCALAR_RE.match(x.strip()):
            raise FieldError(f"malformed scalar {x!r}")
        return field.parse(str(x))
    arr = np.array(data, dtype=object)
    out = np.empty(arr.shape, dtype=object)
    for idx in np.ndindex(*arr.shape):
        out[idx] = conv(arr[idx])
    return ExactArray.from_scalars(out.tolist() if out.ndim else out.item(), field)


def stack(arrays: Iterable[ExactArray]) -> ExactArray:
    arrays = list(arrays)
    field = arrays[0].field
    den = reduce(lambda a, b: a * b // math.gcd(a, b), (a.den for a in arrays), 1)
    nums = [a.num.astype(object) * (den // a.den) if den != a.den else a.num for a in arrays]
    if any(n.dtype == object for n in nums):
        nums = [n.astype(object) for n in nums]
    return ExactArray(np.stack(nums), den, field)
