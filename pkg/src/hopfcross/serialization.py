"""JSON formats for Hopf algebras, automorphisms, coalgebras, YD modules and groups.

Scalars are strings (``"a"`` or ``"a/b"`` over Q, a residue over GF(p)); the
field is declared once per file.  Dense tensors are nested lists, sparse
structure (comultiplication, coaction) is a list of index-plus-scalar entries.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .coproduct import Coalgebra
from .field import Field, FieldError, field_from_json
from .groups import FiniteGroup, GroupError, group_from_json
from .hopf import FiniteDimHopfAlgebra, GPair
from .tensor import DimensionError, ExactArray, parse_scalar_array
from .yd import YDModule


class FormatError(ValueError):
    """Malformed input file."""


def _dense(a: ExactArray) -> list:
    F = a.field
    out = np.empty(a.shape, dtype=object)
    for idx in np.ndindex(*a.shape):
        out[idx] = F.format(a.item(*idx))
    return out.tolist()


def _entries(a: ExactArray) -> list:
    """Nonzero entries as ``[i, j, ..., scalar]``, ordered by index."""
    F = a.field
    return [[*map(int, idx), F.format(a.item(*idx))] for idx in a.nonzero()]


def _from_entries(rows, shape, F: Field, what: str) -> ExactArray:
    out = np.zeros(shape, dtype=object)
    out[...] = F.zero()
    if not isinstance(rows, list):
        raise FormatError(f"{what}: expected a list of entries")
    for row in rows:
        if not isinstance(row, list) or len(row) != len(shape) + 1:
            raise FormatError(f"{what}: entry {row!r} needs {len(shape)} indices and a scalar")
        idx = tuple(row[:-1])
        if not all(isinstance(i, int) and 0 <= i < n for i, n in zip(idx, shape)):
            raise FormatError(f"{what}: index {list(idx)} out of range for shape {shape}")
        out[idx] = out[idx] + F.parse(str(row[-1]))
    return ExactArray.from_scalars(out.tolist(), F)


def _tensor(obj, shape, F: Field, what: str) -> ExactArray:
    try:
        a = parse_scalar_array(obj, F)
    except (FieldError, ValueError, TypeError) as exc:
        raise FormatError(f"{what}: {exc}") from exc
    if a.shape != tuple(shape):
        raise FormatError(f"{what}: shape {a.shape}, expected {tuple(shape)}")
    return a


def _need(obj: dict, *keys: str, what: str):
    if not isinstance(obj, dict):
        raise FormatError(f"{what}: expected a JSON object")
    missing = [k for k in keys if k not in obj]
    if missing:
        raise FormatError(f"{what}: missing {', '.join(missing)}")


def _field(obj: dict, what: str) -> Field:
    try:
        return field_from_json(obj.get("field", "Q"))
    except (FieldError, ValueError, TypeError) as exc:
        raise FormatError(f"{what}: {exc}") from exc


def _basis(obj: dict, n: int, what: str) -> tuple[str, ...]:
    basis = obj.get("basis", [f"h{i}" for i in range(n)])
    if not isinstance(basis, list) or len(basis) != n or not all(isinstance(b, str) for b in basis):
        raise FormatError(f"{what}: basis must list {n} names")
    return tuple(basis)


# -- Hopf algebras ------------------------------------------------------------

def hopf_to_json(H: FiniteDimHopfAlgebra) -> dict:
    return {
        "field": H.field.to_json(),
        "name": H.name,
        "dim": H.dim,
        "basis": list(H.basis),
        "mult": _dense(H.mult),
        "unit": _dense(H.unit),
        "comult": [_entries(H.comult[i]) for i in range(H.dim)],
        "counit": _dense(H.counit),
        "antipode": _dense(H.antipode),
    }


def _comult_from_json(rows, n: int, F: Field, what: str) -> ExactArray:
    """``comult[i]`` lists the terms ``[j, k, c]`` of ``Delta(h_i)``."""
    if not isinstance(rows, list) or len(rows) != n:
        raise FormatError(f"{what}: comult must have one entry per basis vector")
    flat = []
    for i, terms in enumerate(rows):
        if not isinstance(terms, list):
            raise FormatError(f"{what}: comult entry {i} must be a list of [j, k, scalar]")
        flat.extend([i, *t] if isinstance(t, list) else [i, t] for t in terms)
    return _from_entries(flat, (n, n, n), F, f"{what}: comult")


def hopf_from_json(obj: dict) -> FiniteDimHopfAlgebra:
    what = "Hopf algebra"
    _need(obj, "dim", "mult", "unit", "comult", "counit", "antipode", what=what)
    F = _field(obj, what)
    n = obj["dim"]
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"{what}: dim must be a positive integer")
    try:
        return FiniteDimHopfAlgebra(
            F,
            _basis(obj, n, what),
            _tensor(obj["mult"], (n, n, n), F, "mult"),
            _tensor(obj["unit"], (n,), F, "unit"),
            _comult_from_json(obj["comult"], n, F, what),
            _tensor(obj["counit"], (n,), F, "counit"),
            _tensor(obj["antipode"], (n, n), F, "antipode"),
            name=str(obj.get("name", "H")),
        )
    except DimensionError as exc:
        raise FormatError(f"{what}: {exc}") from exc


# -- automorphisms and labels ------------------------------------------------------

def automorphism_to_json(f: ExactArray) -> dict:
    return {"field": f.field.to_json(), "matrix": _dense(f)}


def automorphism_from_json(obj: dict, H: FiniteDimHopfAlgebra) -> ExactArray:
    _need(obj, "matrix", what="automorphism")
    return _tensor(obj["matrix"], (H.dim, H.dim), H.field, "automorphism matrix")


def label_to_json(g: GPair) -> dict:
    out = {"alpha": _dense(g.alpha), "beta": _dense(g.beta)}
    if g.name:
        out["name"] = g.name
    return out


def label_from_json(obj: dict, H: FiniteDimHopfAlgebra, verify: bool = True) -> GPair:
    _need(obj, "alpha", "beta", what="label")
    n = H.dim
    a = _tensor(obj["alpha"], (n, n), H.field, "label alpha")
    b = _tensor(obj["beta"], (n, n), H.field, "label beta")
    return GPair(H, a, b, verify=verify, name=obj.get("name"))


# -- coalgebras ------------------------------------------------------------------

def coalgebra_to_json(C: Coalgebra) -> dict:
    return {
        "field": C.field.to_json(),
        "name": C.name,
        "dim": C.dim,
        "basis": list(C.basis),
        "comult": [_entries(C.comult[i]) for i in range(C.dim)],
        "counit": _dense(C.counit),
    }


def coalgebra_from_json(obj: dict) -> Coalgebra:
    what = "coalgebra"
    _need(obj, "dim", "comult", "counit", what=what)
    F = _field(obj, what)
    n = obj["dim"]
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"{what}: dim must be a positive integer")
    return Coalgebra(
        F,
        _basis(obj, n, what),
        _comult_from_json(obj["comult"], n, F, what),
        _tensor(obj["counit"], (n,), F, "counit"),
        str(obj.get("name", "C")),
    )


# -- YD modules ----------------------------------------------------------------

def yd_to_json(M: YDModule) -> dict:
    return {
        "field": M.field.to_json(),
        "name": M.name,
        "label": label_to_json(M.label),
        "dim": M.dim,
        "action": _dense(M.action),
        "coaction": _entries(M.coaction),
    }


def yd_from_json(obj: dict, H: FiniteDimHopfAlgebra) -> YDModule:
    what = "YD module"
    _need(obj, "label", "dim", "action", "coaction", what=what)
    if _field(obj, what) != H.field:
        raise FormatError(f"{what}: field does not match the Hopf algebra")
    m = obj["dim"]
    if not isinstance(m, int) or m < 1:
        raise FormatError(f"{what}: dim must be a positive integer")
    n = H.dim
    return YDModule(
        H,
        label_from_json(obj["label"], H),
        _tensor(obj["action"], (n, m, m), H.field, "action"),
        _from_entries(obj["coaction"], (m, m, n), H.field, "coaction"),
        str(obj.get("name", "M")),
    )


# -- groups ------------------------------------------------------------------------

def group_to_json(G: FiniteGroup) -> dict:
    return {"name": G.name, **G.to_json()}


def load_group(obj: dict) -> FiniteGroup:
    _need(obj, "table", what="group")
    try:
        return group_from_json(obj)
    except (GroupError, ValueError, TypeError, IndexError) as exc:
        raise FormatError(f"group: {exc}") from exc


# -- files -------------------------------------------------------------------------

def read_json(path: str | Path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True) + "\n"


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(dumps(obj), encoding="utf-8")
