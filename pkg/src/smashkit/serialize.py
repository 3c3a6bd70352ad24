"""Canonical JSON formats for every object the CLI reads or writes.

All scalars are exact strings ("a" or "a/b" over QQ, decimal residues over
GF(p)); matrices are sparse entry lists sorted by (row, col) with zeros
omitted; files carry "format": 1.  Saving is canonical (sorted keys, fixed
indentation), so output is stable across runs.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional

from .biproduct import BialgebraFactorisationWitness, BiproductData
from .cosmash import CosmashData
from .errors import FormatError, SmashkitError
from .fields import FieldKind, FieldSpec, Scalar
from .hopfmod import TwistedHopfModule
from .linalg import Matrix
from .smash import SmashData
from .structures import (
    BialgebraCandidate,
    FiniteDimAlgebra,
    FiniteDimCoalgebra,
    HopfAlgebra,
)

FORMAT_VERSION = 1


# -- fields ------------------------------------------------------------------


def field_to_json(f: FieldSpec) -> dict:
    if f.kind is FieldKind.PRIME:
        return {"kind": "prime", "p": f.p}
    return {"kind": "rational"}


def field_from_json(obj, path="field") -> FieldSpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise FormatError(f"{path}: expected a field object")
    kind = obj["kind"]
    if kind == "rational":
        return FieldSpec.rational()
    if kind == "prime":
        try:
            return FieldSpec.prime(int(obj["p"]))
        except (KeyError, ValueError) as exc:
            raise FormatError(f"{path}: bad prime field: {exc}") from exc
    raise FormatError(f"{path}: unknown field kind {kind!r}")


def _scalar_str(s: Scalar) -> str:
    return str(s)


def _parse_scalar(field: FieldSpec, text, path) -> Scalar:
    if not isinstance(text, str):
        raise FormatError(f"{path}: scalars must be strings, got {type(text).__name__}")
    try:
        return Scalar.parse(field, text)
    except (ValueError, ZeroDivisionError, SmashkitError) as exc:
        raise FormatError(f"{path}: bad scalar {text!r}: {exc}") from exc


# -- matrices -----------------------------------------------------------------


def matrix_to_json(m: Matrix) -> dict:
    entries = []
    for r in range(m.rows):
        for c in range(m.cols):
            v = m.entry(r, c)
            if v:
                entries.append({"r": r, "c": c, "v": _scalar_str(v)})
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def matrix_from_json(field: FieldSpec, obj, path="matrix") -> Matrix:
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected a matrix object")
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: missing rows/cols: {exc}") from exc
    entries = []
    for k, e in enumerate(obj.get("entries", [])):
        epath = f"{path}.entries[{k}]"
        try:
            r, c = int(e["r"]), int(e["c"])
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"{epath}: bad indices: {exc}") from exc
        if not (0 <= r < rows and 0 <= c < cols):
            raise FormatError(f"{epath}: index ({r},{c}) outside {rows}x{cols}")
        entries.append((r, c, _parse_scalar(field, e.get("v"), epath)))
    return Matrix.from_entries(field, rows, cols, entries)


# -- structure objects -----------------------------------------------------------


@dataclass
class LoadedObject:
    """A (co/bi/Hopf)algebra file: whichever halves were present."""

    field: FieldSpec
    dim: int
    algebra: Optional[FiniteDimAlgebra]
    coalgebra: Optional[FiniteDimCoalgebra]
    antipode: Optional[Matrix]
    basis_names: Optional[list[str]]

    def as_algebra(self, path="object") -> FiniteDimAlgebra:
        if self.algebra is None:
            raise FormatError(f"{path}: no mult/unit present")
        return self.algebra

    def as_coalgebra(self, path="object") -> FiniteDimCoalgebra:
        if self.coalgebra is None:
            raise FormatError(f"{path}: no comult/counit present")
        return self.coalgebra

    def as_bialgebra(self, path="object") -> BialgebraCandidate:
        return BialgebraCandidate(self.as_algebra(path), self.as_coalgebra(path))

    def as_hopf(self, path="object") -> HopfAlgebra:
        if self.antipode is None:
            raise FormatError(f"{path}: no antipode present")
        return HopfAlgebra(self.as_bialgebra(path), self.antipode)


def object_to_json(x) -> dict:
    if isinstance(x, HopfAlgebra):
        out = object_to_json(x.bialgebra)
        out["antipode"] = matrix_to_json(x.antipode)
        return out
    if isinstance(x, BialgebraCandidate):
        out = object_to_json(x.algebra)
        cout = object_to_json(x.coalgebra)
        out["comult"] = cout["comult"]
        out["counit"] = cout["counit"]
        if out.get("basis_names") is None:
            out.pop("basis_names", None)
            if cout.get("basis_names"):
                out["basis_names"] = cout["basis_names"]
        return out
    out = {
        "format": FORMAT_VERSION,
        "field": field_to_json(x.field),
        "dim": x.dim,
    }
    if x.basis_names:
        out["basis_names"] = list(x.basis_names)
    if isinstance(x, FiniteDimAlgebra):
        n = x.dim
        mult = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    v = x.mult.entry(k, i * n + j)
                    if v:
                        mult.append({"i": i, "j": j, "k": k, "c": _scalar_str(v)})
        out["mult"] = mult
        out["unit"] = [_scalar_str(x.unit.entry(r, 0)) for r in range(n)]
        return out
    if isinstance(x, FiniteDimCoalgebra):
        n = x.dim
        comult = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    v = x.comult.entry(j * n + k, i)
                    if v:
                        comult.append({"i": i, "j": j, "k": k, "c": _scalar_str(v)})
        out["comult"] = comult
        out["counit"] = [_scalar_str(x.counit.entry(0, c)) for c in range(n)]
        return out
    raise TypeError(f"cannot serialize {type(x).__name__}")


def object_from_json(obj, path="object") -> LoadedObject:
    if not isinstance(obj, dict):
        raise FormatError(f"{path}: expected an object")
    if obj.get("format") != FORMAT_VERSION:
        raise FormatError(f"{path}: missing or unsupported format (want {FORMAT_VERSION})")
    field = field_from_json(obj.get("field"), f"{path}.field")
    try:
        dim = int(obj["dim"])
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"{path}: bad dim: {exc}") from exc
    if dim < 1:
        raise FormatError(f"{path}: dim must be positive")
    names = obj.get("basis_names")
    if names is not None:
        if not isinstance(names, list) or len(names) != dim:
            raise FormatError(f"{path}.basis_names: need {dim} names")
        names = [str(nm) for nm in names]

    algebra = None
    if "mult" in obj or "unit" in obj:
        if "mult" not in obj or "unit" not in obj:
            raise FormatError(f"{path}: mult and unit must come together")
        entries = []
        for t, e in enumerate(obj["mult"]):
            epath = f"{path}.mult[{t}]"
            try:
                i, j, k = int(e["i"]), int(e["j"]), int(e["k"])
            except (KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"{epath}: bad indices: {exc}") from exc
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise FormatError(f"{epath}: indices outside dim {dim}")
            entries.append((k, i * dim + j, _parse_scalar(field, e.get("c"), epath)))
        unit = obj["unit"]
        if not isinstance(unit, list) or len(unit) != dim:
            raise FormatError(f"{path}.unit: need {dim} scalars")
        algebra = FiniteDimAlgebra(
            field,
            dim,
            Matrix.from_entries(field, dim, dim * dim, entries),
            Matrix.column_vector(field, [_parse_scalar(field, v, f"{path}.unit") for v in unit]),
            names,
        )

    coalgebra = None
    if "comult" in obj or "counit" in obj:
        if "comult" not in obj or "counit" not in obj:
            raise FormatError(f"{path}: comult and counit must come together")
        entries = []
        for t, e in enumerate(obj["comult"]):
            epath = f"{path}.comult[{t}]"
            try:
                i, j, k = int(e["i"]), int(e["j"]), int(e["k"])
            except (KeyError, TypeError, ValueError) as exc:
                raise FormatError(f"{epath}: bad indices: {exc}") from exc
            if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                raise FormatError(f"{epath}: indices outside dim {dim}")
            entries.append((j * dim + k, i, _parse_scalar(field, e.get("c"), epath)))
        counit = obj["counit"]
        if not isinstance(counit, list) or len(counit) != dim:
            raise FormatError(f"{path}.counit: need {dim} scalars")
        coalgebra = FiniteDimCoalgebra(
            field,
            dim,
            Matrix.from_entries(field, dim * dim, dim, entries),
            Matrix.row_vector(field, [_parse_scalar(field, v, f"{path}.counit") for v in counit]),
            names,
        )

    antipode = None
    if "antipode" in obj:
        antipode = matrix_from_json(field, obj["antipode"], f"{path}.antipode")
        if antipode.shape != (dim, dim):
            raise FormatError(f"{path}.antipode: must be {dim}x{dim}")

    if algebra is None and coalgebra is None:
        raise FormatError(f"{path}: neither algebra nor coalgebra data present")
    return LoadedObject(field, dim, algebra, coalgebra, antipode, names)


# -- composite data files -----------------------------------------------------------


def _wrap(build, path):
    try:
        return build()
    except FormatError:
        raise
    except SmashkitError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def smash_to_json(d: SmashData) -> dict:
    return {
        "format": FORMAT_VERSION,
        "A": object_to_json(d.A),
        "B": object_to_json(d.B),
        "R": matrix_to_json(d.R),
    }


def smash_from_json(obj, path="smash") -> SmashData:
    for key in ("A", "B", "R"):
        if key not in obj:
            raise FormatError(f"{path}: missing {key}")
    a = object_from_json(obj["A"], f"{path}.A").as_algebra(f"{path}.A")
    b = object_from_json(obj["B"], f"{path}.B").as_algebra(f"{path}.B")
    r = matrix_from_json(a.field, obj["R"], f"{path}.R")
    return _wrap(lambda: SmashData(a, b, r), path)


def cosmash_to_json(d: CosmashData) -> dict:
    return {
        "format": FORMAT_VERSION,
        "C": object_to_json(d.C),
        "D": object_to_json(d.D),
        "W": matrix_to_json(d.W),
    }


def cosmash_from_json(obj, path="cosmash") -> CosmashData:
    for key in ("C", "D", "W"):
        if key not in obj:
            raise FormatError(f"{path}: missing {key}")
    c = object_from_json(obj["C"], f"{path}.C").as_coalgebra(f"{path}.C")
    d = object_from_json(obj["D"], f"{path}.D").as_coalgebra(f"{path}.D")
    w = matrix_from_json(c.field, obj["W"], f"{path}.W")
    return _wrap(lambda: CosmashData(c, d, w), path)


def biproduct_to_json(d: BiproductData) -> dict:
    return {
        "format": FORMAT_VERSION,
        "L": object_to_json(d.L),
        "H": object_to_json(d.H),
        "R": matrix_to_json(d.R),
        "W": matrix_to_json(d.W),
    }


def biproduct_from_json(obj, path="biproduct") -> BiproductData:
    for key in ("L", "H", "R", "W"):
        if key not in obj:
            raise FormatError(f"{path}: missing {key}")
    l = object_from_json(obj["L"], f"{path}.L").as_bialgebra(f"{path}.L")
    h = object_from_json(obj["H"], f"{path}.H").as_bialgebra(f"{path}.H")
    r = matrix_from_json(l.field, obj["R"], f"{path}.R")
    w = matrix_from_json(l.field, obj["W"], f"{path}.W")
    return _wrap(lambda: BiproductData(l, h, r, w), path)


def witness_to_json(w: BialgebraFactorisationWitness) -> dict:
    return {
        "format": FORMAT_VERSION,
        "K": object_to_json(w.K),
        "L": object_to_json(w.L),
        "H": object_to_json(w.H),
        "iL": matrix_to_json(w.iL),
        "iH": matrix_to_json(w.iH),
        "pL": matrix_to_json(w.pL),
        "pH": matrix_to_json(w.pH),
    }


def witness_from_json(obj, path="witness") -> BialgebraFactorisationWitness:
    for key in ("K", "L", "H", "iL", "iH", "pL", "pH"):
        if key not in obj:
            raise FormatError(f"{path}: missing {key}")
    k = object_from_json(obj["K"], f"{path}.K").as_bialgebra(f"{path}.K")
    l = object_from_json(obj["L"], f"{path}.L").as_bialgebra(f"{path}.L")
    h = object_from_json(obj["H"], f"{path}.H").as_bialgebra(f"{path}.H")
    mats = {
        key: matrix_from_json(k.field, obj[key], f"{path}.{key}")
        for key in ("iL", "iH", "pL", "pH")
    }
    return _wrap(
        lambda: BialgebraFactorisationWitness(k, l, h, mats["iL"], mats["iH"], mats["pL"], mats["pH"]),
        path,
    )


def hopfmod_to_json(t: TwistedHopfModule) -> dict:
    return {
        "format": FORMAT_VERSION,
        "H": object_to_json(t.H),
        "dim": t.dim,
        "action": matrix_to_json(t.action),
        "coaction": matrix_to_json(t.coaction),
        "R": matrix_to_json(t.R),
    }


def hopfmod_from_json(obj, path="hopfmod") -> TwistedHopfModule:
    for key in ("H", "dim", "action", "coaction", "R"):
        if key not in obj:
            raise FormatError(f"{path}: missing {key}")
    h = object_from_json(obj["H"], f"{path}.H").as_hopf(f"{path}.H")
    try:
        dim = int(obj["dim"])
    except (TypeError, ValueError) as exc:
        raise FormatError(f"{path}.dim: {exc}") from exc
    action = matrix_from_json(h.field, obj["action"], f"{path}.action")
    coaction = matrix_from_json(h.field, obj["coaction"], f"{path}.coaction")
    r = matrix_from_json(h.field, obj["R"], f"{path}.R")
    return _wrap(lambda: TwistedHopfModule(h, dim, action, coaction, r), path)


# -- file helpers ---------------------------------------------------------------------


def dumps(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def save(path: str, obj: dict):
    with open(path, "w") as fh:
        fh.write(dumps(obj))


def load(path: str) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON: {exc}") from exc
