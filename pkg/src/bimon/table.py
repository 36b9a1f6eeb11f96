"""Finite strict bimonoidal categories given by explicit operation tables.

A table document is JSON::

    {
      "key": "table:name",              optional
      "objects": ["0", "1", ...],
      "zero": "0", "one": "1",
      "morphisms": [{"name": "f", "dom": "1", "cod": "u"}, ...],
      "identity": {"0": "id0", ...},
      "compose": [["g", "f", "gf"], ...],         every composable pair
      "oplus":  {"objects": [[A, B, AB]], "morphisms": [[f, g, fg]]},
      "otimes": {"objects": [...], "morphisms": [...]},
      "c_oplus": [[A, B, f], ...],
      "d_r": [[A, B, C, f], ...],
      "zeta": {"objects": [[A, zA]], "morphisms": [[f, zf]]},   optional
      "mu": [[A, B, f], ...],                                   with zeta
      "beta": [[A, B, f], ...],                                 optional
      "components": {"A": label, ...}                           optional
    }

Objects are their names; a morphism is ``Mor(dom, cod, name)``.  Path
components come from a union-find over the morphism graph; declared
``components`` are only cross-checked against it.
"""

from __future__ import annotations

import itertools
import json
from typing import Any

import jsonschema

from .core import (
    BimonoidalCategory, CheckReport, CompositionError, LawResult, Mor, union_find_components,
)
from .rig import Pi0Rig

__all__ = [
    "TableError", "TableCategory", "TABLE_SCHEMA", "load_table", "table_document",
    "thin_graded_boolean", "check_table_components",
]

_name = {"type": "string", "minLength": 1}


def _rows(width):
    return {"type": "array",
            "items": {"type": "array", "items": _name, "minItems": width, "maxItems": width}}


def _op():
    return {"type": "object", "required": ["objects", "morphisms"], "additionalProperties": False,
            "properties": {"objects": _rows(3), "morphisms": _rows(3)}}


TABLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["objects", "zero", "one", "morphisms", "identity", "compose",
                 "oplus", "otimes", "c_oplus", "d_r"],
    "additionalProperties": False,
    "properties": {
        "key": {"type": "string", "pattern": "^table:"},
        "objects": {"type": "array", "items": _name, "minItems": 1, "uniqueItems": True},
        "zero": _name,
        "one": _name,
        "morphisms": {"type": "array", "items": {
            "type": "object", "required": ["name", "dom", "cod"], "additionalProperties": False,
            "properties": {"name": _name, "dom": _name, "cod": _name}}},
        "identity": {"type": "object", "additionalProperties": _name},
        "compose": _rows(3),
        "oplus": _op(),
        "otimes": _op(),
        "c_oplus": _rows(3),
        "d_r": _rows(4),
        "zeta": {"type": "object", "required": ["objects", "morphisms"],
                 "additionalProperties": False,
                 "properties": {"objects": _rows(2), "morphisms": _rows(2)}},
        "mu": _rows(3),
        "beta": _rows(3),
        "components": {"type": "object", "additionalProperties": {"type": ["string", "integer"]}},
    },
    "dependentRequired": {"mu": ["zeta"], "zeta": ["mu"]},
}


class TableError(ValueError):
    """A table document is malformed; the message starts with a JSON path."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


def _path(parts) -> str:
    out = "$"
    for p in parts:
        out += f"[{p}]" if isinstance(p, int) else f".{p}"
    return out


class _Pi0(Pi0Rig):
    """Path components as a rig, with operations read off representatives."""

    def __init__(self, name, labels, add, mul, zero, one):
        self.name = name
        self._labels = labels
        self._add, self._mul = add, mul
        self.zero, self.one = zero, one
        self.is_commutative = all(mul[x, y] == mul[y, x] for x in labels for y in labels)

    def add(self, x, y):
        return self._add[x, y]

    def mul(self, x, y):
        return self._mul[x, y]

    def contains(self, x):
        return x in self._labels

    def elements(self, bound=None):
        return list(self._labels)


class TableCategory(BimonoidalCategory):
    has_components = True

    def __init__(self, doc: dict):
        self.doc = doc
        self.key = doc.get("key", "table:anonymous")
        self.objects = list(doc["objects"])
        self.zero, self.one = doc["zero"], doc["one"]
        self._mor = {m["name"]: Mor(m["dom"], m["cod"], m["name"]) for m in doc["morphisms"]}
        self._names = [m["name"] for m in doc["morphisms"]]
        self._id = {A: self._mor[n] for A, n in doc["identity"].items()}
        self._comp = {(g, f): h for g, f, h in doc["compose"]}
        self._oplus = {(a, b): c for a, b, c in doc["oplus"]["objects"]}
        self._oplus_m = {(a, b): c for a, b, c in doc["oplus"]["morphisms"]}
        self._otimes = {(a, b): c for a, b, c in doc["otimes"]["objects"]}
        self._otimes_m = {(a, b): c for a, b, c in doc["otimes"]["morphisms"]}
        self._c = {(a, b): f for a, b, f in doc["c_oplus"]}
        self._d = {(a, b, c): f for a, b, c, f in doc["d_r"]}
        self._from = {A: [] for A in self.objects}
        for n in self._names:
            self._from[self._mor[n].dom].append(self._mor[n])
        if "zeta" in doc:
            self.has_anti_involution = True
            self._zeta = dict(doc["zeta"]["objects"])
            self._zeta_m = dict(doc["zeta"]["morphisms"])
            self._mu = {(a, b): f for a, b, f in doc["mu"]}
        if "beta" in doc:
            self.has_braiding = True
            self._beta = {(a, b): f for a, b, f in doc["beta"]}
        self._inv = {}
        for n in self._names:
            f = self._mor[n]
            for g in self._from[f.cod]:
                if (g.cod == f.dom and self._comp[g.data, n] == self._id[f.dom].data
                        and self._comp[n, g.data] == self._id[f.cod].data):
                    self._inv[n] = g
                    break
        self._classes = union_find_components(self.objects, self._mor.values())
        order = {A: i for i, A in enumerate(self.objects)}
        self._label = {}
        for cls in self._classes:
            rep = min(cls, key=order.__getitem__)
            for A in cls:
                self._label[A] = rep
        labels = sorted(set(self._label.values()), key=order.__getitem__)
        pairs = list(itertools.product(labels, repeat=2))
        self._pi0 = _Pi0(f"pi0({self.key})", labels,
                         {(x, y): self._label[self._oplus[x, y]] for x, y in pairs},
                         {(x, y): self._label[self._otimes[x, y]] for x, y in pairs},
                         self._label[self.zero], self._label[self.one])

    # category
    def identity(self, A):
        return self._id[A]

    def compose(self, g, f):
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        return self._mor[self._comp[g.data, f.data]]

    def inverse(self, f):
        try:
            return self._inv[f.data]
        except KeyError:
            raise ValueError(f"morphism {f.data!r} is not invertible") from None

    # structure
    def oplus(self, A, B):
        return self._oplus[A, B]

    def oplus_mor(self, f, g):
        return self._mor[self._oplus_m[f.data, g.data]]

    def otimes(self, A, B):
        return self._otimes[A, B]

    def otimes_mor(self, f, g):
        return self._mor[self._otimes_m[f.data, g.data]]

    def c_oplus(self, A, B):
        return self._mor[self._c[A, B]]

    def d_r(self, A, B, C):
        return self._mor[self._d[A, B, C]]

    def zeta(self, A):
        if not self.has_anti_involution:
            return super().zeta(A)
        return self._zeta[A]

    def zeta_mor(self, f):
        if not self.has_anti_involution:
            return super().zeta_mor(f)
        return self._mor[self._zeta_m[f.data]]

    def mu(self, A, B):
        if not self.has_anti_involution:
            return super().mu(A, B)
        return self._mor[self._mu[A, B]]

    def beta(self, A, B):
        if not self.has_braiding:
            return super().beta(A, B)
        return self._mor[self._beta[A, B]]

    # components
    def component(self, A):
        return self._label[A]

    @property
    def pi0_rig(self):
        return self._pi0

    def declared_components(self) -> dict | None:
        return self.doc.get("components")

    # sampling: tables are finite, so size bounds are ignored
    def sample_object(self, rng, max_size):
        return rng.choice(self.objects)

    def sample_mor_from(self, rng, A):
        return rng.choice(self._from[A])

    def enumerate_objects(self, max_size):
        return list(self.objects)

    def morphisms_from(self, A):
        return list(self._from[A])

    def mor_data_from_json(self, data, dom, cod):
        f = self._mor.get(data)
        if f is None or (f.dom, f.cod) != (dom, cod):
            raise ValueError(f"no morphism {data!r}: {dom} -> {cod}")
        return data

    def obj_from_json(self, data):
        if data not in self._id:
            raise ValueError(f"unknown object {data!r}")
        return data


def _validate(doc):
    validator = jsonschema.Draft202012Validator(TABLE_SCHEMA)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        e = errors[0]
        raise TableError(_path(e.absolute_path), e.message)

    objects = set(doc["objects"])
    mors = {}
    for i, m in enumerate(doc["morphisms"]):
        if m["name"] in mors:
            raise TableError(_path(["morphisms", i, "name"]), f"duplicate morphism {m['name']!r}")
        for end in ("dom", "cod"):
            if m[end] not in objects:
                raise TableError(_path(["morphisms", i, end]), f"unknown object {m[end]!r}")
        mors[m["name"]] = (m["dom"], m["cod"])

    def obj(path, x):
        if x not in objects:
            raise TableError(_path(path), f"unknown object {x!r}")
        return x

    def mor(path, x):
        if x not in mors:
            raise TableError(_path(path), f"unknown morphism {x!r}")
        return mors[x]

    def typed(path, name, dom, cod):
        if mor(path, name) != (dom, cod):
            raise TableError(_path(path), f"{name!r} is {mors[name][0]} -> {mors[name][1]}, "
                                          f"expected {dom} -> {cod}")

    def table(section, rows, keys, width, value_check):
        """Rows keyed by their first ``width - 1`` entries, each key exactly once."""
        seen = {}
        for i, row in enumerate(rows):
            k = tuple(row[:-1])
            if k in seen:
                raise TableError(_path([*section, i]), f"duplicate entry for {list(k)}")
            seen[k] = row[-1]
            value_check([*section, i], row)
        missing = [k for k in keys if k not in seen]
        if missing:
            raise TableError(_path(section), f"missing entry for {list(missing[0])}")
        extra = [k for k in seen if k not in set(keys)]
        if extra:
            raise TableError(_path(section), f"entry for non-key {list(extra[0])}")
        return seen

    obj(["zero"], doc["zero"])
    obj(["one"], doc["one"])
    for A in doc["identity"]:
        obj(["identity", A], A)
        typed(["identity", A], doc["identity"][A], A, A)
    for A in objects - set(doc["identity"]):
        raise TableError(_path(["identity"]), f"missing identity for {A!r}")

    names = list(mors)
    obj_pairs = list(itertools.product(doc["objects"], repeat=2))
    mor_pairs = list(itertools.product(names, repeat=2))

    def compose_row(path, row):
        g, f, h = row
        (gd, gc), (fd, fc) = mor(path + [0], g), mor(path + [1], f)
        if fc != gd:
            raise TableError(_path(path), f"{g!r} and {f!r} are not composable")
        typed(path + [2], h, fd, gc)

    table(["compose"], doc["compose"],
          [(g, f) for g, f in mor_pairs if mors[f][1] == mors[g][0]], 3, compose_row)

    for op in ("oplus", "otimes"):
        ob = table([op, "objects"], doc[op]["objects"], obj_pairs, 3,
                   lambda p, r: [obj(p + [i], r[i]) for i in range(3)])

        def mor_row(path, row, ob=ob):
            f, g, h = row
            (fd, fc), (gd, gc) = mor(path + [0], f), mor(path + [1], g)
            typed(path + [2], h, ob[fd, gd], ob[fc, gc])

        table([op, "morphisms"], doc[op]["morphisms"], mor_pairs, 3, mor_row)

    oplus = {(a, b): c for a, b, c in doc["oplus"]["objects"]}
    otimes = {(a, b): c for a, b, c in doc["otimes"]["objects"]}

    def c_row(path, row):
        A, B, f = row
        obj(path + [0], A), obj(path + [1], B)
        typed(path + [2], f, oplus[A, B], oplus[B, A])

    table(["c_oplus"], doc["c_oplus"], obj_pairs, 3, c_row)

    def d_row(path, row):
        A, B, C, f = row
        for i in range(3):
            obj(path + [i], row[i])
        typed(path + [3], f, oplus[otimes[A, B], otimes[A, C]], otimes[A, oplus[B, C]])

    table(["d_r"], doc["d_r"], list(itertools.product(doc["objects"], repeat=3)), 4, d_row)

    if "zeta" in doc:
        z = table(["zeta", "objects"], doc["zeta"]["objects"], [(A,) for A in doc["objects"]], 2,
                  lambda p, r: [obj(p + [i], r[i]) for i in range(2)])
        z = {k[0]: v for k, v in z.items()}

        def zm_row(path, row):
            d, c = mor(path + [0], row[0])
            typed(path + [1], row[1], z[d], z[c])

        table(["zeta", "morphisms"], doc["zeta"]["morphisms"], [(n,) for n in names], 2, zm_row)

        def mu_row(path, row):
            A, B, f = row
            obj(path + [0], A), obj(path + [1], B)
            typed(path + [2], f, z[otimes[A, B]], otimes[z[B], z[A]])

        table(["mu"], doc["mu"], obj_pairs, 3, mu_row)

    if "beta" in doc:
        def beta_row(path, row):
            A, B, f = row
            obj(path + [0], A), obj(path + [1], B)
            typed(path + [2], f, otimes[A, B], otimes[B, A])

        table(["beta"], doc["beta"], obj_pairs, 3, beta_row)

    if "components" in doc:
        for A in doc["components"]:
            obj(["components", A], A)
        for A in doc["objects"]:
            if A not in doc["components"]:
                raise TableError(_path(["components"]), f"missing label for {A!r}")


def load_table(source) -> TableCategory:
    """Validate and build a table instance from a dict, JSON text, or file path.

    A saved ``export table`` report is accepted and its ``result`` used.
    """
    if isinstance(source, dict):
        doc = source
    else:
        text = str(source)
        if not text.lstrip().startswith("{"):
            try:
                with open(text, encoding="utf-8") as fh:
                    text = fh.read()
            except OSError as exc:
                raise TableError("$", f"cannot read {source!r}: {exc.strerror}") from None
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TableError("$", f"invalid JSON at line {exc.lineno} column {exc.colno}: "
                                  f"{exc.msg}") from None
    if isinstance(doc, dict) and doc.get("command") == ["export", "table"] and "result" in doc:
        # a saved `bimon export table` report
        doc = doc["result"]
    _validate(doc)
    return TableCategory(doc)


def check_table_components(cat: TableCategory) -> CheckReport:
    """Declared component labels against the union-find partition."""
    report = CheckReport("table-components", cat.key)
    declared = cat.declared_components()
    if declared is None:
        report.skipped.append(("table.components.union_find", "no declared components"))
        return report
    found = sorted(sorted(c) for c in cat._classes)
    groups: dict[Any, list] = {}
    for A in cat.objects:
        groups.setdefault(declared[A], []).append(A)
    claimed = sorted(sorted(g) for g in groups.values())
    ok = found == claimed
    report.results.append(LawResult(
        "table.components.union_find", "declared components = connected components",
        len(cat.objects), ok, None if ok else {"inputs": [], "lhs": claimed, "rhs": found},
        0 if ok else 1))
    return report


def table_document(cat: BimonoidalCategory, objects, key: str | None = None) -> dict:
    """Tabulate ``cat`` on a finite object set closed under its operations.

    Every hom-set must be enumerable through ``morphisms_from``.  Object
    names are the canonical JSON of the instance's object grammar.
    """
    name = lambda A: json.dumps(cat.obj_to_json(A), sort_keys=True)  # noqa: E731
    objects = list(objects)
    index = {A: name(A) for A in objects}
    mors, mname = [], {}

    def mref(f):
        k = (f.dom, f.cod, json.dumps(cat.mor_data_to_json(f.data), sort_keys=True))
        if k not in mname:
            raise ValueError(f"morphism {f!r} leaves the tabulated object set")
        return mname[k]

    for A in objects:
        homs = cat.morphisms_from(A)
        if homs is None:
            raise ValueError(f"hom-sets of {cat.key} at {A!r} are not enumerable")
        for f in homs:
            if f.cod not in index:
                raise ValueError(f"{f!r} leaves the tabulated object set")
            k = (f.dom, f.cod, json.dumps(cat.mor_data_to_json(f.data), sort_keys=True))
            mname[k] = f"m{len(mors)}"
            mors.append(f)

    def oref(A):
        if A not in index:
            raise ValueError(f"object {A!r} leaves the tabulated object set")
        return index[A]

    pairs = list(itertools.product(objects, repeat=2))
    doc = {
        "key": key or f"table:{cat.key}",
        "objects": [index[A] for A in objects],
        "zero": oref(cat.zero), "one": oref(cat.one),
        "morphisms": [{"name": mname_, "dom": index[f.dom], "cod": index[f.cod]}
                      for mname_, f in zip((f"m{i}" for i in range(len(mors))), mors)],
        "identity": {index[A]: mref(cat.identity(A)) for A in objects},
        "compose": [[mref(g), mref(f), mref(cat.compose(g, f))]
                    for g in mors for f in mors if f.cod == g.dom],
        "c_oplus": [[index[A], index[B], mref(cat.c_oplus(A, B))] for A, B in pairs],
        "d_r": [[index[A], index[B], index[C], mref(cat.d_r(A, B, C))]
                for A, B, C in itertools.product(objects, repeat=3)],
    }
    for op, fo, fm in (("oplus", cat.oplus, cat.oplus_mor), ("otimes", cat.otimes, cat.otimes_mor)):
        doc[op] = {"objects": [[index[A], index[B], oref(fo(A, B))] for A, B in pairs],
                   "morphisms": [[mref(f), mref(g), mref(fm(f, g))] for f in mors for g in mors]}
    if cat.has_anti_involution:
        doc["zeta"] = {"objects": [[index[A], oref(cat.zeta(A))] for A in objects],
                       "morphisms": [[mref(f), mref(cat.zeta_mor(f))] for f in mors]}
        doc["mu"] = [[index[A], index[B], mref(cat.mu(A, B))] for A, B in pairs]
    if cat.has_braiding:
        doc["beta"] = [[index[A], index[B], mref(cat.beta(A, B))] for A, B in pairs]
    if cat.has_components:
        rig = cat.pi0_rig
        doc["components"] = {index[A]: json.dumps(rig.to_json(cat.component(A)), sort_keys=True)
                             for A in objects}
    return doc


def thin_graded_boolean() -> dict:
    """A thin example with two isomorphic non-zero objects.

    Objects ``0``, ``1`` and ``u``.  Non-zero objects carry a grade in Z/2
    (``1`` is even, ``u`` odd); the product adds grades and the sum keeps
    the grade of its left summand.  Between non-zero objects there is
    exactly one morphism, so every diagram commutes and the path components
    form the Boolean rig ``{0, 1}`` with ``1 + 1 = 1``.
    """
    grade = {"1": 0, "u": 1}
    by_grade = {0: "1", 1: "u"}
    objects = ["0", "1", "u"]

    def oplus(a, b):
        if a == "0":
            return b
        return a

    def otimes(a, b):
        if "0" in (a, b):
            return "0"
        return by_grade[(grade[a] + grade[b]) % 2]

    name = {("0", "0"): "id0", ("1", "1"): "id1", ("u", "u"): "idu",
            ("1", "u"): "t", ("u", "1"): "s"}
    morphisms = [{"name": n, "dom": d, "cod": c} for (d, c), n in name.items()]
    src = {n: (d, c) for (d, c), n in name.items()}
    names = list(src)

    def hom(d, c):
        return name[d, c]

    def lift(op):
        return [[f, g, hom(op(src[f][0], src[g][0]), op(src[f][1], src[g][1]))]
                for f in names for g in names]

    pairs = list(itertools.product(objects, repeat=2))
    return {
        "key": "table:thin-graded-boolean",
        "objects": objects, "zero": "0", "one": "1",
        "morphisms": morphisms,
        "identity": {A: hom(A, A) for A in objects},
        "compose": [[g, f, hom(src[f][0], src[g][1])]
                    for g in names for f in names if src[f][1] == src[g][0]],
        "oplus": {"objects": [[a, b, oplus(a, b)] for a, b in pairs], "morphisms": lift(oplus)},
        "otimes": {"objects": [[a, b, otimes(a, b)] for a, b in pairs], "morphisms": lift(otimes)},
        "c_oplus": [[a, b, hom(oplus(a, b), oplus(b, a))] for a, b in pairs],
        "d_r": [[a, b, c, hom(oplus(otimes(a, b), otimes(a, c)), otimes(a, oplus(b, c)))]
                for a, b, c in itertools.product(objects, repeat=3)],
        "zeta": {"objects": [[A, A] for A in objects], "morphisms": [[n, n] for n in names]},
        "mu": [[a, b, hom(otimes(a, b), otimes(b, a))] for a, b in pairs],
        "beta": [[a, b, hom(otimes(a, b), otimes(b, a))] for a, b in pairs],
        "components": {"0": "zero", "1": "one", "u": "one"},
    }
