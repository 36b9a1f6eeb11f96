"""Computable strict bimonoidal categories and the law-checking harness.

A category is an object with computable operations rather than a stored
table: most bundled instances have infinitely many objects.  Morphisms are
:class:`Mor` values ``(dom, cod, data)`` whose ``data`` payload is
instance-specific (a permutation, a wreath element, a monomial matrix, ...).

Left distributivity is the identity by convention, so only ``d_r`` is a
structure map::

    d_r(A, B, C): A*B + A*C -> A*(B + C)
"""

from __future__ import annotations

import copy
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Iterable

from .rig import CapabilityError

__all__ = [
    "CapabilityError", "CompositionError", "Mor", "BimonoidalCategory",
    "SampleSpec", "LawResult", "CheckReport", "Law", "run_laws",
    "check_bimonoidal_laws", "enumerate_sample", "component_label",
    "union_find_components", "with_overrides", "encode",
]


class CompositionError(ValueError):
    """Two morphisms were composed whose codomain and domain disagree."""


@dataclass(frozen=True)
class Mor:
    dom: Any
    cod: Any
    data: Any = None

    def __repr__(self):
        return f"Mor({self.dom!r} -> {self.cod!r}: {self.data!r})"


class BimonoidalCategory:
    """Base class for strict bimonoidal categories with ``d_l = id``.

    Subclasses implement the structure.  Optional structure is advertised
    through ``has_anti_involution``, ``has_braiding`` and ``has_components``.
    """

    key = "abstract"
    has_anti_involution = False
    has_braiding = False
    has_components = False
    is_discrete = False
    # symmetric braiding and an anti-involution with mu(zeta B, zeta A) o zeta(mu) = id
    bipermutative = False

    zero: Any = None
    one: Any = None

    # -- category -------------------------------------------------------
    def identity(self, A) -> Mor:
        raise NotImplementedError

    def compose(self, g: Mor, f: Mor) -> Mor:
        """``g o f``."""
        raise NotImplementedError

    def inverse(self, f: Mor) -> Mor:
        raise NotImplementedError

    def is_identity(self, f: Mor) -> bool:
        return f.dom == f.cod and f == self.identity(f.dom)

    def compose_all(self, *fs: Mor) -> Mor:
        """``fs[0] o fs[1] o ... o fs[-1]``."""
        return reduce(self.compose, fs)

    # -- monoidal structures ---------------------------------------------
    def oplus(self, A, B):
        raise NotImplementedError

    def oplus_mor(self, f: Mor, g: Mor) -> Mor:
        raise NotImplementedError

    def otimes(self, A, B):
        raise NotImplementedError

    def otimes_mor(self, f: Mor, g: Mor) -> Mor:
        raise NotImplementedError

    def c_oplus(self, A, B) -> Mor:
        raise NotImplementedError

    def d_r(self, A, B, C) -> Mor:
        raise NotImplementedError

    def oplus_all(self, objs: Iterable):
        return reduce(self.oplus, objs, self.zero)

    def oplus_mor_all(self, mors: Iterable[Mor]) -> Mor:
        return reduce(self.oplus_mor, mors, self.identity(self.zero))

    def otimes_all(self, objs: Iterable):
        return reduce(self.otimes, objs, self.one)

    # -- optional structure --------------------------------------------------
    def zeta(self, A):
        raise CapabilityError(f"{self.key} has no anti-involution")

    def zeta_mor(self, f: Mor) -> Mor:
        raise CapabilityError(f"{self.key} has no anti-involution")

    def mu(self, A, B) -> Mor:
        """``zeta(A*B) -> zeta(B)*zeta(A)``."""
        raise CapabilityError(f"{self.key} has no anti-involution")

    def beta(self, A, B) -> Mor:
        raise CapabilityError(f"{self.key} has no braiding")

    def component(self, A):
        raise CapabilityError(f"{self.key} declares no path-component labels")

    @property
    def pi0_rig(self):
        raise CapabilityError(f"{self.key} declares no path-component rig")

    def pi0_category(self) -> "BimonoidalCategory":
        """The discrete category on the path-component rig."""
        raise CapabilityError(f"{self.key} declares no path-component rig")

    # -- sampling --------------------------------------------------------
    def sample_object(self, rng: random.Random, max_size: int):
        raise NotImplementedError

    def sample_objects(self, rng, k: int, max_size: int, homogeneous: bool = True) -> tuple:
        """``k`` objects for a law check.

        ``homogeneous`` asks for tuples on which every sum appearing in the
        additive laws is defined; only partially additive instances care.
        """
        return tuple(self.sample_object(rng, max_size) for _ in range(k))

    def sample_mor_from(self, rng: random.Random, A) -> Mor:
        """A random morphism with domain ``A``."""
        raise NotImplementedError

    def enumerate_objects(self, max_size: int) -> list:
        raise NotImplementedError

    def morphisms_from(self, A) -> list[Mor] | None:
        """All morphisms out of ``A`` when that set is small, else ``None``."""
        return None

    def random_gl_matrix(self, rng: random.Random, n: int):
        raise CapabilityError(f"{self.key} cannot sample weakly invertible matrices")

    def sample_matrix(self, rng: random.Random, n: int, max_size: int):
        """Entries of a random ``n x n`` object matrix (as nested tuples)."""
        A = self.sample_objects(rng, n * n, max_size, homogeneous=True)
        return tuple(tuple(A[i * n:(i + 1) * n]) for i in range(n))

    # -- serialization ---------------------------------------------------
    def obj_to_json(self, A):
        return A

    def obj_from_json(self, data):
        return data

    def mor_data_to_json(self, data):
        return data

    def mor_data_from_json(self, data, dom, cod):
        return data

    def mor_to_json(self, f: Mor):
        return {"dom": self.obj_to_json(f.dom), "cod": self.obj_to_json(f.cod),
                "data": self.mor_data_to_json(f.data)}

    def mor_from_json(self, data) -> Mor:
        dom = self.obj_from_json(data["dom"])
        cod = self.obj_from_json(data["cod"])
        return Mor(dom, cod, self.mor_data_from_json(data["data"], dom, cod))

    def __repr__(self):
        return f"<{type(self).__name__} {self.key}>"


def with_overrides(cat: BimonoidalCategory, key: str | None = None, **methods):
    """Shallow copy of ``cat`` with some operations replaced.

    Used for mutation tests and for enriching an instance with extra
    structure; replacement callables do not receive ``self``.
    """
    new = copy.copy(cat)
    for name, fn in methods.items():
        setattr(new, name, fn)
    if key is not None:
        new.key = key
    return new


# ---------------------------------------------------------------------------
# harness


@dataclass(frozen=True)
class SampleSpec:
    max_object_size: int = 3
    max_arity_n: int = 2
    sample_count: int = 200
    seed: int = 42
    failure_cap: int = 5

    def __post_init__(self):
        if min(self.max_object_size, self.max_arity_n, self.sample_count, self.failure_cap) < 1:
            raise ValueError("sample bounds must be positive")

    def rng(self, *tags) -> random.Random:
        # string seeds hash through sha512, so streams are stable across processes
        return random.Random(":".join([str(self.seed), *map(str, tags)]))

    def to_dict(self):
        return {"max_object_size": self.max_object_size, "max_arity_n": self.max_arity_n,
                "sample_count": self.sample_count, "seed": self.seed}


@dataclass
class LawResult:
    law: str
    anchor: str
    samples: int
    passed: bool
    witness: dict | None = None
    failures: int = 0

    def to_dict(self):
        d = {"law": self.law, "anchor": self.anchor, "samples": self.samples,
             "passed": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
            d["failures"] = self.failures
        return d


@dataclass
class CheckReport:
    suite: str
    instance: str
    results: list[LawResult] = field(default_factory=list)
    skipped: list[tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failing(self) -> list[LawResult]:
        return [r for r in self.results if not r.passed]

    def result(self, law: str) -> LawResult:
        for r in self.results:
            if r.law == law:
                return r
        raise KeyError(law)

    def to_dict(self):
        d = {"suite": self.suite, "instance": self.instance, "passed": self.passed,
             "laws": [r.to_dict() for r in self.results]}
        if self.skipped:
            d["skipped"] = [{"law": law, "reason": why} for law, why in self.skipped]
        return d

    def summary(self) -> str:
        lines = [f"{self.suite} on {self.instance}: {'PASS' if self.passed else 'FAIL'}"]
        for r in self.results:
            lines.append(f"  {'ok ' if r.passed else 'BAD'} {r.law} ({r.samples})")
        return "\n".join(lines)


@dataclass
class Law:
    """A law ``lhs == rhs`` over sampled inputs.

    ``sample(rng)`` draws one input tuple, or ``inputs`` lists them
    exhaustively; ``sides(*inputs)`` evaluates both sides.
    """

    id: str
    anchor: str
    sides: Callable[..., tuple]
    sample: Callable[[random.Random], tuple] | None = None
    inputs: Callable[[], Iterable[tuple]] | None = None
    count: int | None = None


def encode(cat, x):
    """JSON-ready form of a law input or value, in the instance's grammar."""
    if isinstance(x, Mor):
        return cat.mor_to_json(x)
    if hasattr(x, "to_json") and not isinstance(x, type):
        return x.to_json(cat)
    if isinstance(x, (list, tuple)):
        return [encode(cat, y) for y in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        try:
            return cat.obj_to_json(x)
        except Exception:
            return x
    try:
        return cat.obj_to_json(x)
    except Exception:
        return repr(x)


def _check_law(cat, law: Law, spec: SampleSpec, suite: str) -> LawResult:
    if law.inputs is not None:
        stream = law.inputs()
    else:
        rng = spec.rng(suite, cat.key, law.id)
        n = law.count if law.count is not None else spec.sample_count
        stream = (law.sample(rng) for _ in range(n))
    tried = failures = 0
    witness = None
    for args in stream:
        tried += 1
        try:
            lhs, rhs = law.sides(*args)
            ok = lhs == rhs
        except (CompositionError, CapabilityError, ValueError, KeyError, IndexError) as exc:
            lhs, rhs, ok = f"error: {type(exc).__name__}: {exc}", None, False
        if not ok:
            failures += 1
            if witness is None:
                witness = {"inputs": encode(cat, args),
                           "lhs": encode(cat, lhs), "rhs": encode(cat, rhs)}
            if failures >= spec.failure_cap:
                break
    return LawResult(law.id, law.anchor, tried, witness is None, witness, failures)


def _workers() -> int:
    import os
    try:
        return max(1, int(os.environ.get("BIMON_THREADS", "1")))
    except ValueError:
        return 1


def run_laws(cat, laws: list[Law], spec: SampleSpec, suite: str) -> CheckReport:
    """Evaluate ``laws`` on ``cat``; results come back in declaration order."""
    report = CheckReport(suite, cat.key)
    workers = min(_workers(), len(laws)) or 1
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            report.results = list(pool.map(lambda law: _check_law(cat, law, spec, suite), laws))
    else:
        report.results = [_check_law(cat, law, spec, suite) for law in laws]
    return report


# ---------------------------------------------------------------------------
# the bimonoidal law suite


def _objs(cat, spec, k, homogeneous=True):
    return lambda rng: cat.sample_objects(rng, k, spec.max_object_size, homogeneous)


def _composable_pair(cat, rng, A):
    f = cat.sample_mor_from(rng, A)
    return f, cat.sample_mor_from(rng, f.cod)


def bimonoidal_laws(cat: BimonoidalCategory, spec: SampleSpec) -> list[Law]:
    C = cat
    I = C.identity
    s = spec.max_object_size

    def mors(k, homogeneous=True):
        def draw(rng):
            objs = C.sample_objects(rng, k, s, homogeneous)
            return tuple(C.sample_mor_from(rng, A) for A in objs)
        return draw

    def pairs(k, homogeneous=True):
        def draw(rng):
            objs = C.sample_objects(rng, k, s, homogeneous)
            return tuple(_composable_pair(C, rng, A) for A in objs)
        return draw

    def triple_morphisms(f, g, h):
        return (C.oplus_mor(C.oplus_mor(f, g), h), C.oplus_mor(f, C.oplus_mor(g, h)))

    laws = [
        Law("category.identity", "f o id = f = id o f",
            lambda f: ((C.compose(f, I(f.dom)), C.compose(I(f.cod), f)), (f, f)), mors(1)),
        Law("category.associativity", "(h o g) o f = h o (g o f)",
            lambda f, g, h: (C.compose(C.compose(h, g), f), C.compose(h, C.compose(g, f))),
            lambda rng: _composable_triple(C, rng, s)),
        Law("category.inverse", "f^-1 o f = id",
            lambda f: ((C.compose(C.inverse(f), f), C.compose(f, C.inverse(f))),
                       (I(f.dom), I(f.cod))), mors(1)),
        Law("oplus.associativity", "(A+B)+C = A+(B+C)",
            lambda A, B, D: (C.oplus(C.oplus(A, B), D), C.oplus(A, C.oplus(B, D))),
            _objs(C, spec, 3)),
        Law("oplus.associativity.morphisms", "(f+g)+h = f+(g+h)",
            lambda f, g, h: triple_morphisms(f, g, h), mors(3)),
        Law("oplus.unit", "0+A = A = A+0",
            lambda A: ((C.oplus(C.zero, A), C.oplus(A, C.zero)), (A, A)), _objs(C, spec, 1)),
        Law("oplus.unit.morphisms", "id_0+f = f = f+id_0",
            lambda f: ((C.oplus_mor(I(C.zero), f), C.oplus_mor(f, I(C.zero))), (f, f)), mors(1)),
        Law("oplus.functor", "(f'f)+(g'g) = (f'+g')(f+g), id+id = id",
            lambda p, q: ((C.oplus_mor(C.compose(p[1], p[0]), C.compose(q[1], q[0])),
                           C.oplus_mor(I(p[0].dom), I(q[0].dom))),
                          (C.compose(C.oplus_mor(p[1], q[1]), C.oplus_mor(p[0], q[0])),
                           I(C.oplus(p[0].dom, q[0].dom)))),
            pairs(2)),
        Law("otimes.associativity", "(AB)C = A(BC)",
            lambda A, B, D: (C.otimes(C.otimes(A, B), D), C.otimes(A, C.otimes(B, D))),
            _objs(C, spec, 3, False)),
        Law("otimes.associativity.morphisms", "(f*g)*h = f*(g*h)",
            lambda f, g, h: (C.otimes_mor(C.otimes_mor(f, g), h),
                             C.otimes_mor(f, C.otimes_mor(g, h))), mors(3, False)),
        Law("otimes.unit", "1*A = A = A*1, id_1*f = f = f*id_1",
            lambda f: ((C.otimes(C.one, f.dom), C.otimes(f.dom, C.one),
                        C.otimes_mor(I(C.one), f), C.otimes_mor(f, I(C.one))),
                       (f.dom, f.dom, f, f)), mors(1)),
        Law("otimes.functor", "(f'f)*(g'g) = (f'*g')(f*g), id*id = id",
            lambda p, q: ((C.otimes_mor(C.compose(p[1], p[0]), C.compose(q[1], q[0])),
                           C.otimes_mor(I(p[0].dom), I(q[0].dom))),
                          (C.compose(C.otimes_mor(p[1], q[1]), C.otimes_mor(p[0], q[0])),
                           I(C.otimes(p[0].dom, q[0].dom)))),
            pairs(2, False)),
        Law("zero.absorbing", "0*A = 0 = A*0, id_0*f = id_0 = f*id_0",
            lambda f: ((C.otimes(C.zero, f.dom), C.otimes(f.dom, C.zero),
                        C.otimes_mor(I(C.zero), f), C.otimes_mor(f, I(C.zero))),
                       (C.zero, C.zero, I(C.zero), I(C.zero))), mors(1)),
        Law("c_oplus.involutive", "c(B,A) o c(A,B) = id",
            lambda A, B: (C.compose(C.c_oplus(B, A), C.c_oplus(A, B)), I(C.oplus(A, B))),
            _objs(C, spec, 2)),
        Law("c_oplus.natural", "c(A',B') o (f+g) = (g+f) o c(A,B)",
            lambda f, g: (C.compose(C.c_oplus(f.cod, g.cod), C.oplus_mor(f, g)),
                          C.compose(C.oplus_mor(g, f), C.c_oplus(f.dom, g.dom))), mors(2)),
        Law("c_oplus.hexagon", "c(A,B+C) = (id_B + c(A,C)) o (c(A,B) + id_C)",
            lambda A, B, D: (C.c_oplus(A, C.oplus(B, D)),
                             C.compose(C.oplus_mor(I(B), C.c_oplus(A, D)),
                                       C.oplus_mor(C.c_oplus(A, B), I(D)))),
            _objs(C, spec, 3)),
        Law("c_oplus.unit", "c(A,0) = id_A",
            lambda A: (C.c_oplus(A, C.zero), I(A)), _objs(C, spec, 1)),
        Law("d_l.identity", "AB + A'B = (A+A')B on objects and morphisms",
            lambda f, g, h: ((C.oplus(C.otimes(f.dom, h.dom), C.otimes(g.dom, h.dom)),
                              C.oplus_mor(C.otimes_mor(f, h), C.otimes_mor(g, h))),
                             (C.otimes(C.oplus(f.dom, g.dom), h.dom),
                              C.otimes_mor(C.oplus_mor(f, g), h))), mors(3)),
        Law("d_r.typing", "d_r: AB + AC -> A(B+C)",
            lambda A, B, D: ((C.d_r(A, B, D).dom, C.d_r(A, B, D).cod),
                             (C.oplus(C.otimes(A, B), C.otimes(A, D)),
                              C.otimes(A, C.oplus(B, D)))), _objs(C, spec, 3)),
        Law("d_r.natural", "d_r o (f*g + f*h) = (f*(g+h)) o d_r",
            lambda f, g, h: (C.compose(C.d_r(f.cod, g.cod, h.cod),
                                       C.oplus_mor(C.otimes_mor(f, g), C.otimes_mor(f, h))),
                             C.compose(C.otimes_mor(f, C.oplus_mor(g, h)),
                                       C.d_r(f.dom, g.dom, h.dom))), mors(3)),
        Law("d_r.invertible", "d_r^-1 o d_r = id",
            lambda A, B, D: (C.compose(C.inverse(C.d_r(A, B, D)), C.d_r(A, B, D)),
                             I(C.oplus(C.otimes(A, B), C.otimes(A, D)))), _objs(C, spec, 3)),
        Law("d_r.unit", "d_r(1,B,C) = id, d_r(A,B,0) = id, d_r(A,0,C) = id",
            lambda A, B: ((C.d_r(C.one, A, B), C.d_r(A, B, C.zero), C.d_r(A, C.zero, B)),
                          (I(C.oplus(A, B)), I(C.otimes(A, B)), I(C.otimes(A, B)))),
            _objs(C, spec, 2)),
        Law("d_r.c_oplus", "(id_A * c(B,C)) o d_r(A,B,C) = d_r(A,C,B) o c(AB,AC)",
            lambda A, B, D: (C.compose(C.otimes_mor(I(A), C.c_oplus(B, D)), C.d_r(A, B, D)),
                             C.compose(C.d_r(A, D, B),
                                       C.c_oplus(C.otimes(A, B), C.otimes(A, D)))),
            _objs(C, spec, 3)),
        Law("d_r.oplus_associativity",
            "d_r(A,B,C+D) o (id + d_r(A,C,D)) = d_r(A,B+C,D) o (d_r(A,B,C) + id)",
            lambda A, B, D, E: (
                C.compose(C.d_r(A, B, C.oplus(D, E)),
                          C.oplus_mor(I(C.otimes(A, B)), C.d_r(A, D, E))),
                C.compose(C.d_r(A, C.oplus(B, D), E),
                          C.oplus_mor(C.d_r(A, B, D), I(C.otimes(A, E))))),
            _objs(C, spec, 4)),
        Law("d_r.otimes_associativity", "d_r(AB,C,D) = (id_A * d_r(B,C,D)) o d_r(A,BC,BD)",
            lambda A, B, D, E: (C.d_r(C.otimes(A, B), D, E),
                                C.compose(C.otimes_mor(I(A), C.d_r(B, D, E)),
                                          C.d_r(A, C.otimes(B, D), C.otimes(B, E)))),
            _objs(C, spec, 4)),
        Law("d_r.left_sum",
            "d_r(A+A',B,C) = (d_r(A,B,C) + d_r(A',B,C)) o (id + c(A'B,AC) + id)",
            lambda A, A2, B, D: (
                C.d_r(C.oplus(A, A2), B, D),
                C.compose(C.oplus_mor(C.d_r(A, B, D), C.d_r(A2, B, D)),
                          C.oplus_mor_all([I(C.otimes(A, B)),
                                           C.c_oplus(C.otimes(A2, B), C.otimes(A, D)),
                                           I(C.otimes(A2, D))]))),
            _objs(C, spec, 4)),
    ]
    if C.has_components:
        R = C.pi0_rig
        laws += [
            Law("component.oplus", "[A+B] = [A]+[B]",
                lambda A, B: (C.component(C.oplus(A, B)),
                              R.add(C.component(A), C.component(B))), _objs(C, spec, 2)),
            Law("component.otimes", "[AB] = [A][B]",
                lambda A, B: (C.component(C.otimes(A, B)),
                              R.mul(C.component(A), C.component(B))), _objs(C, spec, 2, False)),
            Law("component.units", "[0] = 0, [1] = 1",
                lambda: ((C.component(C.zero), C.component(C.one)), (R.zero, R.one)),
                inputs=lambda: [()]),
            Law("component.connected", "[dom f] = [cod f]",
                lambda f: (C.component(f.dom), C.component(f.cod)), mors(1)),
        ]
    return laws


def _composable_triple(C, rng, s):
    (A,) = C.sample_objects(rng, 1, s)
    f = C.sample_mor_from(rng, A)
    g = C.sample_mor_from(rng, f.cod)
    return f, g, C.sample_mor_from(rng, g.cod)


def check_bimonoidal_laws(cat: BimonoidalCategory, spec: SampleSpec | None = None) -> CheckReport:
    spec = spec or SampleSpec()
    return run_laws(cat, bimonoidal_laws(cat, spec), spec, "bimonoidal")


# ---------------------------------------------------------------------------
# sampling and components


def enumerate_sample(cat: BimonoidalCategory, spec: SampleSpec, cap: int = 5000):
    """Objects up to ``spec.max_object_size`` and morphisms out of them.

    Hom-sets are listed exhaustively when the instance can enumerate them and
    they have at most ``cap`` elements; otherwise ``spec.sample_count``
    morphisms are drawn from the seed.
    """
    objects = cat.enumerate_objects(spec.max_object_size)
    rng = spec.rng("enumerate", cat.key)
    morphisms = []
    for A in objects:
        homs = cat.morphisms_from(A)
        if homs is not None and len(homs) <= cap:
            morphisms.extend(homs)
        else:
            morphisms.extend(cat.sample_mor_from(rng, A) for _ in range(spec.sample_count))
    return objects, morphisms


def component_label(cat: BimonoidalCategory, A):
    if not cat.has_components:
        raise CapabilityError(f"{cat.key} declares no path-component labels")
    return cat.component(A)


def union_find_components(objects, morphisms) -> list[set]:
    """Connected components of the graph whose edges are the given morphisms."""
    parent = {A: A for A in objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for f in morphisms:
        if f.dom in parent and f.cod in parent:
            a, b = find(f.dom), find(f.cod)
            if a != b:
                parent[a] = b
    groups: dict = {}
    for A in objects:
        groups.setdefault(find(A), set()).add(A)
    return list(groups.values())
