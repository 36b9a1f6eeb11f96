"""Anti-involutions ``(zeta, mu)``, morphisms between such categories, and group actions.

An anti-involution is a functor ``zeta`` with ``zeta o zeta = id`` that is
strictly additive and reverses products up to natural isomorphisms::

    mu(A, B): zeta(A*B) -> zeta(B) * zeta(A)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import (
    BimonoidalCategory, CapabilityError, CheckReport, Law, Mor, SampleSpec,
    _composable_pair, run_laws,
)

__all__ = [
    "anti_involution_laws", "check_anti_involution", "mu_symmetry_report",
    "LaxBimonoidalFunctor", "identity_functor", "functor_laws", "check_functor",
    "check_antiinv_morphism", "GroupAction", "check_group_action", "FixedCategory",
    "fixed_category", "check_fixed_closure", "zeta_matrix",
]


def _require_anti_involution(cat):
    if not cat.has_anti_involution:
        raise CapabilityError(f"{cat.key} carries no anti-involution (zeta, mu)")


def anti_involution_laws(cat: BimonoidalCategory, spec: SampleSpec) -> list[Law]:
    C = cat
    I = C.identity
    Z, Zm, mu = C.zeta, C.zeta_mor, C.mu
    s = spec.max_object_size

    def objs(k, homogeneous=True):
        return lambda rng: C.sample_objects(rng, k, s, homogeneous)

    def mors(k, homogeneous=True):
        def draw(rng):
            return tuple(C.sample_mor_from(rng, A) for A in C.sample_objects(rng, k, s, homogeneous))
        return draw

    def pair(rng):
        (A,) = C.sample_objects(rng, 1, s)
        return _composable_pair(C, rng, A)

    return [
        Law("zeta.involutive", "zeta(zeta(A)) = A, zeta(zeta(f)) = f",
            lambda f: ((Z(Z(f.dom)), Z(Z(f.cod)), Zm(Zm(f))), (f.dom, f.cod, f)), mors(1)),
        Law("zeta.functor", "zeta(g o f) = zeta(g) o zeta(f), zeta(id) = id",
            lambda f, g: ((Zm(C.compose(g, f)), Zm(I(f.dom))),
                          (C.compose(Zm(g), Zm(f)), I(Z(f.dom)))), pair),
        Law("zeta.typing", "zeta(f): zeta(A) -> zeta(B)",
            lambda f: ((Zm(f).dom, Zm(f).cod), (Z(f.dom), Z(f.cod))), mors(1)),
        Law("zeta.oplus", "zeta(A+B) = zeta(A)+zeta(B), zeta(f+g) = zeta(f)+zeta(g), zeta(0) = 0",
            lambda f, g: ((Z(C.oplus(f.dom, g.dom)), Zm(C.oplus_mor(f, g)), Z(C.zero)),
                          (C.oplus(Z(f.dom), Z(g.dom)), C.oplus_mor(Zm(f), Zm(g)), C.zero)),
            mors(2)),
        Law("zeta.c_oplus", "zeta(c(A,B)) = c(zeta(A), zeta(B))",
            lambda A, B: (Zm(C.c_oplus(A, B)), C.c_oplus(Z(A), Z(B))), objs(2)),
        Law("zeta.unit", "zeta(1) = 1, mu(1,A) = id = mu(A,1)",
            lambda A: ((Z(C.one), mu(C.one, A), mu(A, C.one)), (C.one, I(Z(A)), I(Z(A)))),
            objs(1)),
        Law("mu.typing", "mu(A,B): zeta(AB) -> zeta(B) zeta(A)",
            lambda A, B: ((mu(A, B).dom, mu(A, B).cod),
                          (Z(C.otimes(A, B)), C.otimes(Z(B), Z(A)))), objs(2, False)),
        Law("mu.invertible", "mu^-1 o mu = id",
            lambda A, B: (C.compose(C.inverse(mu(A, B)), mu(A, B)), I(Z(C.otimes(A, B)))),
            objs(2, False)),
        Law("mu.natural", "mu(A',B') o zeta(f*g) = (zeta(g)*zeta(f)) o mu(A,B)",
            lambda f, g: (C.compose(mu(f.cod, g.cod), Zm(C.otimes_mor(f, g))),
                          C.compose(C.otimes_mor(Zm(g), Zm(f)), mu(f.dom, g.dom))),
            mors(2, False)),
        Law("mu.associativity",
            "(id_zC * mu(A,B)) o mu(AB,C) = (mu(B,C) * id_zA) o mu(A,BC)",
            lambda A, B, D: (
                C.compose(C.otimes_mor(I(Z(D)), mu(A, B)), mu(C.otimes(A, B), D)),
                C.compose(C.otimes_mor(mu(B, D), I(Z(A))), mu(A, C.otimes(B, D)))),
            objs(3, False)),
        Law("mu.distributivity.right_sum",
            "mu(A,B+C) o zeta(d_r(A,B,C)) = mu(A,B) + mu(A,C)",
            lambda A, B, D: (C.compose(mu(A, C.oplus(B, D)), Zm(C.d_r(A, B, D))),
                             C.oplus_mor(mu(A, B), mu(A, D))), objs(3)),
        Law("mu.distributivity.left_sum",
            "mu(A+B,C) = d_r(zC,zA,zB) o (mu(A,C) + mu(B,C))",
            lambda A, B, D: (mu(C.oplus(A, B), D),
                             C.compose(C.d_r(Z(D), Z(A), Z(B)),
                                       C.oplus_mor(mu(A, D), mu(B, D)))), objs(3)),
    ]


def check_anti_involution(cat: BimonoidalCategory, spec: SampleSpec | None = None) -> CheckReport:
    _require_anti_involution(cat)
    spec = spec or SampleSpec()
    return run_laws(cat, anti_involution_laws(cat, spec), spec, "anti-involution")


def mu_symmetry_report(cat: BimonoidalCategory, spec: SampleSpec | None = None) -> CheckReport:
    """Whether ``mu(zB, zA) o zeta(mu(A,B)) = id``.

    This is not one of the anti-involution axioms; it decides whether the
    bar involution squares to the identity on morphism data as well.
    """
    _require_anti_involution(cat)
    spec = spec or SampleSpec()
    C = cat
    law = Law("mu.symmetry", "mu(zB,zA) o zeta(mu(A,B)) = id",
              lambda A, B: (C.compose(C.mu(C.zeta(B), C.zeta(A)), C.zeta_mor(C.mu(A, B))),
                            C.identity(C.otimes(A, B))),
              lambda rng: C.sample_objects(rng, 2, spec.max_object_size, False))
    return run_laws(cat, [law], spec, "mu-symmetry")


# ---------------------------------------------------------------------------
# functors


@dataclass
class LaxBimonoidalFunctor:
    """A functor with ``F(A+B) = F(A)+F(B)`` and comparison ``lam(A,B): F(A)F(B) -> F(AB)``.

    ``lam`` defaults to the identity, which is the only case the bundled
    functors need.
    """

    name: str
    source: BimonoidalCategory
    target: BimonoidalCategory
    on_obj: Callable
    on_mor: Callable
    lam: Callable | None = None

    def __call__(self, x):
        return self.on_mor(x) if isinstance(x, Mor) else self.on_obj(x)

    def comparison(self, A, B) -> Mor:
        if self.lam is not None:
            return self.lam(A, B)
        T = self.target
        return T.identity(T.otimes(self.on_obj(A), self.on_obj(B)))


def identity_functor(cat: BimonoidalCategory) -> LaxBimonoidalFunctor:
    return LaxBimonoidalFunctor(f"id[{cat.key}]", cat, cat, lambda A: A, lambda f: f)


def functor_laws(F: LaxBimonoidalFunctor, spec: SampleSpec, prefix: str = "functor",
                 exhaustive_size: int | None = None) -> list[Law]:
    S, T = F.source, F.target
    s = spec.max_object_size
    Fo, Fm, lam = F.on_obj, F.on_mor, F.comparison

    def objs(k, homogeneous=True):
        return lambda rng: S.sample_objects(rng, k, s, homogeneous)

    def mors(k, homogeneous=True):
        def draw(rng):
            return tuple(S.sample_mor_from(rng, A) for A in S.sample_objects(rng, k, s, homogeneous))
        return draw

    def pair(rng):
        (A,) = S.sample_objects(rng, 1, s)
        return _composable_pair(S, rng, A)

    composition = Law(f"{prefix}.composition", "F(g o f) = F(g) o F(f), F(id) = id",
                      lambda f, g: ((Fm(S.compose(g, f)), Fm(S.identity(f.dom))),
                                    (T.compose(Fm(g), Fm(f)), T.identity(Fo(f.dom)))), pair)
    if exhaustive_size is not None:
        def all_pairs():
            for A in S.enumerate_objects(exhaustive_size):
                homs = S.morphisms_from(A)
                for f in homs:
                    for g in S.morphisms_from(f.cod):
                        yield (f, g)
        composition.inputs = all_pairs

    return [
        Law(f"{prefix}.typing", "F(f): F(A) -> F(B)",
            lambda f: ((Fm(f).dom, Fm(f).cod), (Fo(f.dom), Fo(f.cod))), mors(1)),
        composition,
        Law(f"{prefix}.units", "F(0) = 0, F(1) = 1",
            lambda: ((Fo(S.zero), Fo(S.one)), (T.zero, T.one)), inputs=lambda: [()]),
        Law(f"{prefix}.oplus", "F(A+B) = F(A)+F(B), F(f+g) = F(f)+F(g)",
            lambda f, g: ((Fo(S.oplus(f.dom, g.dom)), Fm(S.oplus_mor(f, g))),
                          (T.oplus(Fo(f.dom), Fo(g.dom)), T.oplus_mor(Fm(f), Fm(g)))), mors(2)),
        Law(f"{prefix}.c_oplus", "F(c(A,B)) = c(FA,FB)",
            lambda A, B: (Fm(S.c_oplus(A, B)), T.c_oplus(Fo(A), Fo(B))), objs(2)),
        Law(f"{prefix}.otimes", "lam o (F(f)*F(g)) = F(f*g) o lam",
            lambda f, g: (T.compose(lam(f.cod, g.cod), T.otimes_mor(Fm(f), Fm(g))),
                          T.compose(Fm(S.otimes_mor(f, g)), lam(f.dom, g.dom))),
            mors(2, False)),
        Law(f"{prefix}.d_r", "F(d_r(A,B,C)) o (lam + lam) = lam o (id * lam) o d_r(FA,FB,FC)",
            lambda A, B, D: (
                T.compose(Fm(S.d_r(A, B, D)), T.oplus_mor(lam(A, B), lam(A, D))),
                T.compose(lam(A, S.oplus(B, D)),
                          T.compose(T.otimes_mor(T.identity(Fo(A)), T.identity(Fo(S.oplus(B, D)))),
                                    T.d_r(Fo(A), Fo(B), Fo(D))))),
            objs(3)),
    ]


def check_functor(F: LaxBimonoidalFunctor, spec: SampleSpec | None = None,
                  exhaustive_size: int | None = None) -> CheckReport:
    spec = spec or SampleSpec()
    return run_laws(F.source, functor_laws(F, spec, exhaustive_size=exhaustive_size),
                    spec, f"functor:{F.name}")


def antiinv_morphism_laws(F: LaxBimonoidalFunctor, spec: SampleSpec,
                          prefix: str = "morphism") -> list[Law]:
    S, T = F.source, F.target
    s = spec.max_object_size
    Fo, Fm, lam = F.on_obj, F.on_mor, F.comparison

    def draw_mor(rng):
        (A,) = S.sample_objects(rng, 1, s)
        return (S.sample_mor_from(rng, A),)

    return [
        Law(f"{prefix}.zeta", "F(zeta(A)) = zeta'(F(A)), F(zeta(f)) = zeta'(F(f))",
            lambda f: ((Fo(S.zeta(f.dom)), Fm(S.zeta_mor(f))), (T.zeta(Fo(f.dom)), T.zeta_mor(Fm(f)))),
            draw_mor),
        Law(f"{prefix}.mu", "lam(zA,zB) o mu'(FB,FA) = F(mu(B,A)) o zeta'(lam(B,A))",
            lambda A, B: (T.compose(lam(S.zeta(A), S.zeta(B)), T.mu(Fo(B), Fo(A))),
                          T.compose(Fm(S.mu(B, A)), T.zeta_mor(lam(B, A)))),
            lambda rng: S.sample_objects(rng, 2, s, False)),
    ]


def check_antiinv_morphism(F: LaxBimonoidalFunctor, source=None, target=None,
                           spec: SampleSpec | None = None,
                           exhaustive_size: int | None = None) -> CheckReport:
    """Functor laws plus compatibility with ``zeta`` and ``mu``."""
    if source is not None and source is not F.source:
        raise ValueError("source does not match the functor")
    if target is not None and target is not F.target:
        raise ValueError("target does not match the functor")
    _require_anti_involution(F.source)
    _require_anti_involution(F.target)
    spec = spec or SampleSpec()
    laws = functor_laws(F, spec, exhaustive_size=exhaustive_size) + antiinv_morphism_laws(F, spec)
    return run_laws(F.source, laws, spec, f"antiinv-morphism:{F.name}")


# ---------------------------------------------------------------------------
# group actions


@dataclass
class GroupAction:
    """A strict action ``g -> phi_g`` of a finite abelian group by bimonoidal endofunctors."""

    name: str
    group: object
    category: BimonoidalCategory
    phi: Callable  # group element -> LaxBimonoidalFunctor

    def act(self, g, x):
        return self.phi(g)(x)

    def is_fixed(self, x) -> bool:
        return all(self.act(g, x) == x for g in self.group.elements())


def trivial_action(group, cat: BimonoidalCategory) -> GroupAction:
    return GroupAction(f"trivial[{cat.key}]", group, cat, lambda g: identity_functor(cat))


def check_group_action(action: GroupAction, instance: BimonoidalCategory | None = None,
                       spec: SampleSpec | None = None) -> CheckReport:
    C = action.category
    if instance is not None and instance is not C:
        raise ValueError("action is defined on a different instance")
    spec = spec or SampleSpec()
    G = action.group
    elems = G.elements()
    s = spec.max_object_size

    def draw(rng):
        (A,) = C.sample_objects(rng, 1, s)
        return (rng.choice(elems), rng.choice(elems), C.sample_mor_from(rng, A))

    laws = [
        Law("action.unit", "phi_1 = id",
            lambda f: ((action.act(G.identity, f.dom), action.act(G.identity, f)), (f.dom, f)),
            lambda rng: (C.sample_mor_from(rng, C.sample_objects(rng, 1, s)[0]),)),
        Law("action.composition", "phi_g o phi_h = phi_gh",
            lambda g, h, f: ((action.act(g, action.act(h, f.dom)), action.act(g, action.act(h, f))),
                             (action.act(G.add(g, h), f.dom), action.act(G.add(g, h), f))),
            draw),
    ]
    for g in elems:
        F = action.phi(g)
        tag = f"phi[{','.join(map(str, g))}]"
        laws += functor_laws(F, spec, prefix=tag)
        if C.has_anti_involution:
            laws += antiinv_morphism_laws(F, spec, prefix=f"{tag}.antiinv")
    return run_laws(C, laws, spec, f"group-action:{action.name}")


class FixedCategory(BimonoidalCategory):
    """The subcategory of objects and morphisms fixed by every ``phi_g``.

    Membership is decided per object or morphism; sampling rejects
    non-fixed draws from the ambient instance, unless the action supplies
    ``fixed_sampler`` hooks.
    """

    MAX_TRIES = 20000

    def __init__(self, action: GroupAction, mor_sampler: Callable | None = None):
        amb = action.category
        self.action = action
        self.ambient = amb
        self.key = f"fixed[{action.name}]"
        for flag in ("has_anti_involution", "has_braiding", "has_components", "is_discrete",
                     "bipermutative"):
            setattr(self, flag, getattr(amb, flag))
        self._mor_sampler = mor_sampler

    def contains_obj(self, A) -> bool:
        return self.action.is_fixed(A)

    def contains_mor(self, f) -> bool:
        return self.action.is_fixed(f.dom) and self.action.is_fixed(f)

    # structure is inherited from the ambient instance
    zero = property(lambda self: self.ambient.zero)
    one = property(lambda self: self.ambient.one)
    pi0_rig = property(lambda self: self.ambient.pi0_rig)

    def _reject(self, draw, accept):
        for _ in range(self.MAX_TRIES):
            x = draw()
            if accept(x):
                return x
        raise CapabilityError(f"{self.key}: rejection sampling found no fixed element")

    def sample_object(self, rng, max_size):
        return self._reject(lambda: self.ambient.sample_object(rng, max_size), self.contains_obj)

    def sample_objects(self, rng, k, max_size, homogeneous=True):
        objs = list(self.ambient.sample_objects(rng, k, max_size, homogeneous))
        return tuple(A if self.contains_obj(A) else self.sample_object(rng, max_size) for A in objs)

    def sample_mor_from(self, rng, A):
        if self._mor_sampler is not None:
            return self._mor_sampler(rng, A)
        return self._reject(lambda: self.ambient.sample_mor_from(rng, A), self.contains_mor)

    def enumerate_objects(self, max_size):
        return [A for A in self.ambient.enumerate_objects(max_size) if self.contains_obj(A)]

    def morphisms_from(self, A):
        homs = self.ambient.morphisms_from(A)
        return None if homs is None else [f for f in homs if self.contains_mor(f)]


def _delegate(name):
    def method(self, *args):
        return getattr(self.ambient, name)(*args)
    method.__name__ = name
    return method


# the base class defines these, so they must be overridden explicitly
for _name in ("identity", "compose", "inverse", "is_identity", "oplus", "oplus_mor", "otimes",
              "otimes_mor", "c_oplus", "d_r", "zeta", "zeta_mor", "mu", "beta", "component",
              "pi0_category", "obj_to_json", "obj_from_json", "mor_data_to_json",
              "mor_data_from_json", "mor_to_json", "mor_from_json", "random_gl_matrix"):
    setattr(FixedCategory, _name, _delegate(_name))
del _name


def fixed_category(action: GroupAction, instance: BimonoidalCategory | None = None,
                   mor_sampler: Callable | None = None) -> FixedCategory:
    if instance is not None and instance is not action.category:
        raise ValueError("action is defined on a different instance")
    return FixedCategory(action, mor_sampler)


def check_fixed_closure(fixed: FixedCategory, spec: SampleSpec | None = None) -> CheckReport:
    """Sums, products, composites and structure maps of fixed data are fixed."""
    spec = spec or SampleSpec()
    C = fixed
    s = spec.max_object_size
    fx = fixed.action.is_fixed

    def mors(k, homogeneous=True):
        def draw(rng):
            return tuple(C.sample_mor_from(rng, A) for A in C.sample_objects(rng, k, s, homogeneous))
        return draw

    def ok(*xs):
        return (all(fx(x) for x in xs), True)

    laws = [
        Law("fixed.units", "0 and 1 are fixed", lambda: ok(C.zero, C.one), inputs=lambda: [()]),
        Law("fixed.composition", "g o f fixed",
            lambda f, g: ok(C.compose(g, f)),
            lambda rng: _composable_pair(C, rng, C.sample_objects(rng, 1, s)[0])),
        Law("fixed.oplus", "A+B, f+g fixed",
            lambda f, g: ok(C.oplus(f.dom, g.dom), C.oplus_mor(f, g)), mors(2)),
        Law("fixed.otimes", "AB, f*g fixed",
            lambda f, g: ok(C.otimes(f.dom, g.dom), C.otimes_mor(f, g)), mors(2, False)),
        Law("fixed.structure", "c_oplus, d_r fixed",
            lambda f, g, h: ok(C.c_oplus(f.dom, g.dom), C.d_r(f.dom, g.dom, h.dom)), mors(3)),
    ]
    if C.has_anti_involution:
        laws.append(Law("fixed.anti_involution", "zeta(A), zeta(f), mu(A,B) fixed",
                        lambda f, g: ok(C.zeta(f.dom), C.zeta_mor(f), C.mu(f.dom, g.dom)),
                        mors(2, False)))
    return run_laws(C, laws, spec, "fixed-closure")


def zeta_matrix(cat, M):
    from .matrices import zeta_matrix as _zm
    return _zm(cat, M)
