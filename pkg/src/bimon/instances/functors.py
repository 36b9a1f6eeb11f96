"""Functors and actions between bundled instances."""

from __future__ import annotations

from .. import perms
from ..core import Mor, with_overrides
from ..involution import GroupAction, LaxBimonoidalFunctor
from ..rig import FiniteAbelianGroup, GroupRig, GroupRingElem, NaturalNumbers
from .discrete import DiscreteCategory
from .monomial import MonomialCategory
from .wreath import WreathCategory


def functor_F(k: int, source: WreathCategory | None = None,
              target: MonomialCategory | None = None) -> LaxBimonoidalFunctor:
    """``E(Z/k) -> V_k``: ``(z, s)`` goes to the monomial matrix ``diag(z) . E_s``.

    Wreath labels are indexed by target points, monomial exponents by source
    points, so the exponent of column ``j`` is ``z[s(j)]``.
    """
    S = source or WreathCategory(FiniteAbelianGroup.cyclic(k))
    T = target or MonomialCategory(k)

    def on_mor(f):
        z, s = f.data
        return Mor(f.dom, f.cod, (s, tuple(z[s[j]][0] for j in range(len(s)))))

    return LaxBimonoidalFunctor(f"F[{k}]", S, T, lambda A: A, on_mor)


def projection_pi(k: int, source: MonomialCategory | None = None) -> LaxBimonoidalFunctor:
    """``V_k -> R_N0``: ``n`` goes to ``n``, every matrix to an identity."""
    S = source or MonomialCategory(k)
    T = DiscreteCategory(NaturalNumbers(), key="discrete:N")
    return LaxBimonoidalFunctor(f"pi[{k}]", S, T, lambda A: A,
                                lambda f: Mor(f.dom, f.cod, None))


def plain_zeta(cat: MonomialCategory):
    """``V_k`` with the anti-involution ``(id, c_otimes)`` instead of conjugation."""
    return with_overrides(cat, key=f"{cat.key}:plain", zeta_mor=lambda f: f)


def conjugation_action(k: int, cat: MonomialCategory | None = None) -> GroupAction:
    """``Z/2`` acting on ``V_k`` by complex conjugation, i.e. exponent negation."""
    C = cat or MonomialCategory(k)
    G = FiniteAbelianGroup.cyclic(2)

    def phi(g):
        if g == G.identity:
            return LaxBimonoidalFunctor("xi^0", C, C, lambda A: A, lambda f: f)
        return LaxBimonoidalFunctor("xi", C, C, lambda A: A,
                                    lambda f: Mor(f.dom, f.cod, C.d_negate(f.data)))

    return GroupAction(f"conjugation[{k}]", G, C, phi)


def signed_perm_sampler(cat: MonomialCategory):
    """Sampler for the conjugation-fixed morphisms: exponents in ``{0, k/2}``."""
    if cat.k % 2:
        values = (0,)
    else:
        values = (0, cat.k // 2)

    def sample(rng, A):
        p = perms.random_perm(rng, A)
        return Mor(A, A, (p, tuple(rng.choice(values) for _ in p)))
    return sample


def group_ring_inversion_action(cat: DiscreteCategory) -> GroupAction:
    """``Z/2`` acting on ``R_Z[G]`` through the ring automorphism ``g -> g^-1``."""
    rig = cat.rig
    if not isinstance(rig, GroupRig):
        raise ValueError("inversion action needs a group-ring instance")
    G = FiniteAbelianGroup.cyclic(2)

    def phi(g):
        if g == G.identity:
            return LaxBimonoidalFunctor("id", cat, cat, lambda A: A, lambda f: f)
        inv = GroupRingElem.inverted
        return LaxBimonoidalFunctor("inv", cat, cat, inv,
                                    lambda f: Mor(inv(f.dom), inv(f.cod), None))

    return GroupAction(f"inversion[{rig.name}]", G, cat, phi)
