"""Free G-sets: objects ``n`` with morphisms the wreath product ``G wr S_n``.

A morphism is stored as ``(labels, perm)`` and read as the monomial matrix
``diag(labels) . E_perm``, so ``labels`` is indexed by target points::

    (z', s') o (z, s) = (z'_i + z_{s'^-1(i)}, s' s)

The group must be abelian for the tensor product to be natural.
"""

from __future__ import annotations

import itertools
import math

from .. import perms
from ..rig import FiniteAbelianGroup
from .base import PermCategory


class WreathCategory(PermCategory):
    has_anti_involution = True
    has_braiding = True
    bipermutative = True

    def __init__(self, group: FiniteAbelianGroup):
        self.group = group
        self.key = f"wreath:{','.join(map(str, group.moduli))}"

    def hom_count(self, A):
        return math.factorial(A) * self.group.order ** A

    def _labels(self, n):
        return (self.group.identity,) * n

    def d_identity(self, n):
        return (self._labels(n), perms.identity(n))

    def d_perm(self, p):
        return (self._labels(len(p)), tuple(p))

    def d_compose(self, g, f):
        (z2, s2), (z1, s1) = g, f
        G = self.group
        s2inv = perms.inverse(s2)
        return (tuple(G.add(z2[i], z1[s2inv[i]]) for i in range(len(s2))),
                perms.compose(s2, s1))

    def d_inverse(self, f):
        z, s = f
        G = self.group
        return (tuple(G.neg(z[s[i]]) for i in range(len(s))), perms.inverse(s))

    def d_oplus(self, f, g):
        return (f[0] + g[0], perms.oplus(f[1], g[1]))

    def d_otimes(self, f, g):
        G = self.group
        return (tuple(G.add(a, b) for a in f[0] for b in g[0]), perms.otimes(f[1], g[1]))

    def d_underlying(self, data):
        return data[1]

    def random_decoration(self, rng, A, perm):
        elems = self.group.elements()
        return (tuple(rng.choice(elems) for _ in perm), tuple(perm))

    def all_decorations(self, A, perm):
        elems = self.group.elements()
        return [(z, tuple(perm)) for z in itertools.product(elems, repeat=len(perm))]

    # anti-involution: invert labels, mu = c_otimes
    def zeta(self, A):
        return A

    def zeta_mor(self, f):
        G = self.group
        return type(f)(f.dom, f.cod, (tuple(G.neg(g) for g in f.data[0]), f.data[1]))

    def mu(self, A, B):
        return self.c_otimes(A, B)

    def beta(self, A, B):
        return self.c_otimes(A, B)

    def mor_data_to_json(self, data):
        return {"labels": [list(g) for g in data[0]], "perm": list(data[1])}

    def mor_data_from_json(self, data, dom, cod):
        perm = super().mor_data_from_json(data["perm"], dom, cod)
        labels = tuple(self.group.element(g) for g in data["labels"])
        if len(labels) != len(perm):
            raise ValueError("label count does not match the permutation")
        return (labels, perm)
