"""Discrete categories on rigs: objects are rig elements, morphisms identities."""

from __future__ import annotations

import math

from ..core import BimonoidalCategory, CompositionError, Mor
from ..rig import (
    CapabilityError, FiniteRing, GroupRig, IntegerRing, ModularRing, NaturalNumbers,
    Pi0Rig, is_invertible_matrix, random_nat_gl,
)


class DiscreteCategory(BimonoidalCategory):
    """``R_R``: sum and product are those of the rig, all structure maps identities.

    ``zeta`` is the rig's anti-involution and ``mu`` is the identity.  A braiding
    (the identity) exists exactly when the rig is commutative.
    """

    is_discrete = True
    has_anti_involution = True
    has_components = True

    def __init__(self, rig: Pi0Rig, key: str | None = None):
        self.rig = rig
        self.key = key or f"discrete:{rig.name}"
        self.has_braiding = rig.is_commutative
        self.bipermutative = rig.is_commutative

    @property
    def zero(self):
        return self.rig.zero

    @property
    def one(self):
        return self.rig.one

    def identity(self, A):
        return Mor(A, A, None)

    def compose(self, g, f):
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        return Mor(f.dom, g.cod, None)

    def inverse(self, f):
        return Mor(f.cod, f.dom, None)

    def oplus(self, A, B):
        return self.rig.add(A, B)

    def otimes(self, A, B):
        return self.rig.mul(A, B)

    def oplus_mor(self, f, g):
        return Mor(self.oplus(f.dom, g.dom), self.oplus(f.cod, g.cod), None)

    def otimes_mor(self, f, g):
        return Mor(self.otimes(f.dom, g.dom), self.otimes(f.cod, g.cod), None)

    def c_oplus(self, A, B):
        return self.identity(self.oplus(A, B))

    def d_r(self, A, B, C):
        return self.identity(self.oplus(self.otimes(A, B), self.otimes(A, C)))

    def zeta(self, A):
        return self.rig.involution(A)

    def zeta_mor(self, f):
        return Mor(self.zeta(f.dom), self.zeta(f.cod), None)

    def mu(self, A, B):
        return self.identity(self.zeta(self.otimes(A, B)))

    def beta(self, A, B):
        if not self.rig.is_commutative:
            raise CapabilityError(f"{self.key} is not commutative and carries no braiding")
        return self.identity(self.otimes(A, B))

    @property
    def pi0_rig(self):
        return self.rig

    def component(self, A):
        return A

    def pi0_category(self):
        return self

    def sample_object(self, rng, max_size):
        return self.rig.sample(rng, max_size)

    def sample_mor_from(self, rng, A):
        return self.identity(A)

    def enumerate_objects(self, max_size):
        return self.rig.elements(max_size)

    def morphisms_from(self, A):
        return [self.identity(A)]

    def random_gl_matrix(self, rng, n):
        return random_gl(rng, self.rig, n)

    def obj_to_json(self, A):
        return self.rig.to_json(A)

    def obj_from_json(self, data):
        x = self.rig.from_json(data)
        if not self.rig.contains(x):
            raise ValueError(f"{data!r} is not an element of {self.rig.name}")
        return x

    def mor_data_to_json(self, data):
        return None

    def mor_data_from_json(self, data, dom, cod):
        if dom != cod:
            raise ValueError("a discrete category only has identities")
        return None


def _integer_gl(rng, n):
    M = random_nat_gl(rng, n)
    for row in M:
        if rng.random() < 0.5:
            row[:] = [-x for x in row]
    if n > 1 and rng.random() < 0.5:
        i, j = rng.sample(range(n), 2)
        M[i] = [a - b for a, b in zip(M[i], M[j])]
    return M


def random_gl(rng, rig: Pi0Rig, n: int):
    """A random matrix over ``rig`` that is invertible over its group completion."""
    if isinstance(rig, NaturalNumbers):
        M = random_nat_gl(rng, n)
    elif isinstance(rig, IntegerRing):
        M = _integer_gl(rng, n)
    elif isinstance(rig, ModularRing):
        # scaling a row by a unit keeps the determinant a unit
        units = [u for u in range(rig.k) if math.gcd(u, rig.k) == 1]
        M = []
        for row in _integer_gl(rng, n):
            u = rng.choice(units)
            M.append([(u * x) % rig.k for x in row])
    elif isinstance(rig, GroupRig):
        base = _integer_gl(rng, n) if rig.signed else random_nat_gl(rng, n)
        elems = rig.group.elements()
        M = []
        for row in base:
            g = rng.choice(elems)
            M.append([rig.basis(g, x) for x in row])
    elif isinstance(rig, FiniteRing):
        while True:
            M = [[rig.sample(rng, 0) for _ in range(n)] for _ in range(n)]
            if is_invertible_matrix(M, rig):
                break
    else:
        raise CapabilityError(f"no GL sampler for rig kind {rig.name}")
    return tuple(tuple(row) for row in M)
