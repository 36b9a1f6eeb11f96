"""Shared machinery for instances whose morphisms are decorated permutations.

Every hom-set of the categories of finite sets, free G-sets, monomial
matrices and graded lines consists of bijections of finite point sets with
some decoration per point.  Subclasses provide the decoration arithmetic;
the structure maps are the undecorated permutations of :mod:`bimon.perms`.
"""

from __future__ import annotations

from .. import perms
from ..core import BimonoidalCategory, CompositionError, Mor
from ..rig import NaturalNumbers, random_nat_gl

MAX_HOM_ENUMERATION = 5000


class PermCategory(BimonoidalCategory):
    has_components = True

    # -- decoration hooks ---------------------------------------------------
    def size(self, A) -> int:
        return A

    def obj_oplus(self, A, B):
        return A + B

    def obj_otimes(self, A, B):
        return A * B

    def permute_obj(self, A, perm):
        """Codomain of a morphism out of ``A`` with underlying permutation ``perm``."""
        return A

    def d_identity(self, n):
        return perms.identity(n)

    def d_perm(self, p):
        """Undecorated morphism data for the permutation ``p``."""
        return p

    def d_compose(self, g, f):
        return perms.compose(g, f)

    def d_inverse(self, f):
        return perms.inverse(f)

    def d_oplus(self, f, g):
        return perms.oplus(f, g)

    def d_otimes(self, f, g):
        return perms.otimes(f, g)

    def d_underlying(self, data):
        return data

    # -- category ---------------------------------------------------------
    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def identity(self, A):
        return Mor(A, A, self.d_identity(self.size(A)))

    def compose(self, g, f):
        if f.cod != g.dom:
            raise CompositionError(f"cannot compose {g!r} after {f!r}")
        return Mor(f.dom, g.cod, self.d_compose(g.data, f.data))

    def inverse(self, f):
        return Mor(f.cod, f.dom, self.d_inverse(f.data))

    def oplus(self, A, B):
        return self.obj_oplus(A, B)

    def otimes(self, A, B):
        return self.obj_otimes(A, B)

    def oplus_mor(self, f, g):
        return Mor(self.oplus(f.dom, g.dom), self.oplus(f.cod, g.cod), self.d_oplus(f.data, g.data))

    def otimes_mor(self, f, g):
        return Mor(self.otimes(f.dom, g.dom), self.otimes(f.cod, g.cod),
                   self.d_otimes(f.data, g.data))

    def perm_mor(self, A, p) -> Mor:
        return Mor(A, self.permute_obj(A, p), self.d_perm(p))

    def c_oplus(self, A, B):
        return self.perm_mor(self.oplus(A, B), perms.c_oplus(self.size(A), self.size(B)))

    def c_otimes(self, A, B):
        return self.perm_mor(self.otimes(A, B), perms.c_otimes(self.size(A), self.size(B)))

    def d_r(self, A, B, C):
        dom = self.oplus(self.otimes(A, B), self.otimes(A, C))
        return self.perm_mor(dom, perms.d_r(self.size(A), self.size(B), self.size(C)))

    # -- sampling ---------------------------------------------------------
    def sample_object(self, rng, max_size):
        return rng.randint(0, max_size)

    def enumerate_objects(self, max_size):
        return list(range(max_size + 1))

    def random_decoration(self, rng, A, perm):
        return self.d_perm(perm)

    def sample_mor_from(self, rng, A):
        p = perms.random_perm(rng, self.size(A))
        return Mor(A, self.permute_obj(A, p), self.random_decoration(rng, A, p))

    def all_decorations(self, A, perm):
        return [self.d_perm(perm)]

    def hom_count(self, A) -> int:
        raise NotImplementedError

    def morphisms_from(self, A):
        if self.hom_count(A) > MAX_HOM_ENUMERATION:
            return None
        out = []
        for p in perms.all_perms(self.size(A)):
            cod = self.permute_obj(A, p)
            out.extend(Mor(A, cod, d) for d in self.all_decorations(A, p))
        return out

    # -- components ---------------------------------------------------------
    @property
    def pi0_rig(self):
        return NaturalNumbers()

    def component(self, A):
        return self.size(A)

    def pi0_category(self):
        from .discrete import DiscreteCategory
        return DiscreteCategory(self.pi0_rig)

    def obj_from_nat(self, k, label=None):
        return k

    def random_label(self, rng):
        return None

    def random_gl_matrix(self, rng, n):
        N = random_nat_gl(rng, n)
        label = self.random_label(rng)
        return tuple(tuple(self.obj_from_nat(x, label) for x in row) for row in N)

    # -- serialization ------------------------------------------------------
    def mor_data_to_json(self, data):
        return list(data)

    def mor_data_from_json(self, data, dom, cod):
        p = tuple(int(x) for x in data)
        if not perms.is_permutation(p):
            raise ValueError(f"{data!r} is not a permutation")
        return p

    def obj_from_json(self, data):
        if not isinstance(data, int) or data < 0:
            raise ValueError(f"object payload {data!r} is not a natural number")
        return data


class FiniteSets(PermCategory):
    """The bipermutative category of finite sets ``n = {1..n}`` and bijections.

    Anti-involution: ``zeta = id`` and ``mu = c_otimes``; braiding ``c_otimes``.
    """

    key = "finite-sets"
    has_anti_involution = True
    has_braiding = True
    bipermutative = True

    def hom_count(self, A):
        import math
        return math.factorial(A)

    def zeta(self, A):
        return A

    def zeta_mor(self, f):
        return f

    def mu(self, A, B):
        return self.c_otimes(A, B)

    def beta(self, A, B):
        return self.c_otimes(A, B)
