"""The wedge ``V_G E``: finite sets labelled by one group element each.

Objects are ``n_g``; all ``0_g`` are identified with a single zero object.
Addition is partial in the source construction and is taken literally here:
``n_g + m_h`` is ``(n+m)_g`` when ``g == h`` and the zero object otherwise,
so sums are only well behaved on equally labelled objects.  Law sampling
therefore draws one label per tuple for the additive laws.
"""

from __future__ import annotations

from .. import perms
from ..core import Mor
from ..rig import FiniteAbelianGroup, GroupRig, GroupRingElem
from .base import PermCategory


class WedgeCategory(PermCategory):
    has_anti_involution = True
    has_braiding = True
    bipermutative = True

    def __init__(self, group: FiniteAbelianGroup):
        self.group = group
        self.key = f"wedge:{','.join(map(str, group.moduli))}"
        self._zero = (0, group.identity)
        self._one = (1, group.identity)

    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    def obj(self, n, g=None):
        g = self.group.identity if g is None else self.group.element(g)
        return self._zero if n == 0 else (n, g)

    def size(self, A):
        return A[0]

    def obj_oplus(self, A, B):
        if A[0] == 0:
            return B
        if B[0] == 0:
            return A
        if A[1] != B[1]:
            return self._zero
        return (A[0] + B[0], A[1])

    def obj_otimes(self, A, B):
        if A[0] == 0 or B[0] == 0:
            return self._zero
        return (A[0] * B[0], self.group.add(A[1], B[1]))

    def _collapsed(self, dom, length):
        return self.size(dom) != length

    def perm_mor(self, A, p):
        # sums of differently labelled objects collapse to 0 and so do their structure maps
        if self._collapsed(A, len(p)):
            return self.identity(self._zero)
        return super().perm_mor(A, p)

    def oplus_mor(self, f, g):
        dom = self.oplus(f.dom, g.dom)
        if self._collapsed(dom, self.size(f.dom) + self.size(g.dom)):
            return self.identity(self._zero)
        return super().oplus_mor(f, g)

    def hom_count(self, A):
        import math
        return math.factorial(A[0])

    # -- sampling -----------------------------------------------------------
    def random_label(self, rng):
        return rng.choice(self.group.elements())

    def sample_object(self, rng, max_size):
        return self.obj(rng.randint(0, max_size), self.random_label(rng))

    def sample_objects(self, rng, k, max_size, homogeneous=True):
        if not homogeneous:
            return super().sample_objects(rng, k, max_size, homogeneous)
        g = self.random_label(rng)
        return tuple(self.obj(rng.randint(0, max_size), g) for _ in range(k))

    def enumerate_objects(self, max_size):
        return [self._zero] + [(n, g) for n in range(1, max_size + 1)
                               for g in self.group.elements()]

    def obj_from_nat(self, k, label=None):
        return self.obj(k, label)

    # -- components: n_g -> n*g in N0[G] ------------------------------------
    @property
    def pi0_rig(self):
        return GroupRig(self.group, signed=False)

    def component(self, A):
        if A[0] == 0:
            return GroupRingElem.zero(self.group)
        return GroupRingElem.basis(self.group, A[1], A[0])

    # -- anti-involution ----------------------------------------------------
    def zeta(self, A):
        return self.obj(A[0], self.group.neg(A[1]))

    def zeta_mor(self, f):
        return Mor(self.zeta(f.dom), self.zeta(f.cod), f.data)

    def mu(self, A, B):
        # zeta(A*B) = zeta(B)*zeta(A) on objects since G is abelian
        return self.perm_mor(self.zeta(self.otimes(A, B)),
                             perms.c_otimes(self.size(A), self.size(B)))

    def beta(self, A, B):
        return self.c_otimes(A, B)

    # -- serialization ------------------------------------------------------
    def obj_to_json(self, A):
        return [A[0], list(A[1])]

    def obj_from_json(self, data):
        try:
            n, g = data
        except (TypeError, ValueError):
            raise ValueError(f"wedge object must be [n, label], got {data!r}") from None
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"wedge object size {n!r} is not a natural number")
        return self.obj(n, g)
