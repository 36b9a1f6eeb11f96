"""Monomial matrices with ``k``-th root of unity entries: a finite model of ``V``.

A morphism ``n -> n`` is ``(perm, exps)``: column ``j`` has its single
nonzero entry ``w^exps[j]`` in row ``perm[j]`` where ``w = exp(2 pi i / k)``.
Roots of unity are tracked as exponents mod ``k``.  The tensor product is
the Kronecker product with the first factor major.
"""

from __future__ import annotations

import itertools
import math

from .. import perms
from ..core import Mor
from .base import PermCategory


class MonomialArithmetic:
    """Composition, inverses and sums of exponent-decorated permutations."""

    k: int

    def d_identity(self, n):
        return (perms.identity(n), (0,) * n)

    def d_perm(self, p):
        return (tuple(p), (0,) * len(p))

    def d_compose(self, g, f):
        (s2, e2), (s1, e1) = g, f
        k = self.k
        return (perms.compose(s2, s1), tuple((e1[j] + e2[s1[j]]) % k for j in range(len(s1))))

    def d_inverse(self, f):
        s, e = f
        sinv = perms.inverse(s)
        return (sinv, tuple((-e[sinv[i]]) % self.k for i in range(len(s))))

    def d_oplus(self, f, g):
        return (perms.oplus(f[0], g[0]), f[1] + g[1])

    def d_otimes(self, f, g):
        k = self.k
        return (perms.otimes(f[0], g[0]), tuple((a + b) % k for a in f[1] for b in g[1]))

    def d_underlying(self, data):
        return data[0]

    def d_negate(self, data):
        return (data[0], tuple((-e) % self.k for e in data[1]))

    def random_decoration(self, rng, A, perm):
        return (tuple(perm), tuple(rng.randrange(self.k) for _ in perm))

    def all_decorations(self, A, perm):
        return [(tuple(perm), e) for e in itertools.product(range(self.k), repeat=len(perm))]

    def mor_data_to_json(self, data):
        return {"perm": list(data[0]), "exps": list(data[1])}

    def mor_data_from_json(self, data, dom, cod):
        p = tuple(int(x) for x in data["perm"])
        if not perms.is_permutation(p):
            raise ValueError(f"{data['perm']!r} is not a permutation")
        exps = tuple(int(e) % self.k for e in data["exps"])
        if len(exps) != len(p):
            raise ValueError("exponent count does not match the permutation")
        return (p, exps)

    def to_matrix(self, data):
        """Dense matrix of exponents, ``None`` for zero entries (row, column)."""
        s, e = data
        M = [[None] * len(s) for _ in s]
        for j, i in enumerate(s):
            M[i][j] = e[j]
        return M


class MonomialCategory(MonomialArithmetic, PermCategory):
    """``V_k``: objects ``n``, morphisms monomial ``n x n`` matrices over ``mu_k``.

    The anti-involution is conjugate transpose style: ``zeta`` negates
    exponents (complex conjugation) and ``mu = c_otimes``.
    """

    has_anti_involution = True
    has_braiding = True
    bipermutative = True

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("k must be positive")
        self.k = k
        self.key = f"monomial:{k}"

    def hom_count(self, A):
        return math.factorial(A) * self.k ** A

    def zeta(self, A):
        return A

    def zeta_mor(self, f):
        return Mor(f.dom, f.cod, self.d_negate(f.data))

    def mu(self, A, B):
        return self.c_otimes(A, B)

    def beta(self, A, B):
        return self.c_otimes(A, B)
