"""Exact arithmetic for path-component rigs and their group completions.

Everything here is integer arithmetic; no floating point is involved.  The
rig kinds mirror the path-component rigs of the bundled categories:

* :class:`NaturalNumbers` and :class:`IntegerRing`
* :class:`ModularRing` (``Z/k``)
* :class:`GroupRig` (``N0[G]`` or ``Z[G]`` for a finite abelian ``G``)
* :class:`FiniteRing`, an explicit table-backed finite ring (``M2(F2)``)
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence


class CapabilityError(Exception):
    """Raised when an operation is not supported for the given structure."""


# ---------------------------------------------------------------------------
# finite abelian groups and group rings


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Product of cyclic groups ``Z/m_1 x ... x Z/m_r``; elements are residue tuples."""

    moduli: tuple[int, ...]

    def __post_init__(self):
        if not self.moduli or any(int(m) < 1 for m in self.moduli):
            raise ValueError(f"invalid moduli {self.moduli!r}")
        object.__setattr__(self, "moduli", tuple(int(m) for m in self.moduli))

    @classmethod
    def cyclic(cls, k: int) -> "FiniteAbelianGroup":
        return cls((k,))

    @property
    def identity(self) -> tuple[int, ...]:
        return (0,) * len(self.moduli)

    @property
    def order(self) -> int:
        return math.prod(self.moduli)

    def elements(self) -> list[tuple[int, ...]]:
        # lexicographic on residue vectors
        return list(itertools.product(*(range(m) for m in self.moduli)))

    def element(self, x) -> tuple[int, ...]:
        """Coerce an int (cyclic groups) or a residue sequence to a reduced element."""
        if isinstance(x, int):
            x = (x,) + (0,) * (len(self.moduli) - 1)
        x = tuple(x)
        if len(x) != len(self.moduli):
            raise ValueError(f"element {x!r} does not match moduli {self.moduli!r}")
        return tuple(int(r) % m for r, m in zip(x, self.moduli))

    def contains(self, x) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == len(self.moduli)
            and all(isinstance(r, int) and 0 <= r < m for r, m in zip(x, self.moduli))
        )

    def add(self, x, y):
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def neg(self, x):
        return tuple((-a) % m for a, m in zip(x, self.moduli))

    def index(self, x) -> int:
        """Position of ``x`` in :meth:`elements` order."""
        i = 0
        for r, m in zip(x, self.moduli):
            i = i * m + r
        return i

    def __str__(self):
        return " x ".join(f"Z/{m}" for m in self.moduli)


@dataclass(frozen=True)
class GroupRingElem:
    """Element of ``Z[G]`` in sparse canonical form.

    ``terms`` is a tuple of ``(group element, coefficient)`` pairs sorted by
    group element with no zero coefficients, so structural equality and
    hashing coincide with equality in the group ring.
    """

    group: FiniteAbelianGroup
    terms: tuple = ()

    @classmethod
    def from_dict(cls, group: FiniteAbelianGroup, coeffs) -> "GroupRingElem":
        acc: dict = {}
        items = coeffs.items() if hasattr(coeffs, "items") else coeffs
        for g, c in items:
            g = group.element(g)
            acc[g] = acc.get(g, 0) + int(c)
        return cls(group, tuple(sorted((g, c) for g, c in acc.items() if c != 0)))

    @classmethod
    def basis(cls, group, g, coeff: int = 1) -> "GroupRingElem":
        return cls.from_dict(group, {group.element(g): coeff})

    @classmethod
    def zero(cls, group) -> "GroupRingElem":
        return cls(group, ())

    @classmethod
    def one(cls, group) -> "GroupRingElem":
        return cls.basis(group, group.identity)

    def coeff(self, g) -> int:
        for h, c in self.terms:
            if h == g:
                return c
        return 0

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_nonnegative(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        acc = dict(self.terms)
        for g, c in other.terms:
            acc[g] = acc.get(g, 0) + c
        return GroupRingElem.from_dict(self.group, acc)

    def __neg__(self) -> "GroupRingElem":
        return GroupRingElem(self.group, tuple((g, -c) for g, c in self.terms))

    def __sub__(self, other: "GroupRingElem") -> "GroupRingElem":
        return self + (-other)

    def __mul__(self, other: "GroupRingElem") -> "GroupRingElem":
        acc: dict = {}
        G = self.group
        for g, a in self.terms:
            for h, b in other.terms:
                gh = G.add(g, h)
                acc[gh] = acc.get(gh, 0) + a * b
        return GroupRingElem.from_dict(G, acc)

    def inverted(self) -> "GroupRingElem":
        """The involution induced by ``g -> g^-1``."""
        G = self.group
        return GroupRingElem.from_dict(G, {G.neg(g): c for g, c in self.terms})

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{list(g)}" for g, c in self.terms)


# ---------------------------------------------------------------------------
# exact integer linear algebra


def bareiss_determinant(M: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def is_unimodular(M: Sequence[Sequence[int]]) -> bool:
    return bareiss_determinant(M) in (1, -1)


def regular_representation(M, group: FiniteAbelianGroup) -> list[list[int]]:
    """Replace each ``Z[G]`` entry by its ``|G| x |G|`` left-multiplication matrix.

    Basis order is :meth:`FiniteAbelianGroup.elements`; column ``g`` of the
    block for ``a`` holds the coefficients of ``a * g``.
    """
    elems = group.elements()
    size = len(elems)
    n = len(M)
    out = [[0] * (n * size) for _ in range(n * size)]
    for i, row in enumerate(M):
        if len(row) != n:
            raise ValueError("matrix is not square")
        for j, a in enumerate(row):
            for col, g in enumerate(elems):
                for h, c in a.terms:
                    out[i * size + group.index(group.add(h, g))][j * size + col] += c
    return out


def integer_matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))]
            for i in range(len(A))]


# ---------------------------------------------------------------------------
# rigs


class Pi0Rig:
    """A rig with decidable equality, optionally carrying an anti-involution.

    Subclasses supply ``zero``, ``one``, ``add``, ``mul`` and membership.
    Rings additionally supply ``neg``.
    """

    name = "rig"
    is_ring = False
    is_commutative = True

    zero = None
    one = None

    def add(self, x, y):
        raise NotImplementedError

    def mul(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise CapabilityError(f"{self.name} has no additive inverses")

    def contains(self, x) -> bool:
        raise NotImplementedError

    def involution(self, x):
        return x

    def sum(self, xs: Iterable):
        acc = self.zero
        for x in xs:
            acc = self.add(acc, x)
        return acc

    def completion(self) -> "Pi0Rig":
        """The group completion ``Gr(R)``; rings are their own completion."""
        if self.is_ring:
            return self
        raise CapabilityError(f"no group completion available for {self.name}")

    def embed(self, x):
        """Image of ``x`` under ``R -> Gr(R)``."""
        return x

    def sample(self, rng, bound: int):
        raise NotImplementedError

    def elements(self, bound: int) -> list:
        """All elements of 'size' at most ``bound`` (finite list)."""
        raise NotImplementedError

    def to_json(self, x):
        return x

    def from_json(self, data):
        return data

    def __repr__(self):
        return self.name


class NaturalNumbers(Pi0Rig):
    name = "N0"
    zero = 0
    one = 1

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and x >= 0

    def completion(self):
        return IntegerRing()

    def sample(self, rng, bound):
        return rng.randint(0, bound)

    def elements(self, bound):
        return list(range(bound + 1))

    def from_json(self, data):
        x = int(data)
        if x < 0:
            raise ValueError(f"{data!r} is not a natural number")
        return x

    def __eq__(self, other):
        return type(other) is NaturalNumbers

    def __hash__(self):
        return hash(self.name)


class IntegerRing(Pi0Rig):
    name = "Z"
    is_ring = True
    zero = 0
    one = 1

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool)

    def sample(self, rng, bound):
        return rng.randint(-bound, bound)

    def elements(self, bound):
        return list(range(-bound, bound + 1))

    def from_json(self, data):
        return int(data)

    def __eq__(self, other):
        return type(other) is IntegerRing

    def __hash__(self):
        return hash(self.name)


class ModularRing(Pi0Rig):
    is_ring = True
    zero = 0
    one = 1

    def __init__(self, k: int):
        if k < 2:
            raise ValueError("modulus must be at least 2")
        self.k = k
        self.name = f"Z/{k}"

    def add(self, x, y):
        return (x + y) % self.k

    def mul(self, x, y):
        return (x * y) % self.k

    def neg(self, x):
        return (-x) % self.k

    def contains(self, x):
        return isinstance(x, int) and 0 <= x < self.k

    def sample(self, rng, bound):
        return rng.randrange(self.k)

    def elements(self, bound):
        return list(range(self.k))

    def from_json(self, data):
        return int(data) % self.k

    def __eq__(self, other):
        return isinstance(other, ModularRing) and other.k == self.k

    def __hash__(self):
        return hash(self.name)


class GroupRig(Pi0Rig):
    """``N0[G]`` (``signed=False``) or ``Z[G]`` (``signed=True``) with ``g -> g^-1``."""

    def __init__(self, group: FiniteAbelianGroup, signed: bool = True):
        self.group = group
        self.signed = signed
        self.is_ring = signed
        base = "Z" if signed else "N0"
        self.name = f"{base}[{','.join(map(str, group.moduli))}]"
        self.zero = GroupRingElem.zero(group)
        self.one = GroupRingElem.one(group)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        if not self.signed:
            return super().neg(x)
        return -x

    def contains(self, x):
        return (
            isinstance(x, GroupRingElem)
            and x.group == self.group
            and (self.signed or x.is_nonnegative())
        )

    def involution(self, x):
        return x.inverted()

    def completion(self):
        return self if self.signed else GroupRig(self.group, signed=True)

    def basis(self, g, coeff=1):
        return GroupRingElem.basis(self.group, g, coeff)

    def sample(self, rng, bound):
        lo = -bound if self.signed else 0
        return GroupRingElem.from_dict(
            self.group, {g: rng.randint(lo, bound) for g in self.group.elements()})

    def elements(self, bound):
        lo = -bound if self.signed else 0
        elems = self.group.elements()
        return [GroupRingElem.from_dict(self.group, dict(zip(elems, cs)))
                for cs in itertools.product(range(lo, bound + 1), repeat=len(elems))]

    def to_json(self, x):
        return [[list(g), c] for g, c in x.terms]

    def from_json(self, data):
        x = GroupRingElem.from_dict(self.group, [(g, c) for g, c in data])
        if not self.contains(x):
            raise ValueError(f"{data!r} is not an element of {self.name}")
        return x

    def __eq__(self, other):
        return (isinstance(other, GroupRig) and other.group == self.group
                and other.signed == self.signed)

    def __hash__(self):
        return hash(self.name)


class FiniteRing(Pi0Rig):
    """A finite ring given by explicit operation tables.

    ``elements`` are hashable labels; ``add``/``mul`` are dicts keyed by
    ``(x, y)``.  An optional ``involution`` dict is the anti-involution.
    """

    is_ring = True

    def __init__(self, name, elements, add_table, mul_table, zero, one,
                 involution=None, commutative=None):
        self.name = name
        self._elements = list(elements)
        self._add = dict(add_table)
        self._mul = dict(mul_table)
        self.zero = zero
        self.one = one
        self._inv = dict(involution) if involution else None
        self._neg = {}
        for x in self._elements:
            for y in self._elements:
                if self._add[(x, y)] == zero:
                    self._neg[x] = y
                    break
            else:
                raise ValueError(f"{x!r} has no additive inverse in {name}")
        if commutative is None:
            commutative = all(self._mul[(x, y)] == self._mul[(y, x)]
                              for x in self._elements for y in self._elements)
        self.is_commutative = commutative

    @classmethod
    def from_operations(cls, name, elements, add, mul, zero, one, involution=None):
        elements = list(elements)
        pairs = [(x, y) for x in elements for y in elements]
        return cls(name, elements,
                   {p: add(*p) for p in pairs}, {p: mul(*p) for p in pairs},
                   zero, one,
                   {x: involution(x) for x in elements} if involution else None)

    def add(self, x, y):
        return self._add[(x, y)]

    def mul(self, x, y):
        return self._mul[(x, y)]

    def neg(self, x):
        return self._neg[x]

    def contains(self, x):
        return x in self._neg

    def involution(self, x):
        return self._inv[x] if self._inv else x

    def sample(self, rng, bound):
        return rng.choice(self._elements)

    def elements(self, bound=None):
        return list(self._elements)

    def __eq__(self, other):
        return isinstance(other, FiniteRing) and other.name == self.name

    def __hash__(self):
        return hash(self.name)


def m2f2() -> FiniteRing:
    """``M2(F2)`` with elements ``(a, b, c, d)`` for ``[[a, b], [c, d]]`` and transpose."""

    def add(x, y):
        return tuple((a + b) % 2 for a, b in zip(x, y))

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 2, (a * f + b * h) % 2,
                (c * e + d * g) % 2, (c * f + d * h) % 2)

    def transpose(x):
        a, b, c, d = x
        return (a, c, b, d)

    elements = list(itertools.product((0, 1), repeat=4))
    return _M2F2.from_operations("M2F2", elements, add, mul,
                                 (0, 0, 0, 0), (1, 0, 0, 1), transpose)


class _M2F2(FiniteRing):
    def to_json(self, x):
        return [[x[0], x[1]], [x[2], x[3]]]

    def from_json(self, data):
        (a, b), (c, d) = data
        return tuple(int(v) % 2 for v in (a, b, c, d))


# ---------------------------------------------------------------------------
# group completion and invertibility


def gr_canonicalize(pair, rig: Pi0Rig):
    """Canonical representative in ``Gr(rig)`` of the formal difference ``x - y``."""
    x, y = pair
    ring = rig.completion()
    if isinstance(rig, NaturalNumbers):
        return int(x) - int(y)
    return ring.add(rig.embed(x), ring.neg(rig.embed(y)))


def is_invertible_matrix(M, rig: Pi0Rig) -> bool:
    """Whether ``M`` (entries in ``Gr(rig)``) is invertible over ``Gr(rig)``."""
    ring = rig.completion()
    n = len(M)
    if n == 0:
        return True
    if isinstance(ring, IntegerRing):
        return is_unimodular(M)
    if isinstance(ring, ModularRing):
        return math.gcd(bareiss_determinant(M) % ring.k, ring.k) == 1
    if isinstance(ring, GroupRig):
        # an inverse Z-linear map of a G-equivariant map is G-equivariant
        return is_unimodular(regular_representation(M, ring.group))
    if isinstance(ring, FiniteRing):
        # finite matrix rings are Dedekind-finite: trivial kernel of x -> Mx suffices
        for x in itertools.product(ring.elements(), repeat=n):
            if all(v == ring.zero for v in x):
                continue
            if all(ring.sum(ring.mul(M[i][j], x[j]) for j in range(n)) == ring.zero
                   for i in range(n)):
                return False
        return True
    raise CapabilityError(f"invertibility is not decidable for rig kind {ring.name}")


def matrix_mul(rig: Pi0Rig, A, B):
    n = len(A)
    return [[rig.sum(rig.mul(A[i][k], B[k][j]) for k in range(n)) for j in range(n)]
            for i in range(n)]


def identity_matrix(rig: Pi0Rig, n: int):
    return [[rig.one if i == j else rig.zero for j in range(n)] for i in range(n)]


def has_bounded_inverse(M, rig: Pi0Rig, bound: int) -> bool:
    """Brute-force oracle: a two-sided inverse with entries in ``rig.elements(bound)``.

    Every candidate column is tried against ``M x = e_j``; the surviving
    columns are assembled and checked as two-sided inverses.
    """
    ring = rig.completion()
    n = len(M)
    E = identity_matrix(ring, n)
    cands = ring.elements(bound)
    columns = []
    for j in range(n):
        sols = [x for x in itertools.product(cands, repeat=n)
                if all(ring.sum(ring.mul(M[i][k], x[k]) for k in range(n)) == E[i][j]
                       for i in range(n))]
        if not sols:
            return False
        columns.append(sols)
    for cols in itertools.product(*columns):
        X = [[cols[j][i] for j in range(n)] for i in range(n)]
        if matrix_mul(ring, X, M) == E:
            return True
    return False


def random_nat_gl(rng, n: int, max_entry: int = 2, steps: int = 3) -> list[list[int]]:
    """Random element of ``GL_n(N0)``: a short product of permutation and elementary matrices."""
    M = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(rng.randint(0, steps)):
        if n == 1:
            break
        if rng.random() < 0.4:
            i, j = rng.sample(range(n), 2)
            M[i], M[j] = M[j], M[i]
        else:
            i, j = rng.sample(range(n), 2)
            cand = [row[:] for row in M]
            cand[i] = [a + b for a, b in zip(cand[i], cand[j])]
            if max(max(r) for r in cand) <= max_entry:
                M = cand
    return M
