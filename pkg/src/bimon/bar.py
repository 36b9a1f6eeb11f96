"""Simplices of the bar construction ``B_q GL_n(R)`` and the involution ``tau``.

A ``q``-simplex stores matrices ``A[i, j]`` for ``0 <= i < j <= q`` and
isomorphisms ``phi[i, j, k]: A[i, j] . A[j, k] -> A[i, k]`` for ``i < j < k``.
``A[i, i]`` is the unit matrix and every ``phi`` with a repeated index is an
identity.  Coherence asks, for ``i < j < k < l``::

    phi[i,k,l] o (phi[i,j,k] . id) o alpha = phi[i,j,l] o (id . phi[j,k,l])

as maps out of ``A[i,j] . (A[j,k] . A[k,l])``.

``tau`` reverses the vertex order and applies the transposed anti-involution::

    tau(s)[i, j]    = zeta(A[q-j, q-i])^t
    tau(s)[i, j, k] = zeta(phi[q-k, q-j, q-i])^t o mu(A[q-k,q-j], A[q-j,q-i])^-1
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .core import CapabilityError, CheckReport, Law, Mor, SampleSpec, run_laws
from .matrices import (
    MatrixMor, MatrixObj, alpha_assoc, compose_mor, gl_member, identity_mor, inverse_mor,
    mat_mul_mor, mat_mul_obj, matrix_mor_from_json, matrix_mor_to_json, matrix_obj_from_json,
    matrix_obj_to_json, mu_matrix, transpose, unit_matrix, zeta_matrix,
)

__all__ = [
    "BarSimplex", "DeltaMap", "face_map", "degeneracy_map", "r_map", "reflected_index",
    "validate_simplex", "apply_monotone", "face", "degeneracy", "tau", "block_sum",
    "empty_simplex", "build_from_chain", "random_chain", "random_simplex", "transport",
    "check_tau_simplicial", "check_simplicial_identities", "compare_classical_involution",
    "project_pi0", "simplex_to_json", "simplex_from_json", "diagonal",
]


@dataclass(frozen=True)
class BarSimplex:
    q: int
    n: int
    A: dict = field(hash=False)
    phi: dict = field(hash=False)

    def obj(self, cat, i, j) -> MatrixObj:
        if i == j:
            return unit_matrix(cat, self.n)
        return self.A[(i, j)]

    def iso(self, cat, i, j, k) -> MatrixMor:
        if i == j or j == k:
            # degenerate: E.A = A = A.E strictly
            return identity_mor(cat, self.obj(cat, i, k))
        return self.phi[(i, j, k)]

    def objects_only(self):
        return (self.q, self.n, self.A)

    def to_json(self, cat):
        return simplex_to_json(cat, self)


def diagonal(s: BarSimplex) -> list[MatrixObj]:
    return [s.A[(i, i + 1)] for i in range(s.q)]


# ---------------------------------------------------------------------------
# the simplex category


@dataclass(frozen=True)
class DeltaMap:
    """A monotone map ``[len(values)-1] -> [target]`` given by its values."""

    values: tuple
    target: int

    def __post_init__(self):
        v = tuple(int(x) for x in self.values)
        object.__setattr__(self, "values", v)
        if not v:
            raise ValueError("a map out of [q] has q+1 values")
        if any(a > b for a, b in zip(v, v[1:])):
            raise ValueError(f"{v} is not monotone")
        if v[0] < 0 or v[-1] > self.target:
            raise ValueError(f"{v} does not land in [{self.target}]")

    @property
    def source(self) -> int:
        return len(self.values) - 1

    def __call__(self, x):
        return self.values[x]

    def then(self, g: "DeltaMap") -> "DeltaMap":
        """``g o self``."""
        if g.source != self.target:
            raise ValueError("maps are not composable")
        return DeltaMap(tuple(g(x) for x in self.values), g.target)


def face_map(q: int, i: int) -> DeltaMap:
    """``delta_i: [q-1] -> [q]``, the injection skipping ``i``."""
    if not 0 <= i <= q:
        raise ValueError(f"face index {i} out of range for degree {q}")
    return DeltaMap(tuple(x if x < i else x + 1 for x in range(q)), q)


def degeneracy_map(q: int, i: int) -> DeltaMap:
    """``sigma_i: [q+1] -> [q]``, the surjection hitting ``i`` twice."""
    if not 0 <= i <= q:
        raise ValueError(f"degeneracy index {i} out of range for degree {q}")
    return DeltaMap(tuple(x if x <= i else x - 1 for x in range(q + 2)), q)


def r_map(f: DeltaMap) -> DeltaMap:
    """Orientation reversal ``r(f)(i) = p - f(q - i)`` for ``f: [q] -> [p]``."""
    q, p = f.source, f.target
    return DeltaMap(tuple(p - f(q - i) for i in range(q + 1)), p)


def reflected_index(kind: str, q: int, i: int) -> int:
    """Index ``j`` with ``r(delta_i) = delta_j`` (or likewise for ``sigma``), ``q`` the simplex degree.

    For a face of a ``q``-simplex ``delta_i: [q-1] -> [q]``; for a degeneracy
    ``sigma_i: [q+1] -> [q]``.
    """
    if kind == "face":
        g = r_map(face_map(q, i))
        return next(j for j in range(q + 1) if face_map(q, j) == g)
    g = r_map(degeneracy_map(q, i))
    return next(j for j in range(q + 1) if degeneracy_map(q, j) == g)


# ---------------------------------------------------------------------------
# simplicial operators


def apply_monotone(cat, s: BarSimplex, f: DeltaMap) -> BarSimplex:
    """Precompose ``s`` with ``f: [p] -> [q]``, returning a ``p``-simplex."""
    if f.target != s.q:
        raise ValueError(f"map lands in [{f.target}], simplex has degree {s.q}")
    p = f.source
    A = {(a, b): s.obj(cat, f(a), f(b)) for a, b in itertools.combinations(range(p + 1), 2)}
    phi = {(a, b, c): s.iso(cat, f(a), f(b), f(c))
           for a, b, c in itertools.combinations(range(p + 1), 3)}
    return BarSimplex(p, s.n, A, phi)


def face(cat, s: BarSimplex, i: int) -> BarSimplex:
    if s.q == 0:
        raise ValueError("a 0-simplex has no faces")
    return apply_monotone(cat, s, face_map(s.q, i))


def degeneracy(cat, s: BarSimplex, i: int) -> BarSimplex:
    return apply_monotone(cat, s, degeneracy_map(s.q, i))


# ---------------------------------------------------------------------------
# validation


def simplex_laws(cat, s: BarSimplex) -> list[Law]:
    q = s.q

    def coherence(i, j, k, l):
        A = lambda a, b: s.obj(cat, a, b)  # noqa: E731
        lhs = compose_mor(cat, s.iso(cat, i, k, l),
                          compose_mor(cat, mat_mul_mor(cat, s.iso(cat, i, j, k),
                                                       identity_mor(cat, A(k, l))),
                                      alpha_assoc(cat, A(i, j), A(j, k), A(k, l))))
        rhs = compose_mor(cat, s.iso(cat, i, j, l),
                          mat_mul_mor(cat, identity_mor(cat, A(i, j)), s.iso(cat, j, k, l)))
        return lhs, rhs

    def phi_typing(i, j, k):
        f = s.phi[(i, j, k)]
        back = compose_mor(cat, inverse_mor(cat, f), f)
        return ((f.dom, f.cod, back),
                (mat_mul_obj(cat, s.obj(cat, i, j), s.obj(cat, j, k)), s.obj(cat, i, k),
                 identity_mor(cat, f.dom)))

    pairs = list(itertools.combinations(range(q + 1), 2))
    return [
        Law("simplex.shape", "A[i,j] for i<j, phi[i,j,k] for i<j<k, all n x n",
            lambda: ((sorted(s.A), sorted(s.phi), {M.n for M in s.A.values()} <= {s.n}),
                     (pairs, list(itertools.combinations(range(q + 1), 3)), True)),
            inputs=lambda: [()]),
        Law("simplex.gl", "[A[i,j]] invertible over Gr(pi0)",
            lambda i, j: (gl_member(cat, s.A[(i, j)]), True), inputs=lambda: pairs),
        Law("simplex.phi", "phi[i,j,k]: A[i,j].A[j,k] -> A[i,k] invertible",
            phi_typing, inputs=lambda: itertools.combinations(range(q + 1), 3)),
        Law("simplex.coherence",
            "phi[i,k,l] o (phi[i,j,k].id) o alpha = phi[i,j,l] o (id.phi[j,k,l])",
            coherence, inputs=lambda: itertools.combinations(range(q + 1), 4)),
    ]


def validate_simplex(cat, s: BarSimplex, spec: SampleSpec | None = None) -> CheckReport:
    spec = spec or SampleSpec(failure_cap=1)
    return run_laws(cat, simplex_laws(cat, s), spec, "simplex")


# ---------------------------------------------------------------------------
# tau, block sums and chains


def tau(cat, s: BarSimplex) -> BarSimplex:
    if not cat.has_anti_involution:
        raise CapabilityError(f"{cat.key} carries no anti-involution (zeta, mu)")
    q = s.q
    tz = lambda x: transpose(zeta_matrix(cat, x))  # noqa: E731
    A = {(i, j): tz(s.A[(q - j, q - i)]) for i, j in itertools.combinations(range(q + 1), 2)}
    phi = {}
    for i, j, k in itertools.combinations(range(q + 1), 3):
        X, Y = s.A[(q - k, q - j)], s.A[(q - j, q - i)]
        phi[(i, j, k)] = compose_mor(cat, tz(s.phi[(q - k, q - j, q - i)]),
                                     inverse_mor(cat, mu_matrix(cat, X, Y)))
    return BarSimplex(q, s.n, A, phi)


def _block_diag_obj(cat, M: MatrixObj, N: MatrixObj) -> MatrixObj:
    n, m = M.n, N.n

    def entry(a, b):
        if a < n and b < n:
            return M[a, b]
        if a >= n and b >= n:
            return N[a - n, b - n]
        return cat.zero
    return MatrixObj(tuple(tuple(entry(a, b) for b in range(n + m)) for a in range(n + m)))


def _block_diag_mor(cat, f: MatrixMor, g: MatrixMor) -> MatrixMor:
    n, m = f.n, g.n
    z = cat.identity(cat.zero)

    def entry(a, b):
        if a < n and b < n:
            return f[a, b]
        if a >= n and b >= n:
            return g[a - n, b - n]
        return z
    return MatrixMor.of([[entry(a, b) for b in range(n + m)] for a in range(n + m)])


def block_sum(cat, s: BarSimplex, t: BarSimplex) -> BarSimplex:
    if s.q != t.q:
        raise ValueError(f"degree mismatch: {s.q} vs {t.q}")
    A = {key: _block_diag_obj(cat, s.A[key], t.A[key]) for key in s.A}
    phi = {key: _block_diag_mor(cat, s.phi[key], t.phi[key]) for key in s.phi}
    return BarSimplex(s.q, s.n + t.n, A, phi)


def empty_simplex(q: int) -> BarSimplex:
    """The ``n = 0`` simplex, unit for block sums."""
    A = {key: MatrixObj(()) for key in itertools.combinations(range(q + 1), 2)}
    phi = {key: MatrixMor(MatrixObj(()), MatrixObj(()), ())
           for key in itertools.combinations(range(q + 1), 3)}
    return BarSimplex(q, 0, A, phi)


def build_from_chain(cat, chain, require_gl: bool = True) -> BarSimplex:
    """Simplex with ``A[i, i+1] = chain[i]`` and right-nested products above the diagonal.

    The construction only needs matrix products; ``require_gl=False`` lets
    display code build simplices from chains outside ``GL_n``.
    """
    chain = [M if isinstance(M, MatrixObj) else MatrixObj.of(M) for M in chain]
    if not chain:
        raise ValueError("empty chain; use a 0-simplex directly")
    n = chain[0].n
    for idx, M in enumerate(chain):
        if M.n != n:
            raise ValueError("chain matrices differ in size")
        if require_gl and not gl_member(cat, M):
            raise ValueError(f"chain matrix {idx} is not in GL_{n}")
    q = len(chain)
    A = {}
    for i in range(q - 1, -1, -1):
        A[(i, i + 1)] = chain[i]
        for j in range(i + 2, q + 1):
            A[(i, j)] = mat_mul_obj(cat, chain[i], A[(i + 1, j)])

    memo = {}

    def rho(i, j, k):
        # A[i,j].A[j,k] -> A[i,k]
        if j == i + 1:
            return identity_mor(cat, A[(i, k)])
        if (i, j, k) not in memo:
            Bi = chain[i]
            a_inv = inverse_mor(cat, alpha_assoc(cat, Bi, A[(i + 1, j)], A[(j, k)]))
            memo[(i, j, k)] = compose_mor(
                cat, mat_mul_mor(cat, identity_mor(cat, Bi), rho(i + 1, j, k)), a_inv)
        return memo[(i, j, k)]

    phi = {key: rho(*key) for key in itertools.combinations(range(q + 1), 3)}
    return BarSimplex(q, n, A, phi)


def random_chain(cat, rng, q: int, n: int) -> list[MatrixObj]:
    return [MatrixObj.of(cat.random_gl_matrix(rng, n)) for _ in range(q)]


def transport(cat, s: BarSimplex, h: dict) -> BarSimplex:
    """Move ``s`` along isomorphisms ``h[i, j]: A[i, j] -> A'[i, j]``."""
    A = {key: h[key].cod for key in s.A}
    hh = lambda i, j: h[(i, j)]  # noqa: E731
    phi = {}
    for (i, j, k), f in s.phi.items():
        back = inverse_mor(cat, mat_mul_mor(cat, hh(i, j), hh(j, k)))
        phi[(i, j, k)] = compose_mor(cat, hh(i, k), compose_mor(cat, f, back))
    return BarSimplex(s.q, s.n, A, phi)


def random_simplex(cat, rng, q: int, n: int, twist: bool = True) -> BarSimplex:
    """A chain-built simplex, optionally transported along random entrywise isomorphisms."""
    if q == 0:
        return BarSimplex(0, n, {}, {})
    s = build_from_chain(cat, random_chain(cat, rng, q, n))
    if not twist:
        return s
    h = {key: MatrixMor.of([[cat.sample_mor_from(rng, M[a, b]) for b in range(n)]
                            for a in range(n)]) for key, M in s.A.items()}
    return transport(cat, s, h)


# ---------------------------------------------------------------------------
# corpus checks


def _corpus_sampler(cat, spec: SampleSpec, max_q: int = 3):
    def draw(rng):
        q = rng.randint(1, max_q)
        n = rng.randint(1, spec.max_arity_n)
        return (random_simplex(cat, rng, q, n),)
    return draw


def check_simplicial_identities(cat, spec: SampleSpec | None = None, max_q: int = 3) -> CheckReport:
    spec = spec or SampleSpec()
    C = cat
    d = lambda s, i: face(C, s, i)  # noqa: E731
    sd = lambda s, i: degeneracy(C, s, i)  # noqa: E731

    def all_pairs(s, pred, hi_i, hi_j):
        return [(i, j) for i in range(hi_i + 1) for j in range(hi_j + 1) if pred(i, j)]

    def family(pairs_of, lhs, rhs):
        def sides(s):
            pairs = pairs_of(s)
            return [lhs(s, i, j) for i, j in pairs], [rhs(s, i, j) for i, j in pairs]
        return sides

    draw = _corpus_sampler(cat, spec, max_q)
    laws = [
        Law("simplicial.dd", "d_i d_j = d_{j-1} d_i for i < j",
            family(lambda s: all_pairs(s, lambda i, j: i < j, s.q - 1, s.q) if s.q >= 2 else [],
                   lambda s, i, j: d(d(s, j), i), lambda s, i, j: d(d(s, i), j - 1)), draw),
        Law("simplicial.ds.low", "d_i s_j = s_{j-1} d_i for i < j",
            family(lambda s: all_pairs(s, lambda i, j: i < j, s.q + 1, s.q),
                   lambda s, i, j: d(sd(s, j), i), lambda s, i, j: sd(d(s, i), j - 1)), draw),
        Law("simplicial.ds.id", "d_j s_j = id = d_{j+1} s_j",
            family(lambda s: [(j, j) for j in range(s.q + 1)],
                   lambda s, i, j: (d(sd(s, j), j), d(sd(s, j), j + 1)), lambda s, i, j: (s, s)),
            draw),
        Law("simplicial.ds.high", "d_i s_j = s_j d_{i-1} for i > j+1",
            family(lambda s: all_pairs(s, lambda i, j: i > j + 1, s.q + 1, s.q),
                   lambda s, i, j: d(sd(s, j), i), lambda s, i, j: sd(d(s, i - 1), j)), draw),
        Law("simplicial.ss", "s_i s_j = s_{j+1} s_i for i <= j",
            family(lambda s: all_pairs(s, lambda i, j: i <= j, s.q, s.q),
                   lambda s, i, j: sd(sd(s, j), i), lambda s, i, j: sd(sd(s, i), j + 1)), draw),
    ]
    return run_laws(cat, laws, spec, "simplicial")


def check_tau_simplicial(cat, spec: SampleSpec | None = None, max_q: int = 3,
                         block_pairs: int = 100) -> CheckReport:
    """``tau`` against faces, degeneracies, validation, squaring and block sums.

    Face and degeneracy indices are reflected through ``r_map``; for a
    ``q``-simplex this sends ``d_i`` to ``d_{q-i}`` and ``s_i`` to ``s_{q-i}``.
    """
    if not cat.has_anti_involution:
        raise CapabilityError(f"{cat.key} carries no anti-involution (zeta, mu)")
    spec = spec or SampleSpec()
    C = cat
    draw = _corpus_sampler(cat, spec, max_q)

    def faces(s):
        lhs = [tau(C, face(C, s, i)) for i in range(s.q + 1)]
        rhs = [face(C, tau(C, s), reflected_index("face", s.q, i)) for i in range(s.q + 1)]
        return lhs, rhs

    def degeneracies(s):
        lhs = [tau(C, degeneracy(C, s, i)) for i in range(s.q + 1)]
        rhs = [degeneracy(C, tau(C, s), reflected_index("degeneracy", s.q, i))
               for i in range(s.q + 1)]
        return lhs, rhs

    def valid(s):
        return (validate_simplex(C, s).passed, validate_simplex(C, tau(C, s)).passed), (True, True)

    def pair(rng):
        q = rng.randint(1, max_q)
        return (random_simplex(C, rng, q, rng.randint(1, spec.max_arity_n)),
                random_simplex(C, rng, q, rng.randint(1, spec.max_arity_n)))

    laws = [
        Law("tau.valid", "s valid and tau(s) valid", valid, draw),
        Law("tau.face", "tau o d_i = d_{r(i)} o tau", faces, draw),
        Law("tau.degeneracy", "tau o s_i = s_{r(i)} o tau", degeneracies, draw),
        Law("tau.square.objects", "tau(tau(s)) = s on A[i,j]",
            lambda s: (tau(C, tau(C, s)).objects_only(), s.objects_only()), draw),
        Law("tau.block_sum", "tau(s + t) = tau(s) + tau(t)",
            lambda s, t: (tau(C, block_sum(C, s, t)), block_sum(C, tau(C, s), tau(C, t))),
            pair, count=min(block_pairs, spec.sample_count)),
    ]
    if C.bipermutative:
        laws.append(Law("tau.square", "tau(tau(s)) = s", lambda s: (tau(C, tau(C, s)), s), draw))
    return run_laws(cat, laws, spec, "tau")


def compare_classical_involution(cat, chain, spec: SampleSpec | None = None) -> CheckReport:
    """``tau`` on a chain simplex has diagonal ``zeta(B_{q-1})^t, ..., zeta(B_0)^t``."""
    if not cat.is_discrete:
        raise CapabilityError(f"{cat.key} is not a discrete ring instance")
    spec = spec or SampleSpec()
    chain = [M if isinstance(M, MatrixObj) else MatrixObj.of(M) for M in chain]

    def sides():
        got = diagonal(tau(cat, build_from_chain(cat, chain)))
        expected = [_classical(cat, M) for M in reversed(chain)]
        return got, expected

    law = Law("classical.agreement", "diag tau(B_0..B_{q-1}) = (zeta(B_{q-1})^t, ..., zeta(B_0)^t)",
              sides, inputs=lambda: [()])
    return run_laws(cat, [law], spec, "classical")


def _classical(cat, M: MatrixObj) -> MatrixObj:
    # independent evaluation: entry (i, j) of zeta(M)^t is the rig involution of M[j][i]
    inv = cat.rig.involution
    return MatrixObj(tuple(tuple(inv(M.entries[j][i]) for j in range(M.n)) for i in range(M.n)))


def project_pi0(cat, s: BarSimplex):
    """Entrywise component labels; returns ``(pi0 category, simplex over it)``."""
    P = cat.pi0_category()
    lab = lambda M: MatrixObj(tuple(tuple(cat.component(x) for x in row)  # noqa: E731
                                    for row in M.entries))
    A = {key: lab(M) for key, M in s.A.items()}
    phi = {}
    for (i, j, k), f in s.phi.items():
        dom, cod = lab(f.dom), lab(f.cod)
        phi[(i, j, k)] = MatrixMor(dom, cod, tuple(
            tuple(Mor(dom[a, b], cod[a, b], None) for b in range(s.n)) for a in range(s.n)))
    return P, BarSimplex(s.q, s.n, A, phi)


# ---------------------------------------------------------------------------
# JSON


def simplex_to_json(cat, s: BarSimplex) -> dict:
    return {
        "degree": s.q,
        "size": s.n,
        "category": cat.key,
        "objects": {f"{i},{j}": matrix_obj_to_json(cat, M) for (i, j), M in sorted(s.A.items())},
        "phi": {f"{i},{j},{k}": matrix_mor_to_json(cat, f)
                for (i, j, k), f in sorted(s.phi.items())},
    }


def simplex_from_json(cat, data) -> BarSimplex:
    try:
        q, n = int(data["degree"]), int(data["size"])
        if data.get("category", cat.key) != cat.key:
            raise ValueError(f"simplex is over {data['category']}, not {cat.key}")
        A = {tuple(int(x) for x in key.split(",")): matrix_obj_from_json(cat, grid)
             for key, grid in data["objects"].items()}
        phi = {tuple(int(x) for x in key.split(",")): matrix_mor_from_json(cat, grid)
               for key, grid in data["phi"].items()}
    except (KeyError, TypeError, AttributeError) as exc:
        raise ValueError(f"malformed simplex document: {exc}") from None
    if n == 0:
        A = {key: MatrixObj(()) for key in A}
    return BarSimplex(q, n, A, phi)
