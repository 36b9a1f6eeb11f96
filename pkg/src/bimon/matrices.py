"""Matrix categories ``M_n(R)`` and ``GL_n(R)`` over a strict bimonoidal category.

Products use ``(A.B)_ij = A_i0 B_0j + ... + A_i(n-1) B_(n-1)j``.  The
associator ``A.(B.C) -> (A.B).C`` is entrywise ``sigma o d_r^-1`` where
``d_r`` is the right-nested iterated distributivity map and ``sigma``
reorders summands from ``k``-major to ``l``-major.  Left distributivity is
the identity, so no further correction is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .core import CapabilityError, CheckReport, Law, Mor, SampleSpec, run_laws
from .rig import bareiss_determinant, is_invertible_matrix, IntegerRing

__all__ = [
    "MatrixObj", "MatrixMor", "unit_matrix", "mat_mul_obj", "mat_mul_mor", "transpose",
    "zeta_matrix", "mu_matrix", "alpha_assoc", "alpha_inverse", "iter_d_r",
    "block_perm_morphism", "adjacent_swap", "swap_word_morphism", "gl_member",
    "gl_diagnostics", "pi0_matrix", "compose_mor", "identity_mor", "inverse_mor",
    "sample_matrix_obj", "sample_matrix_mor", "sample_gl_matrix", "check_matrix_lemmas",
    "matrix_lemma_laws", "matrix_obj_to_json", "matrix_obj_from_json",
    "matrix_mor_to_json", "matrix_mor_from_json",
]


@dataclass(frozen=True)
class MatrixObj:
    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def of(cls, rows) -> "MatrixObj":
        rows = tuple(tuple(r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        return cls(rows)

    def to_json(self, cat):
        return matrix_obj_to_json(cat, self)


@dataclass(frozen=True)
class MatrixMor:
    dom: MatrixObj
    cod: MatrixObj
    entries: tuple

    @property
    def n(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    @classmethod
    def of(cls, rows) -> "MatrixMor":
        rows = tuple(tuple(r) for r in rows)
        dom = MatrixObj(tuple(tuple(f.dom for f in r) for r in rows))
        cod = MatrixObj(tuple(tuple(f.cod for f in r) for r in rows))
        return cls(dom, cod, rows)

    def to_json(self, cat):
        return matrix_mor_to_json(cat, self)


def _grid(n, fn):
    return tuple(tuple(fn(i, j) for j in range(n)) for i in range(n))


def _same_size(*xs):
    if len({x.n for x in xs}) != 1:
        raise ValueError(f"matrix size mismatch: {[x.n for x in xs]}")
    return xs[0].n


def unit_matrix(cat, n: int) -> MatrixObj:
    return MatrixObj(_grid(n, lambda i, j: cat.one if i == j else cat.zero))


def mat_mul_obj(cat, A: MatrixObj, B: MatrixObj) -> MatrixObj:
    n = _same_size(A, B)
    return MatrixObj(_grid(n, lambda i, j: cat.oplus_all(
        cat.otimes(A[i, k], B[k, j]) for k in range(n))))


def mat_mul_mor(cat, f: MatrixMor, g: MatrixMor) -> MatrixMor:
    n = _same_size(f, g)
    return MatrixMor.of(_grid(n, lambda i, j: cat.oplus_mor_all(
        cat.otimes_mor(f[i, k], g[k, j]) for k in range(n))))


def identity_mor(cat, A: MatrixObj) -> MatrixMor:
    return MatrixMor(A, A, _grid(A.n, lambda i, j: cat.identity(A[i, j])))


def compose_mor(cat, g: MatrixMor, f: MatrixMor) -> MatrixMor:
    """Entrywise ``g o f``."""
    n = _same_size(f, g)
    return MatrixMor(f.dom, g.cod, _grid(n, lambda i, j: cat.compose(g[i, j], f[i, j])))


def inverse_mor(cat, f: MatrixMor) -> MatrixMor:
    return MatrixMor(f.cod, f.dom, _grid(f.n, lambda i, j: cat.inverse(f[i, j])))


def transpose(x):
    if isinstance(x, MatrixMor):
        return MatrixMor(transpose(x.dom), transpose(x.cod), _grid(x.n, lambda i, j: x[j, i]))
    return MatrixObj(_grid(x.n, lambda i, j: x[j, i]))


def zeta_matrix(cat, x):
    """Entrywise anti-involution (no transpose)."""
    if isinstance(x, MatrixMor):
        return MatrixMor(zeta_matrix(cat, x.dom), zeta_matrix(cat, x.cod),
                         _grid(x.n, lambda i, j: cat.zeta_mor(x[i, j])))
    return MatrixObj(_grid(x.n, lambda i, j: cat.zeta(x[i, j])))


def mu_matrix(cat, A: MatrixObj, B: MatrixObj) -> MatrixMor:
    """``(zeta(A.B))^t -> zeta(B)^t . zeta(A)^t`` with entries ``+_k mu(A_jk, B_ki)``."""
    n = _same_size(A, B)
    return MatrixMor.of(_grid(n, lambda i, j: cat.oplus_mor_all(
        cat.mu(A[j, k], B[k, i]) for k in range(n))))


# ---------------------------------------------------------------------------
# summand permutations and the associator


def adjacent_swap(cat, layout, p: int) -> Mor:
    """Swap summands ``p`` and ``p+1`` of ``layout[0] + ... + layout[-1]``."""
    if not 0 <= p < len(layout) - 1:
        raise ValueError(f"no adjacent pair at position {p}")
    return cat.oplus_mor_all([cat.identity(cat.oplus_all(layout[:p])),
                              cat.c_oplus(layout[p], layout[p + 1]),
                              cat.identity(cat.oplus_all(layout[p + 2:]))])


def swap_word_morphism(cat, layout, word) -> Mor:
    """Composite of adjacent swaps at the positions of ``word``, applied left to right."""
    layout = list(layout)
    f = cat.identity(cat.oplus_all(layout))
    for p in word:
        f = cat.compose(adjacent_swap(cat, layout, p), f)
        layout[p], layout[p + 1] = layout[p + 1], layout[p]
    return f


def bubble_word(perm) -> list[int]:
    """Adjacent-swap positions moving ``perm[t]`` into slot ``t`` for ``t = 0, 1, ...``.

    The word is reduced and its length is the inversion count (the sum of
    the Lehmer code of ``perm``).
    """
    cur = list(range(len(perm)))
    word = []
    for t, x in enumerate(perm):
        p = cur.index(x)
        while p > t:
            word.append(p - 1)
            cur[p - 1], cur[p] = cur[p], cur[p - 1]
            p -= 1
    return word


def block_perm_morphism(cat, layout, perm) -> Mor:
    """``+_t layout[t] -> +_t layout[perm[t]]`` built from adjacent ``c_oplus`` blocks."""
    perm = tuple(perm)
    if len(perm) != len(layout) or sorted(perm) != list(range(len(perm))):
        raise ValueError("permutation does not match the summand layout")
    return swap_word_morphism(cat, layout, bubble_word(perm))


def iter_d_r(cat, A, xs) -> Mor:
    """``A*X_1 + ... + A*X_m -> A*(X_1 + ... + X_m)``, right nested."""
    xs = list(xs)
    if len(xs) <= 1:
        return cat.identity(cat.oplus_all(cat.otimes(A, X) for X in xs))
    rest = cat.oplus_all(xs[1:])
    return cat.compose(cat.d_r(A, xs[0], rest),
                       cat.oplus_mor(cat.identity(cat.otimes(A, xs[0])), iter_d_r(cat, A, xs[1:])))


def alpha_assoc(cat, A: MatrixObj, B: MatrixObj, C: MatrixObj) -> MatrixMor:
    """The associator ``A.(B.C) -> (A.B).C``."""
    n = _same_size(A, B, C)

    def entry(i, j):
        spread = cat.oplus_mor_all(
            cat.inverse(iter_d_r(cat, A[i, k], [cat.otimes(B[k, l], C[l, j]) for l in range(n)]))
            for k in range(n))
        layout = [cat.otimes(A[i, k], cat.otimes(B[k, l], C[l, j]))
                  for k in range(n) for l in range(n)]
        sigma = block_perm_morphism(cat, layout, [k * n + l for l in range(n) for k in range(n)])
        return cat.compose(sigma, spread)

    return MatrixMor.of(_grid(n, entry))


def alpha_inverse(cat, A, B, C) -> MatrixMor:
    return inverse_mor(cat, alpha_assoc(cat, A, B, C))


# ---------------------------------------------------------------------------
# GL membership


def pi0_matrix(cat, A: MatrixObj):
    if not cat.has_components:
        raise CapabilityError(f"{cat.key} declares no path-component labels")
    return [[cat.component(A[i, j]) for j in range(A.n)] for i in range(A.n)]


def gl_member(cat, A: MatrixObj) -> bool:
    """Whether the component matrix of ``A`` is invertible over the group completion."""
    rig = cat.pi0_rig
    M = [[rig.embed(x) for x in row] for row in pi0_matrix(cat, A)]
    return is_invertible_matrix(M, rig)


def gl_diagnostics(cat, A: MatrixObj) -> dict:
    """Membership together with the component matrix and, over Z, its determinant."""
    rig = cat.pi0_rig
    M = pi0_matrix(cat, A)
    out: dict[str, Any] = {"member": gl_member(cat, A),
                           "pi0": [[rig.to_json(x) for x in row] for row in M],
                           "rig": rig.name}
    if isinstance(rig.completion(), IntegerRing):
        out["determinant"] = bareiss_determinant([[rig.embed(x) for x in row] for row in M])
    return out


# ---------------------------------------------------------------------------
# sampling


def sample_matrix_obj(cat, rng, n: int, max_size: int) -> MatrixObj:
    return MatrixObj.of(cat.sample_matrix(rng, n, max_size))


def sample_matrix_mor(cat, rng, A: MatrixObj) -> MatrixMor:
    return MatrixMor.of(_grid(A.n, lambda i, j: cat.sample_mor_from(rng, A[i, j])))


def sample_gl_matrix(cat, rng, n: int) -> MatrixObj:
    return MatrixObj.of(cat.random_gl_matrix(rng, n))


# ---------------------------------------------------------------------------
# the matrix lemmas


def matrix_lemma_laws(cat, spec: SampleSpec, n: int | None = None,
                      pentagon_samples: int = 50) -> list[Law]:
    C = cat
    n = n or spec.max_arity_n
    s = spec.max_object_size

    def objs(k):
        return lambda rng: tuple(sample_matrix_obj(C, rng, n, s) for _ in range(k))

    def mors(k):
        def draw(rng):
            return tuple(sample_matrix_mor(C, rng, sample_matrix_obj(C, rng, n, s))
                         for _ in range(k))
        return draw

    def composable_pairs(rng):
        out = []
        for _ in range(2):
            f = sample_matrix_mor(C, rng, sample_matrix_obj(C, rng, n, s))
            out += [f, sample_matrix_mor(C, rng, f.cod)]
        return tuple(out)

    def mm(*xs):
        out = xs[0]
        for x in xs[1:]:
            out = mat_mul_obj(C, out, x)
        return out

    def pentagon(A, B, D, E):
        lhs = compose_mor(C, alpha_assoc(C, mat_mul_obj(C, A, B), D, E),
                          alpha_assoc(C, A, B, mat_mul_obj(C, D, E)))
        rhs = compose_mor(C, mat_mul_mor(C, alpha_assoc(C, A, B, D), identity_mor(C, E)),
                          compose_mor(C, alpha_assoc(C, A, mat_mul_obj(C, B, D), E),
                                      mat_mul_mor(C, identity_mor(C, A), alpha_assoc(C, B, D, E))))
        return lhs, rhs

    laws = [
        Law("matrix.unit", "E.A = A = A.E",
            lambda A: ((mat_mul_obj(C, unit_matrix(C, n), A), mat_mul_obj(C, A, unit_matrix(C, n))),
                       (A, A)), objs(1)),
        Law("matrix.bifunctor", "(f'f).(g'g) = (f'.g')(f.g)",
            lambda f, f2, g, g2: (mat_mul_mor(C, compose_mor(C, f2, f), compose_mor(C, g2, g)),
                                  compose_mor(C, mat_mul_mor(C, f2, g2), mat_mul_mor(C, f, g))),
            composable_pairs),
        Law("matrix.alpha.typing", "alpha: A.(B.C) -> (A.B).C",
            lambda A, B, D: ((alpha_assoc(C, A, B, D).dom, alpha_assoc(C, A, B, D).cod),
                             (mm(A, mm(B, D)), mm(A, B, D))), objs(3)),
        Law("matrix.alpha.invertible", "alpha^-1 o alpha = id",
            lambda A, B, D: (compose_mor(C, alpha_inverse(C, A, B, D), alpha_assoc(C, A, B, D)),
                             identity_mor(C, mm(A, mm(B, D)))), objs(3)),
        Law("matrix.pentagon",
            "alpha(AB,C,D) o alpha(A,B,CD) = (alpha(A,B,C).id) o alpha(A,BC,D) o (id.alpha(B,C,D))",
            pentagon, objs(4), count=min(pentagon_samples, spec.sample_count)),
    ]
    if C.has_anti_involution:
        Z = lambda x: zeta_matrix(C, x)  # noqa: E731
        T = transpose

        def naturality(f, g):
            lhs = compose_mor(C, mu_matrix(C, f.cod, g.cod), T(Z(mat_mul_mor(C, f, g))))
            rhs = compose_mor(C, mat_mul_mor(C, T(Z(g)), T(Z(f))), mu_matrix(C, f.dom, g.dom))
            return lhs, rhs

        def compatibility(A, B, D):
            za, zb, zd = T(Z(A)), T(Z(B)), T(Z(D))
            lhs = compose_mor(C, mat_mul_mor(C, identity_mor(C, zd), mu_matrix(C, A, B)),
                              compose_mor(C, mu_matrix(C, mm(A, B), D),
                                          T(Z(alpha_assoc(C, A, B, D)))))
            rhs = compose_mor(C, alpha_inverse(C, zd, zb, za),
                              compose_mor(C, mat_mul_mor(C, mu_matrix(C, B, D), identity_mor(C, za)),
                                          mu_matrix(C, A, mm(B, D))))
            return lhs, rhs

        laws += [
            Law("matrix.mu.typing", "mu: (zeta(A.B))^t -> zeta(B)^t . zeta(A)^t",
                lambda A, B: ((mu_matrix(C, A, B).dom, mu_matrix(C, A, B).cod),
                              (T(Z(mm(A, B))), mm(T(Z(B)), T(Z(A))))), objs(2)),
            Law("matrix.mu.natural",
                "mu(C,D) o (zeta(f.g))^t = (zeta(g)^t . zeta(f)^t) o mu(A,B)", naturality, mors(2)),
            Law("matrix.mu.compatibility",
                "(id . mu(A,B)) o mu(AB,C) o zeta(alpha)^t = alpha^-1 o (mu(B,C) . id) o mu(A,BC)",
                compatibility, objs(3)),
        ]
    return laws


def check_matrix_lemmas(cat, spec: SampleSpec | None = None, n: int | None = None,
                        pentagon_samples: int = 50) -> CheckReport:
    spec = spec or SampleSpec()
    return run_laws(cat, matrix_lemma_laws(cat, spec, n, pentagon_samples), spec, "matrix")


# ---------------------------------------------------------------------------
# JSON


def matrix_obj_to_json(cat, A: MatrixObj):
    return [[cat.obj_to_json(x) for x in row] for row in A.entries]


def matrix_obj_from_json(cat, data) -> MatrixObj:
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise ValueError("a matrix literal is a JSON list of rows")
    return MatrixObj.of([[cat.obj_from_json(x) for x in row] for row in data])


def matrix_mor_to_json(cat, f: MatrixMor):
    return [[cat.mor_to_json(x) for x in row] for row in f.entries]


def matrix_mor_from_json(cat, data) -> MatrixMor:
    return MatrixMor.of([[cat.mor_from_json(x) for x in row] for row in data])
