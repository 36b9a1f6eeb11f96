"""Permutations in zero-based one-line notation.

``p[i]`` is the image of ``i``.  Products and sums use the conventions of
the category of finite sets: ``p + q`` acts blockwise and ``p * q`` acts on
``n*m`` points ordered first-factor-major, point ``(i, j)`` at ``i*m + j``.
With that order left distributivity is the identity on the nose.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(len(p)))


def compose(q: Perm, p: Perm) -> Perm:
    """``q o p``."""
    return tuple(q[i] for i in p)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def oplus(p: Perm, q: Perm) -> Perm:
    n = len(p)
    return p + tuple(n + j for j in q)


def otimes(p: Perm, q: Perm) -> Perm:
    m = len(q)
    return tuple(p[i] * m + q[j] for i in range(len(p)) for j in range(m))


@lru_cache(maxsize=4096)
def c_oplus(n: int, m: int) -> Perm:
    return tuple(m + i for i in range(n)) + tuple(range(m))


@lru_cache(maxsize=4096)
def c_otimes(n: int, m: int) -> Perm:
    """Grid transpose ``(i, j) -> (j, i)`` from ``n*m`` to ``m*n``."""
    return tuple(j * n + i for i in range(n) for j in range(m))


@lru_cache(maxsize=4096)
def d_r(a: int, b: int, c: int) -> Perm:
    """``A*B + A*C -> A*(B+C)`` on point sets of sizes ``a, b, c``."""
    first = tuple(i * (b + c) + j for i in range(a) for j in range(b))
    second = tuple(i * (b + c) + b + k for i in range(a) for k in range(c))
    return first + second


def all_perms(n: int) -> list[Perm]:
    return list(itertools.permutations(range(n)))


def random_perm(rng, n: int) -> Perm:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def permute_list(items, perm: Perm):
    """Reorder so that ``items[i]`` lands at position ``perm[i]``."""
    out = [None] * len(items)
    for i, j in enumerate(perm):
        out[j] = items[i]
    return out


def lehmer_code(p: Perm) -> list[int]:
    return [sum(1 for j in p[i + 1:] if j < x) for i, x in enumerate(p)]
