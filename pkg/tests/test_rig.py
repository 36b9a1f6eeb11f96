import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bimon.rig import (
    CapabilityError, FiniteAbelianGroup, GroupRig, GroupRingElem, IntegerRing, ModularRing,
    NaturalNumbers, bareiss_determinant, gr_canonicalize, has_bounded_inverse, integer_matmul,
    is_invertible_matrix, is_unimodular, m2f2, regular_representation,
)

Z2 = FiniteAbelianGroup.cyclic(2)
Z4 = FiniteAbelianGroup.cyclic(4)
e, g = (0,), (1,)


def gre(G, coeffs):
    return GroupRingElem.from_dict(G, coeffs)


def cofactor_det(M):
    # independent oracle: Laplace expansion along the first row
    if not M:
        return 1
    return sum((-1) ** j * M[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in M[1:]])
               for j in range(len(M)))


def test_group_elements_and_inverses():
    G = FiniteAbelianGroup((2, 2))
    assert G.order == 4
    assert G.elements() == [(0, 0), (0, 1), (1, 0), (1, 1)]
    for x in G.elements():
        assert G.add(x, G.neg(x)) == G.identity
        assert all(0 <= r < m for r, m in zip(x, G.moduli))


def test_group_ring_sparse_form():
    x = gre(Z2, {e: 2, g: 0})
    assert x.terms == ((e, 2),)
    assert (x - x).is_zero()
    assert gre(Z2, {g: 1}) * gre(Z2, {g: 1}) == GroupRingElem.one(Z2)


@pytest.mark.parametrize("pair, rig, expected", [
    ((3, 1), NaturalNumbers(), 2),
    ((5, 5), NaturalNumbers(), 0),
    ((7, 7), IntegerRing(), 0),
])
def test_gr_canonicalize_examples(pair, rig, expected):
    assert gr_canonicalize(pair, rig) == expected


def test_gr_canonicalize_group_ring():
    N = GroupRig(Z2, signed=False)
    x = gre(Z2, {e: 2, g: 1})
    y = gre(Z2, {g: 1})
    out = gr_canonicalize((x, y), N)
    # sparse-map subtraction oracle
    expected = {h: x.coeff(h) - y.coeff(h) for h in Z2.elements()}
    assert out == gre(Z2, expected) == gre(Z2, {e: 2})
    assert gr_canonicalize((x, x), N).is_zero()


@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))
def test_gr_canonicalize_shift_invariant(x, y, z):
    N = NaturalNumbers()
    assert gr_canonicalize((x + z, y + z), N) == gr_canonicalize((x, y), N)
    # idempotent: a canonical integer is its own representative
    c = gr_canonicalize((x, y), N)
    assert gr_canonicalize((c, 0), IntegerRing()) == c


def test_regular_representation_examples():
    assert regular_representation([[gre(Z2, {g: 1})]], Z2) == [[0, 1], [1, 0]]
    assert regular_representation([[gre(Z2, {e: 1})]], Z2) == [[1, 0], [0, 1]]
    assert regular_representation([[gre(Z2, {e: 1, g: 1})]], Z2) == [[1, 1], [1, 1]]


@pytest.mark.parametrize("G", [Z2, Z4])
def test_regular_representation_is_multiplicative(G):
    rng = random.Random(3)
    R = GroupRig(G)

    def mat():
        return [[R.sample(rng, 2) for _ in range(2)] for _ in range(2)]

    def mul(A, B):
        return [[A[i][0] * B[0][j] + A[i][1] * B[1][j] for j in range(2)] for i in range(2)]

    for _ in range(100):
        A, B = mat(), mat()
        assert regular_representation(mul(A, B), G) == integer_matmul(
            regular_representation(A, G), regular_representation(B, G))


@pytest.mark.parametrize("M, expected", [
    ([[1, 1], [0, 1]], True), ([[2]], False), ([[0, 1], [1, 0]], True), ([[1, 1], [1, 1]], False),
])
def test_is_unimodular_examples(M, expected):
    assert is_unimodular(M) is expected
    assert abs(cofactor_det(M)) == 1 if expected else abs(cofactor_det(M)) != 1


@given(st.lists(st.lists(st.integers(-9, 9), min_size=4, max_size=4), min_size=4, max_size=4))
def test_bareiss_matches_cofactor(M):
    assert bareiss_determinant(M) == cofactor_det(M)


def test_is_invertible_examples():
    assert is_invertible_matrix([[1, 1], [0, 1]], IntegerRing())
    assert is_invertible_matrix([[gre(Z2, {g: 1})]], GroupRig(Z2))
    assert not is_invertible_matrix([[1, 1], [1, 1]], IntegerRing())


def test_invertible_agrees_with_bounded_search_small_cases():
    R = GroupRig(Z2)
    coeffs = range(-2, 3)
    for a, b in itertools.product(coeffs, repeat=2):
        M = [[gre(Z2, {e: a, g: b})]]
        assert is_invertible_matrix(M, R) == has_bounded_inverse(M, R, 2)
    rng = random.Random(11)
    for _ in range(30):
        M = [[gre(Z2, {e: rng.randint(-1, 1), g: rng.randint(-1, 1)}) for _ in range(2)]
             for _ in range(2)]
        # adjugate entries have coefficients in [-2, 2] when the entries lie in [-1, 1]
        assert is_invertible_matrix(M, R) == has_bounded_inverse(M, R, 2)


def test_modular_and_finite_rings():
    Z6 = ModularRing(6)
    assert is_invertible_matrix([[5]], Z6)
    assert not is_invertible_matrix([[2]], Z6)
    R = m2f2()
    one, zero = R.one, R.zero
    nil = (0, 1, 0, 0)
    assert is_invertible_matrix([[one, nil], [zero, one]], R)
    assert not is_invertible_matrix([[nil]], R)
    for M in ([[one, nil], [zero, one]], [[nil]], [[R.involution(nil)]]):
        assert is_invertible_matrix(M, R) == has_bounded_inverse(M, R, None)


class Bad(NaturalNumbers):
    name = "bad"

    def completion(self):
        raise CapabilityError("no completion for bad")


def test_unsupported_rig_is_capability_error():
    with pytest.raises(CapabilityError):
        is_invertible_matrix([[1]], Bad())


RIGS = [NaturalNumbers(), IntegerRing(), ModularRing(5), GroupRig(Z2), GroupRig(Z4, signed=False),
        m2f2()]


@pytest.mark.parametrize("R", RIGS, ids=lambda r: r.name)
def test_rig_axioms_on_samples(R):
    rng = random.Random(5)
    for _ in range(200):
        x, y, z = (R.sample(rng, 3) for _ in range(3))
        assert R.add(x, R.zero) == x and R.mul(x, R.one) == x == R.mul(R.one, x)
        assert R.add(x, y) == R.add(y, x)
        assert R.add(R.add(x, y), z) == R.add(x, R.add(y, z))
        assert R.mul(R.mul(x, y), z) == R.mul(x, R.mul(y, z))
        assert R.mul(x, R.add(y, z)) == R.add(R.mul(x, y), R.mul(x, z))
        assert R.mul(R.add(x, y), z) == R.add(R.mul(x, z), R.mul(y, z))
        assert R.involution(R.involution(x)) == x
        assert R.involution(R.mul(x, y)) == R.mul(R.involution(y), R.involution(x))
