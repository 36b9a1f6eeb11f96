import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bimon.core import CapabilityError, Mor, SampleSpec, with_overrides
from bimon.instances import (
    bundled_keys, conjugation_action, group_ring_inversion_action, make_instance,
    signed_perm_sampler,
)
from bimon.involution import (
    GroupAction, LaxBimonoidalFunctor, check_anti_involution, check_fixed_closure,
    check_group_action, fixed_category, mu_symmetry_report, trivial_action, zeta_matrix,
)
from bimon.matrices import MatrixObj, unit_matrix
from bimon.rig import FiniteAbelianGroup, GroupRingElem

from conftest import failing_laws


def test_finite_sets_identity_zeta(E, spec):
    assert E.zeta(3) == 3 and E.mu(2, 3) == E.c_otimes(2, 3)
    assert check_anti_involution(E, spec).passed


def test_wedge_inverts_labels(spec):
    W = make_instance("wedge:3")
    assert W.zeta(W.obj(2, (1,))) == W.obj(2, (2,))
    assert check_anti_involution(W, spec).passed


def test_wedge_mu_identity_mutation_detected():
    W = make_instance("wedge:2")
    # mu(A,B) := id on zeta(AB); typing breaks whenever A*B differs from B*A as a point order
    M = with_overrides(W, key="wedge:2:mu-id", mu=lambda A, B: W.identity(W.zeta(W.otimes(A, B))))
    report = check_anti_involution(M, SampleSpec(sample_count=200))
    bad = failing_laws(report)
    assert bad
    assert {"mu.associativity", "mu.natural", "mu.distributivity.left_sum"} & set(bad)
    assert report.failing()[0].witness is not None


def test_missing_anti_involution_is_capability_error():
    with pytest.raises(CapabilityError):
        check_anti_involution(make_instance("bichar:3:1"))


def test_zeta_matrix_examples():
    W = make_instance("wedge:2")
    E2 = unit_matrix(W, 2)
    assert zeta_matrix(W, E2) == E2
    g = (1,)
    A = MatrixObj.of([[W.obj(1, g)]])
    assert zeta_matrix(W, A) == MatrixObj.of([[W.obj(1, W.group.neg(g))]])
    Z = make_instance("discrete:Z")
    M = MatrixObj.of([[2, -1], [0, 5]])
    assert zeta_matrix(Z, M) == M


@pytest.mark.parametrize("key", bundled_keys())
def test_zeta_squares_to_identity(key):
    C = make_instance(key)
    rng = SampleSpec().rng("zeta2", key)
    for _ in range(100):
        (A,) = C.sample_objects(rng, 1, 3)
        f = C.sample_mor_from(rng, A)
        assert C.zeta(C.zeta(A)) == A
        assert C.zeta_mor(C.zeta_mor(f)) == f


def test_mu_symmetry_report_per_instance(spec):
    assert mu_symmetry_report(make_instance("monomial:4"), spec).passed
    assert mu_symmetry_report(make_instance("discrete:M2F2"), spec).passed


def test_conjugation_action_passes(spec):
    assert check_group_action(conjugation_action(4), spec=spec).passed


def test_trivial_action_on_finite_sets(E, spec):
    act = trivial_action(FiniteAbelianGroup.cyclic(3), E)
    assert check_group_action(act, spec=spec).passed
    fixed = fixed_category(act)
    assert fixed.enumerate_objects(3) == E.enumerate_objects(3)
    assert fixed.morphisms_from(3) == E.morphisms_from(3)


def test_action_not_preserving_otimes_detected(spec):
    V = make_instance("monomial:4")
    G = FiniteAbelianGroup.cyclic(2)

    def bad(f):
        # negate only the first exponent: a functor on each hom-set but not monoidal
        p, e = f.data
        return Mor(f.dom, f.cod, (p, ((-e[0]) % 4,) + e[1:] if e else e))

    def phi(g):
        if g == G.identity:
            return LaxBimonoidalFunctor("id", V, V, lambda A: A, lambda f: f)
        return LaxBimonoidalFunctor("bad", V, V, lambda A: A, bad)

    report = check_group_action(GroupAction("bad", G, V, phi), spec=spec)
    assert not report.passed
    assert any("otimes" in law or "oplus" in law or "composition" in law
               for law in failing_laws(report))


def test_conjugation_fixed_category_is_signed_permutations():
    V = make_instance("monomial:4")
    act = conjugation_action(4, V)
    fixed = fixed_category(act, mor_sampler=signed_perm_sampler(V))
    for n in range(3):
        got = {f.data for f in fixed.morphisms_from(n)}
        expected = {f.data for f in V.morphisms_from(n) if set(f.data[1]) <= {0, 2}}
        assert got == expected
        assert len(got) == 2 ** n * (1 if n < 2 else 2)
    assert check_fixed_closure(fixed, SampleSpec(sample_count=100)).passed


def test_group_ring_fixed_subring(spec):
    R = make_instance("discrete:Z[3]")
    act = group_ring_inversion_action(R)
    assert check_group_action(act, spec=spec).passed
    fixed = fixed_category(act)
    G = R.rig.group
    for x in fixed.enumerate_objects(1):
        # the inversion-fixed subring of Z[Z/3] is spanned by 1 and g + g^2
        assert x.coeff((1,)) == x.coeff((2,))
    assert GroupRingElem.from_dict(G, {(1,): 1, (2,): 1}) in fixed.enumerate_objects(1)
    assert check_fixed_closure(fixed, spec).passed


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 10 ** 6))
def test_mu_natural_on_wreath_property(n, m, seed):
    C = make_instance("wreath:3")
    rng = SampleSpec(seed=seed).rng("prop")
    f, g = C.sample_mor_from(rng, n), C.sample_mor_from(rng, m)
    lhs = C.compose(C.mu(f.cod, g.cod), C.zeta_mor(C.otimes_mor(f, g)))
    rhs = C.compose(C.otimes_mor(C.zeta_mor(g), C.zeta_mor(f)), C.mu(f.dom, g.dom))
    assert lhs == rhs
