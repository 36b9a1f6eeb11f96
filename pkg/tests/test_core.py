import pytest

from bimon import perms
from bimon.core import (
    CapabilityError, CompositionError, Mor, SampleSpec, check_bimonoidal_laws, component_label,
    enumerate_sample, union_find_components, with_overrides,
)
from bimon.instances import bundled_keys, make_instance
from bimon.rig import GroupRingElem

from conftest import failing_laws


def test_enumerate_finite_sets_size_two(E):
    objs, mors = enumerate_sample(E, SampleSpec(max_object_size=2))
    assert objs == [0, 1, 2]
    assert [f.data for f in mors] == [(), (0,), (0, 1), (1, 0)]


def test_enumerate_is_deterministic():
    C = make_instance("wreath:3")
    spec = SampleSpec(max_object_size=3, sample_count=20, seed=9)
    assert enumerate_sample(C, spec) == enumerate_sample(C, spec)


def test_wreath_hom_count_oracle():
    C = make_instance("wreath:2")
    _, mors = enumerate_sample(C, SampleSpec(max_object_size=2))
    on_two = [f for f in mors if f.dom == 2]
    # |G|^n * n!
    assert len(on_two) == 2 ** 2 * 2
    assert len(set(on_two)) == 8


def test_sample_spec_validation_and_streams():
    with pytest.raises(ValueError):
        SampleSpec(sample_count=0)
    a, b = SampleSpec(seed=1).rng("x"), SampleSpec(seed=1).rng("x")
    assert [a.random() for _ in range(5)] == [b.random() for _ in range(5)]
    assert SampleSpec(seed=1).rng("x").random() != SampleSpec(seed=2).rng("x").random()


def test_composition_typing(E):
    f = Mor(2, 2, (1, 0))
    with pytest.raises(CompositionError):
        E.compose(f, Mor(3, 3, (0, 1, 2)))


@pytest.mark.parametrize("key", ["finite-sets", "discrete:Z", "wedge:2,2", "table:thin-graded-boolean"])
def test_bimonoidal_laws_pass(key, spec):
    report = check_bimonoidal_laws(make_instance(key), spec)
    assert report.passed, report.summary()
    for r in report.results:
        assert r.passed == (r.witness is None)


def test_discrete_integers_all_identities(spec):
    C = make_instance("discrete:Z")
    assert check_bimonoidal_laws(C, spec).passed
    _, mors = enumerate_sample(C, SampleSpec(max_object_size=2))
    assert all(C.is_identity(f) for f in mors)


def mutate_c_oplus_on_ones(E):
    orig = E.c_oplus

    def c(A, B):
        if (A, B) == (1, 1):
            return E.identity(2)
        return orig(A, B)
    return with_overrides(E, key="finite-sets:c-mutated", c_oplus=c)


def test_c_oplus_mutation_detected(E):
    M = mutate_c_oplus_on_ones(E)
    report = check_bimonoidal_laws(M, SampleSpec(max_object_size=3, sample_count=300))
    assert not report.passed
    bad = failing_laws(report)
    # naturality at (1, 1) only involves Sigma_1, so the hexagon is what sees the edit
    assert "c_oplus.hexagon" in bad
    w = report.failing()[0].witness
    assert set(w) == {"inputs", "lhs", "rhs"} and w["lhs"] != w["rhs"]


def test_failure_cap_limits_work(E):
    M = mutate_c_oplus_on_ones(E)
    spec = SampleSpec(max_object_size=1, sample_count=300, failure_cap=2)
    r = check_bimonoidal_laws(M, spec).result("c_oplus.hexagon")
    assert not r.passed and r.failures == 2 and r.samples < 300


def test_thread_count_does_not_change_reports(monkeypatch, spec):
    C = make_instance("monomial:4")
    monkeypatch.setenv("BIMON_THREADS", "1")
    one = check_bimonoidal_laws(C, spec).to_dict()
    monkeypatch.setenv("BIMON_THREADS", "4")
    assert check_bimonoidal_laws(C, spec).to_dict() == one


def test_component_labels():
    E = make_instance("finite-sets")
    assert [component_label(E, n) for n in range(4)] == [0, 1, 2, 3]
    W = make_instance("wedge:2")
    x = component_label(W, W.obj(3, (1,)))
    assert x == GroupRingElem.basis(W.pi0_rig.group, (1,), 3)
    with pytest.raises(CapabilityError):
        component_label(with_overrides(E, has_components=False), 1)


def test_wreath_components_by_union_find():
    C = make_instance("wreath:2,2")
    objs, mors = enumerate_sample(C, SampleSpec(max_object_size=3))
    classes = union_find_components(objs, mors)
    assert sorted(sorted(c) for c in classes) == [[0], [1], [2], [3]]
    assert all(len({C.component(A) for A in cls}) == 1 for cls in classes)


@pytest.mark.parametrize("key", bundled_keys())
def test_component_homomorphism(key, small_spec):
    C = make_instance(key)
    R = C.pi0_rig
    rng = small_spec.rng("components", key)
    for _ in range(100):
        A, B = C.sample_objects(rng, 2, 3)
        assert C.component(C.oplus(A, B)) == R.add(C.component(A), C.component(B))
        A, B = C.sample_objects(rng, 2, 3, homogeneous=False)
        assert C.component(C.otimes(A, B)) == R.mul(C.component(A), C.component(B))


def test_c_otimes_grid_transpose_oracle(E):
    f = E.c_otimes(2, 2) if hasattr(E, "c_otimes") else E.beta(2, 2)
    # brute-force grid relabelling: point (i, j) of 2x2 goes to (j, i)
    oracle = [None] * 4
    for i in range(2):
        for j in range(2):
            oracle[i * 2 + j] = j * 2 + i
    assert list(f.data) == oracle == [0, 2, 1, 3]
    assert f.data == perms.compose(perms.identity(4), (0, 2, 1, 3))
