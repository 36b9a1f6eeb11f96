"""End-to-end acceptance criteria.

Each test records one ``criterion N: PASS|FAIL`` line (collected into the
terminal summary by conftest) and then asserts.  Sample counts, seeds and
runtime limits are pinned below.
"""

import itertools
import json
import random
import time

import pytest

from bimon.bar import (
    build_from_chain, check_tau_simplicial, compare_classical_involution, face, project_pi0,
    random_chain, random_simplex, tau, validate_simplex, BarSimplex,
)
from bimon.braided import (
    check_braided_laws, check_eq_e, check_yang_baxter, induced_anti_involution,
)
from bimon.cli import run_command
from bimon.core import Mor, SampleSpec, check_bimonoidal_laws, with_overrides
from bimon.instances import (
    bundled_keys, conjugation_action, functor_F, make_instance, signed_perm_sampler,
)
from bimon.involution import (
    check_anti_involution, check_antiinv_morphism, check_functor, check_group_action,
    fixed_category,
)
from bimon.matrices import MatrixMor, MatrixObj, check_matrix_lemmas, compose_mor
from bimon.rig import (
    FiniteAbelianGroup, GroupRig, GroupRingElem, IntegerRing, has_bounded_inverse,
    is_invertible_matrix,
)

from conftest import ACCEPTANCE_LINES

SEED = 42
AXIOM_SPEC = SampleSpec(max_object_size=3, max_arity_n=2, sample_count=500, seed=SEED)
AXIOM_SECONDS = 120
TAU_SPEC = SampleSpec(max_object_size=3, max_arity_n=2, sample_count=200, seed=SEED)
TAU_SECONDS = 180
TAU_MAX_Q = 3
BLOCK_PAIRS = 100
MATRIX_SPEC = SampleSpec(max_object_size=3, max_arity_n=2, sample_count=200, seed=SEED)
PENTAGON_SAMPLES = 50
CHAINS = 100
PI0_SIMPLICES = 100
YB_SAMPLES = 500
GL_SAMPLES = 200


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def _summ(reports):
    bad = [(r.instance, r.suite, law) for r in reports for law in (x.law for x in r.failing())]
    return bad


@pytest.mark.slow
def test_criterion_1_axiom_suites():
    keys = bundled_keys()
    start = time.perf_counter()
    reports = []
    for key in keys:
        C = make_instance(key)
        reports += [check_bimonoidal_laws(C, AXIOM_SPEC), check_anti_involution(C, AXIOM_SPEC)]
    elapsed = time.perf_counter() - start
    bad = _summ(reports)
    ok = not bad and len(keys) == 15 and elapsed < AXIOM_SECONDS
    record(1, ok, f"{len(keys)} instances, {AXIOM_SPEC.sample_count} samples, "
                  f"{len(bad)} failing laws, {elapsed:.1f}s (limit {AXIOM_SECONDS}s)")
    assert ok, bad


@pytest.mark.slow
def test_criterion_2_matrix_lemmas():
    reports = [check_matrix_lemmas(make_instance(k), MATRIX_SPEC, n=2,
                                   pentagon_samples=PENTAGON_SAMPLES) for k in bundled_keys()]
    bad = _summ(reports)
    laws = {law.law for r in reports for law in r.results}
    pent = {law.samples for r in reports for law in r.results if law.law == "matrix.pentagon"}
    ok = (not bad and {"matrix.mu.natural", "matrix.mu.compatibility", "matrix.pentagon"} <= laws
          and pent == {PENTAGON_SAMPLES})
    record(2, ok, f"{len(reports)} instances, 2x2, {MATRIX_SPEC.sample_count} samples, "
                  f"pentagon {PENTAGON_SAMPLES}, {len(bad)} failing laws")
    assert ok, bad


def _literal_index_holds(C, s):
    # tau o d_i = d_{q-1-i} o tau, read literally; out-of-range indices count as failure
    for i in range(s.q + 1):
        j = s.q - 1 - i
        if j < 0 or tau(C, face(C, s, i)) != face(C, tau(C, s), j):
            return False
    return True


@pytest.mark.slow
def test_criterion_3_tau_suite():
    start = time.perf_counter()
    reports = []
    for key in bundled_keys():
        reports.append(check_tau_simplicial(make_instance(key), TAU_SPEC, TAU_MAX_Q,
                                            block_pairs=BLOCK_PAIRS))
    elapsed = time.perf_counter() - start
    bad = _summ(reports)
    full_square = {r.instance for r in reports if any(x.law == "tau.square" for x in r.results)}
    expected_square = {k for k in bundled_keys() if make_instance(k).bipermutative}

    # the literal index q-1-i never works: it fails on every corpus simplex
    E = make_instance("finite-sets")
    rng = random.Random(SEED)
    corpus = [random_simplex(E, rng, rng.randint(1, TAU_MAX_Q), rng.randint(1, 2))
              for _ in range(50)]
    literal = sum(_literal_index_holds(E, s) for s in corpus)

    ok = not bad and full_square == expected_square and elapsed < TAU_SECONDS and literal == 0
    record(3, ok, f"{len(reports)} instances, {TAU_SPEC.sample_count} simplices (q<={TAU_MAX_Q}, "
                  f"n<=2), faces/degeneracies reflected as i -> q-i, tau^2 on "
                  f"{len(full_square)} bipermutative instances, {len(bad)} failing laws, "
                  f"{elapsed:.1f}s (limit {TAU_SECONDS}s)")
    # reported as its own line: the literal reading is false, and the test asserts exactly that
    record("3, literal reading tau o d_i = d_(q-1-i) o tau", literal > 0,
           f"holds on {literal}/{len(corpus)} simplices; the index is off by one, "
           f"the evaluated reflection d_(q-i) is the one checked above")
    assert ok, bad


def test_criterion_4_classical_agreement():
    results = {}
    for key in ("discrete:Z", "discrete:M2F2"):
        C = make_instance(key)
        rng = random.Random(f"classical:{key}")
        passed = 0
        for _ in range(CHAINS):
            chain = random_chain(C, rng, rng.randint(1, 3), rng.randint(1, 2))
            passed += compare_classical_involution(C, chain).passed
        results[key] = passed
    # M2F2's involution is transposition of the 2x2 entry, not the identity
    R = make_instance("discrete:M2F2").rig
    nil = (0, 1, 0, 0)
    nontrivial = R.involution(nil) != nil
    ok = all(v == CHAINS for v in results.values()) and nontrivial
    record(4, ok, ", ".join(f"{k}: {v}/{CHAINS}" for k, v in results.items()))
    assert ok


def test_criterion_5_pi0_naturality():
    counts, labels_ok = {}, True
    for key in ("finite-sets", "wedge:2"):
        C = make_instance(key)
        rng = random.Random(f"pi0:{key}")
        good = 0
        for _ in range(PI0_SIMPLICES):
            s = random_simplex(C, rng, rng.randint(1, 3), rng.randint(1, 2))
            P, p = project_pi0(C, s)
            _, p2 = project_pi0(C, tau(C, s))
            good += tau(P, p) == p2
            if key == "wedge:2":
                labels_ok &= all(P.rig.contains(x) for M in p.A.values()
                                 for row in M.entries for x in row)
        counts[key] = good
    W = make_instance("wedge:2")
    rig_name = W.pi0_rig.name
    ok = all(v == PI0_SIMPLICES for v in counts.values()) and labels_ok and rig_name == "N0[2]"
    record(5, ok, ", ".join(f"{k}: {v}/{PI0_SIMPLICES}" for k, v in counts.items())
           + f", wedge labels in {rig_name}")
    assert ok


def _yb_grid_equations(E):
    b, I = E.beta, E.identity
    s2 = [(0, 1), (1, 0)]
    count = agree = 0
    for f, g, h in itertools.product(s2, repeat=3):
        dec = E.otimes_mor(E.otimes_mor(Mor(2, 2, f), Mor(2, 2, g)), Mor(2, 2, h))
        lhs = E.compose_all(E.otimes_mor(I(2), b(2, 2)), b(4, 2), dec)
        rhs = E.compose_all(E.otimes_mor(b(2, 2), I(2)), b(2, 4), dec)
        for a, bb, c in itertools.product(range(2), repeat=3):
            point = (a * 2 + bb) * 2 + c
            oracle = (h[c] * 2 + g[bb]) * 2 + f[a]
            count += 1
            agree += lhs.data[point] == rhs.data[point] == oracle
    return count, agree


def test_criterion_6_braided():
    E = make_instance("finite-sets")
    yb = check_yang_baxter(E, SampleSpec(max_object_size=4, sample_count=YB_SAMPLES, seed=SEED),
                           exhaustive_size=2)
    count, agree = _yb_grid_equations(E)
    spec = SampleSpec(max_object_size=3, sample_count=200, seed=SEED)
    cats = [E] + [make_instance(f"bichar:{k}:1") for k in (2, 3, 4)]
    reports = [yb]
    for C in cats:
        reports += [check_eq_e(C, spec), check_braided_laws(C, spec),
                    check_anti_involution(induced_anti_involution(C, spec), spec)]
    bad = _summ(reports)
    exhaustive = next(r for r in yb.results if r.law == "yang_baxter.exhaustive")
    ok = not bad and count == agree == 64 and exhaustive.samples == 27
    record(6, ok, f"Yang-Baxter {exhaustive.samples} triples exhaustive + {YB_SAMPLES} sampled, "
                  f"{agree}/{count} grid equations, braided/eq-e/induced on {len(cats)} "
                  f"instances, {len(bad)} failing laws")
    assert ok, bad


def _gl_cases():
    Z = IntegerRing()
    G = FiniteAbelianGroup.cyclic(2)
    R = GroupRig(G, signed=True)

    def gre(a, b):
        return GroupRingElem.from_dict(G, {(0,): a, (1,): b})

    ring_elems = [gre(a, b) for a in range(3) for b in range(3)]
    rng = random.Random(f"gl:{SEED}")
    cases = [("Z", [[x]], Z, 3) for x in range(4)]
    cases += [("Z[Z/2]", [[x]], R, 2) for x in ring_elems]
    for _ in range(GL_SAMPLES):
        cases.append(("Z", [[rng.randint(0, 3) for _ in range(2)] for _ in range(2)], Z, 3))
    for _ in range(GL_SAMPLES):
        cases.append(("Z[Z/2]", [[gre(rng.randint(0, 2), rng.randint(0, 2)) for _ in range(2)]
                                 for _ in range(2)], R, 2))
    return cases


@pytest.mark.slow
def test_criterion_7_gl_oracle():
    disagree, invertible, total = [], 0, 0
    for name, M, rig, bound in _gl_cases():
        fast = is_invertible_matrix(M, rig)
        slow = has_bounded_inverse(M, rig, bound)
        total += 1
        invertible += fast
        if fast != slow:
            disagree.append((name, M))
    ok = not disagree and invertible > 0
    record(7, ok, f"{total} matrices ({invertible} invertible), {len(disagree)} disagreements")
    assert ok, disagree[:3]


def test_criterion_8_functor_suite():
    spec = SampleSpec(max_object_size=3, sample_count=200, seed=SEED)
    reports = []
    for k in (2, 4):
        F = functor_F(k)
        reports += [check_functor(F, spec, exhaustive_size=2),
                    check_antiinv_morphism(F, spec=spec, exhaustive_size=2)]
    act = conjugation_action(4)
    reports.append(check_group_action(act, spec=spec))
    V = act.category
    fixed = fixed_category(act, mor_sampler=signed_perm_sampler(V))
    fixed_ok = all({f.data for f in fixed.morphisms_from(n)}
                   == {f.data for f in V.morphisms_from(n) if set(f.data[1]) <= {0, 2}}
                   for n in range(3))
    bad = _summ(reports)
    ok = not bad and fixed_ok
    record(8, ok, f"F[2], F[4] exhaustive n<=2 and 200 samples, conjugation(4) action, "
                  f"fixed category = signed permutations: {fixed_ok}, {len(bad)} failing laws")
    assert ok, bad


def _mutations():
    spec = SampleSpec(max_object_size=3, sample_count=200, seed=SEED)
    E = make_instance("finite-sets")
    W = make_instance("wedge:2")
    out = {}

    mu_id = with_overrides(W, key="wedge:2:mu-id",
                           mu=lambda A, B: W.identity(W.zeta(W.otimes(A, B))))
    out["mu -> id on wedge:2 (anti-involution)"] = check_anti_involution(mu_id, spec)

    def c(A, B):
        return E.identity(2) if (A, B) == (1, 1) else E.c_oplus(A, B)
    out["c_oplus(1,1) := id on finite-sets (bimonoidal)"] = check_bimonoidal_laws(
        with_overrides(E, key="finite-sets:c-mutated", c_oplus=c), spec)

    def beta(A, B):
        return E.identity(4) if (A, B) == (2, 2) else E.c_otimes(A, B)
    out["beta(2,2) := id on finite-sets (braided)"] = check_braided_laws(
        with_overrides(E, key="finite-sets:beta-mutated", beta=beta), spec)

    mu_E = with_overrides(E, key="finite-sets:mu-id", mu=lambda A, B: E.identity(E.otimes(A, B)))
    out["mu -> id on finite-sets (matrix lemmas)"] = check_matrix_lemmas(
        mu_E, SampleSpec(max_object_size=3, sample_count=60, seed=SEED), pentagon_samples=5)

    V = make_instance("monomial:4")
    s = random_simplex(V, random.Random(SEED), 3, 2)
    f = s.phi[(0, 1, 2)]
    a, b = next((a, b) for a in range(2) for b in range(2) if f.cod[a, b] > 0)
    bump = [[V.identity(f.cod[x, y]) for y in range(2)] for x in range(2)]
    p, e = bump[a][b].data
    bump[a][b] = Mor(f.cod[a, b], f.cod[a, b], (p, ((e[0] + 1) % 4,) + e[1:]))
    phi = dict(s.phi)
    phi[(0, 1, 2)] = compose_mor(V, MatrixMor.of(bump), f)
    out["phi^{012} edit on a monomial:4 simplex (bar)"] = validate_simplex(
        V, BarSimplex(s.q, s.n, s.A, phi))
    return out


def test_criterion_9_mutation_sensitivity():
    found = {}
    for name, report in _mutations().items():
        failing = report.failing()
        found[name] = bool(failing) and all(r.witness is not None for r in failing)
    ok = all(found.values())
    record(9, ok, f"{sum(found.values())}/{len(found)} mutations detected with witnesses")
    assert ok, found


def test_criterion_10_determinism(monkeypatch):
    commands = [
        ["check", "bimonoidal", "--category", "wedge:2", "--samples", "100", "--seed", "42"],
        ["check", "tau", "--category", "monomial:4", "--samples", "30", "--seed", "42"],
        ["bar", "random", "--category", "wreath:2", "--q", "2", "--seed", "7"],
        ["gl", "sample", "--category", "discrete:Z[3]", "--seed", "9"],
    ]
    same = 0
    for argv in commands:
        monkeypatch.delenv("BIMON_THREADS", raising=False)
        first = run_command(argv)
        monkeypatch.setenv("BIMON_THREADS", "4")
        second = run_command(argv)
        json.loads(first[1])
        same += first == second
    ok = same == len(commands)
    record(10, ok, f"{same}/{len(commands)} commands byte-identical across runs and thread counts")
    assert ok
