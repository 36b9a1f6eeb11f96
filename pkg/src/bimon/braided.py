"""Braided bimonoidal structure and the anti-involution it induces.

``beta(A, B): A*B -> B*A`` is a braiding for the product, compatible with
``d_r`` through::

    beta(A, B+C) o d_r(A,B,C) = beta(A,B) + beta(A,C)
    beta(B+C, A)              = d_r(A,B,C) o (beta(B,A) + beta(C,A))

Any such category carries the anti-involution ``zeta = id``, ``mu = beta``.
"""

from __future__ import annotations

import itertools

from .core import (
    BimonoidalCategory, CapabilityError, CheckReport, Law, SampleSpec, run_laws, with_overrides,
)

__all__ = [
    "braided_laws", "check_braided_laws", "check_eq_e", "check_yang_baxter",
    "induced_anti_involution", "BraidingError",
]


class BraidingError(ValueError):
    """The braided laws failed, so no anti-involution is induced."""

    def __init__(self, report: CheckReport):
        super().__init__(f"braided laws fail on {report.instance}: "
                         + ", ".join(r.law for r in report.failing()))
        self.report = report


def _require_braiding(cat):
    if not cat.has_braiding:
        raise CapabilityError(f"{cat.key} carries no braiding")


def braided_laws(cat: BimonoidalCategory, spec: SampleSpec) -> list[Law]:
    C = cat
    I = C.identity
    b = C.beta
    s = spec.max_object_size

    def objs(k, homogeneous=True):
        return lambda rng: C.sample_objects(rng, k, s, homogeneous)

    def mors(k, homogeneous=False):
        def draw(rng):
            return tuple(C.sample_mor_from(rng, A) for A in C.sample_objects(rng, k, s, homogeneous))
        return draw

    return [
        Law("beta.typing", "beta(A,B): AB -> BA",
            lambda A, B: ((b(A, B).dom, b(A, B).cod), (C.otimes(A, B), C.otimes(B, A))),
            objs(2, False)),
        Law("beta.invertible", "beta^-1 o beta = id",
            lambda A, B: (C.compose(C.inverse(b(A, B)), b(A, B)), I(C.otimes(A, B))),
            objs(2, False)),
        Law("beta.natural", "beta(A',B') o (f*g) = (g*f) o beta(A,B)",
            lambda f, g: (C.compose(b(f.cod, g.cod), C.otimes_mor(f, g)),
                          C.compose(C.otimes_mor(g, f), b(f.dom, g.dom))), mors(2)),
        Law("beta.unit", "beta(1,A) = id = beta(A,1)",
            lambda A: ((b(C.one, A), b(A, C.one)), (I(A), I(A))), objs(1)),
        Law("beta.hexagon.left", "beta(AB,C) = (beta(A,C)*id_B) o (id_A*beta(B,C))",
            lambda A, B, D: (b(C.otimes(A, B), D),
                             C.compose(C.otimes_mor(b(A, D), I(B)), C.otimes_mor(I(A), b(B, D)))),
            objs(3, False)),
        Law("beta.hexagon.right", "beta(A,BC) = (id_B*beta(A,C)) o (beta(A,B)*id_C)",
            lambda A, B, D: (b(A, C.otimes(B, D)),
                             C.compose(C.otimes_mor(I(B), b(A, D)), C.otimes_mor(b(A, B), I(D)))),
            objs(3, False)),
        Law("beta.distributivity.top", "beta(A,B+C) o d_r(A,B,C) = d_l o (beta(A,B) + beta(A,C))",
            lambda A, B, D: (C.compose(b(A, C.oplus(B, D)), C.d_r(A, B, D)),
                             C.compose(I(C.otimes(C.oplus(B, D), A)),
                                       C.oplus_mor(b(A, B), b(A, D)))), objs(3)),
        Law("beta.distributivity.bottom",
            "beta(B+C,A) o d_l = d_r(A,B,C) o (beta(B,A) + beta(C,A))",
            lambda A, B, D: (C.compose(b(C.oplus(B, D), A), I(C.otimes(C.oplus(B, D), A))),
                             C.compose(C.d_r(A, B, D), C.oplus_mor(b(B, A), b(D, A)))), objs(3)),
        Law("beta.distributivity.stack",
            "beta o beta o d_r = d_r o (beta + beta) o (beta + beta)",
            lambda A, B, D: (C.compose_all(b(C.oplus(B, D), A), b(A, C.oplus(B, D)), C.d_r(A, B, D)),
                             C.compose_all(C.d_r(A, B, D), C.oplus_mor(b(B, A), b(D, A)),
                                           C.oplus_mor(b(A, B), b(A, D)))), objs(3)),
        Law("beta.double_braid_sum",
            "beta o beta o d_l = d_l o (beta + beta) o (beta + beta)",
            lambda A, X, Y: (C.compose(b(A, C.oplus(X, Y)), b(C.oplus(X, Y), A)),
                             C.compose(C.oplus_mor(b(A, X), b(A, Y)),
                                       C.oplus_mor(b(X, A), b(Y, A)))), objs(3)),
    ]


def check_braided_laws(cat: BimonoidalCategory, spec: SampleSpec | None = None) -> CheckReport:
    _require_braiding(cat)
    spec = spec or SampleSpec()
    report = run_laws(cat, braided_laws(cat, spec), spec, "braided")
    return report


def check_eq_e(cat: BimonoidalCategory, spec: SampleSpec | None = None) -> CheckReport:
    """Both composites ``ABC + AB'C -> A(B+B')C`` of the derived distributivity square."""
    spec = spec or SampleSpec()
    C = cat
    I = C.identity

    def sides(A, B, B2, D):
        # d_l is the identity, written out so both paths are evaluated as drawn
        d_l_top = I(C.oplus(C.otimes_all([A, B, D]), C.otimes_all([A, B2, D])))
        top = C.compose(C.otimes_mor(C.d_r(A, B, B2), I(D)), d_l_top)
        d_l_bottom = C.otimes_mor(I(A), I(C.oplus(C.otimes(B, D), C.otimes(B2, D))))
        bottom = C.compose(d_l_bottom, C.d_r(A, C.otimes(B, D), C.otimes(B2, D)))
        return top, bottom

    law = Law("eq_e", "(d_r * id) o d_l = (id * d_l) o d_r",
              sides, lambda rng: C.sample_objects(rng, 4, spec.max_object_size, True))
    return run_laws(cat, [law], spec, "eq-e")


def check_yang_baxter(cat: BimonoidalCategory, spec: SampleSpec | None = None,
                      exhaustive_size: int | None = None) -> CheckReport:
    """``(id_C * beta(A,B)) o beta(AB,C) = (beta(B,C) * id_A) o beta(A,BC)``.

    With ``exhaustive_size`` every object triple up to that size is checked
    in addition to ``spec.sample_count`` sampled triples.
    """
    _require_braiding(cat)
    spec = spec or SampleSpec()
    C = cat
    I = C.identity
    b = C.beta

    def sides(A, B, D):
        return (C.compose(C.otimes_mor(I(D), b(A, B)), b(C.otimes(A, B), D)),
                C.compose(C.otimes_mor(b(B, D), I(A)), b(A, C.otimes(B, D))))

    anchor = "(id * beta(A,B)) o beta(AB,C) = (beta(B,C) * id) o beta(A,BC)"
    laws = [Law("yang_baxter.sampled", anchor, sides,
                lambda rng: C.sample_objects(rng, 3, spec.max_object_size, False))]
    if exhaustive_size is not None:
        objs = C.enumerate_objects(exhaustive_size)
        laws.insert(0, Law("yang_baxter.exhaustive", anchor, sides,
                           inputs=lambda: itertools.product(objs, repeat=3)))
    return run_laws(cat, laws, spec, "yang-baxter")


def induced_anti_involution(cat: BimonoidalCategory, spec: SampleSpec | None = None):
    """``cat`` with ``zeta = id`` and ``mu = beta``; refused if the braided laws fail."""
    report = check_braided_laws(cat, spec)
    if not report.passed:
        raise BraidingError(report)
    beta = cat.beta
    return with_overrides(cat, key=f"{cat.key}:induced",
                          zeta=lambda A: A, zeta_mor=lambda f: f, mu=beta,
                          has_anti_involution=True)
