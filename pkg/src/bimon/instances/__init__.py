"""Bundled instances and the registry keyed by the CLI grammar.

Keys::

    finite-sets
    wreath:G        wedge:G          G a comma list of moduli, e.g. 2 or 2,2
    monomial:k      bichar:k:q
    discrete:R      R one of Z, N, Z/k, M2F2, Z[G], N[G]
    table:PATH      a table document on disk; table:thin-graded-boolean is built in
"""

from __future__ import annotations

import re

from ..rig import (
    CapabilityError, FiniteAbelianGroup, GroupRig, IntegerRing, ModularRing, NaturalNumbers,
    m2f2,
)
from .base import FiniteSets, PermCategory
from .bichar import BicharCategory
from .discrete import DiscreteCategory, random_gl
from .functors import (
    conjugation_action, functor_F, group_ring_inversion_action, plain_zeta, projection_pi,
    signed_perm_sampler,
)
from .monomial import MonomialCategory
from .wedge import WedgeCategory
from .wreath import WreathCategory

__all__ = [
    "make_instance", "parse_group", "bundled_keys", "FiniteSets", "WreathCategory",
    "WedgeCategory", "MonomialCategory", "BicharCategory", "DiscreteCategory",
    "PermCategory", "functor_F", "projection_pi", "conjugation_action", "plain_zeta",
    "signed_perm_sampler", "group_ring_inversion_action", "random_gl", "UnknownInstance",
]


class UnknownInstance(ValueError):
    pass


def parse_group(text: str) -> FiniteAbelianGroup:
    try:
        moduli = tuple(int(m) for m in text.split(","))
    except ValueError:
        raise UnknownInstance(f"bad group moduli {text!r}") from None
    if any(m < 1 for m in moduli):
        raise UnknownInstance(f"bad group moduli {text!r}")
    return FiniteAbelianGroup(moduli)


def _parse_rig(text: str):
    if text == "Z":
        return IntegerRing()
    if text == "N":
        return NaturalNumbers()
    if text == "M2F2":
        return m2f2()
    m = re.fullmatch(r"Z/(\d+)", text)
    if m:
        return ModularRing(int(m.group(1)))
    m = re.fullmatch(r"([ZN])\[([\d,]+)\]", text)
    if m:
        return GroupRig(parse_group(m.group(2)), signed=m.group(1) == "Z")
    raise UnknownInstance(f"unknown discrete ring {text!r}")


def make_instance(key: str):
    """Build a bundled instance from its registry key."""
    head, _, rest = key.partition(":")
    try:
        if head == "finite-sets" and not rest:
            return FiniteSets()
        if head == "wreath" and rest:
            return WreathCategory(parse_group(rest))
        if head == "wedge" and rest:
            return WedgeCategory(parse_group(rest))
        if head == "monomial" and rest:
            return MonomialCategory(int(rest))
        if head == "bichar" and rest:
            k, q = rest.split(":")
            return BicharCategory(int(k), int(q))
        if head == "discrete" and rest:
            return DiscreteCategory(_parse_rig(rest), key=key)
        if head == "table" and rest:
            from ..table import load_table, thin_graded_boolean
            if rest == "thin-graded-boolean":
                return load_table(thin_graded_boolean())
            cat = load_table(rest)
            cat.key = key
            return cat
    except (ValueError, CapabilityError) as exc:
        from ..table import TableError
        if isinstance(exc, (UnknownInstance, TableError)):
            raise
        raise UnknownInstance(f"bad parameters in {key!r}: {exc}") from None
    raise UnknownInstance(f"unknown instance key {key!r}")


def bundled_keys() -> list[str]:
    """The fifteen instances of the axiom acceptance run."""
    groups = ["2", "3", "4", "2,2"]
    return (["finite-sets"] + [f"wreath:{g}" for g in groups] + [f"wedge:{g}" for g in groups]
            + [f"monomial:{k}" for k in (2, 4, 8)]
            + ["discrete:Z", "discrete:M2F2", "discrete:Z[3]"])
