"""``bimon``: run law suites and manipulate matrices and bar simplices.

Every invocation prints one JSON document on standard output.  Exit codes:
0 when everything checked passed, 1 when some law failed (the report
carries witnesses), 2 on usage, parse or capability errors (the output is
``{"error": {...}}``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import __version__
from .bar import (
    build_from_chain, check_simplicial_identities, check_tau_simplicial, compare_classical_involution,
    degeneracy, diagonal, face, project_pi0, random_simplex, simplex_from_json, simplex_to_json,
    tau, validate_simplex,
)
from .braided import (
    BraidingError, check_braided_laws, check_eq_e, check_yang_baxter, induced_anti_involution,
)
from .core import CapabilityError, CheckReport, SampleSpec, check_bimonoidal_laws
from .instances import (
    MonomialCategory, UnknownInstance, conjugation_action, functor_F, make_instance,
    projection_pi, signed_perm_sampler,
)
from .involution import (
    check_anti_involution, check_antiinv_morphism, check_fixed_closure, check_group_action,
    fixed_category, mu_symmetry_report,
)
from .matrices import (
    check_matrix_lemmas, gl_diagnostics, gl_member, matrix_obj_from_json, matrix_obj_to_json,
    pi0_matrix, sample_gl_matrix,
)
from .table import TABLE_SCHEMA, TableCategory, TableError, check_table_components, table_document

__all__ = ["main", "run_command", "UsageError"]


class UsageError(Exception):
    """Bad command line; reported as an error object with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# check suites


def _exhaustive_size(cat):
    # object triples enumerated in full for the Yang-Baxter check
    return 3 if cat.key == "finite-sets" else 1


def _monomial(cat) -> MonomialCategory:
    if not isinstance(cat, MonomialCategory):
        raise CapabilityError(f"{cat.key} is not a monomial instance")
    return cat


def _functor_suite(cat, spec):
    k = _monomial(cat).k
    F = functor_F(k, target=cat)
    return check_antiinv_morphism(F, spec=spec, exhaustive_size=2)


def _projection_suite(cat, spec):
    return check_antiinv_morphism(projection_pi(_monomial(cat).k, cat), spec=spec)


def _conjugation_suite(cat, spec):
    action = conjugation_action(_monomial(cat).k, cat)
    report = check_group_action(action, spec=spec)
    fixed = fixed_category(action, mor_sampler=signed_perm_sampler(cat))
    closure = check_fixed_closure(fixed, spec)
    report.results += closure.results
    return report


def _induced_suite(cat, spec):
    report = check_anti_involution(induced_anti_involution(cat, spec), spec)
    report.suite = "induced-anti-involution"
    return report


def _table_suite(cat, spec):
    if not isinstance(cat, TableCategory):
        raise CapabilityError(f"{cat.key} is not a table instance")
    return check_table_components(cat)


# name -> (runner, applicability test used by "check all")
SUITES: dict[str, tuple[Callable, Callable]] = {
    "bimonoidal": (check_bimonoidal_laws, lambda c: True),
    "anti-involution": (check_anti_involution, lambda c: c.has_anti_involution),
    "mu-symmetry": (mu_symmetry_report, lambda c: c.has_anti_involution),
    "braided": (check_braided_laws, lambda c: c.has_braiding),
    "eq-e": (check_eq_e, lambda c: True),
    "yang-baxter": (lambda c, s: check_yang_baxter(c, s, _exhaustive_size(c)),
                    lambda c: c.has_braiding),
    "induced": (_induced_suite, lambda c: c.has_braiding),
    "matrices": (lambda c, s: check_matrix_lemmas(c, s), lambda c: True),
    "simplicial": (lambda c, s: check_simplicial_identities(c, s, 3), lambda c: True),
    "tau": (lambda c, s: check_tau_simplicial(c, s, 3), lambda c: c.has_anti_involution),
    "functor-F": (_functor_suite, lambda c: isinstance(c, MonomialCategory)),
    "projection": (_projection_suite, lambda c: isinstance(c, MonomialCategory)),
    "conjugation": (_conjugation_suite, lambda c: isinstance(c, MonomialCategory)),
    "table-components": (_table_suite, lambda c: isinstance(c, TableCategory)),
}


def _run_check(args, cat, spec):
    names = list(SUITES) if args.subverb == "all" else [args.subverb]
    reports: list[CheckReport] = []
    skipped = []
    for name in names:
        runner, applies = SUITES[name]
        if args.subverb == "all" and not applies(cat):
            skipped.append(name)
            continue
        try:
            reports.append(runner(cat, spec))
        except BraidingError as exc:
            reports.append(exc.report)
        except CapabilityError:
            if args.subverb != "all":
                raise
            skipped.append(name)
    body = {"suites": [r.to_dict() for r in reports]}
    if skipped:
        body["skipped_suites"] = skipped
    return body, all(r.passed for r in reports)


# ---------------------------------------------------------------------------
# literals


def _load_json_arg(text: str, what: str):
    """A JSON literal, or the contents of a file when ``text`` names one."""
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed {what} literal: {exc.msg} at column {exc.colno}") from None


def _parse_matrix(cat, text):
    data = _load_json_arg(text, "matrix")
    try:
        return matrix_obj_from_json(cat, data)
    except (ValueError, TypeError, KeyError) as exc:
        raise UsageError(f"malformed matrix literal: {exc}") from None


def parse_chain(cat, text: str):
    """Matrices separated by commas, with or without enclosing brackets.

    ``[[2]],[[3]]`` and ``[[[2]],[[3]]]`` both denote the chain of the two
    1x1 matrices; the bracketed form is tried second because a single
    matrix literal is itself a bracketed list.
    """
    if os.path.isfile(text):
        with open(text, encoding="utf-8") as fh:
            text = fh.read()
    candidates = []
    for wrapped in (f"[{text}]", text):
        try:
            candidates.append(json.loads(wrapped))
        except json.JSONDecodeError:
            continue
    last = "not valid JSON"
    for data in candidates:
        if not isinstance(data, list) or not data:
            continue
        try:
            return [matrix_obj_from_json(cat, M) for M in data]
        except (ValueError, TypeError, KeyError) as exc:
            last = str(exc)
    raise UsageError(f"malformed chain literal: {last}")


def _simplex_input(args, cat):
    if args.simplex is not None:
        try:
            return simplex_from_json(cat, _load_json_arg(args.simplex, "simplex"))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if args.chain is not None:
        chain = parse_chain(cat, args.chain)
        if args.n is not None and any(M.n != args.n for M in chain):
            raise UsageError(f"chain matrices are not {args.n}x{args.n}")
        if args.q is not None and len(chain) != args.q:
            raise UsageError(f"chain has {len(chain)} matrices, expected --q {args.q}")
        try:
            return build_from_chain(cat, chain, require_gl=not args.allow_non_gl)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    rng = SampleSpec(seed=args.seed).rng("cli", cat.key)
    return random_simplex(cat, rng, args.q if args.q is not None else 2,
                          args.n if args.n is not None else 1)


def _diag(cat, s):
    return [matrix_obj_to_json(cat, M) for M in diagonal(s)]


# ---------------------------------------------------------------------------
# verbs


def _run_bar(args, cat, spec):
    # tau and face/degeneracy display accept chains outside GL_n
    args.allow_non_gl = args.subverb in ("tau", "face", "degeneracy")
    s = _simplex_input(args, cat)
    sub = args.subverb
    if sub == "tau":
        t = tau(cat, s)
        in_gl = [gl_member(cat, M) for M in diagonal(s)] if cat.has_components else None
        return {"simplex": simplex_to_json(cat, s), "tau": simplex_to_json(cat, t),
                "diagonal": _diag(cat, t), "chain_in_gl": in_gl}, True
    if sub == "validate":
        r = validate_simplex(cat, s, spec)
        return {"suites": [r.to_dict()]}, r.passed
    if sub in ("face", "degeneracy"):
        if args.index is None or not 0 <= args.index <= s.q:
            raise UsageError(f"--index must lie in 0..{s.q}")
        out = (face if sub == "face" else degeneracy)(cat, s, args.index)
        return {"simplex": simplex_to_json(cat, out), "diagonal": _diag(cat, out)}, True
    if sub == "random":
        return {"simplex": simplex_to_json(cat, s), "diagonal": _diag(cat, s)}, True
    if sub == "classical":
        if args.chain is None:
            raise UsageError("bar classical needs --chain")
        r = compare_classical_involution(cat, parse_chain(cat, args.chain), spec)
        return {"suites": [r.to_dict()]}, r.passed
    raise UsageError(f"unknown bar subverb {sub!r}")


def _run_gl(args, cat, spec):
    if args.subverb == "member":
        if args.matrix is None:
            raise UsageError("gl member needs --matrix")
        return gl_diagnostics(cat, _parse_matrix(cat, args.matrix)), True
    if args.subverb == "sample":
        rng = spec.rng("cli-gl", cat.key)
        M = sample_gl_matrix(cat, rng, args.n or spec.max_arity_n)
        return {"matrix": matrix_obj_to_json(cat, M), **gl_diagnostics(cat, M)}, True
    raise UsageError(f"unknown gl subverb {args.subverb!r}")


def _run_pi0(args, cat, spec):
    args.allow_non_gl = False
    rig = cat.pi0_rig
    if args.subverb == "matrix":
        if args.matrix is None:
            raise UsageError("pi0 matrix needs --matrix")
        M = _parse_matrix(cat, args.matrix)
        return {"pi0": [[rig.to_json(x) for x in row] for row in pi0_matrix(cat, M)],
                "rig": rig.name}, True
    if args.subverb == "simplex":
        s = _simplex_input(args, cat)
        P, p = project_pi0(cat, s)
        P2, p2 = project_pi0(cat, tau(cat, s))
        commutes = tau(P, p) == p2
        return {"pi0_simplex": simplex_to_json(P, p), "rig": rig.name,
                "tau_commutes": commutes}, commutes
    if args.subverb == "objects":
        objs = cat.enumerate_objects(spec.max_object_size)
        return {"labels": [[cat.obj_to_json(A), rig.to_json(cat.component(A))] for A in objs],
                "rig": rig.name}, True
    raise UsageError(f"unknown pi0 subverb {args.subverb!r}")


def _run_export(args, cat, spec):
    if args.subverb == "table":
        objs = cat.enumerate_objects(spec.max_object_size)
        try:
            return table_document(cat, objs), True
        except ValueError as exc:
            raise CapabilityError(f"cannot tabulate {cat.key}: {exc}") from None
    if args.subverb == "simplex":
        args.allow_non_gl = False
        return simplex_to_json(cat, _simplex_input(args, cat)), True
    if args.subverb == "table-schema":
        return TABLE_SCHEMA, True
    raise UsageError(f"unknown export subverb {args.subverb!r}")


VERBS = {
    "check": (_run_check, ["all", *SUITES]),
    "bar": (_run_bar, ["tau", "validate", "face", "degeneracy", "random", "classical"]),
    "gl": (_run_gl, ["member", "sample"]),
    "pi0": (_run_pi0, ["matrix", "simplex", "objects"]),
    "export": (_run_export, ["table", "simplex", "table-schema"]),
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bimon", description="Law checks for strict bimonoidal categories.")
    p.add_argument("--version", action="version", version=f"bimon {__version__}")
    verbs = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    for verb, (_, subs) in VERBS.items():
        v = verbs.add_parser(verb)
        v.add_argument("subverb", choices=subs)
        v.add_argument("--category", default="finite-sets", help="instance registry key")
        v.add_argument("--max-size", type=int, default=3)
        v.add_argument("--max-n", type=int, default=2)
        v.add_argument("--q", type=int)
        v.add_argument("--n", type=int)
        v.add_argument("--index", type=int)
        v.add_argument("--samples", type=int, default=200)
        v.add_argument("--seed", type=int, default=42)
        v.add_argument("--matrix")
        v.add_argument("--chain")
        v.add_argument("--simplex")
        v.add_argument("--json", metavar="PATH", help="also write the report to PATH")
    return p


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)


def run_command(argv: list[str]) -> tuple[int, str]:
    """Execute one invocation; returns the exit code and the JSON text."""
    try:
        args = build_parser().parse_args(argv)
        spec = SampleSpec(max_object_size=args.max_size, max_arity_n=args.max_n,
                          sample_count=args.samples, seed=args.seed)
        if args.q is not None and args.q < 0 or args.n is not None and args.n < 1:
            raise UsageError("--q must be >= 0 and --n >= 1")
        cat = make_instance(args.category)
        runner, _ = VERBS[args.verb]
        body, ok = runner(args, cat, spec)
    except (UsageError, UnknownInstance, TableError, CapabilityError, ValueError) as exc:
        kind = {UsageError: "usage", UnknownInstance: "unknown-instance",
                TableError: "table", CapabilityError: "capability"}.get(type(exc), "invalid-input")
        return 2, _dump({"error": {"type": kind, "message": str(exc)}})
    report = {"tool_version": __version__, "command": [args.verb, args.subverb],
              "instance": cat.key, "spec": spec.to_dict()}
    if "suites" in body:
        report.update(body)
    else:
        report["result"] = body
    text = _dump(report)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return (0 if ok else 1), text


def main(argv: list[str] | None = None) -> int:
    code, text = run_command(sys.argv[1:] if argv is None else argv)
    print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
