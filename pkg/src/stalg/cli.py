"""Command-line interface: arrangement files, analysis commands, the
corpus verification driver and the conjecture-search harness.

Exit codes: 0 success, 1 failed check or internal inconsistency, 2 usage
or file errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from fractions import Fraction

from .arr import Arrangement
from .coxeter import (
    RootSystem,
    LowerIdeal,
    bruhat_interval_size,
    ideal_arrangement,
    ideal_exponents,
    inversion_arrangement,
    parse_permutation,
    weyl_arrangement,
)
from .examples import get_example
from .logder import check_acyclicity, is_free, is_tame, solomon_terao_polynomial
from .poly import Polynomial
from .scalars import Field
from .stalgebra import (
    analyze,
    default_eta,
    socle_witness,
    st_algebra,
    verify_eta,
)
from .verify import run_suite

SCHEMA = "stalg-report/1"


class CLIError(Exception):
    """User-facing input error (exit code 2)."""


# -- scalar and file codecs ---------------------------------------------------


def scalar_to_json(s):
    if s.field.kind == "rational":
        if s.rep.denominator == 1:
            return int(s.rep)
        return str(s.rep)
    return [int(c) if c.denominator == 1 else str(c) for c in s.rep]


def scalar_from_json(field, data, where):
    try:
        if isinstance(data, (int, str)):
            return field(Fraction(data))
        if isinstance(data, list):
            if field.kind != "extension":
                raise ValueError("coefficient vector over the rational field")
            return field.element([Fraction(c) for c in data])
    except (ValueError, ZeroDivisionError) as exc:
        raise CLIError("%s: bad scalar %r (%s)" % (where, data, exc))
    raise CLIError("%s: bad scalar %r" % (where, data))


def parse_arrangement_data(data):
    """Arrangement plus optional eta from a parsed JSON document."""
    if not isinstance(data, dict):
        raise CLIError("arrangement file must be a JSON object")
    try:
        field = Field.from_dict(data.get("field", {"type": "rational"}))
    except (ValueError, KeyError) as exc:
        raise CLIError("field descriptor: %s" % exc)
    names = data.get("variables")
    hyps = data.get("hyperplanes")
    if not isinstance(hyps, list):
        raise CLIError("missing 'hyperplanes' list")
    if names is not None and hyps and any(len(h) != len(names) for h in hyps):
        raise CLIError("hyperplane length does not match the variable list")
    nvars = len(names) if names is not None else (len(hyps[0]) if hyps else 0)
    if nvars == 0:
        raise CLIError("cannot determine the variable count")
    vectors = []
    for k, h in enumerate(hyps):
        where = "hyperplane #%d" % (k + 1)
        if not isinstance(h, list) or len(h) != nvars:
            raise CLIError("%s: expected %d coefficients" % (where, nvars))
        vec = [scalar_from_json(field, c, where) for c in h]
        if not any(vec):
            raise CLIError("%s: zero coefficient vector" % where)
        vectors.append(vec)
    A = Arrangement(field, nvars, vectors, names=names)
    eta = None
    if "eta" in data and data["eta"] is not None:
        eta = _eta_from_json(field, nvars, data["eta"])
    return A, eta


def _eta_from_json(field, nvars, data):
    if not isinstance(data, dict) or "coefficients" not in data:
        raise CLIError("eta: expected {degree, coefficients}")
    terms = {}
    for key, val in data["coefficients"].items():
        try:
            mon = tuple(int(e) for e in key.split(","))
        except ValueError:
            raise CLIError("eta: bad exponent key %r" % key)
        if len(mon) != nvars or any(e < 0 for e in mon):
            raise CLIError("eta: bad exponent key %r" % key)
        terms[mon] = scalar_from_json(field, val, "eta")
    eta = Polynomial(field, nvars, terms)
    if not eta.is_homogeneous() or eta.is_zero():
        raise CLIError("eta must be nonzero homogeneous")
    if "degree" in data and eta.degree() != data["degree"]:
        raise CLIError(
            "eta degree %s does not match declared %s" % (eta.degree(), data["degree"])
        )
    return eta


def render_arrangement_data(A, eta=None):
    doc = {
        "field": A.field.to_dict(),
        "variables": list(A.names),
        "hyperplanes": [
            [scalar_to_json(c) for c in h.coeffs] for h in A.hyperplanes
        ],
    }
    if eta is not None:
        doc["eta"] = {
            "degree": eta.degree(),
            "coefficients": {
                ",".join(str(e) for e in mon): scalar_to_json(c)
                for mon, c in eta.sorted_terms()
            },
        }
    return doc


_TOKEN = re.compile(r"\s*([+-]|\*|\^|\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*)")


def parse_polynomial_string(text, field, names):
    """Parse sums of coefficient*monomial terms: '2*x^2 - y*z + 1/2*z^2'."""
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise CLIError("cannot parse polynomial at %r" % text[pos:])
        tokens.append(m.group(1))
        pos = m.end()
    nvars = len(names)
    poly = Polynomial.zero(field, nvars)
    i = 0
    sign = 1
    while i < len(tokens):
        tok = tokens[i]
        if tok == "+":
            sign = 1
            i += 1
            continue
        if tok == "-":
            sign = -1
            i += 1
            continue
        # one term: factors joined by '*'
        coeff = Fraction(sign)
        mon = [0] * nvars
        expecting_factor = True
        while i < len(tokens):
            tok = tokens[i]
            if tok in "+-" and not expecting_factor:
                break
            if tok == "*":
                i += 1
                expecting_factor = True
                continue
            if re.fullmatch(r"\d+(/\d+)?", tok):
                coeff *= Fraction(tok)
                i += 1
                expecting_factor = False
                continue
            if tok in names:
                idx = names.index(tok)
                exp = 1
                i += 1
                if i < len(tokens) and tokens[i] == "^":
                    if i + 1 >= len(tokens) or not tokens[i + 1].isdigit():
                        raise CLIError("bad exponent after %s^" % tok)
                    exp = int(tokens[i + 1])
                    i += 2
                mon[idx] += exp
                expecting_factor = False
                continue
            raise CLIError("unknown token %r in polynomial" % tok)
        poly = poly + Polynomial.monomial(field, nvars, tuple(mon), field(coeff))
        sign = 1
    return poly


# -- shared report plumbing ---------------------------------------------------


def load_arrangement(args):
    """Resolve --example NAME or a file path to (label, arrangement, eta)."""
    if getattr(args, "example", None):
        try:
            return args.example, get_example(args.example), None
        except KeyError as exc:
            raise CLIError(str(exc))
    path = getattr(args, "input", None)
    if not path:
        raise CLIError("provide an input file or --example NAME")
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CLIError("cannot read %s: %s" % (path, exc))
    except json.JSONDecodeError as exc:
        raise CLIError("%s: invalid JSON at line %d" % (path, exc.lineno))
    A, eta = parse_arrangement_data(data)
    return os.path.basename(path), A, eta


def emit(args, command, label, results, checks):
    report = {
        "schema": SCHEMA,
        "command": command,
        "input": label,
        "results": results,
        "checks": [
            {"name": n, "pass": bool(p), "detail": d} for n, p, d in checks
        ],
    }
    if getattr(args, "json", False):
        print(json.dumps(report, sort_keys=True, default=str))
    else:
        for key, val in results.items():
            print("%s: %s" % (key, val))
        for n, p, d in checks:
            print("%s %s%s" % ("PASS" if p else "FAIL", n, " - " + d if d else ""))
    return 0 if all(p for _, p, _ in checks) else 1


def _resolve_eta(args, A, file_eta):
    degree = getattr(args, "degree", 2) or 2
    spec_arg = getattr(args, "eta", None) or "default"
    if spec_arg == "default":
        if file_eta is not None:
            spec = verify_eta(A, file_eta)
            if not spec.valid:
                raise CLIError(
                    "eta from file is degenerate on %s" % spec.failing_elements()
                )
            return spec
        return default_eta(A, degree)
    eta = parse_polynomial_string(spec_arg, A.field, A.names)
    spec = verify_eta(A, eta)
    if not spec.valid:
        raise CLIError("eta is degenerate on %s" % spec.failing_elements())
    return spec


# -- commands -----------------------------------------------------------------


def cmd_lattice(args):
    label, A, _ = load_arrangement(args)
    lat = A.lattice()
    elements = [
        {
            "codim": el.codim,
            "mu": el.mu,
            "hyperplanes": list(el.hyperplanes),
        }
        for el in lat.elements
    ]
    results = {
        "hyperplanes": [h.form.str(A.names) for h in A.hyperplanes],
        "lattice_size": len(lat),
        "elements": elements,
        "characteristic_polynomial": A.characteristic_polynomial(),
        "poincare_polynomial": A.poincare_polynomial(),
        "chambers": A.num_chambers(),
    }
    return emit(args, "lattice", label, results, [])


def cmd_free(args):
    label, A, _ = load_arrangement(args)
    report = is_free(A)
    results = {
        "size": A.size,
        "free": report.free,
        "exponents": report.exponents,
        "generator_degrees": report.generator_degrees,
        "poincare_polynomial": A.poincare_polynomial(),
    }
    checks = []
    if report.free:
        from .logder import terao_factorization_check

        checks.append(
            (
                "terao-factorization",
                terao_factorization_check(A),
                "pi = prod(1 + d_i t)",
            )
        )
    return emit(args, "free", label, results, checks)


def cmd_psi(args):
    label, A, _ = load_arrangement(args)
    psi = solomon_terao_polynomial(A)
    grid = psi.coefficient_grid()
    results = {
        "psi_grid_rows_x_cols_t": grid,
        "psi_at_x_1": psi.substitute_x_one(),
        "psi_at_t_1": psi.substitute_t([1]),
        "poincare_polynomial": A.poincare_polynomial(),
    }
    checks = [
        (
            "psi-x1-equals-poincare",
            psi.substitute_x_one() == A.poincare_polynomial(),
            "",
        )
    ]
    if A.hyperplanes:
        rep = check_acyclicity(A)
        checks.append(
            ("psi-vanishes-at-t-minus-x", rep.exact, "residual %s" % rep.residual)
        )
    if not getattr(args, "json", False):
        print("Psi coefficient grid (rows: x-degree, columns: t-degree):")
        for row in grid:
            print("  " + " ".join("%4d" % c for c in row))
    return emit(args, "psi", label, results, checks)


def cmd_st(args):
    if getattr(args, "report", None):
        args.json = args.report == "json"
    label, A, file_eta = load_arrangement(args)
    spec = _resolve_eta(args, A, file_eta)
    st = st_algebra(A, spec)
    rep = analyze(st)
    wit = socle_witness(st)
    results = {
        "eta": spec.eta.str(A.names),
        "hilbert_vector": st.hilbert_vector,
        "dimension": st.dimension(),
        "top_degree": st.top_degree,
        "complete_intersection": rep.complete_intersection,
        "quantum_exponents": rep.quantum_exponents,
        "recovered_exponents": rep.recovered_exponents,
        "gorenstein": rep.gorenstein,
        "palindromic": rep.palindromic,
        "slp": "holds" if rep.slp_established else "not established",
        "socle_degree": rep.socle_degree,
        "socle_degree_expected": rep.socle_degree_expected,
        "witness_nonzero": wit.nonzero,
        "witness_in_socle": wit.in_socle,
    }
    if getattr(args, "show_gb", False):
        results["groebner_basis"] = [g.component(0).str(A.names) for g in st.gb]
    checks = [
        ("witness-in-socle", wit.nonzero and wit.in_socle, ""),
        (
            "socle-degree-conjecture",
            rep.socle_degree_conjecture,
            "r = |A| + l(d-2) with one-dimensional top",
        ),
    ]
    return emit(args, "st", label, results, checks)


def cmd_analyze(args):
    label, A, file_eta = load_arrangement(args)
    free_rep = is_free(A)
    psi = solomon_terao_polynomial(A)
    spec = _resolve_eta(args, A, file_eta)
    st = st_algebra(A, spec)
    rep = analyze(st)
    wit = socle_witness(st)
    results = {
        "size": A.size,
        "nvars": A.nvars,
        "poincare_polynomial": A.poincare_polynomial(),
        "chambers": A.num_chambers(),
        "free": free_rep.free,
        "exponents": free_rep.exponents,
        "generator_degrees": free_rep.generator_degrees,
        "tame": is_tame(A),
        "eta": spec.eta.str(A.names),
        "hilbert_vector": st.hilbert_vector,
        "complete_intersection": rep.complete_intersection,
        "gorenstein": rep.gorenstein,
        "palindromic": rep.palindromic,
        "slp": "holds" if rep.slp_established else "not established",
    }
    checks = [
        (
            "psi-x1-equals-poincare",
            psi.substitute_x_one() == A.poincare_polynomial(),
            "",
        ),
        ("ci-iff-free", rep.complete_intersection == free_rep.free, ""),
        ("witness-in-socle", wit.nonzero and wit.in_socle, ""),
    ]
    if A.hyperplanes:
        checks.append(("psi-vanishes-at-t-minus-x", check_acyclicity(A).exact, ""))
    return emit(args, "analyze", label, results, checks)


def cmd_coxeter(args):
    sub = args.action
    if sub == "roots":
        rs = RootSystem(args.type, args.rank)
        results = {
            "positive_roots": [list(r) for r in rs.positive_roots],
            "heights": [rs.height(r) for r in rs.positive_roots],
            "simple_roots": [list(r) for r in rs.simple_roots],
        }
        return emit(args, "coxeter", "%s%d" % (args.type, args.rank), results, [])
    if sub == "weyl":
        A = weyl_arrangement(args.type, args.rank)
        label = "weyl-%s%d" % (args.type, args.rank)
        rep = is_free(A)
        results = {
            "hyperplanes": [h.form.str(A.names) for h in A.hyperplanes],
            "free": rep.free,
            "exponents": rep.exponents,
        }
        _maybe_save(args, A)
        return emit(args, "coxeter", label, results, [])
    if sub == "ideal":
        rs = RootSystem(args.type, args.rank)
        if args.roots is None:
            raise CLIError("ideal needs --roots with comma-separated indices")
        try:
            indices = [int(k) for k in args.roots.split(",")] if args.roots else []
        except ValueError:
            raise CLIError("--roots expects comma-separated indices")
        try:
            roots = [rs.positive_roots[k] for k in indices]
        except IndexError:
            raise CLIError(
                "root index out of range; see 'coxeter roots %s %d'"
                % (args.type, args.rank)
            )
        try:
            ideal = LowerIdeal(rs, roots)
        except ValueError as exc:
            raise CLIError(str(exc))
        A = ideal_arrangement(ideal)
        rep = is_free(A)
        expected = sorted(ideal_exponents(ideal) + [0] * (rs.dim - rs.rank))
        results = {
            "roots": [list(r) for r in ideal.roots],
            "dual_partition_exponents": ideal_exponents(ideal),
            "free": rep.free,
            "computed_exponents": rep.exponents,
        }
        checks = [
            (
                "exponents-match-dual-partition",
                rep.free and sorted(rep.exponents) == expected,
                "%s vs %s" % (rep.exponents, expected),
            )
        ]
        _maybe_save(args, A)
        return emit(args, "coxeter", "ideal", results, checks)
    if sub == "inversion":
        w = parse_permutation(args.w)
        A = inversion_arrangement(w)
        rep = is_free(A)
        interval = bruhat_interval_size(w)
        results = {
            "hyperplanes": [h.form.str(A.names) for h in A.hyperplanes],
            "free": rep.free,
            "exponents": rep.exponents,
            "bruhat_interval": interval,
        }
        if rep.free:
            results["product_1_plus_d"] = math.prod(1 + d for d in rep.exponents)
        _maybe_save(args, A)
        return emit(args, "coxeter", "inversion-%s" % args.w, results, [])
    raise CLIError("unknown coxeter action %r" % sub)


def _maybe_save(args, A, eta=None):
    path = getattr(args, "save", None)
    if path:
        with open(path, "w") as fh:
            json.dump(render_arrangement_data(A, eta), fh, sort_keys=True, indent=1)


def cmd_verify(args):
    results = run_suite(args.suite)
    ok_all = all(ok for _, ok, _ in results)
    if getattr(args, "json", False):
        report = {
            "schema": SCHEMA,
            "command": "verify",
            "input": args.suite,
            "results": {"passed": sum(1 for _, ok, _ in results if ok), "total": len(results)},
            "checks": [
                {"name": n, "pass": bool(ok), "detail": d} for n, ok, d in results
            ],
        }
        print(json.dumps(report, sort_keys=True, default=str))
    else:
        for name, ok, detail in results:
            print("%s %s - %s" % ("PASS" if ok else "FAIL", name, detail))
        print(
            "%d/%d checks passed"
            % (sum(1 for _, ok, _ in results if ok), len(results))
        )
    return 0 if ok_all else 1


# -- conjecture search --------------------------------------------------------


def _search_arrangements(args):
    from .verify import random_arrangements

    if args.generator == "random":
        arrs = random_arrangements(
            args.nvars, args.count, args.seed, args.min_size, args.max_size
        )
        return [("random-%d" % k, A) for k, A in enumerate(arrs)]
    if args.generator.startswith("sub:"):
        parent_name = args.generator[4:]
        try:
            parent = get_example(parent_name)
        except KeyError as exc:
            raise CLIError(str(exc))
        from itertools import combinations

        out = []
        k = 0
        for size in range(args.min_size, min(args.max_size, parent.size) + 1):
            for combo in combinations(range(parent.size), size):
                if k >= args.count:
                    return out
                sub = Arrangement(
                    parent.field,
                    parent.nvars,
                    [parent.hyperplanes[i] for i in combo],
                    names=parent.names,
                )
                out.append(("sub-%s-%d" % (parent_name, k), sub))
                k += 1
        return out
    raise CLIError("generator must be 'random' or 'sub:<example>'")


def conjecture_search(args):
    """Evaluate the freeness-factorization, palindromicity and socle-degree
    conjectures over generated arrangements; violations are written out as
    reproducible arrangement files and never treated as proofs."""
    cases = _search_arrangements(args)
    log = []
    violation_count = 0
    for name, A in cases:
        entry = {"name": name, "nvars": A.nvars, "size": A.size}
        try:
            spec = default_eta(A, args.degree)
        except ValueError as exc:
            entry["skipped"] = "no valid eta: %s" % exc
            log.append(entry)
            continue
        st = st_algebra(A, spec)
        rep = analyze(st)
        fr = is_free(A)
        entry.update(
            {
                "free": fr.free,
                "hilbert_vector": st.hilbert_vector,
                "palindromic": rep.palindromic,
                "quantum_exponents": rep.quantum_exponents,
                "socle_degree": rep.socle_degree,
                "top_dimension": st.hilbert_vector[-1],
            }
        )
        which = getattr(args, "conjectures", "all")
        violations = []
        if which in ("all", "factorization") and fr.free != (
            rep.quantum_exponents is not None
        ):
            violations.append("free-iff-quantum-factorable")
        if which in ("all", "palindromic") and fr.free != rep.palindromic:
            violations.append("free-iff-palindromic")
        if which in ("all", "socle-degree") and not rep.socle_degree_conjecture:
            violations.append("socle-degree")
        entry["violations"] = violations
        if violations:
            violation_count += 1
            fname = os.path.join(
                args.out, "counterexample-%d-%s.json" % (args.seed, name)
            )
            with open(fname, "w") as fh:
                json.dump(
                    render_arrangement_data(A, spec.eta), fh, sort_keys=True, indent=1
                )
            entry["counterexample_file"] = fname
        log.append(entry)
    return log, violation_count


def cmd_search(args):
    log, violations = conjecture_search(args)
    if getattr(args, "json", False):
        report = {
            "schema": SCHEMA,
            "command": "search",
            "input": vars_for_report(args),
            "results": {"entries": log, "violations": violations},
            "checks": [
                {
                    "name": "no-conjecture-violations",
                    "pass": violations == 0,
                    "detail": "%d violations" % violations,
                }
            ],
        }
        print(json.dumps(report, sort_keys=True, default=str))
    else:
        for entry in log:
            print(json.dumps(entry, sort_keys=True, default=str))
        print("searched %d arrangements, %d violations" % (len(log), violations))
    return 0 if violations == 0 else 1


def vars_for_report(args):
    return {
        "generator": args.generator,
        "nvars": args.nvars,
        "count": args.count,
        "seed": args.seed,
        "degree": args.degree,
        "min_size": args.min_size,
        "max_size": args.max_size,
        "conjectures": args.conjectures,
    }


# -- parser -------------------------------------------------------------------


def _add_input_options(p):
    p.add_argument("input", nargs="?", help="arrangement JSON file")
    p.add_argument("--example", help="built-in example name")
    p.add_argument("--json", action="store_true", help="machine-readable report")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="stalg",
        description="Solomon-Terao algebras and logarithmic derivation "
        "modules of hyperplane arrangements, over exact fields.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="intersection lattice and polynomials")
    _add_input_options(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("free", help="freeness, exponents or a certificate")
    _add_input_options(p)
    p.set_defaults(func=cmd_free)

    p = sub.add_parser("psi", help="the two-variable polynomial Psi(A;x,t)")
    _add_input_options(p)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("st", help="the Solomon-Terao algebra ST(A,eta)")
    _add_input_options(p)
    p.add_argument("--eta", default="default", help="'default' or a polynomial")
    p.add_argument("--degree", type=int, default=2, help="degree for default eta")
    p.add_argument("--report", choices=["json", "text"], help="report format")
    p.add_argument("--show-gb", action="store_true", help="print the ideal GB")
    p.set_defaults(func=cmd_st)

    p = sub.add_parser("analyze", help="full report on one arrangement")
    _add_input_options(p)
    p.add_argument("--eta", default="default")
    p.add_argument("--degree", type=int, default=2)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("coxeter", help="root system constructions")
    cox = p.add_subparsers(dest="action", required=True)
    q = cox.add_parser("roots", help="list positive roots with heights")
    q.add_argument("type", choices=list("ABCD"))
    q.add_argument("rank", type=int)
    q.add_argument("--json", action="store_true")
    q = cox.add_parser("weyl", help="the full reflection arrangement")
    q.add_argument("type", choices=list("ABCD"))
    q.add_argument("rank", type=int)
    q.add_argument("--json", action="store_true")
    q.add_argument("--save", help="write the arrangement file here")
    q = cox.add_parser("ideal", help="an ideal arrangement from root indices")
    q.add_argument("type", choices=list("ABCD"))
    q.add_argument("rank", type=int)
    q.add_argument("--roots", help="comma-separated indices into the positive roots")
    q.add_argument("--json", action="store_true")
    q.add_argument("--save")
    q = cox.add_parser("inversion", help="inversion arrangement of a permutation")
    q.add_argument("w", help="one-line notation, e.g. 4123")
    q.add_argument("--json", action="store_true")
    q.add_argument("--save")
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("verify", help="run the shipped verification suite")
    p.add_argument("--suite", default="all", help="all, fast, or a check name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", help="conjecture search over generated corpora")
    p.add_argument("--generator", default="random", help="random or sub:<example>")
    p.add_argument("--nvars", type=int, default=3)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--min-size", type=int, default=3)
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--degree", type=int, default=2)
    p.add_argument(
        "--conjectures",
        default="all",
        choices=["all", "factorization", "palindromic", "socle-degree"],
        help="which conjectures to evaluate",
    )
    p.add_argument("--out", default=".", help="directory for counterexample files")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ArithmeticError as exc:
        print("internal inconsistency: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
