"""Verification driver: the headline identities run over the shipped corpus.

Each criterion returns (passed, detail) so the CLI and the test suite can
share one implementation.  Exact arithmetic throughout: every comparison
is equality, no tolerances.
"""

from __future__ import annotations

import math
import time
from itertools import permutations

from .coxeter import (
    RootSystem,
    all_lower_ideals,
    bruhat_interval_size,
    ideal_arrangement,
    ideal_exponents,
    inversion_arrangement,
    lowest_invariant,
)
from .examples import (
    corpus,
    ex4_arrangement,
    get_example,
    notsplit_arrangement,
    schubert_presentation_4123,
)
from .gb import buchberger
from .logder import (
    check_acyclicity,
    is_free,
    psi_free_form,
    solomon_terao_polynomial,
)
from .poly import Polynomial, upoly_mul, upoly_trim
from .stalgebra import (
    analyze,
    default_eta,
    exists_nilpotent_linear,
    socle_witness,
    st_algebra,
    verify_eta,
)
from .scalars import QQ


def _diagonal_eta(field, nvars, coeffs, degree=2):
    return Polynomial(
        field,
        nvars,
        {
            tuple(degree if j == i else 0 for j in range(nvars)): field(c)
            for i, c in enumerate(coeffs)
        },
    )


def free_inversion_permutations():
    """All w in S_4 whose inversion arrangement is free."""
    out = []
    for w in permutations((1, 2, 3, 4)):
        if is_free(inversion_arrangement(w)).free:
            out.append(w)
    return out


def free_corpus_names():
    names = [
        "boolean-1",
        "boolean-2",
        "boolean-3",
        "boolean-4",
        "pencil-3",
        "braid-3",
        "weyl-A2",
        "weyl-B2",
        "weyl-A3",
    ]
    names += [n for n in (name for name, _ in corpus()) if n.startswith("ideal-")]
    return names


def random_arrangements(nvars, count, seed, min_size=3, max_size=6):
    """Deterministic small-integer arrangements for sweep corpora."""
    import random as _random

    rng = _random.Random(seed)
    out = []
    attempts = 0
    while len(out) < count and attempts < count * 50:
        attempts += 1
        size = rng.randint(min_size, max_size)
        vecs = []
        guard = 0
        while len(vecs) < size and guard < 200:
            guard += 1
            v = [rng.randint(-2, 2) for _ in range(nvars)]
            if not any(v):
                continue
            vecs.append(v)
        from .arr import Arrangement

        A = Arrangement(QQ, nvars, vecs)
        if A.size >= min_size:
            out.append(A)
    return out


# -- criteria ------------------------------------------------------------


def criterion_ex4_hilbert():
    """ST(xyz(x+y+z), sum of squares) has Hilbert vector [1,3,5,4,1]."""
    t0 = time.time()
    A = ex4_arrangement()
    st = st_algebra(A, default_eta(A, 2))
    elapsed = time.time() - t0
    ok = st.hilbert_vector == [1, 3, 5, 4, 1] and elapsed < 10
    return ok, "hilbert=%s time=%.2fs" % (st.hilbert_vector, elapsed)


def criterion_notsplit():
    """The sqrt(2) arrangement: Hilbert vector, printed generators, freeness, pi."""
    t0 = time.time()
    A = notsplit_arrangement()
    K = A.field
    st = st_algebra(A, default_eta(A, 2))
    hv_ok = st.hilbert_vector == [1, 3, 5, 6, 6, 6, 4, 1]
    x = Polynomial.variable(K, 3, 0)
    y = Polynomial.variable(K, 3, 1)
    z = Polynomial.variable(K, 3, 2)
    printed = [
        x**2 + y**2 + z**2,
        z**3 - y * z**2,
        y**6 - y**5 * z,
        y**6 + 3 * y**4 * z**2,
    ]
    gens_ok = all(not st.gb.normal_form(g) for g in printed)
    free_ok = not is_free(A).free
    pi_ok = A.poincare_polynomial() == upoly_mul([1, 1], upoly_mul([1, 3], [1, 3]))
    elapsed = time.time() - t0
    ok = hv_ok and gens_ok and free_ok and pi_ok and elapsed < 60
    return ok, "hilbert=%s gens_in_ideal=%s nonfree=%s pi_ok=%s time=%.2fs" % (
        st.hilbert_vector,
        gens_ok,
        free_ok,
        pi_ok,
        elapsed,
    )


def _free_case_product(exponents, d):
    out = [1]
    for e in exponents:
        out = upoly_mul(out, [1] * (e + d - 2 + 1))
    return out


def criterion_free_forward():
    """Free corpus with d=2: Hilb(ST) = prod(1+x+...+x^(d_i)), socdeg = |A|."""
    bad = []
    names = free_corpus_names()
    seen = 0
    for name in names:
        A = get_example(name)
        report = is_free(A)
        if not report.free:
            return False, "%s expected to be free" % name
        st = st_algebra(A, default_eta(A, 2))
        expected = _free_case_product(report.exponents, 2)
        if st.hilbert_vector != expected or st.top_degree != A.size:
            bad.append(name)
        seen += 1
    for w in free_inversion_permutations():
        A = inversion_arrangement(w)
        report = is_free(A)
        st = st_algebra(A, _diagonal_eta(QQ, 4, [1, 1, 1, 1]))
        expected = _free_case_product(report.exponents, 2)
        if st.hilbert_vector != expected or st.top_degree != A.size:
            bad.append("inversion-%s" % "".join(map(str, w)))
        seen += 1
    return not bad, "%d free arrangements checked, failures: %s" % (seen, bad or "none")


def sweep_corpus_l3(minimum=20):
    """At least `minimum` arrangements in 3 variables, mixed free/non-free."""
    out = [(name, A) for name, A in corpus(max_vars=3) if A.nvars == 3]
    need = max(0, minimum - len(out))
    for k, A in enumerate(random_arrangements(3, need, seed=1)):
        out.append(("random-%d" % k, A))
    return out


def criterion_ci_equivalence():
    """CI(ST) iff free, with matching recovered exponents, on >= 20 cases."""
    cases = sweep_corpus_l3()
    mism = []
    free_count = 0
    for name, A in cases:
        st = st_algebra(A, default_eta(A, 2))
        rep = analyze(st)
        fr = is_free(A)
        if rep.complete_intersection != fr.free:
            mism.append("%s: CI=%s free=%s" % (name, rep.complete_intersection, fr.free))
            continue
        if fr.free:
            free_count += 1
            if rep.recovered_exponents != sorted(fr.exponents):
                mism.append(
                    "%s: recovered %s vs %s"
                    % (name, rep.recovered_exponents, fr.exponents)
                )
    detail = "%d arrangements (%d free), mismatches: %s" % (
        len(cases),
        free_count,
        mism or "none",
    )
    return len(cases) >= 20 and not mism, detail


def criterion_psi_identities():
    """Psi is a polynomial, Psi(1,t) = pi, Psi(x,-x) = 0, free product form."""
    bad = []
    for name, A in corpus():
        psi = solomon_terao_polynomial(A)  # raises if not a polynomial
        if upoly_trim(psi.substitute_x_one()) != upoly_trim(A.poincare_polynomial()):
            bad.append("%s: Psi(1,t) != pi" % name)
        if A.hyperplanes and not check_acyclicity(A).exact:
            bad.append("%s: Psi(x,-x) != 0" % name)
        fr = is_free(A)
        if fr.free and psi != psi_free_form(fr.exponents):
            bad.append("%s: free form mismatch" % name)
    return not bad, "corpus size %d, failures: %s" % (len(corpus()), bad or "none")


def criterion_tame_hilbert():
    """l <= 3 corpus: two validated etas, both Hilbert vectors = Psi(A;x,1)."""
    bad = []
    count = 0
    for name, A in corpus(max_vars=3):
        psi_x1 = solomon_terao_polynomial(A).substitute_t([1])
        etas = [
            _diagonal_eta(A.field, A.nvars, [1] * A.nvars),
            _diagonal_eta(A.field, A.nvars, list(range(2, A.nvars + 2))),
        ]
        for tag, eta in enumerate(etas):
            spec = verify_eta(A, eta)
            if not spec.valid:
                bad.append("%s: eta %d invalid" % (name, tag))
                continue
            st = st_algebra(A, spec)
            if upoly_trim(st.hilbert_vector) != upoly_trim(psi_x1):
                bad.append("%s: eta %d gives %s vs %s" % (name, tag, st.hilbert_vector, psi_x1))
        count += 1
    return not bad, "%d arrangements, failures: %s" % (count, bad or "none")


def criterion_socle_witness():
    """Q * det(Hessian eta) is nonzero and killed by every variable."""
    bad = []
    for name, A in corpus():
        st = st_algebra(A, default_eta(A, 2))
        w = socle_witness(st)
        if not (w.nonzero and w.in_socle):
            bad.append(name)
    return not bad, "failures: %s" % (bad or "none")


def criterion_coxeter():
    """Ideal exponents = dual partition, confirmed free; and the product
    identity prod(1+d_i) = |[e,w]| over every free inversion arrangement
    in S_4, exactly as stated."""
    bad = []
    for letter, rank in (("A", 2), ("A", 3), ("B", 2)):
        rs = RootSystem(letter, rank)
        pad = rs.dim - rs.rank
        for k, ideal in enumerate(all_lower_ideals(rs)):
            A = ideal_arrangement(ideal)
            expected = sorted(ideal_exponents(ideal) + [0] * pad)
            fr = is_free(A)
            if not fr.free or sorted(fr.exponents) != expected:
                bad.append("ideal-%s%d-%d: %s vs %s" % (letter, rank, k, fr, expected))
    for w in permutations((1, 2, 3, 4)):
        A = inversion_arrangement(w)
        fr = is_free(A)
        if not fr.free:
            continue
        prod = math.prod(1 + d for d in fr.exponents)
        interval = bruhat_interval_size(w)
        if prod != interval:
            bad.append(
                "inversion-%s: prod(1+d_i)=%d but |[e,w]|=%d "
                "(free arrangement, non-rationally-smooth Schubert cell; "
                "the product identity characterizes rational smoothness, "
                "not freeness alone)"
                % ("".join(map(str, w)), prod, interval)
            )
    return not bad, "failures: %s" % (bad or "none")


def criterion_nilpotent_witness():
    """Schubert presentation for 4123 has a square-zero linear form; the
    Solomon-Terao side has none."""
    pres = buchberger(schubert_presentation_4123())
    witness = exists_nilpotent_linear(pres)
    x = [Polynomial.variable(QQ, 4, i) for i in range(4)]
    paper_elem = x[0] + x[1] + x[2]
    paper_ok = (
        not pres.normal_form(paper_elem * paper_elem)
        and pres.normal_form(paper_elem)
    )
    A = inversion_arrangement("4123")
    st = st_algebra(A, lowest_invariant(4))
    st_witness = exists_nilpotent_linear(st.gb)
    ok = witness is not None and bool(paper_ok) and st_witness is None
    return ok, "schubert witness=%s paper_elem_ok=%s st_witness=%s" % (
        witness.str() if witness else None,
        bool(paper_ok),
        st_witness,
    )


def criterion_gorenstein_negative():
    """analyze(ex4): gorenstein = false, palindromic = false."""
    A = ex4_arrangement()
    rep = analyze(st_algebra(A, default_eta(A, 2)))
    ok = rep.gorenstein is False and rep.palindromic is False
    return ok, "gorenstein=%s palindromic=%s" % (rep.gorenstein, rep.palindromic)


CRITERIA = [
    ("ex4-hilbert-vector", criterion_ex4_hilbert),
    ("notsplit-sqrt2", criterion_notsplit),
    ("free-forward-factorization", criterion_free_forward),
    ("ci-freeness-equivalence", criterion_ci_equivalence),
    ("psi-identities", criterion_psi_identities),
    ("tame-hilbert-identity", criterion_tame_hilbert),
    ("socle-witness", criterion_socle_witness),
    ("coxeter-ideals-and-bruhat", criterion_coxeter),
    ("nilpotent-degree-one", criterion_nilpotent_witness),
    ("gorenstein-negative", criterion_gorenstein_negative),
]

FAST_CRITERIA = [
    "ex4-hilbert-vector",
    "notsplit-sqrt2",
    "tame-hilbert-identity",
    "nilpotent-degree-one",
    "gorenstein-negative",
]


def run_suite(suite="all"):
    """Run the named suite; returns a list of (name, passed, detail)."""
    selected = CRITERIA
    if suite == "fast":
        selected = [(n, f) for n, f in CRITERIA if n in FAST_CRITERIA]
    elif suite != "all":
        selected = [(n, f) for n, f in CRITERIA if n == suite]
        if not selected:
            raise ValueError("unknown suite %r" % (suite,))
    results = []
    for name, func in selected:
        t0 = time.time()
        try:
            ok, detail = func()
        except Exception as exc:  # surfaced as a failed check, not a crash
            ok, detail = False, "exception: %r" % (exc,)
        results.append((name, ok, "%s [%.1fs]" % (detail, time.time() - t0)))
    return results
