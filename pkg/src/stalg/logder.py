"""Logarithmic derivation modules D^p, the two-variable generating
polynomial Psi(A;x,t) built from their Hilbert series, Saito freeness,
Terao factorization and tameness."""

from __future__ import annotations

from collections import namedtuple
from itertools import combinations, permutations

from .gb import (
    buchberger,
    free_resolution,
    hilbert_series_submodule,
    kernel_of_map,
    minimal_generators,
)
from .poly import (
    BivariatePoly,
    FreeModuleElement,
    HilbertSeries,
    Polynomial,
    upoly_mul,
    upoly_trim,
)


def der_basis_subsets(nvars, p):
    """Index sets for the wedge basis of p-fold derivations, in lex order."""
    return list(combinations(range(nvars), p))


class DerModule:
    """D^p of an arrangement: generators inside S^C(l,p), basis p-subsets
    at degree 0, with Groebner basis and Hilbert series attached."""

    def __init__(self, p, subsets, generators, gb, hilbert, minimal):
        self.p = p
        self.subsets = subsets
        self.generators = generators
        self.degrees = sorted(g.degree() for g in generators)
        self.gb = gb
        self.hilbert = hilbert
        self.minimal = minimal

    @property
    def rank(self):
        return len(self.subsets)

    def __repr__(self):
        return "DerModule(p=%d, degrees=%s)" % (self.p, self.degrees)


def contract(theta, alpha_coeffs, subsets, subsets_down):
    """Contraction of a p-derivation with the differential of a linear form.

    theta lives in S^len(subsets); the result lives in S^len(subsets_down)
    with components sum over T = U + {i} of sign * alpha_i * f_T, the sign
    being (-1)^position of i inside T.
    """
    field = theta.field
    nvars = theta.nvars
    down_index = {U: k for k, U in enumerate(subsets_down)}
    out = FreeModuleElement(field, nvars, len(subsets_down))
    for idx, f in theta.comps.items():
        T = subsets[idx]
        for a, i in enumerate(T):
            coeff = alpha_coeffs[i]
            if not coeff:
                continue
            U = T[:a] + T[a + 1 :]
            sign = -1 if a % 2 else 1
            piece = f * (coeff if sign == 1 else -coeff)
            k = down_index[U]
            cur = out.comps.get(k)
            tot = piece if cur is None else cur + piece
            if tot:
                out.comps[k] = tot
            elif k in out.comps:
                del out.comps[k]
    return out


def log_derivations(A, p):
    """Generators of D^p(A) as the kernel of the contraction constraints.

    Unknowns are the C(l,p) wedge components; for every hyperplane each
    component of the contraction with its form must vanish modulo the
    form.  Results are cached on the arrangement.
    """
    key = ("logder", p)
    if key in A._cache:
        return A._cache[key]
    field, nvars = A.field, A.nvars
    if not 0 <= p <= nvars:
        raise ValueError("p must lie between 0 and the variable count")
    subsets = der_basis_subsets(nvars, p)

    if p == 0 or not A.hyperplanes:
        gens = [
            FreeModuleElement.basis(field, nvars, len(subsets), k)
            for k in range(len(subsets))
        ]
        gb = buchberger(gens, rank=len(subsets))
        hs = HilbertSeries([len(subsets)], nvars)
        dm = DerModule(p, subsets, gens, gb, hs, True)
        A._cache[key] = dm
        return dm

    subsets_down = der_basis_subsets(nvars, p - 1)
    down_index = {U: k for k, U in enumerate(subsets_down)}
    rows = []
    moduli = []
    zero = Polynomial.zero(field, nvars)
    for h in A.hyperplanes:
        block = [[zero] * len(subsets) for _ in subsets_down]
        for col, T in enumerate(subsets):
            for a, i in enumerate(T):
                coeff = h.coeffs[i]
                if not coeff:
                    continue
                U = T[:a] + T[a + 1 :]
                sign = -1 if a % 2 else 1
                block[down_index[U]][col] = Polynomial.constant(
                    field, nvars, coeff if sign == 1 else -coeff
                )
        for r in block:
            rows.append(r)
            moduli.append(h.form)
    raw = kernel_of_map(rows, moduli, nvars=nvars, field=field)
    gens = minimal_generators(raw, rank=len(subsets))
    gb = buchberger(gens, rank=len(subsets))
    hs = hilbert_series_submodule(gb)
    dm = DerModule(p, subsets, gens, gb, hs, True)
    A._cache[key] = dm
    return dm


def contraction_condition_holds(A, theta, p):
    """Direct membership test for D^p: contract with every form and check
    componentwise divisibility by that form (vanishing on the hyperplane)."""
    subsets = der_basis_subsets(A.nvars, p)
    subsets_down = der_basis_subsets(A.nvars, p - 1)
    for h in A.hyperplanes:
        c = contract(theta, h.coeffs, subsets, subsets_down)
        for comp in c.comps.values():
            if A.restrict_polynomial(h, comp):
                return False
    return True


def solomon_terao_polynomial(A):
    """Psi(A;x,t) = sum_p N_p(x) (1-x-t)^p t^(l-p) / (1-x)^l, exactly.

    N_p is the Hilbert numerator of D^p at denominator (1-x)^l; failure of
    the exact division signals an inconsistency upstream.
    """
    if "psi" in A._cache:
        return A._cache["psi"]
    ell = A.nvars
    x = BivariatePoly.x()
    t = BivariatePoly.t()
    one = BivariatePoly.const(1)
    base = one - x - t
    total = BivariatePoly.zero()
    for p in range(ell + 1):
        hs = log_derivations(A, p).hilbert
        num = hs.numerator_at_denom(ell)
        total = total + BivariatePoly.from_x_poly(num) * (base**p) * (
            t ** (ell - p)
        )
    psi = total
    for _ in range(ell):
        nxt = psi.divide_exact_one_minus_x()
        if nxt is None:
            raise ArithmeticError(
                "Psi numerator is not divisible by (1-x)^l; "
                "the D^p Hilbert series are inconsistent"
            )
        psi = nxt
    A._cache["psi"] = psi
    return psi


AcyclicityReport = namedtuple("AcyclicityReport", ["exact", "residual"])


def check_acyclicity(A):
    """Check sum_p Hilb(D^p;x)(-x)^(l-p) = 0, i.e. Psi(A;x,-x) = 0."""
    if not A.hyperplanes:
        raise ValueError("acyclicity check needs a nonempty arrangement")
    psi = solomon_terao_polynomial(A)
    residual = psi.substitute_t([0, -1])
    return AcyclicityReport(not residual, residual)


FreenessReport = namedtuple(
    "FreenessReport", ["free", "exponents", "generator_degrees"]
)


def _poly_matrix_det(mat, field, nvars):
    """Determinant by permutation expansion (small matrices only)."""
    n = len(mat)
    det = Polynomial.zero(field, nvars)
    for perm in permutations(range(n)):
        sign = 1
        seen = list(perm)
        # parity via inversion count
        inv = sum(
            1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j]
        )
        sign = -1 if inv % 2 else 1
        term = Polynomial.constant(field, nvars, sign)
        zeroed = False
        for i in range(n):
            entry = mat[i][perm[i]]
            if not entry:
                zeroed = True
                break
            term = term * entry
        if not zeroed:
            det = det + term
    return det


def is_free(A):
    """Freeness via minimal generators plus Saito's criterion.

    More than l minimal generators refutes freeness outright; with exactly
    l, freeness holds iff their degrees sum to |A| and the coefficient
    matrix (theta_i(x_j)) has nonzero determinant (then automatically a
    scalar multiple of Q).
    """
    if "free" in A._cache:
        return A._cache["free"]
    ell = A.nvars
    dm = log_derivations(A, 1)
    degrees = sorted(g.degree() for g in dm.generators)
    if len(dm.generators) != ell:
        report = FreenessReport(False, None, degrees)
    elif sum(degrees) != A.size:
        report = FreenessReport(False, None, degrees)
    else:
        mat = [
            [g.component(j) for j in range(ell)] for g in dm.generators
        ]
        det = _poly_matrix_det(mat, A.field, ell)
        if det:
            report = FreenessReport(True, degrees, degrees)
        else:
            report = FreenessReport(False, None, degrees)
    A._cache["free"] = report
    return report


def terao_factorization_check(A):
    """pi(A;t) = prod (1 + d_i t) for a free arrangement."""
    report = is_free(A)
    if not report.free:
        raise ValueError("Terao factorization applies to free arrangements only")
    expected = [1]
    for d in report.exponents:
        expected = upoly_mul(expected, [1, d])
    return upoly_trim(A.poincare_polynomial()) == upoly_trim(expected)


def psi_free_form(exponents):
    """prod_i ( t*(1 + x + ... + x^(d_i - 1)) + x^(d_i) )."""
    t = BivariatePoly.t()
    out = BivariatePoly.const(1)
    for d in exponents:
        bracket = BivariatePoly.from_x_poly([1] * d) if d else BivariatePoly.zero()
        factor = t * bracket + BivariatePoly({(d, 0): 1})
        out = out * factor
    return out


def is_tame(A):
    """pd D^p <= l - p for every p; free or low-dimensional shortcut."""
    ell = A.nvars
    if ell <= 3 or is_free(A).free:
        return True
    for p in range(1, ell + 1):
        dm = log_derivations(A, p)
        res = free_resolution(dm.generators, rank=dm.rank)
        if res.length > ell - p:
            return False
    return True
