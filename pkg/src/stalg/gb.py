"""Buchberger engine for ideals and submodules of graded free modules.

Covers reduced Groebner bases, normal forms, syzygies (and through them
kernels of maps into direct sums of S/(form)), Hilbert series of
submodules via leading-term modules, minimal generators and minimal free
resolutions.  The module order is position-over-term on top of graded
reverse lexicographic, so a block of leading components acts as an
elimination block.
"""

from __future__ import annotations

from .poly import (
    FreeModuleElement,
    HilbertSeries,
    Polynomial,
    grevlex_key,
    mon_deg,
    mon_div,
    mon_divides,
    mon_lcm,
    mon_mul,
    module_key,
    upoly_add,
    upoly_mul,
    upoly_sub,
    upoly_trim,
)


def _wrap(f):
    """View a Polynomial as a rank-1 module element."""
    if isinstance(f, FreeModuleElement):
        return f
    el = FreeModuleElement(f.field, f.nvars, 1)
    if f:
        el.comps = {0: f}
    return el


def _reduce(elem, index, rank):
    """Full normal form of a module element against indexed monic reducers.

    index maps a component to a list of (lead_mon, element) with monic
    elements, scanned in order; first divisor wins.
    """
    work = {i: dict(p.terms) for i, p in elem.comps.items()}
    rem = {}
    field = elem.field
    nvars = elem.nvars
    while work:
        # leading surviving term
        comp = min(work)
        mons = work[comp]
        mon = max(mons, key=grevlex_key)
        coeff = mons[mon]
        reducer = None
        for lm, g in index.get(comp, ()):
            if mon_divides(lm, mon):
                reducer = (lm, g)
                break
        if reducer is None:
            rem.setdefault(comp, {})[mon] = coeff
            del mons[mon]
            if not mons:
                del work[comp]
            continue
        lm, g = reducer
        shift_mon = mon_div(mon, lm)
        for gi, gp in g.comps.items():
            tgt = work.get(gi)
            if tgt is None:
                tgt = work[gi] = {}
            for gm, gc in gp.terms.items():
                nm = mon_mul(gm, shift_mon)
                cur = tgt.get(nm)
                val = -(coeff * gc) if cur is None else cur - coeff * gc
                if val:
                    tgt[nm] = val
                else:
                    if cur is not None:
                        del tgt[nm]
            if not tgt:
                del work[gi]
    out = FreeModuleElement(field, nvars, elem.rank)
    for i, terms in rem.items():
        p = Polynomial(field, nvars)
        p.terms = terms
        out.comps[i] = p
    return out


class GroebnerBasis:
    """Reduced Groebner basis of an ideal or of a submodule of S^rank.

    elements are monic, mutually reduced, and sorted by decreasing leading
    term, which makes the basis unique for the order.  For ideals
    (rank == 1) the polynomial views are available via .polynomials().
    """

    def __init__(self, field, nvars, rank, elements, shifts=None):
        self.field = field
        self.nvars = nvars
        self.rank = rank
        self.shifts = tuple(shifts) if shifts is not None else (0,) * rank
        self.elements = elements
        self._index = {}
        for g in elements:
            c, m = g.leading_position()
            self._index.setdefault(c, []).append((m, g))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def normal_form(self, f):
        """Canonical remainder of f; zero iff f lies in the span."""
        poly_in = isinstance(f, Polynomial)
        r = _reduce(_wrap(f), self._index, self.rank)
        if poly_in:
            return r.component(0)
        return r

    def contains(self, f):
        return not self.normal_form(f)

    def polynomials(self):
        if self.rank != 1:
            raise ValueError("not an ideal basis")
        return [g.component(0) for g in self.elements]

    def leading_monomials_by_component(self):
        out = {i: [] for i in range(self.rank)}
        for g in self.elements:
            c, m = g.leading_position()
            out[c].append(m)
        return out

    def spair_check(self):
        """Assert every S-pair reduces to zero (direct GB certificate)."""
        els = self.elements
        for i in range(len(els)):
            ci, mi = els[i].leading_position()
            for j in range(i + 1, len(els)):
                cj, mj = els[j].leading_position()
                if ci != cj:
                    continue
                lcm = mon_lcm(mi, mj)
                s = els[i].mul_term(mon_div(lcm, mi), self.field(1)) - els[
                    j
                ].mul_term(mon_div(lcm, mj), self.field(1))
                if _reduce(s, self._index, self.rank):
                    return False
        return True


def buchberger(gens, rank=None, shifts=None):
    """Reduced Groebner basis of the ideal/submodule spanned by gens.

    Deterministic: pairs are processed by increasing lcm degree with ties
    broken by the module order and then by index.  The coprimality
    criterion applies only to ideals; the chain criterion applies whenever
    all three leading terms share a component.
    """
    gens = [g for g in gens if g]
    if not gens:
        if rank is None:
            raise ValueError("need rank for an empty generating set")
        return GroebnerBasis(None, 0, rank, [], shifts)
    first = gens[0]
    as_poly = isinstance(first, Polynomial)
    field = first.field
    nvars = first.nvars
    if as_poly:
        rank = 1
        gens = [_wrap(g) for g in gens]
    elif rank is None:
        rank = first.rank

    G = []
    leads = []

    def add_elem(g):
        g = g.monic()
        G.append(g)
        leads.append(g.leading_position())

    for g in gens:
        add_elem(g)

    def pair_key(i, j):
        ci, mi = leads[i]
        cj, mj = leads[j]
        lcm = mon_lcm(mi, mj)
        return (mon_deg(lcm), module_key(ci, lcm), j, i)

    pairs = {}
    done = set()
    for j in range(len(G)):
        for i in range(j):
            if leads[i][0] == leads[j][0]:
                pairs[(i, j)] = pair_key(i, j)

    index = {}
    for g in G:
        c, m = g.leading_position()
        index.setdefault(c, []).append((m, g))

    while pairs:
        (i, j) = min(pairs, key=lambda p: pairs[p])
        del pairs[(i, j)]
        done.add((i, j))
        ci, mi = leads[i]
        cj, mj = leads[j]
        lcm = mon_lcm(mi, mj)
        # Buchberger's first criterion (ideals only; fails for modules)
        if rank == 1 and lcm == mon_mul(mi, mj):
            continue
        # chain criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j) or leads[k][0] != ci:
                continue
            if mon_divides(leads[k][1], lcm):
                pik = (min(i, k), max(i, k))
                pjk = (min(j, k), max(j, k))
                if pik in done and pjk in done:
                    skip = True
                    break
        if skip:
            continue
        one = field(1)
        s = G[i].mul_term(mon_div(lcm, mi), one) - G[j].mul_term(
            mon_div(lcm, mj), one
        )
        r = _reduce(s, index, rank)
        if r:
            add_elem(r)
            g = G[-1]
            c, m = g.leading_position()
            index.setdefault(c, []).append((m, g))
            new = len(G) - 1
            for k in range(new):
                if leads[k][0] == c:
                    pairs[(k, new)] = pair_key(k, new)

    # minimalize: drop elements whose lead is divisible by another lead
    keep = []
    for i in range(len(G)):
        ci, mi = leads[i]
        redundant = False
        for j in range(len(G)):
            if i == j:
                continue
            cj, mj = leads[j]
            if cj == ci and mon_divides(mj, mi) and (mj != mi or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(i)

    # interreduce for the unique reduced basis
    kept = [G[i] for i in keep]
    reduced = []
    for i, g in enumerate(kept):
        others = reduced + kept[i + 1 :]
        idx = {}
        for h in others:
            c, m = h.leading_position()
            idx.setdefault(c, []).append((m, h))
        r = _reduce(g, idx, rank).monic()
        reduced.append(r)
    reduced.sort(key=lambda g: module_key(*g.leading_position()), reverse=True)
    return GroebnerBasis(field, nvars, rank, reduced, shifts)


def normal_form(f, gb):
    """Remainder of f modulo a GroebnerBasis."""
    return gb.normal_form(f)


# -- minimal generators ------------------------------------------------------


def minimal_generators(gens, rank=None, shifts=None):
    """Minimal homogeneous generating subset, processed by increasing degree.

    A generator is dropped when it already lies in the submodule generated
    by the retained ones (membership by normal form).
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    as_poly = isinstance(gens[0], Polynomial)
    if as_poly:
        items = [(g.degree(), k, _wrap(g)) for k, g in enumerate(gens)]
        rank = 1
        shifts = None
    else:
        rank = rank if rank is not None else gens[0].rank
        items = [(g.degree(shifts), k, g) for k, g in enumerate(gens)]
    for d, _, g in items:
        if not g.is_homogeneous(shifts):
            raise ValueError("minimal generators need homogeneous input")
    items.sort(key=lambda t: (t[0], t[1]))
    retained = []
    gb = None
    for d, _, g in items:
        if gb is not None and not gb.normal_form(g):
            continue
        retained.append(g)
        gb = buchberger(retained, rank=rank, shifts=shifts)
    if as_poly:
        return [g.component(0) for g in retained]
    return retained


# -- syzygies and kernels ----------------------------------------------------


def syzygies(gens, rank=None, shifts=None):
    """Generators of the syzygy module of gens inside S^len(gens).

    Computed from a Groebner basis of the graph module {g_i + e_i} under
    the position-over-term order: elements supported only on the tracking
    block are exactly the syzygies.
    """
    gens = [(_wrap(g) if isinstance(g, Polynomial) else g) for g in gens]
    if not gens:
        return []
    field = gens[0].field
    nvars = gens[0].nvars
    rank = rank if rank is not None else gens[0].rank
    n = len(gens)
    big = []
    for k, g in enumerate(gens):
        el = FreeModuleElement(field, nvars, rank + n)
        el.comps = dict(g.comps)
        el.comps[rank + k] = Polynomial.constant(field, nvars, 1)
        big.append(el)
    G = buchberger(big, rank=rank + n)
    out = []
    for g in G:
        if all(i >= rank for i in g.comps):
            el = FreeModuleElement(field, nvars, n)
            el.comps = {i - rank: p for i, p in g.comps.items()}
            out.append(el)
    return out


def kernel_of_map(rows, moduli, nvars=None, field=None):
    """Kernel of S^a -> sum_k S/(m_k), f |-> (sum_j rows[k][j] f_j mod m_k).

    rows is a c x a matrix of Polynomials and moduli the list of m_k; a
    zero modulus means the plain free target S for that row.  Implemented
    as syzygies of the augmented columns [rows | diag(m)] projected to the
    first a coordinates.
    """
    c = len(rows)
    if c == 0:
        raise ValueError("kernel_of_map needs at least one constraint row")
    a = len(rows[0])
    probe = None
    for r in rows:
        for p in r:
            if isinstance(p, Polynomial):
                probe = p
                break
        if probe:
            break
    if probe is None:
        for m in moduli:
            if isinstance(m, Polynomial):
                probe = m
                break
    field = field or probe.field
    nvars = nvars if nvars is not None else probe.nvars

    cols = []
    for j in range(a):
        el = FreeModuleElement(field, nvars, c)
        el.comps = {k: rows[k][j] for k in range(c) if rows[k][j]}
        cols.append(el)
    aux = []
    for k, m in enumerate(moduli):
        if m:
            el = FreeModuleElement(field, nvars, c)
            el.comps = {k: m}
            aux.append(el)
    syz = syzygies(cols + aux, rank=c)
    out = []
    seen = []
    for s in syz:
        el = FreeModuleElement(field, nvars, a)
        el.comps = {i: p for i, p in s.comps.items() if i < a}
        if el and el not in seen:
            seen.append(el)
            out.append(el)
    return out


# -- Hilbert series ----------------------------------------------------------


def _minimalize_monomials(mons):
    out = []
    for m in sorted(mons, key=lambda m: (mon_deg(m), m)):
        if not any(mon_divides(g, m) for g in out):
            out.append(m)
    return out


def monomial_quotient_numerator(mons, nvars):
    """Numerator N with Hilb(S/(mons); x) = N/(1-x)^nvars.

    Recursive pivot-variable splitting on the variable hitting the most
    generators; base case is a set of pure powers (a monomial complete
    intersection).
    """
    mons = _minimalize_monomials(mons)
    if any(mon_deg(m) == 0 for m in mons):
        return []
    if not mons:
        return [1]
    impure = [m for m in mons if sum(1 for e in m if e) > 1]
    if not impure:
        # pure powers in distinct variables: N = prod (1 - x^deg)
        out = [1]
        for m in mons:
            factor = [1] + [0] * (mon_deg(m) - 1) + [-1]
            out = upoly_mul(out, factor)
        return out
    counts = [0] * nvars
    for m in impure:
        for i, e in enumerate(m):
            if e:
                counts[i] += 1
    piv = max(range(nvars), key=lambda i: counts[i])
    pivot = tuple(1 if i == piv else 0 for i in range(nvars))
    plus = _minimalize_monomials(mons + [pivot])
    colon = _minimalize_monomials(
        [tuple(e - p if e >= p else 0 for e, p in zip(m, pivot)) for m in mons]
    )
    n_plus = monomial_quotient_numerator(plus, nvars)
    n_colon = monomial_quotient_numerator(colon, nvars)
    return upoly_trim(upoly_add(n_plus, upoly_mul([0, 1], n_colon)))


def hilbert_series_quotient(gb):
    """Hilbert series of S^rank/M from the leading-term module of M."""
    leads = gb.leading_monomials_by_component()
    total = []
    for i in range(gb.rank):
        n_i = monomial_quotient_numerator(leads.get(i, []), gb.nvars)
        total = upoly_add(total, [0] * gb.shifts[i] + n_i if gb.shifts[i] else n_i)
    return HilbertSeries(total, gb.nvars)


def hilbert_series_submodule(gb):
    """Hilbert series of the submodule M itself, denominator (1-x)^nvars."""
    for g in gb:
        if not g.is_homogeneous(gb.shifts):
            raise ValueError("Hilbert series needs homogeneous generators")
    leads = gb.leading_monomials_by_component()
    total = []
    for i in range(gb.rank):
        n_quot = monomial_quotient_numerator(leads.get(i, []), gb.nvars)
        n_mod = upoly_sub([1], n_quot)
        total = upoly_add(total, [0] * gb.shifts[i] + n_mod if gb.shifts[i] else n_mod)
    return HilbertSeries(total, gb.nvars)


# -- zero-dimensional ideals -------------------------------------------------


def is_zero_dimensional(gb):
    """Every variable has a pure power among the leading terms (rank 1)."""
    if gb.rank != 1:
        raise ValueError("zero-dimensionality check is for ideals")
    if gb.nvars == 0:
        return True
    leads = gb.leading_monomials_by_component().get(0, [])
    for i in range(gb.nvars):
        found = False
        for m in leads:
            if m[i] and all(e == 0 for j, e in enumerate(m) if j != i):
                found = True
                break
        if not found:
            return False
    return True


def standard_monomials(gb):
    """Monomials outside the leading-term ideal, grouped by degree.

    Only valid for zero-dimensional ideals; enumeration stops at the first
    empty degree (the complement is closed under division).
    """
    leads = gb.leading_monomials_by_component().get(0, [])
    nvars = gb.nvars
    by_degree = []
    current = [(0,) * nvars]
    while current:
        std = [m for m in current if not any(mon_divides(g, m) for g in leads)]
        if not std:
            break
        by_degree.append(sorted(std, key=grevlex_key, reverse=True))
        nxt = set()
        for m in std:
            for i in range(nvars):
                nxt.add(m[:i] + (m[i] + 1,) + m[i + 1 :])
        current = sorted(nxt)
    return by_degree


# -- free resolutions --------------------------------------------------------


class FreeResolution:
    """Minimal free resolution recorded as generator degrees per level."""

    def __init__(self, levels):
        self.levels = [sorted(l) for l in levels]

    @property
    def length(self):
        return len(self.levels) - 1

    def hilbert_series(self, nvars):
        """Alternating sum of the shifted free pieces."""
        total = HilbertSeries([], 0)
        sign = 1
        for level in self.levels:
            num = []
            for d in level:
                num = upoly_add(num, [0] * d + [1])
            piece = HilbertSeries(upoly_trim([sign * c for c in num]), nvars)
            total = total + piece
            sign = -sign
        return total

    def __repr__(self):
        return "FreeResolution(%s)" % (self.levels,)


def free_resolution(gens, rank=None, shifts=None):
    """Minimal free resolution of the submodule generated by gens.

    Minimal generators are taken at every level, so the boundary matrices
    have entries in the maximal ideal and the length equals the projective
    dimension (Hilbert's syzygy theorem bounds the recursion).
    """
    gens = [(_wrap(g) if isinstance(g, Polynomial) else g) for g in gens if g]
    if not gens:
        return FreeResolution([])
    rank = rank if rank is not None else gens[0].rank
    shifts = tuple(shifts) if shifts is not None else (0,) * rank
    levels = []
    current = gens
    cur_rank, cur_shifts = rank, shifts
    while current:
        mins = minimal_generators(current, rank=cur_rank, shifts=cur_shifts)
        degs = [g.degree(cur_shifts) for g in mins]
        levels.append(degs)
        syz = syzygies(mins, rank=cur_rank)
        current = syz
        cur_rank = len(mins)
        cur_shifts = tuple(degs)
    return FreeResolution(levels)


def projective_dimension(gens, rank=None, shifts=None, quotient=False):
    """Projective dimension of the submodule (or of S^rank/M with quotient=True)."""
    gens = [g for g in gens if g]
    if quotient:
        if not gens:
            return 0
        res = free_resolution(gens, rank=rank, shifts=shifts)
        if any(d <= 0 for d in res.levels[0]):
            raise ValueError("quotient presentation needs generators in the maximal ideal")
        return res.length + 1
    if not gens:
        raise ValueError("projective dimension of the zero module is undefined")
    return free_resolution(gens, rank=rank, shifts=shifts).length
