"""Sparse multivariate polynomials, monomial orders and Hilbert series."""

from __future__ import annotations

from fractions import Fraction

from .scalars import Scalar

# Monomials are tuples of non-negative exponents, one slot per variable.


def mon_deg(m):
    return sum(m)


def mon_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mon_divides(a, b):
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mon_div(a, b):
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def mon_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def grevlex_key(m):
    """Sort key for graded reverse lexicographic order (larger key = larger)."""
    return (sum(m), tuple(-e for e in reversed(m)))


def module_key(comp, m):
    """Position-over-term key: lower component index wins, then grevlex."""
    return (-comp, grevlex_key(m))


def default_names(nvars):
    if nvars <= 3:
        return ["x", "y", "z"][:nvars]
    return ["x%d" % (i + 1) for i in range(nvars)]


class Polynomial:
    """Sparse multivariate polynomial over a Field.

    terms maps exponent tuples to nonzero Scalars; the zero polynomial has
    no terms.  Instances are treated as immutable.
    """

    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field, nvars, terms=None):
        self.field = field
        self.nvars = nvars
        self.terms = {}
        if terms:
            for mon, c in terms.items() if isinstance(terms, dict) else terms:
                if not isinstance(c, Scalar):
                    c = field(c)
                if c:
                    cur = self.terms.get(mon)
                    tot = c if cur is None else cur + c
                    if tot:
                        self.terms[mon] = tot
                    elif mon in self.terms:
                        del self.terms[mon]

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(field, nvars):
        return Polynomial(field, nvars)

    @staticmethod
    def constant(field, nvars, value):
        c = value if isinstance(value, Scalar) else field(value)
        if not c:
            return Polynomial(field, nvars)
        return Polynomial(field, nvars, {(0,) * nvars: c})

    @staticmethod
    def variable(field, nvars, i):
        mon = tuple(1 if j == i else 0 for j in range(nvars))
        return Polynomial(field, nvars, {mon: field(1)})

    @staticmethod
    def monomial(field, nvars, mon, coeff=1):
        c = coeff if isinstance(coeff, Scalar) else field(coeff)
        if not c:
            return Polynomial(field, nvars)
        return Polynomial(field, nvars, {tuple(mon): c})

    @staticmethod
    def from_coeff_vector(field, coeffs):
        """Linear form sum(coeffs[i] * x_i)."""
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            s = c if isinstance(c, Scalar) else field(c)
            if s:
                terms[tuple(1 if j == i else 0 for j in range(n))] = s
        return Polynomial(field, n, terms)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self):
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(
                "variable count mismatch: %d vs %d" % (self.nvars, other.nvars)
            )

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Polynomial.constant(self.field, self.nvars, other)
        self._check(other)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            cur = terms.get(mon)
            tot = c if cur is None else cur + c
            if tot:
                terms[mon] = tot
            elif mon in terms:
                del terms[mon]
        out = Polynomial(self.field, self.nvars)
        out.terms = terms
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Polynomial(self.field, self.nvars)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Polynomial.constant(self.field, self.nvars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            c = other if isinstance(other, Scalar) else self.field(other)
            if not c:
                return Polynomial(self.field, self.nvars)
            out = Polynomial(self.field, self.nvars)
            out.terms = {m: v * c for m, v in self.terms.items()}
            return out
        self._check(other)
        terms = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mon = mon_mul(m1, m2)
                c = c1 * c2
                cur = terms.get(mon)
                tot = c if cur is None else cur + c
                if tot:
                    terms[mon] = tot
                elif mon in terms:
                    del terms[mon]
        out = Polynomial(self.field, self.nvars)
        out.terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Polynomial.constant(self.field, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def mul_monomial(self, mon, coeff):
        """Fast multiply by a single term."""
        out = Polynomial(self.field, self.nvars)
        out.terms = {mon_mul(m, mon): c * coeff for m, c in self.terms.items()}
        return out

    def partial(self, i):
        """Partial derivative with respect to variable i."""
        terms = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                nm = m[:i] + (e - 1,) + m[i + 1 :]
                nc = c * e
                cur = terms.get(nm)
                tot = nc if cur is None else cur + nc
                if tot:
                    terms[nm] = tot
        out = Polynomial(self.field, self.nvars)
        out.terms = terms
        return out

    def compose(self, images):
        """Substitute images[i] for variable i (all in the target ring)."""
        if len(images) != self.nvars:
            raise ValueError("need one image per variable")
        field = images[0].field if images else self.field
        tvars = images[0].nvars if images else self.nvars
        cache = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                cache[key] = images[i] ** e
            return cache[key]

        out = Polynomial(field, tvars)
        for m, c in self.terms.items():
            piece = Polynomial.constant(field, tvars, c)
            for i, e in enumerate(m):
                if e:
                    piece = piece * power(i, e)
            out = out + piece
        return out

    # -- leading data ------------------------------------------------------

    def leading_monomial(self):
        return max(self.terms, key=grevlex_key)

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def monic(self):
        if not self.terms:
            return self
        inv = self.leading_coeff().inverse()
        return self * inv

    def sorted_terms(self):
        """Terms sorted by decreasing monomial order (deterministic)."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def coeff(self, mon):
        return self.terms.get(tuple(mon), self.field(0))

    def homogeneous_part(self, d):
        out = Polynomial(self.field, self.nvars)
        out.terms = {m: c for m, c in self.terms.items() if sum(m) == d}
        return out

    # -- comparison and display ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            other = Polynomial.constant(self.field, self.nvars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return self.str()

    def str(self, names=None):
        if not self.terms:
            return "0"
        names = names or default_names(self.nvars)
        parts = []
        for m, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(names[i])
                elif e > 1:
                    factors.append("%s^%d" % (names[i], e))
            cs = c.str()
            if factors:
                if cs == "1":
                    body = "*".join(factors)
                elif cs == "-1":
                    body = "-" + "*".join(factors)
                elif ("+" in cs) or (" - " in cs):
                    body = "(%s)*%s" % (cs, "*".join(factors))
                else:
                    body = "%s*%s" % (cs, "*".join(factors))
            else:
                body = cs if ("+" not in cs and " - " not in cs) else "(%s)" % cs
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


class FreeModuleElement:
    """Element of a free module S^r, components stored sparsely by index."""

    __slots__ = ("field", "nvars", "rank", "comps")

    def __init__(self, field, nvars, rank, comps=None):
        self.field = field
        self.nvars = nvars
        self.rank = rank
        self.comps = {}
        if comps:
            for i, p in comps.items() if isinstance(comps, dict) else comps:
                if p:
                    cur = self.comps.get(i)
                    tot = p if cur is None else cur + p
                    if tot:
                        self.comps[i] = tot
                    elif i in self.comps:
                        del self.comps[i]

    @staticmethod
    def zero(field, nvars, rank):
        return FreeModuleElement(field, nvars, rank)

    @staticmethod
    def basis(field, nvars, rank, i):
        return FreeModuleElement(
            field, nvars, rank, {i: Polynomial.constant(field, nvars, 1)}
        )

    def is_zero(self):
        return not self.comps

    def __bool__(self):
        return bool(self.comps)

    def component(self, i):
        return self.comps.get(i, Polynomial.zero(self.field, self.nvars))

    def __add__(self, other):
        comps = dict(self.comps)
        for i, p in other.comps.items():
            cur = comps.get(i)
            tot = p if cur is None else cur + p
            if tot:
                comps[i] = tot
            elif i in comps:
                del comps[i]
        out = FreeModuleElement(self.field, self.nvars, self.rank)
        out.comps = comps
        return out

    def __neg__(self):
        out = FreeModuleElement(self.field, self.nvars, self.rank)
        out.comps = {i: -p for i, p in self.comps.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Scale by a Polynomial or Scalar."""
        out = FreeModuleElement(self.field, self.nvars, self.rank)
        out.comps = {}
        for i, p in self.comps.items():
            q = p * other
            if q:
                out.comps[i] = q
        return out

    __rmul__ = __mul__

    def mul_term(self, mon, coeff):
        out = FreeModuleElement(self.field, self.nvars, self.rank)
        out.comps = {i: p.mul_monomial(mon, coeff) for i, p in self.comps.items()}
        return out

    def leading_position(self):
        """(component, monomial) of the leading term under POT/grevlex."""
        best = None
        bestkey = None
        for i, p in self.comps.items():
            m = p.leading_monomial()
            k = module_key(i, m)
            if bestkey is None or k > bestkey:
                bestkey = k
                best = (i, m)
        return best

    def leading_coeff(self):
        i, m = self.leading_position()
        return self.comps[i].terms[m]

    def monic(self):
        if not self.comps:
            return self
        return self * self.leading_coeff().inverse()

    def degree(self, shifts=None):
        """Degree with component shifts, or None when zero."""
        if not self.comps:
            return None
        out = None
        for i, p in self.comps.items():
            d = p.degree() + (shifts[i] if shifts else 0)
            if out is None or d > out:
                out = d
        return out

    def is_homogeneous(self, shifts=None):
        degs = set()
        for i, p in self.comps.items():
            if not p.is_homogeneous():
                return False
            degs.add(p.degree() + (shifts[i] if shifts else 0))
        return len(degs) <= 1

    def __eq__(self, other):
        if not isinstance(other, FreeModuleElement):
            return NotImplemented
        return (self.rank, self.nvars) == (other.rank, other.nvars) and (
            self.comps == other.comps
        )

    def __repr__(self):
        if not self.comps:
            return "0"
        return " + ".join(
            "(%s)*e%d" % (p.str(), i) for i, p in sorted(self.comps.items())
        )


# -- integer univariate polynomials (ascending coefficient lists) ----------


def upoly_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def upoly_add(a, b):
    n = max(len(a), len(b))
    return upoly_trim(
        [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]
    )


def upoly_sub(a, b):
    return upoly_add(a, [-x for x in b])


def upoly_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return upoly_trim(out)


def upoly_scale(a, c):
    return upoly_trim([c * x for x in a])


def upoly_eval(a, x):
    out = 0
    for c in reversed(a):
        out = out * x + c
    return out


def upoly_divmod(a, b):
    """Division with remainder; exact only when coefficients stay integral."""
    a = list(a)
    b = upoly_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    q = [0] * max(len(a) - len(b) + 1, 0)
    for k in range(len(a) - len(b), -1, -1):
        if a[k + len(b) - 1] % b[-1] != 0:
            return None, a
        c = a[k + len(b) - 1] // b[-1]
        if c:
            q[k] = c
            for i, bc in enumerate(b):
                a[k + i] -= c * bc
    return q, upoly_trim(a)


def upoly_str(a, var="x"):
    a = upoly_trim(a)
    if not a:
        return "0"
    parts = []
    for k, c in enumerate(a):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            pw = var if k == 1 else "%s^%d" % (var, k)
            if c == 1:
                parts.append(pw)
            elif c == -1:
                parts.append("-" + pw)
            else:
                parts.append("%d*%s" % (c, pw))
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def quantum_integer(e):
    """[e+1]_x = 1 + x + ... + x^e."""
    return [1] * (e + 1)


def is_palindromic(coeffs):
    """True when the trimmed coefficient vector reads the same reversed."""
    a = upoly_trim(coeffs)
    if not a:
        return True
    return a == a[::-1]


def factor_quantum_integers(coeffs):
    """Write a polynomial as a product of quantum integers [e_i+1]_x.

    Returns the sorted list of e_i, or None when no such factorization
    exists.  Greedy division by increasing e with full backtracking.
    """
    a = upoly_trim(coeffs)
    if not a or a[0] != 1:
        return None

    def search(p, emin):
        if p == [1]:
            return []
        deg = len(p) - 1
        for e in range(emin, deg + 1):
            q, r = upoly_divmod(p, quantum_integer(e))
            if q is not None and not r:
                rest = search(q, e)
                if rest is not None:
                    return [e] + rest
        return None

    return search(a, 1)


class HilbertSeries:
    """A series numerator/(1-x)^e with integer numerator; finite when e=0."""

    __slots__ = ("numerator", "denom_exp")

    def __init__(self, numerator, denom_exp):
        num = upoly_trim(numerator)
        # cancel common factors of (1-x)
        while denom_exp > 0 and num and upoly_eval(num, 1) == 0:
            q, r = upoly_divmod(num, [1, -1])
            if q is None or r:
                break
            num = upoly_trim(q)
            denom_exp -= 1
        if not num:
            denom_exp = 0
        self.numerator = num
        self.denom_exp = denom_exp

    @property
    def finite(self):
        return self.denom_exp == 0

    def coefficients(self):
        """Graded dimensions for a finite series."""
        if not self.finite:
            raise ValueError("series is not finite")
        return list(self.numerator)

    def value_at_one(self):
        """Total dimension; rejects evaluation at the pole."""
        if not self.finite:
            raise ValueError("cannot evaluate an infinite series at x = 1")
        return upoly_eval(self.numerator, 1)

    def coefficient(self, d):
        """Coefficient of x^d in the expanded series."""
        from math import comb

        out = 0
        for k, c in enumerate(self.numerator):
            if k > d:
                break
            if c:
                if self.denom_exp == 0:
                    if k == d:
                        out += c
                else:
                    out += c * comb(d - k + self.denom_exp - 1, self.denom_exp - 1)
        return out

    def numerator_at_denom(self, e):
        """Numerator rescaled to denominator exponent e >= denom_exp."""
        if e < self.denom_exp:
            raise ValueError("cannot lower the denominator exponent exactly")
        num = self.numerator
        for _ in range(e - self.denom_exp):
            num = upoly_mul(num, [1, -1])
        return num

    def __add__(self, other):
        e = max(self.denom_exp, other.denom_exp)
        return HilbertSeries(
            upoly_add(self.numerator_at_denom(e), other.numerator_at_denom(e)), e
        )

    def __sub__(self, other):
        e = max(self.denom_exp, other.denom_exp)
        return HilbertSeries(
            upoly_sub(self.numerator_at_denom(e), other.numerator_at_denom(e)), e
        )

    def shift(self, d):
        """Multiply by x^d (degree shift)."""
        return HilbertSeries([0] * d + list(self.numerator), self.denom_exp)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        return (
            self.numerator == other.numerator and self.denom_exp == other.denom_exp
        )

    def __repr__(self):
        if self.finite:
            return "HilbertSeries(%s)" % (self.numerator,)
        return "HilbertSeries(%s, (1-x)^-%d)" % (self.numerator, self.denom_exp)


class BivariatePoly:
    """Integer-coefficient polynomial in x and t, stored sparsely."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {}
        if coeffs:
            for key, c in coeffs.items() if isinstance(coeffs, dict) else coeffs:
                if c:
                    self.coeffs[key] = self.coeffs.get(key, 0) + c
                    if not self.coeffs[key]:
                        del self.coeffs[key]

    @staticmethod
    def zero():
        return BivariatePoly()

    @staticmethod
    def const(c):
        return BivariatePoly({(0, 0): c} if c else {})

    @staticmethod
    def x():
        return BivariatePoly({(1, 0): 1})

    @staticmethod
    def t():
        return BivariatePoly({(0, 1): 1})

    @staticmethod
    def from_x_poly(upoly):
        return BivariatePoly({(k, 0): c for k, c in enumerate(upoly) if c})

    def __add__(self, other):
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, 0) + c
            if not out[key]:
                del out[key]
        r = BivariatePoly()
        r.coeffs = out
        return r

    def __neg__(self):
        r = BivariatePoly()
        r.coeffs = {k: -c for k, c in self.coeffs.items()}
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            r = BivariatePoly()
            if other:
                r.coeffs = {k: c * other for k, c in self.coeffs.items()}
            return r
        out = {}
        for (a, b), c1 in self.coeffs.items():
            for (d, e), c2 in other.coeffs.items():
                key = (a + d, b + e)
                out[key] = out.get(key, 0) + c1 * c2
                if not out[key]:
                    del out[key]
        r = BivariatePoly()
        r.coeffs = out
        return r

    __rmul__ = __mul__

    def __pow__(self, n):
        out = BivariatePoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def substitute_t(self, t_of_x):
        """Substitute t = t_of_x (an integer x-polynomial); returns x-poly."""
        out = []
        for (a, b), c in self.coeffs.items():
            piece = [0] * a + [c]
            for _ in range(b):
                piece = upoly_mul(piece, t_of_x)
            out = upoly_add(out, piece)
        return out

    def substitute_x_one(self):
        """Set x = 1; returns an integer t-polynomial."""
        out = {}
        for (a, b), c in self.coeffs.items():
            out[b] = out.get(b, 0) + c
        if not out:
            return []
        t = [0] * (max(out) + 1)
        for b, c in out.items():
            t[b] = c
        return upoly_trim(t)

    def divide_exact_one_minus_x(self):
        """Exact division by (1 - x); returns None when not divisible."""
        # split into t-slices, divide each x-polynomial
        slices = {}
        for (a, b), c in self.coeffs.items():
            slices.setdefault(b, {})[a] = c
        out = {}
        for b, sl in slices.items():
            xs = [0] * (max(sl) + 1)
            for a, c in sl.items():
                xs[a] = c
            q, r = upoly_divmod(xs, [1, -1])
            if q is None or r:
                return None
            for a, c in enumerate(q):
                if c:
                    out[(a, b)] = c
        r = BivariatePoly()
        r.coeffs = out
        return r

    def x_degree(self):
        return max((a for a, _ in self.coeffs), default=0)

    def t_degree(self):
        return max((b for _, b in self.coeffs), default=0)

    def coefficient_grid(self):
        """Dense grid g[i][j] = coefficient of x^i t^j."""
        nx, nt = self.x_degree() + 1, self.t_degree() + 1
        grid = [[0] * nt for _ in range(nx)]
        for (a, b), c in self.coeffs.items():
            grid[a][b] = c
        return grid

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for (a, b), c in sorted(self.coeffs.items()):
            body = str(c)
            if a:
                body += "*x" + ("^%d" % a if a > 1 else "")
            if b:
                body += "*t" + ("^%d" % b if b > 1 else "")
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")
