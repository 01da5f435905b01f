"""Exact field arithmetic over Q and simple extensions Q[s]/(m(s))."""

from __future__ import annotations

from fractions import Fraction


class FieldMismatchError(ValueError):
    """Raised when two scalars from different fields are combined."""


def _poly_divmod(num, den):
    """Divide dense Fraction polynomials (ascending coefficients)."""
    num = list(num)
    dlead = den[-1]
    ddeg = len(den) - 1
    quo = [Fraction(0)] * max(len(num) - ddeg, 0)
    for k in range(len(num) - 1, ddeg - 1, -1):
        c = num[k] / dlead
        if c:
            quo[k - ddeg] = c
            for i, dc in enumerate(den):
                num[k - ddeg + i] -= c * dc
    while num and not num[-1]:
        num.pop()
    return quo, num


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _rational_roots(coeffs):
    """All rational roots of a polynomial with Fraction coefficients."""
    # clear denominators to integer coefficients
    den = 1
    for c in coeffs:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    while ints and ints[-1] == 0:
        ints.pop()
    if not ints:
        return [Fraction(0)]
    roots = []
    if ints[0] == 0:
        roots.append(Fraction(0))
        while ints and ints[0] == 0:
            ints.pop(0)
    a0, an = abs(ints[0]), abs(ints[-1])
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if not sum(c * cand**k for k, c in enumerate(ints)):
                    roots.append(cand)
    return roots


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n):
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


class Field:
    """Descriptor for the base field: the rationals or Q[s]/(m(s)).

    minpoly is stored as ascending Fraction coefficients and must be monic
    of degree >= 2.  Irreducibility is certified by the rational-root test
    for degrees 2 and 3; higher degrees need trusted=True.
    """

    __slots__ = ("kind", "minpoly", "symbol", "trusted")

    def __init__(self, kind, minpoly=None, symbol="s", trusted=False):
        self.kind = kind
        self.symbol = symbol
        self.trusted = trusted
        if kind == "rational":
            self.minpoly = None
        elif kind == "extension":
            mp = tuple(Fraction(c) for c in minpoly)
            if len(mp) < 3:
                raise ValueError("extension minpoly must have degree >= 2")
            if mp[-1] != 1:
                raise ValueError("extension minpoly must be monic")
            deg = len(mp) - 1
            if deg <= 3:
                if _rational_roots(mp):
                    raise ValueError("minpoly %s is reducible over Q" % (minpoly,))
            elif not trusted:
                raise ValueError(
                    "irreducibility not checked beyond degree 3; pass trusted=True"
                )
            self.minpoly = mp
        else:
            raise ValueError("unknown field kind %r" % (kind,))

    @property
    def degree(self):
        return 1 if self.kind == "rational" else len(self.minpoly) - 1

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Field):
            return NotImplemented
        return (self.kind, self.minpoly, self.symbol) == (
            other.kind,
            other.minpoly,
            other.symbol,
        )

    def __hash__(self):
        return hash((self.kind, self.minpoly, self.symbol))

    def __repr__(self):
        if self.kind == "rational":
            return "QQ"
        return "QQ[%s]/(%s)" % (self.symbol, self._minpoly_str())

    def _minpoly_str(self):
        parts = []
        for k, c in enumerate(self.minpoly):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("%s*%s" % (c, self.symbol) if c != 1 else self.symbol)
            else:
                head = "" if c == 1 else "%s*" % c
                parts.append("%s%s^%d" % (head, self.symbol, k))
        return " + ".join(parts).replace("+ -", "- ")

    # -- element constructors ------------------------------------------

    def __call__(self, value):
        """Embed an int or Fraction into the field."""
        q = Fraction(value)
        if self.kind == "rational":
            return Scalar(self, q)
        vec = [Fraction(0)] * self.degree
        vec[0] = q
        return Scalar(self, tuple(vec))

    def zero(self):
        return self(0)

    def one(self):
        return self(1)

    def gen(self):
        """The adjoined root (extension fields only)."""
        if self.kind == "rational":
            raise ValueError("rational field has no generator")
        vec = [Fraction(0)] * self.degree
        vec[1] = Fraction(1)
        return Scalar(self, tuple(vec))

    def element(self, coeffs):
        """Element from a coefficient vector in the power basis of the root."""
        if self.kind == "rational":
            coeffs = list(coeffs)
            if any(coeffs[1:]):
                raise ValueError("rational field takes a single coefficient")
            return self(coeffs[0] if coeffs else 0)
        vec = [Fraction(c) for c in coeffs]
        if len(vec) > self.degree:
            _, vec = _poly_divmod(vec, list(self.minpoly))
        vec = vec + [Fraction(0)] * (self.degree - len(vec))
        return Scalar(self, tuple(vec))

    # -- serialization -------------------------------------------------

    def to_dict(self):
        if self.kind == "rational":
            return {"type": "rational"}
        return {
            "type": "extension",
            "minpoly": [
                int(c) if c.denominator == 1 else str(c) for c in self.minpoly
            ],
            "symbol": self.symbol,
        }

    @staticmethod
    def from_dict(data):
        kind = data.get("type", "rational")
        if kind == "rational":
            return QQ
        coeffs = [Fraction(c) for c in data["minpoly"]]
        return Field(
            "extension",
            coeffs,
            symbol=data.get("symbol", "s"),
            trusted=bool(data.get("trusted", False)),
        )


QQ = Field("rational")


def extension_field(minpoly, symbol="s", trusted=False):
    """Convenience constructor for Q[symbol]/(minpoly)."""
    return Field("extension", minpoly, symbol=symbol, trusted=trusted)


class Scalar:
    """Immutable element of a Field, always in canonical reduced form.

    Rational elements hold a Fraction; extension elements hold a dense
    tuple of Fractions of length deg(minpoly), reduced mod the minpoly.
    Two scalars are equal iff their representations are identical.
    """

    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        self.field = field
        self.rep = rep

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldMismatchError(
                "cannot combine elements of %r and %r" % (self.field, other.field)
            )
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return None

    def is_zero(self):
        if self.field.kind == "rational":
            return not self.rep
        return not any(self.rep)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.field.kind == "rational":
            return Scalar(self.field, self.rep + other.rep)
        return Scalar(
            self.field, tuple(a + b for a, b in zip(self.rep, other.rep))
        )

    __radd__ = __add__

    def __neg__(self):
        if self.field.kind == "rational":
            return Scalar(self.field, -self.rep)
        return Scalar(self.field, tuple(-a for a in self.rep))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.field.kind == "rational":
            return Scalar(self.field, self.rep * other.rep)
        prod = _poly_mul(list(self.rep), list(other.rep))
        _, rem = _poly_divmod(prod, list(self.field.minpoly))
        rem = rem + [Fraction(0)] * (self.field.degree - len(rem))
        return Scalar(self.field, tuple(rem))

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse; extended Euclid against the minpoly."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.field.kind == "rational":
            return Scalar(self.field, 1 / self.rep)
        # extended Euclid: find u with u*rep = 1 mod minpoly
        r0, r1 = list(self.field.minpoly), [c for c in self.rep]
        while r1 and not r1[-1]:
            r1.pop()
        s0, s1 = [], [Fraction(1)]
        while r1:
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul_trim(q, s1))
            r0, r1 = r1, r
            s0, s1 = s1, s
        # r0 is the gcd, a nonzero constant since minpoly is irreducible
        c = r0[0]
        inv = [x / c for x in s0]
        _, inv = _poly_divmod(inv, list(self.field.minpoly))
        inv = inv + [Fraction(0)] * (self.field.degree - len(inv))
        return Scalar(self.field, tuple(inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.rep == other.rep

    def __hash__(self):
        return hash(self.rep)

    def __repr__(self):
        return self.str()

    def str(self):
        if self.field.kind == "rational":
            return str(self.rep)
        sym = self.field.symbol
        parts = []
        for k, c in enumerate(self.rep):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                pw = sym if k == 1 else "%s^%d" % (sym, k)
                if c == 1:
                    parts.append(pw)
                elif c == -1:
                    parts.append("-%s" % pw)
                else:
                    parts.append("%s*%s" % (c, pw))
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def as_fraction(self):
        """The value as a Fraction; fails off the prime field."""
        if self.field.kind == "rational":
            return self.rep
        if any(self.rep[1:]):
            raise ValueError("%s is not rational" % (self,))
        return self.rep[0]


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    out = [x - y for x, y in zip(a, b)]
    while out and not out[-1]:
        out.pop()
    return out


def _poly_mul_trim(a, b):
    if not a or not b:
        return []
    return _poly_mul(a, b)
