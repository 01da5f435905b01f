"""Central hyperplane arrangements: lattice, Mobius function, polynomials."""

from __future__ import annotations

from .linalg import in_row_span, kernel_basis, rref
from .poly import Polynomial, default_names, upoly_eval, upoly_trim
from .scalars import Scalar


class Hyperplane:
    """A linear hyperplane ker(form), normalized so the first nonzero
    coefficient equals 1."""

    __slots__ = ("field", "nvars", "coeffs", "form")

    def __init__(self, field, coeffs):
        vec = [c if isinstance(c, Scalar) else field(c) for c in coeffs]
        lead = next((i for i, c in enumerate(vec) if c), None)
        if lead is None:
            raise ValueError("hyperplane form must be nonzero")
        inv = vec[lead].inverse()
        vec = [c * inv for c in vec]
        self.field = field
        self.nvars = len(vec)
        self.coeffs = tuple(vec)
        self.form = Polynomial.from_coeff_vector(field, vec)

    def __eq__(self, other):
        if not isinstance(other, Hyperplane):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "Hyperplane(%s)" % (self.form.str(),)


class LatticeElement:
    """An intersection subspace, keyed by the reduced row-echelon basis of
    the span of its defining forms."""

    __slots__ = ("key", "rows", "pivots", "codim", "hyperplanes", "mu")

    def __init__(self, rows, pivots, nvars, hyperplanes):
        self.rows = rows
        self.pivots = pivots
        self.key = tuple(tuple(r) for r in rows)
        self.codim = len(rows)
        self.hyperplanes = hyperplanes  # sorted indices of hyperplanes containing X
        self.mu = None

    def contains_form(self, coeffs):
        return in_row_span(coeffs, self.rows, self.pivots)

    def contains(self, other):
        """Subspace containment: self >= other as subspaces of V."""
        return all(in_row_span(r, other.rows, other.pivots) for r in self.rows)

    def kernel_columns(self, field, nvars):
        """Deterministic basis of the subspace itself (columns of length l)."""
        if not self.rows:
            return [
                [field(1) if j == i else field(0) for j in range(nvars)]
                for i in range(nvars)
            ]
        return kernel_basis(self.rows, nvars, field)

    def __repr__(self):
        return "LatticeElement(codim=%d, H=%s)" % (self.codim, list(self.hyperplanes))


class IntersectionLattice:
    """All intersections of subsets of the arrangement with Mobius values."""

    def __init__(self, arrangement):
        A = arrangement
        field = A.field
        nvars = A.nvars
        forms = [h.coeffs for h in A.hyperplanes]

        found = {}
        order = []

        def register(rows, pivots):
            key = tuple(tuple(r) for r in rows)
            if key in found:
                return found[key]
            containing = tuple(
                i for i, f in enumerate(forms) if in_row_span(f, rows, pivots)
            )
            el = LatticeElement(rows, pivots, nvars, containing)
            found[key] = el
            order.append(el)
            return el

        register([], [])
        frontier = list(order)
        while frontier:
            new = []
            for el in frontier:
                for i, f in enumerate(forms):
                    if in_row_span(f, el.rows, el.pivots):
                        continue
                    rows, pivots = rref(el.rows + [list(f)], field)
                    key = tuple(tuple(r) for r in rows)
                    if key not in found:
                        new.append(register(rows, pivots))
            frontier = new

        order.sort(key=lambda e: (e.codim, e.hyperplanes))
        self.elements = order
        self.nvars = nvars

        # Mobius: mu(V) = 1, then top-down by codimension
        for el in self.elements:
            if el.codim == 0:
                el.mu = 1
                continue
            tot = 0
            for other in self.elements:
                if other is el or other.codim >= el.codim:
                    continue
                if other.contains(el):  # other strictly contains el as subspace
                    tot += other.mu
            el.mu = -tot

    def __len__(self):
        return len(self.elements)

    def by_codim(self, k):
        return [e for e in self.elements if e.codim == k]

    @property
    def rank(self):
        return max(e.codim for e in self.elements)


class Arrangement:
    """A finite set of linear hyperplanes in K^nvars, deduplicated."""

    def __init__(self, field, nvars, coeff_vectors, names=None):
        self.field = field
        self.nvars = nvars
        self.names = list(names) if names else default_names(nvars)
        hyps = []
        for vec in coeff_vectors:
            if isinstance(vec, Hyperplane):
                h = vec
            else:
                h = Hyperplane(field, vec)
            if len(h.coeffs) != nvars:
                raise ValueError("hyperplane length does not match nvars")
            if h not in hyps:
                hyps.append(h)
        self.hyperplanes = hyps
        self._cache = {}

    @property
    def size(self):
        return len(self.hyperplanes)

    def __len__(self):
        return len(self.hyperplanes)

    def defining_polynomial(self):
        """Q = product of the normalized forms."""
        Q = Polynomial.constant(self.field, self.nvars, 1)
        for h in self.hyperplanes:
            Q = Q * h.form
        return Q

    def lattice(self):
        if "lattice" not in self._cache:
            self._cache["lattice"] = IntersectionLattice(self)
        return self._cache["lattice"]

    def characteristic_polynomial(self):
        """chi(t) = sum mu(X) t^dim(X) as an integer coefficient list."""
        chi = [0] * (self.nvars + 1)
        for el in self.lattice().elements:
            chi[self.nvars - el.codim] += el.mu
        return upoly_trim(chi)

    def poincare_polynomial(self):
        """pi(t) = sum mu(X) (-t)^codim(X); checks (1+t) | pi for nonempty."""
        pi = [0] * (self.nvars + 1)
        for el in self.lattice().elements:
            pi[el.codim] += el.mu * (-1) ** el.codim
        pi = upoly_trim(pi)
        if self.hyperplanes and upoly_eval(pi, -1) != 0:
            raise ArithmeticError(
                "Mobius inconsistency: (1+t) does not divide the Poincare polynomial"
            )
        return pi

    def num_chambers(self):
        return upoly_eval(self.poincare_polynomial(), 1)

    def index_of(self, hyperplane):
        h = (
            hyperplane
            if isinstance(hyperplane, Hyperplane)
            else Hyperplane(self.field, hyperplane)
        )
        for i, own in enumerate(self.hyperplanes):
            if own == h:
                return i
        raise ValueError("hyperplane %r is not in the arrangement" % (h,))

    def delete(self, hyperplane):
        """The arrangement with one hyperplane removed."""
        i = self.index_of(hyperplane)
        rest = [h for j, h in enumerate(self.hyperplanes) if j != i]
        return Arrangement(self.field, self.nvars, rest, names=self.names)

    def restriction_columns(self, hyperplane):
        """Deterministic (echelon) basis of H as columns, for pullbacks."""
        i = self.index_of(hyperplane)
        h = self.hyperplanes[i]
        return kernel_basis([list(h.coeffs)], self.nvars, self.field)

    def restrict(self, hyperplane):
        """The restricted arrangement A^H in coordinates on H."""
        i = self.index_of(hyperplane)
        h = self.hyperplanes[i]
        cols = self.restriction_columns(h)
        new_nvars = len(cols)
        vecs = []
        for j, other in enumerate(self.hyperplanes):
            if j == i:
                continue
            vec = [
                sum((c * b for c, b in zip(other.coeffs, col)), self.field(0))
                for col in cols
            ]
            if any(vec):
                vecs.append(vec)
        return Arrangement(self.field, new_nvars, vecs)

    def restrict_polynomial(self, hyperplane, poly):
        """Pull a polynomial back to the coordinates used by restrict()."""
        cols = self.restriction_columns(hyperplane)
        new_nvars = len(cols)
        images = []
        for i in range(self.nvars):
            images.append(
                Polynomial(
                    self.field,
                    new_nvars,
                    {
                        tuple(1 if k == j else 0 for k in range(new_nvars)): cols[j][i]
                        for j in range(new_nvars)
                        if cols[j][i]
                    },
                )
            )
        return poly.compose(images)

    def __repr__(self):
        return "Arrangement(%s)" % (
            ", ".join(h.form.str(self.names) for h in self.hyperplanes) or "empty",
        )


def arrangement_from_forms(field, nvars, forms, names=None):
    """Build an arrangement from degree-one Polynomials."""
    vecs = []
    for f in forms:
        if not f.is_homogeneous() or f.degree() != 1:
            raise ValueError("hyperplane forms must be homogeneous of degree 1")
        vec = [f.coeff(tuple(1 if j == i else 0 for j in range(nvars))) for i in range(nvars)]
        vecs.append(vec)
    return Arrangement(field, nvars, vecs, names=names)
