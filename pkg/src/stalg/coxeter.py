"""Root systems of types A-D (small rank), ideal and inversion
arrangements, height distributions and Bruhat intervals in type A."""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .arr import Arrangement
from .linalg import rref
from .poly import Polynomial
from .scalars import QQ


class RootSystem:
    """Positive roots of a classical type in the usual coordinates.

    Type A_r lives in r+1 coordinates (non-essential); B_r, C_r and D_r
    live in r coordinates.  Heights are the coefficient sums over the
    simple basis.
    """

    def __init__(self, letter, rank):
        letter = letter.upper()
        if letter not in "ABCD":
            raise ValueError("supported types are A, B, C, D")
        if rank < 1 or (letter == "D" and rank < 2):
            raise ValueError("rank too small for type %s" % letter)
        if rank > 4:
            raise ValueError("rank capped at 4")
        self.letter = letter
        self.rank = rank
        self.dim = rank + 1 if letter == "A" else rank
        self.simple_roots = self._simple_roots()
        self.positive_roots = self._positive_roots()
        self._heights = {}
        for beta in self.positive_roots:
            coeffs = self.simple_coefficients(beta)
            if coeffs is None or any(c != int(c) or c < 0 for c in coeffs):
                raise AssertionError("root %s is not a positive integer span" % (beta,))
            self._heights[beta] = int(sum(coeffs))

    def _unit(self, i, sign=1):
        return tuple(sign if j == i else 0 for j in range(self.dim))

    def _simple_roots(self):
        n, d = self.rank, self.dim
        out = []
        for i in range(n - 1 if self.letter != "A" else n):
            out.append(tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(d)))
        if self.letter == "B":
            out.append(self._unit(n - 1))
        elif self.letter == "C":
            out.append(self._unit(n - 1, 2))
        elif self.letter == "D":
            out.append(
                tuple(1 if j in (n - 2, n - 1) else 0 for j in range(d))
            )
        return out

    def _positive_roots(self):
        d = self.dim
        out = []
        for i in range(d):
            for j in range(i + 1, d):
                out.append(tuple(1 if k == i else -1 if k == j else 0 for k in range(d)))
        if self.letter in ("B", "C", "D"):
            for i in range(d):
                for j in range(i + 1, d):
                    out.append(
                        tuple(1 if k in (i, j) else 0 for k in range(d))
                    )
        if self.letter == "B":
            for i in range(d):
                out.append(self._unit(i))
        if self.letter == "C":
            for i in range(d):
                out.append(self._unit(i, 2))
        return out

    def simple_coefficients(self, vector):
        """Coordinates of a vector in the simple-root basis, or None."""
        cols = self.simple_roots
        rows = []
        for j in range(self.dim):
            rows.append(
                [QQ(Fraction(c[j])) for c in cols] + [QQ(Fraction(vector[j]))]
            )
        reduced, pivots = rref(rows, QQ)
        n = len(cols)
        if n in pivots:
            return None  # inconsistent
        sol = [Fraction(0)] * n
        for r, p in zip(reduced, pivots):
            sol[p] = r[n].as_fraction()
        # verify (simple roots may not span the ambient in type A)
        for j in range(self.dim):
            if sum(s * c[j] for s, c in zip(sol, cols)) != vector[j]:
                return None
        return sol

    def height(self, root):
        return self._heights[tuple(root)]

    def height_distribution(self, roots=None):
        """Count of roots at each height 1..max, as a list."""
        roots = self.positive_roots if roots is None else list(roots)
        if not roots:
            return []
        hs = [self._heights[tuple(r)] for r in roots]
        out = [0] * max(hs)
        for h in hs:
            out[h - 1] += 1
        return out

    def __repr__(self):
        return "RootSystem(%s%d)" % (self.letter, self.rank)


class LowerIdeal:
    """A downward-closed subset of the positive roots."""

    def __init__(self, root_system, roots):
        self.root_system = root_system
        roots = [tuple(r) for r in roots]
        pos = set(root_system.positive_roots)
        for r in roots:
            if r not in pos:
                raise ValueError("%s is not a positive root" % (r,))
        self.roots = sorted(set(roots), key=root_system.positive_roots.index)
        self._validate()

    def _validate(self):
        rs = self.root_system
        inside = set(self.roots)
        for beta in self.roots:
            for gamma in rs.positive_roots:
                if gamma in inside:
                    continue
                diff = tuple(b - g for b, g in zip(beta, gamma))
                coeffs = rs.simple_coefficients(diff)
                if coeffs is not None and all(
                    c == int(c) and c >= 0 for c in coeffs
                ):
                    raise ValueError(
                        "not a lower ideal: %s is in the ideal but %s below it "
                        "is not" % (beta, gamma)
                    )

    def __len__(self):
        return len(self.roots)

    def __repr__(self):
        return "LowerIdeal(%s, %d roots)" % (self.root_system, len(self.roots))


def all_lower_ideals(root_system):
    """Every lower ideal, by brute-force downset filtering."""
    pos = root_system.positive_roots
    n = len(pos)
    below = []
    for i, beta in enumerate(pos):
        row = []
        for j, gamma in enumerate(pos):
            if i == j:
                continue
            diff = tuple(b - g for b, g in zip(beta, gamma))
            coeffs = root_system.simple_coefficients(diff)
            if coeffs is not None and all(c == int(c) and c >= 0 for c in coeffs):
                row.append(j)
        below.append(row)
    out = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            if mask >> i & 1:
                if any(not (mask >> j & 1) for j in below[i]):
                    ok = False
                    break
        if ok:
            roots = [pos[i] for i in range(n) if mask >> i & 1]
            out.append(LowerIdeal(root_system, roots))
    out.sort(key=lambda I: (len(I), [root_system.positive_roots.index(r) for r in I.roots]))
    return out


def dual_partition(distribution, length):
    """d_i = #{k : distribution_k >= i}, padded with zeros, ascending."""
    out = []
    for i in range(1, max(distribution, default=0) + 1):
        out.append(sum(1 for h in distribution if h >= i))
    out += [0] * (length - len(out))
    return sorted(out)


def ideal_exponents(ideal):
    """Exponents of the ideal arrangement: the dual partition of the
    height distribution, padded to the rank."""
    rs = ideal.root_system
    dist = rs.height_distribution(ideal.roots)
    return dual_partition(dist, rs.rank)


def ideal_arrangement(ideal):
    """Hyperplanes alpha = 0 for alpha in the lower ideal, over Q."""
    rs = ideal.root_system
    return Arrangement(QQ, rs.dim, [list(r) for r in ideal.roots])


def weyl_arrangement(letter, rank):
    """The reflection arrangement of the full positive system."""
    rs = RootSystem(letter, rank)
    return Arrangement(QQ, rs.dim, [list(r) for r in rs.positive_roots])


def lowest_invariant(letter_or_dim, rank=None):
    """The invariant quadratic form sum x_i^2 in the ambient coordinates."""
    if isinstance(letter_or_dim, int):
        dim = letter_or_dim
    else:
        dim = RootSystem(letter_or_dim, rank).dim
    return Polynomial(
        QQ,
        dim,
        {tuple(2 if j == i else 0 for j in range(dim)): QQ(1) for i in range(dim)},
    )


# -- permutations and inversion arrangements ---------------------------------


def parse_permutation(w):
    """One-line notation from a string of digits, list or tuple."""
    if isinstance(w, str):
        w = tuple(int(ch) for ch in w)
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError("%s is not a permutation in one-line notation" % (w,))
    return w


def inversions(w):
    w = parse_permutation(w)
    n = len(w)
    return [(i, j) for i in range(n) for j in range(i + 1, n) if w[i] > w[j]]


def inversion_arrangement(w):
    """Hyperplanes x_i - x_j = 0 over the inversions of w."""
    w = parse_permutation(w)
    n = len(w)
    vecs = []
    for i, j in inversions(w):
        vecs.append([1 if k == i else -1 if k == j else 0 for k in range(n)])
    return Arrangement(QQ, n, vecs)


def bruhat_leq(u, w):
    """Tableau criterion: sorted prefixes compare entrywise."""
    u = parse_permutation(u)
    w = parse_permutation(w)
    if len(u) != len(w):
        raise ValueError("permutations of different sizes")
    for k in range(1, len(u)):
        for a, b in zip(sorted(u[:k]), sorted(w[:k])):
            if a > b:
                return False
    return True


def bruhat_interval_size(w):
    """Number of permutations below w in Bruhat order (n <= 6)."""
    w = parse_permutation(w)
    n = len(w)
    if n > 6:
        raise ValueError("Bruhat enumeration capped at n = 6")
    return sum(1 for u in permutations(range(1, n + 1)) if bruhat_leq(u, w))
