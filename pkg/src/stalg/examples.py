"""Registry of built-in arrangements used across the docs and test corpus."""

from __future__ import annotations

from .arr import Arrangement
from .coxeter import (
    RootSystem,
    all_lower_ideals,
    inversion_arrangement,
    weyl_arrangement,
)
from .poly import Polynomial
from .scalars import QQ, extension_field


def boolean_arrangement(nvars):
    """Coordinate hyperplanes x_1 ... x_n."""
    vecs = [[1 if j == i else 0 for j in range(nvars)] for i in range(nvars)]
    return Arrangement(QQ, nvars, vecs)


def braid_arrangement(n):
    """All x_i - x_j in n coordinates (non-essential)."""
    vecs = []
    for i in range(n):
        for j in range(i + 1, n):
            vecs.append([1 if k == i else -1 if k == j else 0 for k in range(n)])
    return Arrangement(QQ, n, vecs)


def pencil_arrangement(m):
    """m concurrent lines in the plane: x, y, x+y, x+2y, ..."""
    if m < 1:
        raise ValueError("need at least one line")
    vecs = [[1, 0], [0, 1]][: min(m, 2)]
    for k in range(1, m - 1):
        vecs.append([1, k])
    return Arrangement(QQ, 2, vecs)


def ex4_arrangement():
    """xyz(x+y+z) = 0, the four-plane example with Hilbert vector [1,3,5,4,1]."""
    return Arrangement(
        QQ, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]], names=["x", "y", "z"]
    )


def notsplit_arrangement():
    """x(x^2-y^2)(x^2-2y^2)(y-z)z = 0 over Q(sqrt 2): Poincare polynomial
    splits as (1+t)(1+3t)^2 but the arrangement is not free."""
    K = extension_field([-2, 0, 1], symbol="r")
    r = K.gen()
    return Arrangement(
        K,
        3,
        [
            [1, 0, 0],
            [1, -1, 0],
            [1, 1, 0],
            [1, -r, 0],
            [1, r, 0],
            [0, 1, -1],
            [0, 0, 1],
        ],
        names=["x", "y", "z"],
    )


def schubert_presentation_4123():
    """Hard-coded presentation of the cohomology of the Schubert variety
    for w = 4123: ideal generators in 4 variables over Q."""
    x = [Polynomial.variable(QQ, 4, i) for i in range(4)]
    f1 = x[0] + x[1] + x[2] + x[3]
    f2 = (x[0] + x[1] + x[2]) ** 2
    f3 = x[1] * x[2] + x[0] * x[2]
    f4 = x[0] * x[1]
    return [f1, f2, f3, f4]


def _ideal_names():
    out = {}
    for letter, rank in (("A", 2), ("A", 3), ("B", 2)):
        rs = RootSystem(letter, rank)
        ideals = all_lower_ideals(rs)
        for k, ideal in enumerate(ideals):
            out["ideal-%s%d-%d" % (letter, rank, k)] = ideal
    return out


_IDEALS = None


def lower_ideal_registry():
    global _IDEALS
    if _IDEALS is None:
        _IDEALS = _ideal_names()
    return _IDEALS


def example_names():
    names = [
        "ex4",
        "notsplit",
        "boolean-1",
        "boolean-2",
        "boolean-3",
        "boolean-4",
        "braid-2",
        "braid-3",
        "braid-4",
        "pencil-3",
        "weyl-A2",
        "weyl-B2",
        "weyl-A3",
        "inversion-4123",
    ]
    names.extend(sorted(lower_ideal_registry()))
    return names


def get_example(name):
    """Look up a built-in arrangement by name."""
    if name == "ex4":
        return ex4_arrangement()
    if name == "notsplit":
        return notsplit_arrangement()
    if name.startswith("boolean-"):
        return boolean_arrangement(int(name.split("-")[1]))
    if name.startswith("braid-"):
        return braid_arrangement(int(name.split("-")[1]))
    if name.startswith("pencil-"):
        return pencil_arrangement(int(name.split("-")[1]))
    if name.startswith("weyl-"):
        tag = name.split("-")[1]
        return weyl_arrangement(tag[0], int(tag[1:]))
    if name.startswith("inversion-"):
        return inversion_arrangement(name.split("-")[1])
    ideals = lower_ideal_registry()
    if name in ideals:
        from .coxeter import ideal_arrangement

        return ideal_arrangement(ideals[name])
    raise KeyError("unknown example %r" % (name,))


def corpus(max_vars=None):
    """The full shipped corpus as (name, arrangement) pairs."""
    out = []
    for name in example_names():
        A = get_example(name)
        if max_vars is not None and A.nvars > max_vars:
            continue
        out.append((name, A))
    return out
