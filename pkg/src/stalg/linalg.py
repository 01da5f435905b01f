"""Exact linear algebra over Field scalars (lists of Scalar as rows)."""

from __future__ import annotations


def rref(rows, field):
    """Reduced row-echelon form; returns (reduced nonzero rows, pivot columns).

    Deterministic: pivots are chosen as the first row with a nonzero entry
    in the leftmost unresolved column.
    """
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    rank = 0
    for col in range(ncols):
        sel = None
        for r in range(rank, len(mat)):
            if mat[r][col]:
                sel = r
                break
        if sel is None:
            continue
        mat[rank], mat[sel] = mat[sel], mat[rank]
        inv = mat[rank][col].inverse()
        mat[rank] = [v * inv for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                c = mat[r][col]
                mat[r] = [a - c * b for a, b in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
        if rank == len(mat):
            break
    return mat[:rank], pivots


def rank(rows, field):
    reduced, pivots = rref(rows, field)
    return len(pivots)


def kernel_basis(rows, ncols, field):
    """Deterministic echelon basis of the null space of the row matrix."""
    reduced, pivots = rref(rows, field)
    free_cols = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free_cols:
        vec = [field(0)] * ncols
        vec[f] = field(1)
        for i, p in enumerate(pivots):
            vec[p] = -reduced[i][f]
        basis.append(vec)
    return basis


def in_row_span(vec, reduced_rows, pivots):
    """Membership of vec in the span of RREF rows."""
    v = list(vec)
    for i, p in enumerate(pivots):
        if v[p]:
            c = v[p]
            v = [a - c * b for a, b in zip(v, reduced_rows[i])]
    return not any(v)
