"""Incidence patterns and the polygon slack-matrix test."""

from __future__ import annotations

from .matrix import Matrix, rank, vsub


def incidence_matrix(m: Matrix) -> Matrix:
    """0/1 complement pattern: entry 1 exactly where m is zero.

    Invariant under positive row and column scalings, so it only sees the
    vertex-facet incidence structure of a slack matrix.
    """
    if not m.is_nonnegative():
        raise ValueError("matrix has a negative entry")
    return Matrix(
        [[int(x == 0) for x in row] for row in m.data], cols=m.cols
    )


NOT_APPLICABLE = "not applicable"


def polygon_slack_check(m: Matrix) -> bool:
    """Is a square nonnegative matrix a vertex-facet slack matrix of a
    polygon?

    Two conditions: the rows span an affine space of dimension exactly two,
    and the zero entries form a single cyclic band, i.e. two zeros in every
    row and column with the zero-entry bipartite graph a single cycle of
    length 2n.  The cycle condition is the permutation-free reading of the
    banded zero pattern.
    """
    if not m.is_nonnegative():
        raise ValueError("matrix has a negative entry")
    n = m.rows
    if m.rows != m.cols or n < 3:
        raise ValueError(NOT_APPLICABLE)
    diffs = Matrix([vsub(r, m.row(0)) for r in m.data[1:]], cols=n)
    if rank(diffs) != 2:
        return False
    zero_cols = [
        [j for j, x in enumerate(row) if x == 0] for row in m.data
    ]
    if any(len(z) != 2 for z in zero_cols):
        return False
    zero_rows = [
        [i for i in range(n) if m[i, j] == 0] for j in range(n)
    ]
    if any(len(z) != 2 for z in zero_rows):
        return False
    # Walk the bipartite zero graph; all 2n nodes have degree 2, so it is a
    # single cycle iff the walk closes after visiting every node once.
    seen_rows = {0}
    seen_cols = set()
    i, j = 0, zero_cols[0][0]
    while True:
        seen_cols.add(j)
        i2 = next(i2 for i2 in zero_rows[j] if i2 != i)
        if i2 in seen_rows:
            break
        seen_rows.add(i2)
        i = i2
        j = next(j2 for j2 in zero_cols[i] if j2 != j)
    return len(seen_rows) == n and len(seen_cols) == n
