"""Exact linear algebra: dense elimination over Q(i), sparse rank over Z.

The dense routines work on "columns", sparse mappings from an arbitrary
sortable row key to a GaussianRational.  They back the unique-decomposition
solvers (branching, Fischer, spinor components).  The sparse integer rank is
the workhorse of the brute-force dimension oracles, where the operator
matrices have at most a handful of integer entries per row.
"""

from __future__ import annotations

from math import gcd
from typing import Hashable, Mapping, Sequence

from .scalars import GR_ONE, GR_ZERO, GaussianRational

Column = Mapping[Hashable, GaussianRational]


def _to_dense(columns: Sequence[Column], rhs: Column | None):
    keys = set()
    for col in columns:
        keys.update(col)
    if rhs is not None:
        keys.update(rhs)
    keys = sorted(keys)
    rows = []
    for key in keys:
        row = [col.get(key, GR_ZERO) for col in columns]
        if rhs is not None:
            row.append(rhs.get(key, GR_ZERO))
        rows.append(row)
    return rows


def _eliminate(rows, ncols):
    """Row-reduce in place over the leading ncols columns; return pivot cols."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank_columns(columns: Sequence[Column]) -> int:
    """Exact rank of the matrix whose columns are the given sparse vectors."""
    rows = _to_dense(columns, None)
    return len(_eliminate(rows, len(columns)))


def solve_columns(columns: Sequence[Column], rhs: Column) -> list[GaussianRational] | None:
    """Solve sum_j x_j * column_j = rhs exactly.

    Returns None when the system is inconsistent.  Raises ValueError when the
    columns are linearly dependent and the solution would not be unique; the
    decomposition callers rely on uniqueness, so dependence means a bug.
    """
    ncols = len(columns)
    rows = _to_dense(columns, rhs)
    if not rows:
        return [GR_ZERO] * ncols
    pivots = _eliminate(rows, ncols)
    for row in rows[len(pivots):]:
        if row[ncols]:
            return None
    if len(pivots) < ncols:
        raise ValueError("linearly dependent spanning set in exact solve")
    solution = [GR_ZERO] * ncols
    for r, c in enumerate(pivots):
        solution[c] = rows[r][ncols]
    return solution


def sparse_int_rank(rows: Sequence[Mapping[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given as {column: value} rows."""
    work = [dict(r) for r in rows if r]
    rank = 0
    while work:
        best = min(range(len(work)), key=lambda i: len(work[i]))
        row = work.pop(best)
        rank += 1
        pcol = min(row, key=lambda c: (abs(row[c]), c))
        pval = row[pcol]
        reduced = []
        for other in work:
            if pcol not in other:
                reduced.append(other)
                continue
            f = other[pcol]
            g = gcd(pval, f)
            a, b = pval // g, f // g
            out = {c: v * a for c, v in other.items()}
            for c, v in row.items():
                nv = out.get(c, 0) - v * b
                if nv:
                    out[c] = nv
                elif c in out:
                    del out[c]
            if out:
                shrink = 0
                for v in out.values():
                    shrink = gcd(shrink, v)
                    if shrink == 1:
                        break
                if shrink > 1:
                    out = {c: v // shrink for c, v in out.items()}
                reduced.append(out)
        work = reduced
    return rank
