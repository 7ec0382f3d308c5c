"""Exact sparse linear algebra over the rationals.

Vectors are dicts mapping coordinate keys to nonzero Fractions.  Used by the
classification machinery to pick independent ideal elements and to solve
for representation matrix entries; systems stay small (dimension of a spinor
ideal), so fraction-free tricks are not needed.
"""

from __future__ import annotations

from fractions import Fraction


class RationalSpan:
    """An incrementally built row-reduced basis of a rational span."""

    def __init__(self):
        self.rows: list = []  # each row: (pivot_key, dict)

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of ``vec`` after eliminating all current pivots."""
        vec = dict(vec)
        for pivot, row in self.rows:
            c = vec.get(pivot)
            if not c:
                continue
            for k, v in row.items():
                s = vec.get(k, Fraction(0)) - c * v
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
        return vec

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    def add(self, vec: dict) -> bool:
        """Add a vector to the span; returns True if it was independent."""
        res = self.reduce(vec)
        if not res:
            return False
        pivot = min(res)
        inv = 1 / res[pivot]
        row = {k: v * inv for k, v in res.items()}
        # keep earlier rows reduced against the new pivot
        for i, (p, r) in enumerate(self.rows):
            c = r.get(pivot)
            if not c:
                continue
            merged = dict(r)
            for k, v in row.items():
                s = merged.get(k, Fraction(0)) - c * v
                if s:
                    merged[k] = s
                else:
                    merged.pop(k, None)
            self.rows[i] = (p, merged)
        self.rows.append((pivot, row))
        return True


def solve_exact(columns: list, target: dict) -> list:
    """Solve ``sum_j c_j * columns[j] = target`` exactly; unique solution.

    Raises ValueError when the system is inconsistent or underdetermined.
    """
    n = len(columns)
    keys = set(target)
    for col in columns:
        keys.update(col)
    keys = sorted(keys)
    rows = [[col.get(k, Fraction(0)) for col in columns] + [target.get(k, Fraction(0))] for k in keys]

    pivot_cols = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivot_cols.append(c)
        r += 1
    if len(pivot_cols) != n:
        raise ValueError("linear system is underdetermined")
    if any(row[n] for row in rows[r:]):
        raise ValueError("linear system is inconsistent")
    sol = [Fraction(0)] * n
    for i, c in enumerate(pivot_cols):
        sol[c] = rows[i][n]
    return sol
