"""Bilinear forms on the generating space, and their symmetric split.

A form is an exact ``dim x dim`` matrix of scalars.  It may be fully
symbolic (named), a diagonal signature (possibly degenerate), or explicit.
Degenerate forms are first class: nothing here ever assumes invertibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .multivector import Multivector, _check_dim
from .scalar import Scalar


@dataclass(frozen=True)
class BilinearForm:
    """An exact bilinear form ``V x V -> scalars``; entries are 1-indexed."""

    dim: int
    entries: tuple  # tuple of tuples of Scalar, row-major
    kind: str = "explicit"  # "explicit" | "named" | "signature"
    name: str | None = None
    signature: tuple | None = None  # (p, q, r) for kind == "signature"

    def __post_init__(self):
        _check_dim(self.dim)
        if len(self.entries) != self.dim or any(len(r) != self.dim for r in self.entries):
            raise ValueError("entry matrix shape does not match dim")

    def entry(self, i: int, j: int) -> Scalar:
        if not (1 <= i <= self.dim and 1 <= j <= self.dim):
            raise ValueError(f"form index ({i},{j}) out of range 1..{self.dim}")
        return self.entries[i - 1][j - 1]

    # -- constructors ---------------------------------------------------

    @staticmethod
    def explicit(rows: Sequence[Sequence]) -> "BilinearForm":
        dim = len(rows)
        entries = tuple(tuple(Scalar._coerce(v) for v in row) for row in rows)
        return BilinearForm(dim, entries)

    @staticmethod
    def named(name: str, dim: int) -> "BilinearForm":
        entries = tuple(
            tuple(Scalar.form_entry(name, i, j) for j in range(1, dim + 1))
            for i in range(1, dim + 1)
        )
        return BilinearForm(dim, entries, kind="named", name=name)

    @staticmethod
    def symmetric_named(name: str, dim: int) -> "BilinearForm":
        """Named form constrained symmetric; only upper-triangular atoms appear."""
        entries = tuple(
            tuple(Scalar.form_entry(name, min(i, j), max(i, j)) for j in range(1, dim + 1))
            for i in range(1, dim + 1)
        )
        return BilinearForm(dim, entries, kind="named", name=name)

    @staticmethod
    def antisymmetric_named(name: str, dim: int) -> "BilinearForm":
        """Named form constrained antisymmetric, zero diagonal.

        Entries are expressed with upper-triangular atoms only:
        ``entry(i,j) = name[i,j]`` for ``i < j`` and ``-name[j,i]`` for ``i > j``.
        """
        rows = []
        for i in range(1, dim + 1):
            row = []
            for j in range(1, dim + 1):
                if i == j:
                    row.append(Scalar.zero())
                elif i < j:
                    row.append(Scalar.form_entry(name, i, j))
                else:
                    row.append(-Scalar.form_entry(name, j, i))
            rows.append(tuple(row))
        return BilinearForm(dim, tuple(rows), kind="named", name=name)

    @staticmethod
    def from_signature(p: int, q: int, r: int = 0) -> "BilinearForm":
        """Diagonal form with ``p`` entries +1, then ``q`` entries -1, then ``r`` zeros."""
        if p < 0 or q < 0 or r < 0:
            raise ValueError("signature counts must be nonnegative")
        dim = p + q + r
        _check_dim(dim)
        diag = [1] * p + [-1] * q + [0] * r
        rows = tuple(
            tuple(Scalar.from_rational(diag[i] if i == j else 0) for j in range(dim))
            for i in range(dim)
        )
        return BilinearForm(dim, rows, kind="signature", signature=(p, q, r))

    @staticmethod
    def zero(dim: int) -> "BilinearForm":
        rows = tuple(tuple(Scalar.zero() for _ in range(dim)) for _ in range(dim))
        return BilinearForm(dim, rows)

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other: "BilinearForm") -> "BilinearForm":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch between forms")
        rows = tuple(
            tuple(self.entries[i][j] + other.entries[i][j] for j in range(self.dim))
            for i in range(self.dim)
        )
        return BilinearForm(self.dim, rows)

    def __neg__(self) -> "BilinearForm":
        rows = tuple(tuple(-v for v in row) for row in self.entries)
        return BilinearForm(self.dim, rows)

    def __sub__(self, other: "BilinearForm") -> "BilinearForm":
        return self + (-other)

    def scale(self, c) -> "BilinearForm":
        c = Scalar._coerce(c)
        rows = tuple(tuple(v * c for v in row) for row in self.entries)
        return BilinearForm(self.dim, rows)

    # -- predicates -----------------------------------------------------

    def is_symmetric(self) -> bool:
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )

    def is_antisymmetric(self) -> bool:
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.dim)
            for j in range(i, self.dim)
        )

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.entries for v in row)

    def __str__(self):
        rows = [", ".join(str(v) for v in row) for row in self.entries]
        return "[" + "; ".join(rows) + "]"


@dataclass(frozen=True)
class FormSplit:
    """The decomposition of a form into symmetric plus antisymmetric parts."""

    g: BilinearForm
    F: BilinearForm


def split(B: BilinearForm) -> FormSplit:
    """Split ``B = g + F`` with ``g`` symmetric and ``F`` antisymmetric."""
    half = Fraction(1, 2)
    dim = B.dim
    g_rows, f_rows = [], []
    for i in range(dim):
        g_row, f_row = [], []
        for j in range(dim):
            a, b = B.entries[i][j], B.entries[j][i]
            g_row.append((a + b) * half)
            f_row.append((a - b) * half)
        g_rows.append(tuple(g_row))
        f_rows.append(tuple(f_row))
    return FormSplit(
        g=BilinearForm(dim, tuple(g_rows)),
        F=BilinearForm(dim, tuple(f_rows)),
    )


def form_eval(B: BilinearForm, x: Multivector, y: Multivector) -> Scalar:
    """Evaluate ``B(x, y)`` on two vectors (grade-1 multivectors)."""
    if x.dim != B.dim or y.dim != B.dim:
        raise ValueError("dimension mismatch between form and vectors")
    if not x.is_homogeneous(1) or not y.is_homogeneous(1):
        raise ValueError("form_eval needs grade-1 arguments")
    out = Scalar.zero()
    for bx, cx in x.terms():
        for by, cy in y.terms():
            out = out + cx * cy * B.entry(bx.indices[0], by.indices[0])
    return out
