"""Exact coefficient ring: multivariate polynomials over the rationals.

Every coefficient that appears anywhere in the package lives in this ring.
Atoms are either free named symbols (``a``, ``alpha``, ``g12``) or indexed
entries of a named bilinear form (``B[1,2]``).  A :class:`Scalar` is a sparse
sum of power products with :class:`fractions.Fraction` coefficients; all
arithmetic is exact and results are kept in canonical form, so equality is
plain structural equality and zero testing is exact.

Atom order (used for canonical power products and printing): all form
entries come before all named symbols; form entries sort by
``(form, row, col)``, named symbols lexicographically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def _check_ident(name: str) -> None:
    if not _IDENT.match(name):
        raise ValueError(f"invalid identifier: {name!r}")


@dataclass(frozen=True)
class Named:
    """A free symbol, e.g. ``a`` or ``g12``."""

    name: str

    def __post_init__(self):
        _check_ident(self.name)

    @property
    def sort_key(self):
        return (1, self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class FormEntry:
    """An indexed entry of a named bilinear form, printed ``B[i,j]``."""

    form: str
    row: int
    col: int

    def __post_init__(self):
        _check_ident(self.form)
        if not (1 <= self.row <= 9 and 1 <= self.col <= 9):
            raise ValueError(f"form entry index out of range: {self.form}[{self.row},{self.col}]")

    @property
    def sort_key(self):
        return (0, self.form, self.row, self.col)

    def __str__(self):
        return f"{self.form}[{self.row},{self.col}]"


Atom = Union[Named, FormEntry]

# A power product is a tuple of (atom, exponent) pairs sorted by atom order,
# exponents >= 1.  The empty tuple is the constant term.
PowerProduct = tuple


def _pp_mul(a: PowerProduct, b: PowerProduct) -> PowerProduct:
    if not a:
        return b
    if not b:
        return a
    exps: dict = {}
    for atom, e in a:
        exps[atom] = exps.get(atom, 0) + e
    for atom, e in b:
        exps[atom] = exps.get(atom, 0) + e
    return tuple(sorted(exps.items(), key=lambda it: it[0].sort_key))


def _pp_key(pp: PowerProduct):
    return tuple((atom.sort_key, e) for atom, e in pp)


RationalLike = Union[int, Fraction]


class Scalar:
    """A sparse exact multivariate polynomial with rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[PowerProduct, Fraction] | None = None):
        # terms are trusted to be canonical; use the factory methods otherwise
        self._terms: dict = dict(terms) if terms else {}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "Scalar":
        return Scalar()

    @staticmethod
    def one() -> "Scalar":
        return Scalar.from_rational(1)

    @staticmethod
    def from_rational(value: RationalLike) -> "Scalar":
        f = Fraction(value)
        return Scalar({(): f}) if f else Scalar()

    @staticmethod
    def from_atom(atom: Atom) -> "Scalar":
        return Scalar({((atom, 1),): Fraction(1)})

    @staticmethod
    def sym(name: str) -> "Scalar":
        return Scalar.from_atom(Named(name))

    @staticmethod
    def form_entry(form: str, row: int, col: int) -> "Scalar":
        return Scalar.from_atom(FormEntry(form, row, col))

    # -- ring operations ------------------------------------------------

    @staticmethod
    def _coerce(value) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar.from_rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to Scalar")

    def __add__(self, other) -> "Scalar":
        other = Scalar._coerce(other)
        terms = dict(self._terms)
        for pp, c in other._terms.items():
            s = terms.get(pp, 0) + c
            if s:
                terms[pp] = s
            else:
                terms.pop(pp, None)
        return Scalar(terms)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar({pp: -c for pp, c in self._terms.items()})

    def __sub__(self, other) -> "Scalar":
        return self + (-Scalar._coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return Scalar._coerce(other) + (-self)

    def __mul__(self, other) -> "Scalar":
        other = Scalar._coerce(other)
        terms: dict = {}
        for pa, ca in self._terms.items():
            for pb, cb in other._terms.items():
                pp = _pp_mul(pa, pb)
                s = terms.get(pp, 0) + ca * cb
                if s:
                    terms[pp] = s
                else:
                    terms.pop(pp, None)
        return Scalar(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = Scalar.one()
        for _ in range(n):
            out = out * self
        return out

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.from_rational(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def is_rational(self) -> bool:
        return all(pp == () for pp in self._terms)

    def as_rational(self) -> Fraction:
        """The value of a constant polynomial; raises if symbols remain."""
        if not self._terms:
            return Fraction(0)
        if not self.is_rational():
            raise ValueError(f"not a rational constant: {self}")
        return self._terms[()]

    def is_one(self) -> bool:
        return self._terms == {(): Fraction(1)}

    def is_minus_one(self) -> bool:
        return self._terms == {(): Fraction(-1)}

    def is_single_term(self) -> bool:
        return len(self._terms) == 1

    # -- structure ------------------------------------------------------

    def atoms(self) -> set:
        out = set()
        for pp in self._terms:
            for atom, _ in pp:
                out.add(atom)
        return out

    def substitute(self, bindings: Mapping[Atom, "Scalar"]) -> "Scalar":
        """Simultaneous substitution of atoms, then renormalization.

        The substituted values must not mention any bound atom.
        """
        bindings = {k: Scalar._coerce(v) for k, v in bindings.items()}
        bound = set(bindings)
        for v in bindings.values():
            clash = v.atoms() & bound
            if clash:
                raise ValueError(f"cyclic substitution through {sorted(map(str, clash))}")
        out = Scalar.zero()
        for pp, c in self._terms.items():
            term = Scalar.from_rational(c)
            for atom, e in pp:
                repl = bindings.get(atom)
                factor = repl if repl is not None else Scalar.from_atom(atom)
                term = term * factor ** e
            out = out + term
        return out

    # -- rendering ------------------------------------------------------

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda it: _pp_key(it[0]))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for pp, c in self.sorted_terms():
            factors = []
            for atom, e in pp:
                factors.extend([str(atom)] * e)
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(abs(c))] + factors)
            if not pieces:
                pieces.append(body if c > 0 else "-" + body)
            else:
                pieces.append(("+" if c > 0 else "-") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Scalar({self})"


ZERO = Scalar.zero()
ONE = Scalar.one()
