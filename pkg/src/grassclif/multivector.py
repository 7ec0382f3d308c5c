"""Grassmann exterior algebra: blades, multivectors, wedge and grade maps.

Basis monomials (blades) are strictly ascending index sets over ``1..dim``
with ``dim <= 9``; ``Id`` is the empty blade.  A multivector is a sparse map
from blades to exact scalars.  Internally a blade is a bitmask, which makes
grade, disjointness and reorder parity cheap; this matters because the
split-sum Clifford product enumerates many blade pairs.

Canonical basis order is grade-major, then lexicographic on index lists,
e.g. for dim 3: Id, e1, e2, e3, e1we2, e1we3, e2we3, e1we2we3.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

from .scalar import Scalar

MAX_DIM = 9


def _check_dim(dim: int) -> None:
    if not isinstance(dim, int) or not (1 <= dim <= MAX_DIM):
        raise ValueError(f"dimension must be an integer in 1..{MAX_DIM}, got {dim}")


def _bits_to_indices(bits: int) -> tuple:
    return tuple(i + 1 for i in range(MAX_DIM) if bits >> i & 1)


def _indices_to_bits(indices: Iterable[int], dim: int) -> int:
    bits = 0
    for i in indices:
        if not (1 <= i <= dim):
            raise ValueError(f"blade index {i} out of range 1..{dim}")
        bits |= 1 << (i - 1)
    return bits


def merge_sign(a_bits: int, b_bits: int) -> int:
    """Parity of sorting the concatenation of two ascending index lists."""
    swaps = 0
    t = a_bits
    while t:
        low = t & -t
        swaps += (b_bits & (low - 1)).bit_count()
        t ^= low
    return -1 if swaps & 1 else 1


@dataclass(frozen=True)
class Blade:
    """A Grassmann basis monomial: an ascending index set in ``1..dim``."""

    dim: int
    bits: int

    def __post_init__(self):
        _check_dim(self.dim)
        if self.bits < 0 or self.bits >> self.dim:
            raise ValueError(f"blade bits {self.bits:#x} exceed dimension {self.dim}")

    @staticmethod
    def from_indices(dim: int, indices: Sequence[int]) -> "Blade":
        idx = tuple(indices)
        if tuple(sorted(set(idx))) != idx:
            raise ValueError(f"blade indices must be strictly ascending, got {idx}")
        return Blade(dim, _indices_to_bits(idx, dim))

    @staticmethod
    def unit(dim: int) -> "Blade":
        return Blade(dim, 0)

    @property
    def indices(self) -> tuple:
        return _bits_to_indices(self.bits)

    @property
    def grade(self) -> int:
        return self.bits.bit_count()

    @property
    def is_unit(self) -> bool:
        return self.bits == 0

    @property
    def sort_key(self):
        return (self.grade, self.indices)

    def as_multivector(self, coeff=1) -> "Multivector":
        return Multivector.from_blade(self, coeff)

    def __str__(self):
        if self.bits == 0:
            return "Id"
        return "w".join(f"e{i}" for i in self.indices)

    def alias(self) -> str:
        """Compact form ``e123`` (indices are single digits by construction)."""
        if self.bits == 0:
            return "Id"
        return "e" + "".join(str(i) for i in self.indices)

    def __repr__(self):
        return f"Blade({self.dim}, {self})"


def reorder(dim: int, seq: Sequence[int]) -> tuple:
    """Sort an arbitrary index sequence into a blade, tracking the sign.

    Returns ``(sign, blade)`` where sign is the parity of the sorting
    permutation, or ``(0, None)`` if any index repeats.
    """
    _check_dim(dim)
    for i in seq:
        if not (1 <= i <= dim):
            raise ValueError(f"index {i} out of range 1..{dim}")
    if len(set(seq)) != len(seq):
        return 0, None
    swaps = 0
    items = list(seq)
    # insertion sort; inputs are at most 9 long
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            swaps += 1
            j -= 1
    sign = -1 if swaps & 1 else 1
    return sign, Blade.from_indices(dim, items)


CoeffLike = Union[Scalar, int, Fraction]


class Multivector:
    """A Grassmann polynomial: a sparse map from blades to exact scalars."""

    __slots__ = ("dim", "_terms")

    def __init__(self, dim: int, terms: dict | None = None):
        _check_dim(dim)
        self.dim = dim
        self._terms: dict = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero(dim: int) -> "Multivector":
        return Multivector(dim)

    @staticmethod
    def unit(dim: int, coeff: CoeffLike = 1) -> "Multivector":
        return Multivector.from_blade(Blade.unit(dim), coeff)

    @staticmethod
    def from_blade(blade: Blade, coeff: CoeffLike = 1) -> "Multivector":
        c = Scalar._coerce(coeff)
        return Multivector(blade.dim, {blade.bits: c} if c else {})

    @staticmethod
    def basis_vector(dim: int, index: int) -> "Multivector":
        return Multivector.from_blade(Blade.from_indices(dim, (index,)))

    @staticmethod
    def from_terms(dim: int, items: Iterable) -> "Multivector":
        """Build from ``(blade_or_indices, coeff)`` pairs, summing duplicates."""
        out = Multivector.zero(dim)
        for blade, coeff in items:
            if not isinstance(blade, Blade):
                blade = Blade.from_indices(dim, blade)
            out = out + Multivector.from_blade(blade, coeff)
        return out

    # -- linear structure -----------------------------------------------

    def _require_same_dim(self, other: "Multivector") -> None:
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other: "Multivector") -> "Multivector":
        self._require_same_dim(other)
        terms = dict(self._terms)
        for bits, c in other._terms.items():
            s = terms.get(bits)
            s = c if s is None else s + c
            if s:
                terms[bits] = s
            else:
                terms.pop(bits, None)
        return Multivector(self.dim, terms)

    def __neg__(self) -> "Multivector":
        return Multivector(self.dim, {b: -c for b, c in self._terms.items()})

    def __sub__(self, other: "Multivector") -> "Multivector":
        return self + (-other)

    def scale(self, coeff: CoeffLike) -> "Multivector":
        c = Scalar._coerce(coeff)
        if not c:
            return Multivector.zero(self.dim)
        return Multivector(self.dim, {b: v * c for b, v in self._terms.items()})

    def __rmul__(self, coeff) -> "Multivector":
        return self.scale(coeff)

    def __mul__(self, coeff) -> "Multivector":
        return self.scale(coeff)

    # -- inspection -----------------------------------------------------

    def terms(self) -> Iterator:
        """Yield ``(Blade, Scalar)`` in canonical basis order."""
        for bits in sorted(self._terms, key=lambda b: (b.bit_count(), _bits_to_indices(b))):
            yield Blade(self.dim, bits), self._terms[bits]

    def coeff(self, blade: Blade) -> Scalar:
        return self._terms.get(blade.bits, Scalar.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.dim == other.dim and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    def grades(self) -> set:
        return {b.bit_count() for b in self._terms}

    def is_scalar(self) -> bool:
        return self.grades() <= {0}

    def scalar_part(self) -> Scalar:
        return self._terms.get(0, Scalar.zero())

    def is_homogeneous(self, k: int) -> bool:
        return self.grades() <= {k}

    # -- grade operations -----------------------------------------------

    def grade_part(self, k: int) -> "Multivector":
        if not (0 <= k <= self.dim):
            raise ValueError(f"grade {k} out of range 0..{self.dim}")
        return Multivector(self.dim, {b: c for b, c in self._terms.items() if b.bit_count() == k})

    def gradeinv(self) -> "Multivector":
        """Grade involution: grade-k parts scaled by (-1)^k."""
        return Multivector(
            self.dim,
            {b: (-c if b.bit_count() & 1 else c) for b, c in self._terms.items()},
        )

    # -- rendering ------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for blade, c in self.terms():
            if c.is_one():
                body, positive = str(blade), True
            elif c.is_minus_one():
                body, positive = str(blade), False
            elif c.is_single_term():
                body, positive = _scalar_body(c)
                body = f"{body}*{blade}"
            else:
                body, positive = f"({c})*{blade}", True
            if not pieces:
                pieces.append(body if positive else "-" + body)
            else:
                pieces.append((" + " if positive else " - ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Multivector({self.dim}, {self})"


def _scalar_body(c: Scalar) -> tuple:
    """Render a one-term or constant scalar, splitting off a leading minus."""
    s = str(c)
    if c.is_single_term() and s.startswith("-"):
        return s[1:], False
    return s, True


def cbasis(dim: int) -> list:
    """All blades in canonical (grade-major, then lexicographic) order."""
    _check_dim(dim)
    blades = [Blade(dim, bits) for bits in range(1 << dim)]
    blades.sort(key=lambda b: b.sort_key)
    return blades


def wedge(u: Multivector, v: Multivector) -> Multivector:
    """Exterior product, the bilinear extension of blade concatenation."""
    u._require_same_dim(v)
    terms: dict = {}
    for ab, ac in u._terms.items():
        for bb, bc in v._terms.items():
            if ab & bb:
                continue
            sign = merge_sign(ab, bb)
            c = ac * bc
            if sign < 0:
                c = -c
            bits = ab | bb
            s = terms.get(bits)
            s = c if s is None else s + c
            if s:
                terms[bits] = s
            else:
                terms.pop(bits, None)
    return Multivector(u.dim, terms)


def wedge_n(*args: Multivector) -> Multivector:
    """Left fold of the wedge over one or more factors."""
    if not args:
        raise ValueError("wedge_n needs at least one argument")
    out = args[0]
    for v in args[1:]:
        out = wedge(out, v)
    return out
