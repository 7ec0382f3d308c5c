"""Quaternions and octonions with exact coefficients.

Quaternions carry the Hamilton product.  Octonions are spanned by a unit
and seven imaginary units whose products are oriented by the lines of the
Fano plane; the product table is built once from the chosen triples.  An
octonion also converts to and from a paravector (grade 0 plus grade 1) of
the 7-dimensional algebra of negative-definite signature, which is how the
two worlds are tied together; the octonion product itself stays table
driven.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .multivector import Blade, Multivector
from .scalar import Scalar


def _c(v) -> Scalar:
    return Scalar._coerce(v)


@dataclass(frozen=True)
class Quaternion:
    """w + x*i + y*j + z*k with exact scalar coefficients."""

    w: Scalar
    x: Scalar
    y: Scalar
    z: Scalar

    @staticmethod
    def of(w=0, x=0, y=0, z=0) -> "Quaternion":
        return Quaternion(_c(w), _c(x), _c(y), _c(z))

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __str__(self):
        return f"({self.w}) + ({self.x})*i + ({self.y})*j + ({self.z})*k"


def q_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product: i*j = k and cyclically, i*i = j*j = k*k = -1."""
    return Quaternion(
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    )


def q_conj(a: Quaternion) -> Quaternion:
    return Quaternion(a.w, -a.x, -a.y, -a.z)


def q_norm(a: Quaternion) -> Scalar:
    """Sum of the four coefficient squares; multiplicative over products."""
    return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z


# ---------------------------------------------------------------------------
# octonions
# ---------------------------------------------------------------------------

DEFAULT_FANO_TRIPLES = ((1, 2, 3), (1, 4, 5), (1, 7, 6), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 6, 5))


class FanoTripleSet:
    """Seven oriented lines of the Fano plane over the indices 1..7.

    Each unordered pair of distinct indices must lie on exactly one line;
    the cyclic order of a line fixes the product orientation.
    """

    def __init__(self, triples=DEFAULT_FANO_TRIPLES):
        triples = tuple(tuple(t) for t in triples)
        if len(triples) != 7:
            raise ValueError("a Fano triple set has exactly 7 triples")
        seen_pairs = {}
        for t in triples:
            if len(t) != 3 or len(set(t)) != 3 or not all(1 <= i <= 7 for i in t):
                raise ValueError(f"invalid Fano triple {t}")
            for a in t:
                for b in t:
                    if a < b:
                        if (a, b) in seen_pairs:
                            raise ValueError(f"pair ({a},{b}) lies on two lines")
                        seen_pairs[(a, b)] = t
        if len(seen_pairs) != 21:
            raise ValueError("triples do not cover all 21 index pairs")
        self.triples = triples
        self._table = self._build_table()

    def _build_table(self) -> dict:
        table = {}
        for a, b, c in self.triples:
            # cyclic products positive, anticyclic negative
            for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
                table[(x, y)] = (1, z)
                table[(y, x)] = (-1, z)
        for i in range(1, 8):
            table[(i, i)] = (-1, 0)
            table[(0, i)] = (1, i)
            table[(i, 0)] = (1, i)
        table[(0, 0)] = (1, 0)
        return table

    def product(self, i: int, j: int) -> tuple:
        """(sign, index) with basis convention 0 = the unit."""
        return self._table[(i, j)]


@dataclass(frozen=True)
class Octonion:
    """o0 + o1*e1 + ... + o7*e7 over the exact scalar ring."""

    coeffs: tuple  # 8 Scalars

    def __post_init__(self):
        if len(self.coeffs) != 8:
            raise ValueError("an octonion has 8 coefficients")

    @staticmethod
    def of(*values) -> "Octonion":
        values = tuple(values) + (0,) * (8 - len(values))
        return Octonion(tuple(_c(v) for v in values))

    @staticmethod
    def unit(i: int) -> "Octonion":
        return Octonion.of(*(1 if k == i else 0 for k in range(8)))

    def __add__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Octonion") -> "Octonion":
        return Octonion(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Octonion":
        return Octonion(tuple(-a for a in self.coeffs))

    def __str__(self):
        names = ["1"] + [f"o{i}" for i in range(1, 8)]
        parts = [f"({c})*{n}" for c, n in zip(self.coeffs, names) if c]
        return " + ".join(parts) if parts else "0"


def o_mul(a: Octonion, b: Octonion, triples: FanoTripleSet | None = None) -> Octonion:
    """Bilinear extension of the table product; non-associative."""
    triples = triples or FanoTripleSet()
    out = [Scalar.zero() for _ in range(8)]
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j, cb in enumerate(b.coeffs):
            if not cb:
                continue
            sign, k = triples.product(i, j)
            term = ca * cb
            out[k] = out[k] + (term if sign > 0 else -term)
    return Octonion(tuple(out))


def o_conj(a: Octonion) -> Octonion:
    return Octonion((a.coeffs[0],) + tuple(-c for c in a.coeffs[1:]))


def o_norm(a: Octonion) -> Scalar:
    """Sum of the eight coefficient squares; the composition-algebra norm."""
    out = Scalar.zero()
    for c in a.coeffs:
        out = out + c * c
    return out


def omultable(triples: FanoTripleSet | None = None) -> list:
    """The full signed 8x8 table over the basis (1, o1..o7).

    Entry [i][j] is ``(sign, k)`` meaning basis_i * basis_j = sign * basis_k.
    """
    triples = triples or FanoTripleSet()
    return [[triples.product(i, j) for j in range(8)] for i in range(8)]


# ---------------------------------------------------------------------------
# paravector bridge to the 7-dimensional negative-definite algebra
# ---------------------------------------------------------------------------

def octonion_to_paravector(a: Octonion) -> Multivector:
    """The scalar-plus-vector multivector with the same eight coordinates."""
    out = Multivector.unit(7, a.coeffs[0])
    for i in range(1, 8):
        if a.coeffs[i]:
            out = out + Multivector.basis_vector(7, i).scale(a.coeffs[i])
    return out


def paravector_to_octonion(u: Multivector) -> Octonion:
    if u.dim != 7:
        raise ValueError("paravector lives in dimension 7")
    if not u.grades() <= {0, 1}:
        raise ValueError("paravector must have grades 0 and 1 only")
    coeffs = [u.scalar_part()]
    for i in range(1, 8):
        coeffs.append(u.coeff(Blade.from_indices(7, (i,))))
    return Octonion(tuple(coeffs))
