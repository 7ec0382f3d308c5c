"""Classification of real Clifford algebras and spinor matrix representations.

For a diagonal signature (p, q) with 1 <= p+q <= 9 this module computes the
division ring type, (semi)simplicity, a primitive idempotent f built from
commuting square-one blades, bases of the minimal left ideal S = Cl*f, and
the matrices of the generators acting on S.  Everything is derived on
demand by exact computation; nothing is table-driven beyond the field-type
pattern of period 8 and the Radon-Hurwitz numbers.

Matrices come back with entries in the division-ring subalgebra; for
semisimple signatures (p - q = 1 mod 4) each generator is returned as a
pair of matrices over the two central components (a double-field matrix).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .bform import BilinearForm
from .linsolve import RationalSpan, solve_exact
from .multivector import Blade, Multivector, cbasis
from .product import Algorithm, cmul as _cmul_generic, cmul_n


def cmul(u, v, B):
    # signature forms are sparse numeric: the recursive route prunes best
    return _cmul_generic(u, v, B, Algorithm.CHEVALLEY)
from .scalar import Scalar


class FieldType(enum.Enum):
    REAL = "real"
    COMPLEX = "complex"
    QUATERNIONIC = "quaternionic"
    REAL_DOUBLE = "real_double"
    QUATERNIONIC_DOUBLE = "quaternionic_double"


_FIELD_BY_PQ_MOD8 = {
    0: FieldType.REAL,
    1: FieldType.REAL_DOUBLE,
    2: FieldType.REAL,
    3: FieldType.COMPLEX,
    4: FieldType.QUATERNIONIC,
    5: FieldType.QUATERNIONIC_DOUBLE,
    6: FieldType.QUATERNIONIC,
    7: FieldType.COMPLEX,
}

_DIVISION_RING_DIM = {
    FieldType.REAL: 1,
    FieldType.COMPLEX: 2,
    FieldType.QUATERNIONIC: 4,
    FieldType.REAL_DOUBLE: 1,  # one component of the double field
    FieldType.QUATERNIONIC_DOUBLE: 4,
}


def radon_hurwitz(m: int) -> int:
    """The Radon-Hurwitz number, extended 8-periodically to all integers."""
    base = (0, 1, 2, 2, 3, 3, 3, 3)
    return base[m % 8] + 4 * (m // 8)


def _check_signature(p: int, q: int) -> None:
    if p < 0 or q < 0 or not (1 <= p + q <= 9):
        raise ValueError(f"signature ({p},{q}) out of range: need p,q >= 0 and 1 <= p+q <= 9")


def all_sigs(n: int) -> tuple:
    """Partition the signatures of total dimension n into simple/semisimple."""
    if not (1 <= n <= 9):
        raise ValueError(f"dimension {n} out of range 1..9")
    simple, semisimple = [], []
    for p in range(n, -1, -1):
        q = n - p
        (semisimple if (p - q) % 4 == 1 else simple).append((p, q))
    return simple, semisimple


# ---------------------------------------------------------------------------
# idempotent construction
# ---------------------------------------------------------------------------

def _blade_square_sign(bits: int, p: int) -> int:
    """Sign of the Clifford square of a blade under the (p, q) form."""
    g = bits.bit_count()
    sign = -1 if (g * (g - 1) // 2) & 1 else 1
    neg = bits >> p  # indices above p square to -1
    if neg.bit_count() & 1:
        sign = -sign
    return sign


def _blades_commute(a: int, b: int) -> int:
    """+1 or -1 depending on whether two blades commute under a diagonal form."""
    swaps = a.bit_count() * b.bit_count() - (a & b).bit_count()
    return -1 if swaps & 1 else 1


class _Gf2Span:
    """GF(2) span of blade bitmasks: tracks multiplicative independence."""

    def __init__(self):
        self.basis: list = []

    def _reduce(self, bits: int) -> int:
        for b in self.basis:
            bits = min(bits, bits ^ b)
        return bits

    def contains(self, bits: int) -> bool:
        return self._reduce(bits) == 0

    def copy_with(self, bits: int) -> "_Gf2Span":
        out = _Gf2Span()
        out.basis = self.basis + [self._reduce(bits)]
        return out


def _candidate_blades(p: int, q: int) -> list:
    """Deterministic scan order for idempotent factors.

    Hyperbolic pair blades e_i ^ e_{n+1-i} come first (they square to +1 and
    commute pairwise), then the unit +1 vectors, then all remaining blades in
    grade-major lexicographic order.
    """
    n = p + q
    out = []
    for i in range(1, min(p, q) + 1):
        out.append(Blade.from_indices(n, (i, n + 1 - i)).bits)
    for i in range(1, p + 1):
        bits = 1 << (i - 1)
        if bits not in out:
            out.append(bits)
    seen = set(out)
    for blade in cbasis(n):
        if blade.bits and blade.bits not in seen:
            out.append(blade.bits)
    return out


def _select_factors(p: int, q: int, k: int, semisimple: bool) -> list:
    """Choose k commuting, independent, square-one blades deterministically."""
    n = p + q
    top = (1 << n) - 1
    preset = [top] if semisimple else []  # central volume element, kept last
    want = k - len(preset)
    if want < 0:
        raise AssertionError("factor count smaller than preset")

    candidates = [b for b in _candidate_blades(p, q) if b not in preset]
    span = _Gf2Span()
    for b in preset:
        if _blade_square_sign(b, p) != 1:
            raise AssertionError(f"volume element does not square to +1 for ({p},{q})")
        span = span.copy_with(b)

    def search(chosen: list, span: _Gf2Span, start: int):
        if len(chosen) == want:
            return chosen
        for idx in range(start, len(candidates)):
            b = candidates[idx]
            if _blade_square_sign(b, p) != 1:
                continue
            if any(_blades_commute(b, c) != 1 for c in chosen):
                continue
            if semisimple and _blades_commute(b, top) != 1:
                continue
            if span.contains(b):
                continue
            found = search(chosen + [b], span.copy_with(b), idx + 1)
            if found is not None:
                return found
        return None

    chosen = search([], span, 0)
    if chosen is None:
        raise AssertionError(f"no idempotent factor set of size {k} found for ({p},{q})")
    return [Blade(n, b) for b in chosen + preset]


def _idempotent_from_factors(factors: list, form: BilinearForm, dim: int) -> Multivector:
    half = Fraction(1, 2)
    f = Multivector.unit(dim)
    for t in factors:
        factor = Multivector.unit(dim, half) + t.as_multivector(half)
        f = cmul(f, factor, form)
    return f


# ---------------------------------------------------------------------------
# classification record
# ---------------------------------------------------------------------------

def _coords(u: Multivector) -> dict:
    return {bits: c.as_rational() for bits, c in u._terms.items()}


@dataclass
class ClassificationData:
    """Everything the classification derives for one signature."""

    p: int
    q: int
    field_type: FieldType
    matrix_dim: int
    simple: bool
    factor_count: int
    factors: list
    idempotent: Multivector
    form: BilinearForm = field(repr=False)
    _ideal_basis: list | None = field(default=None, repr=False)
    _division_ring_basis: list | None = field(default=None, repr=False)
    _module_basis: list | None = field(default=None, repr=False)

    @property
    def simplicity(self) -> str:
        return "simple" if self.simple else "semisimple"

    @property
    def ideal_dim(self) -> int:
        return 1 << (self.p + self.q - self.factor_count)

    @property
    def division_ring_dim(self) -> int:
        return _DIVISION_RING_DIM[self.field_type]

    def _scan_bases(self) -> None:
        ideal, division, module = _ideal_bases(self.form, self.idempotent, self.ideal_dim,
                                               self.division_ring_dim, self.matrix_dim)
        self._ideal_basis = ideal
        self._division_ring_basis = division
        self._module_basis = module

    @property
    def ideal_real_basis(self) -> list:
        """Blade coset representatives of a real basis of S = Cl*f."""
        if self._ideal_basis is None:
            self._scan_bases()
        return [b.as_multivector() for b in self._ideal_basis]

    @property
    def division_ring_basis(self) -> list:
        """Blade representatives spanning the division ring fClf."""
        if self._division_ring_basis is None:
            self._scan_bases()
        return [b.as_multivector() for b in self._division_ring_basis]

    @property
    def module_basis(self) -> list:
        """Blade representatives generating S as a right module over fClf."""
        if self._module_basis is None:
            self._scan_bases()
        return [b.as_multivector() for b in self._module_basis]


def _ideal_bases(form, f, ideal_dim, ring_dim, module_dim):
    dim = form.dim
    blades = cbasis(dim)

    ideal_span = RationalSpan()
    ideal_reps = []
    products = {}
    for b in blades:
        bf = cmul(b.as_multivector(), f, form)
        products[b.bits] = bf
        if len(ideal_span) < ideal_dim and ideal_span.add(_coords(bf)):
            ideal_reps.append(b)
    if len(ideal_reps) != ideal_dim:
        raise AssertionError("ideal basis scan came up short")

    ring_span = RationalSpan()
    ring_reps = []
    for b in blades:
        bf = products[b.bits]
        if bf.is_zero():
            continue
        if bf != cmul(f, b.as_multivector(), form):
            continue
        if ring_span.add(_coords(bf)):
            ring_reps.append(b)
            if len(ring_reps) == ring_dim:
                break
    if len(ring_reps) != ring_dim:
        raise AssertionError("division ring scan came up short")

    module_span = RationalSpan()
    module_reps = []
    for b in blades:
        bf = products[b.bits]
        if bf.is_zero() or module_span.contains(_coords(bf)):
            continue
        module_reps.append(b)
        for kb in ring_reps:
            module_span.add(_coords(cmul(bf, kb.as_multivector(), form)))
        if len(module_reps) == module_dim:
            break
    if len(module_reps) != module_dim or len(module_span) != ideal_dim:
        raise AssertionError("module basis scan came up short")

    return ideal_reps, ring_reps, module_reps


@lru_cache(maxsize=None)
def classify(p: int, q: int) -> ClassificationData:
    """Classification data for the Clifford algebra of signature (p, q)."""
    _check_signature(p, q)
    pq = (p - q) % 8
    field_type = _FIELD_BY_PQ_MOD8[pq]
    simple = (p - q) % 4 != 1
    k = q - radon_hurwitz(q - p)
    matrix_dim = 1 << (k if simple else k - 1)
    form = BilinearForm.from_signature(p, q)
    factors = _select_factors(p, q, k, not simple)
    f = _idempotent_from_factors(factors, form, p + q)
    if cmul(f, f, form) != f:
        raise AssertionError(f"constructed idempotent fails f*f = f for ({p},{q})")
    return ClassificationData(
        p=p, q=q, field_type=field_type, matrix_dim=matrix_dim, simple=simple,
        factor_count=k, factors=factors, idempotent=f, form=form,
    )


# ---------------------------------------------------------------------------
# Clifford-entried matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CliffordMatrix:
    """A rectangular matrix whose entries multiply via the Clifford product."""

    rows: int
    cols: int
    entries: tuple  # tuple of tuples of Multivector
    form: BilinearForm

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry shape mismatch")

    @staticmethod
    def from_rows(rows, form: BilinearForm) -> "CliffordMatrix":
        ents = tuple(tuple(_as_entry(v, form.dim) for v in row) for row in rows)
        return CliffordMatrix(len(ents), len(ents[0]), ents, form)

    @staticmethod
    def identity(n: int, form: BilinearForm) -> "CliffordMatrix":
        rows = tuple(
            tuple(Multivector.unit(form.dim) if i == j else Multivector.zero(form.dim)
                  for j in range(n))
            for i in range(n)
        )
        return CliffordMatrix(n, n, rows, form)

    @staticmethod
    def zero(rows: int, cols: int, form: BilinearForm) -> "CliffordMatrix":
        ents = tuple(tuple(Multivector.zero(form.dim) for _ in range(cols)) for _ in range(rows))
        return CliffordMatrix(rows, cols, ents, form)

    def entry(self, i: int, j: int) -> Multivector:
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, CliffordMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __str__(self):
        return "[" + "; ".join(", ".join(_entry_str(v) for v in row) for row in self.entries) + "]"


def _entry_str(v: Multivector) -> str:
    # scalar entries read better bare: 1 and -1 rather than Id and -Id
    return str(v.scalar_part()) if v.is_scalar() else str(v)


def _as_entry(v, dim: int) -> Multivector:
    if isinstance(v, Multivector):
        return v
    return Multivector.unit(dim, v)


def cm_add(a: CliffordMatrix, b: CliffordMatrix) -> CliffordMatrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch in matrix sum")
    rows = tuple(
        tuple(a.entries[i][j] + b.entries[i][j] for j in range(a.cols))
        for i in range(a.rows)
    )
    return CliffordMatrix(a.rows, a.cols, rows, a.form)


def cm_mul(a: CliffordMatrix, b: CliffordMatrix) -> CliffordMatrix:
    """Matrix product with Clifford multiplication applied to the entries."""
    if a.cols != b.rows:
        raise ValueError("shape mismatch in matrix product")
    if a.form != b.form:
        raise ValueError("matrix product needs matching forms")
    rows = []
    for i in range(a.rows):
        row = []
        for j in range(b.cols):
            acc = Multivector.zero(a.form.dim)
            for t in range(a.cols):
                acc = acc + cmul(a.entries[i][t], b.entries[t][j], a.form)
            row.append(acc)
        rows.append(tuple(row))
    return CliffordMatrix(a.rows, b.cols, tuple(rows), a.form)


def cm_scale(a: CliffordMatrix, c) -> CliffordMatrix:
    rows = tuple(tuple(v.scale(c) for v in row) for row in a.entries)
    return CliffordMatrix(a.rows, a.cols, rows, a.form)


@dataclass(frozen=True)
class DoubleFieldMatrix:
    """A pair of equally shaped Clifford matrices over a double field."""

    first: CliffordMatrix
    second: CliffordMatrix

    def __post_init__(self):
        if (self.first.rows, self.first.cols) != (self.second.rows, self.second.cols):
            raise ValueError("double-field components must share a shape")

    def __str__(self):
        return f"({self.first}, {self.second})"


def df_add(a: DoubleFieldMatrix, b: DoubleFieldMatrix) -> DoubleFieldMatrix:
    return DoubleFieldMatrix(cm_add(a.first, b.first), cm_add(a.second, b.second))


def df_mul(a: DoubleFieldMatrix, b: DoubleFieldMatrix) -> DoubleFieldMatrix:
    return DoubleFieldMatrix(cm_mul(a.first, b.first), cm_mul(a.second, b.second))


# ---------------------------------------------------------------------------
# spinor representation
# ---------------------------------------------------------------------------

def _component_matrices(form, f, ideal_dim, ring_dim, module_dim):
    """Matrices of all generators acting on the module basis of Cl*f."""
    dim = form.dim
    _, ring_reps, module_reps = _ideal_bases(form, f, ideal_dim, ring_dim, module_dim)
    columns = []
    for mb in module_reps:
        mf = cmul(mb.as_multivector(), f, form)
        for kb in ring_reps:
            columns.append(_coords(cmul(mf, kb.as_multivector(), form)))
    mats = []
    for gen in range(1, dim + 1):
        e_gen = Multivector.basis_vector(dim, gen)
        rows = [[None] * module_dim for _ in range(module_dim)]
        for j, mb in enumerate(module_reps):
            target = cmul(e_gen, cmul(mb.as_multivector(), f, form), form)
            sol = solve_exact(columns, _coords(target))
            for kpos in range(module_dim):
                entry = Multivector.zero(dim)
                for l, kb in enumerate(ring_reps):
                    c = sol[kpos * ring_dim + l]
                    if c:
                        entry = entry + kb.as_multivector().scale(c)
                rows[kpos][j] = entry
        mats.append(CliffordMatrix(module_dim, module_dim, tuple(tuple(r) for r in rows), form))
    return mats


def spinor_repr(p: int, q: int) -> list:
    """Matrices of the generators on the minimal left ideal, one per e_i.

    Returns ``[(i, M_i)]`` with ``M_i`` a :class:`CliffordMatrix` for simple
    signatures and a :class:`DoubleFieldMatrix` (the two central components)
    for semisimple ones.  The matrices satisfy
    ``M_i M_j + M_j M_i = 2 g(i,j) I`` entrywise.
    """
    cd = classify(p, q)
    form = cd.form
    if cd.simple:
        mats = _component_matrices(form, cd.idempotent, cd.ideal_dim,
                                   cd.division_ring_dim, cd.matrix_dim)
        return list(zip(range(1, p + q + 1), mats))

    # semisimple: the last factor is the central volume element; flip its
    # sign to land in the second component
    dim = p + q
    half = Fraction(1, 2)
    f_plus = cd.idempotent
    base = Multivector.unit(dim)
    for t in cd.factors[:-1]:
        base = cmul(base, Multivector.unit(dim, half) + t.as_multivector(half), form)
    omega = cd.factors[-1]
    f_minus = cmul(base, Multivector.unit(dim, half) - omega.as_multivector(half), form)
    plus = _component_matrices(form, f_plus, cd.ideal_dim, cd.division_ring_dim, cd.matrix_dim)
    minus = _component_matrices(form, f_minus, cd.ideal_dim, cd.division_ring_dim, cd.matrix_dim)
    return [(i, DoubleFieldMatrix(mp, mm))
            for i, (mp, mm) in enumerate(zip(plus, minus), start=1)]
