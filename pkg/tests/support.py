"""Shared helpers and independent oracles for the test suite."""

import random
from fractions import Fraction
from itertools import permutations

from grassclif import BilinearForm, Blade, Multivector, Scalar


def blade(dim, *indices) -> Blade:
    return Blade.from_indices(dim, indices)


def bmv(dim, *indices) -> Multivector:
    return blade(dim, *indices).as_multivector()


def mv(dim, *pairs) -> Multivector:
    """Build a multivector from (indices-tuple, coeff) pairs."""
    return Multivector.from_terms(dim, pairs)


def fe(name, i, j) -> Scalar:
    return Scalar.form_entry(name, i, j)


def sym(name) -> Scalar:
    return Scalar.sym(name)


def perm_det(form: BilinearForm, xs, ys) -> Scalar:
    """Permutation-sum determinant of the submatrix form[x_i, y_j].

    Independent oracle for the Laplace-expansion evaluation of the form
    extended to blades: sums sgn(p) * prod_i B(x_i, y_{p(i)}) over all
    permutations, with the parity computed by inversion counting.
    """
    n = len(xs)
    if n != len(ys):
        return Scalar.zero()
    total = Scalar.zero()
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        prod = Scalar.one()
        for i in range(n):
            prod = prod * form.entry(xs[i], ys[perm[i]])
        total = total + (prod if inversions % 2 == 0 else -prod)
    return total


def random_rational_form(rng: random.Random, dim: int) -> BilinearForm:
    rows = [
        [Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(dim)]
        for _ in range(dim)
    ]
    return BilinearForm.explicit(rows)


def random_vector(rng: random.Random, dim: int) -> Multivector:
    out = Multivector.zero(dim)
    while out.is_zero():
        for i in range(1, dim + 1):
            c = Fraction(rng.randint(-3, 3))
            if c:
                out = out + Multivector.basis_vector(dim, i).scale(c)
    return out


def general_symbolic(dim: int, prefix: str) -> Multivector:
    """A fully general element: one named symbol per basis blade."""
    from grassclif import cbasis

    out = Multivector.zero(dim)
    for k, b in enumerate(cbasis(dim)):
        out = out + b.as_multivector(Scalar.sym(f"{prefix}{k}"))
    return out
