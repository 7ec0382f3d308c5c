"""Seeded random Grassmann elements for tests and benchmarks."""

from __future__ import annotations

import random
from fractions import Fraction

from .multivector import Blade, Multivector


def random_blade(rng: random.Random, dim: int) -> Blade:
    """A uniform random basis monomial (all 2^dim blades equally likely)."""
    return Blade(dim, rng.randrange(1 << dim))


def random_coeff(rng: random.Random) -> Fraction:
    num = rng.choice([n for n in range(-9, 10) if n])
    return Fraction(num, rng.randint(1, 4))


def random_monomial(rng: random.Random, dim: int) -> Multivector:
    """A random blade with a random small nonzero rational coefficient."""
    return random_blade(rng, dim).as_multivector(random_coeff(rng))


def random_polynomial(rng: random.Random, dim: int, nterms: int) -> Multivector:
    """A sum of ``nterms`` random monomials (coinciding blades may collapse)."""
    out = Multivector.zero(dim)
    for _ in range(nterms):
        out = out + random_monomial(rng, dim)
    return out
