"""Dotted wedge product and conversion between dotted and undotted bases.

For an antisymmetric form F, the dotted wedge is the Clifford product taken
w.r.t. F alone: an associative deformation of the wedge that differs from it
by F-contraction terms.  The dotted basis monomial on indices ``i1..ik`` is
the F-Clifford chain of the generators, expanded in the undotted basis; the
inverse conversion is the same map at ``-F`` (callers always pass the same
context, the negation is internal).

Everything in the package computes in undotted coordinates; dotted
coordinates exist only at input/output boundaries.
"""

from __future__ import annotations

from .bform import BilinearForm
from .multivector import Blade, Multivector
from .product import Algorithm, cmul


class DottedContext:
    """An antisymmetric form together with conversion caches."""

    def __init__(self, F: BilinearForm, algo: Algorithm | None = None):
        if not F.is_antisymmetric():
            raise ValueError("dotted context needs an antisymmetric form")
        self.F = F
        self.dim = F.dim
        self._algo = algo
        self._monomials: dict = {}
        self._negated: "DottedContext | None" = None

    @staticmethod
    def from_named(name: str, dim: int) -> "DottedContext":
        return DottedContext(BilinearForm.antisymmetric_named(name, dim))

    def negated(self) -> "DottedContext":
        if self._negated is None:
            self._negated = DottedContext(-self.F, self._algo)
            self._negated._negated = self
        return self._negated

    def dotted_monomial(self, bits: int) -> Multivector:
        """The dotted basis monomial for a blade, in undotted coordinates."""
        hit = self._monomials.get(bits)
        if hit is not None:
            return hit
        indices = Blade(self.dim, bits).indices
        out = Multivector.unit(self.dim)
        for i in indices:
            out = cmul(out, Multivector.basis_vector(self.dim, i), self.F, self._algo)
        self._monomials[bits] = out
        return out


def dwedge(u: Multivector, v: Multivector, ctx: DottedContext) -> Multivector:
    """Dotted wedge product, expressed in the undotted basis.

    Equals the Clifford product w.r.t. the antisymmetric form: on a vector
    ``x`` the definitions agree, ``x dwedge u = x ^ u + (x _|_F u)``, and
    both sides are the associative bilinear extension of that.
    """
    u._require_same_dim(v)
    if u.dim != ctx.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs context dim {ctx.dim}")
    return cmul(u, v, ctx.F, ctx._algo)


def dwedge_n(args, ctx: DottedContext) -> Multivector:
    args = list(args)
    if not args:
        raise ValueError("dwedge_n needs at least one argument")
    out = args[0]
    for v in args[1:]:
        out = dwedge(out, v, ctx)
    return out


def wedge_to_dwedge(u: Multivector, ctx: DottedContext) -> Multivector:
    """Map each undotted blade to its dotted monomial, extended linearly.

    Grades 0 and 1 are fixed; higher blades pick up lower-grade terms only,
    so the map preserves the filtration.
    """
    if u.dim != ctx.dim:
        raise ValueError(f"dimension mismatch: {u.dim} vs context dim {ctx.dim}")
    out = Multivector.zero(u.dim)
    for bits, c in u._terms.items():
        out = out + ctx.dotted_monomial(bits).scale(c)
    return out


def dwedge_to_wedge(u: Multivector, ctx: DottedContext) -> Multivector:
    """Inverse of :func:`wedge_to_dwedge`; internally runs at ``-F``."""
    return wedge_to_dwedge(u, ctx.negated())
