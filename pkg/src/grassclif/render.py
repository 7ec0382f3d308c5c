"""Text, JSON and LaTeX renderings of multivectors and scalars.

The JSON schema is stable for diffing: a multivector is
``{"terms": [{"blade": [indices...], "coeff": "<scalar expression>"}]}``
with terms in canonical basis order; coefficient strings reparse in the
expression grammar.
"""

from __future__ import annotations

from fractions import Fraction

from .dotted import DottedContext, dwedge_to_wedge
from .multivector import Blade, Multivector
from .scalar import FormEntry, Named, Scalar


def blade_text(blade: Blade, alias: bool = False, dotted: bool = False) -> str:
    if blade.is_unit:
        return "Id"
    if alias and not dotted:
        return blade.alias()
    sep = "W" if dotted else "w"
    return sep.join(f"e{i}" for i in blade.indices)


def mv_text(mv: Multivector, alias: bool = False, dotted_ctx: DottedContext | None = None) -> str:
    """Canonical text; with a dotted context, coordinates are dotted."""
    if dotted_ctx is not None:
        mv = dwedge_to_wedge(mv, dotted_ctx)
    if mv.is_zero():
        return "0"
    pieces = []
    for blade, c in mv.terms():
        name = blade_text(blade, alias=alias, dotted=dotted_ctx is not None)
        if c.is_one():
            body, positive = name, True
        elif c.is_minus_one():
            body, positive = name, False
        elif c.is_single_term():
            s = str(c)
            positive = not s.startswith("-")
            body = f"{s.lstrip('-')}*{name}"
        else:
            body, positive = f"({c})*{name}", True
        if not pieces:
            pieces.append(body if positive else "-" + body)
        else:
            pieces.append((" + " if positive else " - ") + body)
    return "".join(pieces)


def mv_json(mv: Multivector, dotted_ctx: DottedContext | None = None) -> dict:
    if dotted_ctx is not None:
        mv = dwedge_to_wedge(mv, dotted_ctx)
    return {
        "terms": [
            {"blade": list(blade.indices), "coeff": str(c)}
            for blade, c in mv.terms()
        ]
    }


# ---------------------------------------------------------------------------
# LaTeX
# ---------------------------------------------------------------------------

def _frac_latex(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    sign = "-" if f < 0 else ""
    return f"{sign}\\tfrac{{{abs(f.numerator)}}}{{{f.denominator}}}"


def scalar_latex(c: Scalar) -> str:
    if c.is_zero():
        return "0"
    pieces = []
    for pp, coeff in c.sorted_terms():
        factors = []
        for atom, e in pp:
            if isinstance(atom, FormEntry):
                base = f"{atom.form}_{{{atom.row},{atom.col}}}"
            else:
                base = f"\\mathit{{{atom.name}}}"
            factors.append(base if e == 1 else f"{base}^{{{e}}}")
        mag = abs(coeff)
        if not factors:
            body = _frac_latex(mag)
        elif mag == 1:
            body = "\\,".join(factors)
        else:
            body = "\\,".join([_frac_latex(mag)] + factors)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append((" + " if coeff > 0 else " - ") + body)
    return "".join(pieces)


def blade_latex(blade: Blade, dotted: bool = False) -> str:
    if blade.is_unit:
        return "\\mathbf{1}"
    op = "\\mathbin{\\dot\\wedge}" if dotted else "\\wedge"
    return op.join(f"e_{{{i}}}" for i in blade.indices)


def mv_latex(mv: Multivector, dotted_ctx: DottedContext | None = None) -> str:
    if dotted_ctx is not None:
        mv = dwedge_to_wedge(mv, dotted_ctx)
    if mv.is_zero():
        return "0"
    pieces = []
    for blade, c in mv.terms():
        name = blade_latex(blade, dotted=dotted_ctx is not None)
        if c.is_one():
            body, positive = name, True
        elif c.is_minus_one():
            body, positive = name, False
        elif c.is_single_term():
            s = scalar_latex(c)
            positive = not s.startswith("-")
            body = f"{s.lstrip('-')}\\,{name}"
        else:
            body, positive = f"\\left({scalar_latex(c)}\\right){name}", True
        if not pieces:
            pieces.append(body if positive else "-" + body)
        else:
            pieces.append((" + " if positive else " - ") + body)
    return "".join(pieces)
