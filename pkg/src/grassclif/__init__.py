"""Exact Grassmann and Clifford algebra kernel for arbitrary bilinear forms.

Computations run over an exact scalar ring (rationals extended by free
symbols and named form entries) on spaces of dimension 1 through 9.  Two
interchangeable Clifford product algorithms, dotted-basis machinery,
reversion, signature classification with spinor matrices, and quaternion
and octonion arithmetic are exposed as a library and a ``grassclif`` CLI.
"""

from .bform import BilinearForm, FormSplit, form_eval, split
from .dotted import DottedContext, dwedge, dwedge_n, dwedge_to_wedge, wedge_to_dwedge
from .multivector import Blade, Multivector, cbasis, reorder, wedge, wedge_n
from .product import (
    Algorithm,
    DEFAULT_ALGORITHM,
    clifford_map,
    cmul,
    cmul_chevalley,
    cmul_n,
    cmul_rota_stein,
    cup,
    left_contract,
    reversion,
    right_contract,
)
from .randgen import random_blade, random_monomial, random_polynomial
from .scalar import FormEntry, Named, Scalar
from .special import (
    DEFAULT_FANO_TRIPLES,
    FanoTripleSet,
    Octonion,
    Quaternion,
    o_conj,
    o_mul,
    o_norm,
    octonion_to_paravector,
    omultable,
    paravector_to_octonion,
    q_conj,
    q_mul,
    q_norm,
)
from .structure import (
    ClassificationData,
    CliffordMatrix,
    DoubleFieldMatrix,
    FieldType,
    all_sigs,
    classify,
    cm_add,
    cm_mul,
    cm_scale,
    df_add,
    df_mul,
    radon_hurwitz,
    spinor_repr,
)

__all__ = [
    "Algorithm",
    "BilinearForm",
    "Blade",
    "ClassificationData",
    "CliffordMatrix",
    "DEFAULT_ALGORITHM",
    "DEFAULT_FANO_TRIPLES",
    "DottedContext",
    "DoubleFieldMatrix",
    "FanoTripleSet",
    "FieldType",
    "FormEntry",
    "FormSplit",
    "Multivector",
    "Named",
    "Octonion",
    "Quaternion",
    "Scalar",
    "all_sigs",
    "cbasis",
    "classify",
    "clifford_map",
    "cm_add",
    "cm_mul",
    "cm_scale",
    "cmul",
    "cmul_chevalley",
    "cmul_n",
    "cmul_rota_stein",
    "cup",
    "df_add",
    "df_mul",
    "dwedge",
    "dwedge_n",
    "dwedge_to_wedge",
    "form_eval",
    "left_contract",
    "o_conj",
    "o_mul",
    "o_norm",
    "octonion_to_paravector",
    "omultable",
    "paravector_to_octonion",
    "q_conj",
    "q_mul",
    "q_norm",
    "radon_hurwitz",
    "random_blade",
    "random_monomial",
    "random_polynomial",
    "reorder",
    "reversion",
    "right_contract",
    "spinor_repr",
    "split",
    "wedge",
    "wedge_n",
    "wedge_to_dwedge",
]

__version__ = "0.1.0"
