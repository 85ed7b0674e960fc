"""Exact computation for homotopy groups with coefficients.

Finitely generated abelian groups in canonical form, the four bifunctors
Hom/Ext/tensor/Tor with brute-force oracles, integer chain complexes with
Smith-normal-form homology, symbolic Moore-space calculus, and the
classification and counting of binary homotopy operations (Whitehead,
Torsion and Ext operations).
"""

from ._core import (  # noqa: F401
    BoundExceededError,
    ChainComplex,
    DegreeTooSmallError,
    FgAbGroup,
    GroupParseError,
    GroupValueError,
    MooreExpr,
    StemTable,
    UctSequence,
    Unsupported2TorsionError,
    basic_range_check,
    bo_group,
    classify,
    cokernel,
    commutativity_sign,
    count_whitehead,
    direct_sum,
    ext,
    ext_ops_enumerate,
    hom,
    homology,
    homotopy_with_coeffs,
    kernel_basis,
    kunneth_check,
    maps_check,
    moore_complex,
    neisendorfer_shift,
    oracle_ext,
    oracle_hom_count,
    oracle_tensor,
    oracle_tor,
    parse_group,
    render_group,
    smash_decompose,
    smith_normal_form,
    special_kind,
    stem,
    tensor,
    tensor_complex,
    tor,
    torsion_exists,
    triviality_check,
    verify_all,
    wedge_complex,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
