"""Exact multiplicative-sequence and genus computations.

Thin python layer over the C++ core.  All rational values cross the boundary
as canonical strings ("7/45", "-1/24", "128"); Pontryagin numbers are dicts
keyed by partition strings like "p2^1.p1^2".
"""

from ._core import (
    bernoulli,
    unsigned_bernoulli,
    char_series,
    msequence,
    leading_coefficient,
    mixed_coefficient,
    closed_form_leading,
    product_identity,
    criterion_matrices,
    signature_zero,
    manifold_report,
    genus_value,
    validate_bundle,
    closing_check,
    total_space,
    kappa_pairing,
    bundle_search,
    bundle_table,
    conclude,
    verify_all,
)

__all__ = [
    "bernoulli",
    "unsigned_bernoulli",
    "char_series",
    "msequence",
    "leading_coefficient",
    "mixed_coefficient",
    "closed_form_leading",
    "product_identity",
    "criterion_matrices",
    "signature_zero",
    "manifold_report",
    "genus_value",
    "validate_bundle",
    "closing_check",
    "total_space",
    "kappa_pairing",
    "bundle_search",
    "bundle_table",
    "conclude",
    "verify_all",
]
