"""Exact GSV indices and obstructions for hypersurface singularities."""

import json

from ._gsvkit import (
    GsvError,
    __version__,
    classify_germ,
    corollary1_bound,
    euler_field,
    gsv_index,
    milnor_number,
    quotient_dimension,
    run,
    tangency_cofactor,
    theorem3_rhs,
    tjurina_number,
)


def report(text, command, **kwargs):
    """Run a command and return (exit_code, parsed JSON document)."""
    code, document, _ = run(text, command, format="structured", **kwargs)
    return code, json.loads(document)


__all__ = [
    "GsvError",
    "__version__",
    "classify_germ",
    "corollary1_bound",
    "euler_field",
    "gsv_index",
    "milnor_number",
    "quotient_dimension",
    "report",
    "run",
    "tangency_cofactor",
    "theorem3_rhs",
    "tjurina_number",
]
