"""
Exact computations in category O for the periplectic superalgebra pe(n),
osp(2|2n) and gl(m|n): strong linkage, socles of Verma cokernels, homological
dimensions, and a brute-force oracle on weight-truncated modules.
"""
from __future__ import annotations

__version__ = "0.1.0"

from .algebra import (
    AlgebraDescriptor,
    build_algebra,
    is_typical,
    parse_algebra,
    parse_weight,
)
from .config import Config
from .errors import SuperOError
from .labels import SimpleMultiset
from .weights import BasisTag, Weight

__all__ = [
    "AlgebraDescriptor",
    "BasisTag",
    "Config",
    "SimpleMultiset",
    "SuperOError",
    "Weight",
    "__version__",
    "build_algebra",
    "is_typical",
    "parse_algebra",
    "parse_weight",
]
