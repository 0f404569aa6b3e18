"""
Unitarizable highest weight supermodules of su(p,q|n).

This package decides, in exact rational arithmetic, which highest weights of sl(m|n) give
unitarizable supermodules for the real forms su(p,q|n), and checks the answer against the
Shapovalov form of the Verma supermodule.

Main features:
- Root data, Weyl vectors and odd reflections for the standard and non-standard positive systems
- The unitarity conditions and the one-parameter weight families
- Kostant partitions, g0-constituent candidates and the atypicality exclusion rule
- Gram matrices of the Shapovalov form and the Kac-Shapovalov determinant
- Classification of unitarizable weights through the Dirac inequality
"""

from .__about__ import __version__
from .algebra_core import (
    SYSTEM_ANTISTANDARD,
    SYSTEM_NONSTANDARD,
    SYSTEM_STANDARD,
    PositiveSystem,
    Root,
    Signature,
    Weight,
    build_positive_system,
    form,
    odd_reflect_weight,
    odd_reflection_system,
    simple_roots,
)
from .composition import (
    constituent_candidates,
    gamma_multiplicity,
    is_typical,
    kostant_P,
    surviving_candidates,
)
from .dirac import Verdict, classify, classify_fd, classify_ifd, dirac_margin, thresholds
from .exceptions import (
    RootException,
    SignatureException,
    SuperUnitaryException,
    WeightException,
)
from .shapovalov import (
    OMEGA_MINUS,
    OMEGA_MINUS_PLUS,
    OMEGA_PLUS,
    OMEGA_PLUS_MINUS,
    gram,
    gram_oracle,
    is_psd,
    ks_determinant,
)
from .weights import FDFamily, IFDFamily, family_weight, unitarity_conditions

__all__ = [
    "__version__",
    "OMEGA_MINUS",
    "OMEGA_MINUS_PLUS",
    "OMEGA_PLUS",
    "OMEGA_PLUS_MINUS",
    "SYSTEM_ANTISTANDARD",
    "SYSTEM_NONSTANDARD",
    "SYSTEM_STANDARD",
    "FDFamily",
    "IFDFamily",
    "PositiveSystem",
    "Root",
    "RootException",
    "Signature",
    "SignatureException",
    "SuperUnitaryException",
    "Verdict",
    "Weight",
    "WeightException",
    "build_positive_system",
    "classify",
    "classify_fd",
    "classify_ifd",
    "constituent_candidates",
    "dirac_margin",
    "family_weight",
    "form",
    "gamma_multiplicity",
    "gram",
    "gram_oracle",
    "is_psd",
    "is_typical",
    "kostant_P",
    "ks_determinant",
    "odd_reflect_weight",
    "odd_reflection_system",
    "simple_roots",
    "surviving_candidates",
    "thresholds",
    "unitarity_conditions",
]
