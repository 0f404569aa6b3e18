"""
Dirac inequality and the classification of unitarizable highest weight supermodules.

A highest weight Λ is unitarizable exactly when the Casimir does not decrease on any
g0-constituent of L(Λ); for a single odd root α this reads (Λ+ρ, α) ≤ 0. The classifiers
below evaluate the resulting closed conditions exactly.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .algebra_core import (
    SYSTEM_NONSTANDARD,
    SYSTEM_STANDARD,
    PositiveSystem,
    Root,
    Signature,
    Weight,
    build_positive_system,
    form,
)
from .exceptions import NotOddPositiveException, PslConstraintViolatedException, WrongCaseException
from .shapovalov import DEFAULT_DEPTH, MAX_DEPTH, default_variant, gram_oracle
from .weights import (
    FDFamily,
    IFDFamily,
    Reason,
    family_weight,
    indices,
    plateau_indices,
    unitarity_conditions,
)

logger = logging.getLogger(__name__)

CASE_COMPACT = "compact"
CASE_NONCOMPACT = "noncompact"


@dataclass(frozen=True)
class Verdict:
    unitarizable: bool
    case: str
    reasons: tuple[Reason, ...]

    def to_dict(self, m: int) -> dict[str, Any]:
        return {
            "unitarizable": self.unitarizable,
            "case": self.case,
            "reasons": [reason.to_dict(m) for reason in self.reasons],
        }


def casimir_eigenvalue(Lambda: Weight, ps: PositiveSystem) -> Fraction:
    """Return (Λ+2ρ, Λ), the eigenvalue of the quadratic Casimir on L(Λ)."""
    return form(Lambda + ps.rho.scaled(2), Lambda, ps.signature)


def casimir_difference(Lambda: Weight, alpha: Root, ps: PositiveSystem) -> Fraction:
    """Return C(Λ-α) - C(Λ), which equals -2(Λ+ρ, α) for an odd root α."""
    return casimir_eigenvalue(Lambda - alpha, ps) - casimir_eigenvalue(Lambda, ps)


def dirac_margin(Lambda: Weight, alpha: Root, ps: PositiveSystem) -> Fraction:
    """Return (Λ+ρ, α) for an odd positive root α."""
    if alpha not in ps.odd_positive:
        raise NotOddPositiveException(f"{alpha.label(ps.signature.m)} is not odd positive in the {ps.kind} system.")
    return form(Lambda + ps.rho, alpha, ps.signature)


def dirac_inequality_equiv(Lambda: Weight, alpha: Root, ps: PositiveSystem) -> bool:
    """Return True when the Casimir does not drop from Λ to Λ - α."""
    if alpha not in ps.odd_positive:
        raise NotOddPositiveException(f"{alpha.label(ps.signature.m)} is not odd positive in the {ps.kind} system.")
    return casimir_eigenvalue(Lambda - alpha, ps) >= casimir_eigenvalue(Lambda, ps)


def margin_table(Lambda: Weight, ps: PositiveSystem) -> list[tuple[Root, Fraction]]:
    """Return every odd positive root with its margin, ε-first roots before δ-first ones."""
    return [(alpha, dirac_margin(Lambda, alpha, ps)) for alpha in ps.odd_positive]


def classify_fd(Lambda: Weight, sig: Signature) -> Verdict:
    """Classify a highest weight of su(m|n), where L(Λ) is finite-dimensional."""
    if not sig.is_compact:
        raise WrongCaseException(f"{sig.label} is not compact; use classify_ifd.")
    ps = build_positive_system(sig, SYSTEM_STANDARD)
    report = unitarity_conditions(Lambda, sig, ps)
    if not report.holds:
        return Verdict(False, CASE_COMPACT, report.violations)
    _, _, k0 = plateau_indices(Lambda, sig)
    m, n = sig.m, sig.n
    for k in range(k0, n + 1):
        root = Root.between(m, sig.delta(k), sig)
        if dirac_margin(Lambda, root, ps) == 0:
            logger.debug("Clause fd b)(i) fires at %s", root.label(m))
            return Verdict(True, CASE_COMPACT, (Reason("fd b)(i)", root, Fraction(0)),))
    last = Root.between(m, sig.delta(n), sig)
    value = dirac_margin(Lambda, last, ps)
    return Verdict(value > 0, CASE_COMPACT, (Reason("fd b)(ii)", last, value),))


def classify_ifd(Lambda: Weight, sig: Signature) -> Verdict:
    """Classify a highest weight of su(p,q|n) with p, q ≥ 1 in the non-standard system."""
    if sig.is_compact:
        raise WrongCaseException(f"{sig.label} is compact; use classify_fd.")
    ps = build_positive_system(sig, SYSTEM_NONSTANDARD)
    report = unitarity_conditions(Lambda, sig, ps)
    if not report.holds:
        return Verdict(False, CASE_NONCOMPACT, report.violations)
    m, n, q = sig.m, sig.n, sig.q
    i0, j0, _ = plateau_indices(Lambda, sig)
    a_roots = [Root.between(i, sig.delta(1), sig) for i in range(1, i0 + 1)]
    b_roots = [Root.between(sig.delta(n), m - j, sig) for j in range(0, min(j0, q - 1) + 1)]
    a_zero = next((root for root in a_roots if dirac_margin(Lambda, root, ps) == 0), None)
    b_zero = next((root for root in b_roots if dirac_margin(Lambda, root, ps) == 0), None)
    a_first = dirac_margin(Lambda, a_roots[0], ps)
    b_last = dirac_margin(Lambda, b_roots[0], ps)
    if b_last < 0 and a_zero is not None:
        reasons = (Reason("ifd b)(i)", b_roots[0], b_last), Reason("ifd b)(i)", a_zero, Fraction(0)))
    elif b_zero is not None and a_zero is not None:
        reasons = (Reason("ifd b)(ii)", b_zero, Fraction(0)), Reason("ifd b)(ii)", a_zero, Fraction(0)))
    elif b_zero is not None and a_first < 0:
        reasons = (Reason("ifd b)(iii)", b_zero, Fraction(0)), Reason("ifd b)(iii)", a_roots[0], a_first))
    elif b_last < 0 and a_first < 0:
        reasons = (Reason("ifd b)(iv)", b_roots[0], b_last), Reason("ifd b)(iv)", a_roots[0], a_first))
    else:
        return Verdict(
            False, CASE_NONCOMPACT, (Reason("ifd b)", b_roots[0], b_last), Reason("ifd b)", a_roots[0], a_first))
        )
    logger.debug("Clause %s fires", reasons[0].condition)
    return Verdict(True, CASE_NONCOMPACT, reasons)


def psl_constraint(Lambda: Weight) -> Fraction:
    """Return Σλ - Σμ of the tuple as given; psl(n|n) weights need it to vanish."""
    return sum(Lambda.lambdas, Fraction(0)) - sum(Lambda.mus, Fraction(0))


def classify(Lambda: Weight, sig: Signature, psl: bool = False) -> Verdict:
    """Classify Λ for su(p,q|n), dispatching on whether the even real form is compact."""
    if psl:
        if sig.m != sig.n:
            raise PslConstraintViolatedException(f"psl(n|n) needs m = n, got {sig.label}.")
        value = psl_constraint(Lambda)
        if value != 0:
            raise PslConstraintViolatedException(f"psl(n|n) weights need Σλ - Σμ = 0, got {value}.")
    if sig.is_compact:
        return classify_fd(Lambda, sig)
    return classify_ifd(Lambda, sig)


def thresholds(fam: FDFamily | IFDFamily) -> dict[str, Fraction]:
    """Return the closed-form x thresholds of a family."""
    sig = fam.sig
    i0, j0, k0 = indices(fam)
    if isinstance(fam, FDFamily):
        a_m = fam.a[-1]
        return {"x_min": Fraction(a_m + k0 - 1), "x_max": Fraction(a_m + sig.n - 1)}
    half = fam.lam / 2
    j0 = min(j0, sig.q - 1)
    b1 = fam.b[0]
    return {
        "xL_min": half + sig.q - j0 - 1,
        "xL_max": half + sig.q - 1,
        "xR_min": -half - b1 - sig.p + 1,
        "xR_max": -half - b1 - sig.p + i0,
    }


def non_unitarity_witness(Lambda: Weight, sig: Signature) -> tuple[Reason, ...]:
    """Return the positive margins at ε_i₀-δ_1 and -ε_(m-j₀)+δ_n, each of which rules Λ out."""
    if sig.is_compact:
        raise WrongCaseException(f"{sig.label} is compact; the witness applies to p, q ≥ 1.")
    ps = build_positive_system(sig, SYSTEM_NONSTANDARD)
    i0, j0, _ = plateau_indices(Lambda, sig)
    roots = (
        Root.between(i0, sig.delta(1), sig),
        Root.between(sig.delta(sig.n), sig.m - min(j0, sig.q - 1), sig),
    )
    found = []
    for root in roots:
        value = dirac_margin(Lambda, root, ps)
        if value > 0:
            found.append(Reason("witness", root, value))
    return tuple(found)


def classify_family(fam: FDFamily | IFDFamily) -> Verdict:
    return classify(family_weight(fam), fam.sig)


def sweep(fam: FDFamily | IFDFamily, xs) -> list[tuple[Fraction, Verdict]]:
    """Classify a family at every x of a grid, in grid order."""
    return [(Fraction(x), classify_family(fam.at(x))) for x in xs]


@dataclass(frozen=True)
class OracleReport:
    """The outcome of checking a verdict against the Shapovalov form."""

    agrees: bool
    verdict: Verdict
    unitarity_holds: bool
    witness_eta: tuple[int, ...] | None
    checked: int


def oracle_agreement(
    Lambda: Weight, sig: Signature, depth: int = DEFAULT_DEPTH, variant: str | None = None
) -> OracleReport:
    """
    Compare the classifier with the Gram matrices of the Shapovalov form.

    A unitarizable verdict needs every Gram matrix up to ``depth`` to be positive
    semidefinite. A negative verdict on a weight that satisfies the unitarity conditions
    needs an indefinite Gram matrix at height at most two. Weights failing the unitarity
    conditions are not checked.
    """
    if not 1 <= depth <= MAX_DEPTH:
        raise ValueError(f"Depth must lie between 1 and {MAX_DEPTH}, got {depth}.")
    verdict = classify(Lambda, sig)
    ps = build_positive_system(sig, sig.default_system)
    holds = unitarity_conditions(Lambda, sig, ps).holds
    variant = variant or default_variant(sig)
    if verdict.unitarizable:
        result = gram_oracle(Lambda, sig, ps, variant, depth)
        agrees = result.psd
    elif holds:
        result = gram_oracle(Lambda, sig, ps, variant, min(depth, 2))
        agrees = not result.psd
    else:
        return OracleReport(True, verdict, holds, None, 0)
    witness = result.witness.eta if result.witness is not None else None
    logger.info(
        "Oracle on %s: verdict %s, %d Gram matrices, agrees=%s", Lambda, verdict.unitarizable, len(result.checked), agrees
    )
    return OracleReport(agrees, verdict, holds, witness, len(result.checked))
