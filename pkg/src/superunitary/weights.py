"""Weight families, dominance and the unitarity conditions."""

from __future__ import annotations

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
    form,
)
from .exceptions import InvalidFamilyException, WrongSystemException
from .notation import format_rational

__all__ = [
    "FDFamily",
    "IFDFamily",
    "Reason",
    "UnitarityReport",
    "Weight",
    "even_unitarizable",
    "even_unitarizable_weight",
    "family_weight",
    "fd_family_from_weight",
    "ifd_family_from_weight",
    "indices",
    "is_dominant_integral_even",
    "normalize_weight",
    "plateau_indices",
    "unitarity_conditions",
]


@dataclass(frozen=True)
class Reason:
    """One entry of a verdict trace: a condition label, the root it concerns, and its margin."""

    condition: str
    root: Root | None = None
    margin: Fraction | None = None

    def to_dict(self, m: int) -> dict[str, Any]:
        return {
            "condition": self.condition,
            "root": self.root.label(m) if self.root is not None else None,
            "margin": format_rational(self.margin) if self.margin is not None else None,
        }


@dataclass(frozen=True)
class UnitarityReport:
    holds: bool
    violations: tuple[Reason, ...]


def _is_integer(value: Fraction) -> bool:
    return Fraction(value).denominator == 1


def _full_list(values: tuple[int, ...] | list[int], length: int, pad_front: bool, name: str) -> tuple[int, ...]:
    values = tuple(values)
    if len(values) == length - 1:
        values = (0,) + values if pad_front else values + (0,)
    if len(values) != length:
        raise InvalidFamilyException(f"Family parameter {name} needs {length - 1} or {length} entries, got {len(values)}.")
    if not all(isinstance(v, int) for v in values):
        raise InvalidFamilyException(f"Family parameter {name} must be integers.")
    return values


@dataclass(frozen=True)
class FDFamily:
    """
    The finite-dimensional family Λ(x) = (0,-a_2,..,-a_m | b_1,..,b_{n-1},0) + x/2·(1,..,1|1,..,1).

    ``a`` and ``b`` are stored at full length with a_1 = 0 and b_n = 0.
    """

    sig: Signature
    a: tuple[int, ...]
    b: tuple[int, ...]
    x: Fraction

    @classmethod
    def create(cls, sig: Signature, a, b, x) -> FDFamily:
        return cls(sig, _full_list(a, sig.m, True, "a"), _full_list(b, sig.n, False, "b"), Fraction(x))

    def __post_init__(self) -> None:
        if not self.sig.is_compact:
            raise InvalidFamilyException(f"Finite-dimensional families need p·q = 0, got {self.sig.label}.")
        a, b = self.a, self.b
        if a[0] != 0 or any(a[i] > a[i + 1] for i in range(len(a) - 1)):
            raise InvalidFamilyException(f"Need 0 = a_1 <= a_2 <= ... <= a_m, got {a}.")
        if b[-1] != 0 or any(b[k] < b[k + 1] for k in range(len(b) - 1)):
            raise InvalidFamilyException(f"Need b_1 >= ... >= b_n = 0, got {b}.")

    def at(self, x) -> FDFamily:
        return FDFamily(self.sig, self.a, self.b, Fraction(x))


@dataclass(frozen=True)
class IFDFamily:
    """
    The infinite-dimensional family
    Λ(x) = (0,a_2,..,a_{m-1},0 | b_1,..,b_{n-1},0) + λ/2·(1,..,1,-1,..,-1|0,..,0) + x/2·(1,..,1|1,..,1),
    with the sign change of the λ-term after slot p.
    """

    sig: Signature
    a: tuple[int, ...]
    b: tuple[int, ...]
    lam: Fraction
    x: Fraction

    @classmethod
    def create(cls, sig: Signature, a, b, lam, x) -> IFDFamily:
        a = tuple(a)
        if len(a) == sig.m - 2:
            a = (0,) + a + (0,)
        return cls(sig, _full_list(a, sig.m, True, "a"), _full_list(b, sig.n, False, "b"), Fraction(lam), Fraction(x))

    def __post_init__(self) -> None:
        sig, a, b = self.sig, self.a, self.b
        if sig.is_compact:
            raise InvalidFamilyException(f"Infinite-dimensional families need p,q >= 1, got {sig.label}.")
        p = sig.p
        if a[0] != 0 or a[-1] != 0:
            raise InvalidFamilyException(f"Need a_1 = a_m = 0, got {a}.")
        if any(a[i] < a[i + 1] for i in range(p - 1)) or (p > 1 and a[p - 1] > 0):
            raise InvalidFamilyException(f"Need 0 >= a_2 >= ... >= a_p, got {a}.")
        if any(a[i] < a[i + 1] for i in range(p, sig.m - 1)):
            raise InvalidFamilyException(f"Need a_(p+1) >= ... >= a_(m-1) >= 0, got {a}.")
        if b[-1] != 0 or any(b[k] < b[k + 1] for k in range(len(b) - 1)):
            raise InvalidFamilyException(f"Need b_1 >= ... >= b_n = 0, got {b}.")

    def at(self, x) -> IFDFamily:
        return IFDFamily(self.sig, self.a, self.b, self.lam, Fraction(x))


def family_weight(fam: FDFamily | IFDFamily) -> Weight:
    """Return the coordinates of Λ(x) for a family."""
    sig = fam.sig
    half_x = fam.x / 2
    if isinstance(fam, FDFamily):
        lambdas = tuple(-a + half_x for a in fam.a)
    else:
        half_lam = fam.lam / 2
        lambdas = tuple(a + (half_lam if i < sig.p else -half_lam) + half_x for i, a in enumerate(fam.a))
    mus = tuple(b + half_x for b in fam.b)
    return Weight(lambdas + mus, sig.m)


def normalize_weight(Lambda: Weight) -> Weight:
    """Return the canonical representative of Λ modulo the shift, with λ^1 = μ^n."""
    return Lambda.normalized()


def plateau_indices(Lambda: Weight, sig: Signature) -> tuple[int, int | None, int]:
    """
    Read (i₀, j₀, k₀) off the constant runs of a weight.

    i₀ is the largest index with λ^i = λ^1 (within 1..p in the non-compact case), k₀ the smallest
    index with μ^k = μ^n, and j₀ the largest j with λ^(m-j) = λ^m, set to q when λ^(p+1) = λ^m.
    j₀ is None for compact signatures.
    """
    top = sig.m if sig.is_compact else sig.p
    i0 = 1
    while i0 < top and Lambda.lam(i0 + 1) == Lambda.lam(1):
        i0 += 1
    k0 = sig.n
    while k0 > 1 and Lambda.mu(k0 - 1) == Lambda.mu(sig.n):
        k0 -= 1
    if sig.is_compact:
        return i0, None, k0
    if Lambda.lam(sig.p + 1) == Lambda.lam(sig.m):
        return i0, sig.q, k0
    j0 = 0
    while Lambda.lam(sig.m - j0 - 1) == Lambda.lam(sig.m):
        j0 += 1
    return i0, j0, k0


def indices(fam: FDFamily | IFDFamily) -> tuple[int, int | None, int]:
    """Return (i₀, j₀, k₀) of a family; j₀ is None for finite-dimensional families."""
    return plateau_indices(family_weight(fam), fam.sig)


def fd_family_from_weight(Lambda: Weight, sig: Signature) -> FDFamily:
    """Recover (a, b, x) from a compact-case weight, or raise InvalidFamilyException."""
    x = Lambda.lam(1) + Lambda.mu(sig.n)
    a = [Lambda.lam(1) - Lambda.lam(i) for i in range(1, sig.m + 1)]
    b = [Lambda.mu(k) - Lambda.mu(sig.n) for k in range(1, sig.n + 1)]
    if not all(_is_integer(v) for v in a + b):
        raise InvalidFamilyException(f"Weight {Lambda} has non-integral family parameters.")
    return FDFamily(sig, tuple(int(v) for v in a), tuple(int(v) for v in b), x)


def ifd_family_from_weight(Lambda: Weight, sig: Signature) -> IFDFamily:
    """Recover (a, b, λ, x) from a non-compact weight, or raise InvalidFamilyException."""
    lam = Lambda.lam(1) - Lambda.lam(sig.m)
    # shift so that λ^1 + λ^m = 2μ^n; x is then λ^1 + λ^m
    t = (2 * Lambda.mu(sig.n) - Lambda.lam(1) - Lambda.lam(sig.m)) / 4
    shifted = Lambda.shifted(t)
    x = shifted.lam(1) + shifted.lam(sig.m)
    a = [shifted.lam(i) - shifted.lam(1) for i in range(1, sig.p + 1)]
    a += [shifted.lam(i) - shifted.lam(sig.m) for i in range(sig.p + 1, sig.m + 1)]
    b = [shifted.mu(k) - shifted.mu(sig.n) for k in range(1, sig.n + 1)]
    if not all(_is_integer(v) for v in a + b):
        raise InvalidFamilyException(f"Weight {Lambda} has non-integral family parameters.")
    return IFDFamily(sig, tuple(int(v) for v in a), tuple(int(v) for v in b), lam, x)


def _compact_even_pairs(sig: Signature) -> list[tuple[int, int]]:
    blocks = [range(1, sig.m + 1)] if sig.is_compact else [range(1, sig.p + 1), range(sig.p + 1, sig.m + 1)]
    pairs = [(i, i + 1) for block in blocks for i in block if i + 1 in block]
    pairs += [(sig.delta(k), sig.delta(k + 1)) for k in range(1, sig.n)]
    return pairs


def is_dominant_integral_even(Lambda: Weight, sig: Signature) -> bool:
    """Return True when Λ is dominant integral for the compact even roots."""
    for a, b in _compact_even_pairs(sig):
        gap = Lambda.coords[a - 1] - Lambda.coords[b - 1]
        if gap < 0 or not _is_integer(gap):
            return False
    return True


def _ehw_contains(lam: Fraction, m: int, i0: int, j0: int) -> bool:
    bound = -m + max(i0, j0) + 1
    if lam < bound:
        return True
    return _is_integer(lam) and lam <= -m + i0 + j0


def even_unitarizable(fam: IFDFamily) -> bool:
    """Return True when λ lies in the admissible set of unitarizable su(p,q) highest weights."""
    i0, j0, _ = indices(fam)
    return _ehw_contains(fam.lam, fam.sig.m, i0, j0)


def even_unitarizable_weight(Lambda: Weight, sig: Signature) -> bool:
    """Return True when Λ is the highest weight of a unitarizable even module."""
    if not is_dominant_integral_even(Lambda, sig):
        return False
    if sig.is_compact:
        return True
    i0, j0, _ = plateau_indices(Lambda, sig)
    return _ehw_contains(Lambda.lam(1) - Lambda.lam(sig.m), sig.m, i0, j0)


def _margin(Lambda: Weight, root: Root, ps: PositiveSystem) -> Fraction:
    return form(Lambda + ps.rho, root, ps.signature)


def _chain_violations(Lambda: Weight, sig: Signature, chain: list[int], label: str) -> list[Reason]:
    """Check v_1 >= v_2 >= ... along slots, where δ-slots enter as -μ."""
    violations = []
    for a, b in zip(chain, chain[1:]):
        left = Lambda.coords[a - 1] if a <= sig.m else -Lambda.coords[a - 1]
        right = Lambda.coords[b - 1] if b <= sig.m else -Lambda.coords[b - 1]
        if left < right:
            violations.append(Reason(label, Root.between(a, b, sig), left - right))
    return violations


def _compact_conditions(Lambda: Weight, ps: PositiveSystem) -> list[Reason]:
    sig = ps.signature
    m, n = sig.m, sig.n
    violations = []
    chain = list(range(1, m + 1)) + [sig.delta(k) for k in range(n, 0, -1)]
    violations += _chain_violations(Lambda, sig, chain, "unitarity a)(i)")
    last = [Root.between(m, sig.delta(k), sig) for k in range(1, n + 1)]
    margins = [_margin(Lambda, root, ps) for root in last]
    for k, value in enumerate(margins, start=1):
        if value != 0:
            continue
        earlier = all(margins[j] > 0 for j in range(k - 1))
        if not earlier or Lambda.mu(k) != Lambda.mu(n):
            violations.append(Reason("unitarity a)(ii)", last[k - 1], value))
    if all(value != 0 for value in margins):
        for root, value in zip(last, margins):
            if value < 0:
                violations.append(Reason("unitarity a)(iii)", root, value))
                break
    return violations


def _noncompact_conditions(Lambda: Weight, ps: PositiveSystem) -> list[Reason]:
    sig = ps.signature
    m, n, p, q = sig.m, sig.n, sig.p, sig.q
    violations = []
    chain = list(range(p + 1, m + 1)) + [sig.delta(k) for k in range(n, 0, -1)] + list(range(1, p + 1))
    violations += _chain_violations(Lambda, sig, chain, "unitarity b)(i)")
    for i in range(p + 1, m + 1):
        root = Root.between(sig.delta(n), i, sig)
        value = _margin(Lambda, root, ps)
        if value == 0 and Lambda.lam(i) != Lambda.lam(m):
            violations.append(Reason("unitarity b)(ii)", root, value))
    for i in range(1, p + 1):
        root = Root.between(i, sig.delta(1), sig)
        value = _margin(Lambda, root, ps)
        if value == 0 and Lambda.lam(1) != Lambda.lam(i):
            violations.append(Reason("unitarity b)(iii)", root, value))
    i0, j0, _ = plateau_indices(Lambda, sig)
    a_roots = [Root.between(i, sig.delta(1), sig) for i in range(1, i0 + 1)]
    a_margins = [_margin(Lambda, root, ps) for root in a_roots]
    if all(value != 0 for value in a_margins):
        for root, value in zip(a_roots, a_margins):
            if value > 0:
                violations.append(Reason("unitarity b)(iv)", root, value))
                break
    b_roots = [Root.between(sig.delta(n), m - j, sig) for j in range(0, min(j0, q - 1) + 1)]
    b_margins = [_margin(Lambda, root, ps) for root in b_roots]
    if all(value != 0 for value in b_margins):
        for root, value in zip(b_roots, b_margins):
            if value > 0:
                violations.append(Reason("unitarity b)(v)", root, value))
                break
    return violations


def unitarity_conditions(Lambda: Weight, sig: Signature, ps: PositiveSystem) -> UnitarityReport:
    """Evaluate the necessary unitarity conditions and name every violation."""
    expected = SYSTEM_STANDARD if sig.is_compact else SYSTEM_NONSTANDARD
    if ps.kind != expected:
        raise WrongSystemException(f"The unitarity conditions for {sig.label} use the {expected} system, got {ps.kind}.")
    case = "a)" if sig.is_compact else "b)"
    violations: list[Reason] = []
    if not even_unitarizable_weight(Lambda, sig):
        violations.append(Reason(f"unitarity {case}(even)"))
    if sig.is_compact:
        violations += _compact_conditions(Lambda, ps)
    else:
        violations += _noncompact_conditions(Lambda, ps)
    return UnitarityReport(holds=not violations, violations=tuple(violations))
