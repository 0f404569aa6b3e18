"""
Odd-root combinatorics of a Verma supermodule.

Every g0-constituent of M(Λ) has highest weight Λ - Γ_S for a subset S of the odd positive
roots. The helpers here enumerate those subsets, count Kostant partitions, and apply the
atypicality exclusion rule that removes candidates from the simple quotient L(Λ).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra_core import (
    SYSTEM_NONSTANDARD,
    SYSTEM_STANDARD,
    PositiveSystem,
    Root,
    Weight,
    form,
    is_in_positive_cone,
)
from .exceptions import NotOddPositiveException, WrongSystemException
from .weights import plateau_indices

logger = logging.getLogger(__name__)

# A subset S of the odd positive roots
OddSubset = frozenset

Partition = tuple[Root, ...]


@dataclass(frozen=True)
class ConstituentCandidate:
    """A possible g0-constituent Λ - Γ_S with every subset S that produces it."""

    mu: Weight
    gamma: tuple[int, ...]
    witnesses: tuple[frozenset[Root], ...]

    @property
    def multiplicity(self) -> int:
        return len(self.witnesses)


def _coords(eta) -> tuple[int, ...]:
    return tuple(eta.coords) if hasattr(eta, "coords") else tuple(eta)


def _subset_sum(subset, size: int) -> tuple[int, ...]:
    total = [0] * size
    for root in subset:
        for slot, value in enumerate(root.coords):
            total[slot] += value
    return tuple(total)


@lru_cache(maxsize=64)
def _odd_subsets(ps: PositiveSystem) -> tuple[tuple[tuple[int, ...], frozenset[Root]], ...]:
    odd = ps.odd_positive
    size = ps.signature.size
    found = []
    for count in range(len(odd) + 1):
        for subset in combinations(odd, count):
            found.append((_subset_sum(subset, size), frozenset(subset)))
    logger.debug("Enumerated %d odd subsets for %s", len(found), ps.signature.label)
    return tuple(found)


def gamma_multiplicity(gamma, ps: PositiveSystem) -> int:
    """Return p(γ), the number of subsets of the odd positive roots summing to γ."""
    target = _coords(gamma)
    return sum(1 for total, _ in _odd_subsets(ps) if total == target)


@lru_cache(maxsize=4096)
def _partitions(eta: tuple[int, ...], ps: PositiveSystem, start: int, excluded: Root | None) -> tuple[Partition, ...]:
    if not any(eta):
        return ((),)
    roots = ps.positive
    if start == len(roots):
        return ()
    root = roots[start]
    result = list(_partitions(eta, ps, start + 1, excluded))
    if root == excluded:
        return tuple(result)
    remaining = eta
    used: Partition = ()
    while True:
        remaining = tuple(a - b for a, b in zip(remaining, root.coords))
        used = used + (root,)
        if not is_in_positive_cone(remaining, ps):
            break
        result.extend(used + rest for rest in _partitions(remaining, ps, start + 1, excluded))
        if root.is_odd:
            break
    return tuple(result)


def kostant_partitions(eta, ps: PositiveSystem, excluding: Root | None = None) -> tuple[Partition, ...]:
    """
    List the ways to write η as a sum of positive roots with each odd root used at most once.

    Each partition is a tuple of roots in the order of ``ps.positive``; an optional odd root
    ``excluding`` is never used.
    """
    eta = tuple(int(v) for v in _coords(eta))
    if not is_in_positive_cone(eta, ps):
        return ()
    return _partitions(eta, ps, 0, excluding)


def kostant_P(eta, ps: PositiveSystem) -> int:
    """Return the number of Kostant partitions of η."""
    return len(kostant_partitions(eta, ps))


def kostant_P_excluding(gamma: Root, eta, ps: PositiveSystem) -> int:
    """Return the number of Kostant partitions of η in which γ does not occur."""
    if gamma not in ps.odd_positive:
        raise NotOddPositiveException(f"{gamma.label(ps.signature.m)} is not an odd positive root.")
    return len(kostant_partitions(eta, ps, excluding=gamma))


def constituent_candidates(Lambda: Weight, ps: PositiveSystem) -> list[ConstituentCandidate]:
    """Group Λ - Γ_S over all odd subsets S by weight, in order of first appearance."""
    grouped: dict[tuple[int, ...], list[frozenset[Root]]] = {}
    for total, subset in _odd_subsets(ps):
        grouped.setdefault(total, []).append(subset)
    return [
        ConstituentCandidate(mu=Lambda - gamma, gamma=gamma, witnesses=tuple(subsets))
        for gamma, subsets in grouped.items()
    ]


def is_typical(Lambda: Weight, ps: PositiveSystem) -> bool:
    """Return True when (Λ+ρ, α) ≠ 0 for every odd positive root α."""
    shifted = Lambda + ps.rho
    return all(form(shifted, alpha, ps.signature) != 0 for alpha in ps.odd_positive)


def exclusions(Lambda: Weight, ps: PositiveSystem) -> frozenset[Root]:
    """
    Return the odd roots no surviving constituent needs, read off the atypical pairings.

    Standard system of a compact form: a vanishing (Λ+ρ, ε_i-δ_k) with k ≥ k₀ excludes
    ε_i-δ_l for l = k..n. Non-standard system: a vanishing (Λ+ρ, ε_i-δ_k) with i ≤ i₀ excludes
    ε_i'-δ_k for i' ≤ i, and a vanishing (Λ+ρ, -ε_(m-j)+δ_k) with j ≤ j₀ excludes
    -ε_(m-j')+δ_k for j' ≤ j.

    The rule presumes Λ satisfies the unitarity conditions.
    """
    sig = ps.signature
    shifted = Lambda + ps.rho
    i0, j0, k0 = plateau_indices(Lambda, sig)
    excluded: set[Root] = set()

    def vanishes(root: Root) -> bool:
        return form(shifted, root, sig) == 0

    if sig.is_compact:
        if ps.kind != SYSTEM_STANDARD:
            raise WrongSystemException(f"The exclusion rule for {sig.label} uses the standard system.")
        for i in range(1, sig.m + 1):
            for k in range(k0, sig.n + 1):
                if vanishes(Root.between(i, sig.delta(k), sig)):
                    excluded.update(Root.between(i, sig.delta(l), sig) for l in range(k, sig.n + 1))
                    break
    else:
        if ps.kind != SYSTEM_NONSTANDARD:
            raise WrongSystemException(f"The exclusion rule for {sig.label} uses the non-standard system.")
        for k in range(1, sig.n + 1):
            for i in range(1, i0 + 1):
                if vanishes(Root.between(i, sig.delta(k), sig)):
                    excluded.update(Root.between(ii, sig.delta(k), sig) for ii in range(1, i + 1))
            for j in range(0, min(j0, sig.q - 1) + 1):
                if vanishes(Root.between(sig.delta(k), sig.m - j, sig)):
                    excluded.update(Root.between(sig.delta(k), sig.m - jj, sig) for jj in range(0, j + 1))
    logger.debug("Excluded roots: %s", sorted(root.label(sig.m) for root in excluded))
    return frozenset(excluded)


def admissible_decomposition(Lambda: Weight, gamma_subsets, excluded) -> bool:
    """Return True when some witness subset avoids every excluded root."""
    excluded = frozenset(excluded)
    return any(not (frozenset(subset) & excluded) for subset in gamma_subsets)


def surviving_candidates(Lambda: Weight, ps: PositiveSystem) -> list[ConstituentCandidate]:
    """Return the constituent candidates that keep an admissible decomposition."""
    excluded = exclusions(Lambda, ps)
    return [
        candidate
        for candidate in constituent_candidates(Lambda, ps)
        if admissible_decomposition(Lambda, candidate.witnesses, excluded)
    ]
