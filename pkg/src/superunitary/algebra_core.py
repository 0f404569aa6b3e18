"""
Root data of gl(m|n) and sl(m|n).

Weights and roots are coordinate tuples in the basis ε_1..ε_m, δ_1..δ_n. The invariant
form pairs them with (ε_i, ε_j) = δ_ij, (δ_k, δ_l) = -δ_kl and (ε_i, δ_k) = 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .exceptions import (
    InvalidKindException,
    InvalidSignatureException,
    LengthMismatchException,
    NonSymmetricWeightException,
    NotEvenException,
    NotOddIsotropicException,
    NotSimpleException,
)
from .notation import format_root, format_weight, parse_root, parse_weight

SYSTEM_STANDARD = "standard"
SYSTEM_ANTISTANDARD = "antistandard"
SYSTEM_NONSTANDARD = "nonstandard"
# Positive systems reached by odd reflections that are none of the named ones
SYSTEM_REFLECTED = "reflected"

SYSTEM_VALUES = (SYSTEM_STANDARD, SYSTEM_ANTISTANDARD, SYSTEM_NONSTANDARD)

PARITY_EVEN = "even"
PARITY_ODD = "odd"


def normalize_system(kind: str) -> str:
    """Normalize a string to a positive system constant."""
    raw = kind.strip().lower().replace("-", "").replace("_", "")
    if raw in SYSTEM_VALUES:
        return raw
    message = f'Unknown positive system "{kind}". Use {", ".join(SYSTEM_VALUES)}.'
    hint = next((value for value in SYSTEM_VALUES if raw and value.startswith(raw)), None)
    if hint is None and "non" in raw:
        hint = SYSTEM_NONSTANDARD
    if hint is None and "anti" in raw:
        hint = SYSTEM_ANTISTANDARD
    if hint:
        message = f"{message}\nDid you mean {hint}?"
    raise ValueError(message)


@dataclass(frozen=True)
class Signature:
    """The descriptor (m, n, p, q) of sl(m|n) with the real form su(p,q|n)."""

    m: int
    n: int
    p: int
    q: int

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise InvalidSignatureException(f"m and n must be positive, got m={self.m}, n={self.n}.")
        if self.p < 0 or self.q < 0 or self.p + self.q != self.m:
            raise InvalidSignatureException(f"p and q must be non-negative with p+q=m, got p={self.p}, q={self.q}.")
        if self.m + self.n <= 2:
            raise InvalidSignatureException("sl(1|1) is excluded, m+n must exceed 2.")

    @classmethod
    def from_pqn(cls, p: int, q: int, n: int) -> Signature:
        return cls(m=p + q, n=n, p=p, q=q)

    @property
    def size(self) -> int:
        return self.m + self.n

    @property
    def is_compact(self) -> bool:
        """Return True for su(m|n) itself, the case p·q = 0."""
        return self.p * self.q == 0

    @property
    def default_system(self) -> str:
        return SYSTEM_STANDARD if self.is_compact else SYSTEM_NONSTANDARD

    @property
    def label(self) -> str:
        if self.is_compact:
            return f"su({self.m}|{self.n})"
        return f"su({self.p},{self.q}|{self.n})"

    def epsilon(self, i: int) -> int:
        """Return the 1-based slot of ε_i."""
        return i

    def delta(self, k: int) -> int:
        """Return the 1-based slot of δ_k."""
        return self.m + k


def _as_rational(value: object) -> Fraction:
    if isinstance(value, complex):
        raise NonSymmetricWeightException(f"Weight coordinate {value!r} is not real.")
    if isinstance(value, bool) or not isinstance(value, (int, Fraction, str)):
        raise TypeError(f"Weight coordinate {value!r} is not an exact rational.")
    return Fraction(value)


@dataclass(frozen=True, eq=False)
class Weight:
    """
    An exact rational weight (λ^1..λ^m | μ^1..μ^n).

    Weights of sl(m|n) are compared modulo the shift by (1,...,1|-1,...,-1).
    """

    coords: tuple[Fraction, ...]
    m: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(_as_rational(value) for value in self.coords))
        if not 0 < self.m < len(self.coords):
            raise LengthMismatchException(f"Weight of length {len(self.coords)} cannot split after {self.m}.")

    @classmethod
    def parse(cls, text: str) -> Weight:
        lambdas, mus = parse_weight(text)
        return cls(lambdas + mus, len(lambdas))

    @classmethod
    def zero(cls, sig: Signature) -> Weight:
        return cls((0,) * sig.size, sig.m)

    @property
    def n(self) -> int:
        return len(self.coords) - self.m

    @property
    def lambdas(self) -> tuple[Fraction, ...]:
        return self.coords[: self.m]

    @property
    def mus(self) -> tuple[Fraction, ...]:
        return self.coords[self.m :]

    def lam(self, i: int) -> Fraction:
        """Return λ^i (1-based)."""
        return self.coords[i - 1]

    def mu(self, k: int) -> Fraction:
        """Return μ^k (1-based)."""
        return self.coords[self.m + k - 1]

    def shifted(self, t: Fraction | int) -> Weight:
        """Add t·(1,...,1|-1,...,-1)."""
        t = Fraction(t)
        return Weight(tuple(v + t for v in self.lambdas) + tuple(v - t for v in self.mus), self.m)

    def normalized(self) -> Weight:
        """Return the shift representative with λ^1 = μ^n."""
        return self.shifted((self.coords[-1] - self.coords[0]) / 2)

    def _other(self, other: object) -> tuple[Fraction, ...]:
        values = other.coords if isinstance(other, (Weight, Root)) else tuple(other)
        if len(values) != len(self.coords):
            raise LengthMismatchException(f"Cannot combine tuples of length {len(self.coords)} and {len(values)}.")
        return values

    def __add__(self, other: object) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coords, self._other(other))), self.m)

    def __sub__(self, other: object) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coords, self._other(other))), self.m)

    def scaled(self, factor: Fraction | int) -> Weight:
        return Weight(tuple(factor * v for v in self.coords), self.m)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Weight):
            return NotImplemented
        return self.m == other.m and self.normalized().coords == other.normalized().coords

    def __hash__(self) -> int:
        return hash((self.m, self.normalized().coords))

    def __str__(self) -> str:
        return format_weight(self.coords, self.m)


@dataclass(frozen=True)
class Root:
    """A root e_a - e_b with a single +1 and a single -1 coordinate."""

    coords: tuple[int, ...]
    parity: str

    @classmethod
    def between(cls, a: int, b: int, sig: Signature) -> Root:
        """Return e_a - e_b for 1-based slots a != b."""
        if a == b or not (1 <= a <= sig.size and 1 <= b <= sig.size):
            raise LengthMismatchException(f"Slots {a} and {b} do not define a root of {sig.label}.")
        coords = [0] * sig.size
        coords[a - 1] = 1
        coords[b - 1] = -1
        odd = (a <= sig.m) != (b <= sig.m)
        return cls(tuple(coords), PARITY_ODD if odd else PARITY_EVEN)

    @classmethod
    def parse(cls, text: str, sig: Signature) -> Root:
        coords = parse_root(text, sig.m, sig.n)
        if sorted(coords) != [-1] + [0] * (sig.size - 2) + [1]:
            raise ValueError(f'"{text}" is not a root of {sig.label}.')
        return cls.between(coords.index(1) + 1, coords.index(-1) + 1, sig)

    @property
    def head(self) -> int:
        """The slot carrying +1."""
        return self.coords.index(1) + 1

    @property
    def tail(self) -> int:
        """The slot carrying -1."""
        return self.coords.index(-1) + 1

    @property
    def is_odd(self) -> bool:
        return self.parity == PARITY_ODD

    def __neg__(self) -> Root:
        return Root(tuple(-v for v in self.coords), self.parity)

    def label(self, m: int) -> str:
        return format_root(self.coords, m)


def _coords(value: object) -> tuple:
    if isinstance(value, (Weight, Root)):
        return value.coords
    return tuple(value)


def form(u: object, v: object, sig: Signature) -> Fraction:
    """Return the invariant form Σ_{i≤m} u_i v_i - Σ_{k>m} u_k v_k."""
    left, right = _coords(u), _coords(v)
    if len(left) != sig.size or len(right) != sig.size:
        raise LengthMismatchException(f"form needs tuples of length {sig.size}, got {len(left)} and {len(right)}.")
    even = sum(Fraction(a) * b for a, b in zip(left[: sig.m], right[: sig.m]))
    odd = sum(Fraction(a) * b for a, b in zip(left[sig.m :], right[sig.m :]))
    return Fraction(even - odd)


def even_positive_roots(sig: Signature) -> tuple[Root, ...]:
    """Return ε_i-ε_j (i<j) followed by δ_k-δ_l (k<l)."""
    roots = [Root.between(i, j, sig) for i in range(1, sig.m + 1) for j in range(i + 1, sig.m + 1)]
    roots += [
        Root.between(sig.delta(k), sig.delta(l), sig) for k in range(1, sig.n + 1) for l in range(k + 1, sig.n + 1)
    ]
    return tuple(roots)


def _odd_positive_roots(sig: Signature, kind: str) -> tuple[Root, ...]:
    roots = []
    for i in range(1, sig.m + 1):
        for k in range(1, sig.n + 1):
            if kind == SYSTEM_STANDARD or (kind == SYSTEM_NONSTANDARD and i <= sig.p):
                roots.append(Root.between(sig.epsilon(i), sig.delta(k), sig))
            else:
                roots.append(Root.between(sig.delta(k), sig.epsilon(i), sig))
    return tuple(roots)


def _half_sum(roots: tuple[Root, ...], sig: Signature) -> Weight:
    total = [Fraction(0)] * sig.size
    for root in roots:
        for slot, value in enumerate(root.coords):
            total[slot] += value
    return Weight(tuple(value / 2 for value in total), sig.m)


def _identify_kind(sig: Signature, odd: tuple[Root, ...]) -> str:
    for kind in SYSTEM_VALUES:
        if kind == SYSTEM_NONSTANDARD and sig.is_compact:
            continue
        if set(_odd_positive_roots(sig, kind)) == set(odd):
            return kind
    return SYSTEM_REFLECTED


@dataclass(frozen=True)
class PositiveSystem:
    """A positive system Δ⁺ = Δ₀⁺ ⊔ Δ₁⁺ with its Weyl vectors."""

    signature: Signature
    kind: str
    even_positive: tuple[Root, ...]
    odd_positive: tuple[Root, ...]
    rho0: Weight
    rho1: Weight
    rho: Weight

    @classmethod
    def from_odd_roots(cls, sig: Signature, odd: tuple[Root, ...]) -> PositiveSystem:
        even = even_positive_roots(sig)
        rho0 = _half_sum(even, sig)
        rho1 = _half_sum(odd, sig)
        return cls(sig, _identify_kind(sig, odd), even, tuple(odd), rho0, rho1, rho0 - rho1)

    @property
    def positive(self) -> tuple[Root, ...]:
        return self.even_positive + self.odd_positive

    @cached_property
    def ordering(self) -> tuple[int, ...]:
        """Return the slots ordered so that e_a - e_b is positive exactly when a comes first."""
        successors = {slot: 0 for slot in range(1, self.signature.size + 1)}
        for root in self.positive:
            successors[root.head] += 1
        return tuple(sorted(successors, key=lambda slot: -successors[slot]))

    @cached_property
    def _rank(self) -> dict[int, int]:
        return {slot: index for index, slot in enumerate(self.ordering)}

    def is_raising(self, a: int, b: int) -> bool:
        """Return True when the matrix unit E_ab is a positive root vector."""
        return self._rank[a] < self._rank[b]


def build_positive_system(sig: Signature, kind: str) -> PositiveSystem:
    """Build the Standard, AntiStandard or NonStandard positive system of sig."""
    kind = normalize_system(kind)
    if kind == SYSTEM_NONSTANDARD and sig.is_compact:
        raise InvalidKindException(f"The non-standard system needs p,q >= 1, got {sig.label}.")
    return PositiveSystem.from_odd_roots(sig, _odd_positive_roots(sig, kind))


def root_ordering(ps: PositiveSystem) -> tuple[int, ...]:
    return ps.ordering


def simple_roots(ps: PositiveSystem) -> tuple[Root, ...]:
    """Return the positive roots that are not a sum of two positive roots."""
    order = ps.ordering
    return tuple(Root.between(order[k], order[k + 1], ps.signature) for k in range(len(order) - 1))


def _partial_sums(eta: object, ps: PositiveSystem) -> list[Fraction] | None:
    coords = _coords(eta)
    if len(coords) != ps.signature.size:
        raise LengthMismatchException(f"Expected a tuple of length {ps.signature.size}, got {len(coords)}.")
    sums = []
    running = Fraction(0)
    for slot in ps.ordering:
        running += coords[slot - 1]
        sums.append(running)
    if sums[-1] != 0:
        return None
    return sums[:-1]


def is_in_positive_cone(eta: object, ps: PositiveSystem) -> bool:
    """Return True when eta is a non-negative integer combination of positive roots."""
    sums = _partial_sums(eta, ps)
    return sums is not None and all(value >= 0 and value.denominator == 1 for value in sums)


def simple_coefficients(eta: object, ps: PositiveSystem) -> tuple[Fraction, ...]:
    """Return the coefficients of eta in the simple roots of ps."""
    sums = _partial_sums(eta, ps)
    if sums is None:
        raise LengthMismatchException("Tuple is not in the root lattice: its coordinates do not sum to 0.")
    return tuple(sums)


def height(eta: object, ps: PositiveSystem) -> Fraction:
    """Return the height of eta, the sum of its simple root coefficients."""
    return sum(simple_coefficients(eta, ps), Fraction(0))


def weights_up_to_height(ps: PositiveSystem, depth: int, include_zero: bool = False) -> list[tuple[int, ...]]:
    """Return every η in the positive cone with 0 < height(η) ≤ depth, ordered by height."""
    simple = simple_roots(ps)
    found: list[tuple[int, ...]] = []

    def extend(index: int, budget: int, coeffs: list[int]) -> None:
        if index == len(simple):
            found.append(tuple(coeffs))
            return
        for count in range(budget + 1):
            coeffs.append(count)
            extend(index + 1, budget - count, coeffs)
            coeffs.pop()

    extend(0, depth, [])
    result = []
    for coeffs in sorted(found, key=lambda c: (sum(c), c)):
        if sum(coeffs) == 0 and not include_zero:
            continue
        eta = [0] * ps.signature.size
        for count, root in zip(coeffs, simple):
            for slot, value in enumerate(root.coords):
                eta[slot] += count * value
        result.append(tuple(eta))
    return result


def even_reflection(alpha: Root, beta: object, sig: Signature) -> tuple[Fraction, ...]:
    """Reflect beta in the hyperplane orthogonal to the even root alpha."""
    if alpha.is_odd:
        raise NotEvenException(f"{alpha.label(sig.m)} is odd; only even roots define reflections.")
    coefficient = 2 * form(alpha, beta, sig) / form(alpha, alpha, sig)
    return tuple(Fraction(b) - coefficient * a for a, b in zip(alpha.coords, _coords(beta)))


def _require_odd(theta: Root, sig: Signature) -> None:
    if not theta.is_odd or form(theta, theta, sig) != 0:
        raise NotOddIsotropicException(f"{theta.label(sig.m)} is not an odd isotropic root.")


def odd_reflection_system(ps: PositiveSystem, theta: Root) -> PositiveSystem:
    """Return Δ⁺_θ = {-θ} ∪ (Δ⁺ minus θ) for an odd simple root θ."""
    sig = ps.signature
    _require_odd(theta, sig)
    if theta not in simple_roots(ps):
        raise NotSimpleException(f"{theta.label(sig.m)} is not simple in the {ps.kind} system.")
    odd = tuple(-root if root == theta else root for root in ps.odd_positive)
    return PositiveSystem.from_odd_roots(sig, odd)


def odd_reflect_weight(Lambda: Weight, theta: Root, sig: Signature) -> Weight:
    """Transport a highest weight across the odd reflection at θ."""
    _require_odd(theta, sig)
    if form(Lambda, theta, sig) != 0:
        return Lambda - theta
    return Lambda


def reflection_chain(sig: Signature) -> tuple[Root, ...]:
    """Return the odd simple roots carrying the standard system to the non-standard one, in order."""
    if sig.is_compact:
        return ()
    return tuple(
        Root.between(sig.epsilon(j), sig.delta(k), sig) for j in range(sig.m, sig.p, -1) for k in range(1, sig.n + 1)
    )


def transport_weight(Lambda: Weight, sig: Signature) -> tuple[Weight, PositiveSystem]:
    """Move a standard highest weight along the reflection chain to the non-standard system."""
    ps = build_positive_system(sig, SYSTEM_STANDARD)
    weight = Lambda
    for theta in reflection_chain(sig):
        weight = odd_reflect_weight(weight, theta, sig)
        ps = odd_reflection_system(ps, theta)
    return weight, ps
