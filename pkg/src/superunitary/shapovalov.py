"""
The Shapovalov form on Verma supermodules.

Vectors of M(Λ) are dictionaries from PBW words to rational coefficients. A word is a tuple of
lowering matrix units in normal order, and the empty word is the highest weight vector v_Λ.
The form is normalized by ⟨v_Λ, v_Λ⟩ = 1 and computed from ⟨Xv, w⟩ = ⟨v, ω(X)w⟩.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .algebra_core import (
    PARITY_EVEN,
    PARITY_ODD,
    PositiveSystem,
    Root,
    Signature,
    Weight,
    build_positive_system,
    form,
    height,
    is_in_positive_cone,
    weights_up_to_height,
)
from .composition import kostant_P, kostant_P_excluding, kostant_partitions
from .exceptions import NotSymmetricException, VariantMismatchException

logger = logging.getLogger(__name__)

OMEGA_PLUS = "plus"
OMEGA_MINUS = "minus"
OMEGA_MINUS_PLUS = "minus_plus"
OMEGA_PLUS_MINUS = "plus_minus"

OMEGA_COMPACT = (OMEGA_PLUS, OMEGA_MINUS)
OMEGA_NONCOMPACT = (OMEGA_MINUS_PLUS, OMEGA_PLUS_MINUS)
OMEGA_VALUES = OMEGA_COMPACT + OMEGA_NONCOMPACT

NORMALIZATION_COROOT = "coroot"
NORMALIZATION_PRINTED = "printed"
NORMALIZATION_VALUES = (NORMALIZATION_COROOT, NORMALIZATION_PRINTED)

DEFAULT_DEPTH = 3
MAX_DEPTH = 4


def normalize_variant(variant: str) -> str:
    """Normalize a string to an anti-involution constant."""
    raw = variant.strip().lower().replace("-", "_").replace(",", "_").replace(" ", "")
    if raw in OMEGA_VALUES:
        return raw
    message = f'Unknown anti-involution "{variant}". Use {", ".join(OMEGA_VALUES)}.'
    hint = next((value for value in OMEGA_VALUES if raw and value.startswith(raw)), None)
    if hint:
        message = f"{message}\nDid you mean {hint}?"
    raise ValueError(message)


def normalize_normalization(normalization: str) -> str:
    """Normalize a string to a determinant normalization constant."""
    raw = normalization.strip().lower()
    if raw in NORMALIZATION_VALUES:
        return raw
    raise ValueError(f'Unknown normalization "{normalization}". Use {", ".join(NORMALIZATION_VALUES)}.')


def default_variant(sig: Signature) -> str:
    return OMEGA_PLUS if sig.is_compact else OMEGA_MINUS_PLUS


@dataclass(frozen=True, order=True)
class BasisElement:
    """The matrix unit E_row,col of gl(m|n); odd when exactly one index lies past m."""

    row: int
    col: int
    parity: str = field(compare=False)

    @classmethod
    def unit(cls, row: int, col: int, sig: Signature) -> BasisElement:
        odd = (row <= sig.m) != (col <= sig.m)
        return cls(row, col, PARITY_ODD if odd else PARITY_EVEN)

    @property
    def is_odd(self) -> bool:
        return self.parity == PARITY_ODD

    @property
    def is_cartan(self) -> bool:
        return self.row == self.col

    def transposed(self) -> BasisElement:
        return BasisElement(self.col, self.row, self.parity)

    def __str__(self) -> str:
        return f"E{self.row},{self.col}"


Word = tuple[BasisElement, ...]
AlgebraElement = dict[Word, Fraction]


def _accumulate(target: dict, key, value: Fraction) -> None:
    total = target.get(key, Fraction(0)) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _sign(x: BasisElement, y: BasisElement) -> int:
    return -1 if x.is_odd and y.is_odd else 1


def bracket(x: BasisElement, y: BasisElement) -> AlgebraElement:
    """Return the superbracket [E_ab, E_cd] = δ_bc E_ad - (-1)^(|ab||cd|) δ_da E_cb."""
    result: AlgebraElement = {}
    if x.col == y.row:
        unit = BasisElement(x.row, y.col, PARITY_ODD if x.is_odd != y.is_odd else PARITY_EVEN)
        _accumulate(result, (unit,), Fraction(1))
    if y.col == x.row:
        unit = BasisElement(y.row, x.col, PARITY_ODD if x.is_odd != y.is_odd else PARITY_EVEN)
        _accumulate(result, (unit,), Fraction(-_sign(x, y)))
    return result


def _omega_signs(sig: Signature, variant: str) -> tuple[int, ...]:
    variant = normalize_variant(variant)
    allowed = OMEGA_COMPACT if sig.is_compact else OMEGA_NONCOMPACT
    if variant not in allowed:
        raise VariantMismatchException(f"Anti-involution {variant} does not fit {sig.label}; use {' or '.join(allowed)}.")
    if variant == OMEGA_PLUS:
        return (1,) * sig.size
    if variant == OMEGA_MINUS:
        return (1,) * sig.m + (-1,) * sig.n
    if variant == OMEGA_MINUS_PLUS:
        return (1,) * sig.p + (-1,) * sig.q + (-1,) * sig.n
    return (1,) * sig.p + (-1,) * sig.q + (1,) * sig.n


def omega(x: BasisElement, sig: Signature, variant: str) -> AlgebraElement:
    """Apply the anti-involution ω(E_ab) = s_a s_b E_ba for the sign vector of the variant."""
    signs = _omega_signs(sig, variant)
    return {(x.transposed(),): Fraction(signs[x.row - 1] * signs[x.col - 1])}


def _pbw_key(x: BasisElement, m: int) -> tuple[int, int, int]:
    if x.is_odd:
        block = 2
    else:
        block = 0 if x.row <= m else 1
    return block, x.row, x.col


class VermaModule:
    """
    The Verma supermodule M(Λ) for a positive system, with PBW normal ordering.

    ``act`` memoizes the action of each matrix unit on each normal-ordered word; one instance
    should be used per thread.
    """

    def __init__(self, Lambda: Weight, ps: PositiveSystem) -> None:
        self.Lambda = Lambda
        self.ps = ps
        self.sig = ps.signature
        self._memo: dict[tuple[BasisElement, Word], AlgebraElement] = {}

    def unit(self, row: int, col: int) -> BasisElement:
        return BasisElement.unit(row, col, self.sig)

    def is_raising(self, x: BasisElement) -> bool:
        return self.ps.is_raising(x.row, x.col)

    def lowering(self, root: Root) -> BasisElement:
        """Return the lowering root vector for a positive root e_a - e_b, which is E_ba."""
        return self.unit(root.tail, root.head)

    def key(self, x: BasisElement) -> tuple[int, int, int]:
        return _pbw_key(x, self.sig.m)

    def word(self, partition) -> Word:
        """Return the normal-ordered word of lowering operators for a Kostant partition."""
        return tuple(sorted((self.lowering(root) for root in partition), key=self.key))

    def weight_of(self, word: Word) -> list[Fraction]:
        coords = list(self.Lambda.coords)
        for letter in word:
            coords[letter.row - 1] += 1
            coords[letter.col - 1] -= 1
        return coords

    def act(self, x: BasisElement, vector: AlgebraElement) -> AlgebraElement:
        """Apply the matrix unit x to a vector of M(Λ)."""
        result: AlgebraElement = {}
        for word, coefficient in vector.items():
            for image, value in self._act_word(x, word).items():
                _accumulate(result, image, coefficient * value)
        return result

    def _act_word(self, x: BasisElement, word: Word) -> AlgebraElement:
        memo_key = (x, word)
        cached = self._memo.get(memo_key)
        if cached is not None:
            return cached
        result = self._compute(x, word)
        self._memo[memo_key] = result
        return result

    def _compute(self, x: BasisElement, word: Word) -> AlgebraElement:
        if x.is_cartan:
            value = self.weight_of(word)[x.row - 1]
            return {word: Fraction(value)} if value else {}
        raising = self.is_raising(x)
        if not word:
            return {} if raising else {(x,): Fraction(1)}
        first, rest = word[0], word[1:]
        if not raising:
            if self.key(x) < self.key(first) or (x == first and not x.is_odd):
                return {(x,) + word: Fraction(1)}
            if x == first:
                # odd root vectors square to zero
                return {}
        # x f w' = (-1)^(|x||f|) f (x w') + [x, f] w'
        result: AlgebraElement = {}
        moved = self.act(first, self._act_word(x, rest))
        sign = _sign(x, first)
        for image, value in moved.items():
            _accumulate(result, image, sign * value)
        for (unit,), value in bracket(x, first).items():
            for image, inner in self._act_word(unit, rest).items():
                _accumulate(result, image, value * inner)
        return result

    def pair(self, left: Word, right: Word, variant: str) -> Fraction:
        """Return ⟨left·v_Λ, right·v_Λ⟩ by moving ω(left) across to the right."""
        signs = _omega_signs(self.sig, variant)
        vector: AlgebraElement = {right: Fraction(1)}
        for letter in left:
            vector = self.act(letter.transposed(), vector)
            factor = signs[letter.row - 1] * signs[letter.col - 1]
            vector = {image: factor * value for image, value in vector.items()}
            if not vector:
                return Fraction(0)
        return vector.get((), Fraction(0))


@dataclass(frozen=True)
class GramMatrix:
    """The Shapovalov form on the PBW basis of M(Λ) at weight Λ - η."""

    eta: tuple[int, ...]
    basis: tuple[Word, ...]
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def size(self) -> int:
        return len(self.basis)

    def to_sympy(self) -> sympy.Matrix:
        return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in self.entries])


def gram(
    Lambda: Weight,
    eta,
    sig: Signature,
    ps: PositiveSystem | None = None,
    variant: str | None = None,
    module: VermaModule | None = None,
) -> GramMatrix:
    """Compute the Gram matrix of the Shapovalov form at weight Λ - η."""
    ps = ps or build_positive_system(sig, sig.default_system)
    variant = variant or default_variant(sig)
    _omega_signs(sig, variant)
    module = module or VermaModule(Lambda, ps)
    eta = tuple(int(v) for v in (eta.coords if hasattr(eta, "coords") else eta))
    basis = tuple(module.word(partition) for partition in kostant_partitions(eta, ps))
    entries = tuple(tuple(module.pair(left, right, variant) for right in basis) for left in basis)
    logger.debug("Gram matrix at %s has dimension %d", eta, len(basis))
    return GramMatrix(eta=eta, basis=basis, entries=entries)


def _rows(G) -> list[list[Fraction]]:
    entries = G.entries if isinstance(G, GramMatrix) else G
    return [[Fraction(value) for value in row] for row in entries]


def is_psd(G) -> bool:
    """
    Decide positive semidefiniteness exactly by symmetric elimination.

    A zero pivot forces its whole row to vanish; such rows are dropped.
    """
    rows = _rows(G)
    size = len(rows)
    for i in range(size):
        if len(rows[i]) != size:
            raise NotSymmetricException("Gram matrix is not square.")
        for j in range(i):
            if rows[i][j] != rows[j][i]:
                raise NotSymmetricException(f"Gram matrix is not symmetric at ({i}, {j}).")
    active = list(range(size))
    while active:
        if any(rows[i][i] < 0 for i in active):
            return False
        zero = [i for i in active if rows[i][i] == 0]
        for i in zero:
            if any(rows[i][j] != 0 for j in active):
                return False
        active = [i for i in active if rows[i][i] != 0]
        if not active:
            return True
        pivot, active = active[0], active[1:]
        d = rows[pivot][pivot]
        for i in active:
            for j in active:
                rows[i][j] -= rows[i][pivot] * rows[pivot][j] / d
    return True


def gram_rank(G: GramMatrix) -> int:
    """Return the exact rank of a Gram matrix."""
    if G.size == 0:
        return 0
    return int(G.to_sympy().rank())


def gram_determinant(G: GramMatrix) -> Fraction:
    """Return the exact determinant of a Gram matrix."""
    if G.size == 0:
        return Fraction(1)
    value = sympy.Rational(G.to_sympy().det())
    return Fraction(int(value.p), int(value.q))


def weight_space_dimension(Lambda: Weight, eta, sig: Signature, ps=None, variant=None) -> int:
    """Return dim L(Λ) at weight Λ - η, the rank of the Shapovalov form there."""
    return gram_rank(gram(Lambda, eta, sig, ps, variant))


@dataclass(frozen=True)
class KSDeterminant:
    factors: tuple[tuple[Fraction, int], ...]
    value: Fraction


def ks_determinant(Lambda: Weight, eta, ps: PositiveSystem, normalization: str = NORMALIZATION_COROOT) -> KSDeterminant:
    """
    Evaluate the Kac-Shapovalov product formula at weight Λ - η, up to its constant factor.

    Even roots contribute (2(Λ+ρ,γ)/(γ,γ) - r)^P(η-rγ) with the coroot normalization and
    ((Λ+ρ,γ) - r)^P(η-rγ) with the printed one. Odd roots contribute (Λ+ρ,γ)^P_γ(η-γ).
    """
    normalization = normalize_normalization(normalization)
    sig = ps.signature
    eta = tuple(int(v) for v in (eta.coords if hasattr(eta, "coords") else eta))
    shifted = Lambda + ps.rho
    factors: list[tuple[Fraction, int]] = []
    if not is_in_positive_cone(eta, ps):
        return KSDeterminant(factors=(), value=Fraction(1))
    depth = height(eta, ps)
    for gamma in ps.even_positive:
        pairing = form(shifted, gamma, sig)
        if normalization == NORMALIZATION_COROOT:
            pairing = 2 * pairing / form(gamma, gamma, sig)
        step = height(gamma.coords, ps)
        r = 1
        while r * step <= depth:
            rest = tuple(a - r * b for a, b in zip(eta, gamma.coords))
            exponent = kostant_P(rest, ps)
            if exponent:
                factors.append((pairing - r, exponent))
            r += 1
    for gamma in ps.odd_positive:
        rest = tuple(a - b for a, b in zip(eta, gamma.coords))
        exponent = kostant_P_excluding(gamma, rest, ps)
        if exponent:
            factors.append((form(shifted, gamma, sig), exponent))
    value = Fraction(1)
    for base, exponent in factors:
        value *= base**exponent
    return KSDeterminant(factors=tuple(factors), value=value)


@dataclass(frozen=True)
class OracleResult:
    """Every Gram matrix up to a height, and the first one that is not positive semidefinite."""

    psd: bool
    checked: tuple[GramMatrix, ...]
    witness: GramMatrix | None


def gram_oracle(
    Lambda: Weight,
    sig: Signature,
    ps: PositiveSystem | None = None,
    variant: str | None = None,
    depth: int = DEFAULT_DEPTH,
) -> OracleResult:
    """Check positivity of the Shapovalov form on every weight space down to the given height."""
    if not 1 <= depth <= MAX_DEPTH:
        raise ValueError(f"Depth must lie between 1 and {MAX_DEPTH}, got {depth}.")
    ps = ps or build_positive_system(sig, sig.default_system)
    variant = variant or default_variant(sig)
    module = VermaModule(Lambda, ps)
    checked = []
    for eta in weights_up_to_height(ps, depth):
        matrix = gram(Lambda, eta, sig, ps, variant, module=module)
        checked.append(matrix)
        if not is_psd(matrix):
            logger.debug("Shapovalov form of %s is indefinite at %s", Lambda, eta)
            return OracleResult(psd=False, checked=tuple(checked), witness=matrix)
    logger.debug("Shapovalov form of %s is positive up to height %d", Lambda, depth)
    return OracleResult(psd=True, checked=tuple(checked), witness=None)
