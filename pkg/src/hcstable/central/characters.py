"""
Exponential central characters for gl_t and o_t / sp_t.

A character is stored as the numerator S of χ(z) = S(z)/(e^z − 1) in type
gl and χ(z) = S(z)/(e^{z/2} − e^{−z/2}) in types o and sp.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence, Tuple, Union

import sympy

from ..oracle import LieType, NonDominant, is_dominant
from ..partitions import Bipartition, Partition
from ..stable import HomFamily
from .exponents import (
    AffineExponent,
    CentralCharError,
    ExponentialSum,
    Number,
    from_rational,
    to_rational,
)

logger = logging.getLogger(__name__)

T = AffineExponent.gen("t")
SERIES = ("gl", "osp")
FLAVORS = ("o", "sp")


class OddIndexForOsp(CentralCharError):
    """Raised when an odd C_k is requested for an orthosymplectic character."""

    pass


class SeriesMismatch(CentralCharError):
    """Raised when characters of different series are combined."""

    pass


@dataclass(frozen=True)
class CentralCharacter:
    numerator: ExponentialSum
    series: str = "gl"
    flavor: Optional[str] = None

    def __post_init__(self):
        if self.series not in SERIES:
            raise CentralCharError(f"unknown series {self.series!r}; use gl or osp")
        if self.series == "osp" and not self.numerator.is_even():
            raise CentralCharError("orthosymplectic numerators must be even under z ↦ −z")

    def __sub__(self, other: "CentralCharacter") -> ExponentialSum:
        if self.series != other.series:
            raise SeriesMismatch(f"cannot compare a {self.series} character with a {other.series} one")
        return self.numerator - other.numerator


@dataclass(frozen=True)
class FormalCut:
    """[α, β, γ] with α and β given by affine exponents, γ concrete."""

    alpha: Tuple[AffineExponent, ...] = ()
    beta: Tuple[AffineExponent, ...] = ()
    gamma: Partition = field(default_factory=Partition)

    @classmethod
    def generic(cls, k: int, l: int, gamma: Partition = Partition()) -> "FormalCut":
        """α_i = a{i}, β_j = b{j} as free generators."""
        return cls(
            tuple(AffineExponent.gen(f"a{i}") for i in range(1, k + 1)),
            tuple(AffineExponent.gen(f"b{j}") for j in range(1, l + 1)),
            gamma,
        )

    @classmethod
    def concrete(cls, alpha: Sequence[int], beta: Sequence[int], gamma: Partition) -> "FormalCut":
        return cls(
            tuple(AffineExponent.const(x) for x in alpha),
            tuple(AffineExponent.const(x) for x in beta),
            gamma,
        )

    @property
    def k(self) -> int:
        return len(self.alpha)

    @property
    def l(self) -> int:
        return len(self.beta)

    def shifted(self, a: Sequence[int], b: Sequence[int], delta: Partition) -> "FormalCut":
        """[α + a, β + b, δ]."""
        return FormalCut(
            tuple(x + s for x, s in zip(self.alpha, a)),
            tuple(x + s for x, s in zip(self.beta, b)),
            delta,
        )


def q_number_term(x: Union[AffineExponent, Number], shift: Union[AffineExponent, Number] = 0) -> ExponentialSum:
    """Numerator of [x]_q·q^shift, i.e. q^{x+shift} − q^{shift}."""
    if not isinstance(x, AffineExponent):
        x = AffineExponent.const(x)
    if not isinstance(shift, AffineExponent):
        shift = AffineExponent.const(shift)
    return ExponentialSum.monomial(x + shift) - ExponentialSum.monomial(shift)


def _row_sum(rows: Sequence[Union[AffineExponent, int]], top: AffineExponent) -> ExponentialSum:
    """Σ_j [rows_j]_q q^{top − j}."""
    total = ExponentialSum()
    for j, row in enumerate(rows, start=1):
        total = total + q_number_term(row, top - j)
    return total


def char_of_bipartition_gl(nu: Bipartition) -> CentralCharacter:
    """
    Central character of V_ν for gl_t.

    Args:
        nu: Bipartition (ν|ν̄)

    Returns:
        CentralCharacter with numerator
        Σ (q^{ν_j}−1)q^{(t+1)/2−j} + Σ (q^{−ν̄_j}−1)q^{−(t+1)/2+j}
    """
    half = (T + 1) * Fraction(1, 2)
    numerator = _row_sum(nu.plus.parts, half)
    for j, part in enumerate(nu.minus.parts, start=1):
        numerator = numerator + q_number_term(-part, -half + j)
    return CentralCharacter(numerator, "gl")


def char_of_bipartition_by_additivity(nu: Bipartition) -> CentralCharacter:
    """χ_ν(z) − e^{−z}χ_ν̄(−z), assembled from the two one-sided characters."""
    positive = char_of_bipartition_gl(Bipartition(nu.plus)).numerator
    negative = char_of_bipartition_gl(Bipartition(nu.minus)).numerator
    return CentralCharacter(positive + negative.reflect(), "gl")


def _triple_sum(cut: FormalCut, top: AffineExponent) -> ExponentialSum:
    """
    Row-form numerator of λ = [α, β, γ] multiplied by q^top.

    Rows 1..k carry α_j + l; rows k+1..k+m carry γ_j + l with m = ℓ(γ); the
    remaining rows are grouped by columns, each β-column contributing a
    block of height β_j − m.
    """
    k, l, m = cut.k, cut.l, cut.gamma.length
    total = _row_sum([a + l for a in cut.alpha], top)
    for j, b in enumerate(cut.beta, start=1):
        total = total + q_number_term(b - m, top - b + (j - 1 - k))
    for j, g in enumerate(cut.gamma.parts, start=1):
        total = total + q_number_term(g + l, top - k - j)
    return total


def char_of_triple_gl(cut: FormalCut) -> CentralCharacter:
    return CentralCharacter(_triple_sum(cut, (T + 1) * Fraction(1, 2)), "gl")


def char_pair_of_hom(fam: HomFamily, cut: Optional[FormalCut] = None) -> Tuple[CentralCharacter, CentralCharacter]:
    """(χ, ψ) acting on the left and right of Hom(μ, λ) for a gl family."""
    cut = cut or FormalCut.generic(fam.k, fam.l, fam.gamma)
    return char_of_triple_gl(cut), char_of_triple_gl(cut.shifted(fam.a, fam.b, fam.delta))


def _check_flavor(flavor: str) -> None:
    if flavor not in FLAVORS:
        raise CentralCharError(f"unknown flavor {flavor!r}; use o or sp")


def _evenize(tilde: ExponentialSum) -> ExponentialSum:
    return (tilde + tilde.reflect()).scale(Fraction(1, 2))


def char_osp(nu_or_cut: Union[Partition, FormalCut], flavor: str = "o") -> CentralCharacter:
    """
    Central character of V_ν for o_t or sp_t.

    The one-sided sum χ̃ uses exponents ν_i + t/2 − i; the stored numerator
    is its even part, so χ(z) = ½(χ̃(z) − χ̃(−z)).
    """
    _check_flavor(flavor)
    top = T * Fraction(1, 2)
    if isinstance(nu_or_cut, FormalCut):
        tilde = _triple_sum(nu_or_cut, top)
    else:
        tilde = _row_sum(nu_or_cut.parts, top)
    return CentralCharacter(_evenize(tilde), "osp", flavor)


def char_pair_of_hom_osp(fam: HomFamily, flavor: str = "o", cut: Optional[FormalCut] = None) -> Tuple[CentralCharacter, CentralCharacter]:
    cut = cut or FormalCut.generic(fam.k, fam.l, fam.gamma)
    return char_osp(cut, flavor), char_osp(cut.shifted(fam.a, fam.b, fam.delta), flavor)


def ck_value(chi: CentralCharacter, k: int) -> sympy.Expr:
    """
    χ(C_k) as an exact polynomial in the generators.

    Raises:
        OddIndexForOsp: odd k for an o/sp character
    """
    if k < 1:
        raise CentralCharError(f"C_k needs a positive index, got {k}")
    if chi.series == "osp" and k % 2:
        raise OddIndexForOsp(f"C_{k} vanishes identically on o/sp; only even indices are generators")
    return chi.numerator.power_sum(k)


def evaluate_ck(chi: CentralCharacter, k: int, values: Mapping[str, Number]) -> Fraction:
    """ck_value with every generator replaced by a rational value."""
    expr = ck_value(chi, k).subs({sympy.Symbol(n): to_rational(v) for n, v in values.items()})
    if expr.free_symbols:
        missing = ", ".join(sorted(str(s) for s in expr.free_symbols))
        raise CentralCharError(f"no value given for generator(s) {missing}")
    return from_rational(expr)


def t_value(group: str, n: int) -> int:
    """The value of t matching rank n: gl_n ↦ n, so_{2n+1} ↦ 2n+1, sp_{2n} ↦ 2n."""
    return {"gl": n, "o": 2 * n + 1, "sp": 2 * n}[group]


def finite_ck_value(hw: Sequence[int], n: int, k: int, group: str = "gl") -> Fraction:
    """
    Σ_i ((ν_i + ρ_i)^k − ρ_i^k) on L(hw) for gl_n, so_{2n+1} or sp_{2n}.

    ρ_i is (n+1)/2 − i for gl, n − i + 1/2 for o and n − i for sp.
    """
    if group not in ("gl", "o", "sp"):
        raise CentralCharError(f"unknown group {group!r}")
    if group != "gl" and k % 2:
        raise OddIndexForOsp(f"C_{k} vanishes identically on {group}; only even indices are generators")
    hw = tuple(hw) + (0,) * (n - len(hw))
    if len(hw) != n or not is_dominant(LieType.for_family(group, n), hw):
        raise NonDominant(f"{hw} is not a dominant weight at rank {n} for {group}")
    half_t = Fraction(t_value(group, n), 2)
    if group == "gl":
        half_t += Fraction(1, 2)
    total = Fraction(0)
    for i, v in enumerate(hw, start=1):
        rho = half_t - i
        total += (v + rho) ** k - rho ** k
    logger.debug("C_%d on %s at rank %d (%s): %s", k, hw, n, group, total)
    return total


def transpose_identity_check(lam: Partition) -> bool:
    """Σ_j [λ_j]_q q^{−j} against Σ_i [λ'_i]_q q^{−λ'_i+i−1}, as (q−1)-numerators."""
    rows = _row_sum(lam.parts, AffineExponent.const(0))
    columns = ExponentialSum()
    for i, height in enumerate(lam.conjugate.parts, start=1):
        columns = columns + q_number_term(height, -height + i - 1)
    return rows == columns
