"""
Harish-Chandra compatibility of a pair of central characters.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple, Union

from .characters import CentralCharacter, SeriesMismatch
from .exponents import AffineExponent, ExponentialSum

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HCDecomposition:
    """
    χ − ψ written through exponents.

    gl: χ(z) − ψ(z) = Σ_b e^{bz} − Σ_c e^{cz}.
    osp: χ(z) − ψ(z) = Σ_b sinh((2b+1)z/2); c stays empty.
    """

    series: str
    b: Tuple[AffineExponent, ...] = ()
    c: Tuple[AffineExponent, ...] = ()

    def to_dict(self) -> Dict[str, object]:
        return {
            "compatible": True,
            "series": self.series,
            "b": [str(e) for e in self.b],
            "c": [str(e) for e in self.c],
        }


@dataclass(frozen=True)
class Incompatible:
    series: str
    coset: str
    reason: str

    def to_dict(self) -> Dict[str, object]:
        return {"compatible": False, "series": self.series, "coset": self.coset, "reason": self.reason}


@dataclass
class _Division:
    quotient: Dict[AffineExponent, int] = field(default_factory=dict)
    failure: Union[Tuple[str, str], None] = None


def _divide_by_q_minus_one(numerator: ExponentialSum) -> _Division:
    """
    Solve (q − 1)·Q = numerator with Q integral, one Z-coset at a time.

    Inside a coset the quotient is the negated running sum of coefficients
    from the lowest exponent upwards; the total must vanish.
    """
    cosets: Dict[tuple, Dict[int, Fraction]] = defaultdict(dict)
    for e, coeff in numerator.terms.items():
        cosets[e.coset_key()][e.offset()] = coeff
    result = _Division()
    for key in sorted(cosets, key=lambda kk: (kk[1], kk[0])):
        offsets = cosets[key]
        frac, coeffs = key
        label = str(AffineExponent(frac, coeffs))
        running = Fraction(0)
        for offset in range(min(offsets), max(offsets) + 1):
            running += offsets.get(offset, Fraction(0))
            if offset == max(offsets):
                break
            if running.denominator != 1:
                result.failure = (label, f"quotient coefficient {-running} at offset {offset} is not an integer")
                return result
            if running:
                result.quotient[AffineExponent(frac + offset, coeffs)] = -int(running)
        if running:
            result.failure = (label, f"coefficients sum to {running}, not 0")
            return result
    return result


def hc_compatibility(chi: CentralCharacter, psi: CentralCharacter) -> Union[HCDecomposition, Incompatible]:
    """
    Decide whether HC_{χ,ψ} can be nonzero and exhibit the exponents.

    Args:
        chi: Left central character
        psi: Right central character, same series

    Returns:
        HCDecomposition on success, Incompatible naming the failing coset
    """
    if chi.series != psi.series:
        raise SeriesMismatch(f"{chi.series} and {psi.series} characters cannot be compared")
    difference = chi - psi

    if chi.series == "gl":
        division = _divide_by_q_minus_one(difference)
        if division.failure:
            return Incompatible("gl", *division.failure)
        plus, minus = [], []
        for e, m in sorted(division.quotient.items(), key=lambda kv: kv[0].sort_key()):
            (plus if m > 0 else minus).extend([e] * abs(m))
        return HCDecomposition("gl", tuple(plus), tuple(minus))

    # osp: 2(χ − ψ) = (q − 1)·R with R antisymmetric about −1/2; b runs over R's positive part
    division = _divide_by_q_minus_one(difference.scale(2))
    if division.failure:
        return Incompatible("osp", *division.failure)
    b: List[AffineExponent] = []
    for e, m in sorted(division.quotient.items(), key=lambda kv: kv[0].sort_key()):
        if m > 0:
            b.extend([e] * m)
    logger.debug("osp decomposition with %d sinh terms", len(b))
    return HCDecomposition("osp", tuple(b))
