"""
Finite-rank character oracle: Freudenthal multiplicities and Brauer-Klimyk
tensor products for gl_n, so_{2n+1} and sp_{2n}.
"""

import itertools
import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..partitions import Bipartition, Partition, RankTooSmall, bipartition_weight, gl_weight_to_bipartition

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]

RANK_CEILING = {"gl": 7, "so": 4, "sp": 4}


class OracleError(Exception):
    """Exception raised for errors in the finite-rank character oracle."""

    pass


class NonDominant(OracleError):
    """Raised when a highest weight is not dominant for its group."""

    pass


class RankCeilingExceeded(OracleError):
    """Raised when a Weyl-group computation is requested above the rank ceiling."""

    pass


@dataclass(frozen=True)
class LieType:
    """gl_n, so_{2n+1} or sp_{2n}, identified by series and rank n."""

    series: str
    rank: int

    def __post_init__(self):
        if self.series not in RANK_CEILING:
            raise OracleError(f"unknown series {self.series!r}; use gl, so or sp")
        if self.rank < 1:
            raise OracleError(f"rank must be positive, got {self.rank}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        """Read 'gl_3', 'so_5' or 'sp_4' (the subscript is the matrix size)."""
        match = re.fullmatch(r"(gl|so|sp|o)_?(\d+)", text.strip().lower())
        if not match:
            raise OracleError(f"cannot read group {text!r}; expected gl_N, so_N or sp_N")
        series, size = match.group(1), int(match.group(2))
        if series == "gl":
            return cls("gl", size)
        if series in ("so", "o"):
            if size % 2 == 0:
                raise OracleError(f"{text!r}: only odd orthogonal groups so_(2n+1) are oracle targets")
            return cls("so", (size - 1) // 2)
        if size % 2:
            raise OracleError(f"{text!r}: symplectic groups need an even size")
        return cls("sp", size // 2)

    @classmethod
    def for_family(cls, group: str, n: int) -> "LieType":
        """Map the stable-family group names gl / o / sp at rank n."""
        return cls({"gl": "gl", "o": "so", "so": "so", "sp": "sp"}[group], n)

    def __str__(self) -> str:
        size = {"gl": self.rank, "so": 2 * self.rank + 1, "sp": 2 * self.rank}[self.series]
        return f"{self.series}_{size}"

    def check_ceiling(self) -> None:
        ceiling = RANK_CEILING[self.series]
        if self.rank > ceiling:
            raise RankCeilingExceeded(
                f"{self} has rank {self.rank}; the oracle stops at rank {ceiling} for {self.series}"
            )

    @cached_property
    def rho(self) -> Tuple[Fraction, ...]:
        n = self.rank
        if self.series == "gl":
            return tuple(Fraction(n + 1, 2) - i for i in range(1, n + 1))
        if self.series == "so":
            return tuple(Fraction(2 * (n - i) + 1, 2) for i in range(1, n + 1))
        return tuple(Fraction(n - i + 1) for i in range(1, n + 1))

    @cached_property
    def positive_roots(self) -> List[Weight]:
        n = self.rank
        roots = []
        for i, j in itertools.combinations(range(n), 2):
            r = [0] * n
            r[i], r[j] = 1, -1
            roots.append(tuple(r))
            if self.series != "gl":
                r = [0] * n
                r[i], r[j] = 1, 1
                roots.append(tuple(r))
        if self.series != "gl":
            scale = 1 if self.series == "so" else 2
            for i in range(n):
                r = [0] * n
                r[i] = scale
                roots.append(tuple(r))
        return roots


@dataclass
class CharacterPoly:
    group: LieType
    weights: Dict[Weight, int] = field(default_factory=dict)

    @property
    def dimension(self) -> int:
        return sum(self.weights.values())

    def __getitem__(self, weight: Sequence[int]) -> int:
        return self.weights.get(tuple(weight), 0)


def _pad(group: LieType, hw: Sequence[int]) -> Weight:
    hw = tuple(int(x) for x in hw)
    if len(hw) > group.rank:
        if any(hw[group.rank:]):
            raise NonDominant(f"weight {hw} has more than {group.rank} nonzero entries for {group}")
        hw = hw[: group.rank]
    return hw + (0,) * (group.rank - len(hw))


def is_dominant(group: LieType, hw: Sequence[int]) -> bool:
    hw = tuple(hw)
    if any(hw[i] < hw[i + 1] for i in range(len(hw) - 1)):
        return False
    if group.series != "gl" and hw and hw[-1] < 0:
        return False
    return True


def _require_dominant(group: LieType, hw: Sequence[int]) -> Weight:
    weight = _pad(group, hw)
    if not is_dominant(group, weight):
        raise NonDominant(f"{weight} is not a dominant weight of {group}")
    return weight


def dominant_rep(group: LieType, weight: Sequence[int]) -> Weight:
    """The dominant weight in the Weyl orbit of weight."""
    if group.series == "gl":
        return tuple(sorted(weight, reverse=True))
    return tuple(sorted((abs(w) for w in weight), reverse=True))


def dominant_weights(group: LieType, hw: Sequence[int]) -> List[Weight]:
    """Dominant weights μ ≤ hw, ordered by depth below hw."""
    top = _require_dominant(group, hw)
    n = group.rank
    low = top[-1] if group.series == "gl" else 0
    found = []

    def rec(prefix: List[int], bound: int, slack: int) -> None:
        i = len(prefix)
        if i == n:
            if group.series == "gl" and slack != 0:
                return
            if group.series == "sp" and slack % 2:
                return
            found.append(tuple(prefix))
            return
        for v in range(bound, low - 1, -1):
            s = slack + top[i] - v
            if s < 0:
                continue
            prefix.append(v)
            rec(prefix, v, s)
            prefix.pop()

    rec([], top[0], 0)

    def depth(mu: Weight) -> int:
        return sum(itertools.accumulate(a - b for a, b in zip(top, mu)))

    found.sort(key=lambda mu: (depth(mu), tuple(-x for x in mu)))
    return found


def _inner(u: Sequence, v: Sequence) -> Fraction:
    return sum((Fraction(a) * b for a, b in zip(u, v)), Fraction(0))


@lru_cache(maxsize=None)
def _dominant_multiplicities(group: LieType, hw: Weight) -> Tuple[Tuple[Weight, int], ...]:
    weights = dominant_weights(group, hw)
    members = set(weights)
    rho = group.rho
    top = _inner([a + r for a, r in zip(hw, rho)], [a + r for a, r in zip(hw, rho)])
    mult: Dict[Weight, int] = {hw: 1}
    for mu in weights[1:]:
        acc = Fraction(0)
        for alpha in group.positive_roots:
            k = 1
            while True:
                shifted = tuple(m + k * a for m, a in zip(mu, alpha))
                key = dominant_rep(group, shifted)
                if key not in members:
                    break
                acc += mult[key] * _inner(shifted, alpha)
                k += 1
        mu_rho = [m + r for m, r in zip(mu, rho)]
        value = 2 * acc / (top - _inner(mu_rho, mu_rho))
        if value.denominator != 1:
            raise OracleError(f"non-integral multiplicity {value} at {mu} in L({hw}) of {group}")
        mult[mu] = int(value)
    logger.debug("Freudenthal on %s%s: %d dominant weights", group, hw, len(weights))
    return tuple((mu, m) for mu, m in mult.items() if m)


def _orbit(group: LieType, mu: Weight) -> Iterator[Weight]:
    perms = set(itertools.permutations(mu))
    if group.series == "gl":
        yield from perms
        return
    seen = set()
    for p in perms:
        nonzero = [i for i, x in enumerate(p) if x]
        for signs in itertools.product((1, -1), repeat=len(nonzero)):
            w = list(p)
            for i, s in zip(nonzero, signs):
                w[i] *= s
            w = tuple(w)
            if w not in seen:
                seen.add(w)
                yield w


def irr_character(group: LieType, hw: Sequence[int]) -> CharacterPoly:
    """
    Weight multiplicities of the irreducible module L(hw).

    Args:
        group: gl_n, so_{2n+1} or sp_{2n}
        hw: Dominant highest weight, padded with zeros to the rank

    Returns:
        CharacterPoly with every weight of L(hw) and its multiplicity
    """
    group.check_ceiling()
    weight = _require_dominant(group, hw)
    chars: Dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(group, weight):
        for w in _orbit(group, mu):
            chars[w] = m
    return CharacterPoly(group, chars)


def weyl_dimension(group: LieType, hw: Sequence[int]) -> int:
    weight = _require_dominant(group, hw)
    rho = group.rho
    shifted = [a + r for a, r in zip(weight, rho)]
    value = Fraction(1)
    for alpha in group.positive_roots:
        value *= _inner(shifted, alpha) / _inner(rho, alpha)
    return int(value)


def _reflect_to_dominant(group: LieType, v: Sequence[Fraction]) -> Optional[Tuple[int, Tuple[Fraction, ...]]]:
    """Sign and dominant image of a ρ-shifted weight; None on a wall."""
    sign = 1
    v = list(v)
    if group.series != "gl":
        for i, x in enumerate(v):
            if x == 0:
                return None
            if x < 0:
                v[i] = -x
                sign = -sign
    if len(set(v)) < len(v):
        return None
    inversions = sum(1 for i, j in itertools.combinations(range(len(v)), 2) if v[i] < v[j])
    if inversions % 2:
        sign = -sign
    return sign, tuple(sorted(v, reverse=True))


@lru_cache(maxsize=None)
def _tensor(group: LieType, hw1: Weight, hw2: Weight) -> Tuple[Tuple[Weight, int], ...]:
    small, big = (hw1, hw2) if weyl_dimension(group, hw1) <= weyl_dimension(group, hw2) else (hw2, hw1)
    rho = group.rho
    acc: Dict[Weight, int] = {}
    for w, m in irr_character(group, small).weights.items():
        shifted = [b + x + r for b, x, r in zip(big, w, rho)]
        reflected = _reflect_to_dominant(group, shifted)
        if reflected is None:
            continue
        sign, dom = reflected
        nu = tuple(int(d - r) for d, r in zip(dom, rho))
        acc[nu] = acc.get(nu, 0) + sign * m
    out = tuple(sorted(((nu, m) for nu, m in acc.items() if m), reverse=True))
    if any(m < 0 for _, m in out):
        raise OracleError(f"negative multiplicity in {group} product {hw1} x {hw2}")
    return out


def tensor_decompose(group: LieType, hw1: Sequence[int], hw2: Sequence[int]) -> Dict[Weight, int]:
    """Multiplicities m_ν with L(hw1) ⊗ L(hw2) = Σ m_ν L(ν), by Brauer-Klimyk."""
    group.check_ceiling()
    a = _require_dominant(group, hw1)
    b = _require_dominant(group, hw2)
    return dict(_tensor(group, a, b))


def dual_weight(nu: Bipartition) -> Bipartition:
    """V_ν* = V_{ᵗν}: swap the two halves."""
    return nu.dual()


def dual_hw(hw: Sequence[int]) -> Weight:
    """Highest weight of the dual gl_n module."""
    return tuple(-x for x in reversed(tuple(hw)))


def casimir2(weight: Sequence[int]) -> int:
    """c₂(ν) = Σ ν_i(ν_i + n + 1 − 2i) on gl_n."""
    n = len(weight)
    return sum(v * (v + n + 1 - 2 * i) for i, v in enumerate(weight, start=1))


def box_operator_eigenvalues(n: int, lam: Bipartition) -> Dict[Bipartition, Fraction]:
    """Eigenvalue of the action map x on each V_μ ⊆ V ⊗ V_λ of gl_n."""
    if n < lam.length + 1:
        raise RankTooSmall(f"gl_{n} needs rank at least {lam.length + 1} for ({lam}) plus a box")
    weight = bipartition_weight(lam, n)
    box = casimir2((1,) + (0,) * (n - 1))
    base = casimir2(weight)
    result: Dict[Bipartition, Fraction] = {}
    for i in range(n):
        mu = list(weight)
        mu[i] += 1
        if i and mu[i - 1] < mu[i]:
            continue
        result[gl_weight_to_bipartition(mu)] = Fraction(casimir2(mu) - base - box, 2)
    return result


def finite_hom_oracle(lam: Partition, mu: Partition, nu: Bipartition, n: int) -> int:
    """Multiplicity of V_ν in V_λ ⊗ V_μ* over gl_n, computed by Brauer-Klimyk."""
    group = LieType("gl", n)
    decomposition = tensor_decompose(
        group,
        bipartition_weight(Bipartition(lam), n),
        dual_hw(bipartition_weight(Bipartition(mu), n)),
    )
    return decomposition.get(bipartition_weight(nu, n), 0)


def restricted_multiplicity(group: LieType, lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of L(nu) in L(lam) ⊗ L(mu)."""
    return tensor_decompose(group, lam, mu).get(_pad(group, nu), 0)
