"""
Littlewood-Richardson coefficients by enumeration of LR skew tableaux.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Mapping, Sequence, Tuple

from ..partitions import (
    CutDecomposition,
    NotContained,
    Partition,
    SkewShape,
    assemble,
    partitions_of,
)

logger = logging.getLogger(__name__)


class LRError(Exception):
    """Exception raised for errors in Littlewood-Richardson computations."""

    pass


@dataclass(frozen=True)
class SchurExpansion:
    """Sparse expansion Σ coeffs[ν] s_ν with strictly positive coefficients."""

    coeffs: Mapping[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {nu: c for nu, c in sorted(self.coeffs.items()) if c}
        )

    def __getitem__(self, nu: Partition) -> int:
        return self.coeffs.get(nu, 0)

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def items(self):
        return self.coeffs.items()

    def pairing(self, other: "SchurExpansion") -> int:
        """Hall inner product; the Schur basis is orthonormal."""
        return sum(c * other[nu] for nu, c in self.coeffs.items())

    def __mul__(self, other: "SchurExpansion") -> "SchurExpansion":
        total: Counter = Counter()
        for mu, a in self.coeffs.items():
            for nu, b in other.coeffs.items():
                for lam, c in schur_product(mu, nu).items():
                    total[lam] += a * b * c
        return SchurExpansion(dict(total))


@dataclass(frozen=True)
class CompositeShape:
    """The skew diagram λ̃/η̃(c, d, γ/ε) together with the data that built it."""

    shape: SkewShape
    c: Tuple[int, ...]
    d: Tuple[int, ...]
    strip: SkewShape


def _reading_order(outer: Tuple[int, ...], inner: Tuple[int, ...]):
    """Cells of outer/inner row by row, right to left inside a row."""
    cells = []
    for r, length in enumerate(outer):
        start = inner[r] if r < len(inner) else 0
        for col in range(length - 1, start - 1, -1):
            cells.append((r, col))
    return cells


@lru_cache(maxsize=None)
def _lr_weights(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> Tuple[Tuple[Tuple[int, ...], int], ...]:
    """
    Enumerate LR fillings of outer/inner and tally their contents.

    A filling is weakly increasing along rows, strictly increasing down
    columns, and its reverse reading word is a lattice word.
    """
    cells = _reading_order(outer, inner)
    if not cells:
        return (((), 1),)
    filled: Dict[Tuple[int, int], int] = {}
    max_value = len(outer)
    counts = [0] * (max_value + 2)
    tally: Counter = Counter()

    def inner_len(r: int) -> int:
        return inner[r] if r < len(inner) else 0

    def place(pos: int) -> None:
        if pos == len(cells):
            tally[tuple(c for c in counts[1:] if c)] += 1
            return
        r, col = cells[pos]
        upper = max_value
        right = filled.get((r, col + 1))
        if right is not None:
            upper = min(upper, right)
        lower = 1
        if r > 0 and col >= inner_len(r - 1):
            lower = filled[(r - 1, col)] + 1
        upper = min(upper, r + 1)
        for v in range(lower, upper + 1):
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filled[(r, col)] = v
            place(pos + 1)
            del filled[(r, col)]
            counts[v] -= 1

    place(0)
    logger.debug("LR fillings of %s/%s: %d weights", outer, inner, len(tally))
    return tuple(sorted(tally.items()))


def skew_schur_expand(shape: SkewShape) -> SchurExpansion:
    """
    Expand s_{λ/μ} in the Schur basis.

    Args:
        shape: The skew shape λ/μ

    Returns:
        SchurExpansion with coeffs[ν] = c^λ_{μ,ν}
    """
    weights = _lr_weights(shape.outer.parts, shape.inner.parts)
    return SchurExpansion({Partition(w): c for w, c in weights})


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """c^λ_{μ,ν}; zero unless |μ|+|ν| = |λ| and μ, ν ⊆ λ."""
    if mu.size + nu.size != lam.size:
        return 0
    if not lam.contains(mu) or not lam.contains(nu):
        return 0
    return skew_schur_expand(SkewShape(lam, mu))[nu]


def skew_pairing(a: SkewShape, b: SkewShape) -> int:
    """(s_{a}, s_{b}) = Σ_η c^{a.outer}_{a.inner,η} c^{b.outer}_{b.inner,η}."""
    if a.size != b.size:
        return 0
    return skew_schur_expand(a).pairing(skew_schur_expand(b))


@lru_cache(maxsize=None)
def _product(mu: Partition, nu: Partition) -> Tuple[Tuple[Partition, int], ...]:
    n = mu.size + nu.size
    out = []
    for lam in partitions_of(n, max_length=mu.length + nu.length):
        if lam.contains(mu) and lam.contains(nu):
            c = skew_schur_expand(SkewShape(lam, mu))[nu]
            if c:
                out.append((lam, c))
    return tuple(out)


def schur_product(mu: Partition, nu: Partition) -> SchurExpansion:
    """s_μ · s_ν in the Schur basis."""
    return SchurExpansion(dict(_product(mu, nu)))


def ssyt_count(lam: Partition, m: int) -> int:
    """Semistandard tableaux of shape λ with entries ≤ m (hook-content formula)."""
    if lam.length > m:
        return 0
    num = Fraction(1)
    for cell in lam.cells():
        arm = lam.part(cell.row) - cell.col
        leg = lam.conjugate.part(cell.col) - cell.row
        num *= Fraction(m + cell.content, arm + leg + 1)
    return int(num)


def composite_shape(c: Sequence[int], d: Sequence[int], strip: SkewShape) -> CompositeShape:
    """
    Build λ̃/η̃(c, d, γ/ε) from the stabilization argument.

    λ̃ = [α̃, β̃, γ] with α̃_i = γ_1 + Σ_{j≥i} c_j and β̃_i = γ'_1 + Σ_{j≥i} d_j,
    η̃ = [α̃ − c, β̃ − d, ε]. The rows c_i, the strip and the columns d_j come
    out as pairwise disconnected pieces.
    """
    c = tuple(c)
    d = tuple(d)
    if any(x < 0 for x in c + d):
        raise LRError(f"composite shape needs nonnegative c={c}, d={d}")
    gamma, eps = strip.outer, strip.inner
    alpha_t = tuple(gamma.part(1) + sum(c[i:]) for i in range(len(c)))
    beta_t = tuple(gamma.conjugate.part(1) + sum(d[i:]) for i in range(len(d)))
    outer = assemble(CutDecomposition(alpha_t, beta_t, gamma))
    inner = assemble(
        CutDecomposition(
            tuple(x - y for x, y in zip(alpha_t, c)),
            tuple(x - y for x, y in zip(beta_t, d)),
            eps,
        )
    )
    return CompositeShape(SkewShape(outer, inner), c, d, strip)


def lr_weight_count(c: Sequence[int], d: Sequence[int], strip: SkewShape, nu: Partition) -> int:
    """c_ν(c, d, γ/ε): the coefficient of s_ν in s_{λ̃/η̃}."""
    return skew_schur_expand(composite_shape(c, d, strip).shape)[nu]


def composite_expansion(c: Sequence[int], d: Sequence[int], strip: SkewShape) -> SchurExpansion:
    return skew_schur_expand(composite_shape(c, d, strip).shape)


def cache_info() -> Dict[str, object]:
    return {"fillings": _lr_weights.cache_info(), "products": _product.cache_info()}
