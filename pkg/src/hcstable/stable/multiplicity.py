"""
Finite-n and stable multiplicities of Hom(μ, λ) bimodules for GL and O/Sp,
with the finite-window stabilization harness.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from ..lr import cache_info as lr_cache_info
from ..lr import composite_expansion, lr_coefficient, lr_weight_count, skew_pairing, skew_schur_expand
from ..oracle import LieType, dual_hw, tensor_decompose
from ..partitions import (
    Bipartition,
    CutDecomposition,
    PartitionError,
    Partition,
    RankTooSmall,
    SkewShape,
    assemble,
    bipartition_weight,
    intersection,
    subpartitions,
)

logger = logging.getLogger(__name__)

GROUPS = ("gl", "o", "sp")


class StableError(Exception):
    """Exception raised for errors in stable multiplicity computations."""

    pass


class InvalidInstance(StableError):
    """Raised when a family cannot be instantiated at the requested values."""

    pass


class InvalidFamily(StableError):
    """Raised when the data of a family is inconsistent."""

    pass


@dataclass(frozen=True)
class HomFamily:
    """
    The family λ^(n) = [α, β, γ], μ^(n) = [α + a, β + b, δ] with α, β growing.

    k and l are the lengths of the growing row and column blocks; a and b the
    fixed shifts between the two triples.
    """

    k: int = 0
    l: int = 0
    a: Tuple[int, ...] = ()
    b: Tuple[int, ...] = ()
    gamma: Partition = field(default_factory=Partition)
    delta: Partition = field(default_factory=Partition)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        object.__setattr__(self, "b", tuple(self.b))
        if self.k < 0 or self.l < 0:
            raise InvalidFamily(f"k and l must be nonnegative, got k={self.k}, l={self.l}")
        if len(self.a) != self.k:
            raise InvalidFamily(f"a={self.a} must have length k={self.k}")
        if len(self.b) != self.l:
            raise InvalidFamily(f"b={self.b} must have length l={self.l}")

    def __str__(self) -> str:
        a = ",".join(str(x) for x in self.a)
        b = ",".join(str(x) for x in self.b)
        return f"k={self.k},l={self.l},a={a},b={b},gamma={self.gamma},delta={self.delta}"

    @property
    def degree_shift(self) -> int:
        """|a| + |b| + |δ| − |γ|, the only allowed value of |ν̄| − |ν|."""
        return sum(self.a) + sum(self.b) + self.delta.size - self.gamma.size


@dataclass(frozen=True)
class FamilyInstance:
    lambda_n: Partition
    mu_n: Partition
    n: int


@dataclass(frozen=True)
class StabilityRow:
    n: int
    lambda_n: Union[Partition, Bipartition]
    mu_n: Union[Partition, Bipartition]
    multiplicity: int
    exists: bool = True


@dataclass
class StabilityReport:
    """Oracle multiplicities across a window of ranks, next to the closed form."""

    family: str
    nu: str
    group: str
    rows: List[StabilityRow]
    stable_value: Optional[int] = None

    @property
    def values(self) -> List[int]:
        return [row.multiplicity for row in self.rows]

    @property
    def stabilized(self) -> bool:
        # a finite window: constant values here do not prove stabilization
        return len(set(self.values)) <= 1

    @property
    def matches(self) -> Optional[bool]:
        if self.stable_value is None:
            return None
        return self.stabilized and all(v == self.stable_value for v in self.values)


def _bounded_vectors(lower: Sequence[int], total: int) -> Iterator[Tuple[int, ...]]:
    """Integer vectors v ≥ lower (coordinatewise) with Σ v = total."""
    if not lower:
        if total == 0:
            yield ()
        return
    slack = total - sum(lower)
    if slack < 0:
        return

    def rec(i: int, left: int) -> Iterator[Tuple[int, ...]]:
        if i == len(lower) - 1:
            yield (lower[i] + left,)
            return
        for x in range(left, -1, -1):
            for rest in rec(i + 1, left - x):
                yield (lower[i] + x,) + rest

    yield from rec(0, slack)


def _shift(v: Sequence[int], w: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x + y for x, y in zip(v, w))


def _summands(fam: HomFamily, s_of_eps) -> Iterator[Tuple[Tuple[int, ...], Tuple[int, ...], Partition]]:
    """Every (c, d, ε) with c ≥ max(0, −a), d ≥ max(0, −b), ε ⊆ γ ∩ δ, |c|+|d| = s(ε)."""
    lower_c = [max(0, -x) for x in fam.a]
    lower_d = [max(0, -x) for x in fam.b]
    for eps in subpartitions(intersection(fam.gamma, fam.delta)):
        s = s_of_eps(eps)
        if s < 0:
            continue
        for cd in _bounded_vectors(lower_c + lower_d, s):
            yield cd[: fam.k], cd[fam.k :], eps


def finite_hom_multiplicity_gl(lam: Partition, mu: Partition, nu: Bipartition, n: int) -> int:
    """
    dim Hom_{GL_n}(V_ν, V_λ ⊗ V_μ*) as the pairing (s_{λ/ν}, s_{μ/ν̄}).

    Args:
        lam: Highest weight of the first factor
        mu: Highest weight of the dualized factor
        nu: Bipartition of the constituent
        n: Rank, at least min(ℓ(λ)+ℓ(ν̄), ℓ(μ)+ℓ(ν))

    Returns:
        The multiplicity as a nonnegative integer
    """
    bound = min(lam.length + nu.minus.length, mu.length + nu.plus.length)
    if n < bound:
        raise RankTooSmall(f"gl_{n} is below the stable bound {bound} for λ=({lam}), μ=({mu}), ν=({nu})")
    if not lam.contains(nu.plus) or not mu.contains(nu.minus):
        return 0
    return skew_pairing(SkewShape(lam, nu.plus), SkewShape(mu, nu.minus))


def stable_hom_multiplicity_gl(fam: HomFamily, nu: Bipartition) -> int:
    """Closed-form multiplicity of V_ν in Hom(μ^(n), λ^(n)) for n large."""
    if nu.minus.size - nu.plus.size != fam.degree_shift:
        return 0
    total = 0
    for c, d, eps in _summands(fam, lambda e: nu.plus.size - fam.gamma.size + e.size):
        left = lr_weight_count(c, d, SkewShape(fam.gamma, eps), nu.plus)
        if not left:
            continue
        right = lr_weight_count(_shift(c, fam.a), _shift(d, fam.b), SkewShape(fam.delta, eps), nu.minus)
        total += left * right
    return total


def _pair_through(nu: Partition, first, second) -> int:
    """Σ_{ω,ξ} first[ω]·second[ξ]·c^ν_{ω,ξ}."""
    total = 0
    for omega, x in first.items():
        if not nu.contains(omega):
            continue
        for xi, y in second.items():
            if omega.size + xi.size == nu.size:
                total += x * y * lr_coefficient(nu, omega, xi)
    return total


def stable_hom_multiplicity_osp(fam: HomFamily, nu: Partition) -> int:
    """Stable multiplicity of V_ν in Hom(μ^(n), λ^(n)) for O_n and Sp_n."""
    excess = nu.size - sum(fam.a) - sum(fam.b) - fam.gamma.size - fam.delta.size
    if excess % 2:
        return 0
    total = 0
    for c, d, eps in _summands(fam, lambda e: excess // 2 + e.size):
        first = composite_expansion(c, d, SkewShape(fam.gamma, eps))
        second = composite_expansion(_shift(c, fam.a), _shift(d, fam.b), SkewShape(fam.delta, eps))
        total += _pair_through(nu, first, second)
    return total


def king_multiplicity(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Σ_{η,ω,ξ} c^λ_{η,ω} c^μ_{η,ξ} c^ν_{ω,ξ}; a multiplicity only in the stable range."""
    total = 0
    for eta in subpartitions(intersection(lam, mu)):
        first = skew_schur_expand(SkewShape(lam, eta))
        second = skew_schur_expand(SkewShape(mu, eta))
        total += _pair_through(nu, first, second)
    return total


def king_stable_range(lam: Partition, mu: Partition) -> int:
    """Smallest rank from which king_multiplicity is read as an O/Sp multiplicity."""
    return lam.size + mu.size


def instantiate_family(fam: HomFamily, alpha_vals: Sequence[int], beta_vals: Sequence[int], n: int) -> FamilyInstance:
    """
    Assemble (λ^(n), μ^(n)) from explicit values of α and β.

    Raises:
        InvalidInstance: wrong lengths, invalid triples or ℓ > n
    """
    alpha_vals, beta_vals = tuple(alpha_vals), tuple(beta_vals)
    if len(alpha_vals) != fam.k or len(beta_vals) != fam.l:
        raise InvalidInstance(
            f"need {fam.k} alpha and {fam.l} beta values, got alpha={alpha_vals}, beta={beta_vals}"
        )
    try:
        lam = assemble(CutDecomposition(alpha_vals, beta_vals, fam.gamma))
        mu = assemble(CutDecomposition(_shift(alpha_vals, fam.a), _shift(beta_vals, fam.b), fam.delta))
    except PartitionError as e:
        raise InvalidInstance(f"family {fam} at alpha={alpha_vals}, beta={beta_vals}: {e}") from e
    if lam.length > n or mu.length > n:
        raise InvalidInstance(f"λ=({lam}) or μ=({mu}) has more than {n} rows")
    return FamilyInstance(lam, mu, n)


def stable_instance(fam: HomFamily, n: int, group: str = "gl", gap: int = 1, rank: Optional[int] = None) -> FamilyInstance:
    """
    Instantiate a family at rank n with row gaps growing linearly in n.

    α_i = base_α + gap·n·(k−i+1); β_j = base_β + h·(l−j+1) with h the largest
    spacing that keeps both lengths within rank (default n).
    """
    if group not in GROUPS:
        raise InvalidFamily(f"unknown group {group!r}; expected one of {', '.join(GROUPS)}")
    rank = n if rank is None else rank
    spread_a = max((abs(x) for x in fam.a), default=0)
    spread_b = max((abs(x) for x in fam.b), default=0)
    step = max(gap * n, 2 * spread_a)
    base_alpha = max(fam.gamma.part(1), fam.delta.part(1)) + spread_a
    alpha = tuple(base_alpha + step * (fam.k - i) for i in range(fam.k))
    beta: Tuple[int, ...] = ()
    if fam.l:
        base_beta = max(fam.gamma.length, fam.delta.length) + spread_b
        h = (rank - fam.k - base_beta - spread_b) // fam.l
        if h < max(1, 2 * spread_b):
            raise InvalidInstance(f"rank {rank} leaves no room for the {fam.l} growing columns of {fam}")
        beta = tuple(base_beta + h * (fam.l - j) for j in range(fam.l))
    instance = instantiate_family(fam, alpha, beta, rank)
    logger.debug("family %s at n=%d: λ=(%s) μ=(%s)", fam, n, instance.lambda_n, instance.mu_n)
    return FamilyInstance(instance.lambda_n, instance.mu_n, n)


def _pad(p: Partition, n: int) -> Tuple[int, ...]:
    return p.parts + (0,) * (n - p.length)


def _as_partition(nu: Union[Bipartition, Partition]) -> Partition:
    if isinstance(nu, Partition):
        return nu
    if nu.minus:
        raise InvalidFamily(f"O/Sp constituents are partitions, got bipartition ({nu})")
    return nu.plus


def _oracle_row(fam: HomFamily, nu: Union[Bipartition, Partition], group: str, gap: int, n: int) -> StabilityRow:
    inst = stable_instance(fam, n, group, gap)
    if group == "gl":
        if nu.length > n:
            return StabilityRow(n, inst.lambda_n, inst.mu_n, 0, exists=False)
        decomposition = tensor_decompose(
            LieType("gl", n), _pad(inst.lambda_n, n), dual_hw(_pad(inst.mu_n, n))
        )
        value = decomposition.get(bipartition_weight(nu, n), 0)
    else:
        nu = _as_partition(nu)
        if nu.length > n:
            return StabilityRow(n, inst.lambda_n, inst.mu_n, 0, exists=False)
        decomposition = tensor_decompose(
            LieType.for_family(group, n), _pad(inst.lambda_n, n), _pad(inst.mu_n, n)
        )
        value = decomposition.get(_pad(nu, n), 0)
    return StabilityRow(n, inst.lambda_n, inst.mu_n, value)


def _run_window(task, n_range: Sequence[int], workers: int) -> list:
    ranks = sorted(set(n_range))
    if workers <= 1 or len(ranks) <= 1:
        return [task(n) for n in ranks]
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {n: executor.submit(task, n) for n in ranks}
        return [futures[n].result() for n in ranks]


class _RowTask:
    """Picklable per-rank job for the process pool."""

    def __init__(self, func, *args):
        self.func = func
        self.args = args

    def __call__(self, n: int):
        return self.func(*self.args, n)


def verify_stability(
    fam: HomFamily,
    nu: Union[Bipartition, Partition],
    group: str,
    n_range: Sequence[int],
    workers: int = 1,
    gap: int = 1,
) -> StabilityReport:
    """
    Compare oracle multiplicities over a window of ranks with the stable value.

    Args:
        fam: The Hom family to instantiate
        nu: Bipartition for gl, partition for o and sp
        group: 'gl', 'o' or 'sp'
        n_range: Ranks to evaluate
        workers: Process count for the per-rank oracle runs
        gap: Growth factor of the α gaps

    Returns:
        StabilityReport with one row per rank, sorted by n
    """
    if group not in GROUPS:
        raise InvalidFamily(f"unknown group {group!r}; expected one of {', '.join(GROUPS)}")
    if group == "gl":
        if not isinstance(nu, Bipartition):
            nu = Bipartition(nu)
        stable = stable_hom_multiplicity_gl(fam, nu)
    else:
        nu = _as_partition(nu)
        stable = stable_hom_multiplicity_osp(fam, nu)
    rows = _run_window(_RowTask(_oracle_row, fam, nu, group, gap), n_range, workers)
    report = StabilityReport(str(fam), str(nu), group, rows, stable)
    logger.debug("stability of %s at %s: %s (stable value %d)", fam, nu, report.values, stable)
    logger.debug("lr caches after %s: %s", fam, lr_cache_info())
    return report


def _mixed_row(plus_fam: HomFamily, minus_fam: HomFamily, nu: Bipartition, gap: int, n: int) -> StabilityRow:
    half = n // 2
    plus = stable_instance(plus_fam, n, "gl", gap, rank=half)
    minus = stable_instance(minus_fam, n, "gl", gap, rank=n - half)
    lam = Bipartition(plus.lambda_n, minus.lambda_n)
    mu = Bipartition(plus.mu_n, minus.mu_n)
    if nu.length > n:
        return StabilityRow(n, lam, mu, 0, exists=False)
    decomposition = tensor_decompose(
        LieType("gl", n), bipartition_weight(lam, n), dual_hw(bipartition_weight(mu, n))
    )
    return StabilityRow(n, lam, mu, decomposition.get(bipartition_weight(nu, n), 0))


def mixed_stable_multiplicity(
    plus_fam: HomFamily,
    minus_fam: HomFamily,
    nu: Bipartition,
    n_range: Sequence[int],
    workers: int = 1,
    gap: int = 1,
) -> StabilityReport:
    """
    Oracle multiplicity of V_ν in V_{λ^(n)} ⊗ V_{μ^(n)}* for bipartition weights.

    The positive halves come from plus_fam, the negative halves from
    minus_fam, each confined to half of the rank. No closed form exists, so
    the report carries stable_value only when the window is constant.
    """
    rows = _run_window(_RowTask(_mixed_row, plus_fam, minus_fam, nu, gap), n_range, workers)
    report = StabilityReport(f"{plus_fam} | {minus_fam}", str(nu), "gl", rows)
    if rows and report.stabilized:
        report.stable_value = rows[0].multiplicity
    return report
