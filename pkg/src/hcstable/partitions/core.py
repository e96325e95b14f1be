"""
Partitions, bipartitions, skew shapes and the [α, β, γ] diagram cut.

Contents follow the col - row convention throughout.
"""

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, List, Optional, Sequence, Tuple


class PartitionError(Exception):
    """Exception raised for invalid Young-diagram data."""

    pass


class InvalidPartition(PartitionError):
    """Raised when a sequence is not a nonincreasing nonnegative sequence."""

    pass


class CutTooDeep(PartitionError):
    """Raised when a cut goes below the diagonal of the diagram."""

    pass


class InvalidTriple(PartitionError):
    """Raised when [α, β, γ] does not assemble into a partition."""

    pass


class RankTooSmall(PartitionError):
    """Raised when a rank n cannot host the requested weight."""

    pass


class NotContained(PartitionError):
    """Raised when the inner shape of a skew diagram is not inside the outer."""

    pass


def _check_nonincreasing(values: Sequence[int], what: str) -> None:
    for i, v in enumerate(values):
        if not isinstance(v, int) or isinstance(v, bool):
            raise InvalidPartition(f"{what} entry {v!r} is not an integer")
        if v < 0:
            raise InvalidPartition(f"{what} entry {v} is negative")
        if i and values[i - 1] < v:
            raise InvalidPartition(f"{what} {tuple(values)} is not nonincreasing")


@dataclass(frozen=True, order=True)
class Partition:
    """A nonincreasing sequence of positive integers; () is the empty partition."""

    parts: Tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        _check_nonincreasing(parts, "partition")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def part(self, i: int) -> int:
        """λ_i with 1-based rows; 0 past the last row."""
        if i < 1:
            raise IndexError(f"row index {i} must be positive")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(
            tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1))
        )

    @property
    def diagonal_length(self) -> int:
        return sum(1 for i, p in enumerate(self.parts, start=1) if p >= i)

    def contains(self, other: "Partition") -> bool:
        """True iff other ⊆ self as diagrams."""
        if other.length > self.length:
            return False
        return all(self.parts[i] >= p for i, p in enumerate(other.parts))

    def cells(self) -> Iterator["Cell"]:
        for row, p in enumerate(self.parts, start=1):
            for col in range(1, p + 1):
                yield Cell(row, col)


@dataclass(frozen=True, order=True)
class Cell:
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


@dataclass(frozen=True, order=True)
class Bipartition:
    """The pair (λ, λ̄) indexing a rational GL representation."""

    plus: Partition = field(default_factory=Partition)
    minus: Partition = field(default_factory=Partition)

    def __str__(self) -> str:
        return f"{self.plus}|{self.minus}"

    @property
    def length(self) -> int:
        return self.plus.length + self.minus.length

    def dual(self) -> "Bipartition":
        return Bipartition(self.minus, self.plus)

    def gl_weight(self, n: int) -> Tuple[int, ...]:
        return bipartition_weight(self, n)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = field(default_factory=Partition)

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise NotContained(f"{self.inner} is not contained in {self.outer}")

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> List[Cell]:
        return [
            Cell(row, col)
            for row in range(1, self.outer.length + 1)
            for col in range(self.inner.part(row) + 1, self.outer.part(row) + 1)
        ]


@dataclass(frozen=True)
class CutDecomposition:
    """λ = [α, β, γ]: α, β keep their exact lengths k, l (zero entries allowed)."""

    alpha: Tuple[int, ...] = ()
    beta: Tuple[int, ...] = ()
    gamma: Partition = field(default_factory=Partition)

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        _check_nonincreasing(self.alpha, "alpha")
        _check_nonincreasing(self.beta, "beta")

    @property
    def k(self) -> int:
        return len(self.alpha)

    @property
    def l(self) -> int:
        return len(self.beta)

    def is_valid(self) -> bool:
        if self.k and self.gamma.part(1) > self.alpha[-1]:
            return False
        if self.l and self.gamma.length > self.beta[-1]:
            return False
        return True


def conjugate(lam: Partition) -> Partition:
    return lam.conjugate


def cut(lam: Partition, k: int, l: int) -> CutDecomposition:
    """
    Cut the diagram of λ under row k and after column l.

    Args:
        lam: Partition to cut
        k: Number of rows above the horizontal cut
        l: Number of columns left of the vertical cut

    Returns:
        The decomposition [α, β, γ] with ℓ(α) = k and ℓ(β) = l
    """
    d = lam.diagonal_length
    if k < 0 or l < 0:
        raise CutTooDeep(f"cut depths must be nonnegative, got k={k}, l={l}")
    if k > d or l > d:
        raise CutTooDeep(f"cut (k={k}, l={l}) exceeds the diagonal length {d} of {lam}")
    conj = lam.conjugate
    alpha = tuple(lam.part(i) - l for i in range(1, k + 1))
    beta = tuple(conj.part(j) - k for j in range(1, l + 1))
    gamma = Partition(tuple(p - l for p in lam.parts[k:] if p > l))
    return CutDecomposition(alpha, beta, gamma)


def assemble(dec: CutDecomposition) -> Partition:
    """Glue [α, β, γ] back into a partition; inverse of cut."""
    if not dec.is_valid():
        raise InvalidTriple(
            f"cannot assemble alpha={dec.alpha}, beta={dec.beta}, gamma=({dec.gamma}): "
            "need gamma_1 <= alpha_k and len(gamma) <= beta_l"
        )
    rows = [dec.l + a for a in dec.alpha]
    depth = max(dec.beta[0] if dec.beta else 0, dec.gamma.length)
    for r in range(1, depth + 1):
        rows.append(sum(1 for b in dec.beta if b >= r) + dec.gamma.part(r))
    return Partition(tuple(rows))


def addable_cells(lam: Partition) -> List[Tuple[int, int]]:
    """(row, content) of every cell that can be added to λ."""
    result = []
    for row in range(1, lam.length + 2):
        if row == 1 or lam.part(row - 1) > lam.part(row):
            result.append((row, lam.part(row) + 1 - row))
    return result


def removable_cells(lam: Partition) -> List[Tuple[int, int]]:
    """(row, content) of every corner cell of λ."""
    return [
        (row, lam.part(row) - row)
        for row in range(1, lam.length + 1)
        if lam.part(row) > lam.part(row + 1)
    ]


def add_cell(lam: Partition, content: int) -> Optional[Partition]:
    for row, c in addable_cells(lam):
        if c == content:
            parts = list(lam.parts) + [0]
            parts[row - 1] += 1
            return Partition(tuple(parts))
    return None


def remove_cell(lam: Partition, content: int) -> Optional[Partition]:
    for row, c in removable_cells(lam):
        if c == content:
            parts = list(lam.parts)
            parts[row - 1] -= 1
            return Partition(tuple(parts))
    return None


def bipartition_weight(nu: Bipartition, n: int) -> Tuple[int, ...]:
    """[ν]_n = (ν_1, …, ν_k, 0, …, 0, −ν̄_l, …, −ν̄_1)."""
    if n < nu.length:
        raise RankTooSmall(
            f"rank {n} is below len(plus) + len(minus) = {nu.length} for ({nu})"
        )
    zeros = n - nu.length
    return tuple(nu.plus.parts) + (0,) * zeros + tuple(-p for p in reversed(nu.minus.parts))


def gl_weight_to_bipartition(weight: Sequence[int]) -> Bipartition:
    """Inverse of bipartition_weight for a dominant integer vector."""
    weight = tuple(weight)
    if any(weight[i] < weight[i + 1] for i in range(len(weight) - 1)):
        raise InvalidPartition(f"weight {weight} is not dominant")
    plus = tuple(w for w in weight if w > 0)
    minus = tuple(-w for w in reversed(weight) if w < 0)
    return Bipartition(Partition(plus), Partition(minus))


def intersection(lam: Partition, mu: Partition) -> Partition:
    return Partition(tuple(min(a, b) for a, b in zip(lam.parts, mu.parts)))


def partitions_of(n: int, max_part: Optional[int] = None, max_length: Optional[int] = None) -> Iterator[Partition]:
    """All partitions of n, largest first part first."""
    if n < 0:
        return
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_length = None if max_length is None else max_length - 1
        for rest in partitions_of(n - first, first, rest_length):
            yield Partition((first,) + rest.parts)


def partitions_up_to(size: int, max_length: Optional[int] = None) -> Iterator[Partition]:
    for n in range(size + 1):
        yield from partitions_of(n, max_length=max_length)


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """Every ε with ε ⊆ λ."""

    def rec(i: int, bound: int) -> Iterator[Tuple[int, ...]]:
        if i == lam.length:
            yield ()
            return
        for v in range(min(bound, lam.parts[i]), -1, -1):
            if v == 0:
                yield ()
                continue
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for parts in rec(0, lam.part(1) if lam else 0):
        yield Partition(parts)


def random_partition(rng: random.Random, max_size: int) -> Partition:
    """Draw a size uniformly, then a uniform-ish partition by random part splitting."""
    remaining = rng.randint(0, max_size)
    parts = []
    while remaining:
        p = rng.randint(1, remaining)
        parts.append(p)
        remaining -= p
    return Partition(tuple(sorted(parts, reverse=True)))
