"""
The Grothendieck group of the subcategory of bimodules Hom(μ, λ) with μ fixed.

μ is described by blocks (A_j, α[j]) and (B_j, β[j]) of formal generators
with nonincreasing integer sequences, a partition γ, and barred copies of
each. A basis vector is a tuple of current block sequences together with
the partitions δ and δ̄; moving along an active coset adds or removes one
cell in exactly one of them.
"""

import dataclasses
import itertools
import logging
import random
import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..central.exponents import AffineExponent
from ..partitions import Partition, add_cell, random_partition, remove_cell
from .modules import (
    InactiveCoset,
    InvalidFamilySpec,
    InvalidIndex,
    ModuleSpec,
    SparseVector,
    TensorProduct,
    apply_e,
    apply_f,
    sequence_to_wedge,
)

logger = logging.getLogger(__name__)

_NAME = re.compile(r"[A-Za-z_]\w*")
T = AffineExponent.gen("t")


@dataclass(frozen=True)
class Block:
    """A formal generator and a nonincreasing integer sequence ending in 0."""

    name: str
    seq: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "seq", tuple(self.seq))
        if not _NAME.fullmatch(self.name) or self.name == "t":
            raise InvalidFamilySpec(f"block name {self.name!r} must be an identifier other than t")
        if not self.seq:
            raise InvalidFamilySpec(f"block {self.name} has an empty sequence")
        if any(a < b for a, b in zip(self.seq, self.seq[1:])):
            raise InvalidFamilySpec(f"block {self.name} sequence {self.seq} is not nonincreasing")
        if self.seq[-1] != 0:
            raise InvalidFamilySpec(f"block {self.name} sequence {self.seq} must end in 0")

    @property
    def length(self) -> int:
        return len(self.seq)

    def __str__(self) -> str:
        return f"{self.name}:{','.join(str(x) for x in self.seq)}"


@dataclass(frozen=True)
class FamilySpec:
    a_blocks: Tuple[Block, ...] = ()
    b_blocks: Tuple[Block, ...] = ()
    gamma: Partition = field(default_factory=Partition)
    abar_blocks: Tuple[Block, ...] = ()
    bbar_blocks: Tuple[Block, ...] = ()
    gammabar: Partition = field(default_factory=Partition)

    def __post_init__(self):
        for name in ("a_blocks", "b_blocks", "abar_blocks", "bbar_blocks"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        names = [b.name for b in self.all_blocks()]
        if len(set(names)) != len(names):
            raise InvalidFamilySpec(f"block names must be pairwise distinct, got {names}")

    def all_blocks(self) -> List[Block]:
        return [*self.a_blocks, *self.b_blocks, *self.abar_blocks, *self.bbar_blocks]

    @property
    def K(self) -> int:
        return sum(b.length for b in self.a_blocks)

    @property
    def L(self) -> int:
        return sum(b.length for b in self.b_blocks)

    @property
    def Kbar(self) -> int:
        return sum(b.length for b in self.abar_blocks)

    @property
    def Lbar(self) -> int:
        return sum(b.length for b in self.bbar_blocks)

    def __str__(self) -> str:
        parts = [f"A={b}" for b in self.a_blocks] + [f"B={b}" for b in self.b_blocks]
        parts.append(f"gamma={self.gamma}")
        parts += [f"Abar={b}" for b in self.abar_blocks] + [f"Bbar={b}" for b in self.bbar_blocks]
        parts.append(f"gammabar={self.gammabar}")
        return ";".join(parts)


@dataclass(frozen=True)
class TupleIndex:
    """Current sequences α[j]+a[j], β[j]+b[j], ᾱ[j]+ā[j], β̄[j]+b̄[j] and δ, δ̄."""

    alpha: Tuple[Tuple[int, ...], ...] = ()
    beta: Tuple[Tuple[int, ...], ...] = ()
    alphabar: Tuple[Tuple[int, ...], ...] = ()
    betabar: Tuple[Tuple[int, ...], ...] = ()
    delta: Partition = field(default_factory=Partition)
    deltabar: Partition = field(default_factory=Partition)

    def __post_init__(self):
        for name in ("alpha", "beta", "alphabar", "betabar"):
            object.__setattr__(self, name, tuple(tuple(s) for s in getattr(self, name)))

    def sort_key(self):
        return (self.alpha, self.beta, self.alphabar, self.betabar, self.delta.parts, self.deltabar.parts)

    def replace(self, group: str, j: int, value) -> "TupleIndex":
        if group in ("delta", "deltabar"):
            return dataclasses.replace(self, **{group: value})
        seqs = list(getattr(self, group))
        seqs[j] = value
        return dataclasses.replace(self, **{group: tuple(seqs)})

    def to_dict(self) -> Dict[str, object]:
        return {
            "alpha": [list(s) for s in self.alpha],
            "beta": [list(s) for s in self.beta],
            "alphabar": [list(s) for s in self.alphabar],
            "betabar": [list(s) for s in self.betabar],
            "delta": str(self.delta),
            "deltabar": str(self.deltabar),
        }


@dataclass(frozen=True)
class ActiveCoset:
    """
    A coset r + Z on which sl_Z^(r) acts, with the block it moves.

    f at offset m adds (grow=True) or removes a cell of content sign·m.
    """

    label: str
    exponent: AffineExponent
    group: str
    position: int
    grow: bool
    sign: int


def check_index(fam: FamilySpec, idx: TupleIndex) -> None:
    pairs = [
        ("alpha", fam.a_blocks),
        ("beta", fam.b_blocks),
        ("alphabar", fam.abar_blocks),
        ("betabar", fam.bbar_blocks),
    ]
    for group, blocks in pairs:
        seqs = getattr(idx, group)
        if len(seqs) != len(blocks):
            raise InvalidIndex(f"{group} has {len(seqs)} sequences, family has {len(blocks)} blocks")
        for seq, block in zip(seqs, blocks):
            if len(seq) != block.length:
                raise InvalidIndex(f"{group} sequence {seq} should have length {block.length} for {block.name}")
            if any(a < b for a, b in zip(seq, seq[1:])):
                raise InvalidIndex(f"{group} sequence {seq} is not nonincreasing")


def coset_table(fam: FamilySpec) -> List[ActiveCoset]:
    """
    Every coset with a nontrivial action, in tensor-factor order.

    A_j + L − k_<j, −B_j − K + l_<j, −Ā_j − t − L̄ + k̄_<j,
    B̄_j − t + K̄ − l̄_<j, then L − K for δ and −t + K̄ − L̄ for δ̄.
    """
    K, L, Kbar, Lbar = fam.K, fam.L, fam.Kbar, fam.Lbar
    table: List[ActiveCoset] = []
    before = 0
    for j, b in enumerate(fam.a_blocks):
        r = AffineExponent.gen(b.name) + (L - before)
        table.append(ActiveCoset(f"A:{b.name}", r, "alpha", j, True, 1))
        before += b.length
    before = 0
    for j, b in enumerate(fam.b_blocks):
        r = -AffineExponent.gen(b.name) + (before - K)
        table.append(ActiveCoset(f"B:{b.name}", r, "beta", j, True, -1))
        before += b.length
    before = 0
    for j, b in enumerate(fam.abar_blocks):
        r = -AffineExponent.gen(b.name) - T + (before - Lbar)
        table.append(ActiveCoset(f"Abar:{b.name}", r, "alphabar", j, False, -1))
        before += b.length
    before = 0
    for j, b in enumerate(fam.bbar_blocks):
        r = AffineExponent.gen(b.name) - T + (Kbar - before)
        table.append(ActiveCoset(f"Bbar:{b.name}", r, "betabar", j, False, 1))
        before += b.length
    table.append(ActiveCoset("gamma", AffineExponent.const(L - K), "delta", 0, True, 1))
    table.append(ActiveCoset("gammabar", -T + (Kbar - Lbar), "deltabar", 0, False, -1))
    return table


def active_cosets(fam: FamilySpec) -> List[AffineExponent]:
    return [c.exponent for c in coset_table(fam)]


def resolve_coset(fam: FamilySpec, coset: AffineExponent, m: int = 0) -> Tuple[int, ActiveCoset, int]:
    """
    Locate coset + m among the active cosets.

    Returns:
        (slot, coset record, integer offset from its representative)

    Raises:
        InactiveCoset: coset + m lies in none of them
    """
    target = coset + m
    for slot, entry in enumerate(coset_table(fam)):
        if entry.exponent.coset_key() == target.coset_key():
            return slot, entry, target.offset() - entry.exponent.offset()
    raise InactiveCoset(f"{target} is not in an active coset of {fam}")


def _seq_add(seq: Tuple[int, ...], content: int) -> Optional[Tuple[int, ...]]:
    for r, x in enumerate(seq, start=1):
        if x + 1 - r == content and (r == 1 or seq[r - 2] > x):
            return seq[: r - 1] + (x + 1,) + seq[r:]
    return None


def _seq_remove(seq: Tuple[int, ...], content: int) -> Optional[Tuple[int, ...]]:
    for r, x in enumerate(seq, start=1):
        if x - r == content and (r == len(seq) or seq[r] < x):
            return seq[: r - 1] + (x - 1,) + seq[r:]
    return None


def _move(entry: ActiveCoset, idx: TupleIndex, offset: int, grow: bool) -> Optional[TupleIndex]:
    content = entry.sign * offset
    if entry.group in ("delta", "deltabar"):
        lam = getattr(idx, entry.group)
        new = add_cell(lam, content) if grow else remove_cell(lam, content)
    else:
        seq = getattr(idx, entry.group)[entry.position]
        new = _seq_add(seq, content) if grow else _seq_remove(seq, content)
    return None if new is None else idx.replace(entry.group, entry.position, new)


def _grothendieck(fam: FamilySpec, coset: AffineExponent, m: int, v: SparseVector, op: str) -> SparseVector:
    _, entry, offset = resolve_coset(fam, coset, m)
    grow = entry.grow if op == "f" else not entry.grow

    def on_basis(idx: TupleIndex) -> SparseVector:
        check_index(fam, idx)
        new = _move(entry, idx, offset, grow)
        return SparseVector() if new is None else SparseVector.basis(new)

    return v.map_basis(on_basis)


def grothendieck_f(fam: FamilySpec, coset: AffineExponent, m: int, v: SparseVector) -> SparseVector:
    """
    f of sl_Z^(r) on classes of Hom(μ, λ), r the coset of coset + m.

    Args:
        fam: The fixed μ
        coset: Any exponent in an active coset
        m: Integer offset added to coset
        v: Vector over TupleIndex

    Returns:
        The image; zero where no cell of the required content exists

    Raises:
        InactiveCoset: coset + m is not active for fam
    """
    return _grothendieck(fam, coset, m, v, "f")


def grothendieck_e(fam: FamilySpec, coset: AffineExponent, m: int, v: SparseVector) -> SparseVector:
    return _grothendieck(fam, coset, m, v, "e")


def tensor_spec(fam: FamilySpec) -> TensorProduct:
    """Λ^{k_j}, (Λ^{l_j})^τ, ((Λ^{k̄_j})^τ)^∨, (Λ^{l̄_j})^∨, F and (F^τ)^∨ in coset order."""
    factors = [ModuleSpec.wedge(b.length) for b in fam.a_blocks]
    factors += [ModuleSpec("wedge", b.length, ("tau",)) for b in fam.b_blocks]
    factors += [ModuleSpec("wedge", b.length, ("tau", "dual")) for b in fam.abar_blocks]
    factors += [ModuleSpec("wedge", b.length, ("dual",)) for b in fam.bbar_blocks]
    factors += [ModuleSpec.fock(), ModuleSpec("fock", 0, ("tau", "dual"))]
    return TensorProduct(tuple(factors))


def iso_map(fam: FamilySpec, idx: TupleIndex) -> tuple:
    check_index(fam, idx)
    parts = [sequence_to_wedge(s) for s in idx.alpha + idx.beta + idx.alphabar + idx.betabar]
    return tuple(parts) + (idx.delta, idx.deltabar)


def iso_vector(fam: FamilySpec, v: SparseVector) -> SparseVector:
    return v.map_basis(lambda idx: SparseVector.basis(iso_map(fam, idx)))


def base_index(fam: FamilySpec) -> TupleIndex:
    """The class of Hom(μ, μ)."""
    return TupleIndex(
        tuple(b.seq for b in fam.a_blocks),
        tuple(b.seq for b in fam.b_blocks),
        tuple(b.seq for b in fam.abar_blocks),
        tuple(b.seq for b in fam.bbar_blocks),
        fam.gamma,
        fam.gammabar,
    )


def random_tuple(fam: FamilySpec, rng: random.Random, spread: int = 3) -> TupleIndex:
    def seq(length: int) -> Tuple[int, ...]:
        return tuple(sorted((rng.randint(-spread, spread) for _ in range(length)), reverse=True))

    return TupleIndex(
        tuple(seq(b.length) for b in fam.a_blocks),
        tuple(seq(b.length) for b in fam.b_blocks),
        tuple(seq(b.length) for b in fam.abar_blocks),
        tuple(seq(b.length) for b in fam.bbar_blocks),
        random_partition(rng, spread),
        random_partition(rng, spread),
    )


def intertwines(fam: FamilySpec, sample: Iterable[TupleIndex], offsets: Sequence[int]) -> bool:
    """iso_map ∘ f = f ∘ iso_map and the same for e, per active coset and offset."""
    spec = tensor_spec(fam)
    table = coset_table(fam)
    for idx in sample:
        v = SparseVector.basis(idx)
        image = iso_vector(fam, v)
        for slot, entry in enumerate(table):
            for m in offsets:
                lhs_f = iso_vector(fam, grothendieck_f(fam, entry.exponent, m, v))
                lhs_e = iso_vector(fam, grothendieck_e(fam, entry.exponent, m, v))
                if lhs_f != apply_f(spec, m, image, slot=slot) or lhs_e != apply_e(spec, m, image, slot=slot):
                    logger.debug("iso_map fails to intertwine at %s, offset %d, on %s", entry.label, m, idx)
                    return False
    return True


def cosets_commute(fam: FamilySpec, sample: Iterable[TupleIndex], offsets: Sequence[int]) -> bool:
    """Operators of distinct active cosets commute on every sampled tuple."""
    table = coset_table(fam)
    ops = (grothendieck_f, grothendieck_e)
    for idx in sample:
        v = SparseVector.basis(idx)
        for first, second in itertools.combinations(table, 2):
            for m1, m2, x, y in itertools.product(offsets, offsets, ops, ops):
                one = x(fam, first.exponent, m1, y(fam, second.exponent, m2, v))
                two = y(fam, second.exponent, m2, x(fam, first.exponent, m1, v))
                if one != two:
                    logger.debug("%s and %s do not commute on %s", first.label, second.label, idx)
                    return False
    return True
