"""
sl_Z modules C^Z, Λ^n C^Z and the Fock space, their twists and tensor products.

f_c = E_{c+1,c} and e_c = E_{c,c+1}. Contents of cells are column − row, so
f_c on the Fock space adds the cell of content c.
"""

import itertools
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple, Union

from ..partitions import Partition, add_cell, addable_cells, partitions_up_to, remove_cell, removable_cells

logger = logging.getLogger(__name__)

KINDS = ("cz", "wedge", "fock")
TWISTS = ("dual", "tau")


class SlzError(Exception):
    """Exception raised for errors in sl_Z computations."""

    pass


class InvalidIndex(SlzError):
    """Raised when a basis index does not belong to the module it is used with."""

    pass


class InactiveCoset(SlzError):
    """Raised when an operator is requested for a coset on which the action is trivial."""

    pass


class InvalidFamilySpec(SlzError):
    """Raised when a family of tuples is malformed."""

    pass


@dataclass(frozen=True)
class ModuleSpec:
    """
    One of C^Z, Λ^n C^Z or the Fock space, twisted in order.

    twists lists the twists as they are applied, so ('tau', 'dual') is
    (M^τ)^∨; the last entry is the outermost.
    """

    kind: str
    n: int = 0
    twists: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise SlzError(f"unknown module kind {self.kind!r}; use cz, wedge or fock")
        if self.kind == "wedge" and self.n < 1:
            raise SlzError(f"wedge powers need n >= 1, got {self.n}")
        object.__setattr__(self, "twists", tuple(self.twists))
        for t in self.twists:
            if t not in TWISTS:
                raise SlzError(f"unknown twist {t!r}; use dual or tau")

    @classmethod
    def cz(cls) -> "ModuleSpec":
        return cls("cz")

    @classmethod
    def wedge(cls, n: int) -> "ModuleSpec":
        return cls("wedge", n)

    @classmethod
    def fock(cls) -> "ModuleSpec":
        return cls("fock")

    def twisted(self, *twists: str) -> "ModuleSpec":
        return ModuleSpec(self.kind, self.n, self.twists + tuple(twists))

    def normalized(self) -> "ModuleSpec":
        """Cancel adjacent repeated twists."""
        stack: List[str] = []
        for t in self.twists:
            if stack and stack[-1] == t:
                stack.pop()
            else:
                stack.append(t)
        return ModuleSpec(self.kind, self.n, tuple(stack))

    def __str__(self) -> str:
        base = {"cz": "CZ", "fock": "F"}.get(self.kind, f"L{self.n}")
        return base + "".join(f"^{t}" for t in self.twists)

    def check_index(self, idx) -> None:
        if self.kind == "cz":
            if not isinstance(idx, int):
                raise InvalidIndex(f"C^Z basis indices are integers, got {idx!r}")
        elif self.kind == "wedge":
            if not isinstance(idx, tuple) or len(idx) != self.n:
                raise InvalidIndex(f"Λ^{self.n} basis indices have length {self.n}, got {idx!r}")
            if any(a <= b for a, b in zip(idx, idx[1:])):
                raise InvalidIndex(f"wedge index {idx} is not strictly decreasing")
        elif not isinstance(idx, Partition):
            raise InvalidIndex(f"Fock basis indices are partitions, got {idx!r}")


@dataclass(frozen=True)
class TensorProduct:
    factors: Tuple[ModuleSpec, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __str__(self) -> str:
        return " * ".join(str(f) for f in self.factors)

    def check_index(self, idx) -> None:
        if not isinstance(idx, tuple) or len(idx) != len(self.factors):
            raise InvalidIndex(f"tensor index needs {len(self.factors)} components, got {idx!r}")
        for part, spec in zip(idx, self.factors):
            spec.check_index(part)


AnySpec = Union[ModuleSpec, TensorProduct]


def index_key(idx):
    """Sort key putting basis indices of one module in a canonical order."""
    if isinstance(idx, Partition):
        return (idx.size, idx.parts)
    if isinstance(idx, tuple):
        return tuple(index_key(x) for x in idx)
    if hasattr(idx, "sort_key"):
        return idx.sort_key()
    return idx


class SparseVector:
    """Finite linear combination of basis indices with rational coefficients."""

    def __init__(self, entries: Optional[Dict[object, Fraction]] = None):
        self.entries: Dict[object, Fraction] = {}
        for idx, c in (entries or {}).items():
            c = Fraction(c)
            if c:
                self.entries[idx] = self.entries.get(idx, Fraction(0)) + c
        self.entries = {k: v for k, v in self.entries.items() if v}

    @classmethod
    def basis(cls, idx, coeff=1) -> "SparseVector":
        return cls({idx: Fraction(coeff)})

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, SparseVector) and self.entries == other.entries

    def __add__(self, other: "SparseVector") -> "SparseVector":
        entries = dict(self.entries)
        for k, v in other.entries.items():
            entries[k] = entries.get(k, Fraction(0)) + v
        return SparseVector(entries)

    def __neg__(self) -> "SparseVector":
        return self.scale(-1)

    def __sub__(self, other: "SparseVector") -> "SparseVector":
        return self + (-other)

    def scale(self, factor) -> "SparseVector":
        return SparseVector({k: v * Fraction(factor) for k, v in self.entries.items()})

    def items(self) -> List[Tuple[object, Fraction]]:
        return sorted(self.entries.items(), key=lambda kv: index_key(kv[0]))

    def map_basis(self, fn: Callable[[object], "SparseVector"]) -> "SparseVector":
        """Linear extension of fn from basis indices."""
        result = SparseVector()
        for idx, c in self.entries.items():
            result = result + fn(idx).scale(c)
        return result

    def __repr__(self) -> str:
        return f"SparseVector({dict(self.items())!r})"


# plain modules


def _cz_f(c: int, b: int):
    return [c + 1] if b == c else []


def _cz_e(c: int, b: int):
    return [c] if b == c + 1 else []


def _wedge_f(c: int, idx: Tuple[int, ...]):
    if c not in idx or c + 1 in idx:
        return []
    return [tuple(c + 1 if x == c else x for x in idx)]


def _wedge_e(c: int, idx: Tuple[int, ...]):
    if c + 1 not in idx or c in idx:
        return []
    return [tuple(c if x == c + 1 else x for x in idx)]


def _fock_f(c: int, lam: Partition):
    grown = add_cell(lam, c)
    return [] if grown is None else [grown]


def _fock_e(c: int, lam: Partition):
    shrunk = remove_cell(lam, c)
    return [] if shrunk is None else [shrunk]


_RAW = {
    ("cz", "f"): _cz_f,
    ("cz", "e"): _cz_e,
    ("wedge", "f"): _wedge_f,
    ("wedge", "e"): _wedge_e,
    ("fock", "f"): _fock_f,
    ("fock", "e"): _fock_e,
}


def _untwist(spec: ModuleSpec, op: str, c: int) -> Tuple[str, int]:
    """Translate (op, c) on the twisted module to the untwisted one."""
    for t in reversed(spec.twists):
        if t == "dual":
            op = "e" if op == "f" else "f"
        else:
            c = -c
    return op, c


def _act_basis(spec: ModuleSpec, op: str, c: int, idx) -> List:
    op, c = _untwist(spec, op, c)
    return _RAW[(spec.kind, op)](c, idx)


def _apply(spec: AnySpec, op: str, c: int, v: SparseVector, slot: Optional[int]) -> SparseVector:
    if isinstance(spec, ModuleSpec):
        if slot is not None:
            raise SlzError("slot is only meaningful on tensor products")

        def on_basis(idx):
            spec.check_index(idx)
            return SparseVector({out: Fraction(1) for out in _act_basis(spec, op, c, idx)})

        return v.map_basis(on_basis)

    if slot is not None and not 0 <= slot < len(spec.factors):
        raise SlzError(f"slot {slot} is outside 0..{len(spec.factors) - 1}")
    slots = range(len(spec.factors)) if slot is None else (slot,)

    def on_tensor(idx):
        spec.check_index(idx)
        out = SparseVector()
        # Leibniz rule, no signs at the level of Grothendieck groups
        for s in slots:
            for new in _act_basis(spec.factors[s], op, c, idx[s]):
                out = out + SparseVector.basis(idx[:s] + (new,) + idx[s + 1 :])
        return out

    return v.map_basis(on_tensor)


def apply_f(spec: AnySpec, c: int, v: SparseVector, slot: Optional[int] = None) -> SparseVector:
    """
    f_c applied to v.

    Args:
        spec: Module or tensor product the vector lives in
        c: Operator index
        v: Vector to act on
        slot: On a tensor product, act through one factor only instead of
            the diagonal action

    Returns:
        The image vector
    """
    return _apply(spec, "f", c, v, slot)


def apply_e(spec: AnySpec, c: int, v: SparseVector, slot: Optional[int] = None) -> SparseVector:
    """e_c applied to v; see apply_f."""
    return _apply(spec, "e", c, v, slot)


def _raw_h(kind: str, c: int, idx) -> int:
    if kind == "cz":
        return (1 if idx == c else 0) - (1 if idx == c + 1 else 0)
    if kind == "wedge":
        return (1 if c in idx else 0) - (1 if c + 1 in idx else 0)
    addable = any(content == c for _, content in addable_cells(idx))
    removable = any(content == c for _, content in removable_cells(idx))
    return int(addable) - int(removable)


def h_eigenvalue(spec: AnySpec, c: int, idx) -> int:
    """Eigenvalue of h_c = [e_c, f_c] on a basis vector."""
    spec.check_index(idx)
    if isinstance(spec, TensorProduct):
        return sum(h_eigenvalue(f, c, part) for f, part in zip(spec.factors, idx))
    sign = 1
    for t in reversed(spec.twists):
        if t == "dual":
            sign = -sign
        else:
            c = -c
    return sign * _raw_h(spec.kind, c, idx)


def bracket_check(spec: AnySpec, i: int, j: int, sample: Iterable) -> bool:
    """
    [e_i, f_j] on every sampled basis vector.

    Requires 0 for i != j and h_i(v)·v for i == j, with h_i(v) in {-1, 0, 1}
    on a single (possibly twisted) module.
    """
    for idx in sample:
        v = SparseVector.basis(idx)
        bracket = apply_e(spec, i, apply_f(spec, j, v)) - apply_f(spec, j, apply_e(spec, i, v))
        if i != j:
            if bracket:
                logger.debug("[e_%d, f_%d] does not vanish on %s", i, j, idx)
                return False
            continue
        h = h_eigenvalue(spec, i, idx)
        if isinstance(spec, ModuleSpec) and h not in (-1, 0, 1):
            return False
        if bracket != v.scale(h):
            logger.debug("[e_%d, f_%d] on %s is not %d times the vector", i, i, idx, h)
            return False
    return True


def cz_basis(bound: int) -> List[int]:
    return list(range(-bound, bound + 1))


def wedge_basis(n: int, low: int, high: int) -> List[Tuple[int, ...]]:
    """Strictly decreasing n-tuples with entries in [low, high]."""
    return [tuple(reversed(c)) for c in itertools.combinations(range(low, high + 1), n)]


def fock_basis(max_size: int) -> List[Partition]:
    return list(partitions_up_to(max_size))


def sequence_to_wedge(seq: Sequence[int]) -> Tuple[int, ...]:
    """(ν_1, ν_2 − 1, …, ν_n − n + 1) for a nonincreasing sequence ν."""
    return tuple(x - r for r, x in enumerate(seq))


def wedge_to_sequence(idx: Sequence[int]) -> Tuple[int, ...]:
    return tuple(x + r for r, x in enumerate(idx))


_SPEC_TOKEN = re.compile(r"(cz|fock|wedge(\d+)|l(\d+))((?:\^(?:dual|tau))*)")


def parse_module_spec(text: str) -> AnySpec:
    """
    Read 'fock', 'cz', 'wedge3', 'fock^tau^dual' or a '*'-separated product.

    A single factor gives a ModuleSpec, several give a TensorProduct.
    """
    specs = []
    for token in text.replace(" ", "").lower().split("*"):
        match = _SPEC_TOKEN.fullmatch(token)
        if not match:
            raise SlzError(f"cannot read module {token!r}; expected cz, fock or wedgeN with ^dual/^tau twists")
        kind = match.group(1)
        twists = tuple(t for t in match.group(4).split("^") if t)
        if kind in ("cz", "fock"):
            specs.append(ModuleSpec(kind, 0, twists))
        else:
            specs.append(ModuleSpec("wedge", int(match.group(2) or match.group(3)), twists))
    return specs[0] if len(specs) == 1 else TensorProduct(tuple(specs))
