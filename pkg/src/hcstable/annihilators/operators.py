"""
Noncommutative words in the generators E_ij of gl_n and a_ij of o_2n / sp_2n.
"""

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

Number = Union[int, Fraction]


class AnnihilatorError(Exception):
    """Exception raised for errors in annihilator computations."""

    pass


class IndexOutOfRange(AnnihilatorError):
    """Raised when a generator index falls outside the natural representation."""

    pass


class OverlappingIndexSets(AnnihilatorError):
    """Raised when the row and column sets of a minor intersect or are malformed."""

    pass


class DimensionMismatch(AnnihilatorError):
    """Raised when an operator and a space or vector do not fit together."""

    pass


@dataclass(frozen=True)
class AlgebraType:
    """
    gl_n, o_2n or sp_2n acting on V.

    For o and sp the basis v_1..v_2n of V is paired by Q(v_i, v_j) = δ_{n+i,j}
    (indices mod 2n); odd=True adds v_{2n+1} with Q(v_{2n+1}, v_i) = δ_{i,2n+1}.
    """

    series: str
    n: int
    odd: bool = False

    def __post_init__(self):
        if self.series not in ("gl", "o", "sp"):
            raise AnnihilatorError(f"unknown series {self.series!r}; use gl, o or sp")
        if self.n < 1:
            raise AnnihilatorError(f"rank must be positive, got {self.n}")
        if self.odd and self.series != "o":
            raise AnnihilatorError("only the orthogonal series has an odd extension")

    @classmethod
    def parse(cls, text: str) -> "AlgebraType":
        """Read 'gl_4', 'o_6', 'o_7' or 'sp_6'; the subscript is dim V."""
        match = re.fullmatch(r"(gl|o|so|sp)_?(\d+)", text.strip().lower())
        if not match:
            raise AnnihilatorError(f"cannot read algebra {text!r}; expected gl_N, o_N or sp_N")
        series, dim = match.group(1), int(match.group(2))
        if series == "gl":
            return cls("gl", dim)
        series = "o" if series == "so" else series
        if dim % 2:
            if series == "sp":
                raise AnnihilatorError(f"{text!r}: symplectic algebras need an even dimension")
            return cls("o", dim // 2, odd=True)
        return cls(series, dim // 2)

    @property
    def dim(self) -> int:
        if self.series == "gl":
            return self.n
        return 2 * self.n + (1 if self.odd else 0)

    @property
    def epsilon(self) -> int:
        return -1 if self.series == "o" else 1

    def __str__(self) -> str:
        return f"{self.series}_{self.dim}"

    def partner(self, k: int) -> int:
        """σ(k) with v_{n+σ(k)} ≡ v_k, so that Q(v_i, v_k) pairs i with σ(k)."""
        if self.odd and k == 2 * self.n + 1:
            return k
        return (k - self.n - 1) % (2 * self.n) + 1

    def tensor_to_gl(self, i: int, k: int) -> List[Tuple[int, int, int]]:
        """v_i ⊗ v_k as a signed matrix unit (sign, row, col) of gl(V)."""
        col = self.partner(k)
        sign = 1
        if self.series == "sp" and k > self.n:
            sign = -1
        return [(sign, i, col)]

    def check_index(self, i: int) -> None:
        if not 1 <= i <= self.dim:
            raise IndexOutOfRange(f"index {i} is outside 1..{self.dim} for {self}")


@dataclass(frozen=True, order=True)
class Generator:
    """E(i, j) of gl or A(i, j) = v_i⊗v_j + ε v_j⊗v_i of o/sp."""

    kind: str
    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.kind}{self.i}{self.j}" if max(self.i, self.j) < 10 else f"{self.kind}({self.i},{self.j})"


Word = Tuple[Generator, ...]


class OperatorExpr:
    """Σ coeff·word in U(g); words are read as products, acting right to left."""

    def __init__(self, terms: Optional[Dict[Word, Fraction]] = None):
        self.terms: Dict[Word, Fraction] = {}
        for word, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                self.terms[tuple(word)] = self.terms.get(tuple(word), Fraction(0)) + c
        self.terms = {w: c for w, c in self.terms.items() if c}

    @classmethod
    def identity(cls, coeff: Number = 1) -> "OperatorExpr":
        return cls({(): Fraction(coeff)})

    @classmethod
    def e(cls, i: int, j: int) -> "OperatorExpr":
        return cls({(Generator("E", i, j),): Fraction(1)})

    @classmethod
    def a(cls, i: int, j: int, algebra: AlgebraType) -> "OperatorExpr":
        """A(i, j) normalized to i ≤ j through A(j, i) = ε A(i, j)."""
        if algebra.series == "gl":
            raise DimensionMismatch("a_ij generators belong to o and sp, not gl")
        coeff = 1
        if i > j:
            i, j = j, i
            coeff = algebra.epsilon
        if i == j and algebra.epsilon == -1:
            return cls()
        return cls({(Generator("A", i, j),): Fraction(coeff)})

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return OperatorExpr(terms)

    def __neg__(self) -> "OperatorExpr":
        return OperatorExpr({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        return self + (-other)

    def __mul__(self, other: Union["OperatorExpr", Number]) -> "OperatorExpr":
        if not isinstance(other, OperatorExpr):
            return OperatorExpr({w: c * Fraction(other) for w, c in self.terms.items()})
        terms: Dict[Word, Fraction] = {}
        for (w1, c1), (w2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            terms[w1 + w2] = terms.get(w1 + w2, Fraction(0)) + c1 * c2
        return OperatorExpr(terms)

    def __rmul__(self, scalar: Number) -> "OperatorExpr":
        return self * scalar

    def __eq__(self, other) -> bool:
        return isinstance(other, OperatorExpr) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[Tuple[Word, Fraction]]:
        return iter(sorted(self.terms.items()))

    def commutator(self, other: "OperatorExpr") -> "OperatorExpr":
        return self * other - other * self

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def generators(self) -> Iterator[Generator]:
        for word in self.terms:
            yield from word

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for word, c in self:
            body = "*".join(str(g) for g in word) or "1"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)


def _delta(i: int, j: int) -> int:
    return 1 if i == j else 0


def elementary_annihilator(i: int, j: int, k: int, l: int, variant: str = "symV", n: Optional[int] = None) -> OperatorExpr:
    """
    The quadratic element killing S^m V (variant 'symV') or S^m V* ('symVdual').

    symV:     E_ij(E_kl + δ_kl) − E_il(E_kj + δ_kj)
    symVdual: (E_ij − δ_ij)E_kl − (E_il − δ_il)E_kj
    """
    if n is not None:
        for idx in (i, j, k, l):
            if not 1 <= idx <= n:
                raise IndexOutOfRange(f"index {idx} is outside 1..{n} for gl_{n}")
    E, one = OperatorExpr.e, OperatorExpr.identity
    if variant == "symV":
        return E(i, j) * (E(k, l) + one(_delta(k, l))) - E(i, l) * (E(k, j) + one(_delta(k, j)))
    if variant == "symVdual":
        return (E(i, j) - one(_delta(i, j))) * E(k, l) - (E(i, l) - one(_delta(i, l))) * E(k, j)
    raise AnnihilatorError(f"unknown variant {variant!r}; use symV or symVdual")


def permutation_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inversions % 2 else 1


def minor_entry(i: int, j: int, algebra: AlgebraType) -> OperatorExpr:
    if algebra.series == "gl":
        return OperatorExpr.e(i, j)
    return OperatorExpr.a(i, j, algebra)


def check_index_sets(rows: Sequence[int], cols: Sequence[int], algebra: AlgebraType) -> None:
    rows, cols = list(rows), list(cols)
    if len(rows) != len(cols):
        raise OverlappingIndexSets(f"row set {rows} and column set {cols} differ in size")
    if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise OverlappingIndexSets(f"indices must be pairwise distinct in {rows} and {cols}")
    if set(rows) & set(cols):
        raise OverlappingIndexSets(f"row set {rows} meets column set {cols}")
    bound = algebra.n
    for idx in rows + cols:
        if not 1 <= idx <= bound:
            raise IndexOutOfRange(f"minor index {idx} is outside 1..{bound} for {algebra}")


def minor(rows: Sequence[int], cols: Sequence[int], algebra: AlgebraType) -> OperatorExpr:
    """
    The minor A_{I,J} of (E_ij) for gl or of (a_ij) for o/sp.

    Args:
        rows: Row index set I
        cols: Column index set J, disjoint from I
        algebra: The Lie algebra; o/sp indices must lie in 1..n

    Returns:
        Σ_σ sgn(σ) Π_r A[I_r, J_σ(r)] as an OperatorExpr
    """
    check_index_sets(rows, cols, algebra)
    total = OperatorExpr()
    for perm in itertools.permutations(range(len(cols))):
        term = OperatorExpr.identity(permutation_sign(perm))
        for r, c in zip(rows, perm):
            term = term * minor_entry(r, cols[c], algebra)
        total = total + term
    return total


def degree_bound(k: int, family: str = "gl") -> int:
    """PBW degree in which Ann(R_k) is nonzero: (2k+1)(2k(2k+1)+1) for both families."""
    if k < 1:
        raise AnnihilatorError(f"k must be positive, got {k}")
    if family not in ("gl", "osp"):
        raise AnnihilatorError(f"unknown family {family!r}; use gl or osp")
    return (2 * k + 1) * (2 * k * (2 * k + 1) + 1)


def osp_statement_bound(d: int) -> int:
    """(2d+1)(d(2d+1)+1), the smaller o/sp exponent reported next to degree_bound."""
    return (2 * d + 1) * (d * (2 * d + 1) + 1)
