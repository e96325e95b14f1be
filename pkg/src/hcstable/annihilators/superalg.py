"""
Free supercommutative polynomials and the symbol of an annihilator minor.

Even variables are ('x', i, a) and ('y', i, a); odd ones ('xi', i, a) and
('eta', i, a). Odd variables anticommute and square to zero.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .operators import AlgebraType, AnnihilatorError, OverlappingIndexSets, permutation_sign

logger = logging.getLogger(__name__)

Var = Tuple[str, int, int]
EvenPart = Tuple[Tuple[Var, int], ...]
OddPart = Tuple[Var, ...]
Monomial = Tuple[EvenPart, OddPart]

ODD_NAMES = ("xi", "eta")


def _merge_even(a: EvenPart, b: EvenPart) -> EvenPart:
    exps: Dict[Var, int] = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _merge_odd(a: OddPart, b: OddPart):
    """Sign and sorted product of two sorted odd words, or None when a variable repeats."""
    if set(a) & set(b):
        return None
    crossings = sum(1 for x in a for y in b if x > y)
    return (-1) ** crossings, tuple(sorted(a + b))


@dataclass(frozen=True)
class SuperPolynomial:
    terms: Dict[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", {m: Fraction(c) for m, c in self.terms.items() if c})

    @classmethod
    def one(cls) -> "SuperPolynomial":
        return cls({((), ()): Fraction(1)})

    @classmethod
    def var(cls, name: str, i: int, a: int) -> "SuperPolynomial":
        v = (name, i, a)
        if name in ODD_NAMES:
            return cls({((), (v,)): Fraction(1)})
        return cls({(((v, 1),), ()): Fraction(1)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, SuperPolynomial) and self.terms == other.terms

    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return SuperPolynomial(terms)

    def __neg__(self) -> "SuperPolynomial":
        return SuperPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def scale(self, factor) -> "SuperPolynomial":
        return SuperPolynomial({m: c * Fraction(factor) for m, c in self.terms.items()})

    def __mul__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        terms: Dict[Monomial, Fraction] = {}
        for (m1, c1), (m2, c2) in itertools.product(self.terms.items(), other.terms.items()):
            merged = _merge_odd(m1[1], m2[1])
            if merged is None:
                continue
            sign, odd = merged
            key = (_merge_even(m1[0], m2[0]), odd)
            terms[key] = terms.get(key, Fraction(0)) + sign * c1 * c2
        return SuperPolynomial(terms)

    def odd_degrees(self) -> List[int]:
        return [len(odd) for _, odd in self.terms]

    def odd_variables(self) -> set:
        return {v for _, odd in self.terms for v in odd}

    def even_part(self) -> "SuperPolynomial":
        return SuperPolynomial({m: c for m, c in self.terms.items() if not m[1]})

    def __len__(self) -> int:
        return len(self.terms)


def nilradical_check(p: SuperPolynomial) -> bool:
    """Every monomial carries an odd variable and as many ξ's as η's."""
    for _, odd in p.terms:
        if not odd:
            return False
        xis = sum(1 for v in odd if v[0] == "xi")
        if 2 * xis != len(odd):
            return False
    return True


def super_power(p: SuperPolynomial, exponent: int, odd_count: Optional[int] = None) -> SuperPolynomial:
    """
    p**exponent, dropping partial products that cannot survive.

    A monomial with more than odd_count distinct odd variables vanishes, and
    every further factor adds at least min(odd degree of p) of them.
    """
    if exponent < 0:
        raise AnnihilatorError(f"exponent must be nonnegative, got {exponent}")
    if exponent == 0:
        return SuperPolynomial.one()
    if odd_count is None:
        odd_count = len(p.odd_variables())
    min_odd = min(p.odd_degrees(), default=0)
    if min_odd * exponent > odd_count:
        logger.debug("power %d vanishes by counting: %d odd variables", exponent, odd_count)
        return SuperPolynomial()
    result = SuperPolynomial.one()
    for step in range(exponent):
        result = result * p
        remaining = exponent - step - 1
        result = SuperPolynomial(
            {m: c for m, c in result.terms.items() if len(m[1]) + remaining * min_odd <= odd_count}
        )
        if not result:
            break
    return result


def _entry_gl(i: int, j: int, k: int) -> SuperPolynomial:
    """φ(E_ij) = Σ_a x_ia y_ja − Σ_b x_jb y_ib + Σ_a ξ_ia η_ja − Σ_b ξ_jb η_ib."""
    V = SuperPolynomial.var
    total = SuperPolynomial()
    for a in range(1, k + 1):
        total = total + V("x", i, a) * V("y", j, a) + V("xi", i, a) * V("eta", j, a)
    for b in range(k + 1, 2 * k + 1):
        total = total - V("x", j, b) * V("y", i, b) - V("xi", j, b) * V("eta", i, b)
    return total


def _entry_osp(i: int, j: int, d: int, eps: int) -> SuperPolynomial:
    """φ(a_ij) = Σ_a (x_ia y_ja + ε x_ja y_ia) + Σ_a (ξ_ia η_ja + ε ξ_ja η_ia)."""
    V = SuperPolynomial.var
    total = SuperPolynomial()
    for a in range(1, d + 1):
        total = total + V("x", i, a) * V("y", j, a) + (V("x", j, a) * V("y", i, a)).scale(eps)
        total = total + V("xi", i, a) * V("eta", j, a) + (V("xi", j, a) * V("eta", i, a)).scale(eps)
    return total


def super_symbol(rows: Sequence[int], cols: Sequence[int], k: int, series: str = "gl") -> SuperPolynomial:
    """
    Image of the minor A_{I,J} in the free supercommutative algebra.

    Args:
        rows: I, of size 2k+1
        cols: J, of size 2k+1 and disjoint from I
        k: Number of copies (k for gl, d for o/sp)
        series: 'gl', 'o' or 'sp'

    Returns:
        The expanded determinant of the substituted entries
    """
    rows, cols = list(rows), list(cols)
    if len(rows) != 2 * k + 1 or len(cols) != 2 * k + 1:
        raise OverlappingIndexSets(f"need |I| = |J| = {2 * k + 1}, got {len(rows)} and {len(cols)}")
    if set(rows) & set(cols) or len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
        raise OverlappingIndexSets(f"I={rows} and J={cols} must be disjoint sets")
    if series == "gl":
        entry = lambda i, j: _entry_gl(i, j, k)
    elif series in ("o", "sp"):
        eps = AlgebraType(series, max(rows + cols)).epsilon
        entry = lambda i, j: _entry_osp(i, j, k, eps)
    else:
        raise AnnihilatorError(f"unknown series {series!r}")
    entries = {(i, j): entry(i, j) for i in rows for j in cols}
    total = SuperPolynomial()
    for perm in itertools.permutations(range(len(cols))):
        term = SuperPolynomial.one().scale(permutation_sign(perm))
        for r, c in zip(rows, perm):
            term = term * entries[(r, cols[c])]
        total = total + term
    logger.debug("super symbol of %s x %s (%s, k=%d): %d monomials", rows, cols, series, k, len(total))
    return total


def odd_variable_count(k: int) -> int:
    """2N = 4k(2k+1) odd generators of the algebra the symbol lives in."""
    return 4 * k * (2 * k + 1)
