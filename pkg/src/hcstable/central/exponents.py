"""
Affine exponents over formal generators and finite exponential sums.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, Tuple, Union

import sympy

Number = Union[int, Fraction]


class CentralCharError(Exception):
    """Exception raised for errors in central character computations."""

    pass


class ExponentParseError(CentralCharError):
    """Raised when text does not describe a linear exponent."""

    pass


def to_rational(value) -> sympy.Rational:
    value = Fraction(value)
    return sympy.Rational(value.numerator, value.denominator)


def from_rational(value) -> Fraction:
    if not getattr(value, "is_Rational", False):
        raise CentralCharError(f"{value} is not an exact rational number")
    return Fraction(int(value.p), int(value.q))


@dataclass(frozen=True)
class AffineExponent:
    """
    constant + Σ coeff·generator with rational data.

    coeffs is kept sorted by generator name with zero entries dropped, so
    equal exponents compare and hash equal.
    """

    constant: Fraction = Fraction(0)
    coeffs: Tuple[Tuple[str, Fraction], ...] = ()

    def __post_init__(self):
        merged: Dict[str, Fraction] = {}
        for name, c in self.coeffs:
            merged[name] = merged.get(name, Fraction(0)) + Fraction(c)
        object.__setattr__(self, "constant", Fraction(self.constant))
        object.__setattr__(
            self, "coeffs", tuple(sorted((n, c) for n, c in merged.items() if c))
        )

    @classmethod
    def const(cls, value: Number) -> "AffineExponent":
        return cls(Fraction(value))

    @classmethod
    def gen(cls, name: str, coeff: Number = 1) -> "AffineExponent":
        return cls(Fraction(0), ((name, Fraction(coeff)),))

    @classmethod
    def parse(cls, text: str) -> "AffineExponent":
        """
        Read a linear expression such as '(t+1)/2 - a1' or '7'.

        Raises:
            ExponentParseError: the text is not a rational linear form
        """
        names = set(re.findall(r"[A-Za-z_]\w*", text))
        try:
            expr = sympy.expand(sympy.sympify(text, locals={n: sympy.Symbol(n) for n in names}))
        except (sympy.SympifyError, SyntaxError, TypeError) as e:
            raise ExponentParseError(f"cannot read exponent {text!r}: {str(e)}")
        symbols = sorted(expr.free_symbols, key=str)
        if not symbols:
            if not expr.is_Rational:
                raise ExponentParseError(f"exponent {text!r} is not rational")
            return cls(from_rational(expr))
        try:
            poly = sympy.Poly(expr, *symbols)
        except sympy.PolynomialError as e:
            raise ExponentParseError(f"exponent {text!r} is not a polynomial: {str(e)}")
        if poly.total_degree() > 1:
            raise ExponentParseError(f"exponent {text!r} is not linear in {', '.join(map(str, symbols))}")
        coeffs = []
        for sym in symbols:
            c = poly.coeff_monomial(sym)
            if not c.is_Rational:
                raise ExponentParseError(f"coefficient {c} of {sym} in {text!r} is not rational")
            coeffs.append((str(sym), from_rational(c)))
        constant = poly.coeff_monomial(1)
        if not constant.is_Rational:
            raise ExponentParseError(f"constant {constant} in {text!r} is not rational")
        return cls(from_rational(constant), tuple(coeffs))

    def __add__(self, other: Union["AffineExponent", Number]) -> "AffineExponent":
        if not isinstance(other, AffineExponent):
            return AffineExponent(self.constant + Fraction(other), self.coeffs)
        return AffineExponent(self.constant + other.constant, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self) -> "AffineExponent":
        return AffineExponent(-self.constant, tuple((n, -c) for n, c in self.coeffs))

    def __sub__(self, other: Union["AffineExponent", Number]) -> "AffineExponent":
        return self + (-other)

    def __rsub__(self, other: Number) -> "AffineExponent":
        return (-self) + other

    def __mul__(self, scalar: Number) -> "AffineExponent":
        s = Fraction(scalar)
        return AffineExponent(self.constant * s, tuple((n, c * s) for n, c in self.coeffs))

    __rmul__ = __mul__

    @property
    def is_constant(self) -> bool:
        return not self.coeffs

    @property
    def generators(self) -> Tuple[str, ...]:
        return tuple(n for n, _ in self.coeffs)

    def coset_key(self) -> Tuple[Fraction, Tuple[Tuple[str, Fraction], ...]]:
        """Two exponents share a key iff they differ by an integer constant."""
        return (self.constant - (self.constant.numerator // self.constant.denominator), self.coeffs)

    def offset(self) -> int:
        return self.constant.numerator // self.constant.denominator

    def sort_key(self):
        return (self.coeffs, self.constant)

    def substitute(self, values: Mapping[str, Union[Number, "AffineExponent"]]) -> "AffineExponent":
        result = AffineExponent(self.constant)
        for name, c in self.coeffs:
            if name in values:
                value = values[name]
                result = result + (value * c if isinstance(value, AffineExponent) else Fraction(value) * c)
            else:
                result = result + AffineExponent.gen(name, c)
        return result

    def to_sympy(self) -> sympy.Expr:
        expr = to_rational(self.constant)
        for name, c in self.coeffs:
            expr += to_rational(c) * sympy.Symbol(name)
        return expr

    def to_dict(self) -> Dict[str, object]:
        return {"constant": str(self.constant), "coeffs": {n: str(c) for n, c in self.coeffs}}

    def __str__(self) -> str:
        return str(self.to_sympy())


def _clean(terms: Mapping[AffineExponent, Fraction]) -> Dict[AffineExponent, Fraction]:
    return {e: Fraction(c) for e, c in terms.items() if c}


@dataclass(frozen=True)
class ExponentialSum:
    """Σ coeff·q^exponent with q = e^z; zero coefficients are never stored."""

    terms: Mapping[AffineExponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "terms", _clean(self.terms))

    @classmethod
    def monomial(cls, exponent: AffineExponent, coeff: Number = 1) -> "ExponentialSum":
        return cls({exponent: Fraction(coeff)})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExponentialSum):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[Tuple[AffineExponent, Fraction]]:
        return iter(self.items())

    def items(self) -> List[Tuple[AffineExponent, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def __add__(self, other: "ExponentialSum") -> "ExponentialSum":
        total = dict(self.terms)
        for e, c in other.terms.items():
            total[e] = total.get(e, Fraction(0)) + c
        return ExponentialSum(total)

    def __neg__(self) -> "ExponentialSum":
        return ExponentialSum({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "ExponentialSum") -> "ExponentialSum":
        return self + (-other)

    def scale(self, factor: Number) -> "ExponentialSum":
        f = Fraction(factor)
        return ExponentialSum({e: c * f for e, c in self.terms.items()})

    def shift(self, exponent: Union[AffineExponent, Number]) -> "ExponentialSum":
        """Multiply by q^exponent."""
        return ExponentialSum({e + exponent: c for e, c in self.terms.items()})

    def reflect(self) -> "ExponentialSum":
        """S(z) ↦ S(−z)."""
        return ExponentialSum({-e: c for e, c in self.terms.items()})

    def is_even(self) -> bool:
        return self == self.reflect()

    def substitute(self, values: Mapping[str, Union[Number, AffineExponent]]) -> "ExponentialSum":
        out: Dict[AffineExponent, Fraction] = {}
        for e, c in self.terms.items():
            key = e.substitute(values)
            out[key] = out.get(key, Fraction(0)) + c
        return ExponentialSum(out)

    def power_sum(self, k: int) -> sympy.Expr:
        """Σ coeff·exponent^k, the k-th Taylor coefficient times k!."""
        return sympy.expand(sum((to_rational(c) * e.to_sympy() ** k for e, c in self.terms.items()), sympy.Integer(0)))

    def to_records(self) -> List[Dict[str, object]]:
        return [{"coefficient": str(c), "exponent": e.to_dict()} for e, c in self.items()]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*q^({e})" for e, c in self.items())
