import random
from fractions import Fraction

import pytest

from hcstable.annihilators import (
    AlgebraType,
    AnnihilatorError,
    DimensionMismatch,
    Factor,
    IndexOutOfRange,
    ModuleSpace,
    OperatorExpr,
    OverlappingIndexSets,
    SuperPolynomial,
    apply,
    check_annihilates,
    degree_bound,
    elementary_annihilator,
    entries_commute,
    find_witness,
    minor,
    nilradical_check,
    odd_variable_count,
    osp_statement_bound,
    super_power,
    super_symbol,
    verify_elementary,
    verify_minor,
)

E = OperatorExpr.e
one = OperatorExpr.identity


def space(algebra: str, *factors: str) -> ModuleSpace:
    return ModuleSpace(AlgebraType.parse(algebra), tuple(Factor.parse(f) for f in factors))


def test_algebra_parsing():
    assert AlgebraType.parse("gl_4") == AlgebraType("gl", 4)
    assert AlgebraType.parse("sp_6") == AlgebraType("sp", 3)
    assert AlgebraType.parse("o_7") == AlgebraType("o", 3, odd=True)
    assert AlgebraType.parse("so_6").dim == 6
    with pytest.raises(AnnihilatorError):
        AlgebraType.parse("sp_5")


def test_factor_parsing():
    assert Factor.parse("S^2(V*)") == Factor("sym", 2, dual=True)
    assert Factor.parse("L3V") == Factor("alt", 3)
    assert str(Factor.parse("S1V")) == "S^1(V)"
    with pytest.raises(AnnihilatorError):
        Factor.parse("X2V")


def test_elementary_annihilator_formula():
    assert elementary_annihilator(1, 1, 2, 2) == E(1, 1) * (E(2, 2) + one()) - E(1, 2) * E(2, 1)
    assert elementary_annihilator(1, 2, 3, 4) == E(1, 2) * E(3, 4) - E(1, 4) * E(3, 2)
    with pytest.raises(IndexOutOfRange):
        elementary_annihilator(1, 2, 3, 5, n=4)
    with pytest.raises(AnnihilatorError):
        elementary_annihilator(1, 1, 1, 1, variant="alt")


def test_minor_expansion():
    algebra = AlgebraType("gl", 4)
    assert minor([1, 2], [3, 4], algebra) == E(1, 3) * E(2, 4) - E(1, 4) * E(2, 3)
    assert minor([1, 2, 3], [4, 5, 6], AlgebraType("sp", 6)).degree == 3


def test_minor_index_checks():
    with pytest.raises(OverlappingIndexSets):
        minor([1, 2], [2, 3], AlgebraType("gl", 4))
    with pytest.raises(OverlappingIndexSets):
        minor([1, 2], [3], AlgebraType("gl", 4))
    with pytest.raises(IndexOutOfRange):
        minor([1], [5], AlgebraType("gl", 4))
    # o/sp minors draw rows and columns from the first half of the basis
    with pytest.raises(IndexOutOfRange):
        minor([1], [4], AlgebraType("sp", 3))


def test_apply_conventions():
    s2 = space("gl_2", "S2V")
    assert apply(E(1, 1), s2, {((1, 2),): Fraction(1)}) == {((1, 2),): Fraction(1)}
    dual = space("gl_2", "S1V*")
    # E_pq acts on V* as −x*_q ∂/∂x*_p
    assert apply(E(1, 2), dual, {((1,),): Fraction(1)}) == {((2,),): Fraction(-1)}
    assert apply(OperatorExpr(), s2, {((1, 1),): Fraction(1)}) == {}


def test_apply_on_exterior_powers():
    alt = space("gl_3", "L2V")
    assert apply(E(2, 3), alt, {((1, 3),): Fraction(1)}) == {((1, 2),): Fraction(1)}
    assert apply(E(3, 1), alt, {((1, 2),): Fraction(1)}) == {((2, 3),): Fraction(-1)}
    assert apply(E(1, 2), alt, {((1, 2),): Fraction(1)}) == {}


def test_apply_rejects_foreign_vectors():
    with pytest.raises(DimensionMismatch):
        apply(E(1, 1), space("gl_2", "S2V"), {((1,),): Fraction(1)})
    with pytest.raises(DimensionMismatch):
        apply(OperatorExpr.a(1, 2, AlgebraType("sp", 2)), space("gl_4", "S1V"), {((1,),): Fraction(1)})
    with pytest.raises(DimensionMismatch):
        OperatorExpr.a(1, 2, AlgebraType("gl", 4))


@pytest.mark.parametrize("variant", ["symV", "symVdual"])
def test_verify_elementary(variant):
    report = verify_elementary(2, 3, variant)
    assert report.verdict
    assert report.witness is None
    assert report.dimension == 4


def test_elementary_annihilator_on_the_wrong_side():
    # the symV element does not kill S^m V*
    op = elementary_annihilator(1, 1, 2, 2, "symV")
    assert not check_annihilates(op, space("gl_2", "S2V*"))


def test_two_by_two_minor_kills_symmetric_power():
    report = verify_minor([1, 2], [3, 4], space("gl_4", "S2V"))
    assert report.verdict


def test_two_by_two_minor_fails_on_v_tensor_dual():
    s = space("gl_6", "S1V", "S1V*")
    report = verify_minor([1, 2], [3, 4], s)
    assert not report.verdict
    assert report.witness is not None
    assert find_witness(minor([1, 2], [3, 4], s.algebra), s) is not None


def test_three_by_three_minor_kills_mixed_space():
    report = verify_minor([1, 2, 3], [4, 5, 6], space("gl_6", "S2V", "S1V*"))
    assert report.verdict
    assert report.to_dict()["parameters"]["algebra"] == "gl_6"
    assert "elapsed" not in report.to_dict()


@pytest.mark.parametrize("algebra", ["sp_12", "o_12"])
def test_orthosymplectic_minor_kills_symmetric_power(algebra):
    assert verify_minor([1, 2, 3], [4, 5, 6], space(algebra, "S2V")).verdict


def test_minor_entries_commute():
    assert entries_commute([1, 2], [3, 4], AlgebraType("gl", 4), space("gl_4", "S2V"))
    assert entries_commute([1, 2], [3, 4], AlgebraType("sp", 4), space("sp_8", "S1V"))


@pytest.mark.parametrize(
    "k, family, bound",
    [
        (1, "gl", 21),
        (2, "gl", 105),
        (1, "osp", 21),
    ],
)
def test_degree_bound(k, family, bound):
    assert degree_bound(k, family) == bound


def test_degree_bound_errors_and_statement_bound():
    assert osp_statement_bound(1) == 12
    with pytest.raises(AnnihilatorError):
        degree_bound(0)
    with pytest.raises(AnnihilatorError):
        degree_bound(1, "e8")


def test_super_polynomial_signs():
    V = SuperPolynomial.var
    xi1, xi2 = V("xi", 1, 1), V("xi", 2, 1)
    assert xi1 * xi2 == -(xi2 * xi1)
    assert not xi1 * xi1
    x = V("x", 1, 1)
    assert x * xi1 == xi1 * x
    assert super_power(x + xi1, 0) == SuperPolynomial.one()


def test_nilradical_check():
    V = SuperPolynomial.var
    assert nilradical_check(SuperPolynomial())
    assert not nilradical_check(V("x", 1, 1) * V("y", 1, 1))
    assert nilradical_check(V("xi", 1, 1) * V("eta", 2, 1))
    assert not nilradical_check(V("xi", 1, 1) * V("xi", 2, 1))


@pytest.mark.parametrize("series", ["gl", "o", "sp"])
def test_super_symbol_is_nilpotent(series):
    symbol = super_symbol([1, 2, 3], [4, 5, 6], 1, series)
    assert symbol
    assert not symbol.even_part()
    assert nilradical_check(symbol)
    assert odd_variable_count(1) == 12
    assert not super_power(symbol, 7, odd_variable_count(1))


def test_super_power_keeps_low_powers():
    symbol = super_symbol([1, 2, 3], [4, 5, 6], 1)
    assert super_power(symbol, 1, odd_variable_count(1)) == symbol


def test_super_symbol_square_survives():
    symbol = super_symbol([1, 2, 3], [4, 5, 6], 1)
    square = super_power(symbol, 2, odd_variable_count(1))
    assert square
    assert square == symbol * symbol
    assert min(square.odd_degrees()) == 4


def _specialize_even(p: SuperPolynomial, rng: random.Random) -> SuperPolynomial:
    values = {}
    terms = {}
    for (even, odd), c in p.terms.items():
        for v, e in even:
            if v not in values:
                values[v] = Fraction(rng.randint(1, 9))
            c *= values[v] ** e
        key = ((), odd)
        terms[key] = terms.get(key, Fraction(0)) + c
    return SuperPolynomial(terms)


def test_super_symbol_seventh_power_by_multiplication():
    symbol = _specialize_even(super_symbol([1, 2, 3], [4, 5, 6], 1), random.Random(11))
    assert symbol * symbol
    power = symbol
    for _ in range(6):
        power = power * symbol
    assert not power


def test_super_symbol_checks_sizes():
    with pytest.raises(OverlappingIndexSets):
        super_symbol([1, 2], [3, 4], 1)
    with pytest.raises(OverlappingIndexSets):
        super_symbol([1, 2, 3], [3, 4, 5], 1)
