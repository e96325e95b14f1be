import random
from fractions import Fraction

import pytest
import sympy

from hcstable.central import (
    AffineExponent,
    CentralCharacter,
    CentralCharError,
    ExponentialSum,
    ExponentParseError,
    FormalCut,
    HCDecomposition,
    Incompatible,
    OddIndexForOsp,
    SeriesMismatch,
    char_of_bipartition_by_additivity,
    char_of_bipartition_gl,
    char_of_triple_gl,
    char_osp,
    char_pair_of_hom,
    char_pair_of_hom_osp,
    ck_value,
    evaluate_ck,
    finite_ck_value,
    hc_compatibility,
    q_number_term,
    transpose_identity_check,
)
from hcstable.partitions import (
    Bipartition,
    Partition,
    bipartition_weight,
    cut,
    partitions_up_to,
    random_partition,
)
from hcstable.stable import HomFamily

t = sympy.Symbol("t")


def E(text: str) -> AffineExponent:
    return AffineExponent.parse(text)


def q(text: str, coeff=1) -> ExponentialSum:
    return ExponentialSum.monomial(E(text), coeff)


def P(*parts: int) -> Partition:
    return Partition(parts)


def test_exponent_grammar():
    e = E("(t+1)/2 - a1")
    assert e.constant == Fraction(1, 2)
    assert dict(e.coeffs) == {"a1": -1, "t": Fraction(1, 2)}
    assert E("t/2 + 1/2 - a1") == e
    assert E("7").is_constant


@pytest.mark.parametrize("text", ["t**2", "a1*b1", "sin(t)", "1/"])
def test_exponent_grammar_rejects_nonlinear(text):
    with pytest.raises(ExponentParseError):
        E(text)


def test_coset_key_ignores_integer_shifts():
    assert E("t/2 + 3/2").coset_key() == E("t/2 - 1/2").coset_key()
    assert E("t/2").coset_key() != E("t/2 + 1/2").coset_key()
    assert E("a1 - 3").offset() == -3


def test_q_number_terms():
    assert q_number_term(1) == q("1") - q("0")
    assert q_number_term(E("a1") + 1, -1) == q("a1") - q("-1")
    # [k − l]_q = [k]_q − [l]_q q^{k−l}
    assert q_number_term(2) == q_number_term(3) - q_number_term(1, 2)


def test_char_of_bipartition_gl():
    assert char_of_bipartition_gl(Bipartition(P(1))).numerator == q("(t+1)/2") - q("(t-1)/2")
    assert not char_of_bipartition_gl(Bipartition()).numerator
    assert char_of_bipartition_gl(Bipartition(P(), P(1))).numerator == q("-(t+1)/2") - q("-(t-1)/2")


def test_additivity_matches_direct_formula():
    small = list(partitions_up_to(3))
    for plus in small:
        for minus in small:
            nu = Bipartition(plus, minus)
            assert char_of_bipartition_by_additivity(nu) == char_of_bipartition_gl(nu), nu


def test_triple_reduces_to_bipartition():
    assert char_of_triple_gl(FormalCut.generic(0, 0, P(1))) == char_of_bipartition_gl(Bipartition(P(1)))
    formal = char_of_triple_gl(FormalCut.generic(1, 0)).numerator.substitute({"a1": 5, "t": 7})
    direct = char_of_bipartition_gl(Bipartition(P(5))).numerator.substitute({"t": 7})
    assert formal == direct


def test_generic_triple_shape():
    chi = char_of_triple_gl(FormalCut.generic(1, 1))
    top = E("(t+1)/2")
    expected = q_number_term(E("a1") + 1, top - 1) + q_number_term(E("b1"), top - E("b1") - 1)
    assert chi.numerator == expected


def test_concrete_triples_match_row_form():
    rng = random.Random(11)
    for _ in range(150):
        lam = random_partition(rng, 20)
        d = lam.diagonal_length
        k, l = rng.randint(0, d), rng.randint(0, d)
        dec = cut(lam, k, l)
        cut_char = char_of_triple_gl(FormalCut.concrete(dec.alpha, dec.beta, dec.gamma))
        assert cut_char == char_of_bipartition_gl(Bipartition(lam)), (lam, k, l)


def test_char_pair_of_end_family_is_equal():
    chi, psi = char_pair_of_hom(HomFamily(k=1, l=1, a=(0,), b=(0,), gamma=P(1), delta=P(1)))
    assert chi == psi


def test_char_pair_of_shifted_family():
    chi, psi = char_pair_of_hom(HomFamily(k=1, a=(1,)))
    top = E("(t+1)/2")
    assert psi.numerator - chi.numerator == q_number_term(1, E("a1") + top - 1)


def test_char_osp():
    chi = char_osp(P(1))
    expected = (q("t/2") - q("t/2 - 1") + q("-t/2") - q("1 - t/2")).scale(Fraction(1, 2))
    assert chi.numerator == expected
    assert chi.series == "osp"
    assert not char_osp(P()).numerator
    formal = char_osp(FormalCut.generic(1, 0)).numerator.substitute({"a1": 3, "t": 5})
    assert formal == char_osp(P(3)).numerator.substitute({"t": 5})


def test_osp_numerator_must_be_even():
    with pytest.raises(CentralCharError):
        CentralCharacter(q("t"), "osp")
    with pytest.raises(CentralCharError):
        char_osp(P(1), "e")


def test_ck_value():
    chi = char_of_bipartition_gl(Bipartition(P(1)))
    assert ck_value(chi, 1) == 1
    assert sympy.simplify(ck_value(chi, 2) - t) == 0
    assert ck_value(char_of_bipartition_gl(Bipartition()), 3) == 0
    with pytest.raises(CentralCharError):
        ck_value(chi, 0)


def test_ck_odd_index_for_osp():
    with pytest.raises(OddIndexForOsp):
        ck_value(char_osp(P(1)), 1)
    with pytest.raises(OddIndexForOsp):
        finite_ck_value((1,), 2, 3, "sp")


def test_evaluate_ck_needs_every_generator():
    chi = char_of_triple_gl(FormalCut.generic(1, 0))
    assert evaluate_ck(chi, 1, {"a1": 4, "t": 9}) == 4
    with pytest.raises(CentralCharError):
        evaluate_ck(chi, 2, {"t": 9})


@pytest.mark.parametrize(
    "hw, n, k, value",
    [
        ((1, 0, 0), 3, 1, 1),
        ((1, 0, 0), 3, 2, 3),
        ((0, 0, 0), 3, 4, 0),
        ((0, 0), 2, 2, 0),
    ],
)
def test_finite_ck_value(hw, n, k, value):
    assert finite_ck_value(hw, n, k) == value


def test_formal_ck_matches_finite_gl():
    n = 5
    small = list(partitions_up_to(2))
    for plus in small:
        for minus in small:
            nu = Bipartition(plus, minus)
            chi = char_of_bipartition_gl(nu)
            for k in range(1, 7):
                assert evaluate_ck(chi, k, {"t": n}) == finite_ck_value(bipartition_weight(nu, n), n, k, "gl")


def test_formal_triple_ck_matches_finite_instantiations():
    rng = random.Random(5)
    for _ in range(10):
        lam = random_partition(rng, 12)
        d = lam.diagonal_length
        k, l = rng.randint(0, d), rng.randint(0, d)
        dec = cut(lam, k, l)
        chi = char_of_triple_gl(FormalCut.generic(k, l, dec.gamma))
        n = max(lam.length, 1) + rng.randint(0, 2)
        values = {"t": n}
        values.update({f"a{i}": x for i, x in enumerate(dec.alpha, 1)})
        values.update({f"b{j}": x for j, x in enumerate(dec.beta, 1)})
        weight = bipartition_weight(Bipartition(lam), n)
        for c in range(1, 7):
            assert evaluate_ck(chi, c, values) == finite_ck_value(weight, n, c, "gl"), (lam, k, l, c)


@pytest.mark.parametrize("flavor, t_of", [("o", lambda n: 2 * n + 1), ("sp", lambda n: 2 * n)])
def test_formal_ck_matches_finite_osp(flavor, t_of):
    n = 4
    for nu in partitions_up_to(4, max_length=n):
        chi = char_osp(nu, flavor)
        for k in (2, 4, 6):
            assert evaluate_ck(chi, k, {"t": t_of(n)}) == finite_ck_value(nu.parts, n, k, flavor), nu


@pytest.mark.parametrize("lam", [P(), P(2, 1), P(5, 3, 3, 1), P(4, 4, 1)])
def test_transpose_identity(lam):
    assert transpose_identity_check(lam)


def test_transpose_identity_random():
    rng = random.Random(3)
    assert all(transpose_identity_check(random_partition(rng, 30)) for _ in range(100))


def test_hc_compatibility_single_row():
    outcome = hc_compatibility(char_of_bipartition_gl(Bipartition(P(1))), char_of_bipartition_gl(Bipartition()))
    assert isinstance(outcome, HCDecomposition)
    assert outcome.b == (E("(t-1)/2"),)
    assert outcome.c == ()


def test_hc_compatibility_of_equal_characters():
    chi = char_of_bipartition_gl(Bipartition(P(2, 1), P(1)))
    outcome = hc_compatibility(chi, chi)
    assert outcome == HCDecomposition("gl")


def test_hc_compatibility_half_coefficient():
    chi = CentralCharacter((q("2") - q("1")).scale(Fraction(1, 2)), "gl")
    outcome = hc_compatibility(chi, CentralCharacter(ExponentialSum(), "gl"))
    assert isinstance(outcome, Incompatible)
    assert outcome.to_dict()["compatible"] is False


def test_hc_compatibility_of_families():
    for fam in (
        HomFamily(k=1, a=(0,)),
        HomFamily(k=1, a=(1,)),
        HomFamily(l=1, b=(1,)),
        HomFamily(k=1, l=1, a=(2,), b=(-1,), gamma=P(1), delta=P(2)),
    ):
        assert isinstance(hc_compatibility(*char_pair_of_hom(fam)), HCDecomposition), fam
        for flavor in ("o", "sp"):
            assert isinstance(hc_compatibility(*char_pair_of_hom_osp(fam, flavor)), HCDecomposition), fam


def test_hc_compatibility_shifted_family_exponents():
    outcome = hc_compatibility(*char_pair_of_hom(HomFamily(k=1, a=(1,))))
    assert outcome.b == ()
    assert outcome.c == (E("a1 + (t-1)/2"),)


def test_hc_compatibility_series_mismatch():
    with pytest.raises(SeriesMismatch):
        hc_compatibility(char_of_bipartition_gl(Bipartition()), char_osp(P()))
