import pytest

from hcstable.oracle import LieType, finite_hom_oracle, tensor_decompose
from hcstable.partitions import Bipartition, Partition, partitions_up_to
from hcstable.stable import (
    HomFamily,
    InvalidFamily,
    InvalidInstance,
    finite_hom_multiplicity_gl,
    instantiate_family,
    king_multiplicity,
    king_stable_range,
    mixed_stable_multiplicity,
    stable_hom_multiplicity_gl,
    stable_hom_multiplicity_osp,
    stable_instance,
    verify_stability,
)


def P(*parts: int) -> Partition:
    return Partition(parts)


def B(plus=(), minus=()) -> Bipartition:
    return Bipartition(Partition(tuple(plus)), Partition(tuple(minus)))


END_FAMILY = HomFamily(k=1, a=(0,))
SHIFT_FAMILY = HomFamily(k=1, a=(1,))
EMPTY_FAMILY = HomFamily()


@pytest.mark.parametrize(
    "lam, mu, nu, n, value",
    [
        (P(1), P(1), B(), 2, 1),
        (P(1), P(1), B((1,), (1,)), 3, 1),
        (P(1), P(1), B((2,)), 3, 0),
    ],
)
def test_finite_hom_multiplicity(lam, mu, nu, n, value):
    assert finite_hom_multiplicity_gl(lam, mu, nu, n) == value


def test_finite_formula_agrees_with_oracle():
    n = 5
    small = list(partitions_up_to(2))
    for lam in small:
        for mu in small:
            for plus in small:
                for minus in small:
                    nu = Bipartition(plus, minus)
                    expected = finite_hom_oracle(lam, mu, nu, n)
                    assert finite_hom_multiplicity_gl(lam, mu, nu, n) == expected, (lam, mu, nu)


@pytest.mark.parametrize(
    "fam, nu, value",
    [
        (END_FAMILY, B((1,), (1,)), 1),
        (END_FAMILY, B((1, 1), (1, 1)), 0),
        (SHIFT_FAMILY, B((), (1,)), 1),
        (EMPTY_FAMILY, B(), 1),
    ],
)
def test_stable_hom_gl(fam, nu, value):
    assert stable_hom_multiplicity_gl(fam, nu) == value


def test_stable_hom_gl_degree_mismatch_is_zero():
    assert stable_hom_multiplicity_gl(SHIFT_FAMILY, B((1,), (1,))) == 0


@pytest.mark.parametrize(
    "fam, nu, value",
    [
        (END_FAMILY, P(), 1),
        (END_FAMILY, P(1, 1), 1),
        (EMPTY_FAMILY, P(1), 0),
    ],
)
def test_stable_hom_osp(fam, nu, value):
    assert stable_hom_multiplicity_osp(fam, nu) == value


@pytest.mark.parametrize(
    "lam, mu, nu, value",
    [
        (P(1), P(1), P(), 1),
        (P(1), P(1), P(1, 1), 1),
        (P(1), P(), P(1), 1),
        (P(1), P(1), P(3), 0),
    ],
)
def test_king_multiplicity(lam, mu, nu, value):
    assert king_multiplicity(lam, mu, nu) == value


def test_king_stable_range():
    assert king_stable_range(P(2, 1), P(1)) == 4


def test_instantiate_family():
    inst = instantiate_family(END_FAMILY, (6,), (), 6)
    assert inst.lambda_n == P(6)
    assert inst.mu_n == P(6)

    fam = HomFamily(k=1, l=2, a=(1,), b=(0, 0), gamma=P(2), delta=P(1))
    inst = instantiate_family(fam, (9,), (7, 4), 12)
    assert inst.lambda_n == P(11, 4, 2, 2, 2, 1, 1)
    assert inst.mu_n == P(12, 3, 2, 2, 1, 1, 1)


def test_instantiate_family_negative_row():
    with pytest.raises(InvalidInstance):
        instantiate_family(HomFamily(k=1, a=(-2,)), (1,), (), 5)


def test_instantiate_family_too_many_rows():
    with pytest.raises(InvalidInstance):
        instantiate_family(HomFamily(l=1, b=(0,)), (), (4,), 3)


def test_family_validation():
    with pytest.raises(InvalidFamily):
        HomFamily(k=2, a=(0,))
    with pytest.raises(InvalidFamily):
        HomFamily(k=-1)


def test_stable_instance_spaces_rows():
    inst = stable_instance(END_FAMILY, 5)
    assert inst.lambda_n == P(5)
    with pytest.raises(InvalidInstance):
        stable_instance(HomFamily(l=2, b=(0, 0)), 1)


@pytest.mark.parametrize(
    "fam, nu, group, ranks",
    [
        (END_FAMILY, B((1,), (1,)), "gl", [4, 5, 6]),
        (SHIFT_FAMILY, B((), (1,)), "gl", [4, 5, 6]),
        (END_FAMILY, P(1, 1), "o", [2, 3, 4]),
    ],
)
def test_verify_stability(fam, nu, group, ranks):
    report = verify_stability(fam, nu, group, ranks)
    assert [row.n for row in report.rows] == ranks
    assert report.values == [1, 1, 1]
    assert report.stabilized
    assert report.matches is True
    assert report.stable_value == 1


def test_verify_stability_with_worker_pool():
    serial = verify_stability(END_FAMILY, B((1,), (1,)), "gl", [5, 4])
    pooled = verify_stability(END_FAMILY, B((1,), (1,)), "gl", [4, 5], workers=2)
    assert serial.rows == pooled.rows


def test_verify_stability_marks_missing_constituents():
    report = verify_stability(END_FAMILY, B((1, 1), (1, 1)), "gl", [3, 4])
    assert report.rows[0].exists is False
    assert report.rows[0].multiplicity == 0


def test_verify_stability_unknown_group():
    with pytest.raises(InvalidFamily):
        verify_stability(END_FAMILY, B(), "e8", [4])


@pytest.mark.parametrize(
    "plus, minus, nu",
    [
        (END_FAMILY, EMPTY_FAMILY, B((1,), (1,))),
        (EMPTY_FAMILY, EMPTY_FAMILY, B()),
    ],
)
def test_mixed_stable_multiplicity(plus, minus, nu):
    report = mixed_stable_multiplicity(plus, minus, nu, [4, 5, 6])
    assert report.stabilized
    assert report.stable_value == 1
    assert report.matches is True


SMALL_BIPARTITIONS = [Bipartition(plus, minus) for plus in partitions_up_to(3) for minus in partitions_up_to(3)]


@pytest.mark.parametrize("fam", [END_FAMILY, SHIFT_FAMILY], ids=["end", "shift"])
@pytest.mark.parametrize("nu", SMALL_BIPARTITIONS, ids=str)
def test_gl_closed_form_matches_oracle_window(fam, nu):
    report = verify_stability(fam, nu, "gl", [4, 5, 6])
    assert report.matches is True, (report.values, report.stable_value)


def _pad_to(p: Partition, n: int):
    return p.parts + (0,) * (n - p.length)


@pytest.mark.parametrize("series", ["so", "sp"])
def test_king_matches_rank_two_oracle(series):
    group = LieType(series, 2)
    small = list(partitions_up_to(2))
    targets = list(partitions_up_to(4, max_length=2))
    for lam in small:
        for mu in small:
            if lam.length + mu.length > group.rank:
                continue
            decomposition = tensor_decompose(group, _pad_to(lam, 2), _pad_to(mu, 2))
            for nu in targets:
                expected = decomposition.get(_pad_to(nu, 2), 0)
                assert king_multiplicity(lam, mu, nu) == expected, (series, lam, mu, nu)


@pytest.mark.parametrize("group", ["o", "sp"])
@pytest.mark.parametrize("nu", [P(), P(1, 1), P(2)], ids=lambda p: str(p) or "empty")
def test_osp_closed_form_matches_oracle_window(group, nu):
    report = verify_stability(END_FAMILY, nu, group, [2, 3, 4])
    assert report.values == [1, 1, 1]
    assert report.matches is True


def test_mixed_rows_carry_both_halves():
    report = mixed_stable_multiplicity(END_FAMILY, END_FAMILY, B(), [4, 5])
    for row in report.rows:
        assert isinstance(row.lambda_n, Bipartition)
        assert row.lambda_n.plus.length == 1
        assert row.lambda_n.minus.length == 1
        assert row.lambda_n == row.mu_n
    assert report.matches is True
