import random

import pytest

from hcstable.partitions import (
    Bipartition,
    CutDecomposition,
    CutTooDeep,
    InvalidPartition,
    InvalidTriple,
    NotContained,
    Partition,
    RankTooSmall,
    SkewShape,
    add_cell,
    addable_cells,
    assemble,
    bipartition_weight,
    conjugate,
    cut,
    gl_weight_to_bipartition,
    intersection,
    partitions_of,
    random_partition,
    remove_cell,
    removable_cells,
    subpartitions,
)


def P(*parts: int) -> Partition:
    return Partition(parts)


@pytest.mark.parametrize(
    "lam, expected",
    [
        (P(), P()),
        (P(2, 1), P(2, 1)),
        (P(5, 4, 2, 1), P(4, 3, 2, 2, 1)),
    ],
)
def test_conjugate(lam, expected):
    assert conjugate(lam) == expected
    assert conjugate(expected) == lam


def test_trailing_zeros_are_dropped():
    assert P(3, 1, 0, 0) == P(3, 1)
    assert len(P(0)) == 0


@pytest.mark.parametrize("parts", [(1, 2), (2, -1)])
def test_invalid_partition(parts):
    with pytest.raises(InvalidPartition):
        Partition(parts)


@pytest.mark.parametrize(
    "lam, k, l, alpha, beta, gamma",
    [
        (P(5, 4, 2, 1), 1, 2, (3,), (3, 2), P(2)),
        (P(), 0, 0, (), (), P()),
        (P(3, 3, 3), 1, 1, (2,), (2,), P(2, 2)),
    ],
)
def test_cut(lam, k, l, alpha, beta, gamma):
    dec = cut(lam, k, l)
    assert dec.alpha == alpha
    assert dec.beta == beta
    assert dec.gamma == gamma
    assert assemble(dec) == lam


def test_cut_too_deep():
    with pytest.raises(CutTooDeep):
        cut(P(2, 1), 2, 0)


@pytest.mark.parametrize(
    "dec, expected",
    [
        (CutDecomposition((3,), (3, 2), P(2)), P(5, 4, 2, 1)),
        (CutDecomposition((), (), P(2, 1)), P(2, 1)),
        (CutDecomposition((0,), (), P()), P()),
    ],
)
def test_assemble(dec, expected):
    assert assemble(dec) == expected


def test_assemble_rejects_overhanging_gamma():
    with pytest.raises(InvalidTriple):
        assemble(CutDecomposition((1,), (), P(2)))


def test_cut_assemble_roundtrip_on_random_partitions():
    rng = random.Random(7)
    for _ in range(200):
        lam = random_partition(rng, 25)
        d = lam.diagonal_length
        k, l = rng.randint(0, d), rng.randint(0, d)
        assert assemble(cut(lam, k, l)) == lam


def test_addable_and_removable_cells():
    assert addable_cells(P()) == [(1, 0)]
    assert sorted(c for _, c in addable_cells(P(2, 1))) == [-2, 0, 2]
    assert sorted(c for _, c in removable_cells(P(2, 1))) == [-1, 1]


def test_add_and_remove_cell_by_content():
    assert add_cell(P(), 0) == P(1)
    assert add_cell(P(1), -1) == P(1, 1)
    assert add_cell(P(1), 0) is None
    assert remove_cell(P(2, 1), 1) == P(1, 1)
    assert remove_cell(P(2, 1), 0) is None


@pytest.mark.parametrize(
    "nu, n, weight",
    [
        (Bipartition(P(1), P(1)), 3, (1, 0, -1)),
        (Bipartition(), 2, (0, 0)),
        (Bipartition(P(2, 1), P(1)), 4, (2, 1, 0, -1)),
    ],
)
def test_bipartition_weight(nu, n, weight):
    assert bipartition_weight(nu, n) == weight
    assert gl_weight_to_bipartition(weight) == nu


def test_bipartition_weight_rank_too_small():
    with pytest.raises(RankTooSmall):
        bipartition_weight(Bipartition(P(1, 1), P(1)), 2)


def test_bipartition_dual_and_str():
    nu = Bipartition(P(2, 1), P(1))
    assert nu.dual() == Bipartition(P(1), P(2, 1))
    assert str(nu) == "2,1|1"


def test_skew_shape_containment():
    assert SkewShape(P(2, 1), P(1)).size == 2
    with pytest.raises(NotContained):
        SkewShape(P(2), P(1, 1))


def test_partition_enumeration():
    assert [p.parts for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert list(partitions_of(3, max_length=2)) == [P(3), P(2, 1)]
    assert sorted(subpartitions(P(2, 1))) == sorted([P(), P(1), P(2), P(1, 1), P(2, 1)])
    assert intersection(P(3, 1), P(2, 2)) == P(2, 1)
