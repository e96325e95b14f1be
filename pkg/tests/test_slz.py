import itertools
import random

import pytest

from hcstable.central import AffineExponent
from hcstable.partitions import Partition
from hcstable.slz import (
    Block,
    FamilySpec,
    InactiveCoset,
    InvalidFamilySpec,
    InvalidIndex,
    ModuleSpec,
    SlzError,
    SparseVector,
    TensorProduct,
    TupleIndex,
    active_cosets,
    apply_e,
    apply_f,
    base_index,
    bracket_check,
    coset_table,
    cosets_commute,
    cz_basis,
    fock_basis,
    grothendieck_e,
    grothendieck_f,
    h_eigenvalue,
    intertwines,
    iso_map,
    iso_vector,
    parse_module_spec,
    random_tuple,
    resolve_coset,
    sequence_to_wedge,
    tensor_spec,
    wedge_basis,
    wedge_to_sequence,
)

FOCK = ModuleSpec.fock()
EMPTY = Partition()


def P(*parts: int) -> Partition:
    return Partition(parts)


def vec(idx) -> SparseVector:
    return SparseVector.basis(idx)


def X(text: str) -> AffineExponent:
    return AffineExponent.parse(text)


RICH_FAMILY = FamilySpec(
    a_blocks=(Block("A1", (1, 0)), Block("A2", (0,))),
    b_blocks=(Block("B1", (0,)),),
    gamma=P(1),
    abar_blocks=(Block("C1", (0,)),),
    bbar_blocks=(Block("D1", (1, 0)),),
    gammabar=P(1),
)


def test_fock_operators():
    assert apply_f(FOCK, 0, vec(EMPTY)) == vec(P(1))
    assert not apply_e(FOCK, 0, vec(EMPTY))
    assert apply_f(FOCK, -1, vec(P(1))) == vec(P(1, 1))
    assert apply_e(FOCK, 1, vec(P(2))) == vec(P(1))


def test_cz_and_wedge_operators():
    cz = ModuleSpec.cz()
    assert apply_f(cz, 3, vec(3)) == vec(4)
    assert not apply_f(cz, 3, vec(5))
    assert apply_e(cz, 3, vec(4)) == vec(3)
    wedge = ModuleSpec.wedge(2)
    assert apply_f(wedge, 0, vec((2, 0))) == vec((2, 1))
    assert not apply_f(wedge, 0, vec((1, 0)))


def test_twists():
    dual = FOCK.twisted("dual")
    assert apply_f(dual, 0, vec(P(1))) == vec(EMPTY)
    tau = FOCK.twisted("tau")
    assert apply_f(tau, 1, vec(P(1))) == vec(P(1, 1))
    assert FOCK.twisted("dual", "dual").normalized() == FOCK
    assert str(FOCK.twisted("tau", "dual")) == "F^tau^dual"


def test_h_eigenvalues():
    assert h_eigenvalue(FOCK, 0, EMPTY) == 1
    assert h_eigenvalue(FOCK.twisted("dual"), 0, EMPTY) == -1
    assert h_eigenvalue(FOCK, 0, P(1)) == -1
    assert h_eigenvalue(ModuleSpec.cz(), 2, 3) == -1
    both = TensorProduct((FOCK, FOCK))
    assert h_eigenvalue(both, 0, (EMPTY, EMPTY)) == 2


def test_bracket_relations_on_fock():
    assert bracket_check(FOCK, 0, 0, [EMPTY])
    assert bracket_check(FOCK, 0, 1, fock_basis(6))


@pytest.mark.parametrize("twists", [(), ("dual",), ("tau",), ("tau", "dual")])
@pytest.mark.parametrize(
    "base, basis",
    [
        (ModuleSpec.fock(), fock_basis(6)),
        (ModuleSpec.cz(), cz_basis(6)),
        (ModuleSpec.wedge(3), wedge_basis(3, -4, 4)),
    ],
)
def test_bracket_relations(base, basis, twists):
    spec = base.twisted(*twists)
    for i, j in itertools.product(range(-2, 3), repeat=2):
        assert bracket_check(spec, i, j, basis), (spec, i, j)


def test_bracket_relations_on_tensor_products():
    spec = TensorProduct((FOCK, FOCK.twisted("tau", "dual"), ModuleSpec.wedge(2)))
    sample = list(itertools.product(fock_basis(3), fock_basis(2), wedge_basis(2, -2, 2)))
    for i, j in itertools.product(range(-2, 3), repeat=2):
        assert bracket_check(spec, i, j, sample)


def test_slot_action():
    spec = TensorProduct((FOCK, FOCK))
    both = apply_f(spec, 0, vec((EMPTY, EMPTY)))
    assert both == vec((P(1), EMPTY)) + vec((EMPTY, P(1)))
    assert apply_f(spec, 0, vec((EMPTY, EMPTY)), slot=1) == vec((EMPTY, P(1)))
    with pytest.raises(SlzError):
        apply_f(spec, 0, vec((EMPTY, EMPTY)), slot=2)
    with pytest.raises(SlzError):
        apply_f(FOCK, 0, vec(EMPTY), slot=0)


def test_invalid_indices():
    with pytest.raises(InvalidIndex):
        apply_f(ModuleSpec.wedge(2), 0, vec((0, 1)))
    with pytest.raises(InvalidIndex):
        apply_f(FOCK, 0, vec(3))
    with pytest.raises(InvalidIndex):
        apply_f(TensorProduct((FOCK, FOCK)), 0, vec((EMPTY,)))


def test_parse_module_spec():
    spec = parse_module_spec("fock^tau^dual*wedge3")
    assert spec == TensorProduct((ModuleSpec("fock", 0, ("tau", "dual")), ModuleSpec.wedge(3)))
    assert parse_module_spec("cz") == ModuleSpec.cz()
    with pytest.raises(SlzError):
        parse_module_spec("wedge")
    with pytest.raises(SlzError):
        parse_module_spec("fock^sigma")


def test_sequence_wedge_conversion():
    assert sequence_to_wedge((1, 0)) == (1, -1)
    assert wedge_to_sequence((1, -1)) == (1, 0)
    assert sequence_to_wedge((0, 0, 0)) == (0, -1, -2)


def test_sparse_vector_ordering():
    v = vec(P(2)) + vec(P(1)) + vec(EMPTY).scale(3)
    assert [idx for idx, _ in v.items()] == [EMPTY, P(1), P(2)]
    assert not (v - v)


def test_block_validation():
    with pytest.raises(InvalidFamilySpec):
        Block("t", (0,))
    with pytest.raises(InvalidFamilySpec):
        Block("A1", (0, 1))
    with pytest.raises(InvalidFamilySpec):
        Block("A1", (1,))
    with pytest.raises(InvalidFamilySpec):
        FamilySpec(a_blocks=(Block("A1", (0,)),), b_blocks=(Block("A1", (0,)),))


def test_active_cosets_of_empty_family():
    assert active_cosets(FamilySpec()) == [X("0"), X("-t")]


def test_coset_table_of_rich_family():
    exponents = [entry.exponent for entry in coset_table(RICH_FAMILY)]
    # K = 3, L = 1, K̄ = 1, L̄ = 2
    assert exponents == [
        X("A1 + 1"),
        X("A2 - 1"),
        X("-B1 - 3"),
        X("-C1 - t - 2"),
        X("D1 - t + 1"),
        X("-2"),
        X("-t - 1"),
    ]


def test_grothendieck_moves():
    fam = FamilySpec(a_blocks=(Block("A1", (0,)),))
    grown = grothendieck_f(fam, X("A1"), 0, vec(base_index(fam)))
    assert grown == vec(base_index(fam).replace("alpha", 0, (1,)))
    assert grothendieck_e(fam, X("A1"), 0, grown) == vec(base_index(fam))

    empty = FamilySpec()
    assert grothendieck_f(empty, X("0"), 0, vec(base_index(empty))) == vec(TupleIndex(delta=P(1)))

    barred = FamilySpec(abar_blocks=(Block("C1", (0,)),))
    shrunk = grothendieck_f(barred, X("-C1 - t"), 1, vec(base_index(barred)))
    assert shrunk == vec(TupleIndex(alphabar=((-1,),)))
    assert not grothendieck_f(barred, X("-C1 - t"), 0, vec(base_index(barred)))


def test_inactive_coset():
    with pytest.raises(InactiveCoset):
        resolve_coset(FamilySpec(), X("t/2"))
    with pytest.raises(InactiveCoset):
        grothendieck_f(FamilySpec(), X("A1"), 0, vec(TupleIndex()))


def test_resolve_coset_offsets():
    slot, entry, offset = resolve_coset(RICH_FAMILY, X("A2 + 4"), -2)
    assert slot == 1
    assert entry.label == "A:A2"
    assert offset == 3


def test_iso_map():
    assert iso_map(FamilySpec(), base_index(FamilySpec())) == (EMPTY, EMPTY)
    fam = FamilySpec(a_blocks=(Block("A1", (1, 0)),))
    assert iso_map(fam, base_index(fam)) == ((1, -1), EMPTY, EMPTY)
    with pytest.raises(InvalidIndex):
        iso_map(fam, TupleIndex(alpha=((1,),)))


def test_tensor_spec_factor_order():
    spec = tensor_spec(RICH_FAMILY)
    assert [str(f) for f in spec.factors] == ["L2", "L1", "L1^tau", "L1^tau^dual", "L2^dual", "F", "F^tau^dual"]
    idx = base_index(RICH_FAMILY)
    spec.check_index(iso_map(RICH_FAMILY, idx))
    assert iso_vector(RICH_FAMILY, vec(idx)) == vec(iso_map(RICH_FAMILY, idx))


def test_iso_map_intertwines():
    rng = random.Random(5)
    sample = [base_index(RICH_FAMILY)] + [random_tuple(RICH_FAMILY, rng) for _ in range(25)]
    assert intertwines(RICH_FAMILY, sample, range(-3, 4))


def test_distinct_cosets_commute():
    rng = random.Random(9)
    sample = [random_tuple(RICH_FAMILY, rng) for _ in range(3)]
    assert cosets_commute(RICH_FAMILY, sample, range(-2, 3))
