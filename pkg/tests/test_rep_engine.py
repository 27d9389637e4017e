import itertools

import pytest

from src.errors import RankMismatch
from src.rep_engine import (
    fold_decompose,
    gl_tensor_decompose,
    hom_multiplicity_A,
    invariant_dim_A,
    invariant_dim_BC,
    lr_coefficient,
    pair_invariant_A,
    partition_from_dynkin,
    tensor_decompose,
    weight_multiplicities,
)
from src.rep_engine.invariants import _fold
from src.rep_engine.racah_speiser import _brauer_klimyk
from src.strata import wronski_degree_A, wronski_degree_BC
from src.weights import DominantWeight, Partition, assoc_partition, box_partitions, root_system, weyl_dim


def weights(lie_type, *coords):
    return [DominantWeight(lie_type, c) for c in coords]


def test_weight_multiplicities_of_adjoint_A2():
    mults = weight_multiplicities(root_system("A", 2), (1, 1))
    assert mults[(0, 0)] == 2
    assert sum(mults.values()) == 8
    assert len(mults) == 7


def test_weight_multiplicities_B2():
    b2 = root_system("B", 2)
    vector = weight_multiplicities(b2, (1, 0))
    assert vector[(0, 0)] == 1 and sum(vector.values()) == 5
    adjoint = weight_multiplicities(b2, (0, 2))
    assert adjoint[(0, 0)] == 2 and sum(adjoint.values()) == 10


def test_tensor_decompose_B2():
    b2 = root_system("B", 2)
    assert tensor_decompose(b2, (1, 0), (1, 0)) == {(2, 0): 1, (0, 2): 1, (0, 0): 1}
    assert tensor_decompose(b2, (0, 1), (0, 1)) == {(0, 2): 1, (1, 0): 1, (0, 0): 1}


@pytest.mark.parametrize("r", [2, 3])
def test_spin_square_in_odd_orthogonal_algebras(r):
    rs = root_system("B", r)
    spin = (0,) * (r - 1) + (1,)
    expected = {(0,) * (r - 1) + (2,): 1, (0,) * r: 1}
    for i in range(r - 1):
        expected[tuple(1 if j == i else 0 for j in range(r))] = 1
    assert tensor_decompose(rs, spin, spin) == expected


def test_tensor_decompose_conserves_dimension(rng):
    for _ in range(100):
        lie_type = rng.choice("ABC")
        rank = rng.randint(1, 3)
        rs = root_system(lie_type, rank)
        lam = tuple(rng.randint(0, 2) for _ in range(rank))
        mu = tuple(rng.randint(0, 2) for _ in range(rank))
        result = tensor_decompose(rs, lam, mu)
        assert sum(m * weyl_dim(rs, nu) for nu, m in result.items()) == weyl_dim(rs, lam) * weyl_dim(rs, mu)


def test_lr_coefficient_examples():
    assert lr_coefficient(Partition((2, 1, 0)), Partition((2, 1, 0)), Partition((3, 2, 1)), 3) == 2
    assert lr_coefficient(Partition((1, 0)), Partition((1, 0)), Partition((1, 1)), 2) == 1
    assert lr_coefficient(Partition((2, 0)), Partition((1, 0)), Partition((1, 1)), 2) == 0


def test_racah_speiser_agrees_with_littlewood_richardson(rng):
    for _ in range(100):
        N = rng.randint(2, 4)
        lam = Partition.of(sorted((rng.randint(0, 3) for _ in range(N)), reverse=True), N)
        mu = Partition.of(sorted((rng.randint(0, 2) for _ in range(N)), reverse=True), N)
        decomposition = gl_tensor_decompose(lam, mu, N)
        for nu in box_partitions(N, lam[1] + mu[1], size=lam.size + mu.size):
            assert decomposition.get(nu, 0) == lr_coefficient(lam, mu, nu, N)


def test_partition_from_dynkin():
    assert partition_from_dynkin((1, 0), 4, 3) == Partition((2, 1, 1))
    with pytest.raises(ValueError):
        partition_from_dynkin((1, 0), 3, 3)


def test_invariant_dim_A_examples():
    assert invariant_dim_A([Partition((1, 0))] * 4, 2) == 2
    assert invariant_dim_A([Partition((2, 0)), Partition((1, 1))], 2) == 0
    assert invariant_dim_A([Partition((1, 0))] * 3, 2) == 0
    assert invariant_dim_A([Partition((3,))], 1) == 1


def test_pair_invariants_match_the_closed_rule(rng):
    for _ in range(100):
        N = rng.randint(2, 3)
        lam = Partition.of(sorted((rng.randint(0, 2) for _ in range(N)), reverse=True), N)
        mu = Partition.of(sorted((rng.randint(0, 2) for _ in range(N)), reverse=True), N)
        assert invariant_dim_A([lam, mu], N) == pair_invariant_A(lam, mu, N)


def test_hom_multiplicity_A():
    assert hom_multiplicity_A(Partition((2, 0)), [Partition((1, 0))] * 2, 2) == 1
    assert hom_multiplicity_A(Partition((3, 0)), [Partition((1, 0))] * 2, 2) == 0


def test_invariant_dim_BC_examples():
    b2 = root_system("B", 2)
    c2 = root_system("C", 2)
    assert invariant_dim_BC(b2, weights("B", (2, 0), (1, 0), (2, 0))) == 0
    assert invariant_dim_BC(c2, weights("C", (1, 0), (0, 1), (0, 1))) == 0
    assert invariant_dim_BC(b2, weights("B", (0, 1), (0, 1), (0, 1), (0, 1))) == 3
    assert invariant_dim_BC(b2, []) == 1
    with pytest.raises(RankMismatch):
        invariant_dim_BC(b2, weights("C", (1, 0)))


def test_lifted_labels_of_the_dimension_table():
    b2_lifts = [assoc_partition(w, 0, 4) for w in weights("B", (2, 0), (1, 0), (2, 0))]
    assert invariant_dim_A(b2_lifts, 4) == 2
    c2_lifts = [assoc_partition(w, 0, 5) for w in weights("C", (1, 0), (0, 1), (0, 1))]
    assert invariant_dim_A(c2_lifts, 5) == 2


@pytest.mark.parametrize("N, d", [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6)])
def test_wronski_degree_counts_invariants_of_boxes(N, d):
    assert wronski_degree_A(N, d) == invariant_dim_A([Partition.of([1], N)] * (N * (d - N)), N)


@pytest.mark.parametrize("d", [4, 5, 6, 7])
def test_reduced_wronski_degree_counts_spin_invariants(d):
    b2 = root_system("B", 2)
    spin = DominantWeight("B", (0, 1))
    assert wronski_degree_BC(4, d) == invariant_dim_BC(b2, [spin] * (2 * (d - 4)))


def test_spin_parity_kills_invariants(rng):
    for _ in range(100):
        r = rng.randint(1, 3)
        rs = root_system("B", r)
        labels = [
            DominantWeight("B", tuple(rng.randint(0, 1) for _ in range(r))) for _ in range(rng.randint(1, 4))
        ]
        if sum(w.coords[-1] for w in labels) % 2:
            assert invariant_dim_BC(rs, labels) == 0


def test_tensor_product_commutes_in_both_weight_roles(rng):
    for _ in range(100):
        rank = rng.randint(1, 3)
        rs = root_system(rng.choice("ABC"), rank)
        lam = tuple(rng.randint(0, 2) for _ in range(rank))
        mu = tuple(rng.randint(0, 2) for _ in range(rank))
        assert _brauer_klimyk(rs, lam, mu) == _brauer_klimyk(rs, mu, lam)


def test_fold_is_independent_of_the_order_of_factors():
    c2 = root_system("C", 2)
    factors = [(1, 0), (0, 1), (1, 0), (0, 1)]
    expected = dict(_fold(c2, tuple(factors)))
    for order in set(itertools.permutations(factors)):
        assert dict(_fold(c2, order)) == expected
    assert fold_decompose(c2, factors) == expected
    assert sum(m * weyl_dim(c2, w) for w, m in expected.items()) == 4 * 5 * 4 * 5


def test_weight_multiplicities_add_up_to_the_dimension(rng):
    for _ in range(100):
        rank = rng.randint(1, 3)
        rs = root_system(rng.choice("ABC"), rank)
        lam = tuple(rng.randint(0, 2) for _ in range(rank))
        assert sum(weight_multiplicities(rs, lam).values()) == weyl_dim(rs, lam)
