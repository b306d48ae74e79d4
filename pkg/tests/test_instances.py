import pytest

from mobiuslab import lattices
from mobiuslab.guards import SizeGuardError
from mobiuslab.instances import (Graph, boolean_lattice, chain,
                                 complete_graph, contraction_lattice,
                                 divisor_lattice, gaussian_binomial,
                                 partition_lattice, path_graph, random_poset,
                                 random_tree, subspace_lattice)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    g = Graph(3, [(1, 0), (0, 1), (1, 2)])
    assert g.edges == [(0, 1), (1, 2)]


def test_boolean_lattice_structure():
    L = boolean_lattice(3)
    assert L.n == 8
    assert L.poset.labels[L.zero] == ""
    assert L.poset.labels[L.one] == "123"
    assert boolean_lattice(1).poset.is_isomorphic_brute(chain(1))


def test_boolean_is_power_of_chains():
    for n in range(1, 5):
        prod = chain(1)
        for _ in range(n - 1):
            prod = prod.product(chain(1))
        assert boolean_lattice(n).poset.is_isomorphic_brute(prod)


def test_boolean_guard():
    with pytest.raises(SizeGuardError):
        boolean_lattice(17)


def test_divisor_lattice():
    assert divisor_lattice(30).poset.is_isomorphic_brute(
        boolean_lattice(3).poset)
    assert divisor_lattice(8).poset.is_isomorphic_brute(chain(3))
    assert divisor_lattice(12).n == 6
    with pytest.raises(SizeGuardError):
        divisor_lattice(10 ** 6 + 1)


def test_divisor_product_decomposition():
    for p_r, m in ((4, 15), (9, 10), (8, 3)):
        lhs = divisor_lattice(p_r * m).poset
        rhs = divisor_lattice(m).poset.product(
            divisor_lattice(p_r).poset)
        assert lhs.is_isomorphic_brute(rhs)


def test_subspace_lattice_counts():
    L = subspace_lattice(2, 2)
    assert L.n == 5
    assert lattices.whitney_numbers(L) == [1, 3, 1]
    assert lattices.whitney_numbers(subspace_lattice(3, 2)) == [1, 4, 1]
    assert subspace_lattice(2, 3).poset.mobius_idx(0, 15) == -8
    assert gaussian_binomial(4, 2, 2) == 35


def test_subspace_lattice_gf4():
    L = subspace_lattice(4, 2)
    assert lattices.whitney_numbers(L) == [1, 5, 1]
    assert lattices.is_geometric(L)


def test_subspace_lattice_unsupported_field():
    with pytest.raises(ValueError):
        subspace_lattice(6, 2)


def test_partition_lattice():
    assert partition_lattice(4).n == 15
    L = partition_lattice(5)
    assert L.poset.mobius_idx(L.zero, L.one) == 24
    assert lattices.whitney_numbers(partition_lattice(3)) == [1, 3, 1]
    with pytest.raises(SizeGuardError):
        partition_lattice(10)


def test_contraction_lattice():
    K3 = complete_graph(3)
    assert contraction_lattice(K3).poset.is_isomorphic_brute(
        partition_lattice(3).poset)
    K4 = complete_graph(4)
    assert contraction_lattice(K4).poset.is_isomorphic_brute(
        partition_lattice(4).poset)
    tree = path_graph(4)
    assert contraction_lattice(tree).poset.is_isomorphic_brute(
        boolean_lattice(3).poset)


def test_contraction_lattice_rank_is_vertices_minus_components():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    L = contraction_lattice(g)
    assert lattices.is_geometric(L)
    assert L.height == g.n - 2


def test_generated_instances_are_geometric():
    for L in (boolean_lattice(4), subspace_lattice(2, 3),
              partition_lattice(4),
              contraction_lattice(complete_graph(4))):
        assert lattices.is_geometric(L)


def test_random_poset_determinism():
    a = random_poset(8, 0.4, 123)
    b = random_poset(8, 0.4, 123)
    assert a.labels == b.labels and a.covers == b.covers
    c = random_poset(8, 0.4, 124)
    assert a.covers != c.covers


def test_random_tree_determinism_and_shape():
    a = random_tree(9, 7)
    b = random_tree(9, 7)
    assert a.edges == b.edges
    assert len(a.edges) == 8 and a.is_connected()
