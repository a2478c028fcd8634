import numpy as np
import pytest
import scipy.sparse as sp

from muxdeg import (
    DimensionMismatch,
    MultiplexNetwork,
    NotFound,
    assemble_supra,
    coo_dump,
    coupling_block,
    degree_vector,
    layer_adjacency,
    multidegree,
    overlay_network,
    project_single_layer,
)

from conftest import random_instance
from oracles import dense_layer, neighbour_counts


@pytest.fixture
def triangle():
    n = MultiplexNetwork()
    n.add_layer("T")
    for u, v in [(1, 2), (2, 3), (1, 3)]:
        n.add_edge("T", u, v, 1)
    return n


def test_layer_adjacency_triangle(triangle):
    adj = layer_adjacency(triangle, "T")
    np.testing.assert_array_equal(adj.matrix.toarray(), np.ones((3, 3)) - np.eye(3))
    assert adj.actors == (1, 2, 3)


def test_layer_adjacency_empty_layer():
    n = MultiplexNetwork()
    n.add_layer("A")
    n.add_layer("B")
    n.add_edge("A", 1, 2, 4)
    adj = layer_adjacency(n, "B")
    assert adj.matrix.shape == (2, 2)
    assert adj.matrix.nnz == 0
    with pytest.raises(NotFound):
        layer_adjacency(n, "C")


def test_layer_adjacency_weights_and_binary():
    n = MultiplexNetwork()
    n.add_layer("A")
    n.add_edge("A", 10, 3, 4)
    m = layer_adjacency(n, "A").matrix.toarray()
    np.testing.assert_array_equal(m, [[0, 4], [4, 0]])
    mb = layer_adjacency(n, "A", binary=True).matrix.toarray()
    np.testing.assert_array_equal(mb, [[0, 1], [1, 0]])


def test_montagna_layer_adjacency(mnet):
    adj = layer_adjacency(mnet, "Meetings")
    assert adj.matrix.shape == (154, 154)
    assert adj.matrix.nnz == 2 * 256
    assert (adj.matrix != adj.matrix.T).nnz == 0
    assert adj.matrix.diagonal().sum() == 0


def test_degree_vector_modes():
    m = sp.csr_matrix(np.array([[0, 2, 3], [2, 0, 0], [3, 0, 0]]))
    assert list(degree_vector(m, "binary").values) == [2, 1, 1]
    assert list(degree_vector(m, "weighted").values) == [5, 2, 3]
    assert list(degree_vector(np.zeros((4, 4), dtype=int)).values) == [0, 0, 0, 0]


def test_degree_vector_ignores_explicit_zeros():
    m = sp.csr_matrix((np.array([0, 1]), (np.array([0, 1]), np.array([1, 0]))), shape=(2, 2))
    assert list(degree_vector(m, "binary").values) == [1, 0]


def test_degree_vector_errors():
    with pytest.raises(DimensionMismatch):
        degree_vector(np.zeros((2, 3)))
    with pytest.raises(DimensionMismatch):
        degree_vector(np.zeros((2, 2)), actors=[1, 2, 3])
    with pytest.raises(ValueError):
        degree_vector(np.zeros((2, 2)), mode="fuzzy")


def test_degree_vector_projection(mnet):
    dv = degree_vector(layer_adjacency(mnet, "Meetings"), "binary")
    assert dv[18] == 24
    assert dv.as_dict()[89] == 12


@pytest.mark.parametrize("seed", range(40))
def test_degree_vector_matches_neighbour_scan(seed):
    rng = np.random.default_rng(1000 + seed)
    A = np.triu(rng.integers(0, 4, size=(8, 8)) * (rng.random((8, 8)) < 0.5), 1)
    A = A + A.T
    np.testing.assert_array_equal(degree_vector(sp.csr_matrix(A), "binary").values, neighbour_counts(A))
    np.testing.assert_array_equal(degree_vector(A, "weighted").values, A.sum(axis=0))


def test_coupling_blocks(mnet):
    same = coupling_block(mnet, "Meetings", "Meetings").matrix
    assert (same != layer_adjacency(mnet, "Meetings").matrix).nnz == 0
    cross = coupling_block(mnet, "Meetings", "Phone Calls").matrix
    assert cross.nnz == 154
    assert (cross != sp.identity(154, dtype=np.int64)).nnz == 0


def test_single_layer_supra_is_adjacency(triangle):
    supra = assemble_supra(triangle)
    assert supra.dimension == 3
    assert (supra.matrix != layer_adjacency(triangle, "T").matrix).nnz == 0
    assert (project_single_layer(supra) != supra.matrix).nnz == 0
    np.testing.assert_array_equal(multidegree(triangle).values, [2, 2, 2])


def test_supra_without_edges_is_pure_coupling():
    n = MultiplexNetwork()
    n.add_layer("A")
    n.add_layer("B")
    n.add_actor(1)
    n.add_actor(2)
    m = assemble_supra(n).matrix.toarray()
    expected = np.array([
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
    ])
    np.testing.assert_array_equal(m, expected)


def test_assemble_supra_requires_layers():
    with pytest.raises(ValueError):
        assemble_supra(MultiplexNetwork())


def test_montagna_supra(mnet):
    supra = assemble_supra(mnet)
    assert supra.dimension == 308
    assert supra.matrix.nnz == 2 * 380 + 2 * 154
    assert (supra.matrix != supra.matrix.T).nnz == 0
    for h in range(2):
        assert supra.block(h, h).diagonal().sum() == 0
        for k in range(2):
            assert (supra.block(h, k) != supra.block(k, h).T).nnz == 0


def test_montagna_projection(mnet):
    P = project_single_layer(assemble_supra(mnet, binary=True))
    assert set(P.diagonal()) == {2}
    assert degree_vector(P, "weighted", mnet.actors)[18] == 51


def test_montagna_overlay(mnet):
    O = overlay_network(mnet, "binary")
    assert O.diagonal().sum() == 0
    assert degree_vector(O, "weighted", mnet.actors)[18] == 49
    # weighted overlay equals the sum of per-layer strengths
    ow = degree_vector(overlay_network(mnet, "weighted"), "weighted", mnet.actors)
    for a in (18, 47, 89):
        assert ow[a] == sum(mnet.layer_strength(a, l) for l in mnet.layers)


def test_overlay_single_layer_and_disjoint_support():
    n = MultiplexNetwork()
    n.add_layer("A")
    n.add_edge("A", 1, 2, 3)
    n.add_actor(3)
    assert (overlay_network(n) != layer_adjacency(n, "A").matrix).nnz == 0
    n.add_layer("B")
    n.add_edge("B", 2, 3, 1)
    support = {tuple(x) for x in np.argwhere(overlay_network(n).toarray() != 0)}
    assert support == {(0, 1), (1, 0), (1, 2), (2, 1)}


def test_multidegree_montagna(mnet):
    md = multidegree(mnet)
    assert md[18] == 51
    assert md[89] == 14


@pytest.mark.parametrize("seed", range(30))
def test_layer_adjacency_matches_dense_oracle(seed):
    net, actors, layers = random_instance(seed)
    for idx, edges in enumerate(layers):
        np.testing.assert_array_equal(layer_adjacency(net, idx).matrix.toarray(), dense_layer(actors, edges))


def test_coo_dump():
    m = sp.csr_matrix(np.array([[0, 2], [2, 0]]))
    assert coo_dump(m) == "0 1 2\n1 0 2\n"
    assert coo_dump(sp.csr_matrix((3, 3), dtype=int)) == ""
