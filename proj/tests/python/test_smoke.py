import pytest

import boolfun as bf


def fn(n, values):
    return bf.BooleanFunction(n, values)


def test_construction_and_values():
    f = fn(2, [0, 1, 2, 7])
    assert f.n == 2
    assert f([1, 2]) == 7
    with pytest.raises(bf.BoolfunError):
        fn(1, [3, 0])


def test_product_and_theta():
    f, g = fn(1, [0, 1]), fn(1, [0, 0])
    assert bf.star_product(f, g, 2, 3).values == [0, 1, 0, 2]
    assert bf.star_product(g, f, 2, 3).values == [0, 0, 1, 3]
    h = fn(2, [0, 1, 0, 2])
    assert bf.theta(bf.theta(h, 1), -1) == h


def test_partitions_and_contraction():
    parts = bf.enumerate_partitions(3)
    assert len(parts) == 5
    f = fn(3, [0, 1, 1, 3, 2, 5, 5, 5])
    p = bf.SetPartition(3, [0, 0, 1])
    assert bf.contract(f, p).values == [0, 3, 2, 5]
    assert bf.restrict_by(f, p).values == [0, 1, 1, 3, 2, 3, 3, 5]


def test_classification():
    split = fn(3, [0, 1, 1, 3, 2, 5, 5, 5])
    assert bf.is_indecomposable(split)
    assert not bf.is_counitary(split)
    assert not bf.in_bool_max(split)
    rank = fn(3, [0, 1, 1, 2, 1, 2, 2, 2])
    assert bf.is_matroid_rank(rank)
    assert bf.is_rigid(rank)
    assert not bf.is_hyper_rigid(rank)
    assert bf.decompose(fn(2, [0, 1, 1, 2])) == [[1], [2]]


def test_instances_and_invariant():
    triangle = bf.Hypergraph(3, [[1, 2], [1, 3], [2, 3]])
    g = bf.gamma(triangle)
    assert g.values == [0, 0, 0, 1, 0, 1, 1, 3]
    assert bf.chromatic_polynomial(triangle) == [0, 2, -3, 1]
    assert bf.phi_count(g, 3) == 6
    rank = bf.graphic_rank(bf.MultiGraph(3, [(1, 2), (1, 3), (2, 3)]))
    assert rank.values == [0, 1, 1, 2, 1, 2, 2, 2]
    assert bf.basis_of(rank, [1, 2, 3]) == [1, 2]
    lin = bf.linear_rank(2, [[("1", "1"), ("0", "1")],
                            [("0", "1"), ("1", "1")],
                            [("1", "1"), ("1", "1")]])
    assert lin == rank


def test_antipode_and_compat():
    f = fn(1, [0, 6])
    assert bf.antipode(f) == [(-1, f)]
    report = bf.phi_compat_report(fn(3, [0, 1, 1, 3, 2, 5, 5, 5]))
    assert not report["counitary"]
    assert not report["agree_W_S"]
    assert bf.mu(f) == -1
