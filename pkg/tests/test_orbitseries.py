"""Orbit trees, principal series, degree extraction, and subquandle scans."""

import pytest

import _oracles
from quandles import core, corpus, grouptables, orbitseries
from quandles.errors import CapExceeded


def test_tree_of_dihedral_four():
    root = orbitseries.orbit_tree(core.dihedral(4))
    nodes = list(root.nodes())
    assert len(nodes) == 7
    assert root.subset == (0, 1, 2, 3)
    assert [child.subset for child in root.children] == [(0, 2), (1, 3)]
    leaves = list(root.leaves())
    assert all(leaf.size == 1 for leaf in leaves)
    assert max(node.depth for node in nodes) == 2


def test_tree_of_trivial_is_one_level():
    root = orbitseries.orbit_tree(core.trivial(4))
    assert [child.subset for child in root.children] == [(0,), (1,), (2,), (3,)]
    assert all(child.is_leaf for child in root.children)


def test_tree_of_connected_quandle_is_a_point():
    root = orbitseries.orbit_tree(core.affine(5, 2))
    assert root.is_leaf
    assert list(root.nodes()) == [root]


def test_leaf_iff_one_orbit():
    for q in (core.dihedral(8), core.conj(grouptables.symmetric_group(3)),
              corpus.builtin_quandle("paper-example-16")):
        for node in orbitseries.orbit_tree(q).nodes():
            induced = core.induced_subquandle(q, node.subset)
            one_orbit = len(_oracles._orbit_partition(
                induced.table, frozenset(range(induced.order)))) == 1
            assert node.is_leaf == one_orbit


def test_degrees_of_dihedral_powers_of_two():
    for k in range(5):
        sd = orbitseries.degrees(core.dihedral(2 ** k))
        assert sd.tos_degree == k


def test_degrees_of_trivial():
    for n in (2, 3, 6):
        sd = orbitseries.degrees(core.trivial(n))
        assert (sd.os_degree, sd.tos_degree) == (1, 1)
    sd = orbitseries.degrees(core.trivial(1))
    assert (sd.os_degree, sd.tos_degree) == (0, 0)


def test_degrees_of_conj_s3():
    sd = orbitseries.degrees(core.conj(grouptables.symmetric_group(3)))
    assert sd.os_degree == 2
    assert sd.tos_degree is None


def test_degrees_match_recursive_oracle():
    quandles = [core.dihedral(n) for n in range(1, 9)]
    quandles += [core.trivial(4), core.affine(5, 2),
                 core.conj(grouptables.quaternion_8()),
                 corpus.builtin_quandle("paper-example-16")]
    for q in quandles:
        sd = orbitseries.degrees(q)
        assert (sd.os_degree, sd.tos_degree) == \
            _oracles.series_degrees_recursive(q.table)


def test_degrees_are_isomorphism_invariant():
    q = core.dihedral(6)
    relabel = (3, 5, 1, 0, 4, 2)
    inverse = [0] * 6
    for i, v in enumerate(relabel):
        inverse[v] = i
    table = tuple(
        tuple(relabel[q.table[inverse[a]][inverse[b]]] for b in range(6))
        for a in range(6)
    )
    other = core.validate(table)
    assert orbitseries.degrees(q) == orbitseries.degrees(other)


def test_principal_series_in_trivial():
    assert orbitseries.principal_series(core.trivial(3), 1) == [(0, 1, 2), (1,)]


def test_principal_series_in_dihedral_four():
    assert orbitseries.principal_series(core.dihedral(4), 0) == \
        [(0, 1, 2, 3), (0, 2), (0,)]


def test_principal_series_rejects_foreign_points():
    with pytest.raises(ValueError):
        orbitseries.principal_series(core.trivial(3), 3)


def test_branches_realize_principal_series():
    for q in (core.dihedral(8), core.trivial(3),
              core.conj(grouptables.symmetric_group(3))):
        root = orbitseries.orbit_tree(q)
        for branch in root.branches():
            subsets = [node.subset for node in branch]
            tail = branch[-1].subset
            intersection = set(branch[0].subset)
            for node in branch:
                intersection &= set(node.subset)
            assert tuple(sorted(intersection)) == tail
            for x in tail:
                assert orbitseries.principal_series(q, x) == subsets


def test_all_subquandles_of_the_point():
    assert orbitseries.all_subquandles(core.trivial(1)) == [(0,)]


def test_all_subquandles_of_trivial_three():
    assert len(orbitseries.all_subquandles(core.trivial(3))) == 7


def test_all_subquandles_of_dihedral_three():
    subs = orbitseries.all_subquandles(core.dihedral(3))
    assert subs == [(0,), (1,), (2,), (0, 1, 2)]


def test_all_subquandles_cap():
    with pytest.raises(CapExceeded):
        orbitseries.all_subquandles(core.dihedral(6), cap=32)


def test_generated_subquandles_are_a_subset_of_all():
    q = core.dihedral(6)
    exhaustive = set(orbitseries.all_subquandles(q))
    generated = set(orbitseries.generated_subquandles(q))
    assert generated <= exhaustive
    singletons = {(a,) for a in range(6)}
    assert singletons <= generated


def test_is_ncs_values():
    assert orbitseries.is_ncs(core.trivial(5))
    assert not orbitseries.is_ncs(core.dihedral(3))
    for k in range(5):
        assert orbitseries.is_ncs(core.dihedral(2 ** k))


def test_is_ncs_spots_buried_connected_subquandles():
    # the union hides a connected dihedral(3) inside a disconnected whole
    q = core.disjoint_union(core.dihedral(3), core.trivial(2))
    assert not orbitseries.is_ncs(q)
