import pytest

from treembed import (
    BudgetError,
    DomainError,
    EmbedCount,
    Family,
    PlaneForest,
    UnsupportedFamilyError,
    canonical_nonplane,
    count_forest_in_family,
    count_forest_in_tree,
    count_in_family,
    count_in_tree,
    enumerate_family,
    format_tree,
    induced_substructure,
    is_subposet,
    parse_forest,
    parse_tree,
)

CHERRY = parse_tree("(()())")
LEAF = parse_tree("()")
CHAIN2 = parse_tree("(())")
CHAIN3 = parse_tree("((()))")


class TestInducedSubstructure:
    def test_full_subset_is_identity(self):
        t = parse_tree("((())(()()))")
        got = induced_substructure(t, range(t.size))
        assert got.components == (t,)

    def test_transitive_closure_through_middle(self):
        got = induced_substructure(CHAIN3, {0, 2})
        assert got.components == (CHAIN2,)

    def test_cherry_from_leaves_and_root(self):
        # host: root with a cherry on the left and a leaf on the right
        t = parse_tree("((()())())")
        got = induced_substructure(t, {0, 2, 3})
        assert got.components == (CHERRY,)

    def test_sibling_order_inherited(self):
        t = parse_tree("((())())")
        # drop the root: forest (chain2 interior node's leaf..), order kept
        got = induced_substructure(t, {1, 2, 3})
        assert [format_tree(c) for c in got.components] == ["(())", "()"]

    def test_invalid_ids_rejected(self):
        with pytest.raises(DomainError):
            induced_substructure(CHERRY, {0, 7})
        with pytest.raises(DomainError):
            induced_substructure(CHERRY, set())


class TestCountInTree:
    def test_cherry_in_five_node_plane_trees(self):
        for t in enumerate_family(Family.PLANE_BINARY, 5):
            assert count_in_tree(CHERRY, t, "plane") == EmbedCount(5, 4)

    def test_cherry_in_five_node_nonplane_tree(self):
        t = enumerate_family(Family.NONPLANE_BINARY, 5)[0]
        assert count_in_tree(CHERRY, t, "nonplane") == EmbedCount(4, 3)

    def test_single_node_counts_nodes_and_root(self):
        for t in enumerate_family(Family.PLANTED_PLANE, 4):
            assert count_in_tree(LEAF, t, "plane") == EmbedCount(4, 1)

    def test_single_node_nonplane_counts_orbits(self):
        t = enumerate_family(Family.NONPLANE_BINARY, 5)[0]
        assert count_in_tree(LEAF, t, "nonplane") == EmbedCount(4, 1)

    def test_pattern_equal_to_host(self):
        t = parse_tree("((())(()()))")
        assert count_in_tree(t, t, "plane") == EmbedCount(1, 1)

    def test_unknown_mode(self):
        with pytest.raises(DomainError):
            count_in_tree(LEAF, CHERRY, "sideways")


class TestCountInFamily:
    def test_paper_point_values(self):
        assert count_in_family(CHERRY, Family.PLANE_BINARY, 5) == EmbedCount(10, 8)
        assert count_in_family(CHERRY, Family.NONPLANE_BINARY, 5) == EmbedCount(4, 3)

    def test_single_node_plane_binary(self):
        # all = n * |B_n|, good = |B_n|
        for n in (1, 3, 5, 7):
            from treembed import family_size
            size = family_size(Family.PLANE_BINARY, n)
            assert count_in_family(LEAF, Family.PLANE_BINARY, n) == \
                EmbedCount(n * size, size)

    def test_good_never_exceeds_all(self):
        pats = [LEAF, CHAIN2, CHERRY, CHAIN3, parse_tree("(()()())")]
        for s in pats:
            for fam, ns in [(Family.PLANE_BINARY, (5, 7)),
                            (Family.NONPLANE_BINARY, (5, 7)),
                            (Family.PLANTED_PLANE, (4, 5))]:
                for n in ns:
                    c = count_in_family(s, fam, n)
                    assert 0 <= c.good <= c.all

    def test_plane_count_dominates_nonplane_on_shared_hosts(self):
        pats = [canonical_nonplane(s) for m in range(1, 5)
                for s in enumerate_family(Family.PLANTED_PLANE, m)]
        for s in set(pats):
            for n in range(1, 10, 2):
                for t in enumerate_family(Family.NONPLANE_BINARY, n):
                    plane = count_in_tree(s, t, "plane").all
                    nonplane = count_in_tree(s, t, "nonplane").all
                    assert plane >= nonplane

    def test_budget_guard(self):
        with pytest.raises(BudgetError):
            count_in_family(CHERRY, Family.PLANE_BINARY, 21, budget=10)

    def test_bad_size(self):
        with pytest.raises(DomainError):
            count_in_family(CHERRY, Family.PLANE_BINARY, 0)


class TestForestCounts:
    def test_antichain_pairs_plane(self):
        f = parse_forest("();()")
        assert count_forest_in_family(f, Family.PLANE_BINARY, 5) == EmbedCount(8, 0)

    def test_antichain_pairs_nonplane_orbits(self):
        f = parse_forest("();()")
        got = count_forest_in_family(f, Family.NONPLANE_BINARY, 5)
        assert got == EmbedCount(3, 0)
        # matches good count of the clipped cherry (the clip identity)
        assert got.all == count_in_family(CHERRY, Family.NONPLANE_BINARY, 5).good

    def test_component_order_does_not_matter(self):
        a = parse_forest("();(()())")
        b = parse_forest("(()());()")
        for n in (5, 7):
            assert count_forest_in_family(a, Family.PLANE_BINARY, n) == \
                count_forest_in_family(b, Family.PLANE_BINARY, n)

    def test_sigma_identity_leaf_and_cherry(self):
        from treembed import forest_orderings
        f = parse_forest("();(()())")
        for n in (5, 7, 9):
            lhs = count_forest_in_family(f, Family.PLANE_BINARY, n).all
            rhs = sum(count_in_family(t, Family.PLANE_BINARY, n).good
                      for t in forest_orderings(f))
            assert lhs == rhs

    def test_planted_plane_unsupported(self):
        with pytest.raises(UnsupportedFamilyError):
            count_forest_in_family(parse_forest("();()"), Family.PLANTED_PLANE, 4)

    def test_single_component_rejected(self):
        with pytest.raises(DomainError):
            count_forest_in_tree(PlaneForest((LEAF,)), CHERRY)


class TestIsSubposet:
    def test_single_node_in_anything(self):
        assert is_subposet(LEAF, CHERRY)
        assert is_subposet(LEAF, CHAIN3, "nonplane")

    def test_cherry_not_in_chain(self):
        assert not is_subposet(CHERRY, CHAIN3)
        assert not is_subposet(CHERRY, CHAIN3, "nonplane")

    def test_cherry_in_five_node_trees(self):
        for t in enumerate_family(Family.PLANE_BINARY, 5):
            assert is_subposet(CHERRY, t)

    def test_plane_order_matters(self):
        left = parse_tree("((()())())")
        right = parse_tree("(()(()()))")
        probe = parse_tree("((()())())")
        assert is_subposet(probe, left)
        assert not is_subposet(probe, right)
        assert is_subposet(probe, right, "nonplane")
