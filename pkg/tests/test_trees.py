from fractions import Fraction

import pytest

from treembed import (
    DomainError,
    Family,
    PlaneForest,
    TreeParseError,
    binary_expansion_constant,
    canonical_nonplane,
    catalan,
    clip_forest_nonplane,
    count_symmetry_nodes,
    degree_sequence,
    enumerate_family,
    forest_orderings,
    format_forest,
    format_tree,
    motzkin_expansions,
    parse_forest,
    parse_tree,
)

CHERRY = "(()())"


def all_plane_trees(max_size):
    out = []
    for n in range(1, max_size + 1):
        out.extend(enumerate_family(Family.PLANTED_PLANE, n))
    return out


class TestParseFormat:
    def test_leaf(self):
        assert parse_tree("()").size == 1
        assert format_tree(parse_tree("()")) == "()"

    def test_cherry(self):
        t = parse_tree(CHERRY)
        assert t.size == 3
        assert [c.size for c in t.children] == [1, 1]

    def test_unary_then_leaf(self):
        t = parse_tree("((())())")
        assert t.degree == 2
        assert [c.size for c in t.children] == [2, 1]

    def test_whitespace_normalized(self):
        assert format_tree(parse_tree(" ( () ( ) ) ")) == CHERRY

    @pytest.mark.parametrize("bad,offset", [
        ("", 0),
        ("((", 2),
        ("())", 2),
        ("(x)", 1),
        ("hello", 0),
    ])
    def test_errors_carry_offset(self, bad, offset):
        with pytest.raises(TreeParseError) as err:
            parse_tree(bad)
        assert err.value.offset == offset

    def test_round_trip_exhaustive_to_size_10(self):
        for t in all_plane_trees(10):
            assert parse_tree(format_tree(t)) == t

    def test_forest_round_trip(self):
        f = parse_forest("();(()())")
        assert f.r == 2
        assert format_forest(f) == "();" + CHERRY

    def test_forest_rejects_empty_component(self):
        with pytest.raises(TreeParseError):
            parse_forest("();")


class TestDegreeSequence:
    def test_single_node(self):
        d = degree_sequence(parse_tree("()"))
        assert (d.d, d.m, d.l, d.u, d.k_param) == ((1,), 1, 1, 0, 0)

    def test_cherry(self):
        d = degree_sequence(parse_tree(CHERRY))
        assert d.d == (2, 0, 1)
        assert (d.m, d.l, d.u) == (3, 2, 0)
        assert d.k_param == Fraction(3, 2)

    def test_five_node_star(self):
        d = degree_sequence(parse_tree("(()()()())"))
        assert d.d == (4, 0, 0, 0, 1)
        assert d.l == 4

    def test_handshake_identity_exhaustive(self):
        # every non-root node has exactly one parent
        for t in all_plane_trees(10):
            d = degree_sequence(t)
            assert sum(d.d) == d.m
            assert sum(i * c for i, c in enumerate(d.d)) == d.m - 1


class TestCanonical:
    def test_mirror_pair(self):
        a = parse_tree("(()(()()))")
        b = parse_tree("((()())())")
        assert canonical_nonplane(a) == canonical_nonplane(b)

    def test_cherry_fixed(self):
        c = parse_tree(CHERRY)
        assert canonical_nonplane(c) == c

    def test_plane_binary_5_collapse(self):
        trees = enumerate_family(Family.PLANE_BINARY, 5)
        forms = {canonical_nonplane(t) for t in trees}
        assert len(forms) == 1

    def test_idempotent_and_orbit_constant(self):
        # swapping children anywhere must not change the canonical form
        def reversed_everywhere(t):
            from treembed import PlaneTree
            return PlaneTree(tuple(reversed_everywhere(c)
                                   for c in reversed(t.children)))

        for t in all_plane_trees(7):
            c = canonical_nonplane(t)
            assert canonical_nonplane(c) == c
            assert canonical_nonplane(reversed_everywhere(t)) == c


class TestSymmetryNodes:
    def test_examples(self):
        assert count_symmetry_nodes(parse_tree(CHERRY)) == 1
        assert count_symmetry_nodes(parse_tree("(()(()()))")) == 1
        assert count_symmetry_nodes(parse_tree("()")) == 0

    def test_complete_7(self):
        assert count_symmetry_nodes(parse_tree("((()())(()()))")) == 3

    def test_high_degree_rejected(self):
        with pytest.raises(DomainError):
            count_symmetry_nodes(parse_tree("(()()())"))


class TestForestOps:
    def test_two_leaves_give_cherry(self):
        f = parse_forest("();()")
        assert [format_tree(t) for t in forest_orderings(f)] == [CHERRY]

    def test_leaf_and_cherry_give_two(self):
        f = parse_forest("();(()())")
        got = {format_tree(t) for t in forest_orderings(f)}
        assert got == {"(()(()()))", "((()())())"}

    def test_three_identical_cherries_give_one(self):
        f = parse_forest(";".join([CHERRY] * 3))
        assert len(forest_orderings(f)) == 1

    def test_count_matches_multiset_formula(self):
        import math
        from collections import Counter

        shapes = all_plane_trees(3)
        for comps in [(shapes[0], shapes[0], shapes[2]),
                      (shapes[1], shapes[2], shapes[3]),
                      (shapes[0], shapes[1], shapes[1], shapes[1])]:
            f = PlaneForest(comps)
            mult = Counter(format_tree(c) for c in comps)
            expect = math.factorial(f.r)
            for k in mult.values():
                expect //= math.factorial(k)
            assert len(forest_orderings(f)) == expect

    def test_single_component_rejected(self):
        with pytest.raises(DomainError):
            forest_orderings(parse_forest("()"))
        with pytest.raises(DomainError):
            clip_forest_nonplane(parse_forest("()"))

    def test_clip_examples(self):
        assert format_tree(clip_forest_nonplane(parse_forest("();()"))) == CHERRY
        got = clip_forest_nonplane(parse_forest("();(()())"))
        assert got == canonical_nonplane(parse_tree("(()(()()))"))
        assert format_tree(clip_forest_nonplane(parse_forest("();();()"))) == "(()()())"


class TestMotzkinExpansion:
    def test_motzkin_pattern_is_its_own_expansion(self):
        s = parse_tree("(()(()()))")
        got = motzkin_expansions(s)
        assert got.trees == ((canonical_nonplane(s), 1),)
        assert got.c_s == Fraction(1, 2) ** count_symmetry_nodes(s)

    def test_cherry(self):
        assert motzkin_expansions(parse_tree(CHERRY)).c_s == Fraction(1, 2)

    def test_degree3_star(self):
        got = motzkin_expansions(parse_tree("(()()())"))
        assert len(got.trees) == 1
        assert got.trees[0][0].size == 5
        assert got.c_s == Fraction(1, 2)

    def test_degree4_star(self):
        # two separation shapes over four equal leaves: the balanced tree
        # (three symmetry nodes) and the caterpillar (one)
        got = motzkin_expansions(parse_tree("(()()()())"))
        assert sorted(mult for _, mult in got.trees) == [1, 1]
        assert got.c_s == Fraction(1, 8) + Fraction(1, 2)

    def test_distinct_subtrees_give_three_separations(self):
        # children leaf / cherry / chain2 are pairwise non-isomorphic
        got = motzkin_expansions(parse_tree("(()(()())((())))"))
        assert sum(m for _, m in got.trees) == 3
        assert all(count_symmetry_nodes(t) >= 1 for t, _ in got.trees)

    def test_c_s_invariants(self):
        for text in ["(()()())", "(()()()())", "((()())()())"]:
            got = motzkin_expansions(parse_tree(text))
            assert got.c_s > 0
            assert all(mult >= 1 for _, mult in got.trees)


class TestBinaryExpansionConstant:
    def test_motzkin_gives_one(self):
        for text in ["()", "(())", CHERRY, "((())())"]:
            assert binary_expansion_constant(degree_sequence(parse_tree(text))) == 1

    def test_one_ternary_node(self):
        d = degree_sequence(parse_tree("(()()())"))
        assert binary_expansion_constant(d) == catalan(2) == 2

    def test_two_quaternary_nodes(self):
        t = parse_tree("((()()()())()()())")
        d = degree_sequence(t)
        assert d.d[4] == 2
        assert binary_expansion_constant(d) == catalan(3) ** 2 == 25
