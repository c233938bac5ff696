import pytest

from treembed import (
    BudgetError,
    DomainError,
    Family,
    canonical_nonplane,
    complete_balanced,
    enumerate_family,
    family_size,
    format_tree,
    wedderburn_etherington,
)


class TestCardinalities:
    @pytest.mark.parametrize("n,expect", [(1, 1), (3, 1), (5, 2), (7, 5), (9, 14)])
    def test_plane_binary_catalan(self, n, expect):
        assert family_size(Family.PLANE_BINARY, n) == expect

    def test_even_sizes_empty(self):
        assert family_size(Family.PLANE_BINARY, 6) == 0
        assert family_size(Family.NONPLANE_BINARY, 8) == 0
        assert enumerate_family(Family.PLANE_BINARY, 6) == []

    @pytest.mark.parametrize("n,expect", [
        (1, 1), (3, 1), (5, 1), (7, 2), (9, 3), (11, 6), (13, 11)])
    def test_nonplane_wedderburn_etherington(self, n, expect):
        assert family_size(Family.NONPLANE_BINARY, n) == expect

    def test_wedderburn_etherington_sequence(self):
        got = [wedderburn_etherington(j) for j in range(1, 11)]
        assert got == [1, 1, 1, 2, 3, 6, 11, 23, 46, 98]

    @pytest.mark.parametrize("n,expect", [(1, 1), (2, 1), (3, 2), (4, 5), (5, 14)])
    def test_planted_plane_catalan(self, n, expect):
        assert family_size(Family.PLANTED_PLANE, n) == expect

    def test_size_below_one_rejected(self):
        for fam in Family:
            with pytest.raises(DomainError):
                family_size(fam, 0)


class TestEnumeration:
    def test_lengths_match_sizes(self):
        for n in range(1, 16, 2):
            assert len(enumerate_family(Family.PLANE_BINARY, n)) == \
                family_size(Family.PLANE_BINARY, n)
            assert len(enumerate_family(Family.NONPLANE_BINARY, n)) == \
                family_size(Family.NONPLANE_BINARY, n)
        for n in range(1, 12):
            assert len(enumerate_family(Family.PLANTED_PLANE, n)) == \
                family_size(Family.PLANTED_PLANE, n)

    def test_no_duplicates_and_right_sizes(self):
        for fam, ns in [(Family.PLANE_BINARY, range(1, 14, 2)),
                        (Family.NONPLANE_BINARY, range(1, 14, 2)),
                        (Family.PLANTED_PLANE, range(1, 10))]:
            for n in ns:
                trees = enumerate_family(fam, n)
                assert len({format_tree(t) for t in trees}) == len(trees)
                assert all(t.size == n for t in trees)

    def test_plane_binary_degrees(self):
        for n in range(1, 14, 2):
            for t in enumerate_family(Family.PLANE_BINARY, n):
                assert all(node.degree in (0, 2) for node in t.iter_nodes())

    def test_nonplane_outputs_are_canonical(self):
        for n in range(1, 14, 2):
            for t in enumerate_family(Family.NONPLANE_BINARY, n):
                assert canonical_nonplane(t) == t

    def test_nonplane_is_plane_collapsed_by_canonical_form(self):
        for n in range(1, 14, 2):
            collapsed = {canonical_nonplane(t)
                         for t in enumerate_family(Family.PLANE_BINARY, n)}
            reps = set(enumerate_family(Family.NONPLANE_BINARY, n))
            assert collapsed == reps

    def test_deterministic_order(self):
        a = [format_tree(t) for t in enumerate_family(Family.PLANTED_PLANE, 6)]
        b = [format_tree(t) for t in enumerate_family(Family.PLANTED_PLANE, 6)]
        assert a == b

    def test_cap_guard(self):
        with pytest.raises(BudgetError):
            enumerate_family(Family.PLANTED_PLANE, 16, cap=1000)
        # explicit None lifts the guard check itself
        assert family_size(Family.PLANTED_PLANE, 16) > 1000


class TestCompleteBalanced:
    def test_heights(self):
        assert format_tree(complete_balanced(0)) == "()"
        assert format_tree(complete_balanced(1)) == "(()())"
        assert format_tree(complete_balanced(2)) == "((()())(()()))"

    def test_size(self):
        for h in range(6):
            assert complete_balanced(h).size == 2 ** (h + 1) - 1

    def test_negative_height_rejected(self):
        with pytest.raises(DomainError):
            complete_balanced(-1)
