"""Tests for oracle.py: exact j-independence, j-domination, chi_j and corpus enumeration."""

import pytest

from dsi_bounds.config import OracleGuards
from dsi_bounds.const import KIND_DOMINATION, KIND_INDEPENDENCE
from dsi_bounds.exceptions import CapacityError, GraphInputError
from dsi_bounds.generators import complete, dodecahedron, double_hub_wheel, empty, matched_cliques, prop1
from dsi_bounds.graph import induced_edge_count
from dsi_bounds.helpers import mask_of
from dsi_bounds.oracle import (
    alpha_j,
    chi_j,
    enumerate_labeled_graphs,
    f_stats,
    find_induced_star,
    gamma_j,
    is_j_dominating,
    is_j_independent,
    is_K1p_free,
    is_lower_j_annihilating,
    is_upper_j_annihilating,
    labeled_graph_count,
    max_upper_annihilating_size,
    min_lower_annihilating_size,
)
from tests.helpers import make_c5, make_claw, make_e2_k6, make_e4_plus_k2, make_k4


@pytest.mark.unit
class TestPredicates:
    """Tests for is_j_independent() and is_j_dominating()."""

    @pytest.mark.parametrize(
        ("graph", "vertices", "j", "expected"),
        [
            (make_c5(), [0, 2], 1, True),
            (make_c5(), [0, 1, 3], 2, True),
            (make_k4(), [0, 1], 1, False),
            (make_k4(), [], 1, True),
        ],
    )
    def test_independence(self, graph, vertices, j, expected):
        """Each member has fewer than j neighbors inside."""
        assert is_j_independent(graph, mask_of(vertices), j) is expected

    @pytest.mark.parametrize(
        ("graph", "vertices", "j", "expected"),
        [
            (make_c5(), [0, 1, 2, 3, 4], 3, True),
            (make_c5(), [0, 1, 3], 2, True),
            (make_c5(), [0], 1, False),
            (make_k4(), [2], 1, True),
        ],
    )
    def test_domination(self, graph, vertices, j, expected):
        """Each outsider has at least j neighbors inside."""
        assert is_j_dominating(graph, mask_of(vertices), j) is expected


@pytest.mark.unit
class TestOptima:
    """Tests for alpha_j() and gamma_j()."""

    def test_c5(self, c5):
        """alpha(C_5) = gamma(C_5) = 2."""
        assert alpha_j(c5, 1).value == 2
        assert gamma_j(c5, 1).value == 2

    def test_c5_j2(self, c5):
        """alpha_2(C_5) = 3 and gamma_2(C_5) = 3."""
        assert alpha_j(c5, 2).value == 3
        result = gamma_j(c5, 2)
        assert result.value == 3
        assert is_j_dominating(c5, result.witness, 2)

    def test_prop1_j2(self):
        """alpha_2 of prop1(2) is 4."""
        assert alpha_j(prop1(2), 2).value == 4

    def test_witness_certifies_value(self, e2_k6):
        """The witness has the optimum size and the property."""
        result = alpha_j(e2_k6, 1)
        assert result.value == 3
        assert result.witness.bit_count() == 3
        assert is_j_independent(e2_k6, result.witness, 1)
        assert result.stats is None

    def test_j_above_max_degree(self, k4):
        """When j > Delta every set is j-independent."""
        result = alpha_j(k4, 4)
        assert result.value == 4
        assert result.witness == k4.full_mask

    def test_empty_graph(self):
        """E_3: alpha = gamma = 3."""
        graph = empty(3)
        assert alpha_j(graph, 1).value == 3
        assert gamma_j(graph, 1).value == 3

    def test_with_stats(self, k4):
        """with_stats also returns the family statistics."""
        result = gamma_j(k4, 1, with_stats=True)
        assert result.value == 1
        assert result.stats.kind == KIND_DOMINATION
        assert result.stats.family_size == 4

    def test_invalid_j(self, k4):
        """j must be positive."""
        with pytest.raises(GraphInputError, match="positive"):
            alpha_j(k4, 0)

    def test_single_guard(self, tiny_guards):
        """Graphs above the single guard are refused."""
        with pytest.raises(CapacityError, match="'single' guard"):
            alpha_j(matched_cliques(3), 1, tiny_guards)

    @pytest.mark.slow
    def test_dodecahedron(self, catalog_guards):
        """alpha(dodecahedron) = 8."""
        assert alpha_j(dodecahedron(), 1, catalog_guards).value == 8


@pytest.mark.unit
class TestFStats:
    """Tests for f_stats()."""

    def test_k4(self, k4):
        """F is the four singletons; m[V-S] = 3 for each."""
        stats = f_stats(k4, 1, KIND_INDEPENDENCE)
        assert (stats.optimum, stats.max_diff, stats.min_diff, stats.family_size) == (1, 3, 3, 4)

    def test_e2_k6(self, e2_k6):
        """Both isolated vertices plus one clique vertex; m[V-S] = m(K_5) = 10."""
        stats = f_stats(e2_k6, 1, KIND_INDEPENDENCE)
        assert (stats.optimum, stats.max_diff, stats.min_diff, stats.family_size) == (3, 10, 10, 6)

    def test_e4_plus_k2(self, e4_plus_k2):
        """The unique maximum independent set is E_4; m[V-S] - m[S] = 1."""
        stats = f_stats(e4_plus_k2, 1, KIND_INDEPENDENCE)
        assert (stats.optimum, stats.max_diff, stats.min_diff, stats.family_size) == (4, 1, 1, 1)

    def test_c5_domination_j2(self, c5):
        """Minimum 2-dominating sets of C_5 span one edge and leave none outside."""
        stats = f_stats(c5, 2, KIND_DOMINATION)
        assert (stats.optimum, stats.max_diff, stats.min_diff, stats.family_size) == (3, -1, -1, 5)

    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_invariants(self, j):
        """Ordering, bounds and the inner-edge cap hold on matched_cliques(4)."""
        graph = matched_cliques(4)
        stats = f_stats(graph, j, KIND_INDEPENDENCE)
        assert stats.family_size >= 1
        assert -graph.m <= stats.min_diff <= stats.max_diff <= graph.m
        assert 2 * stats.max_inner_edges <= stats.optimum * (j - 1)
        assert 2 * induced_edge_count(graph, stats.witness) <= stats.optimum * (j - 1)

    def test_require_mismatch(self, k4):
        """Statistics for one kind cannot stand in for another."""
        stats = f_stats(k4, 1, KIND_DOMINATION)
        with pytest.raises(GraphInputError, match="domination with j=1"):
            stats.require(KIND_INDEPENDENCE, 1)
        with pytest.raises(GraphInputError):
            stats.require(KIND_DOMINATION, 2)

    def test_unknown_kind(self, k4):
        """Only independence and domination exist."""
        with pytest.raises(GraphInputError, match="Unknown set kind"):
            f_stats(k4, 1, "matching")

    def test_family_guard(self, tiny_guards):
        """Family enumeration respects its own guard."""
        with pytest.raises(CapacityError, match="'family' guard"):
            f_stats(matched_cliques(3), 1, KIND_INDEPENDENCE, tiny_guards)


@pytest.mark.unit
class TestChiJ:
    """Tests for chi_j()."""

    @pytest.mark.parametrize(
        ("graph", "j", "expected"),
        [
            (make_k4(), 1, 4),
            (make_k4(), 2, 2),
            (make_c5(), 1, 3),
            (make_c5(), 2, 2),
            (empty(3), 1, 1),
            (make_claw(), 1, 2),
            (matched_cliques(3), 1, 3),
        ],
    )
    def test_values(self, graph, j, expected):
        """Known j-chromatic numbers."""
        assert chi_j(graph, j) == expected

    def test_chromatic_guard(self):
        """chi_j refuses graphs above its guard."""
        guards = OracleGuards(chromatic=4)
        with pytest.raises(CapacityError, match="'chromatic' guard"):
            chi_j(make_c5(), 1, guards)


@pytest.mark.unit
class TestInducedStars:
    """Tests for find_induced_star() and is_K1p_free()."""

    def test_cycle_is_claw_free(self, c5):
        """Cycle neighborhoods have two vertices."""
        assert is_K1p_free(c5, 3)
        assert find_induced_star(c5, 3) is None

    def test_claw_contains_itself(self, claw):
        """K_{1,3} is its own induced claw."""
        assert find_induced_star(claw, 3) == (0, (1, 2, 3))
        assert not is_K1p_free(claw, 3)

    def test_double_hub_wheel_has_a_claw(self):
        """A hub with three pairwise non-adjacent cycle vertices."""
        center, leaves = find_induced_star(double_hub_wheel(2), 3)
        assert center in (6, 7)
        assert len(leaves) == 3

    def test_complete_graph_is_claw_free(self):
        """Neighborhoods of K_n are cliques."""
        assert is_K1p_free(complete(6), 3)

    def test_p_below_two(self, c5):
        """K_{1,1} is not a meaningful forbidden graph."""
        with pytest.raises(GraphInputError, match="p >= 2"):
            find_induced_star(c5, 1)


@pytest.mark.unit
class TestAnnihilatingSets:
    """Tests for the upper/lower j-annihilating predicates and their extremal sizes."""

    def test_upper_predicate_k4(self, k4):
        """A singleton of K_4 fits under m; a pair does not."""
        stats = f_stats(k4, 1, KIND_INDEPENDENCE)
        assert is_upper_j_annihilating(k4, mask_of([2]), 1, stats)
        assert not is_upper_j_annihilating(k4, mask_of([0, 1]), 1, stats)
        assert is_upper_j_annihilating(k4, 0, 1, stats)

    def test_lower_predicate_k4(self, k4):
        """A singleton of K_4 reaches m with the min difference; the empty set does not."""
        stats = f_stats(k4, 1, KIND_INDEPENDENCE)
        assert is_lower_j_annihilating(k4, mask_of([3]), 1, stats)
        assert not is_lower_j_annihilating(k4, 0, 1, stats)

    @pytest.mark.parametrize(
        ("graph", "expected"),
        [(make_k4(), 1), (make_e2_k6(), 3), (matched_cliques(3), 2)],
    )
    def test_max_upper_size(self, graph, expected):
        """Largest upper 1-annihilating set sizes."""
        stats = f_stats(graph, 1, KIND_INDEPENDENCE)
        assert max_upper_annihilating_size(graph, 1, stats) == expected

    def test_min_lower_size(self, k4, c5):
        """Smallest lower 1-annihilating set sizes."""
        assert min_lower_annihilating_size(k4, 1, f_stats(k4, 1, KIND_INDEPENDENCE)) == 1
        assert min_lower_annihilating_size(c5, 1, f_stats(c5, 1, KIND_INDEPENDENCE)) == 2

    def test_wrong_stats(self, k4):
        """Domination statistics are refused."""
        stats = f_stats(k4, 1, KIND_DOMINATION)
        with pytest.raises(GraphInputError):
            max_upper_annihilating_size(k4, 1, stats)


@pytest.mark.unit
class TestCorpusEnumeration:
    """Tests for labeled_graph_count() and enumerate_labeled_graphs()."""

    @pytest.mark.parametrize(("n", "count"), [(1, 1), (3, 8), (4, 64), (6, 32768)])
    def test_counts(self, n, count):
        """2^(n choose 2) labeled graphs."""
        assert labeled_graph_count(n) == count

    def test_enumerates_every_graph_once(self):
        """n = 4 yields 64 distinct graphs."""
        graphs = list(enumerate_labeled_graphs(4))
        assert len(graphs) == 64
        assert len(set(graphs)) == 64

    def test_mask_order(self):
        """Bit b of the edge mask is the b-th lexicographic pair."""
        graphs = list(enumerate_labeled_graphs(3))
        assert graphs[0] == empty(3)
        assert list(graphs[1].edges()) == [(0, 1)]
        assert list(graphs[4].edges()) == [(1, 2)]
        assert graphs[-1] == complete(3)

    def test_slices_partition_the_range(self):
        """Disjoint slices cover the corpus exactly."""
        head = list(enumerate_labeled_graphs(4, 0, 20))
        tail = list(enumerate_labeled_graphs(4, 20))
        assert head + tail == list(enumerate_labeled_graphs(4))

    def test_step_samples(self):
        """step = 4 keeps every fourth mask."""
        assert len(list(enumerate_labeled_graphs(4, step=4))) == 16

    def test_corpus_guard(self):
        """n = 8 is beyond the default corpus guard."""
        with pytest.raises(CapacityError, match="'corpus' guard"):
            next(enumerate_labeled_graphs(8))

    def test_invalid_slice(self):
        """Slices must lie inside the mask range."""
        with pytest.raises(GraphInputError, match="Invalid corpus slice"):
            next(enumerate_labeled_graphs(3, 5, 2))


@pytest.mark.unit
class TestMonotoneInJ:
    """alpha_j and gamma_j never decrease as j grows."""

    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_alpha_j(self, j):
        """alpha_j <= alpha_(j+1) on every 4-vertex graph."""
        for graph in enumerate_labeled_graphs(4):
            assert alpha_j(graph, j).value <= alpha_j(graph, j + 1).value, list(graph.edges())

    @pytest.mark.parametrize("j", [1, 2, 3])
    def test_gamma_j(self, j):
        """gamma_j <= gamma_(j+1) on every 4-vertex graph."""
        for graph in enumerate_labeled_graphs(4):
            assert gamma_j(graph, j).value <= gamma_j(graph, j + 1).value, list(graph.edges())
