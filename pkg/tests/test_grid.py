import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from klimm import fixtures
from klimm.errors import (
    PatternPreconditionError,
    PreconditionError,
    SizeGuardError,
)
from klimm.grid import (
    LabeledGrid,
    block_antidiagonal_split,
    bounding_boxes,
    boxes_alternate,
    cells_sandwiched_only_by,
    col_support,
    complement_young_shape,
    delete_rows_cols,
    deletion_pruned_grid_identity,
    durfee,
    graph_of_interval_bruteforce,
    graph_of_upper_interval,
    grid,
    is_admissible,
    is_sandwiched,
    label_patterns,
    largest_square,
    permutation_graph,
    row_support,
    spanning_corners,
    squares_match_noninversions,
    young_complement_grid,
    young_diagram_grid,
    young_shape,
)
from klimm.perm import (
    delete_entry,
    identity,
    longest_element,
    symmetric_group,
)

V2413 = (2, 4, 1, 3)


def test_worked_interval_graph():
    G = graph_of_upper_interval(V2413)
    assert len(G.cells) == 12
    assert row_support(G, 1) == frozenset({2, 3, 4})
    assert row_support(G, 2) == frozenset({2, 3, 4})
    assert row_support(G, 3) == frozenset({1, 2, 3})
    assert row_support(G, 4) == frozenset({1, 2, 3})
    assert col_support(G, 1) == frozenset({3, 4})
    assert col_support(G, 2) == frozenset({1, 2, 3, 4})
    assert col_support(G, 3) == frozenset({1, 2, 3, 4})
    assert col_support(G, 4) == frozenset({1, 2})
    assert (4, 4) not in G.cells


def test_interval_graph_extremes():
    n = 5
    assert graph_of_upper_interval(longest_element(n)).cells == \
        permutation_graph(longest_element(n))
    assert len(graph_of_upper_interval(identity(n)).cells) == n * n


@pytest.mark.parametrize("n", range(1, 6))
def test_upper_interval_matches_bruteforce(n):
    for v in symmetric_group(n):
        assert graph_of_upper_interval(v).cells == \
            graph_of_interval_bruteforce(v).cells


def test_bruteforce_size_guard():
    with pytest.raises(SizeGuardError):
        graph_of_interval_bruteforce(identity(8))


def test_is_sandwiched():
    assert is_sandwiched((1, 3), V2413, (1, 2))
    assert not is_sandwiched((4, 4), V2413, (1, 2))
    assert not is_sandwiched((4, 4), V2413, (1, 4))
    assert not is_sandwiched((4, 4), V2413, (3, 4))
    with pytest.raises(PreconditionError):
        is_sandwiched((1, 2), V2413, (1, 2))  # on the graph of v
    with pytest.raises(ValueError):
        is_sandwiched((1, 3), V2413, (2, 3))  # not a non-inversion


def test_largest_square_examples():
    assert largest_square(graph_of_upper_interval(V2413)) == 2
    assert largest_square(graph_of_upper_interval(longest_element(4))) == 1
    assert largest_square(graph_of_upper_interval(identity(5))) == 5
    assert largest_square(grid(3, [])) == 0


@pytest.mark.parametrize("n", range(1, 7))
def test_squares_match_noninversions_exhaustive(n):
    assert all(squares_match_noninversions(v) for v in symmetric_group(n))


def test_support_of_empty_grid():
    empty = grid(3, [])
    assert row_support(empty, 2) == frozenset()
    assert col_support(empty, 3) == frozenset()
    with pytest.raises(IndexError):
        row_support(empty, 4)


def test_admissibility_examples():
    G = graph_of_upper_interval(V2413)
    assert is_admissible(G.with_labels(fixtures.ADMISSIBLE_ROW_LABELS,
                                       fixtures.ADMISSIBLE_COL_LABELS))
    assert not is_admissible(G.with_labels((1, 2, 2, 3), (1, 2, 2, 3)))
    assert is_admissible(G)  # identity labels are all distinct


def test_labels_must_be_weakly_increasing():
    with pytest.raises(ValueError):
        grid(3, [], row_labels=(2, 1, 3))


def test_delete_rows_cols_basics():
    G = graph_of_upper_interval(V2413)
    assert delete_rows_cols(G, [], []).cells == G.cells
    with pytest.raises(ValueError):
        delete_rows_cols(G, [1], [])
    # order-preserving reindex of a single deletion
    reduced = delete_rows_cols(grid(4, [(1, 1), (3, 3), (4, 4)]), {2}, {2})
    assert reduced.cells == frozenset({(1, 1), (2, 2), (3, 3)})


def test_deletion_composes():
    G = graph_of_upper_interval((5, 2, 6, 4, 1, 3),
                                row_labels=(1, 1, 2, 2, 3, 3),
                                col_labels=(1, 2, 2, 3, 3, 4))
    both = delete_rows_cols(G, {2, 5}, {1, 4})
    step1 = delete_rows_cols(G, {2}, {1})
    # after deleting row 2, old row 5 sits at position 4; same for columns
    step2 = delete_rows_cols(step1, {4}, {3})
    assert both == step2


def test_deletion_preserves_surviving_labels():
    G = graph_of_upper_interval(V2413, row_labels=(1, 2, 2, 3),
                                col_labels=(1, 2, 3, 3))
    reduced = delete_rows_cols(G, {2}, {3})
    assert reduced.row_labels == (1, 2, 3)
    assert reduced.col_labels == (1, 2, 3)


def test_bounding_boxes_worked_example():
    boxes = bounding_boxes(fixtures.BOX_COLORING_WORD)
    assert tuple(b.color for b in boxes) == fixtures.BOX_COLORING_COLORS
    assert spanning_corners(fixtures.BOX_COLORING_WORD) == \
        fixtures.BOX_COLORING_CORNERS
    purple = boxes[-1]
    assert len(purple.corners) == 2


def test_bounding_boxes_longest_element():
    for box in bounding_boxes(longest_element(5)):
        assert box.color == "green"
        assert box.side() == 1


@pytest.mark.parametrize("n", range(1, 7))
def test_boxes_cover_interval_graph(n):
    for v in symmetric_group(n):
        cover = set()
        for box in bounding_boxes(v):
            cover |= box.cells()
        assert graph_of_upper_interval(v).cells <= cover


def test_alternation_preconditions():
    with pytest.raises(PreconditionError):
        boxes_alternate(fixtures.BOX_COLORING_WORD)
    with pytest.raises(PatternPreconditionError):
        boxes_alternate((2, 1, 4, 3))
    with pytest.raises(PreconditionError):
        boxes_alternate((2, 1))  # w0*v = id sits inside a parabolic
    assert boxes_alternate(identity(2))  # single box, vacuously true


def test_young_shape_recognition():
    assert young_shape(graph_of_upper_interval(identity(3))) == (3, 3, 3)
    assert young_shape(graph_of_upper_interval((1, 3, 2))) == (3, 3, 2)
    assert young_shape(graph_of_upper_interval(longest_element(3))) is None
    assert young_shape(graph_of_upper_interval((2, 1, 4, 3))) is None
    assert complement_young_shape(graph_of_upper_interval((2, 1, 3))) == (1, 0, 0)
    assert complement_young_shape(graph_of_upper_interval(longest_element(3))) is None


def test_young_grids_and_durfee():
    assert durfee((3, 3, 1)) == 2
    assert durfee(()) == 0
    assert durfee((5, 5, 5, 5, 5)) == 5
    shape = young_diagram_grid((3, 1), 3)
    assert shape.cells == frozenset({(1, 1), (1, 2), (1, 3), (2, 1)})
    comp = young_complement_grid((3, 1), 3)
    assert comp.cells == frozenset({(2, 2), (2, 3), (3, 1), (3, 2), (3, 3)})
    assert young_shape(young_diagram_grid((3, 3, 1), 3)) == (3, 3, 1)
    assert complement_young_shape(young_complement_grid((2, 1), 3)) == (2, 1, 0)
    with pytest.raises(ValueError):
        young_diagram_grid((1, 3), 3)  # not weakly decreasing


def test_block_split_worked_example():
    G = graph_of_upper_interval(fixtures.BLOCK_SPLIT_WORD)
    j, upper, lower = block_antidiagonal_split(G)
    assert j == fixtures.BLOCK_SPLIT_J
    assert upper.cells == \
        graph_of_upper_interval(fixtures.BLOCK_SPLIT_UPPER).cells
    assert lower.cells == \
        graph_of_upper_interval(fixtures.BLOCK_SPLIT_LOWER).cells


def test_block_split_extremes():
    assert block_antidiagonal_split(graph_of_upper_interval(identity(4))) is None
    j, upper, lower = block_antidiagonal_split(
        graph_of_upper_interval(longest_element(4)))
    assert j == 1 and upper.n == 3 and lower.n == 1


def test_block_split_carries_labels():
    G = graph_of_upper_interval(fixtures.BLOCK_SPLIT_WORD,
                                row_labels=(1, 1, 2, 2, 3, 3, 4, 4),
                                col_labels=(1, 2, 3, 4, 5, 6, 7, 8))
    j, upper, lower = block_antidiagonal_split(G)
    assert upper.row_labels == (1, 1, 2, 2, 3)
    assert upper.col_labels == (4, 5, 6, 7, 8)
    assert lower.row_labels == (3, 4, 4)
    assert lower.col_labels == (1, 2, 3)


def test_deletion_grid_identities():
    v = fixtures.DELETION_WORD
    i = fixtures.DELETION_POSITION
    assert delete_entry(v, i) == fixtures.DELETION_RESULT
    assert (i, v[i - 1]) in spanning_corners(v)
    assert cells_sandwiched_only_by(v, i)  # the pruned region is nonempty
    assert deletion_pruned_grid_identity(v, i)


@pytest.mark.parametrize("n", range(2, 6))
def test_deletion_pruned_identity_exhaustive(n):
    for v in symmetric_group(n):
        for i in range(1, n + 1):
            assert deletion_pruned_grid_identity(v, i)


def test_label_patterns():
    assert label_patterns(3, 3) == [(1, 1, 1), (1, 1, 2), (1, 2, 2), (1, 2, 3)]
    assert len(label_patterns(4, 4)) == 8
    assert label_patterns(4, 1) == [(1, 1, 1, 1)]


def test_grid_doc_round_trip():
    G = graph_of_upper_interval(V2413, row_labels=(1, 2, 2, 3))
    assert LabeledGrid.from_doc(G.to_doc()) == G


@given(st.permutations(list(range(1, 6))))
@settings(max_examples=60, deadline=None)
def test_graph_contains_both_endpoints(v):
    v = tuple(v)
    cells = graph_of_upper_interval(v).cells
    assert permutation_graph(v) <= cells
    assert permutation_graph(longest_element(5)) <= cells
