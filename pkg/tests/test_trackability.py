import pytest
from hypothesis import given, strategies as st

from families import SHEAR, two_path
from matgrowth.classifier import GrowthClass
from matgrowth.exceptions import IndexOutOfRange, InputError, NoEdges
from matgrowth.matrix import product_of_word, sum_norm
from matgrowth.trackability import (
    LabelledGraph,
    decide_trackable,
    label_words,
    matrices_from_labels,
    paths_by_label_word,
)

# 0-based versions of the worked examples
LINE = LabelledGraph.build(["a", "a"], [(0, 0), (0, 1), (1, 1)])
TRAP = LabelledGraph.build(["a", "a", "b"], [(0, 1), (1, 0), (0, 2), (2, 2)])
BRANCH = LabelledGraph.build(["b", "a", "b"], [(1, 0), (1, 2), (0, 1), (2, 1)])
EXAMPLES = [LINE, TRAP, BRANCH]


def test_matrices_from_labels_examples():
    assert matrices_from_labels(LINE).tolist() == [SHEAR]
    assert matrices_from_labels(TRAP).tolist() == [
        [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
        [[0, 0, 1], [0, 0, 0], [0, 0, 1]],
    ]
    # labels sorted: a -> A1, b -> A0 of the two-path family
    a, b = matrices_from_labels(BRANCH)
    assert [b, a] == list(two_path())


def test_distinct_labels_give_single_columns():
    G = LabelledGraph.build(["x", "y", "z"], [(0, 1), (1, 2), (2, 0), (0, 0)])
    for m in matrices_from_labels(G):
        cols = {j for i in range(3) for j in range(3) if m[i, j]}
        assert len(cols) <= 1


def test_decide_trackable_examples():
    tv = decide_trackable(LINE)
    assert tv.trackable and tv.verdict.growth_class is GrowthClass.POLYNOMIAL and tv.degree == 1
    tv = decide_trackable(TRAP)
    assert tv.trackable and tv.verdict.growth_class is GrowthClass.BOUNDED
    tv = decide_trackable(BRANCH)
    assert not tv.trackable and tv.verdict.growth_class is GrowthClass.EXPONENTIAL
    assert tv.alphabet == ("a", "b")


def test_source_convention_is_selectable():
    S = matrices_from_labels(TRAP, convention="source")
    assert S.tolist()[1] == [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
    with pytest.raises(ValueError):
        matrices_from_labels(TRAP, convention="midpoint")


def test_graph_validation():
    with pytest.raises(NoEdges):
        matrices_from_labels(LabelledGraph.build(["a"], []))
    with pytest.raises(IndexOutOfRange):
        LabelledGraph.build(["a"], [(0, 1)])
    with pytest.raises(InputError):
        LabelledGraph.build([], [])
    with pytest.raises(InputError):
        LabelledGraph.build([""], [])


@pytest.mark.parametrize("G", EXAMPLES, ids=["line", "trap", "branch"])
@pytest.mark.parametrize("t", range(1, 7))
def test_path_counts_agree(G, t):
    S = matrices_from_labels(G)
    index = {lab: k for k, lab in enumerate(G.alphabet)}
    counts = paths_by_label_word(G, t)
    for word in label_words(G, t):
        A = product_of_word(S, [index[x] for x in word])
        assert sum_norm(A) == counts.get(word, 0)


@st.composite
def labelled_graphs(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    labels = draw(st.lists(st.sampled_from("abc"), min_size=n, max_size=n))
    pairs = [(u, v) for u in range(n) for v in range(n)]
    edges = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    return LabelledGraph.build(labels, edges)


@given(labelled_graphs(), st.permutations("xyz"))
def test_trackability_ignores_label_names(G, names):
    mapping = dict(zip("abc", names))
    before, after = decide_trackable(G), decide_trackable(G.relabel(mapping))
    assert before.trackable == after.trackable
    assert before.verdict.same_growth(after.verdict)


@given(labelled_graphs(max_n=3), st.integers(1, 4))
def test_path_counts_agree_on_random_graphs(G, t):
    S = matrices_from_labels(G)
    index = {lab: k for k, lab in enumerate(G.alphabet)}
    counts = paths_by_label_word(G, t)
    assert sum(counts.values()) == sum(
        sum_norm(product_of_word(S, [index[x] for x in w])) for w in label_words(G, t)
    )
    for w, c in counts.items():
        assert sum_norm(product_of_word(S, [index[x] for x in w])) == c
