import random

import pytest

from gangulate.cubic import (
    Q3_SPECIAL,
    STANDARD,
    CubicLabeling,
    base_table,
    check_labeling_4,
    cubic_graphs,
    is_q3,
    label_cubic,
    place_cubic,
    q3_extensions,
    q3_labeled,
    reduce_cubic,
)
from gangulate.errors import PreconditionError
from gangulate.oracle import count_gangulations, validate_gangulation
from gangulate.placement import AbstractGraph, generalized_petersen


def identity(G, kind=STANDARD):
    return CubicLabeling(tuple(range(1, G.n + 1)), kind, "printed")


def random_cubic(n, rng):
    # configuration model, retried until connected with at most one 2-cycle
    while True:
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = [tuple(sorted(stubs[i : i + 2])) for i in range(0, len(stubs), 2)]
        if any(a == b for a, b in edges):
            continue
        G = AbstractGraph(n, tuple(edges))
        if G.is_connected() and len(G.two_cycles()) <= 1 and max(G.multiplicity().values()) <= 2:
            return G


def test_printed_base_labelings_pass():
    for G in base_table():
        assert check_labeling_4(G, identity(G))


def test_printed_q3_labeling():
    Q = q3_labeled()
    assert is_q3(Q)
    assert check_labeling_4(Q, identity(Q, Q3_SPECIAL))
    assert not check_labeling_4(Q, identity(Q, STANDARD))


def test_printed_ten_vertex_labelings_pass():
    for G in q3_extensions():
        assert check_labeling_4(G, identity(G))


def test_gap_one_edge_fails():
    G = base_table()[0]
    labels = list(range(1, 9))
    a, b = G.edges[0]
    # force the two ends of an edge to consecutive labels
    j = labels.index(labels[a] + 1) if labels[a] < 8 else labels.index(labels[a] - 1)
    labels[b], labels[j] = labels[j], labels[b]
    assert not check_labeling_4(G, CubicLabeling(tuple(labels), STANDARD, "bad"))


def test_reduce_cubic():
    Q = q3_labeled()
    for e in Q.edges:
        R = reduce_cubic(Q, e)
        assert R.n == 6 and R.is_regular(3)
    R = reduce_cubic(generalized_petersen(5, 2), (0, 5))
    assert R.n == 8 and R.m == 12 and R.is_regular(3)


def test_reduce_requires_edge():
    Q = q3_labeled()
    non_edge = next((0, v) for v in range(1, 8) if (0, v) not in Q.edges)
    with pytest.raises(PreconditionError):
        reduce_cubic(Q, non_edge)


def test_label_q3():
    lab = label_cubic(q3_labeled())
    assert lab.kind == Q3_SPECIAL


def test_label_petersen():
    P = generalized_petersen(5, 2)
    assert check_labeling_4(P, label_cubic(P))


def test_cubic_graph_counts():
    assert len(cubic_graphs(8)) == 5
    assert all(G.is_simple() and G.is_connected() and G.is_regular(3) for G in cubic_graphs(8))


def test_label_every_eight_vertex_graph():
    for G in cubic_graphs(8):
        lab = label_cubic(G)
        assert lab.kind in (STANDARD, Q3_SPECIAL)
        assert check_labeling_4(G, lab)


def test_place_q3():
    p = place_cubic(q3_labeled())
    assert p.witness.diagonals == {(0, 5), (1, 4)}
    assert validate_gangulation(p.target, p.witness)


def test_place_petersen_graph():
    P = generalized_petersen(5, 2)
    p = place_cubic(P)
    assert len(p.witness.diagonals) == 3
    assert validate_gangulation(p.target, p.witness)
    assert count_gangulations(p.target) > 0


def test_place_rejects_multigraph():
    G = q3_extensions()[-1]
    assert not G.is_simple()
    with pytest.raises(PreconditionError):
        place_cubic(G)


def test_label_two_cycle_graph():
    G = q3_extensions()[-1]
    lab = label_cubic(G)
    assert check_labeling_4(G, lab)


@pytest.mark.parametrize("n", [12, 14, 16])
def test_random_cubic_multigraphs(n):
    rng = random.Random(n)
    for _ in range(10):
        G = random_cubic(n, rng)
        lab = label_cubic(G)
        assert check_labeling_4(G, lab), (G, lab)
        if G.is_simple():
            p = place_cubic(G, lab)
            assert validate_gangulation(p.target, p.witness)


def test_input_checks():
    with pytest.raises(PreconditionError):
        label_cubic(generalized_petersen(3, 1))
    with pytest.raises(PreconditionError):
        label_cubic(AbstractGraph(8, tuple((i, (i + 1) % 8) for i in range(8))))
