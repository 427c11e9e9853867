import pytest

from gangulate.convex import (
    GAngulation,
    Instance,
    admissible_params,
    canonical_form,
    cyclic_gap,
    edge,
    edges_cross,
    format_instance,
    is_boundary_edge,
    parse_instance,
    polygon_faces,
    relabel,
    remove_vertices,
    short_diagonal,
)
from gangulate.errors import OutOfRange, ParseError


@pytest.mark.parametrize("n,e,gap", [(6, (0, 3), 3), (6, (0, 5), 1), (12, (1, 10), 3)])
def test_cyclic_gap(n, e, gap):
    assert cyclic_gap(n, edge(*e)) == gap


@pytest.mark.parametrize("e,expected", [((0, 1), True), ((0, 5), True), ((0, 3), False)])
def test_is_boundary_edge(e, expected):
    assert is_boundary_edge(6, edge(*e)) is expected


def test_edges_cross():
    assert edges_cross(6, edge(0, 3), edge(1, 4))
    assert not edges_cross(6, edge(0, 3), edge(3, 5))
    assert edges_cross(12, edge(1, 10), edge(2, 11))
    assert not edges_cross(8, edge(0, 3), edge(4, 7))


def test_edge_normalizes():
    assert edge(5, 2) == (2, 5)
    with pytest.raises(ValueError):
        edge(3, 3)


@pytest.mark.parametrize("n,g,t", [(6, 4, 1), (7, 4, None), (14, 5, 3), (4, 4, 0), (3, 3, 0), (10, 3, 7)])
def test_admissible_params(n, g, t):
    assert admissible_params(n, g) == t


def test_short_diagonal_wraps():
    assert short_diagonal(8, 4, 0) == (0, 3)
    assert short_diagonal(8, 4, 6) == (1, 6)


def test_canonical_form():
    fstar = Instance(6, 4, frozenset({(0, 3), (1, 4), (2, 5)}))
    assert canonical_form(relabel(fstar, 1)) == canonical_form(fstar)
    assert canonical_form(Instance(6, 4, frozenset({(1, 3)}))).forbidden == {(0, 2)}


def test_relabel_reflection():
    inst = Instance(8, 4, frozenset({(0, 3)}))
    assert relabel(inst, 0, reflect=True).forbidden == {(0, 5)}


def test_remove_vertices_collapses_labels():
    inst = Instance(8, 4, frozenset({(0, 4), (3, 7), (1, 2)}))
    red = remove_vertices(inst, [1, 2])
    assert red.n == 6
    assert red.forbidden == {(0, 2), (1, 5)}


def test_parse_instance():
    inst = parse_instance(b"6 4\n0 3\n1 4\n2 5\n")
    assert inst == Instance(6, 4, frozenset({(0, 3), (1, 4), (2, 5)}))
    assert parse_instance("6 4\n3 0\n").forbidden == {(0, 3)}
    assert parse_instance("# comment\n\n6 4\n").size == 0


def test_parse_out_of_range_reports_line():
    with pytest.raises(OutOfRange) as exc:
        parse_instance("6 4\n0 6\n")
    assert exc.value.line == 2


@pytest.mark.parametrize(
    "text,line",
    [("", None), ("6\n", 1), ("6 4\n0 x\n", 2), ("6 4\n1 1\n", 2), ("6 4\n0 3\n3 0\n", 3), ("2 4\n", 1)],
)
def test_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert exc.value.line == line


def test_format_round_trip():
    inst = Instance(12, 4, frozenset({(1, 10), (0, 3)}))
    assert parse_instance(format_instance(inst, ["note"])) == inst


def test_instance_rejects_bad_vertices():
    with pytest.raises(OutOfRange):
        Instance(6, 4, frozenset({(0, 6)}))
    with pytest.raises(OutOfRange):
        Instance(2, 4)


def test_polygon_faces():
    assert polygon_faces(8, [(2, 5), (2, 7)]) == [(0, 1, 2, 7), (2, 3, 4, 5), (2, 5, 6, 7)]
    w = GAngulation.from_diagonals(4, 4, [])
    assert w.faces == ((0, 1, 2, 3),)
