import pytest

from gangulate.convex import GAngulation, Instance, edge
from gangulate.errors import InadmissibleParams
from gangulate.oracle import (
    BlockingOracle,
    count_gangulations,
    enumerate_gangulations,
    exists_gangulation,
    find_gangulation,
    solve,
    validate_gangulation,
)
from oracles import brute_force_gangulations, catalan, fuss_catalan

FSTAR_6_4 = frozenset({(0, 3), (1, 4), (2, 5)})


def test_exists():
    assert not exists_gangulation(Instance(6, 4, FSTAR_6_4))
    assert exists_gangulation(Instance(6, 4))
    assert exists_gangulation(Instance(8, 4, frozenset({(0, 4), (1, 5), (2, 6), (3, 7)})))


@pytest.mark.parametrize(
    "n,g,forbidden,count",
    [(6, 3, (), 14), (6, 4, (), 3), (6, 4, [(0, 3)], 2), (4, 4, (), 1), (3, 3, (), 1), (10, 4, (), 55), (12, 4, (), 273)],
)
def test_count(n, g, forbidden, count):
    assert count_gangulations(Instance(n, g, frozenset(forbidden))) == count


def test_count_inadmissible():
    with pytest.raises(InadmissibleParams):
        count_gangulations(Instance(7, 4))


def test_forbidden_boundary_edge_blocks_everything():
    assert count_gangulations(Instance(6, 4, frozenset({(0, 5)}))) == 0


@pytest.mark.parametrize("g,t", [(3, 5), (4, 4), (5, 3), (6, 3), (7, 2)])
def test_count_matches_fuss_catalan(g, t):
    n = g + t * (g - 2)
    assert count_gangulations(Instance(n, g)) == fuss_catalan(g, t)


def test_count_matches_catalan():
    for n in range(3, 12):
        assert count_gangulations(Instance(n, 3)) == catalan(n - 2)


def test_find():
    w = find_gangulation(Instance(6, 4, frozenset({(0, 3), (1, 4)})))
    assert w.diagonals == {(2, 5)}
    assert find_gangulation(Instance(6, 4, FSTAR_6_4)) is None
    w = find_gangulation(Instance(4, 4))
    assert w.diagonals == frozenset() and w.faces == ((0, 1, 2, 3),)


def test_find_is_lexicographic_fan():
    # frozen: least face at each split gives the fan from v7
    assert find_gangulation(Instance(8, 4)).sorted_diagonals() == [(2, 7), (4, 7)]


def test_enumerate_matches_brute_force():
    inst = Instance(10, 4, frozenset({(0, 3), (2, 7), (4, 9)}))
    got = {a.diagonals for a in enumerate_gangulations(inst)}
    assert got == set(brute_force_gangulations(10, 4, inst.forbidden))
    assert len(got) == count_gangulations(inst)


def test_enumerate_distinct():
    all_ = list(enumerate_gangulations(Instance(9, 3)))
    assert len(all_) == len({a.diagonals for a in all_}) == catalan(7)


def test_solve():
    r = solve(Instance(6, 4, frozenset({(0, 3)})))
    assert r.exists and r.count == 2 and r.witness is not None
    assert solve(Instance(6, 4, FSTAR_6_4)) == solve(Instance(6, 4, FSTAR_6_4), witness=False)


def test_validate():
    ok = GAngulation.from_diagonals(8, 4, [(2, 5), (2, 7)])
    assert validate_gangulation(Instance(8, 4), ok)
    assert not validate_gangulation(Instance(8, 4, frozenset({(2, 5)})), ok)
    bad = validate_gangulation(Instance(8, 4), GAngulation.from_diagonals(8, 4, [(0, 4)]))
    assert not bad and bad.reasons


def test_validate_rejects_crossing_and_shape():
    crossing = GAngulation(8, 4, frozenset({edge(0, 3), edge(1, 6)}), ((0, 1, 2, 3),))
    assert not validate_gangulation(Instance(8, 4), crossing)
    assert not validate_gangulation(Instance(6, 4), GAngulation.from_diagonals(8, 4, []))


def test_blocking_oracle_agrees_with_dp():
    bo = BlockingOracle(8, 4)
    assert len(bo.masks) == 12
    for f in [(), [(0, 3)], [(0, 3), (1, 4), (2, 5), (3, 6), (4, 7)], [(0, 4), (1, 5)]]:
        inst = Instance(8, 4, frozenset(edge(*e) for e in f))
        assert bo.count_mask(bo.mask(f)) == count_gangulations(inst)
        assert bo.blocked(f) == (count_gangulations(inst) == 0)
