import re

from gangulate.convex import Instance
from gangulate.oracle import find_gangulation
from gangulate.render import render_svg, vertex_xy


def test_vertex_zero_at_top_clockwise():
    assert vertex_xy(4, 0) == ("0.0000", "-1.0000")
    assert vertex_xy(4, 1) == ("1.0000", "0.0000")
    assert vertex_xy(4, 3) == ("-1.0000", "0.0000")


def test_fig1a_three_forbidden_chords(instance_fixture):
    svg = render_svg(instance_fixture("fig1a.txt"))
    assert svg.count('class="forbidden"') == 3
    assert svg.count('class="boundary"') == 6
    assert 'class="witness"' not in svg
    assert svg == render_svg(instance_fixture("fig1a.txt"))


def test_witness_layer():
    inst = Instance(8, 4, frozenset({(0, 4)}))
    svg = render_svg(inst, find_gangulation(inst))
    assert svg.count('class="witness"') == 2
    assert svg.count('class="forbidden"') == 1


def test_labels():
    svg = render_svg(Instance(6, 3))
    labels = re.findall(r'<text class="label"[^>]*>v<tspan[^>]*>(\d+)</tspan></text>', svg)
    assert labels == [str(v) for v in range(6)]
    assert "-0.0000" not in svg
