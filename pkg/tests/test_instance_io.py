import numpy as np
import pytest

from _oracles import random_coloured_graph, random_interval_instance
from tropidom import build, parse_instance, write_instance
from tropidom.errors import ParseError

GOOD = """\
# legend 1 B
p tdgs 3 2 2
v 1 1
v 2 2
v 3 1
e 1 2
e 2 3
"""


def test_parse_round_trip_small():
    inst = parse_instance(GOOD)
    assert inst.graph.n == 3 and inst.graph.m == 2 and inst.graph.c == 2
    assert inst.legend == {1: "B"}
    assert inst.intervals is None
    assert write_instance(inst.graph, legend=inst.legend) == GOOD


def test_round_trip_random_graphs():
    rng = np.random.default_rng(23)
    for _ in range(80):
        n, edges, colours = random_coloured_graph(rng)
        g = build(n, edges, colours)
        inst = parse_instance(write_instance(g))
        assert inst.graph == g


def test_round_trip_with_intervals_and_legend():
    rng = np.random.default_rng(29)
    for _ in range(40):
        n, edges, colours, pairs = random_interval_instance(rng, n_max=8)
        g = build(n, edges, colours)
        legend = {k: f"label{k}" for k in range(1, g.c + 1)}
        text = write_instance(g, intervals=pairs, legend=legend, comments=["generated"])
        inst = parse_instance(text)
        assert inst.graph == g
        assert inst.intervals == pairs
        assert inst.legend == legend


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),  # missing header
        ("p tdgs 1 0 1\n\nv 1 1\n", 2),  # blank line
        ("v 1 1\np tdgs 1 0 1\n", 1),  # record before header
        ("p tdgs 1 0 1\np tdgs 1 0 1\nv 1 1\n", 2),  # duplicate header
        ("p cnf 1 0\n", 1),  # wrong format tag
        ("p tdgs 0 0 1\n", 1),  # n out of range
        ("p tdgs 2 1 1\nv 1 1\nv 1 1\ne 1 2\n", 3),  # duplicate vertex
        ("p tdgs 2 1 1\nv 1 1\nv 2 1\ne 2 1\n", 4),  # u >= v
        ("p tdgs 2 1 1\nv 1 1\nv 2 1\ne 1 3\n", 4),  # endpoint range
        ("p tdgs 2 1 2\nv 1 1\nv 2 3\ne 1 2\n", 3),  # colour out of range
        ("p tdgs 2 1 1\nv 1 1\nv 2 x\ne 1 2\n", 3),  # non-integer field
        ("p tdgs 2 1 1\nv 1 1\nv 2 1\ne 1 2\nq 1\n", 5),  # unknown tag
        ("p tdgs 2 1 1\nv 1 1\ne 1 2\n", 1),  # vertex count mismatch
        ("p tdgs 2 0 1\nv 1 1\nv 2 1\ne 1 2\n", 1),  # edge count mismatch
        ("p tdgs 2 1 1\nv 1 1\nv 2 1\ne 1 2\ni 1 0 2\n", 1),  # partial intervals
        ("p tdgs 2 1 1\nv 1 1\nv 2 1\ne 1 2\ni 1 3 2\ni 2 0 1\n", 5),  # l > r
        ("p tdgs 2 1 2\nv 1 2\nv 2 2\ne 1 2\n", 1),  # colour 1 unused
    ],
)
def test_rejections_carry_line_numbers(text, line):
    with pytest.raises(ParseError) as exc:
        parse_instance(text)
    assert exc.value.line_no == line


def test_duplicate_edge_reported_as_parse_error():
    text = "p tdgs 2 2 1\nv 1 1\nv 2 1\ne 1 2\ne 1 2\n"
    with pytest.raises(ParseError):
        parse_instance(text)


def test_header_colour_count_must_match():
    text = "p tdgs 2 1 2\nv 1 1\nv 2 1\ne 1 2\n"
    with pytest.raises(ParseError):
        parse_instance(text)


def test_writer_emits_lf_and_trailing_newline():
    g = build(2, [(1, 2)], [1, 2])
    text = write_instance(g)
    assert "\r" not in text
    assert text.endswith("\n") and not text.endswith("\n\n")
