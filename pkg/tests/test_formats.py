import pytest
from hypothesis import given

from strategies import connected_graphs
from tdcolor.coloring import verify_certificate
from tdcolor.errors import FormatError
from tdcolor.families import complete, cycle, path
from tdcolor.formats import (
    format_certificate,
    format_edge_list,
    parse_certificate,
    parse_dimacs,
    parse_edge_list,
    parse_graph,
    read_graph,
    write_graph,
)
from tdcolor.solver import td_chromatic_number


def test_edge_list_sorted_output():
    text = format_edge_list(cycle(4))
    assert text == "4 4\n0 1\n0 3\n1 2\n2 3\n"


def test_edge_list_comments_and_blanks():
    text = "# a triangle\n\n3 3\n0 1  # first\n1 2\n\n2 0\n"
    assert parse_edge_list(text) == complete(3)


@pytest.mark.parametrize(
    "text",
    ["", "3\n0 1\n", "3 2\n0 1\n", "3 1\n0 1 2\n", "3 1\n0 x\n", "3 2\n0 1\n1 0\n", "2 1\n0 0\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(ValueError):
        parse_edge_list(text)


@given(connected_graphs(1, 8))
def test_edge_list_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


def test_file_round_trip(tmp_path):
    p = tmp_path / "g.edges"
    write_graph(path(5), p)
    assert read_graph(p) == path(5)


def test_dimacs():
    text = "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"
    assert parse_dimacs(text) == complete(3)
    assert parse_graph(text) == complete(3)
    with pytest.raises(FormatError):
        parse_dimacs("e 1 2\n")
    with pytest.raises(FormatError):
        parse_dimacs("c only comments\n")
    with pytest.raises(FormatError):
        parse_dimacs("p edge 2 1\nx 1 2\n")


def test_certificate_round_trip():
    g = cycle(7)
    cert = td_chromatic_number(g).certificate
    text = format_certificate(cert)
    assert text.startswith(f"k={cert.k}\n")
    assert len(text.splitlines()) == g.n + 1
    back = parse_certificate(text)
    assert back == cert
    verify_certificate(g, back, cert.k)


@pytest.mark.parametrize(
    "text",
    ["0 1 2\n", "k=x\n0 1 1\n", "k=2\n0 1\n", "k=2\n0 1 2\n0 2 1\n", "k=2\n1 1 2\n2 2 1\n", "k=3\n0 1 2\n1 2 1\n"],
)
def test_certificate_format_errors(text):
    with pytest.raises(FormatError):
        parse_certificate(text)
