import json

import numpy as np
import pytest

from hyperlambda.models import Hypergraph
from hyperlambda.utils.constructions import GALLERY, build, fano
from hyperlambda.utils.io_utils import (HypergraphFormatError, graph_from_json, graph_to_json,
                                        parse_hg, read_graph, serialize_hg, write_graph)

GALLERY_SAMPLES = ["K:5,3", "Kminus:4,3", "edge:4", "star:5", "S2t:3", "path:3", "cycle:3",
                   "F5", "O:3", "fano"]


def test_parse_with_comments_and_blank_lines():
    text = "# the generalized triangle\n\n3 5\n1 2 3\n# middle\n2 1 4\n3 4 5\n"
    graph = parse_hg(text)
    assert graph == Hypergraph(r=3, n=5, edges=[(1, 2, 3), (1, 2, 4), (3, 4, 5)])


def test_serialize_is_sorted():
    graph = Hypergraph(r=3, n=4, edges=[(4, 3, 2), (3, 2, 1)])
    assert serialize_hg(graph, comment="sample") == "# sample\n3 4\n1 2 3\n2 3 4\n"


@pytest.mark.parametrize("text, line, message", [
    ("3 4\n1 2\n", 2, "expected 3 distinct"),
    ("3 4\n1 1 2\n", 2, "expected 3 distinct"),
    ("3 4\n1 2 5\n", 2, "outside 1..4"),
    ("3 4\n1 2 3\n3 2 1\n", 3, "duplicate edge"),
    ("3\n1 2 3\n", 1, "header"),
    ("3 4\n1 2 x\n", 2, "non-integer"),
])
def test_parse_errors_carry_line_numbers(text, line, message):
    with pytest.raises(HypergraphFormatError, match=message) as info:
        parse_hg(text)
    assert info.value.line == line


def test_missing_header():
    with pytest.raises(HypergraphFormatError, match="missing"):
        parse_hg("# nothing here\n")


@pytest.mark.parametrize("name", GALLERY_SAMPLES)
def test_gallery_round_trip(name):
    graph = build(name)
    assert parse_hg(serialize_hg(graph)) == graph


def test_random_round_trip():
    rng = np.random.default_rng(11)
    for _ in range(200):
        n = int(rng.integers(0, 9))
        r = int(rng.integers(1, 4))
        edges = [tuple(int(v) for v in sorted(rng.choice(np.arange(1, n + 1), r, replace=False)))
                 for _ in range(int(rng.integers(0, 5)))] if n >= r else []
        graph = Hypergraph(r=r, n=n, edges=sorted(set(edges)))
        assert parse_hg(serialize_hg(graph)) == graph


def test_json_mirror(tmp_path):
    graph = fano()
    assert graph_from_json(graph_to_json(graph)) == graph
    path = tmp_path / "fano.json"
    write_graph(graph, str(path))
    assert json.loads(path.read_text())["n"] == 7
    assert read_graph(str(path)) == graph


def test_read_and_write_hg(tmp_path):
    path = tmp_path / "nested" / "k5.hg"
    write_graph(build("K:5,3"), str(path), comment="K_5^3")
    assert read_graph(str(path)) == build("K:5,3")
    assert path.read_text().startswith("# K_5^3\n3 5\n")


def test_bad_json_is_a_format_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"r": 3, "n": 2, "edges": [[1, 2, 3]]}')
    with pytest.raises(HypergraphFormatError):
        read_graph(str(path))
    path.write_text("{not json")
    with pytest.raises(HypergraphFormatError, match="invalid JSON"):
        read_graph(str(path))


def test_gallery_names_are_listed():
    assert {"K", "Kminus", "edge", "star", "S2t", "path", "cycle", "F5", "O", "Fr",
            "fano"} <= set(GALLERY)
