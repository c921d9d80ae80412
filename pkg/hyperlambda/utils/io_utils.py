import json
import logging
import os
from typing import Any, Dict

from pydantic import ValidationError

from ..models import Hypergraph


class HypergraphFormatError(ValueError):
    """Raised when a hypergraph file cannot be parsed."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def parse_hg(text: str) -> Hypergraph:
    """Parse the ".hg" text format.

    Lines starting with '#' are comments, the first remaining line is "r n",
    and every following non-empty line is one edge of r distinct integers.

    Args:
        text (str): File contents.

    Returns:
        Hypergraph: The parsed graph.

    Raises:
        HypergraphFormatError: On malformed headers, bad edges or duplicates.
    """
    header = None
    edges = []
    seen = set()
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [int(token) for token in line.split()]
        except ValueError as e:
            raise HypergraphFormatError(f"non-integer token in {line!r}", number) from e
        if header is None:
            if len(values) != 2 or values[0] < 1 or values[1] < 0:
                raise HypergraphFormatError(f"expected header 'r n', got {line!r}", number)
            header = values
            continue
        r, n = header
        if len(values) != r or len(set(values)) != r:
            raise HypergraphFormatError(f"expected {r} distinct vertices, got {line!r}", number)
        if any(v < 1 or v > n for v in values):
            raise HypergraphFormatError(f"vertex outside 1..{n} in {line!r}", number)
        edge = tuple(sorted(values))
        if edge in seen:
            raise HypergraphFormatError(f"duplicate edge {line!r}", number)
        seen.add(edge)
        edges.append(edge)
    if header is None:
        raise HypergraphFormatError("missing 'r n' header")
    return Hypergraph(r=header[0], n=header[1], edges=edges)


def serialize_hg(graph: Hypergraph, comment: str = "") -> str:
    lines = [f"# {part}" for part in comment.splitlines() if part]
    lines.append(f"{graph.r} {graph.n}")
    lines.extend(" ".join(str(v) for v in e) for e in graph.edges)
    return "\n".join(lines) + "\n"


def graph_to_json(graph: Hypergraph) -> Dict[str, Any]:
    return {"r": graph.r, "n": graph.n, "edges": [list(e) for e in graph.edges]}


def graph_from_json(data: Dict[str, Any]) -> Hypergraph:
    try:
        return Hypergraph(r=data["r"], n=data["n"], edges=[tuple(e) for e in data["edges"]])
    except (KeyError, TypeError) as e:
        raise HypergraphFormatError(f"JSON hypergraph is missing a field: {e}") from e
    except ValidationError as e:
        raise HypergraphFormatError(str(e)) from e


def read_graph(path: str) -> Hypergraph:
    """Read a hypergraph from ``path`` (".json" uses the JSON mirror)."""
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    logging.debug("Read %d bytes from %s", len(text), path)
    if path.lower().endswith(".json"):
        try:
            return graph_from_json(json.loads(text))
        except json.JSONDecodeError as e:
            raise HypergraphFormatError(f"invalid JSON: {e.msg}", e.lineno) from e
    try:
        return parse_hg(text)
    except ValidationError as e:
        raise HypergraphFormatError(str(e)) from e


def write_graph(graph: Hypergraph, path: str, comment: str = "") -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        if path.lower().endswith(".json"):
            json.dump(graph_to_json(graph), f, indent=2)
            f.write("\n")
        else:
            f.write(serialize_hg(graph, comment))
    logging.info("Wrote %s to %s", graph, path)
