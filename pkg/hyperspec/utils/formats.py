"""
Hypergraph file formats: JSON normal form and the plain-text edge list
"""
import json
import logging
import math
import sys
from pathlib import Path
from typing import List, Optional, Type, TypeVar

from pydantic import BaseModel, ValidationError

from hyperspec.exceptions import FormatError
from hyperspec.models import Hypergraph
from hyperspec.schemas import HypergraphSchema
from hyperspec.services.hypergraph_service import GraphLike, as_hypergraph, build

logger = logging.getLogger(__name__)

Model = TypeVar("Model", bound=BaseModel)


def to_schema(graph: GraphLike) -> HypergraphSchema:
    g = as_hypergraph(graph)
    return HypergraphSchema(k=g.k, n=g.n, edges=[list(edge) for edge in g.edges])


def from_schema(schema: HypergraphSchema) -> Hypergraph:
    return build(schema.k, schema.n, schema.edges)


def dumps_hypergraph(graph: GraphLike) -> str:
    """Compact JSON with sorted edges, byte-stable for equal graphs."""
    return to_schema(graph).model_dump_json()


def dumps_text(graph: GraphLike) -> str:
    g = as_hypergraph(graph)
    lines = [f"{g.k} {g.n} {g.m}"] + [" ".join(str(v) for v in edge) for edge in g.edges]
    return "\n".join(lines) + "\n"


def _parse_text(text: str) -> Hypergraph:
    rows = [line.split() for line in text.strip().splitlines() if line.strip()]
    if not rows or len(rows[0]) != 3:
        raise FormatError("plain-text header must be 'k n m'")
    try:
        k, n, m = (int(token) for token in rows[0])
        edges = [[int(token) for token in row] for row in rows[1:]]
    except ValueError as e:
        raise FormatError(f"non-integer token in plain-text hypergraph: {e}") from e
    if len(edges) != m:
        raise FormatError(f"header announces {m} edges but {len(edges)} follow")
    return build(k, n, edges)


def loads_hypergraph(text: str) -> Hypergraph:
    """Parse JSON (object form) or the plain-text format, whichever the text is."""
    if text.lstrip().startswith("{"):
        return from_schema(load_model(text, HypergraphSchema))
    return _parse_text(text)


def load_model(text: str, model: Type[Model]) -> Model:
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise FormatError(f"invalid {model.__name__}: {e.errors()[0]['msg']}") from e


def read_source(source: str) -> str:
    """Text behind a CLI argument: '-' for stdin, inline JSON, or a file path."""
    if source == "-":
        return sys.stdin.read()
    if source.lstrip().startswith(("{", "[")):
        return source
    path = Path(source)
    if not path.is_file():
        raise FormatError(f"input file {source} does not exist")
    return path.read_text(encoding="utf-8")


def load_hypergraph(source: str) -> Hypergraph:
    graph = loads_hypergraph(read_source(source))
    logger.debug(f"loaded {graph!r} from {source if len(source) < 40 else source[:37] + '...'}")
    return graph


FLOAT_DIGITS = 17


def format_float(value: float) -> str:
    """A float with 17 significant digits, always spelled as a JSON/CSV real."""
    if not math.isfinite(value):
        return json.dumps(value)
    text = format(value, f".{FLOAT_DIGITS}g")
    if "." not in text and "e" not in text:
        text += ".0"
    return text


def _wrap(opening: str, closing: str, items: List[str], indent: Optional[int], depth: int) -> str:
    if not items:
        return opening + closing
    if indent is None:
        return opening + ",".join(items) + closing
    pad = "\n" + " " * (indent * (depth + 1))
    return opening + pad + ("," + pad).join(items) + "\n" + " " * (indent * depth) + closing


def _render(value, indent: Optional[int], depth: int) -> str:
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, dict):
        colon = ":" if indent is None else ": "
        items = [f"{json.dumps(str(key))}{colon}{_render(item, indent, depth + 1)}" for key, item in value.items()]
        return _wrap("{", "}", items, indent, depth)
    if isinstance(value, (list, tuple)):
        return _wrap("[", "]", [_render(item, indent, depth + 1) for item in value], indent, depth)
    return json.dumps(value)


def dump_json(payload, indent: Optional[int] = 2) -> str:
    """JSON text with floats at 17 significant digits; compact when indent is None."""
    return _render(payload, indent, 0)
