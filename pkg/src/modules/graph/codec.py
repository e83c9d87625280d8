"""Graph JSON codec: {"n": int, "edges": [[u, v], ...]}."""

import pydantic

from src.core.exceptions import ParseError, ValidationError
from src.modules.csp.codec import raise_parse_error
from src.modules.graph.models import SimpleGraph
from src.schemas.instance import GraphSchema
from src.shared.utils import canonical_json


def graph_to_dict(g: SimpleGraph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def serialize_graph(g: SimpleGraph) -> str:
    return canonical_json(graph_to_dict(g))


def parse_graph(text: str) -> SimpleGraph:
    try:
        doc = GraphSchema.model_validate_json(text)
    except pydantic.ValidationError as exc:
        raise_parse_error(exc)
    if len({(min(e), max(e)) for e in doc.edges}) != len(doc.edges):
        raise ParseError("Parallel edges are not allowed in a simple graph", location="$.edges")
    try:
        return SimpleGraph.from_edges(doc.n, doc.edges)
    except ValidationError as exc:
        raise ParseError(exc.message, location=f"$.{exc.field}") from exc
