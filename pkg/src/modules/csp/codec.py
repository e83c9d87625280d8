"""Canonical JSON codec for instances and assignments."""

import pydantic

from src.core.exceptions import ParseError, ValidationError
from src.modules.csp.models import Assignment, Bipartition, Constraint, CspInstance, PartialAssignment
from src.schemas.instance import AssignmentSchema, InstanceSchema
from src.shared.utils import canonical_json


def json_location(loc: tuple) -> str:
    """('edges', 3, 'allowed') -> '$.edges[3].allowed'."""
    path = "$"
    for part in loc:
        path += f"[{part}]" if isinstance(part, int) else f".{part}"
    return path


def raise_parse_error(exc: pydantic.ValidationError) -> None:
    first = exc.errors()[0]
    raise ParseError(first["msg"], location=json_location(tuple(first["loc"]))) from exc


def instance_to_dict(inst: CspInstance) -> dict:
    bipartition = None
    if inst.bipartition is not None:
        bipartition = {"A": list(inst.bipartition.left), "B": list(inst.bipartition.right)}
    return {
        "n": inst.n,
        "alphabets": list(inst.alphabets),
        "bipartition": bipartition,
        "edges": [
            {"id": e.id, "u": e.u, "v": e.v, "allowed": [list(p) for p in sorted(e.allowed)]}
            for e in inst.edges
        ],
    }


def instance_from_schema(doc: InstanceSchema) -> CspInstance:
    bipartition = None
    if doc.bipartition is not None:
        bipartition = Bipartition(left=tuple(sorted(doc.bipartition.A)), right=tuple(sorted(doc.bipartition.B)))
    edges = []
    for e in doc.edges:
        allowed = frozenset(e.allowed)
        if len(allowed) != len(e.allowed):
            raise ParseError(f"Repeated allowed pair in edge {e.id}", location=f"$.edges[id={e.id}].allowed")
        edges.append(Constraint(id=e.id, u=e.u, v=e.v, allowed=allowed))
    try:
        return CspInstance(
            n=doc.n, alphabets=tuple(doc.alphabets), edges=tuple(edges), bipartition=bipartition
        )
    except ValidationError as exc:
        raise ParseError(exc.message, location=f"$.{exc.field}" if exc.field else "$") from exc


def serialize(inst: CspInstance) -> str:
    """Canonical text: sorted keys, edges by id, allowed pairs sorted."""
    return canonical_json(instance_to_dict(inst))


def parse(text: str) -> CspInstance:
    try:
        doc = InstanceSchema.model_validate_json(text)
    except pydantic.ValidationError as exc:
        raise_parse_error(exc)
    return instance_from_schema(doc)


def serialize_assignment(labels: Assignment | PartialAssignment) -> str:
    return canonical_json({"labels": list(labels.labels)})


def parse_assignment(text: str) -> Assignment | PartialAssignment:
    """Assignment when every label is set, PartialAssignment otherwise."""
    try:
        doc = AssignmentSchema.model_validate_json(text)
    except pydantic.ValidationError as exc:
        raise_parse_error(exc)
    if any(x is None for x in doc.labels):
        return PartialAssignment(tuple(doc.labels))
    return Assignment(tuple(doc.labels))
