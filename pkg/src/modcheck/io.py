"""JSON loading and saving of algebras and modules against a fixed schema.

Inputs are validated with jsonschema before any construction happens, so
a malformed file fails with a path into the document rather than a deep
stack trace.  Serialization always normalizes to the explicit form
(structure constants + action matrices), which makes round trips exact.
"""

from __future__ import annotations

import json
from importlib import resources

import jsonschema

from .algebra import Algebra, algebra_from_structure_constants, shaped_matrix_algebra
from .errors import SchemaError
from .field import PrimeField
from .modules import RepModule, row_module

SCHEMA_VERSION = 1


def _schema() -> dict:
    text = resources.files("modcheck.data").joinpath("module.schema.json").read_text()
    return json.loads(text)


_SCHEMA_CACHE = None


def validate_module_json(doc: dict) -> None:
    global _SCHEMA_CACHE
    if _SCHEMA_CACHE is None:
        _SCHEMA_CACHE = _schema()
    try:
        jsonschema.validate(doc, _SCHEMA_CACHE)
    except jsonschema.ValidationError as e:
        raise SchemaError(e.message, path=list(e.absolute_path)) from e


def algebra_from_json(doc: dict, p: int) -> Algebra:
    field = PrimeField(p)
    if doc["kind"] == "shaped_matrix":
        return shaped_matrix_algebra(field, tuple(tuple(r) for r in doc["shape"]))
    return algebra_from_structure_constants(
        field, doc["dim"], doc["constants"], doc["unity"]
    )


def module_from_json(doc: dict) -> RepModule:
    """Build the module described by a validated document."""
    validate_module_json(doc)
    p = doc["field"]["p"]
    algebra = algebra_from_json(doc["algebra"], p)
    mdoc = doc["module"]
    if mdoc["kind"] == "row":
        return row_module(algebra, mdoc["row"])
    actions = tuple(
        tuple(tuple(int(x) % p for x in row) for row in mat) for mat in mdoc["actions"]
    )
    if len(actions) != algebra.dim:
        raise SchemaError(
            f"expected {algebra.dim} action matrices, got {len(actions)}",
            path=["module", "actions"],
        )
    return RepModule(algebra, mdoc["dim"], actions)


def module_to_json(M: RepModule, name: str | None = None) -> dict:
    """Serialize in the normalized explicit form."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "field": {"p": M.algebra.field.p},
        "algebra": {
            "kind": "structure_constants",
            "dim": M.algebra.dim,
            "constants": [[list(v) for v in row] for row in M.algebra.constants],
            "unity": list(M.algebra.unity),
        },
        "module": {
            "kind": "action_matrices",
            "dim": M.dim,
            "actions": [[list(row) for row in mat] for mat in M.actions],
        },
    }
    if name is not None:
        doc["name"] = name
    return doc


def load_module(path: str) -> tuple:
    """(module, document) from a JSON file; schema errors carry the path."""
    with open(path) as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as e:
            raise SchemaError(f"not valid JSON: {e}", path=[]) from e
    return module_from_json(doc), doc


def save_module(M: RepModule, path: str, name: str | None = None) -> None:
    with open(path, "w") as f:
        json.dump(module_to_json(M, name=name), f, indent=1, sort_keys=True)
        f.write("\n")
