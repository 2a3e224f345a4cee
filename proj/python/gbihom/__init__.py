"""Exact analysis of graded BiHom matrix algebras.

Reports are returned as plain dictionaries parsed from the canonical JSON
emitted by the C++ core.
"""

import json

from ._gbihom import Algebra, Error, SchemaError, catalog_names, primitive_root_of_unity, sha256_hex
from . import _gbihom

__all__ = [
    "Algebra",
    "Error",
    "SchemaError",
    "catalog",
    "catalog_names",
    "load",
    "validate",
    "support",
    "classes",
    "decompose",
    "simplicity",
    "document",
    "primitive_root_of_unity",
    "sha256_hex",
]


def load(text, lenient=False):
    """Parse an input document (JSON text). Returns (algebra, warnings)."""
    return _gbihom.load(text, lenient)


def catalog(name):
    return _gbihom.catalog(name)


def validate(algebra):
    return json.loads(algebra.validate_json())


def support(algebra):
    return json.loads(algebra.support_json())


def classes(algebra, verify_witnesses=False):
    return json.loads(algebra.classes_json(verify_witnesses))


def decompose(algebra, bases=False):
    return json.loads(algebra.decompose_json(bases))


def simplicity(algebra, oracle=False):
    return json.loads(algebra.simplicity_json(oracle))


def document(algebra):
    return json.loads(algebra.document_json())
