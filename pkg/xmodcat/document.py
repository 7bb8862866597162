"""
The crossed-module document: a JSON object

.. code-block:: json

    {
      "name": "d_z2",
      "x1": {"table": [[0, 1], [1, 0]]},
      "x2": {"table": [[0, 1], [1, 0]]},
      "action": [[0, 1], [0, 1]],
      "boundary": [0, 1]
    }

with ``action[g][m]`` the index of ``m^g`` and ``boundary[m]`` the index of ``∂m``. Index 0 is the identity of both
groups.
"""
from __future__ import annotations

import dataclasses
import hashlib
import importlib.resources
import json
import logging
import os
import typing

from xmodcat import corpus
from xmodcat.crossed_module import CrossedModule, crossed_module
from xmodcat.exceptions import DocumentError, DocumentSyntaxError, ShapeError, CorpusNotFoundError
from xmodcat.group_core import group_from_table

logger = logging.getLogger(__name__)

_DATA = "data"


@dataclasses.dataclass(frozen=True)
class XModDocument:
    x1_table: tuple
    x2_table: tuple
    action: tuple
    boundary: tuple
    name: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "x1": {"table": [list(row) for row in self.x1_table]},
            "x2": {"table": [list(row) for row in self.x2_table]},
            "action": [list(row) for row in self.action],
            "boundary": list(self.boundary),
        }


def _index_array(value: typing.Any, field: str, length: int, bound: int) -> tuple:
    if not isinstance(value, list) or len(value) != length:
        raise ShapeError(field, f"expected a list of {length} indices")
    for position, entry in enumerate(value):
        if isinstance(entry, bool) or not isinstance(entry, int):
            raise ShapeError(f"{field}[{position}]", f"expected an integer, got {entry!r}")
        if not 0 <= entry < bound:
            raise ShapeError(f"{field}[{position}]", f"index {entry} out of range 0..{bound - 1}")
    return tuple(value)


def _index_matrix(value: typing.Any, field: str, rows: int, cols: int, bound: int) -> tuple:
    if not isinstance(value, list) or len(value) != rows:
        raise ShapeError(field, f"expected {rows} rows")
    return tuple(_index_array(row, f"{field}[{i}]", cols, bound) for i, row in enumerate(value))


def _table(data: dict, key: str) -> tuple:
    group = data.get(key)
    if not isinstance(group, dict) or "table" not in group:
        raise ShapeError(key, 'expected an object with a "table" field')
    table = group["table"]
    if not isinstance(table, list) or not table:
        raise ShapeError(f"{key}.table", "expected a non-empty square array")
    return _index_matrix(table, f"{key}.table", len(table), len(table), len(table))


def parse(text: str) -> XModDocument:
    """
    Arguments:
        text (str): The document.
    Returns:
        XModDocument: The shape-checked document; group and crossed-module axioms are checked by
        :func:`to_crossed_module`.
    Raises:
        DocumentSyntaxError: If the text is not JSON (carries the 1-based line).
        ShapeError: If a field is missing or has the wrong shape (carries the field path).
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentSyntaxError(err.msg, err.lineno) from err

    if not isinstance(data, dict):
        raise ShapeError("<document>", "expected a JSON object")
    name = data.get("name", "")
    if not isinstance(name, str):
        raise ShapeError("name", "expected a string")

    x1, x2 = _table(data, "x1"), _table(data, "x2")
    if "action" not in data:
        raise ShapeError("action", "missing")
    if "boundary" not in data:
        raise ShapeError("boundary", "missing")
    action = _index_matrix(data["action"], "action", len(x1), len(x2), len(x2))
    boundary = _index_array(data["boundary"], "boundary", len(x2), len(x1))
    return XModDocument(x1_table=x1, x2_table=x2, action=action, boundary=boundary, name=name)


def to_crossed_module(document: XModDocument) -> CrossedModule:
    """
    Raises:
        NotAGroup, NotAnAction, NotAutomorphism, NotAHomomorphism: From component validation.
        EquivarianceViolation, PeifferViolation: From the crossed-module axioms.
    """
    x1 = group_from_table(document.x1_table)
    x2 = group_from_table(document.x2_table)
    return crossed_module(x1, x2, document.action, document.boundary, name=document.name)


def from_crossed_module(x: CrossedModule, name: str = None) -> XModDocument:
    return XModDocument(
        x1_table=tuple(tuple(int(v) for v in row) for row in x.x1.table),
        x2_table=tuple(tuple(int(v) for v in row) for row in x.x2.table),
        action=tuple(tuple(int(v) for v in row) for row in x.mu.perm),
        boundary=tuple(int(v) for v in x.boundary.map),
        name=x.name if name is None else name,
    )


def dump_document(x: CrossedModule, name: str = None) -> str:
    """Serializes a crossed module to a document that re-parses to the same tables."""
    return json.dumps(from_crossed_module(x, name).to_dict(), indent=2, sort_keys=True) + "\n"


def bundled_names() -> list[str]:
    files = importlib.resources.files(__package__) / _DATA
    return sorted(entry.name[: -len(".json")] for entry in files.iterdir() if entry.name.endswith(".json"))


def read_source(source: str) -> str:
    """
    Resolves ``source`` as a path, then as a bundled document, then as a corpus member, and returns document text.

    Raises:
        DocumentError: If the file is not UTF-8 text.
        CorpusNotFoundError: If nothing matches.
    """
    if os.path.isfile(source):
        try:
            with open(source, encoding="utf-8") as f:
                return f.read()
        except UnicodeDecodeError as err:
            raise DocumentError(f"{source} is not UTF-8 text (byte {err.start})") from err

    bundled = importlib.resources.files(__package__) / _DATA / f"{source}.json"
    if bundled.is_file():
        logger.debug("resolved %s to a bundled document", source)
        return bundled.read_text(encoding="utf-8")

    try:
        x = corpus.lookup(source)
    except CorpusNotFoundError as err:
        raise CorpusNotFoundError(f"{source} is neither a file nor a bundled document") from err
    logger.debug("resolved %s to a corpus member", source)
    return dump_document(x, name=source)


def load(source: str) -> tuple[CrossedModule, str]:
    """
    Returns:
        tuple[CrossedModule, str]: The validated crossed module and the document text it was read from.
    """
    text = read_source(source)
    return to_crossed_module(parse(text)), text


def input_hash(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()
