"""Text document formats: groupoid, record, digraph and instance files.

All documents are UTF-8 JSON with fixed key names; the same syntax is used
by the CLI's machine output, so results round-trip back in as inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .adapters import Digraph, Record
from .errors import LoadError
from .groupoid import FiniteGroupoid, Pair


@dataclass(frozen=True)
class GroupoidDocument:
    groupoid: FiniteGroupoid
    order_pairs: tuple[Pair, ...] | None = None


@dataclass(frozen=True)
class RecordsDocument:
    records: tuple[Record, ...]
    key_attributes: tuple[str, ...]


@dataclass(frozen=True)
class InstanceDocument:
    element_ids: tuple[str, ...] | None = None
    records: tuple[Record, ...] | None = None


def _read_json(path) -> object:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LoadError(path, str(exc)) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise LoadError(path, exc.msg, exc.lineno, exc.colno) from exc


def _expect(condition: bool, path, message: str):
    if not condition:
        raise LoadError(path, message)


def load_groupoid(path) -> GroupoidDocument:
    """Parse an explicit groupoid document.

    Keys: ``elements`` (array of strings) and ``compositions`` (array of
    ``[x, y, result]`` triples).  A pair occurring twice is a load error;
    pairs absent from ``compositions`` are undefined.  An optional ``order``
    key supplies a user relation as an array of ``[p, q]`` pairs.
    """
    data = _read_json(path)
    _expect(isinstance(data, dict), path, "top-level value must be an object")
    _expect("elements" in data, path, "missing key 'elements'")
    _expect("compositions" in data, path, "missing key 'compositions'")
    elements = data["elements"]
    _expect(
        isinstance(elements, list) and all(isinstance(e, str) for e in elements),
        path,
        "'elements' must be an array of strings",
    )
    compositions = data["compositions"]
    _expect(isinstance(compositions, list), path, "'compositions' must be an array")
    table = {}
    for i, entry in enumerate(compositions):
        _expect(
            isinstance(entry, list)
            and len(entry) == 3
            and all(isinstance(e, str) for e in entry),
            path,
            f"compositions[{i}] must be a [x, y, result] triple of strings",
        )
        x, y, value = entry
        _expect(
            (x, y) not in table,
            path,
            f"compositions[{i}] repeats the pair ({x!r}, {y!r})",
        )
        table[(x, y)] = value
    try:
        groupoid = FiniteGroupoid(tuple(elements), table)
    except ValueError as exc:
        raise LoadError(path, str(exc)) from exc

    order_pairs = None
    if "order" in data:
        raw = data["order"]
        _expect(isinstance(raw, list), path, "'order' must be an array of [p, q] pairs")
        pairs = []
        for i, entry in enumerate(raw):
            _expect(
                isinstance(entry, list)
                and len(entry) == 2
                and all(isinstance(e, str) for e in entry),
                path,
                f"order[{i}] must be a [p, q] pair of strings",
            )
            p, q = entry
            _expect(p in groupoid and q in groupoid, path, f"order[{i}] leaves the carrier")
            pairs.append((p, q))
        order_pairs = tuple(pairs)
    return GroupoidDocument(groupoid, order_pairs)


def groupoid_to_document(g: FiniteGroupoid, order_pairs=None) -> dict:
    doc = {
        "elements": list(g.elements),
        "compositions": sorted([x, y, v] for (x, y), v in g.table.items()),
    }
    if order_pairs:
        doc["order"] = sorted([p, q] for p, q in order_pairs)
    return doc


def dump_groupoid(g: FiniteGroupoid, order_pairs=None) -> str:
    return json.dumps(groupoid_to_document(g, order_pairs), indent=2) + "\n"


def _parse_record(obj, path, where) -> Record:
    _expect(isinstance(obj, dict), path, f"{where} must be an attribute object")
    for name, values in obj.items():
        _expect(
            isinstance(values, list) and values and all(isinstance(v, str) for v in values),
            path,
            f"{where}.{name} must be a non-empty array of strings",
        )
    try:
        return Record.from_dict(obj)
    except ValueError as exc:
        raise LoadError(path, f"{where}: {exc}") from exc


def load_records(path) -> RecordsDocument:
    """Parse a records document: ``records`` plus ``key_attributes``."""
    data = _read_json(path)
    _expect(isinstance(data, dict), path, "top-level value must be an object")
    _expect("records" in data, path, "missing key 'records'")
    _expect("key_attributes" in data, path, "missing key 'key_attributes'")
    keys = data["key_attributes"]
    _expect(
        isinstance(keys, list) and keys and all(isinstance(k, str) for k in keys),
        path,
        "'key_attributes' must be a non-empty array of strings",
    )
    raw = data["records"]
    _expect(isinstance(raw, list) and raw, path, "'records' must be a non-empty array")
    records = tuple(
        _parse_record(entry, path, f"records[{i}]") for i, entry in enumerate(raw)
    )
    return RecordsDocument(records, tuple(keys))


def load_digraph(path) -> Digraph:
    """Parse a digraph document: ``nodes`` plus ``arcs``."""
    data = _read_json(path)
    _expect(isinstance(data, dict), path, "top-level value must be an object")
    _expect("nodes" in data, path, "missing key 'nodes'")
    _expect("arcs" in data, path, "missing key 'arcs'")
    nodes = data["nodes"]
    _expect(
        isinstance(nodes, list) and all(isinstance(n, str) for n in nodes),
        path,
        "'nodes' must be an array of strings",
    )
    arcs = data["arcs"]
    _expect(isinstance(arcs, list), path, "'arcs' must be an array of [u, v] pairs")
    parsed = []
    for i, entry in enumerate(arcs):
        _expect(
            isinstance(entry, list)
            and len(entry) == 2
            and all(isinstance(e, str) for e in entry),
            path,
            f"arcs[{i}] must be a [u, v] pair of strings",
        )
        parsed.append((entry[0], entry[1]))
    try:
        return Digraph(tuple(nodes), tuple(parsed))
    except ValueError as exc:
        raise LoadError(path, str(exc)) from exc


def load_instance(path) -> InstanceDocument:
    """Parse an instance document: ids for explicit groupoids, or inline
    record objects for the record adapter."""
    data = _read_json(path)
    _expect(isinstance(data, dict), path, "top-level value must be an object")
    _expect("instance" in data, path, "missing key 'instance'")
    members = data["instance"]
    _expect(isinstance(members, list) and members, path, "'instance' must be a non-empty array")
    if all(isinstance(m, str) for m in members):
        return InstanceDocument(element_ids=tuple(members))
    records = tuple(
        _parse_record(entry, path, f"instance[{i}]") for i, entry in enumerate(members)
    )
    return InstanceDocument(records=records)
