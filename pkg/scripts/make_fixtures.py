#!/usr/bin/env python3
"""Regenerate the fixtures/ directory from the built-in constructions."""

from __future__ import annotations

import json
from pathlib import Path

from matchmerge import builtin, dump_groupoid

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

GROUPOIDS = {
    "p1.json": ("p1", None),
    "q2.json": ("q2", None),
    "max10.json": ("maxnat", 10),
    "chain12.json": ("chain", 12),
    "uchain12.json": ("uchain", 12),
    "twoblock.json": ("twoblock", None),
    "leftzero2.json": ("leftzero2", None),
    "unit.json": ("unit", None),
}

# Three records all sharing one name value: every pair matches, the closure
# has all seven non-empty unions, and the resolution is the single total merge.
RECORDS = {
    "records.json": {
        "key_attributes": ["name"],
        "records": [
            {"name": ["ann"], "phone": ["p1"]},
            {"name": ["ann"], "mail": ["m1"]},
            {"name": ["ann"], "home": ["h1"]},
        ],
    },
    # Two match-components bridged by nothing: ann-cluster and bob-cluster.
    "records_two_clusters.json": {
        "key_attributes": ["name"],
        "records": [
            {"name": ["ann"], "phone": ["p1"]},
            {"name": ["ann"], "mail": ["m1"]},
            {"name": ["bob"], "phone": ["p2"]},
            {"name": ["bob"], "home": ["h2"]},
        ],
    },
}

DIGRAPHS = {
    "clicks.json": {
        "nodes": ["w", "x", "y", "z"],
        "arcs": [["w", "x"], ["x", "y"], ["y", "z"]],
    }
}


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    for filename, (name, size) in GROUPOIDS.items():
        (FIXTURES / filename).write_text(
            dump_groupoid(builtin(name, size)), encoding="utf-8"
        )
    for filename, payload in {**RECORDS, **DIGRAPHS}.items():
        (FIXTURES / filename).write_text(
            json.dumps(payload, indent=2) + "\n", encoding="utf-8"
        )
    print(f"wrote {len(GROUPOIDS) + len(RECORDS) + len(DIGRAPHS)} files to {FIXTURES}")


if __name__ == "__main__":
    main()
