"""Shared test utilities: independent oracles and seeded random generators.

The oracles here deliberately do not share code paths with the library:
products are evaluated by enumerating explicit grouping trees (Catalan
style) instead of interval dynamic programming, and closures by a naive
add-all-pairs loop instead of the round-based worklist.
"""

from __future__ import annotations

import random
import string
from itertools import product as cartesian

from matchmerge import FiniteGroupoid, Record


# -- parenthesization oracle ---------------------------------------------------


def _grouping_trees(n: int):
    """All full binary trees with n leaves, as nested ('node', L, R) tuples."""
    if n == 1:
        yield "leaf"
        return
    for k in range(1, n):
        for left in _grouping_trees(k):
            for right in _grouping_trees(n - k):
                yield ("node", left, right)


def _eval_tree(table, tree, leaves, start=0):
    """Value of one grouping over one leaf assignment, or None; returns
    (value, next_leaf_index)."""
    if tree == "leaf":
        return leaves[start], start + 1
    _, left, right = tree
    lv, mid = _eval_tree(table, left, leaves, start)
    if lv is None:
        # still consume the right subtree's leaves to keep indices aligned
        rv, end = _eval_tree(table, right, leaves, mid)
        return None, end
    rv, end = _eval_tree(table, right, leaves, mid)
    if rv is None:
        return None, end
    return table.get((lv, rv)), end


def parenthesization_products(g: FiniteGroupoid, factors) -> frozenset:
    """Oracle for subset products: enumerate every grouping tree and every
    choice of one element per factor, collect the defined values."""
    factors = [sorted(f) for f in factors]
    out = set()
    for tree in _grouping_trees(len(factors)):
        for leaves in cartesian(*factors):
            value, _ = _eval_tree(g.table, tree, list(leaves))
            if value is not None:
                out.add(value)
    return frozenset(out)


# -- naive closure oracle ------------------------------------------------------


def naive_merge_closure(g: FiniteGroupoid, seeds) -> frozenset:
    """Oracle for closures: keep adding all defined pairwise compositions
    until nothing changes.  No budgets; finite fixtures only."""
    members = set(seeds)
    changed = True
    while changed:
        changed = False
        for x in list(members):
            for y in list(members):
                z = g.table.get((x, y))
                if z is not None and z not in members:
                    members.add(z)
                    changed = True
    return frozenset(members)


def brute_force_generates(g: FiniteGroupoid, candidate) -> bool:
    return naive_merge_closure(g, candidate) == frozenset(g.elements)


# -- random generators ---------------------------------------------------------


def random_groupoid(
    rng: random.Random,
    size: int,
    density: float = 0.5,
    reflexive: bool = False,
    idempotent: bool = False,
) -> FiniteGroupoid:
    elements = tuple(string.ascii_letters[:size])
    table = {}
    for x in elements:
        for y in elements:
            if x == y and idempotent:
                table[(x, y)] = x
            elif (reflexive and x == y) or rng.random() < density:
                table[(x, y)] = rng.choice(elements)
    return FiniteGroupoid(elements, table)


def random_record_instance(rng: random.Random, max_records: int = 8) -> list[Record]:
    """Records with one name value from a small pool plus a unique marker
    attribute, so every union in the closure is distinct."""
    count = rng.randint(2, max_records)
    names = ["k1", "k2", "k3", "k4", "k5"]
    records = []
    for i in range(count):
        records.append(
            Record.of(name={rng.choice(names)}, **{f"src{i}": {f"r{i}"}})
        )
    return records
