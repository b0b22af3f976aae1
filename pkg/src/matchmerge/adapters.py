"""Concrete groupoids: union-merge records, paths in a digraph, and the
built-in finite fixtures used throughout the test suite and CLI.

Black-box adapters must be pure and deterministic; their elements carry a
canonical serialization so merge outputs deduplicate during closure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import BudgetExhaustedError, UnknownFixtureError
from .groupoid import (
    BlackBoxGroupoid,
    Budget,
    ElementId,
    FiniteGroupoid,
    Pair,
    generated_subgroupoid,
)


@dataclass(frozen=True, eq=False)
class Record:
    """An entity record: attribute names mapped to finite value sets.

    Equality and hashing go through the canonical serialization (sorted
    attributes, sorted values), so equal records are byte-identical.
    """

    attributes: Mapping[str, frozenset[str]]

    def __post_init__(self):
        normalized = {}
        for name, values in self.attributes.items():
            values = frozenset(str(v) for v in values)
            if not values:
                raise ValueError(f"attribute {name!r} has an empty value set")
            normalized[str(name)] = values
        if not normalized:
            raise ValueError("record must have at least one attribute")
        object.__setattr__(self, "attributes", normalized)

    @classmethod
    def of(cls, **attributes) -> "Record":
        return cls({k: frozenset(v) for k, v in attributes.items()})

    @classmethod
    def from_dict(cls, data: Mapping[str, Iterable[str]]) -> "Record":
        return cls({k: frozenset(v) for k, v in data.items()})

    def to_dict(self) -> dict[str, list[str]]:
        return {k: sorted(self.attributes[k]) for k in sorted(self.attributes)}

    @property
    def canonical_id(self) -> ElementId:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def __eq__(self, other) -> bool:
        return isinstance(other, Record) and self.canonical_id == other.canonical_id

    def __hash__(self) -> int:
        return hash(self.canonical_id)

    def __repr__(self) -> str:
        return f"Record({self.canonical_id})"


def record_groupoid(key_attributes: Sequence[str]) -> BlackBoxGroupoid:
    """Union-merge records with overlap matching on the key attributes.

    Two records match when they share at least one value on at least one key
    attribute; their merge unions every attribute's value set.  Provided all
    records carry a key value, the rule is idempotent, strongly commutative,
    associative and representative, which the adapter declares (and the test
    suite verifies on materialized fixtures rather than assuming).
    """
    keys = tuple(key_attributes)
    if not keys:
        raise ValueError("need at least one key attribute")

    def match(r1: Record, r2: Record) -> bool:
        return any(
            r1.attributes.get(k, frozenset()) & r2.attributes.get(k, frozenset())
            for k in keys
        )

    def merge(r1: Record, r2: Record) -> Record:
        names = set(r1.attributes) | set(r2.attributes)
        return Record(
            {
                n: r1.attributes.get(n, frozenset()) | r2.attributes.get(n, frozenset())
                for n in names
            }
        )

    return BlackBoxGroupoid(
        match=match,
        merge=merge,
        key=lambda r: r.canonical_id,
        declares_icar=True,
    )


@dataclass(frozen=True)
class Digraph:
    nodes: tuple[str, ...]
    arcs: tuple[Pair, ...]

    def __post_init__(self):
        nodes = tuple(str(n) for n in self.nodes)
        members = set(nodes)
        arcs = []
        for u, v in self.arcs:
            u, v = str(u), str(v)
            if u not in members or v not in members:
                raise ValueError(f"arc ({u!r}, {v!r}) mentions an unknown node")
            arcs.append((u, v))
        if len(set(arcs)) != len(arcs):
            raise ValueError("duplicate arcs")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "arcs", tuple(arcs))

    def path(self, *arcs: Pair) -> "DiPath":
        known = set(self.arcs)
        for arc in arcs:
            if tuple(arc) not in known:
                raise ValueError(f"arc {arc!r} is not in the digraph")
        return DiPath(tuple(tuple(a) for a in arcs))


@dataclass(frozen=True)
class DiPath:
    """A path: consecutive arcs chain, arcs are distinct, and the arc heads
    are pairwise distinct."""

    arcs: tuple[Pair, ...]

    def __post_init__(self):
        arcs = tuple((str(u), str(v)) for u, v in self.arcs)
        if not arcs:
            raise ValueError("path must contain at least one arc")
        for (_, head), (tail, _) in zip(arcs, arcs[1:]):
            if head != tail:
                raise ValueError("consecutive arcs do not chain")
        if len(set(arcs)) != len(arcs):
            raise ValueError("arcs repeat")
        heads = [v for _, v in arcs]
        if len(set(heads)) != len(heads):
            raise ValueError("arc heads repeat")
        object.__setattr__(self, "arcs", arcs)

    @property
    def canonical_id(self) -> ElementId:
        return "|".join(f"{u}>{v}" for u, v in self.arcs)


def _overlap_concat(p: DiPath, q: DiPath) -> DiPath | None:
    """Smallest-index suffix/prefix overlap, then concatenation.

    The first path's tail starting at position i must equal the second's
    prefix; only the smallest such i counts.  Results breaking the path
    invariants are rejected (undefined composition).
    """
    m, n = len(p.arcs), len(q.arcs)
    for i in range(1, min(m, n) + 1):
        overlap = m - i + 1
        if overlap > n:
            continue
        if p.arcs[i - 1 :] == q.arcs[:overlap]:
            try:
                return DiPath(p.arcs + q.arcs[overlap:])
            except ValueError:
                return None
    return None


def path_groupoid(host: Digraph) -> BlackBoxGroupoid:
    """Paths of ``host`` under overlap concatenation."""
    return BlackBoxGroupoid(
        match=lambda p, q: _overlap_concat(p, q) is not None,
        merge=lambda p, q: _overlap_concat(p, q),
        key=lambda p: p.canonical_id,
        seed=tuple(DiPath((arc,)) for arc in host.arcs),
    )


def materialize(
    blackbox: BlackBoxGroupoid, seed: Iterable, budget: Budget = Budget()
) -> FiniteGroupoid:
    """Close a seed set under the black-box rules into an explicit table.

    This is the bridge from open-universe adapters to the exhaustive finite
    checkers; exhaustion of the budget is an error here because the caller
    asked for the complete table.
    """
    result = generated_subgroupoid(blackbox, seed, budget)
    if not result.closed:
        raise BudgetExhaustedError(
            f"closure exceeded the budget after {result.iterations} rounds"
            f" ({len(result.carrier)} elements)",
            result,
        )
    return result.groupoid


# -- built-in fixtures -------------------------------------------------------


def _fixture_p1() -> FiniteGroupoid:
    # Three idempotents chained a -> b -> c; associativity holds but the
    # catenary and strong forms fail on (a, b, c).
    return FiniteGroupoid(
        ("a", "b", "c"),
        {
            ("a", "a"): "a",
            ("b", "b"): "b",
            ("c", "c"): "c",
            ("a", "b"): "b",
            ("b", "c"): "c",
        },
    )


def _fixture_q2() -> FiniteGroupoid:
    # Finite yet fails idempotence, strong commutativity, associativity and
    # representativity all at once.
    return FiniteGroupoid(
        ("a", "b", "c"),
        {("a", "b"): "c", ("b", "c"): "b", ("c", "c"): "b"},
    )


def _fixture_maxnat(size: int) -> FiniteGroupoid:
    elements = tuple(str(i) for i in range(size))
    table = {
        (str(i), str(j)): str(max(i, j))
        for i in range(size)
        for j in range(size)
    }
    return FiniteGroupoid(elements, table)


def _fixture_chain(size: int) -> FiniteGroupoid:
    # a_i composed with a_{i+1} gives a_{i+2}; the truncation leaves
    # out-of-range compositions undefined instead of wrapping.
    elements = tuple(f"a{i}" for i in range(1, size + 1))
    table = {
        (f"a{i}", f"a{i + 1}"): f"a{i + 2}" for i in range(1, size - 1)
    }
    return FiniteGroupoid(elements, table)


def _fixture_uchain(size: int) -> FiniteGroupoid:
    g = _fixture_chain(size)
    table = dict(g.table)
    for e in g.elements:
        table[(e, e)] = e
    return FiniteGroupoid(g.elements, table)


def _fixture_twoblock() -> FiniteGroupoid:
    return FiniteGroupoid(("u", "v"), {("u", "u"): "u", ("v", "v"): "v"})


def _fixture_leftzero2() -> FiniteGroupoid:
    # Total, idempotent, catenary associative, not commutative: the two
    # elements absorb each other, so they form one mutual-absorption class.
    return FiniteGroupoid(
        ("p", "q"),
        {("p", "p"): "p", ("p", "q"): "p", ("q", "p"): "q", ("q", "q"): "q"},
    )


def _fixture_unit() -> FiniteGroupoid:
    return FiniteGroupoid(("e",), {("e", "e"): "e"})


BUILTINS: dict[str, tuple[str, int | None]] = {
    "p1": ("three chained idempotents; associative but not catenary", None),
    "q2": ("three elements failing I, SC, A and R", None),
    "maxnat": ("total max on {0..n-1}", 10),
    "chain": ("successor chain a_i a_{i+1} = a_{i+2}, no loops", 12),
    "uchain": ("successor chain with idempotent loops", 12),
    "twoblock": ("two disjoint idempotents", None),
    "leftzero2": ("two-element left-absorbing band", None),
    "unit": ("a single idempotent", None),
}

_FACTORIES = {
    "p1": _fixture_p1,
    "q2": _fixture_q2,
    "maxnat": _fixture_maxnat,
    "chain": _fixture_chain,
    "uchain": _fixture_uchain,
    "twoblock": _fixture_twoblock,
    "leftzero2": _fixture_leftzero2,
    "unit": _fixture_unit,
}


def builtin(name: str, size: int | None = None) -> FiniteGroupoid:
    """Construct a built-in fixture; sized families take an element count."""
    key = name.lower()
    if key not in _FACTORIES:
        raise UnknownFixtureError(
            f"unknown fixture {name!r}; available: {', '.join(sorted(BUILTINS))}"
        )
    _, default_size = BUILTINS[key]
    factory = _FACTORIES[key]
    if default_size is None:
        if size is not None:
            raise UnknownFixtureError(f"fixture {name!r} does not take a size")
        return factory()
    if size is None:
        size = default_size
    if size < 3 and key in ("chain", "uchain"):
        raise UnknownFixtureError(f"fixture {name!r} needs size >= 3")
    if size < 1:
        raise UnknownFixtureError("size must be positive")
    return factory(size)
