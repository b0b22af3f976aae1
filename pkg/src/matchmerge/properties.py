"""Exhaustive axiom checkers for explicit partial groupoids.

Each checker scans the whole carrier (pairs, triples, or bounded words) in
carrier order and reports the first violation as a replayable witness, so
two runs on the same input always return the same verdict.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Mapping

from .groupoid import ElementId, FiniteGroupoid, interval_products

DEFAULT_WORD_BOUND = 3


class Property(str, Enum):
    """Closed enumeration of the audited axioms, in report order."""

    SYMMETRIC = "S"
    IDEMPOTENT = "I"
    COMMUTATIVE = "C"
    STRONGLY_COMMUTATIVE = "SC"
    LEFT_REPRESENTATIVE = "Rl"
    RIGHT_REPRESENTATIVE = "Rr"
    REPRESENTATIVE = "R"
    ASSOCIATIVE = "A"
    CATENARY_ASSOCIATIVE = "CA"
    STRONGLY_ASSOCIATIVE = "SA"
    WORD_IDEMPOTENT = "NR"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PropertyVerdict:
    property: Property
    holds: bool
    witness: tuple[ElementId, ...] | None
    checked_universe: str

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class PropertyReport:
    """All verdicts for one groupoid plus the derived headline flags."""

    verdicts: Mapping[Property, PropertyVerdict]

    @property
    def is_icar(self) -> bool:
        """Idempotent, strongly commutative, associative, representative:
        the conjunction that licenses the efficient record-level resolver."""
        return all(
            self.verdicts[p].holds
            for p in (
                Property.IDEMPOTENT,
                Property.STRONGLY_COMMUTATIVE,
                Property.ASSOCIATIVE,
                Property.REPRESENTATIVE,
            )
        )

    @property
    def is_partial_semigroup_ca(self) -> bool:
        return self.verdicts[Property.CATENARY_ASSOCIATIVE].holds

    def holds(self, p: Property) -> bool:
        return self.verdicts[p].holds


def _pair_universe(g: FiniteGroupoid) -> str:
    n = len(g)
    return f"{n} elements, {n * n} ordered pairs"


def _triple_universe(g: FiniteGroupoid) -> str:
    n = len(g)
    return f"{n} elements, {n ** 3} triples"


def _check_symmetric(g: FiniteGroupoid):
    """(x, y) defined iff (y, x) defined."""
    for x, y in g.pairs():
        if ((x, y) in g.table) != ((y, x) in g.table):
            return (x, y)
    return None


def _check_idempotent(g: FiniteGroupoid):
    """Every element composes with itself and yields itself."""
    for p in g.elements:
        if g.table.get((p, p)) != p:
            return (p,)
    return None


def _check_commutative(g: FiniteGroupoid):
    """When both orders are defined, they agree."""
    for x, y in g.pairs():
        xy = g.table.get((x, y))
        yx = g.table.get((y, x))
        if xy is not None and yx is not None and xy != yx:
            return (x, y)
    return None


def _check_strongly_commutative(g: FiniteGroupoid):
    """Symmetric domain, and defined compositions agree across orders."""
    for x, y in g.pairs():
        xy = g.table.get((x, y))
        yx = g.table.get((y, x))
        if (xy is None) != (yx is None):
            return (x, y)
        if xy is not None and xy != yx:
            return (x, y)
    return None


def _check_left_representative(g: FiniteGroupoid):
    """A composite stays composable on the left with everything its first
    operand was composable with: (p,p1) and (p1,p2) defined => (p, p1 o p2) defined."""
    for p1, p2 in g.defined_pairs():
        c = g.table[(p1, p2)]
        for p in g.elements:
            if (p, p1) in g.table and (p, c) not in g.table:
                return (p1, p2, p)
    return None


def _check_right_representative(g: FiniteGroupoid):
    """Dual of the left form: (p1,p2) and (p2,p) defined => (p1 o p2, p) defined."""
    for p1, p2 in g.defined_pairs():
        c = g.table[(p1, p2)]
        for p in g.elements:
            if (p2, p) in g.table and (c, p) not in g.table:
                return (p1, p2, p)
    return None


def _check_representative(g: FiniteGroupoid):
    return _check_left_representative(g) or _check_right_representative(g)


def _check_associative(g: FiniteGroupoid):
    """Whenever both full groupings of a triple are defined, they agree."""
    for p1, p2, p3 in g.triples():
        ab = g.table.get((p1, p2))
        bc = g.table.get((p2, p3))
        if ab is None or bc is None:
            continue
        left = g.table.get((ab, p3))
        right = g.table.get((p1, bc))
        if left is None or right is None:
            continue
        if left != right:
            return (p1, p2, p3)
    return None


def _check_catenary_associative(g: FiniteGroupoid):
    """If p1 o p2 and p2 o p3 exist, both groupings exist and agree."""
    for p1, p2, p3 in g.triples():
        ab = g.table.get((p1, p2))
        bc = g.table.get((p2, p3))
        if ab is None or bc is None:
            continue
        left = g.table.get((ab, p3))
        right = g.table.get((p1, bc))
        if left is None or right is None or left != right:
            return (p1, p2, p3)
    return None


def _check_strongly_associative(g: FiniteGroupoid):
    """Both groupings defined with equal values, or both undefined."""
    for p1, p2, p3 in g.triples():
        ab = g.table.get((p1, p2))
        left = None if ab is None else g.table.get((ab, p3))
        bc = g.table.get((p2, p3))
        right = None if bc is None else g.table.get((p1, bc))
        if (left is None) != (right is None):
            return (p1, p2, p3)
        if left is not None and left != right:
            return (p1, p2, p3)
    return None


def _check_word_idempotent(g: FiniteGroupoid, bound: int):
    """Doubling a word does not change its (non-empty) product set.

    A word w violates the law when product(w) is non-empty but
    product(w ++ w) differs from it.  This is an infinite scheme; a pass is
    always relative to the word-length bound.
    """
    if bound < 1:
        raise ValueError("word bound must be at least 1")
    for k in range(1, bound + 1):
        for word in itertools.product(g.elements, repeat=k):
            once = interval_products(g, [{w} for w in word])[(0, k - 1)]
            if not once:
                continue
            doubled = word + word
            twice = interval_products(g, [{w} for w in doubled])[(0, 2 * k - 1)]
            if twice != once:
                return word
    return None


def check_property(
    g: FiniteGroupoid, prop: Property, nr_word_bound: int = DEFAULT_WORD_BOUND
) -> PropertyVerdict:
    """Exhaustively audit one axiom; deterministic first witness on failure."""
    prop = Property(prop)
    if prop is Property.SYMMETRIC:
        witness, universe = _check_symmetric(g), _pair_universe(g)
    elif prop is Property.IDEMPOTENT:
        witness, universe = _check_idempotent(g), f"{len(g)} elements"
    elif prop is Property.COMMUTATIVE:
        witness, universe = _check_commutative(g), _pair_universe(g)
    elif prop is Property.STRONGLY_COMMUTATIVE:
        witness, universe = _check_strongly_commutative(g), _pair_universe(g)
    elif prop is Property.LEFT_REPRESENTATIVE:
        witness, universe = _check_left_representative(g), _triple_universe(g)
    elif prop is Property.RIGHT_REPRESENTATIVE:
        witness, universe = _check_right_representative(g), _triple_universe(g)
    elif prop is Property.REPRESENTATIVE:
        witness, universe = _check_representative(g), _triple_universe(g)
    elif prop is Property.ASSOCIATIVE:
        witness, universe = _check_associative(g), _triple_universe(g)
    elif prop is Property.CATENARY_ASSOCIATIVE:
        witness, universe = _check_catenary_associative(g), _triple_universe(g)
    elif prop is Property.STRONGLY_ASSOCIATIVE:
        witness, universe = _check_strongly_associative(g), _triple_universe(g)
    elif prop is Property.WORD_IDEMPOTENT:
        witness = _check_word_idempotent(g, nr_word_bound)
        universe = f"words of length <= {nr_word_bound} over {len(g)} elements"
    else:  # pragma: no cover - closed enumeration
        raise ValueError(f"unknown property {prop!r}")
    return PropertyVerdict(prop, witness is None, witness, universe)


def property_report(
    g: FiniteGroupoid, nr_word_bound: int = DEFAULT_WORD_BOUND
) -> PropertyReport:
    """Run every checker and aggregate the derived flags."""
    verdicts = {p: check_property(g, p, nr_word_bound) for p in Property}
    return PropertyReport(verdicts)


def implication_audit(g: FiniteGroupoid, report: PropertyReport) -> list[str]:
    """Cross-check the verdicts against the implications that must hold
    between the axioms.

    A non-empty result never means anything about the input groupoid; it
    means a checker is buggy, so callers should surface it loudly.
    """
    v = {p: report.verdicts[p].holds for p in Property}
    rules = [
        (
            "CA <=> A and R",
            v[Property.CATENARY_ASSOCIATIVE]
            == (v[Property.ASSOCIATIVE] and v[Property.REPRESENTATIVE]),
        ),
        ("SA => A", (not v[Property.STRONGLY_ASSOCIATIVE]) or v[Property.ASSOCIATIVE]),
        ("CA => A", (not v[Property.CATENARY_ASSOCIATIVE]) or v[Property.ASSOCIATIVE]),
        ("NR => I", (not v[Property.WORD_IDEMPOTENT]) or v[Property.IDEMPOTENT]),
        (
            "SC <=> C and S",
            v[Property.STRONGLY_COMMUTATIVE]
            == (v[Property.COMMUTATIVE] and v[Property.SYMMETRIC]),
        ),
        (
            "R <=> Rl and Rr",
            v[Property.REPRESENTATIVE]
            == (v[Property.LEFT_REPRESENTATIVE] and v[Property.RIGHT_REPRESENTATIVE]),
        ),
    ]
    return [name for name, ok in rules if not ok]
