"""Natural orders on a partial groupoid, their law audits, and the
characterization of orders compatible with the composition.

The natural relations are defined pointwise from the table:

* ``p <=r q``  iff  ``p o q = q``
* ``p <=l q``  iff  ``q o p = q``
* ``p <= q``   iff  both hold.

They are genuine partial orders only under extra axioms (idempotence for
reflexivity, catenary associativity for transitivity), so audits come
first and everything downstream states its hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import DomainNotReflexiveError, NotPartialOrderError
from .groupoid import ElementId, FiniteGroupoid, Pair, Verdict
from .properties import Property, check_property


class OrderVariant(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    BOTH = "both"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class OrderRelation:
    """A materialized binary relation over a fixed carrier."""

    carrier: tuple[ElementId, ...]
    pairs: frozenset[Pair]
    provenance: str = "user"

    def __post_init__(self):
        carrier = tuple(self.carrier)
        members = set(carrier)
        for p, q in self.pairs:
            if p not in members or q not in members:
                raise ValueError(f"relation pair ({p!r}, {q!r}) leaves the carrier")
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "pairs", frozenset(self.pairs))

    def __contains__(self, pair: Pair) -> bool:
        return pair in self.pairs

    def sorted_pairs(self) -> list[Pair]:
        index = {e: i for i, e in enumerate(self.carrier)}
        return sorted(self.pairs, key=lambda pq: (index[pq[0]], index[pq[1]]))


@dataclass(frozen=True)
class OrderLawAudit:
    reflexive: Verdict
    antisymmetric: Verdict
    transitive: Verdict

    @property
    def is_partial_order(self) -> bool:
        return self.reflexive.holds and self.antisymmetric.holds and self.transitive.holds


@dataclass(frozen=True)
class OrderAxiomsReport:
    """Verdicts for least-upper-bound and the two compatibility laws."""

    lub: Verdict
    left_compat: Verdict
    right_compat: Verdict

    @property
    def all_hold(self) -> bool:
        return self.lub.holds and self.left_compat.holds and self.right_compat.holds


@dataclass(frozen=True)
class OrderCharacterization:
    """Two-sided verdict for the compatible-order characterization.

    ``axioms_hold`` is the least-upper-bound/compatibility side for the given
    relation; ``algebra_holds`` is idempotence + commutativity +
    associativity + representativity together with the relation coinciding
    with the natural order.  ``holds`` says the two sides agree.
    """

    axioms_hold: bool
    algebra_holds: bool
    failed_axioms: tuple[str, ...]
    failed_properties: tuple[str, ...]
    relation_matches_natural: bool
    relation_discrepancy: Pair | None

    @property
    def holds(self) -> bool:
        return self.axioms_hold == self.algebra_holds


def natural_order(g: FiniteGroupoid, variant: OrderVariant) -> OrderRelation:
    """Materialize the chosen natural relation as an explicit pair set."""
    variant = OrderVariant(variant)
    pairs = set()
    for p, q in g.pairs():
        pq = g.table.get((p, q))
        qp = g.table.get((q, p))
        if variant is OrderVariant.RIGHT:
            ok = pq == q
        elif variant is OrderVariant.LEFT:
            ok = qp == q
        else:
            ok = pq == q and qp == q
        if ok:
            pairs.add((p, q))
    return OrderRelation(g.elements, frozenset(pairs), f"natural:{variant.value}")


def order_law_audit(rel: OrderRelation) -> OrderLawAudit:
    """Check reflexivity, antisymmetry and transitivity with witnesses."""
    reflexive = Verdict(True)
    for x in rel.carrier:
        if (x, x) not in rel.pairs:
            reflexive = Verdict(False, (x,), "missing loop")
            break
    antisymmetric = Verdict(True)
    for x in rel.carrier:
        for y in rel.carrier:
            if x != y and (x, y) in rel.pairs and (y, x) in rel.pairs:
                antisymmetric = Verdict(False, (x, y), "both directions related")
                break
        if not antisymmetric.holds:
            break
    transitive = Verdict(True)
    done = False
    for x in rel.carrier:
        for y in rel.carrier:
            if (x, y) not in rel.pairs:
                continue
            for z in rel.carrier:
                if (y, z) in rel.pairs and (x, z) not in rel.pairs:
                    transitive = Verdict(False, (x, y, z), "missing composite pair")
                    done = True
                    break
            if done:
                break
        if done:
            break
    return OrderLawAudit(reflexive, antisymmetric, transitive)


def maximal_elements(g: FiniteGroupoid, variant: OrderVariant) -> tuple[ElementId, ...]:
    """Elements m with: m related to n implies n related back to m.

    This phrasing behaves sanely even when the relation is not transitive,
    unlike "no strictly greater element".
    """
    rel = natural_order(g, variant)
    out = []
    for m in g.elements:
        if all((n, m) in rel.pairs for n in g.elements if (m, n) in rel.pairs):
            out.append(m)
    return tuple(out)


def full_elements(g: FiniteGroupoid, side: OrderVariant = OrderVariant.BOTH) -> tuple[ElementId, ...]:
    """Elements that absorb every defined composition on the given side(s).

    Left full: x o p defined implies x o p = p.  Right full: p o x defined
    implies p o x = p.  ``BOTH`` intersects the two.
    """
    side = OrderVariant(side)

    def left_full(p):
        return all(g.table.get((x, p), p) == p for x in g.elements)

    def right_full(p):
        return all(g.table.get((p, x), p) == p for x in g.elements)

    out = []
    for p in g.elements:
        if side is OrderVariant.LEFT:
            ok = left_full(p)
        elif side is OrderVariant.RIGHT:
            ok = right_full(p)
        else:
            ok = left_full(p) and right_full(p)
        if ok:
            out.append(p)
    return tuple(out)


def dominates(g: FiniteGroupoid, lower: Iterable[ElementId], upper: Iterable[ElementId]) -> bool:
    """Every element of ``lower`` sits below some element of ``upper`` in the
    natural two-sided order."""
    lower = g.require_all(lower)
    upper = g.require_all(upper)
    rel = natural_order(g, OrderVariant.BOTH)
    return all(any((e, f) in rel.pairs for f in upper) for e in lower)


def check_order_axioms(g: FiniteGroupoid, rel: OrderRelation) -> OrderAxiomsReport:
    """Audit the interaction laws between a partial order and the table.

    * lub: each defined composition is the least upper bound of its operands.
    * left/right compatibility: relating p1 to p2 transports definedness and
      the relation through composition on that side.

    Raises NotPartialOrderError when ``rel`` fails its own law audit, since
    the laws below are only meaningful for genuine partial orders.
    """
    audit = order_law_audit(rel)
    if not audit.is_partial_order:
        raise NotPartialOrderError("relation is not a partial order", audit)
    g.require_all(rel.carrier)

    lub = Verdict(True)
    done = False
    for p1, p2 in g.defined_pairs():
        c = g.table[(p1, p2)]
        if (p1, c) not in rel.pairs or (p2, c) not in rel.pairs:
            lub = Verdict(False, (p1, p2), "composition is not an upper bound")
            break
        for x in g.elements:
            if (p1, x) in rel.pairs and (p2, x) in rel.pairs and (c, x) not in rel.pairs:
                lub = Verdict(False, (p1, p2, x), "composition is not least")
                done = True
                break
        if done:
            break

    def compat(left_side: bool) -> Verdict:
        for p1 in g.elements:
            for p2 in g.elements:
                if (p1, p2) not in rel.pairs:
                    continue
                for p in g.elements:
                    if left_side:
                        a, b = g.table.get((p, p1)), g.table.get((p, p2))
                    else:
                        a, b = g.table.get((p1, p)), g.table.get((p2, p))
                    if a is None:
                        continue
                    if b is None:
                        return Verdict(False, (p1, p2, p), "definedness not transported")
                    if (a, b) not in rel.pairs:
                        return Verdict(False, (p1, p2, p), "compositions not related")
        return Verdict(True)

    return OrderAxiomsReport(lub, compat(True), compat(False))


def order_characterization(g: FiniteGroupoid, rel: OrderRelation) -> OrderCharacterization:
    """Compare the order-side laws with the algebra-side axioms.

    For a reflexive composition domain, the least-upper-bound and
    compatibility laws hold for ``rel`` exactly when the groupoid is
    idempotent, commutative, associative and representative *and* ``rel`` is
    the natural two-sided order.  The report says which side failed and, if
    the relations differ, the first discrepant pair.
    """
    for p in g.elements:
        if (p, p) not in g.table:
            raise DomainNotReflexiveError(
                f"composition domain is not reflexive: ({p!r}, {p!r}) undefined",
                witness=(p, p),
            )
    axioms = check_order_axioms(g, rel)
    failed_axioms = tuple(
        name
        for name, verdict in (
            ("lub", axioms.lub),
            ("left_compat", axioms.left_compat),
            ("right_compat", axioms.right_compat),
        )
        if not verdict.holds
    )
    wanted = (
        Property.IDEMPOTENT,
        Property.COMMUTATIVE,
        Property.ASSOCIATIVE,
        Property.REPRESENTATIVE,
    )
    verdicts = {p: check_property(g, p) for p in wanted}
    failed_properties = tuple(str(p) for p in wanted if not verdicts[p].holds)

    natural = natural_order(g, OrderVariant.BOTH)
    matches = rel.pairs == natural.pairs
    discrepancy = None
    if not matches:
        index = {e: i for i, e in enumerate(g.elements)}
        diff = sorted(
            rel.pairs.symmetric_difference(natural.pairs),
            key=lambda pq: (index[pq[0]], index[pq[1]]),
        )
        discrepancy = diff[0]

    return OrderCharacterization(
        axioms_hold=axioms.all_hold,
        algebra_holds=not failed_properties and matches,
        failed_axioms=failed_axioms,
        failed_properties=failed_properties,
        relation_matches_natural=matches,
        relation_discrepancy=discrepancy,
    )
