"""Merge closure of instances and the entity-resolution methods.

Four routes to a resolved set, ordered by how much they assume:

* ``er_bruteforce`` — subset scan straight from the definition of a minimal
  dominating subset; exponential, guarded, the oracle the others are
  compared against.
* ``er_full`` — full elements of the closure; assumes nothing.
* ``er_maximal`` — maximal elements under the natural order; requires
  idempotence and catenary associativity.
* ``r_swoosh`` — the record-at-a-time worklist resolver; requires the
  idempotent/strongly-commutative/associative/representative package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import (
    BudgetExhaustedError,
    HypothesesNotSatisfiedError,
    IcarViolationError,
    SizeGuardError,
)
from .groupoid import (
    BlackBoxGroupoid,
    Budget,
    CLOSED,
    ClosureResult,
    ElementId,
    FiniteGroupoid,
    generated_subgroupoid,
)
from .order import OrderVariant, full_elements, maximal_elements, natural_order
from .properties import Property, check_property, property_report

BRUTEFORCE_CARRIER_GUARD = 20


@dataclass(frozen=True)
class Instance:
    """A finite, deduplicated set of records to resolve.

    ``ids`` are canonical serializations sorted lexicographically;
    ``objects`` maps each id back to its value (the id itself for explicit
    groupoids).
    """

    ids: tuple[ElementId, ...]
    objects: Mapping[ElementId, object]

    def __post_init__(self):
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(self, "objects", dict(self.objects))
        if not self.ids:
            raise ValueError("instance must be non-empty")

    def __len__(self) -> int:
        return len(self.ids)

    @classmethod
    def over(cls, groupoid: FiniteGroupoid | BlackBoxGroupoid, members: Iterable) -> "Instance":
        if isinstance(groupoid, FiniteGroupoid):
            objects = {groupoid.require(m): m for m in members}
        else:
            objects = {groupoid.key(m): m for m in members}
        return cls(tuple(sorted(objects)), objects)


@dataclass(frozen=True)
class ERResult:
    method: str
    resolved: tuple[ElementId, ...]
    certificate: str = ""

    def as_set(self) -> frozenset[ElementId]:
        return frozenset(self.resolved)


def _as_instance(groupoid, members) -> Instance:
    if isinstance(members, Instance):
        return members
    return Instance.over(groupoid, members)


def merge_closure(
    groupoid: FiniteGroupoid | BlackBoxGroupoid,
    instance: Instance | Iterable,
    budget: Budget = Budget(),
) -> ClosureResult:
    """Close an instance under every defined pairwise composition."""
    inst = _as_instance(groupoid, instance)
    seeds = inst.ids if isinstance(groupoid, FiniteGroupoid) else inst.objects.values()
    return generated_subgroupoid(groupoid, seeds, budget)


def _require_closed(closure: ClosureResult) -> FiniteGroupoid:
    if closure.status != CLOSED:
        raise BudgetExhaustedError(
            "closure is not complete; re-run with a larger budget", closure
        )
    return closure.groupoid


def er_bruteforce(closure: ClosureResult) -> ERResult:
    """Minimal dominating subset of the closure, by exhaustive subset scan.

    Scans subsets in increasing cardinality and returns the first that
    dominates the whole carrier; the scan of the winning cardinality
    continues so non-uniqueness can be reported instead of silently picking
    one.  Guarded to small carriers: this is an oracle, not a production
    path.
    """
    g = _require_closed(closure)
    carrier = g.elements
    if len(carrier) > BRUTEFORCE_CARRIER_GUARD:
        raise SizeGuardError(
            f"carrier has {len(carrier)} elements (guard {BRUTEFORCE_CARRIER_GUARD});"
            " use er_maximal instead"
        )
    rel = natural_order(g, OrderVariant.BOTH)
    above = {e: frozenset(q for q in carrier if (e, q) in rel.pairs) for e in carrier}
    for k in range(1, len(carrier) + 1):
        found = []
        for combo in itertools.combinations(carrier, k):
            members = frozenset(combo)
            if all(above[e] & members for e in carrier):
                found.append(combo)
        if found:
            if len(found) == 1:
                cert = f"unique minimal dominating subset (size {k})"
            else:
                cert = (
                    f"{len(found)} minimal dominating subsets of size {k};"
                    " resolution is not unique on this input"
                )
            return ERResult("bruteforce", tuple(sorted(found[0])), cert)
    return ERResult("bruteforce", (), "no dominating subset exists")


def er_full(closure: ClosureResult) -> ERResult:
    """Full elements of the closure; no hypotheses needed."""
    g = _require_closed(closure)
    resolved = tuple(sorted(full_elements(g, OrderVariant.BOTH)))
    return ERResult("full", resolved, "left-and-right full elements of the closure")


def er_maximal(closure: ClosureResult) -> ERResult:
    """Maximal elements of the closure under the natural two-sided order.

    Refuses to run unless idempotence and catenary associativity hold, since
    those are what make the natural order reflexive and transitive.
    """
    g = _require_closed(closure)
    idem = check_property(g, Property.IDEMPOTENT)
    catenary = check_property(g, Property.CATENARY_ASSOCIATIVE)
    failing = [v for v in (idem, catenary) if not v.holds]
    if failing:
        names = ", ".join(str(v.property) for v in failing)
        raise HypothesesNotSatisfiedError(
            f"er_maximal requires I and CA; failing: {names}", failing
        )
    resolved = tuple(sorted(maximal_elements(g, OrderVariant.BOTH)))
    return ERResult("maximal", resolved, "maximal elements under the natural order")


def _swoosh_interface(groupoid):
    if isinstance(groupoid, FiniteGroupoid):
        return (
            lambda x, y: (x, y) in groupoid.table,
            lambda x, y: groupoid.table[(x, y)],
            lambda e: e,
        )
    return groupoid.match, groupoid.merge, groupoid.key


def r_swoosh(
    groupoid: FiniteGroupoid | BlackBoxGroupoid,
    instance: Instance | Iterable,
    budget: Budget = Budget(),
) -> ERResult:
    """Record-at-a-time worklist resolver.

    Pops a record; if it matches anything already resolved, the partner is
    un-resolved and their merge is queued, otherwise the record is resolved.
    Sequential by design (its correctness argument is sequential), FIFO over
    ids sorted lexicographically, so runs are reproducible.

    Requires the idempotent/strongly-commutative/associative/representative
    package: verified on explicit groupoids, or declared by construction by
    the adapter.  A merge result that fails idempotent re-merge contradicts
    the declaration and aborts with a witness.  ``budget.max_elements``
    bounds the total number of merges.
    """
    inst = _as_instance(groupoid, instance)
    if isinstance(groupoid, FiniteGroupoid):
        report = property_report(groupoid)
        if not report.is_icar:
            failing = [
                report.verdicts[p]
                for p in (
                    Property.IDEMPOTENT,
                    Property.STRONGLY_COMMUTATIVE,
                    Property.ASSOCIATIVE,
                    Property.REPRESENTATIVE,
                )
                if not report.verdicts[p].holds
            ]
            names = ", ".join(str(v.property) for v in failing)
            raise HypothesesNotSatisfiedError(
                f"r_swoosh requires I, SC, A and R; failing: {names}", failing
            )
    elif not groupoid.declares_icar:
        raise HypothesesNotSatisfiedError(
            "black-box groupoid does not declare the required properties;"
            " materialize a finite closure and verify them first"
        )
    match, merge, key = _swoosh_interface(groupoid)

    queue: list[tuple[ElementId, object]] = [(i, inst.objects[i]) for i in inst.ids]
    resolved: dict[ElementId, object] = {}
    merges = 0
    cursor = 0
    while cursor < len(queue):
        rid, record = queue[cursor]
        cursor += 1
        if rid in resolved:
            continue
        partner = next(
            (pid for pid, p in resolved.items() if match(record, p)), None
        )
        if partner is None:
            resolved[rid] = record
            continue
        buddy = resolved.pop(partner)
        merged = merge(record, buddy)
        merges += 1
        if merges > budget.max_elements:
            raise BudgetExhaustedError(
                f"merge budget of {budget.max_elements} exhausted"
            )
        mid = key(merged)
        if not match(merged, merged) or key(merge(merged, merged)) != mid:
            raise IcarViolationError(
                "merge result fails idempotent re-merge, contradicting the"
                " declared properties",
                witness=(rid, partner, mid),
            )
        queue.append((mid, merged))
    return ERResult("rswoosh", tuple(sorted(resolved)), f"{merges} merges")
