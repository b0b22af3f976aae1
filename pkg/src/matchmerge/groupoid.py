"""Partial groupoids: explicit composition tables and black-box match/merge rules.

The central object is a non-empty carrier with a composition defined only on
some ordered pairs (its domain).  ``FiniteGroupoid`` stores the table
explicitly, which is what the exhaustive audits in the rest of the library
work on; ``BlackBoxGroupoid`` wraps a match predicate and a merge function
over an open universe and is bridged to explicit tables by budgeted closure.

All operations here are pure functions of immutable inputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .errors import (
    ForeignElementError,
    NotGeneratingSetError,
    NotHomomorphismError,
)

ElementId = str
Pair = tuple[ElementId, ElementId]

CLOSED = "closed"
BUDGET_EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a single law check, with a replayable witness on failure."""

    holds: bool
    witness: tuple[ElementId, ...] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class FiniteGroupoid:
    """Explicit partial groupoid: an ordered carrier plus a composition table.

    The table's key set *is* the composition domain; pairs absent from the
    table are undefined.  Every table value must belong to the carrier.
    """

    elements: tuple[ElementId, ...]
    table: Mapping[Pair, ElementId]
    _position: Mapping[ElementId, int] = field(
        init=False, repr=False, compare=False, default=None
    )

    def __post_init__(self):
        elements = tuple(self.elements)
        if not elements:
            raise ValueError("carrier must be non-empty")
        position = {}
        for i, e in enumerate(elements):
            if not isinstance(e, str):
                raise ValueError(f"element ids must be strings, got {e!r}")
            if e in position:
                raise ValueError(f"duplicate element {e!r} in carrier")
            position[e] = i
        table = dict(self.table)
        for (x, y), v in table.items():
            for e in (x, y, v):
                if e not in position:
                    raise ValueError(
                        f"composition ({x!r}, {y!r}) -> {v!r} mentions {e!r},"
                        " which is outside the carrier"
                    )
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "_position", position)

    # -- carrier -----------------------------------------------------------
    def __contains__(self, element: ElementId) -> bool:
        return element in self._position

    def __len__(self) -> int:
        return len(self.elements)

    def position(self, element: ElementId) -> int:
        self.require(element)
        return self._position[element]

    def require(self, element: ElementId) -> ElementId:
        if element not in self._position:
            raise ForeignElementError(element)
        return element

    def require_all(self, elements: Iterable[ElementId]) -> tuple[ElementId, ...]:
        return tuple(self.require(e) for e in elements)

    # -- composition -------------------------------------------------------
    @property
    def domain(self) -> frozenset[Pair]:
        return frozenset(self.table)

    def defined(self, x: ElementId, y: ElementId) -> bool:
        self.require(x)
        self.require(y)
        return (x, y) in self.table

    def compose(self, x: ElementId, y: ElementId) -> ElementId | None:
        """Composition of x and y, or None when the pair is undefined.

        Unknown elements raise ForeignElementError; an undefined composition
        is a normal outcome, never an error and never a fabricated value.
        """
        self.require(x)
        self.require(y)
        return self.table.get((x, y))

    def pairs(self) -> Iterator[Pair]:
        """All ordered carrier pairs in carrier order."""
        return itertools.product(self.elements, repeat=2)

    def triples(self) -> Iterator[tuple[ElementId, ElementId, ElementId]]:
        return itertools.product(self.elements, repeat=3)

    def defined_pairs(self) -> Iterator[Pair]:
        """The composition domain, enumerated in carrier order."""
        for x, y in self.pairs():
            if (x, y) in self.table:
                yield (x, y)

    def restrict(self, subset: Iterable[ElementId]) -> FiniteGroupoid:
        """Partial subgroupoid on ``subset``: compositions whose operands and
        value all stay inside.  Carrier order follows ``subset``'s order."""
        kept = self.require_all(subset)
        inside = set(kept)
        table = {
            (x, y): v
            for (x, y), v in self.table.items()
            if x in inside and y in inside and v in inside
        }
        return FiniteGroupoid(kept, table)


@dataclass(frozen=True)
class BlackBoxGroupoid:
    """Match/merge rules over an open universe of values.

    ``merge`` must be defined exactly where ``match`` holds and be
    deterministic.  ``key`` canonically serializes a value; two values are
    the same element exactly when their keys are byte-identical, which is
    what makes merge outputs deduplicable during closure.
    """

    match: Callable[[object, object], bool]
    merge: Callable[[object, object], object]
    key: Callable[[object], ElementId]
    seed: tuple = ()
    declares_icar: bool = False

    def compose(self, x, y):
        """Merge of x and y when they match, else None."""
        if self.match(x, y):
            return self.merge(x, y)
        return None


@dataclass(frozen=True)
class Budget:
    """Caps for closure computations.

    Closures of finite instances can be infinite, so unbounded iteration is
    never acceptable; these defaults are generous for desk-scale inputs.
    """

    max_elements: int = 10_000
    max_rounds: int = 1_000


@dataclass(frozen=True)
class ClosureResult:
    """Outcome of closing a seed set under all defined compositions.

    ``status`` is ``"closed"`` when a fixed point was reached, or
    ``"budget_exhausted"`` with the partial carrier otherwise.  ``groupoid``
    is the restriction of the host to the carrier; ``objects`` maps ids back
    to black-box values when the host was a black-box groupoid.
    """

    status: str
    carrier: tuple[ElementId, ...]
    groupoid: FiniteGroupoid
    iterations: int
    budget: Budget
    objects: Mapping[ElementId, object] | None = None

    @property
    def closed(self) -> bool:
        return self.status == CLOSED


def _close_under_composition(compose, key, seeds, budget):
    """Fixed-point worklist shared by all closure entry points.

    Seeds are deduplicated by key and sorted; each round composes every pair
    with at least one operand discovered in the previous round (all pairs in
    round one).  A new element that would push the carrier past
    ``max_elements`` is dropped and the run reports exhaustion.
    """
    items: dict[ElementId, object] = {}
    for obj in sorted(seeds, key=key):
        items.setdefault(key(obj), obj)
    if len(items) > budget.max_elements:
        return BUDGET_EXHAUSTED, items, 0

    rounds = 0
    previous_new = list(items)
    while True:
        if rounds >= budget.max_rounds:
            return BUDGET_EXHAUSTED, items, rounds
        rounds += 1
        recent = set(previous_new)
        fresh: dict[ElementId, object] = {}
        exhausted = False
        snapshot = list(items.items())
        for xid, x in snapshot:
            for yid, y in snapshot:
                if rounds > 1 and xid not in recent and yid not in recent:
                    continue
                z = compose(x, y)
                if z is None:
                    continue
                zid = key(z)
                if zid in items or zid in fresh:
                    continue
                if len(items) + len(fresh) >= budget.max_elements:
                    exhausted = True
                    break
                fresh[zid] = z
            if exhausted:
                break
        if exhausted:
            items.update(fresh)
            return BUDGET_EXHAUSTED, items, rounds
        if not fresh:
            return CLOSED, items, rounds
        items.update(fresh)
        previous_new = list(fresh)


def generated_subgroupoid(
    groupoid: FiniteGroupoid | BlackBoxGroupoid,
    seeds: Iterable,
    budget: Budget = Budget(),
) -> ClosureResult:
    """Smallest composition-closed superset of ``seeds``, budget-guarded.

    For an explicit groupoid ``seeds`` are element ids; for a black-box one
    they are universe values.  Budget exhaustion is a structured outcome
    carrying the partial carrier, not an exception.
    """
    seeds = list(seeds)
    if not seeds:
        raise ValueError("seed set must be non-empty")
    if isinstance(groupoid, FiniteGroupoid):
        groupoid.require_all(seeds)
        status, items, rounds = _close_under_composition(
            lambda x, y: groupoid.table.get((x, y)), lambda e: e, seeds, budget
        )
        carrier = tuple(items)
        return ClosureResult(status, carrier, groupoid.restrict(carrier), rounds, budget)

    status, items, rounds = _close_under_composition(
        groupoid.compose, groupoid.key, seeds, budget
    )
    carrier = tuple(items)
    inside = set(carrier)
    table = {}
    for xid, x in items.items():
        for yid, y in items.items():
            z = groupoid.compose(x, y)
            if z is None:
                continue
            zid = groupoid.key(z)
            if zid in inside:
                table[(xid, yid)] = zid
    restricted = FiniteGroupoid(carrier, table)
    return ClosureResult(status, carrier, restricted, rounds, budget, dict(items))


def interval_products(
    groupoid: FiniteGroupoid, factors: Sequence[Iterable[ElementId]]
) -> dict[tuple[int, int], frozenset[ElementId]]:
    """Dynamic program over contiguous spans of ``factors``.

    ``dp[(i, j)]`` is the set of values reachable by composing one element
    from each factor of the span, over every way of grouping the span
    binarily.  Undefined groupings contribute nothing, so an all-undefined
    span yields the empty set.
    """
    spans = [frozenset(groupoid.require_all(s)) for s in factors]
    n = len(spans)
    if n == 0:
        raise ValueError("product needs at least one factor")
    dp: dict[tuple[int, int], frozenset[ElementId]] = {}
    for i, s in enumerate(spans):
        dp[(i, i)] = s
    table = groupoid.table
    for length in range(2, n + 1):
        for i in range(0, n - length + 1):
            j = i + length - 1
            acc = set()
            for k in range(i, j):
                left = dp[(i, k)]
                right = dp[(k + 1, j)]
                for y in left:
                    for z in right:
                        v = table.get((y, z))
                        if v is not None:
                            acc.add(v)
            dp[(i, j)] = frozenset(acc)
    return dp


def product_of_subsets(
    groupoid: FiniteGroupoid, factors: Sequence[Iterable[ElementId]]
) -> frozenset[ElementId]:
    """Set product of carrier subsets under all binary groupings.

    The empty set plays the role of a fully undefined product; definedness
    of an expression is exactly non-emptiness of its product.
    """
    dp = interval_products(groupoid, factors)
    return dp[(0, len(factors) - 1)]


def word_product(groupoid: FiniteGroupoid, word: Sequence[ElementId]) -> frozenset[ElementId]:
    """Product of a word of single elements (each factor a singleton)."""
    return product_of_subsets(groupoid, [{w} for w in word])


def irreducible_generating_set(
    groupoid: FiniteGroupoid,
    generators: Iterable[ElementId],
    budget: Budget = Budget(),
) -> tuple[ElementId, ...]:
    """Shrink ``generators`` to a subset that still generates the carrier but
    has no generating proper subset.

    Greedy removal in carrier order, so the result is deterministic; any
    irreducible subset would be acceptable.
    """
    seen = set(groupoid.require_all(generators))
    ordered = [e for e in groupoid.elements if e in seen]
    if not ordered:
        raise ValueError("generator set must be non-empty")

    def generates(candidate):
        result = generated_subgroupoid(groupoid, candidate, budget)
        return result.closed and set(result.carrier) == set(groupoid.elements)

    if not generates(ordered):
        raise NotGeneratingSetError(
            f"{tuple(ordered)!r} does not generate the carrier within budget"
        )
    current = list(ordered)
    for e in ordered:
        trial = [x for x in current if x != e]
        if trial and generates(trial):
            current = trial
    return tuple(current)


def null_extension(groupoid: FiniteGroupoid) -> FiniteGroupoid:
    """Totalize by adjoining a fresh absorbing element.

    Every previously undefined composition, and every composition involving
    the new element, yields the new element.  The extension is associative
    exactly when the source is strongly associative, which the property
    checkers can confirm.
    """
    bottom = "⊥"
    while bottom in groupoid:
        bottom += "'"
    elements = groupoid.elements + (bottom,)
    table = {}
    for x in elements:
        for y in elements:
            table[(x, y)] = groupoid.table.get((x, y), bottom)
    return FiniteGroupoid(elements, table)


@dataclass(frozen=True)
class Homomorphism:
    """A total map between carriers, candidate structure-preserving."""

    source: FiniteGroupoid
    target: FiniteGroupoid
    mapping: Mapping[ElementId, ElementId]

    def __post_init__(self):
        mapping = dict(self.mapping)
        for e in self.source.elements:
            if e not in mapping:
                raise ValueError(f"mapping is not total: no image for {e!r}")
            self.target.require(mapping[e])
        object.__setattr__(self, "mapping", mapping)

    def __call__(self, element: ElementId) -> ElementId:
        return self.mapping[self.source.require(element)]


def check_homomorphism(h: Homomorphism) -> Verdict:
    """Does the map preserve definedness and compositions?

    Holds when for every defined source pair (x, y), the image pair is
    defined and f(x o y) = f(x) o f(y); on failure the witness is the first
    violating source pair in carrier order.
    """
    for x, y in h.source.defined_pairs():
        fx, fy = h(x), h(y)
        value = h.target.compose(fx, fy)
        if value is None:
            return Verdict(False, (x, y), f"({fx!r}, {fy!r}) undefined in target")
        if value != h(h.source.table[(x, y)]):
            return Verdict(False, (x, y), "images compose to a different value")
    return Verdict(True)


def image(h: Homomorphism) -> FiniteGroupoid:
    """The image groupoid: mapped carrier with the mapped domain."""
    verdict = check_homomorphism(h)
    if not verdict.holds:
        raise NotHomomorphismError(
            f"not a homomorphism: witness {verdict.witness!r} ({verdict.detail})",
            verdict.witness,
        )
    carrier = []
    for e in h.source.elements:
        fe = h(e)
        if fe not in carrier:
            carrier.append(fe)
    table = {}
    for x, y in h.source.defined_pairs():
        fx, fy = h(x), h(y)
        table[(fx, fy)] = h.target.table[(fx, fy)]
    return FiniteGroupoid(tuple(carrier), table)
