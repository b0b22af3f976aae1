"""Mutual-absorption classes and the commutative quotient of a groupoid.

Two elements are mutually absorbing when each survives a sandwich by the
other: the word products p q p and q p q come out as exactly {p} and {q}.
Under word idempotence (each word's doubled product equals its product,
checked up to a bound) this relation is an equivalence compatible with
composition, so collapsing classes gives a well-defined quotient; when the
composition domain is symmetric the quotient is commutative.

Triple products are evaluated with set semantics and must be singletons:
requiring a single value surfaces hypothesis violations instead of silently
picking one grouping.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian

from .errors import (
    CongruenceError,
    HypothesesNotSatisfiedError,
    InternalInvariantError,
    WellDefinednessError,
)
from .groupoid import (
    ElementId,
    FiniteGroupoid,
    Homomorphism,
    Verdict,
    check_homomorphism,
    word_product,
)
from .properties import DEFAULT_WORD_BOUND, Property, check_property


@dataclass(frozen=True)
class CongruenceClasses:
    """A verified partition of the carrier into mutual-absorption classes.

    ``representatives[i]`` is the minimum-index member of ``classes[i]``;
    ``word_bound`` records up to which word length the underlying
    hypothesis was verified, since every guarantee here is relative to it.
    """

    classes: tuple[tuple[ElementId, ...], ...]
    representatives: tuple[ElementId, ...]
    word_bound: int

    def class_of(self, element: ElementId) -> tuple[ElementId, ...]:
        for cls in self.classes:
            if element in cls:
                return cls
        raise KeyError(element)

    def representative_of(self, element: ElementId) -> ElementId:
        for cls, rep in zip(self.classes, self.representatives):
            if element in cls:
                return rep
        raise KeyError(element)


@dataclass(frozen=True)
class QuotientGroupoid:
    groupoid: FiniteGroupoid
    projection: Homomorphism
    classes: CongruenceClasses


def mutually_absorbing(g: FiniteGroupoid, p: ElementId, q: ElementId) -> bool:
    """p q p collapses to exactly {p} and q p q to exactly {q}."""
    return (
        word_product(g, (p, q, p)) == frozenset({p})
        and word_product(g, (q, p, q)) == frozenset({q})
    )


def _require_word_idempotent(g: FiniteGroupoid, bound: int):
    verdict = check_property(g, Property.WORD_IDEMPOTENT, bound)
    if not verdict.holds:
        raise HypothesesNotSatisfiedError(
            f"word idempotence fails at bound {bound}: witness {verdict.witness!r}",
            (verdict,),
        )


def congruence_classes(
    g: FiniteGroupoid, nr_word_bound: int = DEFAULT_WORD_BOUND
) -> CongruenceClasses:
    """Partition the carrier by mutual absorption, verifying every law.

    Word idempotence up to the bound is a precondition.  Reflexivity,
    symmetry, transitivity and compatibility with composition are then
    checked exhaustively; a failure is reported as a structured violation
    (it signals the bound was too low for this input, not a bug here).
    """
    _require_word_idempotent(g, nr_word_bound)
    related = {
        (p, q)
        for p in g.elements
        for q in g.elements
        if mutually_absorbing(g, p, q)
    }
    for p in g.elements:
        if (p, p) not in related:
            raise CongruenceError("reflexivity", (p,))
    for p, q in related:
        if (q, p) not in related:
            raise CongruenceError("symmetry", (p, q))
    for p in g.elements:
        for q in g.elements:
            if (p, q) not in related:
                continue
            for r in g.elements:
                if (q, r) in related and (p, r) not in related:
                    raise CongruenceError("transitivity", (p, q, r))
    for (p, p2), (q, q2) in cartesian(sorted(related), sorted(related)):
        if (p, q) in g.table and (p2, q2) in g.table:
            if (g.table[(p, q)], g.table[(p2, q2)]) not in related:
                raise CongruenceError("compatibility", (p, p2, q, q2))

    classes = []
    assigned = set()
    for p in g.elements:
        if p in assigned:
            continue
        cls = tuple(q for q in g.elements if (p, q) in related)
        assigned.update(cls)
        classes.append(cls)
    representatives = tuple(cls[0] for cls in classes)
    return CongruenceClasses(tuple(classes), representatives, nr_word_bound)


def quotient(g: FiniteGroupoid, nr_word_bound: int = DEFAULT_WORD_BOUND) -> QuotientGroupoid:
    """Collapse each class to its representative and rebuild the table.

    Well-definedness is re-verified while building: if two members of the
    same class pair compose into different classes, that contradicts the
    congruence check and is a hard error.  When the source has a symmetric
    domain the quotient must come out commutative, and this is asserted.
    """
    classes = congruence_classes(g, nr_word_bound)
    rep = {e: classes.representative_of(e) for e in g.elements}
    carrier = tuple(r for r in g.elements if rep[r] == r)
    table: dict[tuple[ElementId, ElementId], ElementId] = {}
    origin: dict[tuple[ElementId, ElementId], tuple[ElementId, ElementId]] = {}
    for x, y in g.defined_pairs():
        key = (rep[x], rep[y])
        value = rep[g.table[(x, y)]]
        if key in table and table[key] != value:
            raise WellDefinednessError(
                "class composition depends on representatives",
                witness=(origin[key], (x, y)),
            )
        table.setdefault(key, value)
        origin.setdefault(key, (x, y))
    quotient_groupoid = FiniteGroupoid(carrier, table)
    projection = Homomorphism(g, quotient_groupoid, rep)
    verdict = check_homomorphism(projection)
    if not verdict.holds:  # pragma: no cover - guarded by the checks above
        raise InternalInvariantError(
            f"projection failed the homomorphism check: {verdict.witness!r}"
        )
    if check_property(g, Property.SYMMETRIC).holds:
        comm = check_property(quotient_groupoid, Property.COMMUTATIVE)
        if not comm.holds:
            raise InternalInvariantError(
                "quotient of a symmetric-domain groupoid must be commutative;"
                f" witness {comm.witness!r}"
            )
    return QuotientGroupoid(quotient_groupoid, projection, classes)


def quotient_idempotence_check(
    g: FiniteGroupoid, nr_word_bound: int = DEFAULT_WORD_BOUND
) -> Verdict:
    """Quotienting twice changes nothing.

    After one quotient every class must be a singleton, so the second
    quotient is the identity on representatives; the verdict carries the
    first non-singleton class otherwise.
    """
    first = quotient(g, nr_word_bound)
    second = quotient(first.groupoid, nr_word_bound)
    if second.groupoid == first.groupoid:
        return Verdict(True, detail="second quotient is the identity")
    offender = next(
        (cls for cls in second.classes.classes if len(cls) > 1), None
    )
    return Verdict(False, offender, "quotient carrier still collapses")


def class_semigroup_check(
    g: FiniteGroupoid,
    members: tuple[ElementId, ...],
    nr_word_bound: int = DEFAULT_WORD_BOUND,
) -> Verdict:
    """A mutual-absorption class must be a total associative sub-table in
    which every bounded word collapses to first-composed-with-last.
    """
    members = g.require_all(members)
    inside = set(members)
    for x in members:
        for y in members:
            v = g.table.get((x, y))
            if v is None:
                return Verdict(False, (x, y), "pair undefined inside the class")
            if v not in inside:
                return Verdict(False, (x, y), "composition escapes the class")
    for x in members:
        for y in members:
            for z in members:
                if g.table[(g.table[(x, y)], z)] != g.table[(x, g.table[(y, z)])]:
                    return Verdict(False, (x, y, z), "association fails in the class")
    for k in range(2, nr_word_bound + 1):
        for word in cartesian(members, repeat=k):
            expected = frozenset({g.table[(word[0], word[-1])]})
            if word_product(g, word) != expected:
                return Verdict(False, word, "word does not collapse to ends")
    return Verdict(True)
