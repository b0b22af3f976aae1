"""Command-line interface.

Subcommands: check, closure, er, graph, quotient, order, fixtures.
Inputs are groupoid or records documents (paths, with or without the .json
suffix) or built-in fixture names like ``p1`` or ``chain:12``.  Output is
deterministic byte-for-byte for identical inputs and flags; ``--format
machine`` emits the same JSON document syntax the loaders accept.

Exit codes: 0 success, 1 structured domain outcomes (budget exhaustion,
unmet hypotheses), 2 malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import adapters, documents, domaingraph
from .errors import LoadError, MatchMergeError
from .groupoid import BlackBoxGroupoid, Budget, FiniteGroupoid
from .order import (
    OrderRelation,
    OrderVariant,
    check_order_axioms,
    full_elements,
    maximal_elements,
    natural_order,
    order_characterization,
    order_law_audit,
)
from .properties import Property, implication_audit, property_report
from .quotient import class_semigroup_check, quotient, quotient_idempotence_check
from .resolution import (
    BRUTEFORCE_CARRIER_GUARD,
    Instance,
    er_bruteforce,
    er_full,
    er_maximal,
    merge_closure,
    r_swoosh,
)


@dataclass
class CliInput:
    label: str
    groupoid: FiniteGroupoid | None = None
    order_pairs: tuple | None = None
    blackbox: BlackBoxGroupoid | None = None
    records: tuple | None = None

    def finite(self, budget: Budget) -> FiniteGroupoid:
        if self.groupoid is not None:
            return self.groupoid
        return adapters.materialize(self.blackbox, self.records, budget)


def _resolve_input(spec: str) -> CliInput:
    for candidate in (Path(spec), Path(spec + ".json")):
        if candidate.is_file():
            try:
                data = json.loads(candidate.read_text(encoding="utf-8"))
            except json.JSONDecodeError as exc:
                raise LoadError(candidate, exc.msg, exc.lineno, exc.colno) from exc
            except OSError as exc:
                raise LoadError(candidate, str(exc)) from exc
            if isinstance(data, dict) and "elements" in data:
                doc = documents.load_groupoid(candidate)
                return CliInput(str(candidate), doc.groupoid, doc.order_pairs)
            if isinstance(data, dict) and "records" in data:
                doc = documents.load_records(candidate)
                return CliInput(
                    str(candidate),
                    blackbox=adapters.record_groupoid(doc.key_attributes),
                    records=doc.records,
                )
            raise LoadError(candidate, "unrecognized document: expected 'elements' or 'records'")
    name, _, size = spec.partition(":")
    try:
        fixture = adapters.builtin(name, int(size) if size else None)
    except ValueError as exc:
        raise LoadError(spec, f"bad fixture size {size!r}") from exc
    except MatchMergeError:
        raise LoadError(spec, "no such file or fixture") from None
    return CliInput(f"builtin:{spec}", fixture)


def _parse_instance(arg: str | None, loaded: CliInput):
    """Instance members: a comma-separated id list, an instance document
    path, or (by default) everything in the input."""
    if arg is None:
        if loaded.records is not None:
            return list(loaded.records)
        return list(loaded.groupoid.elements)
    for candidate in (Path(arg), Path(arg + ".json")):
        if candidate.is_file():
            doc = documents.load_instance(candidate)
            if doc.records is not None:
                return list(doc.records)
            return list(doc.element_ids)
    ids = [part for part in arg.split(",") if part]
    if not ids:
        raise LoadError(arg, "empty instance")
    if loaded.records is not None:
        by_id = {r.canonical_id: r for r in loaded.records}
        missing = [i for i in ids if i not in by_id]
        if missing:
            raise LoadError(arg, f"instance ids not among the input records: {missing}")
        return [by_id[i] for i in ids]
    unknown = [i for i in ids if i not in loaded.groupoid]
    if unknown:
        raise LoadError(arg, f"instance ids outside the carrier: {unknown}")
    return ids


def _target(loaded: CliInput):
    return loaded.blackbox if loaded.blackbox is not None else loaded.groupoid


def _fmt_witness(witness) -> str:
    if witness is None:
        return "-"
    return "(" + ", ".join(str(w) for w in witness) + ")"


def _yesno(flag: bool) -> str:
    return "yes" if flag else "no"


def _emit(lines) -> None:
    sys.stdout.write("\n".join(lines) + "\n")


def _emit_json(payload) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


# -- check -------------------------------------------------------------------


def _cmd_check(args) -> int:
    loaded = _resolve_input(args.input)
    g = loaded.finite(_budget(args))
    report = property_report(g, args.nr_bound)
    violations = implication_audit(g, report)
    if args.format == "machine":
        _emit_json(
            {
                "input": loaded.label,
                "elements": len(g),
                "properties": [
                    {
                        "property": str(p),
                        "holds": v.holds,
                        "witness": list(v.witness) if v.witness else None,
                        "universe": v.checked_universe,
                    }
                    for p, v in ((p, report.verdicts[p]) for p in Property)
                ],
                "is_icar": report.is_icar,
                "is_partial_semigroup_ca": report.is_partial_semigroup_ca,
                "implication_violations": violations,
            }
        )
        return 1 if violations else 0
    lines = [f"input: {loaded.label} ({len(g)} elements, {len(g.table)} compositions)"]
    lines.append(f"{'property':<9} {'holds':<6} {'witness':<18} universe")
    for p in Property:
        v = report.verdicts[p]
        lines.append(
            f"{str(p):<9} {_yesno(v.holds):<6} {_fmt_witness(v.witness):<18} {v.checked_universe}"
        )
    lines.append(f"ICAR (I, SC, A, R): {_yesno(report.is_icar)}")
    lines.append(f"partial semigroup (CA): {_yesno(report.is_partial_semigroup_ca)}")
    if violations:
        lines.append("implication audit: CHECKER BUG, violated: " + "; ".join(violations))
    else:
        lines.append("implication audit: ok")
    _emit(lines)
    return 1 if violations else 0


# -- closure -----------------------------------------------------------------


def _cmd_closure(args) -> int:
    loaded = _resolve_input(args.input)
    members = _parse_instance(args.instance, loaded)
    result = merge_closure(_target(loaded), members, _budget(args))
    if args.format == "machine":
        _emit_json(
            {
                "input": loaded.label,
                "status": result.status,
                "iterations": result.iterations,
                "budget": {
                    "max_elements": result.budget.max_elements,
                    "max_rounds": result.budget.max_rounds,
                },
                "carrier": sorted(result.carrier),
            }
        )
        return 0 if result.closed else 1
    lines = [
        f"input: {loaded.label}",
        f"status: {result.status}",
        f"carrier: {len(result.carrier)} elements",
        f"iterations: {result.iterations}",
        f"budget: max_elements={result.budget.max_elements} max_rounds={result.budget.max_rounds}",
        "elements:",
    ]
    lines.extend(f"  {e}" for e in sorted(result.carrier))
    _emit(lines)
    return 0 if result.closed else 1


# -- er ----------------------------------------------------------------------


def _cmd_er(args) -> int:
    loaded = _resolve_input(args.input)
    budget = _budget(args)
    members = _parse_instance(args.instance, loaded)
    target = _target(loaded)
    instance = Instance.over(target, members)
    closure = merge_closure(target, instance, budget)
    trail = []
    if not closure.closed:
        _emit(
            [
                f"input: {loaded.label}",
                f"closure: {closure.status} after {closure.iterations} iterations"
                f" ({len(closure.carrier)} elements)",
            ]
        )
        return 1

    method = args.method
    note = ""
    if method == "auto":
        report = property_report(closure.groupoid)
        if report.is_icar:
            method, note = "rswoosh", "ICAR verified"
        elif report.holds(Property.IDEMPOTENT) and report.holds(Property.CATENARY_ASSOCIATIVE):
            method, note = "maximal", "I and CA verified"
        elif len(closure.carrier) <= BRUTEFORCE_CARRIER_GUARD:
            method, note = "bruteforce", f"carrier <= {BRUTEFORCE_CARRIER_GUARD}"
        else:
            method, note = "full", "no hypotheses verified"
        trail.append(f"{note} -> {method}")

    if method == "rswoosh":
        swoosh_target = loaded.blackbox if loaded.blackbox is not None else closure.groupoid
        result = r_swoosh(swoosh_target, instance, budget)
    elif method == "maximal":
        result = er_maximal(closure)
    elif method == "bruteforce":
        result = er_bruteforce(closure)
    else:
        result = er_full(closure)

    if args.format == "machine":
        _emit_json(
            {
                "input": loaded.label,
                "closure": {"status": closure.status, "carrier": sorted(closure.carrier)},
                "decision_trail": trail,
                "method": result.method,
                "note": note,
                "resolved": list(result.resolved),
                "certificate": result.certificate,
            }
        )
        return 0
    lines = [f"input: {loaded.label}"]
    lines.append(f"closure: {closure.status}, {len(closure.carrier)} elements")
    lines.extend(f"decision: {t}" for t in trail)
    lines.append(f"method: {result.method}" + (f" ({note})" if note else ""))
    lines.append(f"resolved ({len(result.resolved)}):")
    lines.extend(f"  {e}" for e in result.resolved)
    lines.append(f"certificate: {result.certificate}")
    _emit(lines)
    return 0


# -- graph -------------------------------------------------------------------


def _cmd_graph(args) -> int:
    loaded = _resolve_input(args.input)
    g = loaded.finite(_budget(args))
    dg = domaingraph.domain_graph(g)
    payload = {
        "input": loaded.label,
        "nodes": sorted(dg.nodes),
        "edges": sorted([p, q] for p, q in dg.edges),
    }
    lines = [
        f"input: {loaded.label}",
        f"nodes: {len(dg.nodes)}, edges: {len(dg.edges)}",
    ]
    try:
        totality = domaingraph.is_total(g)
        payload["total"] = totality.total
        lines.append(
            f"total: {_yesno(totality.total)}"
            + (f" (missing {_fmt_witness(totality.missing)})" if totality.missing else "")
        )
    except MatchMergeError:
        payload["total"] = None
        lines.append("total: n/a (domain not symmetric)")
    if args.components:
        components = domaingraph.connected_components(dg)
        payload["components"] = [sorted(c.nodes) for c in components]
        lines.append(f"components ({len(components)}):")
        lines.extend("  [" + ", ".join(sorted(c.nodes)) + "]" for c in components)
    if args.clique_cover:
        cover = domaingraph.clique_cover(dg)
        payload["cliques"] = [
            {"nodes": sorted(c.nodes), "total": c.is_total, "leaks": sorted(map(list, c.leaks))}
            for c in cover.cliques
        ]
        lines.append(f"cliques ({len(cover.cliques)}):")
        lines.extend(
            "  [" + ", ".join(c.nodes) + f"] total={_yesno(c.is_total)}"
            + (f" leaks={len(c.leaks)}" if c.leaks else "")
            for c in cover.cliques
        )
    if args.dot:
        Path(args.dot).write_text(domaingraph.to_dot(dg), encoding="utf-8")
        lines.append(f"dot written: {args.dot}")
        payload["dot"] = args.dot
    if args.format == "machine":
        _emit_json(payload)
    else:
        _emit(lines)
    return 0


# -- quotient ----------------------------------------------------------------


def _cmd_quotient(args) -> int:
    loaded = _resolve_input(args.input)
    g = loaded.finite(_budget(args))
    q = quotient(g, args.nr_bound)
    stable = quotient_idempotence_check(g, args.nr_bound)
    class_checks = [
        class_semigroup_check(g, cls, args.nr_bound) for cls in q.classes.classes
    ]
    doc = documents.groupoid_to_document(q.groupoid)
    if args.format == "machine":
        _emit_json(
            {
                "input": loaded.label,
                "word_bound": q.classes.word_bound,
                "classes": [list(cls) for cls in q.classes.classes],
                "representatives": list(q.classes.representatives),
                "quotient": doc,
                "stable_under_requotient": stable.holds,
                "classes_are_semigroups": all(v.holds for v in class_checks),
            }
        )
        return 0
    lines = [
        f"input: {loaded.label}",
        f"word bound: {q.classes.word_bound}",
        f"classes ({len(q.classes.classes)}):",
    ]
    for cls, rep in zip(q.classes.classes, q.classes.representatives):
        check = class_semigroup_check(g, cls, args.nr_bound)
        lines.append(
            "  [" + ", ".join(cls) + f"] -> {rep} (semigroup: {_yesno(check.holds)})"
        )
    lines.append(f"stable under re-quotient: {_yesno(stable.holds)}")
    lines.append("quotient groupoid document:")
    lines.append(json.dumps(doc, indent=2))
    _emit(lines)
    return 0


# -- order -------------------------------------------------------------------


def _order_section(g, variant: OrderVariant):
    rel = natural_order(g, variant)
    audit = order_law_audit(rel)
    lines = [f"natural {variant.value}: {len(rel.pairs)} pairs"]
    lines.extend(f"  {p} <= {q}" for p, q in rel.sorted_pairs())
    lines.append(
        "  laws:"
        f" reflexive={_yesno(audit.reflexive.holds)}"
        + ("" if audit.reflexive.holds else f" {_fmt_witness(audit.reflexive.witness)}")
        + f" antisymmetric={_yesno(audit.antisymmetric.holds)}"
        + ("" if audit.antisymmetric.holds else f" {_fmt_witness(audit.antisymmetric.witness)}")
        + f" transitive={_yesno(audit.transitive.holds)}"
        + ("" if audit.transitive.holds else f" {_fmt_witness(audit.transitive.witness)}")
    )
    lines.append("  maximal: [" + ", ".join(maximal_elements(g, variant)) + "]")
    payload = {
        "pairs": [[p, q] for p, q in rel.sorted_pairs()],
        "reflexive": audit.reflexive.holds,
        "antisymmetric": audit.antisymmetric.holds,
        "transitive": audit.transitive.holds,
        "maximal": list(maximal_elements(g, variant)),
    }
    return lines, payload


def _cmd_order(args) -> int:
    loaded = _resolve_input(args.input)
    g = loaded.finite(_budget(args))
    variants = (
        list(OrderVariant) if args.variant == "all" else [OrderVariant(args.variant)]
    )
    lines = [f"input: {loaded.label}"]
    payload = {"input": loaded.label, "natural": {}}
    for variant in variants:
        section_lines, section_payload = _order_section(g, variant)
        lines.extend(section_lines)
        payload["natural"][variant.value] = section_payload
    fulls = {v.value: list(full_elements(g, v)) for v in OrderVariant}
    payload["full"] = fulls
    lines.append(
        "full: left=[" + ", ".join(fulls["left"]) + "]"
        " right=[" + ", ".join(fulls["right"]) + "]"
        " both=[" + ", ".join(fulls["both"]) + "]"
    )
    if loaded.order_pairs is not None:
        rel = OrderRelation(g.elements, frozenset(loaded.order_pairs), "user")
        audit = order_law_audit(rel)
        lines.append(f"user order: {len(rel.pairs)} pairs")
        payload["user_order"] = {
            "pairs": [[p, q] for p, q in rel.sorted_pairs()],
            "is_partial_order": audit.is_partial_order,
        }
        if audit.is_partial_order:
            axioms = check_order_axioms(g, rel)
            lines.append(
                "  axioms:"
                f" lub={_yesno(axioms.lub.holds)}"
                f" left_compat={_yesno(axioms.left_compat.holds)}"
                f" right_compat={_yesno(axioms.right_compat.holds)}"
            )
            payload["user_order"]["axioms"] = {
                "lub": axioms.lub.holds,
                "left_compat": axioms.left_compat.holds,
                "right_compat": axioms.right_compat.holds,
            }
            if all((p, p) in g.table for p in g.elements):
                charac = order_characterization(g, rel)
                lines.append(
                    f"  characterization: axioms={_yesno(charac.axioms_hold)}"
                    f" algebra={_yesno(charac.algebra_holds)}"
                    f" consistent={_yesno(charac.holds)}"
                )
                payload["user_order"]["characterization"] = {
                    "axioms_hold": charac.axioms_hold,
                    "algebra_holds": charac.algebra_holds,
                    "consistent": charac.holds,
                }
        else:
            lines.append("  axioms: skipped (not a partial order)")
    if args.format == "machine":
        _emit_json(payload)
    else:
        _emit(lines)
    return 0


# -- fixtures ----------------------------------------------------------------


def _cmd_fixtures(args) -> int:
    if args.format == "machine":
        _emit_json(
            {
                name: {"description": desc, "default_size": size}
                for name, (desc, size) in sorted(adapters.BUILTINS.items())
            }
        )
        return 0
    lines = []
    for name, (desc, size) in sorted(adapters.BUILTINS.items()):
        sized = f" (sized, default {size})" if size is not None else ""
        lines.append(f"{name:<10} {desc}{sized}")
    _emit(lines)
    return 0


# -- wiring ------------------------------------------------------------------


def _budget(args) -> Budget:
    return Budget(args.budget_elements, args.budget_rounds)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="matchmerge",
        description="Audit match/merge systems modeled as partial groupoids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="groupoid/records document path or builtin fixture name")
    common.add_argument("--format", choices=("text", "machine"), default="text")
    common.add_argument("--budget-elements", type=int, default=Budget().max_elements)
    common.add_argument("--budget-rounds", type=int, default=Budget().max_rounds)

    p = sub.add_parser("check", parents=[common], help="property report and implication audit")
    p.add_argument("--nr-bound", type=int, default=3)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("closure", parents=[common], help="merge closure of an instance")
    p.add_argument("--instance", help="comma-separated ids, or an instance document path")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("er", parents=[common], help="entity resolution of an instance")
    p.add_argument("--instance", help="comma-separated ids, or an instance document path")
    p.add_argument(
        "--method",
        choices=("auto", "bruteforce", "full", "maximal", "rswoosh"),
        default="auto",
    )
    p.set_defaults(func=_cmd_er)

    p = sub.add_parser("graph", parents=[common], help="domain graph views")
    p.add_argument("--dot", help="write a dot rendering to this path")
    p.add_argument("--components", action="store_true")
    p.add_argument("--clique-cover", action="store_true")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("quotient", parents=[common], help="mutual-absorption quotient")
    p.add_argument("--nr-bound", type=int, default=3)
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser("order", parents=[common], help="natural orders, audits, maximal and full sets")
    p.add_argument("--variant", choices=("left", "right", "both", "all"), default="all")
    p.set_defaults(func=_cmd_order)

    p = sub.add_parser("fixtures", help="list builtin fixtures")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.set_defaults(func=_cmd_fixtures)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except LoadError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except MatchMergeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
