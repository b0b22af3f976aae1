from __future__ import annotations

import pytest

from matchmerge import (
    DomainNotSymmetricError,
    FiniteGroupoid,
    builtin,
    clique_cover,
    connected_components,
    domain_graph,
    is_total,
    null_extension,
    to_dot,
)
from conftest import finite_fixture_suite


def symmetrized_p1() -> FiniteGroupoid:
    # add the reversed pairs with the same values; (a, c) stays undefined
    p1 = builtin("p1")
    table = dict(p1.table)
    table[("b", "a")] = "b"
    table[("c", "b")] = "c"
    return FiniteGroupoid(p1.elements, table)


def square_cycle() -> FiniteGroupoid:
    # 4-cycle of mutual edges: a-b, b-c, c-d, d-a, loops everywhere
    els = ("a", "b", "c", "d")
    table = {(e, e): e for e in els}
    for u, v in (("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")):
        table[(u, v)] = u
        table[(v, u)] = v
    return FiniteGroupoid(els, table)


# -- graph construction ------------------------------------------------------------


def test_edges_mirror_the_domain_exactly():
    for name, g in finite_fixture_suite().items():
        assert domain_graph(g).edges == frozenset(g.table), name


def test_p1_graph_edges(p1):
    dg = domain_graph(p1)
    assert dg.edges == {("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")}


def test_chain_graph_is_a_path():
    ch = builtin("chain", 5)
    dg = domain_graph(ch)
    assert dg.edges == {("a1", "a2"), ("a2", "a3"), ("a3", "a4")}


def test_total_groupoid_graph_is_full(max10):
    assert len(domain_graph(max10).edges) == 100


# -- connected components ----------------------------------------------------------


def test_two_disjoint_idempotents_have_two_components(twoblock):
    components = connected_components(domain_graph(twoblock))
    assert [c.nodes for c in components] == [("u",), ("v",)]


def test_p1_is_connected(p1):
    assert len(connected_components(domain_graph(p1))) == 1


def test_singleton_component(unit):
    components = connected_components(domain_graph(unit))
    assert len(components) == 1


def test_components_partition_and_never_compose_across():
    for name, g in finite_fixture_suite().items():
        components = connected_components(domain_graph(g))
        seen = [n for c in components for n in c.nodes]
        assert sorted(seen) == sorted(g.elements), name
        assert len(seen) == len(set(seen)), name
        for i, ci in enumerate(components):
            for j, cj in enumerate(components):
                if i == j:
                    continue
                for s in ci.nodes:
                    for t in cj.nodes:
                        assert (s, t) not in g.table, name


def test_component_subgroupoids_keep_internal_table(twoblock):
    components = connected_components(domain_graph(twoblock))
    assert components[0].groupoid.table == {("u", "u"): "u"}


# -- totality ------------------------------------------------------------------------


def test_null_extension_is_reported_total(p1):
    report = is_total(null_extension(p1))
    assert report.total and report.graph_complete and report.loops_complete


def test_symmetrized_p1_is_not_total():
    report = is_total(symmetrized_p1())
    assert not report.total
    assert report.missing == ("a", "c")
    assert not report.graph_complete


def test_singleton_with_loop_is_total(unit):
    assert is_total(unit).total


def test_totality_requires_symmetric_domain(p1):
    with pytest.raises(DomainNotSymmetricError):
        is_total(p1)


def test_totality_iff_complete_with_loops():
    missing_loop = FiniteGroupoid(
        ("a", "b"),
        {("a", "b"): "a", ("b", "a"): "b", ("a", "a"): "a"},
    )
    report = is_total(missing_loop)
    assert not report.total
    assert report.graph_complete
    assert not report.loops_complete
    for g in (builtin("maxnat", 5), null_extension(builtin("q2"))):
        report = is_total(g)
        assert report.total == (report.graph_complete and report.loops_complete)
        assert report.total


# -- clique covers ----------------------------------------------------------------------


def _assert_cover_invariants(g, cover):
    covered = cover.covered_nodes()
    assert covered == frozenset(g.elements)
    mutual = {
        frozenset((x, y))
        for (x, y) in g.table
        if x != y and (y, x) in g.table
    }
    in_cliques = {
        frozenset((a, b))
        for clique in cover.cliques
        for a in clique.nodes
        for b in clique.nodes
        if a != b
    }
    assert mutual <= in_cliques


def test_complete_symmetric_fixture_is_one_clique():
    mx = builtin("maxnat", 3)
    cover = clique_cover(domain_graph(mx))
    assert len(cover.cliques) == 1
    assert cover.cliques[0].nodes == ("0", "1", "2")
    assert cover.cliques[0].is_total


def test_symmetrized_p1_cover_is_two_overlapping_cliques():
    g = symmetrized_p1()
    cover = clique_cover(domain_graph(g))
    assert [c.nodes for c in cover.cliques] == [("a", "b"), ("b", "c")]
    _assert_cover_invariants(g, cover)
    assert all(c.is_total for c in cover.cliques)


def test_square_cycle_cover_catches_the_last_edge():
    g = square_cycle()
    cover = clique_cover(domain_graph(g))
    _assert_cover_invariants(g, cover)


def test_cover_invariants_on_all_fixtures():
    for name, g in finite_fixture_suite().items():
        cover = clique_cover(domain_graph(g))
        _assert_cover_invariants(g, cover)


def test_clique_restriction_flags_leaks():
    # u and v are mutually composable but compose out of the pair
    g = FiniteGroupoid(
        ("u", "v", "w"),
        {
            ("u", "u"): "u",
            ("v", "v"): "v",
            ("w", "w"): "w",
            ("u", "v"): "w",
            ("v", "u"): "w",
        },
    )
    cover = clique_cover(domain_graph(g))
    leaky = next(c for c in cover.cliques if set(c.nodes) == {"u", "v"})
    assert not leaky.is_total
    assert ("u", "v") in leaky.leaks


def test_chain_cover_is_singletons():
    # no mutual non-loop edges and no loops: every node its own clique
    ch = builtin("chain", 4)
    cover = clique_cover(domain_graph(ch))
    assert [c.nodes for c in cover.cliques] == [("a1",), ("a2",), ("a3",), ("a4",)]
    assert not any(c.is_total for c in cover.cliques)


# -- dot rendering -------------------------------------------------------------------------


def test_dot_output_for_p1(p1):
    text = to_dot(domain_graph(p1))
    assert "a -> b;" in text
    assert "b -> c;" in text
    assert text.startswith("digraph domain {")


def test_dot_output_no_edges():
    g = FiniteGroupoid(("x", "y"), {})
    text = to_dot(domain_graph(g))
    assert "x;" in text and "y;" in text and "->" not in text


def test_dot_output_quotes_awkward_names():
    g = FiniteGroupoid(("a b",), {("a b", "a b"): "a b"})
    text = to_dot(domain_graph(g))
    assert '"a b" -> "a b";' in text


def test_dot_output_deterministic(twoblock):
    dg = domain_graph(twoblock)
    assert to_dot(dg) == to_dot(dg)
